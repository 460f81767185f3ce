#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramabern/racah.hpp"

#include <random>
#include <stdexcept>
#include <vector>

using namespace ramabern;

namespace {

const std::vector<RacahParams> kFamilies = {
    {Rat(0), Rat(-1, 2), Rat(0), Rat(0)},   // weight 1 family
    {Rat(-1, 2), Rat(1), Rat(0), Rat(0)},   // weight x(x+1)
    {Rat(0), Rat(1, 2), Rat(0), Rat(-2)},   // weight (x+1)(x+2)
    {Rat(-1, 2), Rat(2), Rat(1), Rat(-1)},  // weight ((x+1)(x+2))^2
    {Rat(2), Rat(1, 2), Rat(2), Rat(0)},    // weight ((x+1)(x+2))^3, shifted argument
};

}  // namespace

TEST_CASE("pochhammer on rationals") {
    CHECK(pochhammer(Rat(1, 2), 2) == Rat(3, 4));
    CHECK(pochhammer(Rat(7, 3), 0) == Rat(1));
    CHECK(pochhammer(Rat(-3), 5) == Rat(0));
    CHECK(pochhammer(Rat(2), 3) == Rat(24));
}

TEST_CASE("pochhammer on polynomials") {
    Poly x = Poly::variable();
    Poly minus_x{Rat(0), Rat(-1)};
    CHECK(pochhammer(minus_x, 1) == minus_x);
    CHECK(pochhammer(x + Poly(Rat(1)), 2) == Poly{Rat(2), Rat(3), Rat(1)});
    // (-x)_2 (x+1)_2 = x(x-1)(x+1)(x+2)
    CHECK(pochhammer(minus_x, 2) * pochhammer(x + Poly(Rat(1)), 2) ==
          x * (x - Poly(Rat(1))) * (x + Poly(Rat(1))) * (x + Poly(Rat(2))));
    CHECK(pochhammer(x, 0) == Poly(Rat(1)));
}

TEST_CASE("lambda data") {
    RacahParams t3{Rat(0), Rat(1, 2), Rat(0), Rat(-2)};
    CHECK(t3.lambda_offset() == Rat(-1));
    CHECK(t3.lambda_poly() == Poly{Rat(0), Rat(-1), Rat(1)});  // x(x-1)
    CHECK(t3.lambda_at(Rat(2)) == Rat(2));
    RacahParams t5{Rat(2), Rat(1, 2), Rat(2), Rat(0)};
    CHECK(t5.lambda_offset() == Rat(3));
    CHECK(t5.lambda_at(Rat(1)) == Rat(4));
}

TEST_CASE("R_0 is 1 and R_1 matches the hand value") {
    for (const auto& p : kFamilies) CHECK(racah_poly(p, 0) == Poly(Rat(1)));
    CHECK(racah_poly(kFamilies[0], 1) == Poly{Rat(1), Rat(3)});
}

TEST_CASE("degree and leading coefficient across the five families") {
    for (const auto& p : kFamilies) {
        RacahFamily fam(p, 21);
        for (unsigned n = 0; n <= 20; ++n) {
            CHECK(fam.poly(n).degree() == static_cast<int>(n));
            CHECK(fam.poly(n).leading() == racah_leading_coeff(p, n));
            CHECK(!fam.poly(n).leading().is_zero());
        }
    }
}

TEST_CASE("y-form agrees with the defining sum at integer points") {
    for (const auto& p : kFamilies) {
        for (unsigned n = 0; n <= 25; n += 5) {
            Poly yform = racah_poly(p, n);
            Poly xform = racah_xform(p, n);
            for (long x0 = 0; x0 <= 2 * static_cast<long>(n); ++x0) {
                Rat xv(x0);
                CHECK(yform(p.lambda_at(xv)) == xform(xv));
            }
        }
    }
}

TEST_CASE("monic normalization") {
    for (const auto& p : kFamilies) {
        for (unsigned n = 0; n <= 20; ++n) {
            Poly m = monic_racah(p, n);
            CHECK(m.leading() == Rat(1));
            CHECK(racah_leading_coeff(p, n) * m == racah_poly(p, n));
        }
    }
    CHECK(monic_racah(kFamilies[0], 1) == Poly{Rat(1, 3), Rat(1)});
}

TEST_CASE("monic normalization fails when the numerator factor vanishes") {
    // (n + alpha + beta + 1)_n hits zero: alpha + beta = -3, n = 2 gives (0)_2 = 0,
    // while every denominator Pochhammer stays clear of integers.
    RacahParams p{Rat(-1, 2), Rat(-5, 2), Rat(0), Rat(0)};
    CHECK(racah_leading_coeff(p, 2) == Rat(0));
    CHECK_THROWS_AS(monic_racah(p, 2), std::domain_error);
}

TEST_CASE("inadmissible parameters are rejected with the offending factor") {
    try {
        check_admissible(RacahParams{Rat(-3), Rat(0), Rat(0), Rat(0)}, 5);
        FAIL("expected InadmissibleParams");
    } catch (const InadmissibleParams& e) {
        CHECK(e.factor() == "(alpha+1)_k");
        CHECK(e.k() == 3);
    }
    try {
        check_admissible(RacahParams{Rat(0), Rat(-5, 2), Rat(0), Rat(1, 2)}, 5);
        FAIL("expected InadmissibleParams");
    } catch (const InadmissibleParams& e) {
        CHECK(e.factor() == "(beta+delta+1)_k");
        CHECK(e.k() == 2);
    }
    try {
        RacahFamily fam(RacahParams{Rat(0), Rat(0), Rat(-4), Rat(0)}, 10);
        FAIL("expected InadmissibleParams");
    } catch (const InadmissibleParams& e) {
        CHECK(e.factor() == "(gamma+1)_k");
        CHECK(e.k() == 4);
    }
    // shallow depth avoids the zero factor entirely
    CHECK_NOTHROW(check_admissible(RacahParams{Rat(-3), Rat(0), Rat(0), Rat(0)}, 2));
}

TEST_CASE("Chu-Vandermonde on random parameters") {
    std::mt19937_64 rng(314159);
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 12);
    std::uniform_int_distribution<unsigned> nn(0, 25);
    int done = 0;
    while (done < 50) {
        unsigned n = nn(rng);
        Rat b(num(rng), den(rng));
        Rat c(num(rng), den(rng));
        // keep (c)_k nonzero for k <= n
        bool admissible = true;
        for (unsigned k = 0; k < n; ++k)
            if ((c + Rat(static_cast<long>(k))).is_zero()) admissible = false;
        if (!admissible) continue;
        CHECK(hyp2f1_terminating(n, b, c) == pochhammer(c - b, n) / pochhammer(c, n));
        ++done;
    }
}

TEST_CASE("terminating 2F1 examples") {
    CHECK(hyp2f1_terminating(0, Rat(9, 7), Rat(1, 5)) == Rat(1));
    CHECK(hyp2f1_terminating(1, Rat(3, 2), Rat(3, 2)) == Rat(0));
    CHECK(hyp2f1_terminating(5, Rat(11, 2), Rat(3, 2)) == Rat(0));
    CHECK_THROWS_AS(hyp2f1_terminating(3, Rat(1), Rat(-2)), std::domain_error);
}

TEST_CASE("the four vanishing families behind the orthogonality proofs") {
    for (unsigned n = 1; n <= 25; ++n) {
        Rat nn(static_cast<long>(n));
        CHECK(hyp2f1_terminating(n, nn + Rat(1, 2), Rat(3, 2)) == Rat(0));
        CHECK(hyp2f1_terminating(n, nn + Rat(3, 2), Rat(5, 2)) == Rat(0));
        CHECK(hyp2f1_terminating(n, nn + Rat(5, 2), Rat(7, 2)) == Rat(0));
        CHECK(hyp2f1_terminating(n, nn + Rat(7, 2), Rat(9, 2)) == Rat(0));
    }
}
