#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramabern/catalog.hpp"
#include "ramabern/moments.hpp"

#include <stdexcept>

using namespace ramabern;

TEST_CASE("lambda_apply is the moment dot product") {
    MomentSeq mu{Rat(1), Rat(-1, 3), Rat(2, 15)};
    CHECK(lambda_apply(mu, Poly(Rat(1))) == Rat(1));
    CHECK(lambda_apply(mu, Poly{Rat(0), Rat(1)}) == Rat(-1, 3));
    CHECK(lambda_apply(mu, Poly{Rat(1), Rat(3)}) == Rat(0));  // Lambda(R_1) = 0
    CHECK(lambda_apply(mu, Poly()) == Rat(0));
    CHECK_THROWS_AS(lambda_apply(mu, Poly{Rat(0), Rat(0), Rat(0), Rat(1)}),
                    std::invalid_argument);
}

TEST_CASE("favard solve on the weight-1 family") {
    RacahParams p{Rat(0), Rat(-1, 2), Rat(0), Rat(0)};
    auto mu = favard_moments(p, Rat(0), 4);
    REQUIRE(mu.size() == 4);
    CHECK(mu[0] == Rat(1));
    CHECK(mu[1] == Rat(-1, 3));
    CHECK(mu[2] == Rat(2, 15));
    CHECK(mu[3] == Rat(-8, 105));
    CHECK(favard_moments(p, Rat(0), 1) == MomentSeq{Rat(1)});
    CHECK(favard_moments(p, Rat(0), 0).empty());
}

TEST_CASE("favard moments annihilate the shifted family") {
    RacahParams p{Rat(2), Rat(1, 2), Rat(2), Rat(0)};
    Rat shift(-2);
    auto mu = favard_moments(p, shift, 12);
    RacahFamily fam(p, 12);
    for (unsigned n = 1; n < 12; ++n)
        CHECK(lambda_apply(mu, fam.poly(n).shifted(shift)) == Rat(0));
    CHECK(lambda_apply(mu, fam.poly(0)) == Rat(1));
}

TEST_CASE("psi-side moments") {
    Poly xx1{Rat(0), Rat(1), Rat(1)};
    auto mu = psi_moments(Poly(Rat(1)), xx1, Rat(1), 4);
    CHECK(mu == MomentSeq{Rat(1), Rat(-1, 3), Rat(2, 15), Rat(-8, 105)});
    auto mu2 = psi_moments(xx1, xx1, Rat(-1, 3), 3);
    CHECK(mu2[0] == Rat(1));
    Poly x1x2{Rat(2), Rat(3), Rat(1)};
    CHECK(psi_moments(x1x2, x1x2, Rat(2, 3), 1) == MomentSeq{Rat(1)});
    CHECK_THROWS_AS(psi_moments(xx1, xx1, Rat(0), 3), std::domain_error);
}

TEST_CASE("all five statements verify to depth 20") {
    for (const auto& e : catalog()) {
        CAPTURE(e.id);
        TheoremReport rep = verify_theorem(e.spec, 20);
        CHECK(rep.ok());
        CHECK(rep.normalizer_ok);
        CHECK(rep.moments_equal);
        CHECK(rep.residues_vanish);
        CHECK(rep.first_mismatch == -1);
        CHECK(rep.residues[0] == e.spec.normalizer);
    }
}

TEST_CASE("normalizers carry the documented values") {
    CHECK(catalog_entry("T1").spec.normalizer == Rat(1));
    CHECK(catalog_entry("T2").spec.normalizer == Rat(-1, 3));
    CHECK(catalog_entry("T3").spec.normalizer == Rat(2, 3));
    CHECK(catalog_entry("T4").spec.normalizer == Rat(2, 15));
    CHECK(catalog_entry("T5").spec.normalizer == Rat(-8, 105));
}

TEST_CASE("structural coherence: the substitution is the lambda quadratic") {
    // For each entry, subst(x) + shift = lambda(x + a) for a small integer a:
    // the argument R_n receives is the family's own quadratic, possibly at a
    // shifted evaluation point.
    const long offsets[] = {0, 0, 2, 1, 0};
    std::size_t i = 0;
    for (const auto& e : catalog()) {
        CAPTURE(e.id);
        Poly lhs = e.spec.subst + Poly(e.spec.shift);
        Poly lam = e.spec.params.lambda_poly();
        Poly x_plus_a{Rat(offsets[i]), Rat(1)};
        CHECK(lhs == lam.compose(x_plus_a));
        ++i;
    }
}

TEST_CASE("a perturbed parameter breaks verification") {
    TheoremSpec spec = catalog_entry("T1").spec;
    spec.params.delta = Rat(1, 7);
    TheoremReport rep = verify_theorem(spec, 5);
    CHECK(!rep.ok());
    CHECK(!rep.moments_equal);
    CHECK(rep.first_mismatch >= 0);
}

TEST_CASE("plus/minus interchange for the offset-2 and offset-3 statements") {
    for (const char* id : {"T4", "T5"}) {
        TheoremSpec spec = catalog_entry(id).spec;
        spec.target.kind =
            spec.target.kind == RSeqKind::Plus ? RSeqKind::Minus : RSeqKind::Plus;
        TheoremReport rep = verify_theorem(spec, 20);
        CAPTURE(id);
        CHECK(rep.ok());
    }
}

TEST_CASE("u-shift across distinguished values") {
    for (const char* u : {"0", "1", "1/2", "-1", "3/7"}) {
        UShiftReport rep = verify_u_shift(Rat::parse(u), 12);
        CAPTURE(u);
        CHECK(rep.ok());
        CHECK(rep.shift == -(Rat::parse(u) * (Rat(1) - Rat::parse(u))));
    }
    CHECK(verify_u_shift(Rat(1, 2), 10).shift == Rat(-1, 4));
}

TEST_CASE("jacobi coefficients from moments") {
    RacahParams p{Rat(0), Rat(-1, 2), Rat(0), Rat(0)};
    auto mu = favard_moments(p, Rat(0), 7);
    JacobiData jd = jacobi_from_moments(mu);
    REQUIRE(jd.b.size() == 3);
    REQUIRE(jd.lam.size() == 4);
    CHECK(jd.b[0] == mu[1]);  // b_0 = Lambda(y)
    CHECK(jd.lam[0] == Rat(0));
    CHECK(jd.lam[1] == Rat(1, 45));
    // p_1 = y - b_0 annihilated: Lambda(p_1) = mu_1 - b_0 mu_0 = 0 by construction;
    // quasi-definiteness: all lam nonzero beyond the placeholder
    for (std::size_t k = 1; k < jd.lam.size(); ++k) CHECK(!jd.lam[k].is_zero());
}

TEST_CASE("jacobi data sizes follow the moment count") {
    RacahParams p{Rat(0), Rat(-1, 2), Rat(0), Rat(0)};
    for (unsigned m : {1u, 2u, 3u, 4u, 5u, 8u}) {
        auto mu = favard_moments(p, Rat(0), m);
        JacobiData jd = jacobi_from_moments(mu);
        CHECK(jd.b.size() == m / 2);
        CHECK(jd.lam.size() == (m + 1) / 2);
    }
}

TEST_CASE("quasi-definiteness failure is reported") {
    MomentSeq degenerate{Rat(1), Rat(0), Rat(0)};  // Lambda(p_1^2) = mu_2 - mu_1^2 = 0
    CHECK_THROWS_AS(jacobi_from_moments(degenerate), std::domain_error);
    CHECK_THROWS_AS(jacobi_from_moments(MomentSeq{}), std::invalid_argument);
}

TEST_CASE("moment roundtrip through the recurrence, all five families") {
    for (const auto& e : catalog()) {
        CAPTURE(e.id);
        auto mu = favard_moments(e.spec.params, e.spec.shift, 15);
        JacobiData jd = jacobi_from_moments(mu);
        CHECK(moments_from_jacobi(jd, 15) == mu);
    }
}

TEST_CASE("insufficient recurrence data is rejected") {
    JacobiData jd{{Rat(-1, 3)}, {Rat(0), Rat(1, 45)}};
    CHECK(moments_from_jacobi(jd, 3).size() == 3);
    CHECK_THROWS_AS(moments_from_jacobi(jd, 5), std::invalid_argument);
}

TEST_CASE("hankel determinants") {
    RacahParams p{Rat(0), Rat(-1, 2), Rat(0), Rat(0)};
    auto mu = favard_moments(p, Rat(0), 5);
    CHECK(hankel_det(mu, 0) == Rat(1));
    CHECK(hankel_det(mu, 1) == Rat(1));
    CHECK(hankel_det(mu, 2) == Rat(1, 45));  // mu0 mu2 - mu1^2 = 2/15 - 1/9
    CHECK_THROWS_AS(hankel_det(mu, 4), std::invalid_argument);
    CHECK(hankel_det(MomentSeq{Rat(1), Rat(1), Rat(1)}, 2) == Rat(0));  // singular
}

TEST_CASE("hankel ratio equals the product of the lam coefficients") {
    for (const auto& e : catalog()) {
        CAPTURE(e.id);
        auto mu = favard_moments(e.spec.params, e.spec.shift, 25);
        JacobiData jd = jacobi_from_moments(mu);
        Rat lam_prod(1);
        for (unsigned n = 0; n <= 12; ++n) {
            if (n >= 1) lam_prod *= jd.lam[n];
            CHECK(hankel_det(mu, n + 1) / hankel_det(mu, n) == lam_prod);
        }
    }
}
