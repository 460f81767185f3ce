#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ramabern/lfunction.hpp"
#include "ramabern/sequences.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

using namespace ramabern;

namespace {

constexpr double kPi = 3.14159265358979323846;

Poly quadratic_base() { return binom_poly(2, 2); }

}  // namespace

TEST_CASE("antidifference on hand examples") {
    // P = binom(x+2,2): P' = x + 3/2, A = (x^2 + 2x + 2)/2
    Poly a = antidifference(Poly{Rat(3, 2), Rat(1)});
    CHECK(a == Poly{Rat(1), Rat(1), Rat(1, 2)});
    CHECK(antidifference(Poly()) == Poly(Rat(1)));
    CHECK(antidifference(Poly(Rat(1))) == Poly{Rat(1), Rat(1)});
}

TEST_CASE("antidifference identity on random polynomials") {
    std::mt19937_64 rng(271828);
    std::uniform_int_distribution<long> num(-60, 60);
    std::uniform_int_distribution<long> den(1, 25);
    std::uniform_int_distribution<int> deg(0, 5);
    for (int i = 0; i < 20; ++i) {
        std::vector<Rat> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : c) x = Rat(num(rng), den(rng));
        Poly pprime(std::move(c));
        Poly a = antidifference(pprime);
        CHECK(a(Rat(0)) == Rat(1));
        CHECK(a.shifted(Rat(1)) - a == pprime);
    }
}

TEST_CASE("spec construction") {
    LSeriesSpec spec = LSeriesSpec::from_poly(quadratic_base());
    CHECK(spec.d == 2);
    CHECK(spec.Pprime == Poly{Rat(3, 2), Rat(1)});
    CHECK(spec.A == Poly{Rat(1), Rat(1), Rat(1, 2)});
    CHECK_THROWS_AS(LSeriesSpec::from_poly(Poly(Rat(5))), std::domain_error);
}

TEST_CASE("exact values at nonpositive integers") {
    LSeriesSpec spec = LSeriesSpec::from_poly(quadratic_base());
    CHECK(l_value_neg(spec, 1) == Rat(-1, 3));
    CHECK(l_value_neg(spec, 2) == Rat(-1, 60));
    CHECK(l_value_neg(spec, 6) == Rat(-191, 180180));
    CHECK_THROWS_AS(l_value_neg(spec, 0), std::domain_error);
}

TEST_CASE("exact values cross-computed from the sequence module") {
    LSeriesSpec spec = LSeriesSpec::from_poly(quadratic_base());
    for (unsigned n = 1; n <= 30; ++n)
        CHECK(l_value_neg(spec, n) ==
              -r_value(RSeqKind::Plus, n) / Rat(static_cast<long>(n)));
}

TEST_CASE("degree-1 case reproduces classical zeta values") {
    LSeriesSpec zeta = LSeriesSpec::from_poly(Poly{Rat(1), Rat(1)});
    auto z2 = l_eval(zeta, {2.0, 0.0}, 1e-10, 10000000);
    CHECK(z2.converged);
    CHECK(std::abs(z2.value.real() - kPi * kPi / 6.0) < 1e-8);
    CHECK(std::abs(z2.value.imag()) < 1e-12);
    auto z4 = l_eval(zeta, {4.0, 0.0}, 1e-12, 10000000);
    CHECK(std::abs(z4.value.real() - kPi * kPi * kPi * kPi / 90.0) < 1e-10);
}

TEST_CASE("continuation agrees with direct summation") {
    LSeriesSpec spec = LSeriesSpec::from_poly(quadratic_base());
    for (auto s : {std::complex<double>{2.0, 0.0},
                   std::complex<double>{3.0, 0.0},
                   std::complex<double>{2.0, 1.0},
                   std::complex<double>{1.5, 0.0}}) {
        CAPTURE(s.real());
        CAPTURE(s.imag());
        auto e = l_eval(spec, s, 1e-11, 10000000);
        auto d = l_direct(spec, s, 1000000);
        CHECK(e.converged);
        CHECK(std::abs(e.value - d.value) <= e.tail_estimate + d.tail_estimate + 1e-9);
    }
}

TEST_CASE("the closed form of the telescoping case") {
    // sum (n+3/2)/binom(n+2,2)^2 = 2 sum (1/(n+1)^2 - 1/(n+2)^2) = 2
    LSeriesSpec spec = LSeriesSpec::from_poly(quadratic_base());
    auto e = l_eval(spec, {2.0, 0.0}, 1e-11, 10000000);
    CHECK(std::abs(e.value.real() - 2.0) < 1e-9);
}

TEST_CASE("pole behavior: (s-1) L(s) approaches 1") {
    LSeriesSpec spec = LSeriesSpec::from_poly(quadratic_base());
    double prev_gap = 1.0;
    for (int k = 2; k <= 4; ++k) {
        double eps = std::pow(10.0, -k);
        auto e = l_eval(spec, {1.0 + eps, 0.0}, 1e-6, 4000000);
        double gap = std::abs(eps * e.value.real() - 1.0);
        CHECK(gap < 10.0 * eps);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
}

TEST_CASE("domain rejections") {
    LSeriesSpec spec = LSeriesSpec::from_poly(quadratic_base());
    CHECK_THROWS_AS(l_eval(spec, {1.0, 0.0}, 1e-8, 1000), std::domain_error);
    CHECK_THROWS_AS(l_eval(spec, {0.5, 0.0}, 1e-8, 1000), std::domain_error);  // edge: 1 - 1/2
    CHECK_THROWS_AS(l_eval(spec, {0.2, 3.0}, 1e-8, 1000), std::domain_error);
    CHECK_THROWS_AS(l_direct(spec, {1.0, 0.0}, 1000), std::domain_error);
    CHECK_THROWS_AS(l_direct(spec, {0.99, 0.0}, 1000), std::domain_error);
    // P with a root at a nonnegative integer is unusable for the summation
    LSeriesSpec bad = LSeriesSpec::from_poly(Poly{Rat(0), Rat(1)});  // P = x, P(0) = 0
    CHECK_THROWS_AS(l_eval(bad, {2.0, 0.0}, 1e-8, 1000), std::domain_error);
    CHECK_THROWS_AS(l_direct(bad, {2.0, 0.0}, 1000), std::domain_error);
}

TEST_CASE("convergence edge just inside the half-plane") {
    // d = 2 allows sigma slightly above 1/2 where the direct series diverges
    LSeriesSpec spec = LSeriesSpec::from_poly(quadratic_base());
    auto e = l_eval(spec, {0.75, 0.0}, 1e-2, 1000000);
    CHECK(e.converged);
    CHECK(std::isfinite(e.value.real()));
    CHECK(std::isfinite(e.value.imag()));
}

TEST_CASE("tolerance not reached is reported, not thrown") {
    LSeriesSpec spec = LSeriesSpec::from_poly(quadratic_base());
    auto e = l_eval(spec, {1.5, 0.0}, 1e-14, 50);
    CHECK(!e.converged);
    CHECK(e.terms_used == 50);
    CHECK(e.tail_estimate > 1e-14);
}

TEST_CASE("single-term direct sum") {
    LSeriesSpec spec = LSeriesSpec::from_poly(quadratic_base());
    auto d = l_direct(spec, {2.0, 0.0}, 1);
    CHECK(d.value.real() == doctest::Approx(1.5).epsilon(1e-12));  // P'(0)/P(0)^2 = 3/2
}

TEST_CASE("deterministic summation") {
    LSeriesSpec spec = LSeriesSpec::from_poly(quadratic_base());
    auto a = l_direct(spec, {2.0, 1.0}, 250000);
    auto b = l_direct(spec, {2.0, 1.0}, 250000);
    CHECK(a.value.real() == b.value.real());
    CHECK(a.value.imag() == b.value.imag());
}
