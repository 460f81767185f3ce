#pragma once

#include "ramabern/polynomial.hpp"

#include <complex>

namespace ramabern {

/// Data for the Dirichlet-type series sum_{n>=0} P'(n) / P(n)^s: the base
/// polynomial P, its derivative, the degree d, and the antidifference A
/// with A(0) = 1 and A(x+1) - A(x) = P'(x), used by the continuation
/// formula that extends convergence from Re(s) > 1 down to Re(s) > 1 - 1/d.
struct LSeriesSpec {
    Poly P;
    Poly Pprime;
    unsigned d = 0;
    Poly A;

    /// Builds Pprime/d/A from P. Requires deg P >= 1.
    static LSeriesSpec from_poly(const Poly& p);
};

/// The unique polynomial A with A(0) = 1 and A(x+1) - A(x) = Pprime(x),
/// assembled in the binomial basis: if Pprime = sum c_m binom(x, m) then
/// A = 1 + sum c_m binom(x, m+1).
Poly antidifference(const Poly& Pprime);

/// Exact value at s = 1 - n for n >= 1: -Psi(P^n) / n.
Rat l_value_neg(const LSeriesSpec& spec, unsigned n);

struct LEvalResult {
    std::complex<double> value{0.0, 0.0};
    /// Bound/estimate on the truncation error actually achieved.
    double tail_estimate = 0.0;
    unsigned long terms_used = 0;
    /// False when max_terms was hit before the tail estimate fell below tol.
    bool converged = false;
};

/// Evaluates L_P(s) = 1/(s-1) + sum_{n>=0} [ P'(n) P(n)^{-s}
/// - (A(n+1)^{1-s} - A(n)^{1-s})/(1-s) ] for Re(s) > 1 - 1/d, s != 1.
/// Terms are summed pairwise (binary-counter accumulator) so the result is
/// bit-reproducible for a fixed term count. Throws std::domain_error for
/// s in the non-convergent region, s = 1, or failed positivity of P/A at
/// nonnegative integers.
LEvalResult l_eval(const LSeriesSpec& spec, std::complex<double> s, double tol,
                   unsigned long max_terms);

/// Naive partial sum of P'(n)/P(n)^s with `terms` terms plus an
/// integral-comparison tail estimate. Requires Re(s) > 1. Oracle for l_eval.
LEvalResult l_direct(const LSeriesSpec& spec, std::complex<double> s, unsigned long terms);

}  // namespace ramabern
