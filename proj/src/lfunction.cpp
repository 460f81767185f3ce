#include "ramabern/lfunction.hpp"

#include "ramabern/bernoulli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramabern {

namespace {

double poly_at(const Poly& p, double x) {
    double v = 0.0;
    for (int i = p.degree(); i >= 0; --i)
        v = v * x + p.coeff(static_cast<std::size_t>(i)).to_double();
    return v;
}

// base^e for positive real base: exp(e log base), real logarithm (no
// branch-cut choices since every base here is a positive real).
std::complex<double> cpow_pos(double base, std::complex<double> e) {
    return std::exp(e * std::log(base));
}

// Deterministic pairwise summation: slot k holds a partial sum of 2^k
// consecutive terms; adding a term cascades like a binary counter.
class PairwiseSum {
public:
    void add(std::complex<double> x) {
        for (std::size_t k = 0;; ++k) {
            if (k == slots_.size()) {
                slots_.push_back(x);
                used_.push_back(true);
                break;
            }
            if (!used_[k]) {
                slots_[k] = x;
                used_[k] = true;
                break;
            }
            x += slots_[k];
            used_[k] = false;
        }
    }
    std::complex<double> total() const {
        std::complex<double> t{0.0, 0.0};
        for (std::size_t k = 0; k < slots_.size(); ++k)
            if (used_[k]) t += slots_[k];
        return t;
    }

private:
    std::vector<std::complex<double>> slots_;
    std::vector<bool> used_;
};

// All real roots of p lie below the Cauchy bound 1 + max |c_i| / |c_d|, so
// checking p > 0 at integers 0..ceil(bound) certifies p(n) > 0 for every
// integer n >= 0 once the leading coefficient is positive.
void check_positive_at_integers(const Poly& p, const char* name) {
    if (p.is_zero() || p.leading().sign() <= 0)
        throw std::domain_error(std::string(name) +
                                " must have positive leading coefficient for the summation");
    double bound = 1.0;
    double lead = std::abs(p.leading().to_double());
    for (int i = 0; i < p.degree(); ++i)
        bound = std::max(bound,
                         1.0 + std::abs(p.coeff(static_cast<std::size_t>(i)).to_double()) / lead);
    long upper = static_cast<long>(std::ceil(bound));
    for (long n = 0; n <= upper; ++n)
        if (p(Rat(n)).sign() <= 0)
            throw std::domain_error(std::string(name) + " is not positive at n=" +
                                    std::to_string(n));
}

}  // namespace

Poly antidifference(const Poly& Pprime) {
    // Forward-difference (Newton) coefficients of Pprime at 0:
    // Pprime = sum_m diff[m] binom(x, m).
    int deg = Pprime.degree();
    if (deg < 0) return Poly(Rat(1));
    std::vector<Rat> table;
    table.reserve(static_cast<std::size_t>(deg) + 1);
    for (long n = 0; n <= deg; ++n) table.push_back(Pprime(Rat(n)));
    Poly a(Rat(1));
    for (int m = 0; m <= deg; ++m) {
        a += table[0] * binom_poly(0, static_cast<unsigned>(m) + 1);
        for (std::size_t i = 0; i + 1 < table.size(); ++i) table[i] = table[i + 1] - table[i];
        table.pop_back();
    }
    return a;
}

LSeriesSpec LSeriesSpec::from_poly(const Poly& p) {
    if (p.degree() < 1)
        throw std::domain_error("series base polynomial must have degree >= 1, got " + p.str());
    LSeriesSpec spec;
    spec.P = p;
    spec.Pprime = p.derivative();
    spec.d = static_cast<unsigned>(p.degree());
    spec.A = antidifference(spec.Pprime);
    return spec;
}

Rat l_value_neg(const LSeriesSpec& spec, unsigned n) {
    if (n == 0) throw std::domain_error("exact values exist at s = 1 - n for n >= 1");
    return -psi(spec.P.pow(n)) / Rat(static_cast<long>(n));
}

LEvalResult l_eval(const LSeriesSpec& spec, std::complex<double> s, double tol,
                   unsigned long max_terms) {
    const double sigma = s.real();
    const double edge = 1.0 - 1.0 / static_cast<double>(spec.d);
    if (s == std::complex<double>(1.0, 0.0))
        throw std::domain_error("s = 1 is the pole of the series");
    if (!(sigma > edge))
        throw std::domain_error("continuation formula requires Re(s) > 1 - 1/d = " +
                                std::to_string(edge));
    if (max_terms == 0) throw std::domain_error("max_terms must be positive");
    check_positive_at_integers(spec.P, "P");
    check_positive_at_integers(spec.A, "A");

    const std::complex<double> one_minus_s = 1.0 - s;
    const double abs_s = std::abs(s);
    // Tail exponent: |term_n| decays like n^{-a}, a = d(sigma-1) + 2 > 1.
    const double a = static_cast<double>(spec.d) * (sigma - 1.0) + 2.0;

    PairwiseSum acc;
    LEvalResult res;
    double a_cur = poly_at(spec.A, 0.0);
    for (unsigned long n = 0; n < max_terms; ++n) {
        const double dn = static_cast<double>(n);
        const double pn = poly_at(spec.P, dn);
        const double ppn = poly_at(spec.Pprime, dn);
        const double a_next = poly_at(spec.A, dn + 1.0);
        // term_n = integral over [A(n), A(n+1)] of (P(n)^{-s} - x^{-s}) dx,
        // in closed form.
        std::complex<double> term = ppn * cpow_pos(pn, -s) -
                                    (cpow_pos(a_next, one_minus_s) - cpow_pos(a_cur, one_minus_s)) /
                                        one_minus_s;
        acc.add(term);
        res.terms_used = n + 1;

        // |P(n)^{-s} - x^{-s}| <= |s| m^{-sigma-1} |P(n) - x| on the interval,
        // with m the smallest of the three abscissae; integrating gives
        // T(n) = |s| m^{-sigma-1} w P'(n), w = max |P(n) - endpoint|.
        // The remaining tail is estimated by comparison with (N/x)^a:
        // sum_{k>n} T(k) <~ T(n) (1 + n/(a-1)).
        const double m = std::min({a_cur, a_next, pn});
        const double w = std::max(std::abs(pn - a_cur), std::abs(a_next - pn));
        const double tn = abs_s * std::pow(m, -sigma - 1.0) * w * ppn;
        res.tail_estimate = tn * (1.0 + dn / (a - 1.0));
        if (res.tail_estimate <= tol) {
            res.converged = true;
            break;
        }
        a_cur = a_next;
    }
    res.value = 1.0 / (s - 1.0) + acc.total();
    return res;
}

LEvalResult l_direct(const LSeriesSpec& spec, std::complex<double> s, unsigned long terms) {
    const double sigma = s.real();
    if (!(sigma > 1.0))
        throw std::domain_error("direct summation requires Re(s) > 1");
    if (terms == 0) throw std::domain_error("term count must be positive");
    check_positive_at_integers(spec.P, "P");

    PairwiseSum acc;
    for (unsigned long n = 0; n < terms; ++n) {
        const double dn = static_cast<double>(n);
        acc.add(poly_at(spec.Pprime, dn) * cpow_pos(poly_at(spec.P, dn), -s));
    }
    LEvalResult res;
    res.value = acc.total();
    res.terms_used = terms;
    // Integral comparison: sum_{n>=N} P'(n) P(n)^{-sigma}
    // <= P'(N) P(N)^{-sigma} + P(N)^{1-sigma} / (sigma - 1).
    const double dn = static_cast<double>(terms);
    const double pn = poly_at(spec.P, dn);
    res.tail_estimate = poly_at(spec.Pprime, dn) * std::pow(pn, -sigma) +
                        std::pow(pn, 1.0 - sigma) / (sigma - 1.0);
    res.converged = true;
    return res;
}

}  // namespace ramabern
