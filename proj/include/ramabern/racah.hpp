#pragma once

#include "ramabern/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ramabern {

/// The four parameters of the Racah family. lambda(x) = x(x+gamma+delta+1)
/// is the quadratic the polynomials live on.
struct RacahParams {
    Rat alpha;
    Rat beta;
    Rat gamma;
    Rat delta;

    /// gamma + delta + 1.
    Rat lambda_offset() const { return gamma + delta + Rat(1); }
    /// lambda(x) = x(x + gamma + delta + 1) as a polynomial in x.
    Poly lambda_poly() const;
    /// lambda at a rational point.
    Rat lambda_at(const Rat& x) const { return x * (x + lambda_offset()); }

    friend bool operator==(const RacahParams&, const RacahParams&) = default;
};

/// A Pochhammer factor in one of the hypergeometric denominators vanishes.
class InadmissibleParams : public std::domain_error {
public:
    InadmissibleParams(std::string factor, unsigned k, const std::string& message)
        : std::domain_error(message), factor_(std::move(factor)), k_(k) {}
    /// Which denominator Pochhammer is affected, e.g. "(alpha+1)_k".
    const std::string& factor() const { return factor_; }
    /// Smallest k at which it vanishes.
    unsigned k() const { return k_; }

private:
    std::string factor_;
    unsigned k_;
};

/// Rising factorial (x0)_k = x0 (x0+1) ... (x0+k-1); (x0)_0 = 1.
Rat pochhammer(const Rat& x0, unsigned k);
/// Rising factorial of a polynomial argument: prod_{j<k} (base + j).
Poly pochhammer(const Poly& base, unsigned k);

/// Verifies (alpha+1)_k, (beta+delta+1)_k, (gamma+1)_k are nonzero for
/// every k <= depth; throws InadmissibleParams naming the factor otherwise.
void check_admissible(const RacahParams& p, unsigned depth);

/// R_0..R_{size-1} as exact polynomials in the moment variable
/// y = lambda(x). Admissibility for the requested depth is checked at
/// construction.
class RacahFamily {
public:
    RacahFamily(RacahParams params, unsigned size);

    const RacahParams& params() const { return params_; }
    unsigned size() const { return static_cast<unsigned>(polys_.size()); }
    const Poly& poly(unsigned n) const { return polys_.at(n); }

private:
    RacahParams params_;
    std::vector<Poly> polys_;
};

/// R_n in the moment variable y.
Poly racah_poly(const RacahParams& p, unsigned n);

/// Leading y-coefficient of R_n:
/// (n+alpha+beta+1)_n / ((alpha+1)_n (beta+delta+1)_n (gamma+1)_n).
Rat racah_leading_coeff(const RacahParams& p, unsigned n);

/// R_n rescaled to leading coefficient 1. Throws std::domain_error when
/// the normalization factor (n+alpha+beta+1)_n vanishes.
Poly monic_racah(const RacahParams& p, unsigned n);

/// The defining hypergeometric sum as a degree-2n polynomial in x;
/// oracle for the y-form, related by racah_xform(x) = racah_poly(lambda(x)).
Poly racah_xform(const RacahParams& p, unsigned n);

/// 2F1(-n, b; c; 1) as the terminating sum. Throws std::domain_error when
/// (c)_k vanishes for some k <= n. Equals (c-b)_n / (c)_n.
Rat hyp2f1_terminating(unsigned n, const Rat& b, const Rat& c);

}  // namespace ramabern
