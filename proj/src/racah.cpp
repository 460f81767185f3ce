#include "ramabern/racah.hpp"

#include <utility>

namespace ramabern {

namespace {

// Each denominator Pochhammer (x0+1)_k gains the factor x0+k at step k.
// Returns the value of that factor so callers can advance coefficients
// incrementally after admissibility has been established.
void require_nonzero(const Rat& factor, const char* name, unsigned k, const RacahParams& p) {
    if (!factor.is_zero()) return;
    std::string msg = "inadmissible Racah parameters (alpha=" + p.alpha.str() +
                      ", beta=" + p.beta.str() + ", gamma=" + p.gamma.str() +
                      ", delta=" + p.delta.str() + "): " + name + " vanishes at k=" +
                      std::to_string(k);
    throw InadmissibleParams(name, k, msg);
}

}  // namespace

Poly RacahParams::lambda_poly() const {
    return Poly{Rat(0), lambda_offset(), Rat(1)};
}

Rat pochhammer(const Rat& x0, unsigned k) {
    Rat r(1);
    for (unsigned j = 0; j < k; ++j) r *= x0 + Rat(static_cast<long>(j));
    return r;
}

Poly pochhammer(const Poly& base, unsigned k) {
    Poly r(Rat(1));
    for (unsigned j = 0; j < k; ++j) r = r * (base + Poly(Rat(static_cast<long>(j))));
    return r;
}

void check_admissible(const RacahParams& p, unsigned depth) {
    for (unsigned k = 1; k <= depth; ++k) {
        Rat j(static_cast<long>(k));
        require_nonzero(p.alpha + j, "(alpha+1)_k", k, p);
        require_nonzero(p.beta + p.delta + j, "(beta+delta+1)_k", k, p);
        require_nonzero(p.gamma + j, "(gamma+1)_k", k, p);
    }
}

RacahFamily::RacahFamily(RacahParams params, unsigned size) : params_(std::move(params)) {
    if (size == 0) return;
    unsigned nmax = size - 1;
    check_admissible(params_, nmax);

    const Rat c = params_.lambda_offset();

    // (-x)_k (x+c)_k = prod_{t<k} (t-x)(x+c+t) = prod_{t<k} (lambda(t) - lambda(x)),
    // since (t-x)(x+c+t) = t(t+c) - x(x+c). This turns the defining sum over x
    // into an exact polynomial in y = lambda(x): basis[k](y) = prod_{t<k} (lambda(t) - y).
    std::vector<Poly> basis;
    basis.reserve(nmax + 1);
    basis.emplace_back(Rat(1));
    for (unsigned k = 1; k <= nmax; ++k) {
        Rat t(static_cast<long>(k - 1));
        basis.push_back(basis.back() * Poly{t * (t + c), Rat(-1)});
    }

    polys_.reserve(size);
    for (unsigned n = 0; n <= nmax; ++n) {
        Poly r(Rat(1));  // k = 0 term
        Rat coef(1);
        for (unsigned k = 1; k <= n; ++k) {
            Rat j(static_cast<long>(k));
            Rat num = (Rat(static_cast<long>(n) * -1) + j - Rat(1)) *
                      (Rat(static_cast<long>(n)) + params_.alpha + params_.beta + j);
            Rat den = (params_.alpha + j) * (params_.beta + params_.delta + j) *
                      (params_.gamma + j) * j;
            coef = coef * num / den;
            r = r + coef * basis[k];
        }
        polys_.push_back(std::move(r));
    }
}

Poly racah_poly(const RacahParams& p, unsigned n) {
    return RacahFamily(p, n + 1).poly(n);
}

Rat racah_leading_coeff(const RacahParams& p, unsigned n) {
    check_admissible(p, n);
    Rat num = pochhammer(Rat(static_cast<long>(n)) + p.alpha + p.beta + Rat(1), n);
    Rat den = pochhammer(p.alpha + Rat(1), n) * pochhammer(p.beta + p.delta + Rat(1), n) *
              pochhammer(p.gamma + Rat(1), n);
    return num / den;
}

Poly monic_racah(const RacahParams& p, unsigned n) {
    Rat lead = racah_leading_coeff(p, n);
    if (lead.is_zero())
        throw std::domain_error("cannot normalize R_" + std::to_string(n) +
                                ": (n+alpha+beta+1)_n vanishes");
    return (Rat(1) / lead) * racah_poly(p, n);
}

Poly racah_xform(const RacahParams& p, unsigned n) {
    check_admissible(p, n);
    const Rat c = p.lambda_offset();
    Poly sum(Rat(1));
    Poly prod(Rat(1));  // (-x)_k (x+c)_k, extended factor by factor
    Rat coef(1);
    for (unsigned k = 1; k <= n; ++k) {
        Rat j(static_cast<long>(k));
        Rat t = j - Rat(1);
        prod = prod * Poly{t, Rat(-1)} * Poly{c + t, Rat(1)};
        Rat num = (Rat(static_cast<long>(n)) * Rat(-1) + t) *
                  (Rat(static_cast<long>(n)) + p.alpha + p.beta + j);
        Rat den = (p.alpha + j) * (p.beta + p.delta + j) * (p.gamma + j) * j;
        coef = coef * num / den;
        sum = sum + coef * prod;
    }
    return sum;
}

Rat hyp2f1_terminating(unsigned n, const Rat& b, const Rat& c) {
    Rat sum(1);
    Rat term(1);
    for (unsigned k = 1; k <= n; ++k) {
        Rat j(static_cast<long>(k));
        Rat cfac = c + j - Rat(1);
        if (cfac.is_zero())
            throw std::domain_error("2F1 denominator (c)_k vanishes at k=" + std::to_string(k) +
                                    " for c=" + c.str());
        term = term * (Rat(static_cast<long>(n)) * Rat(-1) + j - Rat(1)) * (b + j - Rat(1)) /
               (cfac * j);
        sum += term;
    }
    return sum;
}

}  // namespace ramabern
