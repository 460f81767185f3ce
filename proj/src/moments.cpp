#include "ramabern/moments.hpp"

#include "ramabern/bernoulli.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace ramabern {

Rat lambda_apply(const MomentSeq& mu, const Poly& p) {
    if (p.degree() >= 0 && static_cast<std::size_t>(p.degree()) >= mu.size())
        throw std::invalid_argument("lambda_apply: polynomial degree " +
                                    std::to_string(p.degree()) + " exceeds available moments (" +
                                    std::to_string(mu.size()) + ")");
    Rat s(0);
    for (int i = 0; i <= p.degree(); ++i) s += p.coeff(static_cast<unsigned>(i)) * mu[i];
    return s;
}

MomentSeq favard_moments(const RacahParams& params, const Rat& shift, unsigned count) {
    MomentSeq mu;
    if (count == 0) return mu;
    mu.reserve(count);
    mu.emplace_back(1);
    RacahFamily family(params, count);
    for (unsigned n = 1; n < count; ++n) {
        Poly rn = family.poly(n).shifted(shift);
        if (rn.degree() != static_cast<int>(n) || rn.leading().is_zero())
            throw std::domain_error("favard_moments: R_" + std::to_string(n) +
                                    " has vanishing leading coefficient");
        Rat acc(0);
        for (unsigned j = 0; j < n; ++j) acc += rn.coeff(j) * mu[j];
        mu.push_back(-acc / rn.leading());
    }
    return mu;
}

MomentSeq psi_moments(const Poly& weight, const Poly& subst, const Rat& normalizer,
                      unsigned count) {
    if (normalizer.is_zero()) throw std::domain_error("psi_moments: zero normalizer");
    MomentSeq mu;
    mu.reserve(count);
    Poly cur = weight;
    for (unsigned n = 0; n < count; ++n) {
        if (n > 0) cur = cur * subst;
        mu.push_back(psi(cur) / normalizer);
    }
    return mu;
}

TheoremReport verify_theorem(const TheoremSpec& spec, unsigned depth) {
    TheoremReport rep;
    rep.depth = depth;
    if (depth == 0) {
        rep.normalizer_ok = rep.moments_equal = rep.residues_vanish = true;
        return rep;
    }

    rep.favard = favard_moments(spec.params, spec.shift, depth);
    rep.psi_side = psi_moments(spec.weight, spec.subst, spec.normalizer, depth);

    const unsigned m = spec.target.offset;
    std::vector<Rat> rseq = r_sequence(spec.target.kind, m + depth);
    const Rat& base = rseq[m];
    if (base.is_zero())
        throw std::domain_error("verify_theorem: target sequence vanishes at offset " +
                                std::to_string(m));
    rep.target.reserve(depth);
    Rat two_pow(1);
    for (unsigned n = 0; n < depth; ++n) {
        if (n > 0) two_pow *= Rat(2);
        rep.target.push_back(two_pow * rseq[n + m] / base);
    }

    RacahFamily family(spec.params, depth);
    rep.residues.reserve(depth);
    for (unsigned n = 0; n < depth; ++n) {
        Poly rn_x = family.poly(n).shifted(spec.shift).compose(spec.subst);
        rep.residues.push_back(psi(spec.weight * rn_x));
    }

    rep.normalizer_ok = (rep.residues[0] == spec.normalizer);
    rep.moments_equal = true;
    for (unsigned n = 0; n < depth; ++n) {
        if (rep.favard[n] != rep.psi_side[n] || rep.favard[n] != rep.target[n]) {
            rep.moments_equal = false;
            rep.first_mismatch = static_cast<long>(n);
            break;
        }
    }
    rep.residues_vanish = true;
    for (unsigned n = 1; n < depth; ++n) {
        if (!rep.residues[n].is_zero()) {
            rep.residues_vanish = false;
            if (rep.first_mismatch < 0) rep.first_mismatch = static_cast<long>(n);
            break;
        }
    }
    return rep;
}

UShiftReport verify_u_shift(const Rat& u, unsigned depth) {
    UShiftReport rep;
    rep.u = u;
    rep.shift = -(u * (Rat(1) - u));
    rep.depth = depth;
    rep.psi_side.reserve(depth);
    Poly q{u * (Rat(1) - u), Rat(1), Rat(1)};  // (x+u)(x+1-u) = x^2 + x + u(1-u)
    Poly cur(Rat(1));
    for (unsigned n = 0; n < depth; ++n) {
        if (n > 0) cur = cur * q;
        rep.psi_side.push_back(psi(cur));
    }
    rep.favard = favard_moments(RacahParams{Rat(0), Rat(-1, 2), Rat(0), Rat(0)}, rep.shift, depth);
    rep.all_equal = true;
    for (unsigned n = 0; n < depth; ++n) {
        if (rep.psi_side[n] != rep.favard[n]) {
            rep.all_equal = false;
            rep.first_mismatch = static_cast<long>(n);
            break;
        }
    }
    return rep;
}

JacobiData jacobi_from_moments(const MomentSeq& mu) {
    if (mu.empty()) throw std::invalid_argument("jacobi_from_moments: no moments");
    const std::size_t m = mu.size();
    JacobiData jd;
    jd.lam.emplace_back(0);  // placeholder: p_0 has no predecessor

    Poly p_prev;            // zero polynomial
    Poly p_cur(Rat(1));     // p_0
    Rat s_prev;
    Rat s_cur = mu[0];      // Lambda(p_0^2)
    if (s_cur.is_zero())
        throw std::domain_error("jacobi_from_moments: Lambda(p_0^2) = 0 (quasi-definiteness "
                                "fails at k=0)");

    Poly y = Poly::variable();
    for (unsigned k = 0;; ++k) {
        if (k >= 1) jd.lam.push_back(s_cur / s_prev);
        if (2 * k + 1 > m - 1) break;  // Lambda(y p_k^2) needs moment index 2k+1
        Poly sq = p_cur * p_cur;
        jd.b.push_back(lambda_apply(mu, y * sq) / s_cur);
        Poly p_next = (y - Poly(jd.b.back())) * p_cur;
        if (k >= 1) p_next = p_next - jd.lam[k] * p_prev;
        if (2 * (k + 1) > m - 1) break;  // Lambda(p_{k+1}^2) needs moment index 2k+2
        Rat s_next = lambda_apply(mu, p_next * p_next);
        if (s_next.is_zero())
            throw std::domain_error("jacobi_from_moments: Lambda(p_k^2) = 0 (quasi-definiteness "
                                    "fails at k=" +
                                    std::to_string(k + 1) + ")");
        p_prev = std::move(p_cur);
        p_cur = std::move(p_next);
        s_prev = std::move(s_cur);
        s_cur = std::move(s_next);
    }
    return jd;
}

MomentSeq moments_from_jacobi(const JacobiData& jd, unsigned count) {
    MomentSeq mu;
    if (count == 0) return mu;
    const std::size_t nb = jd.b.size();
    const std::size_t nl = jd.lam.size();
    if (nb < count / 2 || nl < (count + 1) / 2)
        throw std::invalid_argument("moments_from_jacobi: insufficient recurrence data for " +
                                    std::to_string(count) + " moments (need " +
                                    std::to_string(count / 2) + " b and " +
                                    std::to_string((count + 1) / 2) + " lam entries)");

    // Coordinates of y^n in the monic basis: y p_k = p_{k+1} + b_k p_k + lam_k p_{k-1},
    // and mu_n is the p_0-coordinate since Lambda kills every other basis element.
    const unsigned last = count - 1;
    std::vector<Rat> c{Rat(1)};
    mu.emplace_back(1);
    for (unsigned n = 1; n <= last; ++n) {
        // Entries with index > last - n cannot reach index 0 in the remaining steps.
        std::size_t keep = std::min<std::size_t>(c.size() + 1, last - n + 1);
        std::vector<Rat> next(keep, Rat(0));
        for (std::size_t j = 0; j < keep; ++j) {
            if (j + 1 < c.size()) next[j] += jd.lam[j + 1] * c[j + 1];
            if (j < c.size()) next[j] += jd.b[j] * c[j];
            if (j >= 1) next[j] += c[j - 1];
        }
        mu.push_back(next[0]);
        c = std::move(next);
    }
    return mu;
}

Rat hankel_det(const MomentSeq& mu, unsigned n) {
    if (n == 0) return Rat(1);
    if (mu.size() < 2 * n - 1)
        throw std::invalid_argument("hankel_det: size-" + std::to_string(n) +
                                    " determinant needs " + std::to_string(2 * n - 1) +
                                    " moments, have " + std::to_string(mu.size()));

    // Scale each row to integers by its denominator LCM, then eliminate
    // fraction-free (Bareiss); the scaling divides back out at the end.
    std::vector<std::vector<mpz_class>> z(n, std::vector<mpz_class>(n));
    mpz_class scale(1);
    for (unsigned i = 0; i < n; ++i) {
        mpz_class l(1);
        for (unsigned j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                                                 mu[i + j].den().get_mpz_t());
        for (unsigned j = 0; j < n; ++j) {
            mpz_class q = l / mu[i + j].den();
            z[i][j] = mu[i + j].num() * q;
        }
        scale *= l;
    }

    int sign = 1;
    mpz_class prev(1);
    for (unsigned k = 0; k + 1 < n; ++k) {
        if (z[k][k] == 0) {
            unsigned r = k + 1;
            while (r < n && z[r][k] == 0) ++r;
            if (r == n) return Rat(0);
            std::swap(z[k], z[r]);
            sign = -sign;
        }
        for (unsigned i = k + 1; i < n; ++i) {
            for (unsigned j = k + 1; j < n; ++j) {
                mpz_class t = z[i][j] * z[k][k] - z[i][k] * z[k][j];
                mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            z[i][k] = 0;
        }
        prev = z[k][k];
    }
    mpz_class det = z[n - 1][n - 1];
    if (sign < 0) det = -det;
    return Rat(det, scale);
}

}  // namespace ramabern
