#pragma once

#include "ramabern/polynomial.hpp"
#include "ramabern/racah.hpp"
#include "ramabern/sequences.hpp"

#include <string>
#include <vector>

namespace ramabern {

/// mu[n] = Lambda(y^n); mu[0] = 1 for a normalized functional.
using MomentSeq = std::vector<Rat>;

/// Three-term recurrence data of the monic orthogonal family:
/// p_{k+1}(y) = (y - b[k]) p_k(y) - lam[k] p_{k-1}(y), with lam[0] = 0 as
/// a placeholder (p_0 has no predecessor). Equivalently the J-fraction
/// coefficients of the moment generating series.
struct JacobiData {
    std::vector<Rat> b;
    std::vector<Rat> lam;
};

/// The claimed moment values: t_n = 2^n * R_{n+offset} / R_offset with R
/// drawn from one of the two quadratic-binomial sequences.
struct TargetSeq {
    RSeqKind kind = RSeqKind::Minus;
    unsigned offset = 0;
};

/// One orthogonality statement: the Racah family params (argument shifted
/// by `shift`), the Psi-side data (weight w(x), quadratic substitution
/// q(x), normalizer Psi(w)), and the target moment sequence.
struct TheoremSpec {
    RacahParams params;
    Poly weight;
    Poly subst;
    Rat shift;
    Rat normalizer;
    TargetSeq target;
};

/// Lambda(p) for the functional with moments mu, by linearity.
/// Requires deg p < mu.size().
Rat lambda_apply(const MomentSeq& mu, const Poly& p);

/// The unique moments with mu[0] = 1 and Lambda(R_n(y + shift)) = 0 for
/// 1 <= n < count, by the triangular solve
/// mu_n = -(sum_{j<n} c_{n,j} mu_j) / c_{n,n}.
MomentSeq favard_moments(const RacahParams& params, const Rat& shift, unsigned count);

/// mu_n = Psi(weight * subst^n) / normalizer. Throws on zero normalizer.
MomentSeq psi_moments(const Poly& weight, const Poly& subst, const Rat& normalizer,
                      unsigned count);

/// Per-index comparison of the three independent computations plus the
/// orthogonality residues Psi(weight * R_n(subst + shift)).
struct TheoremReport {
    unsigned depth = 0;
    MomentSeq favard;
    MomentSeq psi_side;
    MomentSeq target;
    /// residues[0] = Psi(weight) (cross-checked against the normalizer);
    /// residues[n] for n >= 1 must vanish.
    std::vector<Rat> residues;
    bool normalizer_ok = false;
    bool moments_equal = false;
    bool residues_vanish = false;
    /// Smallest index where favard/psi/target disagree, or -1.
    long first_mismatch = -1;

    bool ok() const { return normalizer_ok && moments_equal && residues_vanish; }
};

TheoremReport verify_theorem(const TheoremSpec& spec, unsigned depth);

/// Checks Psi(((x+u)(x+1-u))^n) against the Favard moments of the
/// (0,-1/2,0,0) family with argument shifted by -u(1-u); since
/// (x+u)(x+1-u) = x(x+1) + u(1-u), both sides describe the same functional.
struct UShiftReport {
    Rat u;
    Rat shift;
    unsigned depth = 0;
    MomentSeq psi_side;
    MomentSeq favard;
    bool all_equal = false;
    long first_mismatch = -1;

    bool ok() const { return all_equal; }
};

UShiftReport verify_u_shift(const Rat& u, unsigned depth);

/// Monic recurrence coefficients from moments: b_k = Lambda(y p_k^2)/Lambda(p_k^2),
/// lam_k = Lambda(p_k^2)/Lambda(p_{k-1}^2). From count moments this yields
/// b_0..b_{floor(count/2)-1} and lam_1..lam_{floor((count+1)/2)-1}.
/// Throws std::domain_error (quasi-definiteness failure, reporting k) when
/// some Lambda(p_k^2) = 0.
JacobiData jacobi_from_moments(const MomentSeq& mu);

/// Regenerates mu_0..mu_{count-1} from recurrence data by iterating
/// multiplication-by-y on the coordinate vector of y^n in the monic basis
/// (mu_n is the p_0-coordinate). Inverse of jacobi_from_moments.
MomentSeq moments_from_jacobi(const JacobiData& jd, unsigned count);

/// Determinant of the n x n Hankel matrix (mu_{i+j}), by row-LCM scaling
/// to integers and fraction-free Bareiss elimination. Needs mu up to
/// index 2n-2; the empty determinant (n = 0) is 1.
Rat hankel_det(const MomentSeq& mu, unsigned n);

}  // namespace ramabern
