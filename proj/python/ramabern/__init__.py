"""Exact Ramanujan-Bernoulli sequences, Racah-family moment problems, and the
attached non-standard L-function.

Rationals cross the boundary as :class:`fractions.Fraction`; polynomials are
coefficient sequences, lowest degree first. The default base polynomial for
the L-function helpers is binom(x+2, 2), i.e. coefficients (1, 3/2, 1/2).
"""

from ._core import (
    InadmissibleParams,
    antidifference,
    bernoulli,
    catalog,
    favard_moments,
    hankel_det,
    jacobi_from_moments,
    l_direct,
    l_eval,
    l_value_neg,
    moments_from_jacobi,
    monic_racah,
    psi,
    r_sequence,
    r_value,
    racah_poly,
    verify_theorem,
    verify_u_shift,
)

__all__ = [
    "InadmissibleParams",
    "antidifference",
    "bernoulli",
    "catalog",
    "favard_moments",
    "hankel_det",
    "jacobi_from_moments",
    "l_direct",
    "l_eval",
    "l_value_neg",
    "moments_from_jacobi",
    "monic_racah",
    "psi",
    "r_sequence",
    "r_value",
    "racah_poly",
    "verify_theorem",
    "verify_u_shift",
]
