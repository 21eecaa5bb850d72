"""Ribbon basis conversions and the direct signed ribbon expansion.

The ribbon and complete homogeneous bases are related by triangular sums
over the refinement order: R in terms of H alternates in the length drop,
H in terms of R is the plain sum over coarsenings.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Optional

from .compositions import coarsenings, permutation_sign
from .expr import BasisExpr

Index = tuple[int, ...]


def ribbon_to_H(expr: BasisExpr) -> BasisExpr:
    """R_alpha = sum over coarsenings beta of (-1)^(len drop) H_beta."""
    if expr.basis != "R":
        raise ValueError(f"expected basis R, got {expr.basis}")
    terms: dict[Index, int] = {}
    for alpha, coeff in expr.items():
        for beta, subset in coarsenings(alpha):
            sign = -1 if len(subset) % 2 else 1
            terms[beta] = terms.get(beta, 0) + sign * coeff
    return BasisExpr("H", terms)


def H_to_ribbon(expr: BasisExpr) -> BasisExpr:
    """H_alpha = sum of R_beta over all coarsenings beta of alpha."""
    if expr.basis != "H":
        raise ValueError(f"expected basis H, got {expr.basis}")
    terms: dict[Index, int] = {}
    for alpha, coeff in expr.items():
        for beta, _ in coarsenings(alpha):
            terms[beta] = terms.get(beta, 0) + coeff
    return BasisExpr("R", terms)


def ribbon_product(alpha: Iterable[int], beta: Iterable[int]) -> BasisExpr:
    """R_alpha R_beta = R_(concatenation) + R_(near-concatenation)."""
    alpha, beta = tuple(alpha), tuple(beta)
    if not alpha or not beta:
        raise ValueError("ribbon product factors must be nonempty")
    joined = alpha + beta
    fused = alpha[:-1] + (alpha[-1] + beta[0],) + beta[1:]
    return BasisExpr.term("R", joined) + BasisExpr.term("R", fused)


def im2rib_class(alpha: Iterable[int]) -> Optional[int]:
    """Smallest J with alpha_l >= l for l <= J and alpha_l = J after, if any.

    Membership marks the shapes whose ribbon expansion is given by the
    direct signed-permutation formula below.
    """
    alpha = tuple(alpha)
    k = len(alpha)
    for J in range(1, k + 1):
        if all(alpha[l - 1] >= l for l in range(1, J + 1)) and all(
            alpha[l - 1] == J for l in range(J + 1, k + 1)
        ):
            return J
    return None


def immaculate_to_ribbon_direct(
    alpha: Iterable[int], force: bool = False
) -> BasisExpr:
    """Signed permutation sum of R indexed by (alpha_i - i + sigma_i).

    Terms containing any part <= 0 vanish (zero does not mean a unit
    factor here, unlike H subscripts). The identity with the true ribbon
    expansion is guaranteed only when im2rib_class(alpha) is defined;
    pass force=True to evaluate the formula outside that class anyway.
    """
    alpha = tuple(alpha)
    if any(a < 1 for a in alpha):
        raise ValueError(f"alpha must be a strong composition: {alpha}")
    if im2rib_class(alpha) is None and not force:
        raise ValueError(
            f"{alpha} is outside the proven class for the direct ribbon "
            f"formula; use force to evaluate it anyway"
        )
    k = len(alpha)
    terms: dict[Index, int] = {}
    for sigma in permutations(range(1, k + 1)):
        index = tuple(alpha[i] - (i + 1) + sigma[i] for i in range(k))
        if any(part <= 0 for part in index):
            continue
        sign = permutation_sign(sigma)
        terms[index] = terms.get(index, 0) + sign
    return BasisExpr("R", terms)
