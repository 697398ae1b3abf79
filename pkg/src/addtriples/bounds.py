"""Closed-form extremal values for r(A, B, B) and the inequalities behind them.

For an odd prime p and cardinalities 1 <= s, t <= p-1 the count r(A, B, B)
is confined to the integer interval [lower_bound(p, s, t), upper_bound(p, s, t)].
Both bounds are piecewise quadratics whose case boundaries are written in
terms of 2t, which keeps the parity bookkeeping out of the conditions. The
Schur specialisation (A = B) has its own classical two-case forms, and the
per-level inequality :func:`pollard_lower_at` is the engine that produces
the lower bound.

For composite odd p every formula still evaluates, but the resulting
:class:`BoundsResult` carries ``guaranteed=False``: the sandwich can fail,
and the spectrum machinery exists to find such failures.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .counting import layer_sizes
from .residues import DomainError, Params, ResidueSet, check_modulus, is_prime


def _ceil_div4(x):
    return -(-x // 4)


def lower_bound(p: int, s: int, t: int) -> int:
    """Minimum of r(A, B, B) over |A| = s, |B| = t (guaranteed for prime p).

    Piecewise in 2t: zero while B is small enough to dodge A entirely,
    floor((s + 2t - p)^2 / 4) in the middle range, and s(2t - p) once B is
    so large that every shift of it meets it in at least 2t - p points.
    """
    Params(p, s, t)
    tt = 2 * t
    if tt <= p - s + 1:
        return 0
    if tt <= p + s - 2:
        return (s + tt - p) ** 2 // 4
    return s * (tt - p)


def upper_bound(p: int, s: int, t: int) -> int:
    """Maximum of r(A, B, B) over |A| = s, |B| = t (guaranteed for prime p)."""
    Params(p, s, t)
    tt = 2 * t
    if tt <= s:
        return t * t
    if tt <= 2 * p - s - 1:
        return _ceil_div4(s * (4 * t - s))
    return s * (tt - p) + (p - t) ** 2


def _check_schur_args(p: int, s: int) -> None:
    p = check_modulus(p)
    if not 1 <= s <= p - 1:
        raise DomainError(f"need 1 <= s <= p-1, got s={s}, p={p}")


def schur_lower_bound(p: int, s: int) -> int:
    """Minimum Schur-triple count over |A| = s: 0, or floor((3s - p)^2 / 4)."""
    _check_schur_args(p, s)
    if 3 * s <= p + 1:
        return 0
    return (3 * s - p) ** 2 // 4


def schur_upper_bound(p: int, s: int) -> int:
    """Maximum Schur-triple count over |A| = s: ceil(3s^2 / 4), or the large-s form."""
    _check_schur_args(p, s)
    if 3 * s <= 2 * p + 1:
        return _ceil_div4(3 * s * s)
    return s * (2 * s - p) + (p - s) ** 2


def pollard_lower_at(p: int, s: int, t: int, j: int) -> int:
    """j min(p, s+t-j) - j(p-t): a valid lower bound for r(A, B, B) at prime p.

    Follows from Pollard's inequality on the first j layers plus
    |S_i n B| >= |S_i| - (p - t). Maximising over j recovers the closed-form
    lower bound.
    """
    Params(p, s, t)
    if not 1 <= j <= min(s, t):
        raise DomainError(f"need 1 <= j <= min(s, t) = {min(s, t)}, got j={j}")
    return j * min(p, s + t - j) - j * (p - t)


@dataclass(frozen=True)
class BoundsResult:
    """The closed interval [f, g] for a given instance, with its validity flag."""

    p: int
    s: int
    t: int
    f: int
    g: int
    guaranteed: bool  # True iff p is prime; composite moduli can escape [f, g]


def bounds_for(p: int, s: int, t: int) -> BoundsResult:
    params = Params(p, s, t)
    return BoundsResult(
        p=params.p,
        s=params.s,
        t=params.t,
        f=lower_bound(p, s, t),
        g=upper_bound(p, s, t),
        guaranteed=params.prime,
    )


class InequalityCheck(NamedTuple):
    """Outcome of a single inequality, with both sides as the witness."""

    holds: bool
    lhs: int
    rhs: int


def cauchy_davenport_check(a_set: ResidueSet, b_set: ResidueSet) -> InequalityCheck:
    """|A + B| >= min(p, |A| + |B| - 1). Requires prime p and nonempty sets."""
    if a_set.modulus != b_set.modulus:
        raise DomainError("sets have different moduli")
    p = a_set.modulus
    if not is_prime(p):
        raise DomainError(f"the sumset inequality is only guaranteed for prime p, got p={p}")
    if not a_set.cardinality or not b_set.cardinality:
        raise DomainError("the sumset inequality requires nonempty sets")
    lhs = a_set.sumset(b_set).cardinality
    rhs = min(p, a_set.cardinality + b_set.cardinality - 1)
    return InequalityCheck(lhs >= rhs, lhs, rhs)


def pollard_check(
    a_set: ResidueSet, b_set: ResidueSet, j: int, sizes: list[int] | None = None
) -> InequalityCheck:
    """sum_{i<=j} |S_i| >= j min(p, s+t-j). Requires prime p and 1 <= j <= min(s, t).

    Pass precomputed ``sizes`` (from :func:`addtriples.counting.layer_sizes`)
    when sweeping j over one pair.
    """
    if a_set.modulus != b_set.modulus:
        raise DomainError("sets have different moduli")
    p = a_set.modulus
    if not is_prime(p):
        raise DomainError(f"the layer inequality is only guaranteed for prime p, got p={p}")
    s, t = a_set.cardinality, b_set.cardinality
    if not 1 <= j <= min(s, t):
        raise DomainError(f"need 1 <= j <= min(s, t) = {min(s, t)}, got j={j}")
    if sizes is None:
        sizes = layer_sizes(a_set, b_set)
    lhs = sum(sizes[:j])  # layers beyond the list are empty
    rhs = j * min(p, s + t - j)
    return InequalityCheck(lhs >= rhs, lhs, rhs)


def pollard_check_sweep(a_set: ResidueSet, b_set: ResidueSet) -> list[InequalityCheck]:
    """The layer inequality at every admissible j for one pair."""
    sizes = layer_sizes(a_set, b_set)
    top = min(a_set.cardinality, b_set.cardinality)
    return [pollard_check(a_set, b_set, j, sizes=sizes) for j in range(1, top + 1)]


# -- vectorised grids ---------------------------------------------------------
#
# The sweeps in the test suite span millions of (p, s, t) triples, so the
# piecewise forms are also provided as numpy evaluations over whole grids.
# Equality with the scalar versions is pinned by tests.


def _f_piecewise(p, s, t):
    tt = 2 * t
    middle = (s + tt - p) ** 2 // 4
    return np.where(tt <= p - s + 1, 0, np.where(tt <= p + s - 2, middle, s * (tt - p)))


def _g_piecewise(p, s, t):
    tt = 2 * t
    middle = -(-(s * (4 * t - s)) // 4)
    return np.where(tt <= s, t * t, np.where(tt <= 2 * p - s - 1, middle, s * (tt - p) + (p - t) ** 2))


def bound_grids(p: int) -> tuple[np.ndarray, np.ndarray]:
    """f and g over the whole (s, t) grid; entry [s-1, t-1] is the value at (s, t)."""
    p = check_modulus(p)
    s = np.arange(1, p, dtype=np.int64)[:, None]
    t = np.arange(1, p, dtype=np.int64)[None, :]
    return _f_piecewise(p, s, t), _g_piecewise(p, s, t)


def bound_diagonals(p: int) -> tuple[np.ndarray, np.ndarray]:
    """f(s, s) and g(s, s) for s = 1..p-1, without building the full grid."""
    p = check_modulus(p)
    s = np.arange(1, p, dtype=np.int64)
    return _f_piecewise(p, s, s), _g_piecewise(p, s, s)


def schur_bound_grids(p: int) -> tuple[np.ndarray, np.ndarray]:
    """The Schur-case bounds for s = 1..p-1 as arrays."""
    p = check_modulus(p)
    s = np.arange(1, p, dtype=np.int64)
    f = np.where(3 * s <= p + 1, 0, (3 * s - p) ** 2 // 4)
    g = np.where(3 * s <= 2 * p + 1, -(-(3 * s * s) // 4), s * (2 * s - p) + (p - s) ** 2)
    return f, g
