"""Four independent methods for the additive-triple count r(A, B, B).

r(A, B, B) is the number of triples (a, b, a+b) in A x B x B, equivalently
the number of pairs (a, b) in A x B with a + b in B. The methods use
deliberately different mechanisms so that they can cross-check one another:

* :func:`count_naive` walks every (a, b) pair; it is the reference oracle.
* :func:`count_shift` sums the shift overlaps |(a + B) n B| over a in A.
* :func:`count_layers` sums |S_i n B| over the layer sets S_i, where S_i
  collects the residues expressible as a + b in at least i ways.
* :func:`count_convolution` forms the representation counts as an exact
  integer convolution of the indicator vectors and sums them over B.

:func:`count_triples` is the dispatching entry point used by callers that
just want the number.
"""

from __future__ import annotations

from dataclasses import dataclass
from operator import itemgetter

import numpy as np

from .residues import DomainError, IncompatibleSetsError, ResidueSet

# Shift-and-popcount is cache friendly up to a few thousand bits; beyond
# that the vectorised convolution wins.
SHIFT_METHOD_MAX_P = 4096


def _require_same_modulus(a_set: ResidueSet, b_set: ResidueSet) -> None:
    if a_set.modulus != b_set.modulus:
        raise IncompatibleSetsError(
            f"sets have different moduli: {a_set.modulus} and {b_set.modulus}"
        )


def count_naive(a_set: ResidueSet, b_set: ResidueSet) -> int:
    """Definitional enumeration of all |A| * |B| pairs. The reference the fast paths answer to.

    For each a in A, membership of a + b is read off a doubled indicator
    table (a + b < 2p, so no reduction is needed) at the |B| positions a + b;
    the gather runs at C speed but the work is exactly the double loop.
    """
    _require_same_modulus(a_set, b_set)
    p = a_set.modulus
    in_b = bytearray(2 * p)
    for b in b_set:
        in_b[b] = 1
        in_b[b + p] = 1
    b_elems = list(b_set)
    if not b_elems:
        return 0
    total = 0
    if len(b_elems) == 1:
        b0 = b_elems[0]
        for a in a_set:
            total += in_b[a + b0]
        return total
    gather = itemgetter(*b_elems)
    view = memoryview(in_b)
    for a in a_set:
        total += sum(gather(view[a:]))
    return total


def count_shift(a_set: ResidueSet, b_set: ResidueSet) -> int:
    """Sum of |(a + B) n B| over a in A, via bitmask rotate and popcount."""
    _require_same_modulus(a_set, b_set)
    p = a_set.modulus
    bb = b_set.bits
    total = 0
    bits = a_set.bits
    while bits:
        low = bits & -bits
        a = low.bit_length() - 1
        bits ^= low
        total += (((bb << a) | (bb >> (p - a))) & bb).bit_count()
    return total


def representation_counts(a_set: ResidueSet, b_set: ResidueSet) -> np.ndarray:
    """N(c) = #{(a, b) in A x B : a + b = c} for every residue c, as int64[p]."""
    _require_same_modulus(a_set, b_set)
    p = a_set.modulus
    if not a_set.cardinality or not b_set.cardinality:
        return np.zeros(p, dtype=np.int64)
    a = np.fromiter(a_set, dtype=np.int64, count=a_set.cardinality)
    b = np.fromiter(b_set, dtype=np.int64, count=b_set.cardinality)
    sums = (a[:, None] + b[None, :]).ravel() % p
    return np.bincount(sums, minlength=p)


def _mask_from_indicator(flags: np.ndarray) -> int:
    """Pack a boolean vector (index = residue) into a ResidueSet bitmask."""
    packed = np.packbits(flags, bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


@dataclass(frozen=True)
class LayerDecomposition:
    """The nested layer sets S_1 >= S_2 >= ... of a pair (A, B).

    ``layers[i-1]`` is S_i, the set of residues expressible as a + b in at
    least i ways; ``multiplicity[c]`` is the exact number of representations
    of c. Only the nonempty layers are materialised, and there are at most
    min(|A|, |B|) of them.
    """

    modulus: int
    layers: tuple[ResidueSet, ...]
    multiplicity: tuple[int, ...]

    def sizes(self) -> tuple[int, ...]:
        return tuple(layer.cardinality for layer in self.layers)


def layers(a_set: ResidueSet, b_set: ResidueSet) -> LayerDecomposition:
    """Materialise the layer decomposition of (A, B)."""
    counts = representation_counts(a_set, b_set)
    depth = int(counts.max()) if counts.size else 0
    built = tuple(
        ResidueSet(a_set.modulus, _mask_from_indicator(counts >= i))
        for i in range(1, depth + 1)
    )
    return LayerDecomposition(a_set.modulus, built, tuple(int(c) for c in counts))


def layer_sizes(a_set: ResidueSet, b_set: ResidueSet) -> list[int]:
    """|S_1|, |S_2|, ... without materialising the sets."""
    counts = representation_counts(a_set, b_set)
    depth = int(counts.max()) if counts.size else 0
    if depth == 0:
        return []
    hist = np.bincount(counts)
    # suffix[i] = #residues with multiplicity >= i
    suffix = np.cumsum(hist[::-1])[::-1]
    return [int(x) for x in suffix[1:]]


def count_layers(a_set: ResidueSet, b_set: ResidueSet) -> int:
    """Sum of |S_i n B| over the layer decomposition.

    |S_i n B| is the number of residues of B with multiplicity at least i,
    so the layer sets are consumed as thresholds of the multiplicity vector
    rather than materialised; :func:`layers` does the materialising when the
    sets themselves are wanted, and the two views are pinned to each other
    by tests.
    """
    counts = representation_counts(a_set, b_set)
    if not b_set.cardinality:
        return 0
    b_idx = np.fromiter(b_set, dtype=np.int64, count=b_set.cardinality)
    on_b = counts[b_idx]
    total = 0
    for i in range(1, int(on_b.max(initial=0)) + 1):
        total += int((on_b >= i).sum())
    return total


def count_convolution(a_set: ResidueSet, b_set: ResidueSet) -> int:
    """Representation counts as an exact integer convolution, summed over B.

    Uses schoolbook integer convolution (no floating-point FFT); every
    intermediate fits comfortably in int64 since counts never exceed p.
    """
    _require_same_modulus(a_set, b_set)
    p = a_set.modulus
    if not a_set.cardinality or not b_set.cardinality:
        return 0
    ind_a = np.zeros(p, dtype=np.int64)
    ind_b = np.zeros(p, dtype=np.int64)
    ind_a[list(a_set)] = 1
    ind_b[list(b_set)] = 1
    linear = np.convolve(ind_a, ind_b)  # length 2p-1, exact
    circular = linear[:p].copy()
    circular[: p - 1] += linear[p:]  # indices c and c + p agree mod p
    b_idx = np.fromiter(b_set, dtype=np.int64, count=b_set.cardinality)
    return int(circular[b_idx].sum())


def count_triples(a_set: ResidueSet, b_set: ResidueSet) -> int:
    """r(A, B, B) by the fastest exact method for the modulus size."""
    if a_set.modulus <= SHIFT_METHOD_MAX_P:
        return count_shift(a_set, b_set)
    return count_convolution(a_set, b_set)


def complement_identity_rhs(p: int, s: int, t: int) -> int:
    """st - s(p - t) + (p - t)^2, the joint total of a count and its complement count.

    r(A, B, B) + r(A', B', B') equals this for complements A', B', whatever
    the sets look like.
    """
    if not (0 <= s <= p and 0 <= t <= p):
        raise DomainError(f"sizes must lie in [0, p], got s={s}, t={t}, p={p}")
    return s * t - s * (p - t) + (p - t) ** 2
