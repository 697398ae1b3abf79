"""Immutable subsets of Z_p stored as integer bitmasks.

Bit r of ``bits`` is set exactly when residue r is a member, so complement,
shift, intersection size and sumset all reduce to word-parallel integer
operations, which stay cheap even for moduli in the thousands. Moduli are
odd and at least 3. Empty sets are legal here; cardinality constraints such
as 1 <= s, t <= p-1 are enforced only at the :class:`Params` boundary.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from typing import Iterable, Iterator

# Counts r(A, B, B) can approach p^2, so they need 64-bit integers; the
# modulus itself is capped well below that.
MAX_MODULUS = 2**31 - 1


class DomainError(ValueError):
    """Input lies outside an operation's documented domain."""


class InvalidModulusError(DomainError):
    """Modulus is not an odd integer in [3, MAX_MODULUS]."""


class IncompatibleSetsError(DomainError):
    """Operands live in different ambient groups Z_p."""


class VerificationError(RuntimeError):
    """An internal consistency check failed; this is a bug, not bad input."""


def check_modulus(p: int) -> int:
    """Return ``p`` as a plain int, or raise :class:`InvalidModulusError`."""
    try:
        p = operator.index(p)
    except TypeError:
        raise InvalidModulusError(f"modulus must be an integer, got {p!r}") from None
    if p < 3 or p % 2 == 0 or p > MAX_MODULUS:
        raise InvalidModulusError(f"modulus must be an odd integer in [3, 2^31-1], got {p}")
    return p


def is_prime(n: int) -> bool:
    """Deterministic trial division, adequate for n <= 2^31."""
    n = operator.index(n)
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_up_to(n: int) -> list[int]:
    """All primes <= n, by sieve."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for q in range(2, int(n**0.5) + 1):
        if sieve[q]:
            start = q * q
            sieve[start : n + 1 : q] = bytearray(len(range(start, n + 1, q)))
    return [i for i, flag in enumerate(sieve) if flag]


@dataclass(frozen=True)
class ResidueSet:
    """A subset of Z_p with bit-indexed membership and cached cardinality."""

    modulus: int
    bits: int
    cardinality: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        p = check_modulus(self.modulus)
        bits = operator.index(self.bits)
        if not 0 <= bits < (1 << p):
            raise DomainError(f"bitmask has members outside [0, {p})")
        object.__setattr__(self, "modulus", p)
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "cardinality", bits.bit_count())

    @classmethod
    def from_elements(cls, modulus: int, elements: Iterable[int]) -> "ResidueSet":
        """Build a set from arbitrary integers, reduced mod ``modulus``."""
        p = check_modulus(modulus)
        bits = 0
        for x in elements:
            bits |= 1 << (operator.index(x) % p)
        return cls(p, bits)

    def elements(self) -> tuple[int, ...]:
        return tuple(self)

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.cardinality

    def __contains__(self, residue: int) -> bool:
        return bool((self.bits >> (operator.index(residue) % self.modulus)) & 1)

    def __repr__(self) -> str:
        return f"ResidueSet({self.modulus}, {{{', '.join(map(str, self))}}})"

    def _require_same_modulus(self, other: "ResidueSet") -> None:
        if self.modulus != other.modulus:
            raise IncompatibleSetsError(
                f"sets have different moduli: {self.modulus} and {other.modulus}"
            )

    def complement(self) -> "ResidueSet":
        """Z_p minus this set."""
        return ResidueSet(self.modulus, self.bits ^ ((1 << self.modulus) - 1))

    def shift(self, a: int) -> "ResidueSet":
        """The translate a + X; cardinality is preserved."""
        p = self.modulus
        a = operator.index(a) % p
        full = (1 << p) - 1
        return ResidueSet(p, ((self.bits << a) | (self.bits >> (p - a))) & full)

    def intersection_size(self, other: "ResidueSet") -> int:
        self._require_same_modulus(other)
        return (self.bits & other.bits).bit_count()

    def sumset(self, other: "ResidueSet") -> "ResidueSet":
        """{x + y mod p : x in self, y in other}; empty if either side is empty."""
        self._require_same_modulus(other)
        p = self.modulus
        full = (1 << p) - 1
        small, big = sorted((self, other), key=len)
        acc = 0
        bb = big.bits
        for a in small:
            acc |= ((bb << a) | (bb >> (p - a))) & full
            if acc == full:
                break
        return ResidueSet(p, acc)

    __add__ = sumset


def make_set(modulus: int, elements: Iterable[int]) -> ResidueSet:
    """Canonical constructor: elements reduced mod p, duplicates collapsed."""
    return ResidueSet.from_elements(modulus, elements)


def empty_set(modulus: int) -> ResidueSet:
    return ResidueSet(modulus, 0)


def full_set(modulus: int) -> ResidueSet:
    p = check_modulus(modulus)
    return ResidueSet(p, (1 << p) - 1)


def interval_set(modulus: int, length: int) -> ResidueSet:
    """The interval {0, 1, ..., length-1} in Z_p."""
    p = check_modulus(modulus)
    length = operator.index(length)
    if not 0 <= length <= p:
        raise DomainError(f"interval length must lie in [0, {p}], got {length}")
    return ResidueSet(p, (1 << length) - 1)


@dataclass(frozen=True)
class Params:
    """A problem instance: odd modulus p with prescribed cardinalities s = |A|, t = |B|."""

    p: int
    s: int
    t: int
    prime: bool = field(init=False, compare=False)

    def __post_init__(self) -> None:
        p = check_modulus(self.p)
        s = operator.index(self.s)
        t = operator.index(self.t)
        if not (1 <= s <= p - 1 and 1 <= t <= p - 1):
            raise DomainError(f"cardinalities must satisfy 1 <= s, t <= p-1, got s={s}, t={t}, p={p}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "prime", is_prime(p))
