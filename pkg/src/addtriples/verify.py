"""Seeded randomized cross-checking of counts, identities and inequalities.

One trial draws random cardinalities s, t and random sets A, B in Z_p, then
runs every check that is valid for that modulus:

* four-way agreement of the counting methods (any group),
* the complement identity r(A,B,B) + r(A',B',B') = st - s(p-t) + (p-t)^2
  (any group),
* the sumset inequality, the layer inequalities at every admissible j, and
  the bound sandwich f <= r <= g (prime p only; all three can genuinely
  fail for composite moduli, so they are gated, not merely expected to pass).

The random stream is fully determined by the seed and the order of the
moduli, so a failure report names a reproducible witness.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from . import bounds, counting
from .residues import ResidueSet, is_prime

PRIME_ONLY_CHECKS = ("sumset-inequality", "layer-inequalities", "bound-sandwich")


@dataclass(frozen=True)
class Violation:
    p: int
    trial: int
    check: str
    detail: str
    set_a: tuple[int, ...]
    set_b: tuple[int, ...]


@dataclass
class ModulusSummary:
    p: int
    prime: bool
    trials: int
    checks: dict[str, int] = field(default_factory=dict)
    skipped: tuple[str, ...] = ()
    violations: list[Violation] = field(default_factory=list)


@dataclass
class VerifyReport:
    seed: int
    trials: int
    moduli: list[ModulusSummary]
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return all(not m.violations for m in self.moduli)

    def first_violation(self) -> Violation | None:
        for m in self.moduli:
            if m.violations:
                return m.violations[0]
        return None


def _random_pair(rng: random.Random, p: int) -> tuple[ResidueSet, ResidueSet]:
    s = rng.randint(1, p - 1)
    t = rng.randint(1, p - 1)
    a = ResidueSet.from_elements(p, rng.sample(range(p), s))
    b = ResidueSet.from_elements(p, rng.sample(range(p), t))
    return a, b


def _check_modulus(p: int, trials: int, rng: random.Random) -> ModulusSummary:
    prime = is_prime(p)
    summary = ModulusSummary(p=p, prime=prime, trials=trials)
    if not prime:
        summary.skipped = PRIME_ONLY_CHECKS
    counts = summary.checks

    def fail(trial, check, detail, a, b):
        summary.violations.append(
            Violation(p, trial, check, detail, a.elements(), b.elements())
        )

    for trial in range(trials):
        a, b = _random_pair(rng, p)
        s, t = a.cardinality, b.cardinality

        r = counting.count_naive(a, b)
        others = {
            "shift": counting.count_shift(a, b),
            "layers": counting.count_layers(a, b),
            "convolution": counting.count_convolution(a, b),
        }
        counts["four-way-agreement"] = counts.get("four-way-agreement", 0) + 1
        if any(v != r for v in others.values()):
            fail(trial, "four-way-agreement", f"naive={r}, {others}", a, b)
            continue

        rhs = counting.complement_identity_rhs(p, s, t)
        comp = counting.count_shift(a.complement(), b.complement())
        counts["complement-identity"] = counts.get("complement-identity", 0) + 1
        if r + comp != rhs:
            fail(trial, "complement-identity", f"{r} + {comp} != {rhs}", a, b)

        if not prime:
            continue

        cd = bounds.cauchy_davenport_check(a, b)
        counts["sumset-inequality"] = counts.get("sumset-inequality", 0) + 1
        if not cd.holds:
            fail(trial, "sumset-inequality", f"|A+B|={cd.lhs} < {cd.rhs}", a, b)

        sizes = counting.layer_sizes(a, b)
        counts["layer-inequalities"] = counts.get("layer-inequalities", 0) + 1
        lhs = 0
        for j in range(1, min(s, t) + 1):
            lhs += sizes[j - 1] if j <= len(sizes) else 0
            rhs_j = j * min(p, s + t - j)
            if lhs < rhs_j:
                fail(trial, "layer-inequalities", f"j={j}: {lhs} < {rhs_j}", a, b)
                break

        f = bounds.lower_bound(p, s, t)
        g = bounds.upper_bound(p, s, t)
        counts["bound-sandwich"] = counts.get("bound-sandwich", 0) + 1
        if not f <= r <= g:
            fail(trial, "bound-sandwich", f"r={r} outside [{f}, {g}]", a, b)

    return summary


def run_verification(p_values: list[int], trials: int, seed: int) -> VerifyReport:
    """Run ``trials`` random-pair checks for each modulus, in order, from one seed."""
    started = time.perf_counter()
    rng = random.Random(seed)
    report = VerifyReport(seed=seed, trials=trials, moduli=[])
    for p in p_values:
        report.moduli.append(_check_modulus(p, trials, rng))
    report.elapsed = time.perf_counter() - started
    return report
