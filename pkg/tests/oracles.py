"""Deliberately dumb reference implementations used to pin expected values.

Everything here is written for transparency, not speed, and stays
independent of the library code it checks.
"""

from itertools import combinations


def brute_count(p, a_elems, b_elems):
    """Triple count straight from the definition."""
    b = {x % p for x in b_elems}
    total = 0
    for a in a_elems:
        for x in b:
            if (a + x) % p in b:
                total += 1
    return total


def brute_multiplicities(p, a_elems, b_elems):
    """Number of representations of each residue as a + b."""
    counts = [0] * p
    for a in a_elems:
        for b in b_elems:
            counts[(a + b) % p] += 1
    return counts


def brute_spectrum(p, s, t):
    """Attained triple counts over every pair of subsets of sizes s and t."""
    values = set()
    for b in combinations(range(p), t):
        for a in combinations(range(p), s):
            values.add(brute_count(p, a, b))
    return sorted(values)


def pair_multiset(u):
    """The multiset {1,1,2,2,...,u-1,u-1,u}, sorted ascending."""
    out = []
    for v in range(1, u):
        out.extend((v, v))
    out.append(u)
    return out
