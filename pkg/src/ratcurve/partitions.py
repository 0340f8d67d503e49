"""Partitions of root multiplicities and the bookkeeping between strata.

A multiplicity profile is a partition: the sorted multiplicities of the
roots of a binary form. Profiles are ordered by refinement; the closed
stratum of profile lam contains exactly the forms whose profile can be
refined into lam (equivalently lam arises from it by merging parts).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self):
        return "(" + ",".join(str(p) for p in self) + ")"


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple:
    """All partitions of n, largest-part-first ordering."""
    if n < 0:
        return ()
    if n == 0:
        return (Partition(()),)
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for p in range(min(remaining, maxpart), 0, -1):
            rec(remaining - p, p, prefix + [p])

    rec(n, n, [])
    return tuple(out)


def merges(lam: Partition):
    """Profiles obtained by merging one pair of parts; these are the covers
    strictly below lam in refinement order (duplicates removed)."""
    seen = set()
    out = []
    for i, j in combinations(range(len(lam)), 2):
        merged = [lam[a] for a in range(len(lam)) if a not in (i, j)]
        merged.append(lam[i] + lam[j])
        m = Partition(merged)
        if m not in seen:
            seen.add(m)
            out.append(m)
    return out


def refines(fine: Partition, coarse: Partition) -> bool:
    """True when `coarse` arises from `fine` by merging parts, i.e. the
    parts of `fine` can be grouped so each group sums to one part of
    `coarse`. Every profile refines itself."""
    if fine.size != coarse.size:
        return False
    if len(fine) < len(coarse):
        return False

    parts = sorted(fine, reverse=True)

    # place the largest unplaced part into some group; trying each group
    # capacity once (duplicates skipped) is exhaustive, since the largest
    # part constrains the search the most
    def place(idx, capacities):
        if idx == len(parts):
            return all(c == 0 for c in capacities)
        part = parts[idx]
        tried = set()
        for i, cap in enumerate(capacities):
            if cap < part or cap in tried:
                continue
            tried.add(cap)
            capacities[i] = cap - part
            if place(idx + 1, capacities):
                capacities[i] = cap
                return True
            capacities[i] = cap
        return False

    return place(0, list(coarse))


def stratum_contains(lam: Partition, exact_type: Partition) -> bool:
    """Whether a form of the given exact profile lies on the closed stratum
    of lam."""
    return refines(lam, exact_type)


def ancestor_multiplicity(lam: Partition, sigma: Partition) -> int:
    """Number of roots of a profile-lam form whose removal (drop one from
    its multiplicity) leaves profile sigma. Zero unless the profiles differ
    by a single decrement."""
    if lam.size != sigma.size + 1:
        return 0
    a = list(lam)
    b = list(sigma)
    # multiset difference both ways
    from collections import Counter

    ca, cb = Counter(a), Counter(b)
    diff_a = ca - cb
    diff_b = cb - ca
    if sum(diff_a.values()) != 1:
        return 0
    (v,) = diff_a.keys()
    if v == 1:
        if sum(diff_b.values()) != 0:
            return 0
        return ca[1]
    if set(diff_b.keys()) != {v - 1} or sum(diff_b.values()) != 1:
        return 0
    return ca[v]


def sub_profile_count(lam: Partition, sigma: Partition) -> int:
    """Number of distinct subdivisors of profile sigma inside a fixed form
    of profile lam: choices (mu_1..mu_l), 0 <= mu_i <= lam_i, summing to
    sigma's size, whose nonzero parts sorted equal sigma."""
    j = sigma.size
    if j > lam.size:
        return 0
    target = tuple(sorted(sigma, reverse=True))
    count = 0

    def rec(i, remaining, chosen):
        nonlocal count
        if remaining == 0:
            # later positions take mu = 0 implicitly
            picked = tuple(sorted((c for c in chosen if c), reverse=True))
            if picked == target:
                count += 1
            return
        if i >= len(lam):
            return
        for mu in range(min(lam[i], remaining), -1, -1):
            rec(i + 1, remaining - mu, chosen + (mu,))

    rec(0, j, ())
    return count
