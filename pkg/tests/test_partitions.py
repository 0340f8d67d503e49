"""Multiplicity profiles: refinement order, merges, and subdivisor counts.

Every counting function here is checked against a brute-force enumeration
written independently of the library code.
"""

import itertools

from ratcurve.partitions import (
    Partition,
    ancestor_multiplicity,
    merges,
    partitions_of,
    refines,
    stratum_contains,
    sub_profile_count,
)


def test_partition_normalizes_and_validates():
    assert tuple(Partition([1, 3, 2])) == (3, 2, 1)
    assert Partition([2, 2]).size == 4
    try:
        Partition([0, 1])
    except ValueError:
        pass
    else:
        raise AssertionError("zero part accepted")


def test_partition_counts():
    for n, count in enumerate([1, 1, 2, 3, 5, 7, 11, 15, 22]):
        assert len(partitions_of(n)) == count
    assert partitions_of(-1) == ()


def _set_partitions(items):
    """All set partitions, grown one element at a time."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in _set_partitions(rest):
        for i in range(len(smaller)):
            yield smaller[:i] + [smaller[i] + [first]] + smaller[i + 1 :]
        yield [[first]] + smaller


def _coarsenings(fine):
    """Profiles of group sums over every grouping of the parts of fine."""
    out = set()
    for groups in _set_partitions(list(fine)):
        out.add(tuple(sorted((sum(g) for g in groups), reverse=True)))
    return out


def test_refines_matches_brute_force():
    for n in range(1, 9):
        for fine in partitions_of(n):
            achievable = _coarsenings(fine)
            for coarse in partitions_of(n):
                assert refines(fine, coarse) == (tuple(coarse) in achievable), (
                    fine,
                    coarse,
                )


def test_refines_regression_multiset_grouping():
    # grouping {2,2} -> 4 leaves 3 -> 3; the largest part does not have to
    # land in the largest target
    assert refines(Partition([3, 2, 2]), Partition([4, 3]))


def test_refines_rejects_size_mismatch():
    assert not refines(Partition([2, 1]), Partition([2]))


def test_stratum_contains_is_refinement():
    lam = Partition([2, 1, 1])
    assert stratum_contains(lam, Partition([2, 2]))
    assert stratum_contains(lam, lam)
    assert not stratum_contains(lam, Partition([1, 1, 1, 1]))


def test_merges_are_covers():
    for n in range(2, 8):
        for lam in partitions_of(n):
            if len(lam) < 2:
                assert merges(lam) == []
                continue
            for m in merges(lam):
                assert m.size == lam.size
                assert len(m) == len(lam) - 1
                assert refines(lam, m)
            # merges are exactly the coarser profiles one part shorter
            expected = {
                c
                for c in partitions_of(n)
                if len(c) == len(lam) - 1 and refines(lam, c)
            }
            assert set(merges(lam)) == expected


def _brute_ancestor(lam, sigma):
    count = 0
    for i in range(len(lam)):
        reduced = [p for j, p in enumerate(lam) if j != i]
        if lam[i] > 1:
            reduced.append(lam[i] - 1)
        if tuple(sorted(reduced, reverse=True)) == tuple(sigma):
            count += 1
    return count


def test_ancestor_multiplicity_matches_brute_force():
    for n in range(2, 8):
        for lam in partitions_of(n):
            for sigma in partitions_of(n - 1):
                assert ancestor_multiplicity(lam, sigma) == _brute_ancestor(
                    lam, sigma
                ), (lam, sigma)


def test_ancestor_multiplicity_size_guard():
    assert ancestor_multiplicity(Partition([3]), Partition([1])) == 0


def _brute_sub_profiles(lam, sigma):
    count = 0
    for mu in itertools.product(*(range(p + 1) for p in lam)):
        if sum(mu) != sigma.size:
            continue
        nonzero = tuple(sorted((m for m in mu if m), reverse=True))
        if nonzero == tuple(sigma):
            count += 1
    return count


def test_sub_profile_count_matches_brute_force():
    for n in range(1, 7):
        for lam in partitions_of(n):
            for j in range(1, n + 1):
                for sigma in partitions_of(j):
                    assert sub_profile_count(lam, sigma) == _brute_sub_profiles(
                        lam, sigma
                    ), (lam, sigma)


def test_sub_profile_count_goldens():
    # two simple points inside a triple root: one way
    assert sub_profile_count(Partition([3]), Partition([2])) == 1
    # a double point chosen among three simple roots: none
    assert sub_profile_count(Partition([1, 1, 1]), Partition([2])) == 0
    # one simple point among three simple roots: three ways
    assert sub_profile_count(Partition([1, 1, 1]), Partition([1])) == 3
    # (2,1) inside (2,2): each double can host the 2 or the 1 -> 2 * 1 ... count
    assert sub_profile_count(Partition([2, 2]), Partition([2, 1])) == 2
