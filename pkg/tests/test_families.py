from itertools import combinations
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kneser_bandwidth.combinatorics import RSubset, all_subsets, family_S
from kneser_bandwidth.families import (
    Family, common_intersection, count_meeting, cross_intersecting, find_matching,
    is_intersecting, is_trivial, max_t_intersecting,
)
from kneser_bandwidth.layout import BlockId, paper_layout
from kneser_bandwidth.certificates import BLOCKER_TABLE


def fam(sets, n):
    return Family.of(sets, n)


def test_family_rejects_mixed_and_duplicates():
    with pytest.raises(ValueError):
        Family((RSubset((1, 2), 5), RSubset((1, 2, 3), 5)))
    with pytest.raises(ValueError):
        fam([(1, 2), (1, 2)], 5)


@pytest.mark.parametrize("sets,n,expected", [
    (family_S((1, 2), 8, 3), 8, {1, 2}),
    ([(1, 2, 3), (4, 5, 6)], 6, set()),
    (family_S((1,), 8, 3), 8, {1}),
])
def test_common_intersection(sets, n, expected):
    assert common_intersection(fam(sets, n)) == expected


def test_common_intersection_empty_family():
    with pytest.raises(ValueError):
        common_intersection(Family(()))


def test_intersecting_and_trivial():
    star = fam(family_S((1,), 7, 3), 7)
    assert is_intersecting(star) and is_trivial(star)
    tri = fam(combinations(range(1, 4), 2), 3)
    assert is_intersecting(tri) and not is_trivial(tri)
    assert not is_intersecting(fam([(1, 2), (3, 4)], 4))


def test_cross_intersecting_examples():
    s1 = fam(family_S((1,), 9, 3), 9)
    assert cross_intersecting(s1, s1) == (True, None)
    ok, wit = cross_intersecting(fam([(1, 2)], 5), fam([(3, 4)], 5))
    assert not ok and [w.elements for w in wit] == [(1, 2), (3, 4)]


def test_cross_intersecting_against_pairwise_loop(rng):
    subs = all_subsets(8, 3)
    for _ in range(30):
        a = [subs[i] for i in rng.choice(len(subs), 6, replace=False)]
        b = [subs[i] for i in rng.choice(len(subs), 9, replace=False)]
        want = all(set(x) & set(y) for x in a for y in b)
        ok, wit = cross_intersecting(fam(a, 8), fam(b, 8))
        assert ok == want
        if not ok:
            assert not set(wit[0].elements) & set(wit[1].elements)


def test_blocker_pairs_cross_intersect_exactly():
    _, bl = paper_layout(12, 3)
    for f, m in BLOCKER_TABLE:
        g = [s for blk in bl.terminal_blocks(m) for s in blk.members]
        assert cross_intersecting(Family(bl[f].members), Family(tuple(g)))[0], f


def test_find_matching_examples():
    m = find_matching(fam(combinations(range(1, 7), 2), 6), 3)
    assert m is not None and len(m) == 3
    assert not any(set(a) & set(b) for a, b in combinations(m, 2))
    assert find_matching(fam(family_S((1,), 8, 3), 8), 2) is None
    assert find_matching(fam([(1, 2)], 4), 0) == []


def brute_has_matching(sets, size):
    return any(all(not set(a) & set(b) for a, b in combinations(c, 2)) for c in combinations(sets, size))


def test_find_matching_absence_is_exhaustive(rng):
    # greedy misses here: {1,2} first blocks both {1,3},{2,4}-style completions
    f = fam([(1, 2), (1, 3), (2, 4)], 4)
    assert find_matching(f, 2) is not None
    subs = all_subsets(7, 3)
    for _ in range(60):
        k = int(rng.integers(1, 21))
        sets = [subs[i] for i in rng.choice(len(subs), k, replace=False)]
        for size in (2, 3):
            got = find_matching(fam(sets, 7), size)
            assert (got is not None) == brute_has_matching(sets, size)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_large_family_has_matching(data):
    r = data.draw(st.integers(1, 3))
    p = data.draw(st.integers(1, 2))
    # below (p+1)r no (p+1)-matching fits in [n] at all
    n = data.draw(st.integers((p + 1) * r, 9))
    threshold = p * comb(n - 1, r - 1)
    total = comb(n, r)
    if threshold >= total:
        return
    k = data.draw(st.integers(threshold + 1, total))
    subs = all_subsets(n, r)
    idx = data.draw(st.permutations(range(total)))[:k]
    m = find_matching(fam([subs[i] for i in idx], n), p + 1)
    assert m is not None and len(m) == p + 1


def test_large_family_without_room_for_matching():
    # |f| = 4 > 1 * C(3, 2) but two disjoint 3-sets need 6 points
    f = fam(all_subsets(4, 3), 4)
    assert len(f) > comb(3, 2)
    assert find_matching(f, 2) is None


@pytest.mark.parametrize("elems,expected", [({1}, 28), (set(), 0)])
def test_count_meeting_star(elems, expected):
    assert count_meeting(fam(family_S((1,), 9, 3), 9), elems) == expected


def test_count_meeting_direct():
    assert count_meeting(fam([(1, 2), (2, 3), (4, 5)], 5), {2, 4}) == 3


@pytest.mark.parametrize("n,r,t,expected", [(8, 3, 2, 6), (7, 3, 1, 15), (6, 3, 3, 1), (5, 2, 2, 1), (6, 2, 1, 5)])
def test_max_t_intersecting(n, r, t, expected):
    assert max_t_intersecting(n, r, t) == expected


def test_max_t_intersecting_budget():
    with pytest.raises(ValueError):
        max_t_intersecting(10, 3, 1)
