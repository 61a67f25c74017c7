"""Set-family predicates and small extremal oracles."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx
import numpy as np

from .combinatorics import RSubset, all_subsets, binom


@dataclass(frozen=True)
class Family:
    """A duplicate-free family of r-subsets over a common ground set [n]."""

    members: tuple[RSubset, ...]

    def __post_init__(self) -> None:
        members = tuple(self.members)
        object.__setattr__(self, "members", members)
        if members:
            n, r = members[0].n, members[0].r
            for m in members:
                if m.n != n or m.r != r:
                    raise ValueError("family members must share ambient (n, r)")
            if len(set(members)) != len(members):
                raise ValueError("family has duplicate members")

    @classmethod
    def of(cls, sets: Iterable[Sequence[int] | RSubset], n: int) -> "Family":
        return cls(tuple(s if isinstance(s, RSubset) else RSubset(tuple(s), n) for s in sets))

    @property
    def n(self) -> int:
        return self.members[0].n

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def masks(self) -> np.ndarray:
        return np.fromiter((m.mask for m in self.members), dtype=np.int64, count=len(self.members))


def _nonempty(f: Family) -> None:
    if not len(f):
        raise ValueError("operation undefined on an empty family")


def common_intersection(s: Family) -> frozenset[int]:
    _nonempty(s)
    return frozenset(reduce(lambda acc, m: acc & set(m.elements), s.members[1:], set(s.members[0].elements)))


def is_intersecting(a: Family) -> bool:
    _nonempty(a)
    masks = [m.mask for m in a.members]
    return all(x & y for x, y in combinations(masks, 2))


def is_trivial(a: Family) -> bool:
    return bool(common_intersection(a))


def cross_intersecting(a: Family, b: Family, chunk: int = 2048) -> tuple[bool, tuple[RSubset, RSubset] | None]:
    """Whether every member of ``a`` meets every member of ``b``.

    When not, also returns the first disjoint pair found (scanning ``a`` in
    order, then ``b``).
    """
    if not len(a) or not len(b):
        return True, None
    if a.n != b.n:
        raise ValueError("families live on different ground sets")
    ma, mb = a.masks(), b.masks()
    for lo in range(0, len(ma), chunk):
        block = (ma[lo:lo + chunk, None] & mb[None, :]) == 0
        if block.any():
            i, j = np.unravel_index(np.argmax(block), block.shape)
            return False, (a.members[lo + int(i)], b.members[int(j)])
    return True, None


def find_matching(f: Family, size: int) -> list[RSubset] | None:
    """``size`` pairwise-disjoint members of ``f``, or None if none exist.

    Greedy in the given order first; falls back to exhaustive backtracking,
    so ``None`` is a proof of absence.
    """
    if size <= 0:
        return []
    members = list(f.members)
    masks = [m.mask for m in members]

    chosen: list[int] = []
    used = 0
    for i, m in enumerate(masks):
        if m & used == 0:
            chosen.append(i)
            used |= m
            if len(chosen) == size:
                return [members[i] for i in chosen]

    def extend(start: int, used: int, picked: list[int]) -> list[int] | None:
        if len(picked) == size:
            return picked
        for i in range(start, len(masks) - (size - len(picked)) + 1):
            if masks[i] & used == 0:
                found = extend(i + 1, used | masks[i], picked + [i])
                if found is not None:
                    return found
        return None

    found = extend(0, 0, [])
    return None if found is None else [members[i] for i in found]


def count_meeting(f: Family, elems: Iterable[int]) -> int:
    """Number of members containing at least one element of ``elems``."""
    elems = set(elems)
    return sum(1 for m in f.members if elems.intersection(m.elements))


MAX_CLIQUE_VERTICES = 70


def max_t_intersecting(n: int, r: int, t: int) -> int:
    """Largest t-intersecting family of r-subsets of [n], by exact max clique."""
    total = binom(n, r)
    if total > MAX_CLIQUE_VERTICES:
        raise ValueError(f"C({n},{r}) = {total} exceeds the exhaustive budget of {MAX_CLIQUE_VERTICES}")
    if t > r:
        return 0
    sets = [frozenset(s) for s in all_subsets(n, r)]
    g = nx.Graph()
    g.add_nodes_from(range(len(sets)))
    g.add_edges_from((i, j) for i, j in combinations(range(len(sets)), 2) if len(sets[i] & sets[j]) >= t)
    clique, _ = nx.max_weight_clique(g, weight=None)
    return len(clique)
