"""The Kneser graph K(n, r), kept implicit.

Vertices are r-subsets of [n]; two vertices are adjacent when disjoint.
Internally a vertex is its n-bit mask, so adjacency is a single AND.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

import numpy as np

from .combinatorics import RSubset, binom, subset_masks


@dataclass(frozen=True)
class KneserGraph:
    n: int
    r: int
    vertex_count: int = field(init=False)
    edgeless: bool = field(init=False)

    def __post_init__(self) -> None:
        if self.n < 1 or self.r < 1 or self.r > self.n:
            raise ValueError(f"need 1 <= r <= n, got n={self.n}, r={self.r}")
        object.__setattr__(self, "vertex_count", binom(self.n, self.r))
        object.__setattr__(self, "edgeless", self.n < 2 * self.r)

    @property
    def degree(self) -> int:
        return binom(self.n - self.r, self.r)

    def _check(self, v: RSubset) -> None:
        if v.n != self.n or v.r != self.r:
            raise ValueError(f"vertex {v} is not an {self.r}-subset of [{self.n}]")

    def is_edge(self, u: RSubset, v: RSubset) -> bool:
        self._check(u)
        self._check(v)
        return u.mask & v.mask == 0

    def neighbors(self, v: RSubset) -> Iterator[RSubset]:
        """r-subsets of the complement of ``v``, in colex order."""
        self._check(v)
        rest = [e for e in range(1, self.n + 1) if e not in v.elements]
        for s in sorted(combinations(rest, self.r), key=lambda s: s[::-1]):
            yield RSubset._trusted(s, self.n)

    def diameter(self, method: str = "formula") -> int:
        if method == "formula":
            return diameter_formula(self.n, self.r)
        if method == "bfs":
            return diameter_bfs(self.n, self.r)
        raise ValueError(f"unknown diameter method {method!r}")


def diameter_formula(n: int, r: int) -> int:
    """ceil((r - 1) / (n - 2r)) + 1, valid for n > 2r."""
    if n <= 2 * r:
        raise ValueError(f"diameter formula needs n > 2r, got n={n}, r={r}")
    return -(-(r - 1) // (n - 2 * r)) + 1


def bfs_distances(masks: np.ndarray, source: int) -> np.ndarray:
    """Hop distances from ``source`` over the disjointness graph; -1 if unreachable."""
    dist = np.full(len(masks), -1, dtype=np.int64)
    dist[source] = 0
    frontier = np.array([source])
    d = 0
    while frontier.size:
        d += 1
        unseen = np.flatnonzero(dist < 0)
        if not unseen.size:
            break
        hit = np.zeros(unseen.size, dtype=bool)
        for chunk in np.array_split(frontier, max(1, frontier.size // 256)):
            hit |= ((masks[chunk][:, None] & masks[unseen][None, :]) == 0).any(axis=0)
        frontier = unseen[hit]
        dist[frontier] = d
    return dist


def diameter_bfs(n: int, r: int) -> int:
    """Eccentricity of {1..r}; by vertex-transitivity this is the diameter."""
    g = KneserGraph(n, r)
    if g.edgeless and g.vertex_count > 1:
        raise ValueError(f"K({n},{r}) has no edges")
    dist = bfs_distances(subset_masks(n, r), 0)
    if (dist < 0).any():
        raise ValueError(f"K({n},{r}) is disconnected")
    return int(dist.max())
