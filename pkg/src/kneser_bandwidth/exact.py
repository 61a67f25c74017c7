"""Exact minimum bandwidth of small graphs by branch and bound.

The search answers "is there a layout with dilation <= k?" for increasing k,
starting from the classic lower bounds. Vertices are placed left to right.
Each unplaced vertex gets a deadline (first placed neighbor's position + k),
and a partial layout is abandoned once the deadlines cannot all be met.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .combinatorics import all_subsets, binom, to_mask

MAX_VERTICES = 24
ORACLE_MAX_VERTICES = 10


@dataclass(frozen=True, eq=False)
class SmallGraph:
    adjacency: np.ndarray

    def __post_init__(self) -> None:
        a = np.array(self.adjacency, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency must be square")
        if a.shape[0] > MAX_VERTICES:
            raise ValueError(f"at most {MAX_VERTICES} vertices, got {a.shape[0]}")
        if not np.array_equal(a, a.T) or a.diagonal().any():
            raise ValueError("adjacency must be symmetric and irreflexive")
        a.flags.writeable = False
        object.__setattr__(self, "adjacency", a)

    @property
    def order(self) -> int:
        return self.adjacency.shape[0]

    def neighbor_masks(self) -> list[int]:
        return [int(sum(1 << j for j in np.flatnonzero(row))) for row in self.adjacency]

    def edges(self) -> list[tuple[int, int]]:
        i, j = np.nonzero(np.triu(self.adjacency))
        return list(zip(i.tolist(), j.tolist()))


def materialize(n: int, r: int) -> SmallGraph:
    """Explicit K(n, r); vertex i is the i-th r-subset in colex order."""
    total = binom(n, r)
    if total > MAX_VERTICES:
        raise ValueError(f"C({n},{r}) = {total} exceeds {MAX_VERTICES} vertices")
    masks = [to_mask(s) for s in all_subsets(n, r)]
    adj = np.array([[a & b == 0 for b in masks] for a in masks], dtype=bool)
    return SmallGraph(adj)


def layout_dilation(g: SmallGraph, order: list[int]) -> int:
    """Dilation of the layout that puts ``order[p]`` at position p."""
    pos = {v: p for p, v in enumerate(order)}
    return max((abs(pos[u] - pos[v]) for u, v in g.edges()), default=0)


def _components(nbrs: list[int]) -> list[list[int]]:
    seen = 0
    comps = []
    for s in range(len(nbrs)):
        if seen >> s & 1:
            continue
        comp, queue = [], deque([s])
        seen |= 1 << s
        while queue:
            v = queue.popleft()
            comp.append(v)
            rest = nbrs[v] & ~seen
            seen |= rest
            while rest:
                low = rest & -rest
                queue.append(low.bit_length() - 1)
                rest ^= low
        comps.append(sorted(comp))
    return comps


def _eccentricity(nbrs: list[int], s: int) -> int:
    seen, frontier, d = 1 << s, 1 << s, 0
    while True:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= nbrs[low.bit_length() - 1]
            f ^= low
        nxt &= ~seen
        if not nxt:
            return d
        seen |= nxt
        frontier = nxt
        d += 1


def lower_bound(g: SmallGraph) -> int:
    """max(ceil(max degree / 2), ceil((N_c - 1) / diam_c) over components)."""
    nbrs = g.neighbor_masks()
    if not any(nbrs):
        return 0
    lb = -(-max(bin(m).count("1") for m in nbrs) // 2)
    for comp in _components(nbrs):
        if len(comp) > 1:
            diam = max(_eccentricity(nbrs, v) for v in comp)
            lb = max(lb, -(-(len(comp) - 1) // diam))
    return lb


@dataclass(frozen=True)
class BandwidthResult:
    value: int | None  # None when the budget ran out first
    order: tuple[int, ...] | None  # order[p] = vertex at position p, best layout found
    lower: int
    upper: int
    nodes: int

    @property
    def exact(self) -> bool:
        return self.value is not None

    def labeling(self) -> dict[int, int]:
        """Vertex -> 1-based label for the best layout."""
        return {v: p + 1 for p, v in enumerate(self.order or ())}


class _Budget(Exception):
    pass


class _Search:
    def __init__(self, nbrs: list[int], dfs_order: list[int], budget: int):
        self.nbrs = nbrs
        self.N = len(nbrs)
        self.dfs_order = dfs_order
        self.budget = budget
        self.nodes = 0

    def feasible(self, k: int) -> list[int] | None:
        N = self.N
        deadline = [N] * N  # latest allowed position; N means unconstrained
        placed: list[int] = []
        big = [0] * N  # big[v] = mask of vertices with larger dfs rank than v

        rank = {v: i for i, v in enumerate(self.dfs_order)}
        for v in range(N):
            big[v] = sum(1 << u for u in range(N) if rank[u] > rank[v])

        def deadlines_ok(p: int, unplaced: int) -> bool:
            # positions p..D must hold every vertex due by D
            counts = [0] * (k + 1)
            u = unplaced
            while u:
                low = u & -u
                w = low.bit_length() - 1
                u ^= low
                d = deadline[w]
                if d < N:
                    if d < p:
                        return False
                    counts[d - p] += 1
            total = 0
            for off, c in enumerate(counts):
                total += c
                if total > off + 1:
                    return False
            return True

        def go(p: int, unplaced: int) -> bool:
            self.nodes += 1
            if self.nodes > self.budget:
                raise _Budget
            if p == N:
                return True
            # mirror-pair break: the last vertex must outrank the first
            if placed and unplaced & big[placed[0]] == 0:
                return False
            forced = [w for w in self.dfs_order if unplaced >> w & 1 and deadline[w] == p]
            if len(forced) > 1:
                return False
            cands = forced or [w for w in self.dfs_order if unplaced >> w & 1]
            for v in cands:
                touched = []
                rest = self.nbrs[v] & unplaced & ~(1 << v)
                while rest:
                    low = rest & -rest
                    w = low.bit_length() - 1
                    rest ^= low
                    if deadline[w] == N:
                        deadline[w] = p + k
                        touched.append(w)
                remaining = unplaced & ~(1 << v)
                placed.append(v)
                if deadlines_ok(p + 1, remaining) and go(p + 1, remaining):
                    return True
                placed.pop()
                for w in touched:
                    deadline[w] = N
            return False

        if go(0, (1 << N) - 1):
            return list(placed)
        return None


def _cuthill_mckee(nbrs: list[int], dfs_order: list[int]) -> list[int]:
    rank = {v: i for i, v in enumerate(dfs_order)}
    seen = 0
    out: list[int] = []
    for s in sorted(range(len(nbrs)), key=lambda v: rank[v]):
        if seen >> s & 1:
            continue
        seen |= 1 << s
        queue = deque([s])
        while queue:
            v = queue.popleft()
            out.append(v)
            fresh = [u for u in range(len(nbrs)) if nbrs[v] >> u & 1 and not seen >> u & 1]
            fresh.sort(key=lambda u: (bin(nbrs[u]).count("1"), rank[u]))
            for u in fresh:
                seen |= 1 << u
                queue.append(u)
    return out


def bandwidth_exact(g: SmallGraph, budget: int = 5_000_000) -> BandwidthResult:
    """Exact bandwidth with an optimal layout, or the bracketing interval if ``budget`` runs out.

    ``budget`` counts search-tree nodes across all decision rounds.
    """
    N = g.order
    nbrs = g.neighbor_masks()
    if N <= 1 or not any(nbrs):
        return BandwidthResult(0, tuple(range(N)), 0, 0, 0)
    # degree desc, ties by index (colex rank for materialized Kneser graphs)
    dfs_order = sorted(range(N), key=lambda v: (-bin(nbrs[v]).count("1"), v))
    best_order = _cuthill_mckee(nbrs, dfs_order)
    upper = layout_dilation(g, best_order)
    identity_dil = layout_dilation(g, list(range(N)))
    if identity_dil < upper:
        best_order, upper = list(range(N)), identity_dil
    lower = lower_bound(g)
    search = _Search(nbrs, dfs_order, budget)
    k = lower
    while k < upper:
        try:
            found = search.feasible(k)
        except _Budget:
            return BandwidthResult(None, tuple(best_order), k, upper, search.nodes)
        if found is not None:
            return BandwidthResult(k, tuple(found), k, k, search.nodes)
        k += 1
    return BandwidthResult(upper, tuple(best_order), upper, upper, search.nodes)


def bandwidth_exhaustive(g: SmallGraph) -> tuple[int, tuple[int, ...]]:
    """Independent oracle: depth-first over all orderings, pruned only by the incumbent."""
    N = g.order
    if N > ORACLE_MAX_VERTICES:
        raise ValueError(f"exhaustive oracle limited to {ORACLE_MAX_VERTICES} vertices")
    adj = g.adjacency
    best = [max(N - 1, 0), tuple(range(N))]
    pos = [-1] * N
    seq: list[int] = []

    def go(cur: int) -> None:
        p = len(seq)
        if p == N:
            if cur < best[0]:
                best[0], best[1] = cur, tuple(seq)
            return
        for v in range(N):
            if pos[v] >= 0:
                continue
            stretch = max((p - pos[u] for u in range(N) if adj[v, u] and pos[u] >= 0), default=0)
            worst = max(cur, stretch)
            if worst >= best[0]:
                continue
            pos[v] = p
            seq.append(v)
            go(worst)
            seq.pop()
            pos[v] = -1

    if N:
        best[0] = layout_dilation(g, list(range(N)))
        go(0)
    return best[0], best[1]


def all_orderings_min(g: SmallGraph) -> int:
    """Unpruned minimum over every permutation; only usable for tiny graphs."""

    N = g.order
    edges = g.edges()
    best = N
    for perm in permutations(range(N)):
        pos = {v: p for p, v in enumerate(perm)}
        best = min(best, max((abs(pos[u] - pos[v]) for u, v in edges), default=0))
    return best
