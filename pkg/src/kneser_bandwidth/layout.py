"""Labelings of V(K(n, r)): the 29-block construction, two baselines, checks, file I/O.

A labeling is stored as ``forward[i] = label`` where ``i`` is the 0-based
colex index of a vertex and labels run over 1..C(n, r).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from pathlib import Path
from typing import Sequence

import numpy as np

from .combinatorics import RSubset, all_subsets, binom, colex_rank, subset_masks


class BlockId(str, Enum):
    S12 = "S12"
    S156 = "S156"
    S157 = "S157"
    Rest15 = "Rest15"
    S189 = "S189"
    S18_10 = "S18_10"
    RestS1p = "RestS1p"
    S346 = "S346"
    S347 = "S347"
    Rest34 = "Rest34"
    S356 = "S356"
    S357 = "S357"
    Rest35 = "Rest35"
    Rest3 = "Rest3"
    R = "R"
    RestS2 = "RestS2"
    Rest23 = "Rest23"
    S236 = "S236"
    S235 = "S235"
    Rest25 = "Rest25"
    S259 = "S259"
    S258 = "S258"
    RestS1pp = "RestS1pp"
    S168 = "S168"
    S167 = "S167"
    Rest14 = "Rest14"
    S146 = "S146"
    S145 = "S145"
    S13 = "S13"

    def __str__(self) -> str:
        return self.value


BLOCK_ORDER: tuple[BlockId, ...] = tuple(BlockId)
FIRST_HALF_BLOCKS = BLOCK_ORDER[:7]
SECOND_HALF_BLOCKS = BLOCK_ORDER[-7:]


def classify(s: Sequence[int]) -> BlockId | None:
    """Block of an r-set (r >= 3) under the construction; None for the S1 fill pool."""
    a, b, c = s[0], s[1], s[2]
    B = BlockId
    if a == 1:
        if b == 2:
            return B.S12
        if b == 3:
            return B.S13
        if b == 4:
            return B.S145 if c == 5 else B.S146 if c == 6 else B.Rest14
        if b == 5:
            return B.S156 if c == 6 else B.S157 if c == 7 else B.Rest15
        if b == 6 and c in (7, 8):
            return B.S167 if c == 7 else B.S168
        if b == 8 and c in (9, 10):
            return B.S189 if c == 9 else B.S18_10
        return None
    if a == 2:
        if b == 3:
            return B.S235 if c == 5 else B.S236 if c == 6 else B.Rest23
        if b == 5:
            return B.S258 if c == 8 else B.S259 if c == 9 else B.Rest25
        return B.RestS2
    if a == 3:
        if b == 4:
            return B.S346 if c == 6 else B.S347 if c == 7 else B.Rest34
        if b == 5:
            return B.S356 if c == 6 else B.S357 if c == 7 else B.Rest35
        return B.Rest3
    return B.R


@dataclass(frozen=True, eq=False)
class Labeling:
    """Bijection between the r-subsets of [n] and 1..C(n, r).

    Construction does not enforce bijectivity; :func:`validate` reports it.
    """

    n: int
    r: int
    forward: np.ndarray

    def __post_init__(self) -> None:
        fwd = np.array(self.forward, dtype=np.int64)
        if fwd.shape != (binom(self.n, self.r),):
            raise ValueError(f"forward map must have C({self.n},{self.r}) entries")
        fwd.flags.writeable = False
        object.__setattr__(self, "forward", fwd)

    @classmethod
    def from_order(cls, n: int, r: int, order: Sequence[int]) -> "Labeling":
        """``order[k]`` is the colex index of the vertex receiving label k+1."""
        order = np.asarray(order, dtype=np.int64)
        fwd = np.zeros(len(order), dtype=np.int64)
        fwd[order] = np.arange(1, len(order) + 1)
        return cls(n, r, fwd)

    @property
    def size(self) -> int:
        return len(self.forward)

    def is_bijection(self) -> bool:
        return bool(np.array_equal(np.sort(self.forward), np.arange(1, self.size + 1)))

    @cached_property
    def inverse(self) -> np.ndarray:
        """``inverse[label - 1]`` = colex index; requires a bijection."""
        if not self.is_bijection():
            raise ValueError("labeling is not a bijection")
        inv = np.empty(self.size, dtype=np.int64)
        inv[self.forward - 1] = np.arange(self.size)
        inv.flags.writeable = False
        return inv

    @cached_property
    def masks_by_label(self) -> np.ndarray:
        m = subset_masks(self.n, self.r)[self.inverse]
        m.flags.writeable = False
        return m

    def label_of(self, s: RSubset) -> int:
        return int(self.forward[colex_rank(s) - 1])

    def vertex_at(self, label: int) -> RSubset:
        return RSubset._trusted(all_subsets(self.n, self.r)[int(self.inverse[label - 1])], self.n)

    def reversed(self) -> "Labeling":
        return Labeling(self.n, self.r, self.size + 1 - self.forward)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Labeling):
            return NotImplemented
        return (self.n, self.r) == (other.n, other.r) and np.array_equal(self.forward, other.forward)

    def __hash__(self) -> int:
        return hash((self.n, self.r, self.forward.tobytes()))


@dataclass(frozen=True)
class Block:
    id: BlockId
    start: int
    end: int
    members: tuple[RSubset, ...]

    @property
    def size(self) -> int:
        return self.end - self.start + 1


@dataclass(frozen=True)
class BlockLayout:
    n: int
    r: int
    blocks: tuple[Block, ...]

    @cached_property
    def _by_id(self) -> dict[BlockId, Block]:
        return {b.id: b for b in self.blocks}

    def __getitem__(self, block_id: BlockId | str) -> Block:
        return self._by_id[BlockId(block_id)]

    @property
    def total(self) -> int:
        return binom(self.n, self.r)

    def index(self, block_id: BlockId | str) -> int:
        return BLOCK_ORDER.index(BlockId(block_id))

    def terminal_blocks(self, block_id: BlockId | str) -> tuple[Block, ...]:
        """The blocks from ``block_id`` through the last label."""
        return self.blocks[self.index(block_id):]


@dataclass(frozen=True)
class Feasibility:
    ok: bool
    condition: str | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


class InfeasibleLayout(ValueError):
    def __init__(self, feasibility: Feasibility):
        super().__init__(feasibility.message)
        self.feasibility = feasibility


def block_sizes(n: int, r: int) -> dict[str, int]:
    """Closed-form sizes of the families the construction is built from."""
    s1 = binom(n - 1, r - 1)
    head = binom(n - 2, r - 2) + binom(n - 5, r - 2) + binom(n - 9, r - 3) + binom(n - 10, r - 3)
    tail = binom(n - 3, r - 2) + binom(n - 4, r - 2) + binom(n - 7, r - 3) + binom(n - 8, r - 3)
    return {
        "S1": s1,
        "S1p": s1 // 2,
        "S1pp": s1 - s1 // 2,
        "Xp": s1 // 2 - head,
        "Xpp": s1 - s1 // 2 - tail,
        "S2": binom(n - 2, r - 1),
        "S3": binom(n - 3, r - 1),
        "total": binom(n, r),
    }


def feasibility(n: int, r: int) -> Feasibility:
    """Whether the 29-block construction is well defined for (n, r)."""
    if r < 3:
        return Feasibility(False, "r_min", f"r={r} < 3: triple-prefix blocks are undefined")
    if n < 10:
        return Feasibility(False, "n_min", f"n={n} < 10: ground set lacks element 10 needed by S18_10")
    z = block_sizes(n, r)
    if z["Xp"] < 0:
        return Feasibility(False, "x_prime", f"|X'| = {z['Xp']} < 0: forced members overflow S1'")
    if z["Xpp"] < 0:
        return Feasibility(False, "x_double_prime", f"|X''| = {z['Xpp']} < 0: forced members overflow S1''")
    head = z["S1p"] + z["S3"]
    if head > z["total"] // 2:
        return Feasibility(False, "first_half", f"|S1'|+|S3| = {head} exceeds floor(C(n,r)/2) = {z['total'] // 2}")
    if head > z["S1pp"] + z["S2"]:
        return Feasibility(False, "initial_side",
                           f"|S1'|+|S3| = {head} exceeds |S1''|+|S2| = {z['S1pp'] + z['S2']}")
    return Feasibility(True, None, "ok")


def paper_layout(n: int, r: int) -> tuple[Labeling, BlockLayout]:
    """The 29-block labeling; blocks in fixed order, colex order inside each block."""
    feas = feasibility(n, r)
    if not feas:
        raise InfeasibleLayout(feas)
    subsets = all_subsets(n, r)
    groups: dict[BlockId, list[int]] = {b: [] for b in BLOCK_ORDER}
    pool: list[int] = []
    for idx, s in enumerate(subsets):
        b = classify(s)
        if b is None:
            pool.append(idx)
        else:
            groups[b].append(idx)
    xp = block_sizes(n, r)["Xp"]
    groups[BlockId.RestS1p] = pool[:xp]
    groups[BlockId.RestS1pp] = pool[xp:]

    order: list[int] = []
    blocks = []
    for b in BLOCK_ORDER:
        idxs = groups[b]
        start = len(order) + 1
        order.extend(idxs)
        members = tuple(RSubset._trusted(subsets[i], n) for i in idxs)
        blocks.append(Block(b, start, len(order), members))
    return Labeling.from_order(n, r, order), BlockLayout(n, r, tuple(blocks))


def trivial_layout(n: int, r: int) -> Labeling:
    """Star S1 split between both ends of the label range, everything else in between."""
    if n < 2 * r:
        warnings.warn(f"K({n},{r}) has no edges; the trivial bound is degenerate", stacklevel=2)
    subsets = all_subsets(n, r)
    star = [i for i, s in enumerate(subsets) if s[0] == 1]
    rest = [i for i, s in enumerate(subsets) if s[0] != 1]
    half = len(star) // 2
    return Labeling.from_order(n, r, star[:half] + rest + star[half:])


def bfs_layout(n: int, r: int) -> Labeling:
    """Reverse breadth-first (Cuthill-McKee style) order from the colex-least vertex.

    Neighbors are enqueued in colex order; the graph is regular so degree
    ties are the only ties. Unreached components restart from their
    colex-least vertex.
    """
    masks = subset_masks(n, r)
    total = len(masks)
    visited = np.zeros(total, dtype=bool)
    order: list[int] = []
    for root in range(total):
        if visited[root]:
            continue
        visited[root] = True
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            unseen = np.flatnonzero(~visited)
            if unseen.size:
                nbrs = unseen[(masks[unseen] & masks[v]) == 0]
                visited[nbrs] = True
                queue.extend(nbrs.tolist())
        order.extend(queue)
    return Labeling.from_order(n, r, order[::-1])


def validate(l: Labeling, bl: BlockLayout | None = None) -> list[str]:
    """Violations of bijectivity and, when given, of the block structure. Empty means ok."""
    problems: list[str] = []
    total = l.size
    fwd = l.forward
    out_of_range = np.flatnonzero((fwd < 1) | (fwd > total))
    for i in out_of_range[:10]:
        problems.append(f"label {int(fwd[i])} out of range at vertex {all_subsets(l.n, l.r)[i]}")
    counts = np.bincount(np.clip(fwd, 0, total + 1), minlength=total + 2)[1:total + 1]
    for lab in np.flatnonzero(counts > 1)[:10]:
        problems.append(f"not injective at {int(lab) + 1}")
    for lab in np.flatnonzero(counts == 0)[:10]:
        problems.append(f"not surjective: label {int(lab) + 1} unused")
    if bl is None:
        return problems
    if (bl.n, bl.r) != (l.n, l.r):
        return problems + [f"block layout is for K({bl.n},{bl.r}), labeling for K({l.n},{l.r})"]
    if tuple(b.id for b in bl.blocks) != BLOCK_ORDER:
        problems.append("blocks are not in the 29-block order")
    expect = 1
    for b in bl.blocks:
        if b.start != expect:
            problems.append(f"block {b.id} starts at {b.start}, expected {expect}")
        if b.size != len(b.members):
            problems.append(f"block {b.id} interval length {b.size} != member count {len(b.members)}")
        expect = b.end + 1
        for m in b.members:
            cls = classify(m.elements)
            pool_block = b.id in (BlockId.RestS1p, BlockId.RestS1pp)
            if (cls is None) != pool_block or (cls is not None and cls != b.id):
                problems.append(f"{m} does not belong to block {b.id}")
            lab = l.label_of(m)
            if not b.start <= lab <= b.end:
                problems.append(f"member outside block interval: {m} of {b.id} has label {lab}")
    if expect != total + 1:
        problems.append(f"blocks cover [1, {expect - 1}] instead of [1, {total}]")
    s1 = binom(l.n - 1, l.r - 1)
    first = sum(bl[b].size for b in FIRST_HALF_BLOCKS)
    second = sum(bl[b].size for b in SECOND_HALF_BLOCKS)
    if first != s1 // 2 or second != s1 - s1 // 2:
        problems.append(f"halving broken: |S1'|={first}, |S1''|={second}, |S1|={s1}")
    for b in FIRST_HALF_BLOCKS + SECOND_HALF_BLOCKS:
        if any(m.elements[0] != 1 for m in bl[b].members):
            problems.append(f"block {b} contains a set without element 1")
    return problems


def format_layout(l: Labeling) -> str:
    subsets = all_subsets(l.n, l.r)
    lines = [f"n={l.n} r={l.r} count={l.size}"]
    for label, idx in enumerate(l.inverse, start=1):
        lines.append(f"{label}," + " ".join(map(str, subsets[idx])))
    return "\n".join(lines) + "\n"


def write_layout(path: str | Path, l: Labeling) -> None:
    Path(path).write_text(format_layout(l), encoding="ascii", newline="\n")


def parse_layout(text: str) -> Labeling:
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty layout file")
    try:
        fields = dict(tok.split("=", 1) for tok in lines[0].split())
        n, r, count = int(fields["n"]), int(fields["r"]), int(fields["count"])
    except (KeyError, ValueError) as exc:
        raise ValueError(f"bad header line {lines[0]!r}") from exc
    if count != binom(n, r):
        raise ValueError(f"header count {count} != C({n},{r})")
    body = [ln for ln in lines[1:] if ln.strip()]
    if len(body) != count:
        raise ValueError(f"expected {count} records, found {len(body)}")
    fwd = np.zeros(count, dtype=np.int64)
    seen = np.zeros(count, dtype=bool)
    for ln in body:
        label_s, elems_s = ln.split(",", 1)
        s = RSubset(tuple(int(x) for x in elems_s.split()), n)
        if s.r != r:
            raise ValueError(f"record {ln!r} is not an {r}-subset")
        idx = colex_rank(s) - 1
        if seen[idx]:
            raise ValueError(f"vertex {s} listed twice")
        seen[idx] = True
        fwd[idx] = int(label_s)
    return Labeling(n, r, fwd)


def read_layout(path: str | Path) -> Labeling:
    return parse_layout(Path(path).read_text(encoding="ascii"))


def build_layout(n: int, r: int, kind: str) -> Labeling:
    if kind == "paper":
        return paper_layout(n, r)[0]
    if kind == "trivial":
        return trivial_layout(n, r)
    if kind == "bfs":
        return bfs_layout(n, r)
    raise ValueError(f"unknown layout kind {kind!r}")
