"""Right-blocker certificates for the 29-block layout and the upper bound they give.

For a first-row block F = [x, y] and a terminal label interval G that is
cross-intersecting with F, every edge leaving F has stretch at most
max(y - 1, C(n, r) - |G| - x). Each of the 14 first-row blocks other than R
is paired with a terminal interval that starts at a named block M.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce

from .combinatorics import RSubset
from .errors import BudgetExceeded, CertificateError
from .families import Family, cross_intersecting
from .layout import BlockId, BlockLayout, feasibility, InfeasibleLayout, paper_layout

B = BlockId

BLOCKER_TABLE: tuple[tuple[BlockId, BlockId], ...] = (
    (B.S12, B.RestS2),
    (B.S156, B.S236),
    (B.S157, B.S235),
    (B.Rest15, B.Rest25),
    (B.S189, B.S259),
    (B.S18_10, B.S258),
    (B.RestS1p, B.RestS1pp),
    (B.S346, B.S168),
    (B.S347, B.S167),
    (B.Rest34, B.Rest14),
    (B.S356, B.S146),
    (B.S357, B.S145),
    (B.Rest35, B.S145),
    (B.Rest3, B.S13),
)

EXACT_PAIR_BUDGET = 10**8


def blocker_table() -> list[tuple[BlockId, BlockId]]:
    return list(BLOCKER_TABLE)


def _common(members: tuple[RSubset, ...]) -> frozenset[int]:
    if not members:
        raise CertificateError("empty block has no common intersection")
    return frozenset(reduce(lambda acc, m: acc & set(m.elements), members[1:], set(members[0].elements)))


def terminal_interval(bl: BlockLayout, m_block: BlockId) -> tuple[int, int]:
    return bl[m_block].start, bl.total


def verify_blocker_sufficient(bl: BlockLayout, f_block: BlockId, m_block: BlockId) -> tuple[bool, dict[BlockId, int | None]]:
    """Check that every block in the terminal interval shares a common element with F.

    Returns ``(ok, witnesses)`` with the smallest shared element per block
    (None where the check fails).
    """
    core = _common(bl[f_block].members)
    witnesses: dict[BlockId, int | None] = {}
    for blk in bl.terminal_blocks(m_block):
        shared = core & _common(blk.members)
        witnesses[blk.id] = min(shared) if shared else None
    return all(w is not None for w in witnesses.values()), witnesses


def verify_blocker_exact(bl: BlockLayout, f_block: BlockId, m_block: BlockId,
                         budget: int = EXACT_PAIR_BUDGET) -> tuple[bool, tuple[RSubset, RSubset] | None]:
    """Exhaustive cross-intersection of F's members against the terminal interval."""
    f_members = bl[f_block].members
    g_members = tuple(m for blk in bl.terminal_blocks(m_block) for m in blk.members)
    pairs = len(f_members) * len(g_members)
    if pairs > budget:
        raise BudgetExceeded(f"{pairs} pairs exceeds exact budget {budget}")
    return cross_intersecting(Family(f_members), Family(g_members))


def lemma31_bound(x: int, y: int, g_size: int, total: int) -> int:
    """max(y - 1, total - (|G| + x)) for F = [x, y] and a terminal blocker of size |G|."""
    if not 1 <= x <= y <= total:
        raise ValueError(f"F = [{x}, {y}] not inside [1, {total}]")
    if not 0 <= g_size <= total:
        raise ValueError(f"|G| = {g_size} not a terminal interval size for total {total}")
    return max(y - 1, total - (g_size + x))


# Complete sets of sibling blocks and the family they form, merged bottom-up.
_MERGES: tuple[tuple[str, frozenset[str]], ...] = (
    ("S15", frozenset({"S156", "S157", "Rest15"})),
    ("S34", frozenset({"S346", "S347", "Rest34"})),
    ("S35", frozenset({"S356", "S357", "Rest35"})),
    ("S23", frozenset({"Rest23", "S236", "S235"})),
    ("S25", frozenset({"Rest25", "S259", "S258"})),
    ("S14", frozenset({"Rest14", "S146", "S145"})),
    ("S1'", frozenset({"S12", "S15", "S189", "S18_10", "RestS1p"})),
    ("S1''", frozenset({"RestS1pp", "S168", "S167", "S14", "S13"})),
    ("S3", frozenset({"S34", "S35", "Rest3"})),
    ("S2", frozenset({"RestS2", "S23", "S25"})),
)

_PAIRS = {"S12", "S13", "S14", "S15", "S23", "S25", "S34", "S35"}
_TRIPLES = {"S156", "S157", "S189", "S18_10", "S346", "S347", "S356", "S357",
            "S236", "S235", "S259", "S258", "S168", "S167", "S146", "S145"}


def _merge(names: list[str]) -> list[str]:
    have = list(names)
    changed = True
    while changed:
        changed = False
        for parent, kids in _MERGES:
            if kids <= set(have):
                pos = min(have.index(k) for k in kids)
                have = [h for h in have if h not in kids]
                have.insert(min(pos, len(have)), parent)
                changed = True
    return have


@dataclass(frozen=True)
class SizeDecomposition:
    f_block: BlockId
    families: tuple[str, ...]
    sizes: dict[str, int] = field(compare=False)
    lhs: int  # |G| + x (or |G| for S12)
    rhs: int  # 1 + sum of family sizes (no leading 1 for S12)
    pair_indices: tuple[int, ...]
    eq6_form: bool

    @property
    def exact(self) -> bool:
        return self.lhs == self.rhs


def size_identity(bl: BlockLayout, f_block: BlockId) -> SizeDecomposition:
    """Decompose |G| + x into named, pairwise disjoint families.

    ``eq6_form`` records whether the decomposition has the shape
    1 + |S1' or S1''| + |S_ab| + |S_cd| + |S_rst| + |S_r's't'| with b + d = 7.
    For S12 the relation checked is |G| = |S2| + |S1''| instead.
    """
    f_block = BlockId(f_block)
    m_block = dict(BLOCKER_TABLE)[f_block]
    before = [b.id.value for b in bl.blocks[:bl.index(f_block)]]
    after = [b.id.value for b in bl.terminal_blocks(m_block)]
    g_size = bl.total - bl[m_block].start + 1
    x = bl[f_block].start

    sizes: dict[str, int] = {b.id.value: b.size for b in bl.blocks}
    for parent, kids in _MERGES:
        sizes[parent] = sum(sizes[k] for k in kids)

    if f_block == B.S12:
        fams = tuple(_merge(after))
        rhs = sum(sizes[f] for f in fams)
        pairs = tuple(int(f[2]) for f in fams if f in _PAIRS)
        return SizeDecomposition(f_block, fams, sizes, g_size, rhs, pairs, set(fams) == {"S2", "S1''"})

    fams = tuple(_merge(before) + _merge(after))
    rhs = 1 + sum(sizes[f] for f in fams)
    halves = [f for f in fams if f in ("S1'", "S1''")]
    pairs = tuple(int(f[2]) for f in fams if f in _PAIRS)
    triples = [f for f in fams if f in _TRIPLES]
    eq6 = (len(fams) == 5 and len(halves) == 1 and len(pairs) == 2 and sum(pairs) == 7
           and len(triples) == 2)
    if len(set(fams)) != len(fams):
        raise CertificateError(f"decomposition for {f_block} repeats a family: {fams}")
    return SizeDecomposition(f_block, fams, sizes, g_size + x, rhs, pairs, eq6)


@dataclass(frozen=True)
class BlockerCert:
    f_block: BlockId
    m_block: BlockId
    x_start: int
    y_end: int
    g_start: int
    g_size: int
    past_midpoint: bool
    verified_sufficient: bool
    witnesses: dict[BlockId, int | None] = field(compare=False)
    verified_exact: bool | None  # None when over the pairwise budget
    exact_counterexample: tuple[RSubset, RSubset] | None
    lemma31: int


def certify(bl: BlockLayout, f_block: BlockId, m_block: BlockId, exact: bool = True,
            budget: int = EXACT_PAIR_BUDGET) -> BlockerCert:
    """Run both checks on one (F, M) pair and record the resulting stretch bound."""
    fb = bl[f_block]
    g_start, total = terminal_interval(bl, m_block)
    g_size = total - g_start + 1
    ok, wit = verify_blocker_sufficient(bl, f_block, m_block)
    verified_exact, counter = None, None
    if exact:
        try:
            verified_exact, counter = verify_blocker_exact(bl, f_block, m_block, budget)
        except BudgetExceeded:
            pass
    return BlockerCert(
        f_block=BlockId(f_block), m_block=BlockId(m_block),
        x_start=fb.start, y_end=fb.end, g_start=g_start, g_size=g_size,
        past_midpoint=2 * g_start > total,
        verified_sufficient=ok, witnesses=wit,
        verified_exact=verified_exact, exact_counterexample=counter,
        lemma31=lemma31_bound(fb.start, fb.end, g_size, total),
    )


def certify_all(bl: BlockLayout, exact: bool = True, budget: int = EXACT_PAIR_BUDGET) -> list[BlockerCert]:
    return [certify(bl, f, m, exact=exact, budget=budget) for f, m in BLOCKER_TABLE]


def middle_bound(bl: BlockLayout) -> int:
    """C(n, r) - |S1'| - |S3|: bound on edges leaving the wraparound block R."""
    return bl.total - (bl[B.R].start - 1)


def certified_bound_from(bl: BlockLayout, certs: list[BlockerCert]) -> int:
    failed = [c.f_block.value for c in certs if not c.verified_sufficient]
    if failed:
        raise CertificateError(f"right-blocker check failed for {', '.join(failed)}")
    return max([middle_bound(bl)] + [c.lemma31 for c in certs])


def certified_upper_bound(n: int, r: int) -> int:
    """Integer upper bound on dilation(paper_layout(n, r)) from the verified certificates."""
    feas = feasibility(n, r)
    if not feas:
        raise InfeasibleLayout(feas)
    _, bl = paper_layout(n, r)
    return certified_bound_from(bl, certify_all(bl, exact=False))
