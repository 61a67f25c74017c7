"""Closed-form bandwidth bounds for K(n, r) in exact rationals, and comparison reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable

from .certificates import certified_upper_bound
from .combinatorics import binom
from .dilation import dilation
from .layout import InfeasibleLayout, build_layout, feasibility

REGIME_MEANINGFUL = "meaningful"
REGIME_NOT_MEANINGFUL = "not-meaningful"
REGIME_NOT_APPLICABLE = "not-applicable"


def trivial_upper(n: int, r: int) -> int:
    """C(n, r) - floor(C(n-1, r-1) / 2): split a maximum star over both ends."""
    if n < 2 * r:
        raise ValueError(f"trivial bound needs n >= 2r, got n={n}, r={r}")
    return binom(n, r) - binom(n - 1, r - 1) // 2


def asym_upper_terms(n: int, r: int) -> Fraction:
    """C(n,r) - C(n-1,r-1)/2 - 2 n^(r-2)/(r-2)! + (r+2) n^(r-3)/(r-3)!  (r >= 3)."""
    if r < 3:
        raise ValueError("the asymptotic expression needs r >= 3")
    return (binom(n, r) - Fraction(binom(n - 1, r - 1), 2)
            - Fraction(2 * n ** (r - 2), factorial(r - 2))
            + Fraction((r + 2) * n ** (r - 3), factorial(r - 3)))


def lower_thm27(n: int, r: int) -> Fraction:
    """Lower bound on the dilation of every labeling, proven for r >= 4 and n large:

        C(n,r) - C(n-1,r-1)/2 - 2 n^(r-2)/(r-2)! + (r+2) n^(r-3)/(r-3)! - 9 r^4 n^(r-4)
    """
    if r < 4:
        raise ValueError(f"the lower bound is only established for r >= 4, got r={r}")
    return asym_upper_terms(n, r) - 9 * r**4 * n ** (r - 4)


def regime(n: int, r: int) -> str:
    """Whether the lower bound says anything beyond the trivial C(n,r)/2."""
    if r < 4:
        return REGIME_NOT_APPLICABLE
    return REGIME_MEANINGFUL if lower_thm27(n, r) > Fraction(binom(n, r), 2) else REGIME_NOT_MEANINGFUL


@dataclass(frozen=True)
class ProofConstants:
    N: int
    ell: int
    m: Fraction


def proof_constants(n: int, r: int) -> ProofConstants:
    """N, ell and m(r, n) from the lower-bound argument, exactly."""
    if not (r >= 3 and n >= r + 5):
        raise ValueError(f"need r >= 3 and n >= r + 5, got n={n}, r={r}")
    N = -(-binom(n - 1, r - 1) // 2) - r * binom(n - 2, r - 2)
    ell = binom(n - 2, r - 2) + 3 * r**2 * binom(n - 3, r - 3)
    m = Fraction(sum(binom(n - c, r - 2) for c in (2, 3, 4, 5)), 2)
    return ProofConstants(N, ell, m)


def m_upper_estimate(n: int, r: int) -> Fraction:
    """2 n^(r-2)/(r-2)! - (r+4) n^(r-3)/(r-3)! + 8 r^4 n^(r-4), the ceiling on m(r, n)."""
    if r < 3:
        raise ValueError("needs r >= 3")
    nn = Fraction(n)
    return (2 * nn ** (r - 2) / factorial(r - 2)
            - (r + 4) * nn ** (r - 3) / factorial(r - 3)
            + 8 * r**4 * nn ** (r - 4))


@dataclass(frozen=True)
class BoundsReport:
    n: int
    r: int
    vertex_count: int
    trivial_upper: int
    lower_thm27: Fraction | None
    asym_upper_terms: Fraction | None
    certified_upper: int | None
    dilations: dict[str, int] = field(default_factory=dict)
    regime_flag: str = REGIME_NOT_APPLICABLE
    feasibility: str = "ok"
    notes: tuple[str, ...] = ()

    @property
    def measured_dilation(self) -> int | None:
        return self.dilations.get("paper")

    @property
    def residual_upper(self) -> Fraction | None:
        if self.certified_upper is None or self.asym_upper_terms is None:
            return None
        return self.asym_upper_terms - self.certified_upper

    @property
    def gap(self) -> Fraction | None:
        """certified_upper - lower_thm27, where both exist."""
        if self.certified_upper is None or self.lower_thm27 is None:
            return None
        return self.certified_upper - self.lower_thm27


def report(n: int, r: int, layouts: Iterable[str] = (), method: str = "scan") -> BoundsReport:
    """Evaluate every bound for (n, r) and measure the dilation of each requested layout.

    Bounds that are undefined for (n, r) are left as None. Asking for the
    paper layout when the construction is infeasible raises InfeasibleLayout.
    """
    feas = feasibility(n, r)
    layouts = list(layouts)
    if "paper" in layouts and not feas:
        raise InfeasibleLayout(feas)
    notes = []
    if r == 3:
        notes.append("r=3: upper construction applies; lower bound requires r>=4")
    certified = certified_upper_bound(n, r) if feas else None
    dilations = {kind: dilation(build_layout(n, r, kind), method).value for kind in layouts}
    return BoundsReport(
        n=n, r=r, vertex_count=binom(n, r),
        trivial_upper=trivial_upper(n, r),
        lower_thm27=lower_thm27(n, r) if r >= 4 else None,
        asym_upper_terms=asym_upper_terms(n, r) if r >= 3 else None,
        certified_upper=certified,
        dilations=dilations,
        regime_flag=regime(n, r),
        feasibility="ok" if feas else str(feas.condition),
        notes=tuple(notes),
    )
