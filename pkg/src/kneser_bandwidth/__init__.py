"""Bandwidth layouts of Kneser graphs K(n, r): construction, exact dilation, certificates and bounds."""

from .bounds import BoundsReport, asym_upper_terms, lower_thm27, regime, report, trivial_upper
from .certificates import (
    BLOCKER_TABLE,
    certified_upper_bound,
    certify_all,
    lemma31_bound,
    size_identity,
    verify_blocker_exact,
    verify_blocker_sufficient,
)
from .combinatorics import RSubset, binom, colex_rank, colex_unrank, family_S
from .dilation import DilationResult, boundary, dilation
from .errors import BudgetExceeded, CertificateError
from .exact import SmallGraph, bandwidth_exact, materialize
from .kneser import KneserGraph
from .layout import (
    BlockId,
    InfeasibleLayout,
    Labeling,
    bfs_layout,
    build_layout,
    feasibility,
    paper_layout,
    trivial_layout,
    validate,
)

__all__ = [
    "BLOCKER_TABLE", "BlockId", "BoundsReport", "BudgetExceeded", "CertificateError",
    "DilationResult", "InfeasibleLayout", "KneserGraph", "Labeling", "RSubset", "SmallGraph",
    "asym_upper_terms", "bandwidth_exact", "bfs_layout", "binom", "boundary", "build_layout",
    "certified_upper_bound", "certify_all", "colex_rank", "colex_unrank", "dilation",
    "family_S", "feasibility", "lemma31_bound", "lower_thm27", "materialize", "paper_layout",
    "regime", "report", "size_identity", "trivial_layout", "trivial_upper", "validate",
    "verify_blocker_exact", "verify_blocker_sufficient",
]
