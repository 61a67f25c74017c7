"""Exact dilation of a labeling of K(n, r).

Three methods that share nothing but the labeling, so each checks the others:

* ``brute`` - incidence-matrix products over every vertex pair.
* ``scan``  - per vertex, walk labels down from the top until a disjoint
  vertex appears or the remaining span cannot beat the best so far.
* ``sos``   - subset-max/min transform over all 2^n masks, then each vertex
  reads the best label inside its complement.

Witness ties go to the edge whose lower label is smallest.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .combinatorics import RSubset
from .errors import BudgetExceeded
from .layout import Labeling

BRUTE_MAX_VERTICES = 20_000
SOS_MAX_N = 26


@dataclass(frozen=True)
class DilationResult:
    value: int
    witness: tuple[RSubset, RSubset] | None
    witness_labels: tuple[int, int] | None
    method: str


def _result(l: Labeling, value: int, low: int | None, method: str) -> DilationResult:
    if low is None:
        return DilationResult(0, None, None, method)
    high = low + value
    return DilationResult(value, (l.vertex_at(low), l.vertex_at(high)), (low, high), method)


def dilation_brute(l: Labeling, chunk: int = 512) -> DilationResult:
    total = l.size
    if total > BRUTE_MAX_VERTICES:
        raise BudgetExceeded(f"brute force limited to {BRUTE_MAX_VERTICES} vertices, got {total}")
    masks = l.masks_by_label
    inc = ((masks[:, None] >> np.arange(l.n)) & 1).astype(np.int32)
    labels = np.arange(1, total + 1)
    best, best_low = 0, None
    for lo in range(0, total, chunk):
        rows = slice(lo, lo + chunk)
        adjacent = (inc[rows] @ inc.T) == 0
        stretch = np.where(adjacent, np.abs(labels[rows, None] - labels[None, :]), 0)
        row_max = stretch.max(axis=1)
        m = int(row_max.max()) if row_max.size else 0
        if m > best:
            best = m
            # smallest lower label among pairs attaining m in this chunk
            i, j = np.nonzero(stretch == m)
            best_low = int(np.minimum(labels[rows][i], labels[j]).min())
        elif m == best and m > 0:
            i, j = np.nonzero(stretch == m)
            cand = int(np.minimum(labels[rows][i], labels[j]).min())
            best_low = cand if best_low is None else min(best_low, cand)
    return _result(l, best, best_low, "brute")


def dilation_scan(l: Labeling) -> DilationResult:
    masks = l.masks_by_label
    total = l.size
    best, best_low = 0, None
    for i in range(total - 1):
        # only partners with label > i + 1 + best can improve on best
        lo = i + 1 + best
        if lo >= total:
            break
        hits = np.flatnonzero((masks[lo:] & masks[i]) == 0)
        if hits.size:
            stretch = lo + int(hits[-1]) - i
            if stretch > best:
                best, best_low = stretch, i + 1
    return _result(l, best, best_low, "scan")


def _subset_extrema(n: int, masks: np.ndarray, labels: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    size = 1 << n
    top = int(labels.max()) + 1
    dtype = np.int32 if top < 2**31 - 1 else np.int64
    hi = np.zeros(size, dtype=dtype)
    low = np.full(size, top, dtype=dtype)
    hi[masks] = labels
    low[masks] = labels
    for b in range(n):
        step = 1 << b
        hv = hi.reshape(-1, 2, step)
        lv = low.reshape(-1, 2, step)
        np.maximum(hv[:, 1, :], hv[:, 0, :], out=hv[:, 1, :])
        np.minimum(lv[:, 1, :], lv[:, 0, :], out=lv[:, 1, :])
    return hi, low


def dilation_sos(l: Labeling) -> DilationResult:
    if l.n > SOS_MAX_N:
        raise BudgetExceeded(f"subset transform limited to n <= {SOS_MAX_N}, got n={l.n}")
    masks = l.masks_by_label
    labels = np.arange(1, l.size + 1)
    hi, _ = _subset_extrema(l.n, masks, labels)
    full = (1 << l.n) - 1
    far = hi[full ^ masks].astype(np.int64)
    stretch = np.where(far > labels, far - labels, 0)
    best = int(stretch.max()) if stretch.size else 0
    best_low = int(np.argmax(stretch)) + 1 if best > 0 else None
    return _result(l, best, best_low, "sos")


METHODS = {"brute": dilation_brute, "scan": dilation_scan, "sos": dilation_sos}


def dilation(l: Labeling, method: str = "scan") -> DilationResult:
    try:
        fn = METHODS[method]
    except KeyError:
        raise ValueError(f"unknown dilation method {method!r}") from None
    return fn(l)


def boundary(l: Labeling, x: int, y: int, chunk: int = 256) -> int:
    """Largest stretch of an edge with at least one endpoint labeled in [x, y]."""
    total = l.size
    if not 1 <= x <= y <= total:
        raise ValueError(f"interval [{x}, {y}] not inside [1, {total}]")
    masks = l.masks_by_label
    labels = np.arange(1, total + 1)
    best = 0
    for lo in range(x - 1, y, chunk):
        rows = np.arange(lo, min(lo + chunk, y))
        adjacent = (masks[rows, None] & masks[None, :]) == 0
        if not adjacent.any():
            continue
        stretch = np.where(adjacent, np.abs(labels[rows, None] - labels[None, :]), 0)
        best = max(best, int(stretch.max()))
    return best
