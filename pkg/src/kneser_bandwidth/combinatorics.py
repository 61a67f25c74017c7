"""Exact integer combinatorics on r-subsets of [n].

Subsets are ordered colexicographically everywhere in this package: compare
the largest element where two sets differ. For subsets of [n] this is the
same as ordering by the integer value of the characteristic bitmask, which
is what the vectorised helpers below rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Iterable, Sequence

import numpy as np


def binom(n: int, k: int) -> int:
    """C(n, k) with arbitrary precision; 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binom needs nonnegative arguments, got ({n}, {k})")
    return comb(n, k)


@dataclass(frozen=True, slots=True)
class RSubset:
    """An r-subset of [n]: a vertex of K(n, r)."""

    elements: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        els = self.elements
        if not isinstance(els, tuple):
            object.__setattr__(self, "elements", tuple(els))
            els = self.elements
        for a, b in zip(els, els[1:]):
            if a >= b:
                raise ValueError(f"elements must be strictly increasing: {els}")
        if els and (els[0] < 1 or els[-1] > self.n):
            raise ValueError(f"elements must lie in [1, {self.n}]: {els}")

    @classmethod
    def _trusted(cls, elements: tuple[int, ...], n: int) -> "RSubset":
        # skips validation; callers guarantee a sorted tuple inside [1, n]
        obj = object.__new__(cls)
        object.__setattr__(obj, "elements", elements)
        object.__setattr__(obj, "n", n)
        return obj

    @property
    def r(self) -> int:
        return len(self.elements)

    @property
    def mask(self) -> int:
        return to_mask(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self.elements

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"


def to_mask(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def from_mask(mask: int) -> tuple[int, ...]:
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


def colex_rank(s: RSubset) -> int:
    """1-based colex rank of ``s`` among all r-subsets of [n]."""
    return 1 + sum(comb(e - 1, i) for i, e in enumerate(s.elements, start=1))


def colex_unrank(rank: int, n: int, r: int) -> RSubset:
    """Inverse of :func:`colex_rank`."""
    total = comb(n, r)
    if not 1 <= rank <= total:
        raise ValueError(f"rank {rank} outside [1, {total}] for n={n}, r={r}")
    rem = rank - 1
    out = []
    c = n
    for i in range(r, 0, -1):
        # largest c with C(c, i) <= rem
        c -= 1
        while comb(c, i) > rem:
            c -= 1
        out.append(c + 1)
        rem -= comb(c, i)
    return RSubset._trusted(tuple(reversed(out)), n)


@lru_cache(maxsize=64)
def all_subsets(n: int, r: int) -> tuple[tuple[int, ...], ...]:
    """Every r-subset of [n] as an element tuple, in colex order."""
    if r < 0 or n < 0:
        raise ValueError("n and r must be nonnegative")
    return tuple(sorted(combinations(range(1, n + 1), r), key=lambda s: s[::-1]))


@lru_cache(maxsize=64)
def subset_masks(n: int, r: int) -> np.ndarray:
    """Characteristic masks of all r-subsets, indexed by colex rank - 1."""
    if n > 62:
        raise ValueError("bitmask representation supports n <= 62")
    masks = np.fromiter((to_mask(s) for s in all_subsets(n, r)), dtype=np.int64, count=comb(n, r))
    masks.flags.writeable = False
    return masks


def _check_prefix(prefix: Sequence[int], n: int, r: int) -> tuple[int, ...]:
    prefix = tuple(prefix)
    if len(prefix) > r:
        raise ValueError(f"prefix {prefix} longer than r={r}")
    if any(a >= b for a, b in zip(prefix, prefix[1:])):
        raise ValueError(f"prefix {prefix} not strictly increasing")
    if prefix and (prefix[0] < 1 or prefix[-1] > n):
        raise ValueError(f"prefix {prefix} outside [1, {n}]")
    return prefix


@dataclass(frozen=True)
class PrefixFamily:
    """All r-subsets of [n] whose t smallest elements are exactly ``prefix``."""

    prefix: tuple[int, ...]
    n: int
    r: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "prefix", _check_prefix(self.prefix, self.n, self.r))

    @property
    def size(self) -> int:
        last = self.prefix[-1] if self.prefix else 0
        return binom(self.n - last, self.r - len(self.prefix))

    def contains(self, elements: Sequence[int]) -> bool:
        t = len(self.prefix)
        return tuple(elements[:t]) == self.prefix

    def members(self) -> list[RSubset]:
        last = self.prefix[-1] if self.prefix else 0
        tails = combinations(range(last + 1, self.n + 1), self.r - len(self.prefix))
        sets = sorted((self.prefix + tail for tail in tails), key=lambda s: s[::-1])
        return [RSubset._trusted(s, self.n) for s in sets]


def family_S(prefix: Sequence[int], n: int, r: int) -> list[RSubset]:
    """Members of the prefix family S_{i1...it}, in colex order."""
    return PrefixFamily(tuple(prefix), n, r).members()


def binomial_estimate_check(n: int, r: int, c: int) -> tuple[bool, bool]:
    """Check both sides of the two-sided estimate for C(n - c, r).

        n^r/r! - (c + (r-1)/2) n^(r-1)/(r-1)!  <=  C(n-c, r)
        C(n-c, r)  <=  n^r/r! - (c + (r-1)/2) n^(r-1)/(r-1)! + 4 r^4 n^(r-2)

    Evaluated in exact rationals. Returns ``(lower_ok, upper_ok)``.
    """
    if not (n >= r >= 2 and c <= r):
        raise ValueError(f"need n >= r >= 2 and c <= r, got n={n}, r={r}, c={c}")
    main = Fraction(n**r, factorial(r)) - (c + Fraction(r - 1, 2)) * Fraction(n ** (r - 1), factorial(r - 1))
    value = binom(n - c, r)
    return main <= value, value <= main + 4 * r**4 * n ** (r - 2)
