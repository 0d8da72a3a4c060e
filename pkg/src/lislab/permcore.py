"""Permutations and their longest monotone subsequences.

Conventions: a permutation of size n is a rearrangement of the integers
1..n, stored one-based.  "Increasing" and "decreasing" always mean strictly
monotone.  Random generation goes through a ``numpy.random.Generator`` so
every caller controls its own seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import SizeLimitError

BRUTE_FORCE_CAP = 20


@dataclass(frozen=True)
class Permutation:
    """A rearrangement of 1..n; no gaps, no repeats."""

    elements: tuple[int, ...]

    def __post_init__(self):
        n = len(self.elements)
        if n == 0:
            raise ValueError("permutation must have at least one element")
        arr = np.asarray(self.elements, dtype=np.int64)
        if arr.min() < 1 or arr.max() > n:
            raise ValueError("permutation entries must lie in 1..n")
        seen = np.zeros(n + 1, dtype=bool)
        seen[arr] = True
        if not seen[1:].all():
            raise ValueError("permutation entries must be distinct and cover 1..n")

    @property
    def n(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def values(self) -> np.ndarray:
        """Entries as an int64 array (copy)."""
        return np.asarray(self.elements, dtype=np.int64)

    def reversed(self) -> "Permutation":
        return Permutation(self.elements[::-1])


@dataclass(frozen=True)
class PatienceResult:
    """Outcome of one patience-sorting pass.

    ``piles`` lists each pile top-to-bottom (so each tuple is increasing);
    it is None when the caller asked only for sizes.
    """

    lis_length: int
    pile_sizes: tuple[int, ...]
    piles: tuple[tuple[int, ...], ...] | None = None


def uniform_random(n: int, rng: np.random.Generator) -> Permutation:
    """Uniformly random permutation of 1..n (Fisher-Yates, via numpy).

    >>> p = uniform_random(6, np.random.default_rng(0))
    >>> sorted(p.elements)
    [1, 2, 3, 4, 5, 6]
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    return Permutation(tuple(int(v) for v in rng.permutation(n) + 1))


def lis_patience(p: Permutation, keep_piles: bool = True) -> PatienceResult:
    """Patience sorting: pile count equals the longest increasing subsequence.

    Each card goes on the leftmost pile whose top card beats it; a new pile
    opens on the right when no pile can take it.
    """
    values = p.values()
    idx, npiles = _kernels.pile_indices_kernel(values)
    sizes = np.bincount(idx, minlength=npiles)
    piles = None
    if keep_piles:
        order = np.argsort(idx, kind="stable")
        grouped = np.split(values[order], np.cumsum(sizes)[:-1])
        # arrival order within a pile is top-down decreasing; flip to top-to-bottom
        piles = tuple(tuple(int(v) for v in g[::-1]) for g in grouped)
    return PatienceResult(
        lis_length=npiles,
        pile_sizes=tuple(int(s) for s in sizes),
        piles=piles,
    )


def lis_length(values) -> int:
    """Longest strictly increasing subsequence length of distinct values.

    Fast path for Monte Carlo loops: accepts a raw array and skips the
    ``Permutation`` wrapper entirely.
    """
    if isinstance(values, Permutation):
        values = values.values()
    return _kernels.lis_length_kernel(values)


def lis_bruteforce(p: Permutation) -> int:
    """Reference LIS by quadratic dynamic programming; capped at n=20.

    Independent of the patience route: best[i] is the longest increasing
    run ending exactly at position i.
    """
    if p.n > BRUTE_FORCE_CAP:
        raise SizeLimitError(f"brute-force LIS is capped at n={BRUTE_FORCE_CAP}")
    elems = p.elements
    best = [1] * p.n
    for i in range(p.n):
        for j in range(i):
            if elems[j] < elems[i] and best[j] + 1 > best[i]:
                best[i] = best[j] + 1
    return max(best)


def lds(p: Permutation) -> int:
    """Longest strictly decreasing subsequence length.

    Runs patience on the negated values, so decreasing runs of p become
    increasing runs of the input; the sequence order is untouched.
    """
    return _kernels.lis_length_kernel(-p.values())


def erdos_szekeres_check(p: Permutation, r: int, s: int) -> bool:
    """True when p has an increasing run longer than r or a decreasing run longer than s.

    Guaranteed for every permutation with more than r*s elements, which is
    required of the input.
    """
    if r < 1 or s < 1:
        raise ValueError("r and s must be at least 1")
    if p.n <= r * s:
        raise ValueError("permutation must have more than r*s elements")
    if lis_length(p) > r:
        return True
    return lds(p) > s
