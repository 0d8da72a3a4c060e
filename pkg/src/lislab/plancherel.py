"""The Plancherel measure on partitions of n and samplers for it.

A shape gets probability (count of its standard tableaux)^2 / n!.  Exact
values use Fractions; sampling offers two independent routes: insert a
uniform permutation and keep the shape, or grow a shape cell by cell with
the exact branching probabilities.  The hook walk supplies the matching
corner-removal law and uniform tableaux of a fixed shape.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import SizeLimitError
from .rsk import _insert_shape
from .young import (
    EXACT_CAP,
    Cell,
    Partition,
    StandardYoungTableau,
    corners,
    enumerate_partitions,
    hook_lengths,
    syt_count_hlf,
)


@dataclass(frozen=True)
class PlancherelSample:
    """A sampled shape plus provenance: which sampler, which seed (if known)."""

    shape: Partition
    method: str
    seed: int | None = None


def plancherel_prob(shape: Partition) -> Fraction:
    """Exact probability of the shape: squared tableau count over n!.

    >>> plancherel_prob(Partition((2, 1)))
    Fraction(2, 3)
    """
    n = shape.n
    if n < 1:
        raise ValueError("shape must be nonempty")
    if n > EXACT_CAP:
        raise SizeLimitError(f"exact probabilities are capped at n={EXACT_CAP}")
    count = syt_count_hlf(shape)
    return Fraction(count * count, math.factorial(n))


def sample_shape_rsk(n: int, rng: np.random.Generator) -> PlancherelSample:
    """Shape of the insertion tableau of a uniform permutation."""
    if n < 1:
        raise ValueError("n must be at least 1")
    values = rng.permutation(n)  # 0-based is fine: only the relative order matters
    return PlancherelSample(shape=Partition(_insert_shape(values.tolist())), method="rsk")


def hook_walk_corner(shape: Partition, rng: np.random.Generator) -> Cell:
    """Corner chosen by the hook walk.

    Start at a uniform cell; from cell w jump to one of the other h(w)-1
    cells of its hook, uniformly, until sitting at a corner.  The corner v
    comes out with probability H(shape)/(n * H(shape minus v)).
    """
    n = shape.n
    if n < 1:
        raise ValueError("shape must be nonempty")
    parts = shape.parts
    conj = shape.conjugate
    # uniform starting cell, found by unrolling the index
    flat = int(rng.integers(n))
    row = 0
    while flat >= parts[row]:
        flat -= parts[row]
        row += 1
    col = flat + 1
    row += 1
    while True:
        arm = parts[row - 1] - col
        leg = conj[col - 1] - row
        if arm + leg == 0:
            return Cell(row, col)
        jump = int(rng.integers(arm + leg))
        if jump < arm:
            col += 1 + jump
        else:
            row += 1 + (jump - arm)


def sample_syt_hookwalk(shape: Partition, rng: np.random.Generator) -> StandardYoungTableau:
    """Uniformly random standard Young tableau of the shape.

    Repeatedly hook-walk a corner of the remaining shape and write the
    largest unplaced value there.
    """
    n = shape.n
    if n < 1:
        raise ValueError("shape must be nonempty")
    grid = [[0] * part for part in shape.parts]
    current = shape
    for value in range(n, 0, -1):
        cell = hook_walk_corner(current, rng)
        grid[cell.row - 1][cell.col - 1] = value
        parts = list(current.parts)
        parts[cell.row - 1] -= 1
        if parts[cell.row - 1] == 0:
            parts.pop()
        current = Partition(tuple(parts))
    return StandardYoungTableau.from_lists(grid)


def sample_shape_growth(n: int, rng: np.random.Generator) -> PlancherelSample:
    """Grow a shape one cell at a time with the exact branching law.

    From a shape with k cells, the cell that turns it into mu is added with
    probability (tableau count of mu) / ((k+1) * tableau count of lambda),
    evaluated through hook-length ratios.  After n steps the shape is
    Plancherel-distributed; the hook walk is this chain's reversal.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    parts: list[int] = []
    conj: list[int] = []
    for _ in range(n):
        # addable positions: end of each run of equal parts, plus a new row
        slots = [r for r in range(len(parts)) if r == 0 or parts[r] < parts[r - 1]]
        slots.append(len(parts))
        weights = np.empty(len(slots))
        for w_idx, r in enumerate(slots):
            col = parts[r] if r < len(parts) else 0  # 0-based column of the new cell
            ratio = 1.0
            for j in range(col):  # hooks in the new cell's row all grow by one
                h = parts[r] - j + conj[j] - r - 1
                ratio *= h / (h + 1.0)
            for i in range(r):  # hooks in the new cell's column all grow by one
                h = parts[i] - col + conj[col] - i - 1
                ratio *= h / (h + 1.0)
            weights[w_idx] = ratio
        weights /= weights.sum()
        r = slots[int(rng.choice(len(slots), p=weights))]
        if r == len(parts):
            parts.append(1)
        else:
            parts[r] += 1
        col = parts[r] - 1
        if col == len(conj):
            conj.append(1)
        else:
            conj[col] += 1
    return PlancherelSample(shape=Partition(tuple(parts)), method="growth")


def corner_removal_pmf(shape: Partition) -> dict[Cell, Fraction]:
    """Exact hook-walk corner law: H(shape)/(n * H(shape minus corner))."""
    n = shape.n
    if n < 1:
        raise ValueError("shape must be nonempty")
    hooks = hook_lengths(shape)
    big_h = 1
    for row in hooks:
        for h in row:
            big_h *= h
    out: dict[Cell, Fraction] = {}
    for cell in corners(shape):
        parts = list(shape.parts)
        parts[cell.row - 1] -= 1
        if parts[cell.row - 1] == 0:
            parts.pop()
        smaller = Partition(tuple(parts))
        small_h = 1
        for row in hook_lengths(smaller):
            for h in row:
                small_h *= h
        out[cell] = Fraction(big_h, n * small_h)
    return out


def expected_lis_exact(n: int) -> Fraction:
    """Exact expected LIS of a uniform permutation of size n.

    Averages the first-row length over shapes, weighted by the Plancherel
    measure; exact for n up to 40.

    >>> expected_lis_exact(4)
    Fraction(29, 12)
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > EXACT_CAP:
        raise SizeLimitError(f"exact expected LIS is capped at n={EXACT_CAP}")
    total = 0
    for shape in enumerate_partitions(n):
        count = syt_count_hlf(shape)
        total += shape.parts[0] * count * count
    return Fraction(total, math.factorial(n))
