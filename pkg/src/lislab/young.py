"""Integer partitions, Young diagrams, hooks, and standard Young tableaux.

Cells are addressed (row, col), 1-based, English orientation: row 1 is the
longest row and column indices grow to the right.  Counts are exact Python
integers throughout; nothing here touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple

from .errors import SizeLimitError

ENUMERATION_CAP = 60
EXACT_CAP = 40
SYT_ENUMERATION_CAP = 10**6


class Cell(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; the empty partition has n=0."""

    parts: tuple[int, ...]

    def __post_init__(self):
        for i, part in enumerate(self.parts):
            if part < 1:
                raise ValueError("all parts must be at least 1")
            if i > 0 and part > self.parts[i - 1]:
                raise ValueError("parts must be weakly decreasing")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @cached_property
    def conjugate(self) -> tuple[int, ...]:
        """Column lengths; computed once per shape."""
        if not self.parts:
            return ()
        cols = [0] * self.parts[0]
        for part in self.parts:
            for j in range(part):
                cols[j] += 1
        return tuple(cols)

    def contains(self, cell: Cell) -> bool:
        return 1 <= cell.row <= len(self.parts) and 1 <= cell.col <= self.parts[cell.row - 1]

    def cells(self) -> Iterator[Cell]:
        for i, part in enumerate(self.parts, start=1):
            for j in range(1, part + 1):
                yield Cell(i, j)


@dataclass(frozen=True)
class StandardYoungTableau:
    """Rows strictly increase left-to-right, columns top-to-bottom; entries are 1..n."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        shape = Partition(tuple(len(r) for r in self.rows))  # validates row lengths
        n = shape.n
        seen = set()
        for i, row in enumerate(self.rows):
            for j, entry in enumerate(row):
                if not 1 <= entry <= n:
                    raise ValueError("entries must lie in 1..n")
                if entry in seen:
                    raise ValueError("entries must be distinct")
                seen.add(entry)
                if j > 0 and row[j - 1] >= entry:
                    raise ValueError("rows must increase strictly")
                if i > 0 and self.rows[i - 1][j] >= entry:
                    raise ValueError("columns must increase strictly")

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    @classmethod
    def from_lists(cls, rows) -> "StandardYoungTableau":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))


def hook_length(shape: Partition, cell: Cell) -> int:
    """Arm + leg + 1: cells to the right, below, and the cell itself."""
    cell = Cell(*cell)
    if not shape.contains(cell):
        raise ValueError(f"cell {tuple(cell)} is outside the shape")
    arm = shape.parts[cell.row - 1] - cell.col
    leg = shape.conjugate[cell.col - 1] - cell.row
    return arm + leg + 1


def hook_lengths(shape: Partition) -> tuple[tuple[int, ...], ...]:
    """Full hook grid, row by row."""
    conj = shape.conjugate
    return tuple(
        tuple(part - j + conj[j - 1] - i + 1 for j in range(1, part + 1))
        for i, part in enumerate(shape.parts, start=1)
    )


def hook_product(shape: Partition) -> int:
    out = 1
    for row in hook_lengths(shape):
        for h in row:
            out *= h
    return out


def syt_count_hlf(shape: Partition) -> int:
    """Number of standard Young tableaux: n! divided by the hook product.

    >>> syt_count_hlf(Partition((3, 2)))
    5
    """
    product = hook_product(shape)
    quotient, remainder = divmod(math.factorial(shape.n), product)
    if remainder:
        raise ArithmeticError("hook product failed to divide n!")
    return quotient


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of n in reverse-lexicographic order: (n) first, (1,..,1) last.

    >>> [p.parts for p in enumerate_partitions(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > ENUMERATION_CAP:
        raise SizeLimitError(f"partition enumeration is capped at n={ENUMERATION_CAP}")

    def rec(remaining: int, max_part: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield Partition(prefix)
            return
        for k in range(min(remaining, max_part), 0, -1):
            yield from rec(remaining - k, k, prefix + (k,))

    yield from rec(n, n if n else 1, ())


def corners(shape: Partition) -> tuple[Cell, ...]:
    """Removable cells: row ends strictly longer than the row below."""
    out = []
    parts = shape.parts
    for i, part in enumerate(parts, start=1):
        below = parts[i] if i < len(parts) else 0
        if part > below:
            out.append(Cell(i, part))
    return tuple(out)


def transpose(shape: Partition) -> Partition:
    return Partition(shape.conjugate)


def enumerate_syt(shape: Partition, max_count: int = SYT_ENUMERATION_CAP) -> list[StandardYoungTableau]:
    """All standard Young tableaux of the shape, by backtracking.

    Refuses shapes whose tableau count (known up front from the hook length
    formula) exceeds max_count.
    """
    count = syt_count_hlf(shape)
    if count > max_count:
        raise SizeLimitError(f"shape has {count} tableaux, above the cap of {max_count}")
    parts = shape.parts
    filled = [0] * len(parts)  # cells occupied so far in each row
    grid = [[0] * part for part in parts]
    out: list[StandardYoungTableau] = []

    def place(value: int):
        if value > shape.n:
            out.append(StandardYoungTableau.from_lists(grid))
            return
        for i, part in enumerate(parts):
            j = filled[i]
            if j >= part:
                continue
            if i > 0 and filled[i - 1] <= j:
                continue
            grid[i][j] = value
            filled[i] += 1
            place(value + 1)
            filled[i] -= 1
        return

    place(1)
    return out


@dataclass(frozen=True)
class SumIdentityReport:
    """Result of checking sum over shapes of (tableau count)^2 == n!."""

    n: int
    ok: bool
    sum_of_squares: int
    factorial: int


def check_syt_sum_identity(n: int) -> SumIdentityReport:
    """Exact check that the squared tableau counts over all shapes of n sum to n!."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > EXACT_CAP:
        raise SizeLimitError(f"identity check is capped at n={EXACT_CAP}")
    total = 0
    for shape in enumerate_partitions(n):
        count = syt_count_hlf(shape)
        total += count * count
    fact = math.factorial(n)
    return SumIdentityReport(n=n, ok=total == fact, sum_of_squares=total, factorial=fact)


def max_syt_count(n: int) -> tuple[Partition, int]:
    """Shape of n with the most standard Young tableaux (first such in
    reverse-lexicographic order) and that count."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > EXACT_CAP:
        raise SizeLimitError(f"max tableau-count search is capped at n={EXACT_CAP}")
    best_shape = None
    best = -1
    for shape in enumerate_partitions(n):
        count = syt_count_hlf(shape)
        if count > best:
            best_shape, best = shape, count
    assert best_shape is not None
    return best_shape, best
