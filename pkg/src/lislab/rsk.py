"""Row insertion and its inverse: the bijection between permutations and
pairs of standard Young tableaux of a common shape.

Inserting x into a row displaces the leftmost entry greater than x; the
displaced entry falls to the next row.  The recording tableau Q marks, with
the step number, the cell that insertion step created.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .permcore import Permutation
from .young import Partition, StandardYoungTableau


@dataclass(frozen=True)
class TableauPair:
    """Insertion tableau p and recording tableau q; shapes always agree."""

    p: StandardYoungTableau
    q: StandardYoungTableau

    def __post_init__(self):
        if self.p.shape != self.q.shape:
            raise ValueError("p and q must have the same shape")

    @property
    def shape(self) -> Partition:
        return self.p.shape


def _insert_rows(values) -> tuple[list[list[int]], list[list[int]]]:
    rows_p: list[list[int]] = []
    rows_q: list[list[int]] = []
    for step, x in enumerate(values, start=1):
        r = int(x)
        i = 0
        while True:
            if i == len(rows_p):
                rows_p.append([r])
                rows_q.append([step])
                break
            row = rows_p[i]
            pos = bisect_left(row, r)
            if pos == len(row):
                row.append(r)
                rows_q[i].append(step)
                break
            r, row[pos] = row[pos], r
            i += 1
    return rows_p, rows_q


def _insert_shape(values) -> tuple[int, ...]:
    rows: list[list[int]] = []
    for x in values:
        r = x
        i = 0
        while True:
            if i == len(rows):
                rows.append([r])
                break
            row = rows[i]
            pos = bisect_left(row, r)
            if pos == len(row):
                row.append(r)
                break
            r, row[pos] = row[pos], r
            i += 1
    return tuple(len(row) for row in rows)


def rsk_insert(p: Permutation) -> TableauPair:
    """Insert the permutation left to right; returns the tableau pair (P, Q).

    >>> pair = rsk_insert(Permutation((4, 3, 1, 2)))
    >>> pair.p.rows
    ((1, 2), (3,), (4,))
    """
    rows_p, rows_q = _insert_rows(p.elements)
    return TableauPair(
        p=StandardYoungTableau.from_lists(rows_p),
        q=StandardYoungTableau.from_lists(rows_q),
    )


def shape_of(p: Permutation) -> Partition:
    """Shape of the insertion tableau, without recording bookkeeping."""
    return Partition(_insert_shape(p.elements))


def rsk_inverse(pair: TableauPair) -> Permutation:
    """Recover the unique permutation whose insertion yields the pair.

    Entries n down to 1 of Q name the cells to evacuate; each evacuated
    value bubbles up through the rows, displacing the rightmost smaller
    entry, and the row-0 ejection is the permutation entry.
    """
    n = pair.p.n
    where = {}
    for i, row in enumerate(pair.q.rows):
        for j, entry in enumerate(row):
            where[entry] = (i, j)
    rows = [list(row) for row in pair.p.rows]
    out = [0] * n
    for k in range(n, 0, -1):
        i, j = where[k]
        if j != len(rows[i]) - 1:
            raise ValueError("recording tableau does not name a removable corner")
        r = rows[i].pop()
        if not rows[i]:
            del rows[i]
        for h in range(i - 1, -1, -1):
            row = rows[h]
            pos = bisect_left(row, r) - 1
            if pos < 0:
                raise ValueError("tableau pair is not a valid insertion image")
            r, row[pos] = row[pos], r
        out[k - 1] = r
    return Permutation(tuple(out))
