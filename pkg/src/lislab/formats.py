"""Text formats shared by the CLI and the file emitters.

Permutations read and print as comma-separated one-line lists ("2,4,3,7,6,1,5"),
partitions as comma-separated weakly decreasing parts ("3,2,2"), and standard
Young tableaux as JSON objects {"shape": [...], "rows": [[...], ...]}.
"""

from __future__ import annotations

from .permcore import Permutation
from .young import Partition, StandardYoungTableau


def parse_permutation(text: str) -> Permutation:
    try:
        entries = tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok != "")
    except ValueError as exc:
        raise ValueError(f"could not parse permutation {text!r}: {exc}") from None
    return Permutation(entries)


def format_permutation(p: Permutation) -> str:
    return ",".join(str(v) for v in p.elements)


def parse_partition(text: str) -> Partition:
    try:
        parts = tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok != "")
    except ValueError as exc:
        raise ValueError(f"could not parse partition {text!r}: {exc}") from None
    return Partition(parts)


def format_partition(shape: Partition) -> str:
    return ",".join(str(v) for v in shape.parts)


def syt_to_dict(t: StandardYoungTableau) -> dict:
    return {"shape": list(t.shape.parts), "rows": [list(row) for row in t.rows]}


def syt_from_dict(doc: dict) -> StandardYoungTableau:
    if not isinstance(doc, dict) or "rows" not in doc:
        raise ValueError("tableau document must be an object with a 'rows' field")
    t = StandardYoungTableau.from_lists(doc["rows"])
    if "shape" in doc and tuple(doc["shape"]) != t.shape.parts:
        raise ValueError("tableau document shape does not match its rows")
    return t


def grid_lines(rows, pad: int | None = None) -> list[str]:
    """Aligned text grid for tableau rows or hook grids."""
    rows = [list(r) for r in rows]
    if pad is None:
        pad = max((len(str(v)) for row in rows for v in row), default=1)
    return [" ".join(str(v).rjust(pad) for v in row) for row in rows]
