"""Poisson points in a square: greedy north-east paths, longest chains,
and the limiting diagram boundary.

The square has side sqrt(n), so unit intensity puts n points in it on
average.  Greedy paths repeatedly hop to the Euclidean-nearest point
strictly north-east of the current one; longest chains are the maximal
strictly-NE point sequences, computed by patience sorting after an x-sort.

Rotated coordinates are u = x - y, v = x + y (a 45-degree rotation composed
with a sqrt(2) dilation); in them the limiting scaled diagram boundary is
the graph of v = (2/pi)(u arcsin(u/2) + sqrt(4 - u^2)) on |u| <= 2 and
v = |u| outside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable

import numpy as np

from . import _kernels
from .errors import InsufficientDataError
from .young import Partition

MIN_STEP_SAMPLES = 1000
DEFAULT_EDGE_MARGIN = 3.0
DEFAULT_THETA_STEP = 0.005


class PointSet:
    """Points in the square [0, side]^2 with side = sqrt(area).

    Read-only after construction; the spatial index is built lazily and
    shared by all queries.
    """

    def __init__(self, points, area: float):
        if area <= 0:
            raise ValueError("area must be positive")
        pts = np.asarray(points, dtype=np.float64)
        if pts.size == 0:
            pts = pts.reshape(0, 2)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise ValueError("points must be an (m, 2) array")
        side = math.sqrt(area)
        if pts.size and (pts.min() < 0.0 or pts.max() > side):
            raise ValueError("points must lie inside the square")
        pts = pts.copy()
        pts.flags.writeable = False
        self.points = pts
        self.area = float(area)
        self.side = side

    @property
    def count(self) -> int:
        return self.points.shape[0]

    @cached_property
    def _grid(self):
        """Bucket sort of point indices into unit-ish cells (CSR layout)."""
        m = max(1, math.ceil(self.side))
        cell = self.side / m
        ix = np.minimum((self.points[:, 0] / cell).astype(np.int64), m - 1)
        iy = np.minimum((self.points[:, 1] / cell).astype(np.int64), m - 1)
        ids = ix * m + iy
        order = np.argsort(ids, kind="stable")
        starts = np.searchsorted(ids[order], np.arange(m * m + 1))
        return order, starts, m, cell


@dataclass(frozen=True, eq=False)
class GreedyPath:
    """Points visited by the greedy NE walk from the origin, in order."""

    points: np.ndarray
    side: float

    @property
    def length(self) -> int:
        return self.points.shape[0]


@dataclass(frozen=True)
class StepStatistics:
    mean_radius: float
    mean_cos: float
    step_count: int


@dataclass(frozen=True)
class CurvePoint:
    theta: float
    x: float
    y: float


def poisson_square(n: float, rng: np.random.Generator) -> PointSet:
    """Unit-intensity Poisson scatter in the sqrt(n)-by-sqrt(n) square.

    Point count is Poisson(n); given the count, positions are iid uniform.
    """
    if n <= 0:
        raise ValueError("n must be positive")
    count = int(rng.poisson(n))
    side = math.sqrt(n)
    pts = rng.uniform(0.0, side, size=(count, 2))
    return PointSet(pts, area=float(n))


def nearest_ne_bruteforce(ps: PointSet, x: float, y: float) -> int | None:
    """Index of the nearest point strictly NE of (x, y) by full scan."""
    pts = ps.points
    mask = (pts[:, 0] > x) & (pts[:, 1] > y)
    if not mask.any():
        return None
    idx = np.flatnonzero(mask)
    d2 = (pts[idx, 0] - x) ** 2 + (pts[idx, 1] - y) ** 2
    return int(idx[np.argmin(d2)])


def nearest_ne(ps: PointSet, x: float, y: float) -> int | None:
    """Index of the nearest point strictly NE of (x, y), via the grid index.

    Scans L-shaped cell rings of growing radius; a ring can stop the search
    once the best distance so far is at most the ring radius, because any
    farther ring only holds strictly more distant points.
    """
    order, starts, m, cell = ps._grid
    pts = ps.points
    ix0 = min(max(int(x / cell), 0), m - 1)
    iy0 = min(max(int(y / cell), 0), m - 1)
    best = -1
    best_d2 = math.inf

    def scan(cx: int, cy: int):
        nonlocal best, best_d2
        cid = cx * m + cy
        for idx in order[starts[cid]:starts[cid + 1]]:
            px = pts[idx, 0]
            py = pts[idx, 1]
            if px > x and py > y:
                d2 = (px - x) ** 2 + (py - y) ** 2
                if d2 < best_d2:
                    best_d2 = d2
                    best = int(idx)

    for d in range(2 * m):
        cx = ix0 + d
        top = iy0 + d
        any_cell = False
        if cx < m:
            for cy in range(iy0, min(top, m - 1) + 1):
                any_cell = True
                scan(cx, cy)
        if top < m:
            for cx2 in range(ix0, min(ix0 + d - 1, m - 1) + 1):
                any_cell = True
                scan(cx2, top)
        if best >= 0 and best_d2 <= (d * cell) ** 2:
            break
        if not any_cell and cx >= m and top >= m:
            break
    return best if best >= 0 else None


def greedy_ne_path(ps: PointSet) -> GreedyPath:
    """Greedy walk from (0, 0): always hop to the nearest strictly-NE point.

    Stops when no strictly-NE point remains inside the square (every point
    lies inside, so no hop can leave it).
    """
    pts = ps.points
    visited = []
    cx, cy = 0.0, 0.0
    while True:
        idx = nearest_ne(ps, cx, cy)
        if idx is None:
            break
        cx, cy = float(pts[idx, 0]), float(pts[idx, 1])
        visited.append((cx, cy))
    path = np.asarray(visited, dtype=np.float64).reshape(-1, 2)
    return GreedyPath(points=path, side=ps.side)


def path_steps(path: GreedyPath, edge_margin: float = DEFAULT_EDGE_MARGIN):
    """Per-hop (radius, cos angle) pairs, dropping hops that start within
    edge_margin of the top or right edge where the NE quadrant is clipped."""
    if path.length == 0:
        return np.empty(0), np.empty(0)
    starts = np.vstack([np.zeros((1, 2)), path.points[:-1]])
    deltas = path.points - starts
    keep = (starts[:, 0] <= path.side - edge_margin) & (starts[:, 1] <= path.side - edge_margin)
    deltas = deltas[keep]
    radii = np.hypot(deltas[:, 0], deltas[:, 1])
    cosines = deltas[:, 0] / radii
    return radii, cosines


def step_statistics(
    source: PointSet | GreedyPath | Iterable[PointSet | GreedyPath],
    edge_margin: float = DEFAULT_EDGE_MARGIN,
) -> StepStatistics:
    """Pooled greedy-step law estimates: mean hop radius and mean cos(angle).

    Accepts one point set or path, or any iterable of them (steps are pooled
    across replicas).  Requires at least 1000 pooled steps.
    """
    if isinstance(source, (PointSet, GreedyPath)):
        source = [source]
    radii = []
    cosines = []
    for item in source:
        path = greedy_ne_path(item) if isinstance(item, PointSet) else item
        r, c = path_steps(path, edge_margin)
        radii.append(r)
        cosines.append(c)
    all_r = np.concatenate(radii) if radii else np.empty(0)
    all_c = np.concatenate(cosines) if cosines else np.empty(0)
    if all_r.size < MIN_STEP_SAMPLES:
        raise InsufficientDataError(
            f"only {all_r.size} greedy steps pooled; need at least {MIN_STEP_SAMPLES}"
        )
    return StepStatistics(
        mean_radius=float(all_r.mean()),
        mean_cos=float(all_c.mean()),
        step_count=int(all_r.size),
    )


def longest_chain(ps: PointSet) -> int:
    """Longest strictly-NE chain: sort by x (ties y-descending), then LIS on y."""
    if ps.count == 0:
        return 0
    pts = ps.points
    order = np.lexsort((-pts[:, 1], pts[:, 0]))
    return _kernels.lis_length_kernel(np.ascontiguousarray(pts[order, 1]))


def expected_increasing_subsequences(n: int, k: int) -> Fraction:
    """Exact expected count of increasing k-subsequences in a uniform
    permutation of size n: binom(n, k) / k!.

    >>> expected_increasing_subsequences(7, 3)
    Fraction(35, 6)
    """
    if n < 1 or k < 1 or k > n:
        raise ValueError("need 1 <= k <= n")
    return Fraction(math.comb(n, k), math.factorial(k))


def limit_curve(theta: float) -> CurvePoint:
    """Parametric limiting boundary of the scaled diagram.

    Runs from (2, 0) at theta=0 to (0, 2) at theta=pi.
    """
    if not 0.0 <= theta <= math.pi:
        raise ValueError("theta must lie in [0, pi]")
    y = 2.0 * (math.sin(theta) - theta * math.cos(theta)) / math.pi
    x = y + 2.0 * math.cos(theta)
    return CurvePoint(theta=theta, x=x, y=y)


def limit_curve_table(step: float = DEFAULT_THETA_STEP) -> np.ndarray:
    """(theta, x, y) rows along the limit curve on a uniform theta grid."""
    if step <= 0:
        raise ValueError("step must be positive")
    count = max(2, round(math.pi / step) + 1)
    thetas = np.linspace(0.0, math.pi, count)
    y = 2.0 * (np.sin(thetas) - thetas * np.cos(thetas)) / math.pi
    x = y + 2.0 * np.cos(thetas)
    return np.column_stack([thetas, x, y])


def scaled_boundary(shape: Partition, n: int) -> np.ndarray:
    """Staircase boundary of the diagram, scaled by 1/sqrt(n).

    Row lengths run along x, row index along y.  Returns the polyline
    vertices from (parts[0], 0)/sqrt(n) across the staircase to
    (0, rows)/sqrt(n).
    """
    if shape.n == 0:
        raise ValueError("shape must be nonempty")
    if n < 1:
        raise ValueError("n must be at least 1")
    parts = shape.parts
    k = len(parts)
    verts = [(float(parts[0]), 0.0)]
    for i in range(1, k + 1):
        verts.append((float(parts[i - 1]), float(i)))
        nxt = float(parts[i]) if i < k else 0.0
        if nxt != parts[i - 1]:
            verts.append((nxt, float(i)))
    return np.asarray(verts) / math.sqrt(n)


def rotated_limit_profile(u) -> np.ndarray:
    """The limit curve as a function v(u) in rotated coordinates.

    Equals (2/pi)(u arcsin(u/2) + sqrt(4 - u^2)) on |u| <= 2, and |u|
    outside (the boundary hugs the axes there).
    """
    u = np.asarray(u, dtype=np.float64)
    inside = np.abs(u) <= 2.0
    clipped = np.clip(u, -2.0, 2.0)
    bulk = (2.0 / np.pi) * (clipped * np.arcsin(clipped / 2.0) + np.sqrt(4.0 - clipped**2))
    return np.where(inside, bulk, np.abs(u))


def boundary_deviation(shape: Partition, n: int, max_vertices: int = 1000) -> float:
    """Sup distance, measured vertically in rotated coordinates, between the
    scaled staircase boundary and the limit profile.

    Sampled at the staircase vertices (capped at max_vertices, keeping the
    endpoints).
    """
    verts = scaled_boundary(shape, n)
    if verts.shape[0] > max_vertices:
        take = np.unique(np.linspace(0, verts.shape[0] - 1, max_vertices).round().astype(int))
        verts = verts[take]
    u = verts[:, 0] - verts[:, 1]
    v = verts[:, 0] + verts[:, 1]
    return float(np.max(np.abs(v - rotated_limit_profile(u))))
