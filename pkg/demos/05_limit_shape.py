"""
The limit shape of a large random diagram
=========================================

A Plancherel-random diagram with n cells, drawn in rotated (Russian)
coordinates and scaled by sqrt(n), hugs a single deterministic curve.  This
script samples one large diagram, measures how far its staircase strays from
the curve, and writes both polylines to CSV files next to this script.

If matplotlib happens to be installed the overlay is also saved as a PNG,
but nothing here requires it.
"""

import csv
import pathlib

import numpy as np

from lislab import boundary_deviation, limit_curve_table, sample_shape_rsk, scaled_boundary
from lislab.reports import child_seed, make_rng

HERE = pathlib.Path(__file__).resolve().parent
N = 40_000

rng = make_rng(child_seed(606, N))
shape = sample_shape_rsk(N, rng).shape
print(f"sampled a diagram of {N} cells with {shape.length} rows; "
      f"largest part {shape.parts[0]}")

boundary = scaled_boundary(shape, N)
curve = limit_curve_table(0.005)
dev = boundary_deviation(shape, N)
print(f"sup deviation of the scaled staircase from the limit curve: {dev:.4f}")

for n in (1_000, 4_000, 16_000, 64_000):
    rng = make_rng(child_seed(606, n))
    sample = sample_shape_rsk(n, rng).shape
    print(f"  n={n:>6}: deviation {boundary_deviation(sample, n):.4f}")

with open(HERE / "boundary.csv", "w", newline="") as fh:
    writer = csv.writer(fh)
    writer.writerow(["x", "y"])
    writer.writerows(boundary.tolist())
with open(HERE / "curve.csv", "w", newline="") as fh:
    writer = csv.writer(fh)
    writer.writerow(["theta", "x", "y"])
    writer.writerows(curve.tolist())
print(f"\nwrote boundary.csv ({boundary.shape[0]} vertices) and "
      f"curve.csv ({curve.shape[0]} points) to {HERE}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed, skipping the overlay plot")
else:
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(boundary[:, 0], boundary[:, 1], drawstyle="steps-post",
            lw=0.8, label=f"scaled diagram, n={N}")
    ax.plot(curve[:, 1], curve[:, 2], lw=1.5, label="limit curve")
    ax.set_xlabel("u")
    ax.set_ylabel("v")
    ax.set_aspect("equal")
    ax.legend()
    fig.tight_layout()
    fig.savefig(HERE / "limit_shape.png", dpi=150)
    print(f"wrote limit_shape.png to {HERE}")

# The deviation column above shrinks roughly like a power of n, which is the
# finite-size echo of sup-norm convergence to the curve.
assert dev < 0.1
