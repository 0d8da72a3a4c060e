"""Boarding-order models: queue positions versus seat numbers.

Seats are numbered 1..n from the front.  A boarding order is the sequence
of seat numbers in queue order; its increasing subsequences are the groups
that can walk in and sit down in one wave, so the LIS measures how much of
the queue boards smoothly and back-to-front boarding (seat sequence
n, n-1, ..., 1) is the worst case with LIS 1.
"""

from __future__ import annotations

import numpy as np

from .permcore import Permutation, uniform_random

STRATEGIES = ("back-to-front", "front-to-back", "random", "window-middle-aisle")


def boarding_permutation(strategy: str, n: int, rng: np.random.Generator | None = None) -> Permutation:
    """Seat sequence in queue order for the given boarding strategy.

    window-middle-aisle splits seats into three near-equal classes by seat
    number mod 3 (window first, then middle, then aisle) and boards each
    class as a block in uniformly random internal order.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if strategy == "back-to-front":
        return Permutation(tuple(range(n, 0, -1)))
    if strategy == "front-to-back":
        return Permutation(tuple(range(1, n + 1)))
    if strategy == "random":
        if rng is None:
            raise ValueError("the random strategy needs an rng")
        return uniform_random(n, rng)
    if strategy == "window-middle-aisle":
        if rng is None:
            raise ValueError("the window-middle-aisle strategy needs an rng")
        order = []
        for cls in range(3):
            block = np.arange(cls + 1, n + 1, 3)
            order.extend(int(s) for s in rng.permutation(block))
        return Permutation(tuple(order))
    raise ValueError(f"unknown strategy {strategy!r}; choose one of {', '.join(STRATEGIES)}")
