from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lislab import (
    Permutation,
    SizeLimitError,
    erdos_szekeres_check,
    lds,
    lis_bruteforce,
    lis_length,
    lis_patience,
    uniform_random,
)
from lislab.reports import make_rng

perms = st.integers(min_value=1, max_value=8).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
)


def test_permutation_validation():
    Permutation((2, 1, 3))
    with pytest.raises(ValueError):
        Permutation(())
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    with pytest.raises(ValueError):
        Permutation((0, 1, 2))
    with pytest.raises(ValueError):
        Permutation((1, 2, 4))


def test_patience_piles_worked_example():
    # cards 2,4,3,7,6,1,5: three piles, tops read top-to-bottom increasing
    result = lis_patience(Permutation((2, 4, 3, 7, 6, 1, 5)))
    assert result.lis_length == 3
    assert result.pile_sizes == (2, 2, 3)
    assert result.piles == ((1, 2), (3, 4), (5, 6, 7))


def test_pile_structure_invariants():
    rng = make_rng(2)
    for _ in range(50):
        p = uniform_random(40, rng)
        result = lis_patience(p)
        piles = result.piles
        assert sum(len(pile) for pile in piles) == p.n
        for pile in piles:
            assert all(a < b for a, b in zip(pile, pile[1:]))
        # tops (first entries) increase left to right at the end of play:
        # each later pile was opened by a card larger than every top before it
        assert result.lis_length == len(piles)


@given(perms)
@settings(max_examples=300, deadline=None)
def test_patience_matches_bruteforce(entries):
    p = Permutation(tuple(entries))
    assert lis_patience(p).lis_length == lis_bruteforce(p)


@given(perms)
@settings(max_examples=300, deadline=None)
def test_reversal_swaps_lis_and_lds(entries):
    p = Permutation(tuple(entries))
    assert lis_patience(p.reversed()).lis_length == lds(p)
    assert lds(p.reversed()) == lis_patience(p).lis_length


def test_lis_length_accepts_floats_and_arrays():
    assert lis_length([0.5, 0.1, 0.2, 0.9]) == 3
    assert lis_length(np.array([3, 1, 2])) == 2
    assert lis_length([]) == 0


def test_bruteforce_cap():
    with pytest.raises(SizeLimitError):
        lis_bruteforce(Permutation(tuple(range(1, 22))))


def test_monotone_extremes():
    up = Permutation(tuple(range(1, 31)))
    down = Permutation(tuple(range(30, 0, -1)))
    assert lis_patience(up).lis_length == 30
    assert lds(up) == 1
    assert lis_patience(down).lis_length == 1
    assert lds(down) == 30


def test_erdos_szekeres_requires_large_n():
    with pytest.raises(ValueError):
        erdos_szekeres_check(Permutation((2, 1, 3, 4)), 2, 2)


def test_erdos_szekeres_exhaustive_s5():
    for entries in itertools.permutations(range(1, 6)):
        assert erdos_szekeres_check(Permutation(entries), 2, 2)


def test_uniform_random_is_valid_permutation():
    rng = make_rng(7)
    p = uniform_random(100, rng)
    assert sorted(p.elements) == list(range(1, 101))
