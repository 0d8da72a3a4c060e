from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lislab import Partition, Permutation, TableauPair, lds, lis_patience, rsk_insert, rsk_inverse, shape_of

perms = st.integers(min_value=1, max_value=8).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
)


def test_worked_example():
    pair = rsk_insert(Permutation((2, 4, 3, 7, 6, 1, 5)))
    assert pair.p.rows == ((1, 3, 5), (2, 6), (4, 7))
    assert pair.q.rows == ((1, 2, 4), (3, 5), (6, 7))
    assert pair.p.shape == Partition((3, 2, 2))


def test_shapes_agree():
    pair = rsk_insert(Permutation((3, 1, 4, 2)))
    assert pair.p.shape == pair.q.shape == shape_of(Permutation((3, 1, 4, 2)))


def test_pair_shape_mismatch_rejected():
    a = rsk_insert(Permutation((1, 2, 3))).p
    b = rsk_insert(Permutation((2, 1, 3))).q
    with pytest.raises(ValueError):
        TableauPair(a, b)


def test_identity_and_reversal():
    ident = Permutation((1, 2, 3, 4, 5))
    pair = rsk_insert(ident)
    assert pair.p.rows == ((1, 2, 3, 4, 5),)
    assert pair.q.rows == ((1, 2, 3, 4, 5),)
    rev = Permutation((5, 4, 3, 2, 1))
    pair = rsk_insert(rev)
    assert pair.p.shape == Partition((1, 1, 1, 1, 1))


def test_round_trip_exhaustive_s6():
    for entries in itertools.permutations(range(1, 7)):
        p = Permutation(entries)
        assert rsk_inverse(rsk_insert(p)) == p


@given(perms)
@settings(max_examples=250, deadline=None)
def test_round_trip_random(entries):
    p = Permutation(tuple(entries))
    assert rsk_inverse(rsk_insert(p)) == p


@given(perms)
@settings(max_examples=250, deadline=None)
def test_first_row_is_lis_row_count_is_lds(entries):
    """Insertion-tableau geometry encodes both subsequence extremes."""
    p = Permutation(tuple(entries))
    shape = shape_of(p)
    assert shape.parts[0] == lis_patience(p).lis_length
    assert len(shape.parts) == lds(p)


def test_equal_tableaux_characterize_involutions():
    """P equals Q exactly when the permutation is its own inverse."""
    for entries in itertools.permutations(range(1, 6)):
        p = Permutation(entries)
        is_involution = all(p.elements[p.elements[i] - 1] == i + 1 for i in range(p.n))
        pair = rsk_insert(p)
        assert (pair.p.rows == pair.q.rows) == is_involution


def test_swapping_tableaux_inverts_the_permutation():
    for entries in itertools.permutations(range(1, 6)):
        p = Permutation(entries)
        pair = rsk_insert(p)
        swapped = rsk_inverse(TableauPair(p=pair.q, q=pair.p))
        inverse_elements = [0] * p.n
        for position, value in enumerate(p.elements, start=1):
            inverse_elements[value - 1] = position
        assert swapped == Permutation(tuple(inverse_elements))
