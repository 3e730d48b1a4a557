import pytest
from hypothesis import given
from hypothesis import strategies as st

from stablecontracts.contractsets import (
    canonical_key,
    canonical_sorted,
    full_mask,
    ids_of,
    is_subset,
    mask_of,
    submasks,
)
from stablecontracts.errors import DomainError


def test_mask_round_trip_examples():
    assert mask_of([0, 2, 5]) == 0b100101
    assert ids_of(0b100101) == [0, 2, 5]
    assert mask_of([]) == 0
    assert ids_of(0) == []


def test_negative_id_rejected():
    with pytest.raises(DomainError):
        mask_of([-1])


@given(st.sets(st.integers(min_value=0, max_value=40)))
def test_mask_round_trip(ids):
    assert ids_of(mask_of(ids)) == sorted(ids)


def test_full_mask():
    assert full_mask(0) == 0
    assert full_mask(3) == 0b111


def test_submasks_of_sparse_ground():
    assert list(submasks(0b101)) == [0b000, 0b001, 0b100, 0b101]
    assert list(submasks(0)) == [0]


@given(st.integers(min_value=0, max_value=255))
def test_submasks_are_exactly_subsets(ground):
    subs = list(submasks(ground))
    assert len(subs) == 1 << ground.bit_count()
    assert all(is_subset(s, ground) for s in subs)
    assert subs == sorted(subs)


def test_canonical_order_prefers_cardinality_then_ids():
    # {0,3} before {1,2}: same size, lexicographically earlier ids
    assert canonical_key(0b1001) < canonical_key(0b0110)
    assert canonical_sorted([0b0110, 0b1001, 0b1, 0]) == [0, 0b1, 0b1001, 0b0110]


@given(st.integers(min_value=0, max_value=1023), st.integers(min_value=0, max_value=1023))
def test_is_subset_matches_set_semantics(a, b):
    assert is_subset(a, b) == set(ids_of(a)).issubset(ids_of(b))
