import random

import pytest
from hypothesis import given, strategies as st

from oracles import _rank
from shiftlab.errors import ResourceError
from shiftlab.linalg import (
    FieldSpec,
    is_prime,
    rank,
    rank_dense_mod_p,
    rank_rational,
    rank_sparse_mod_p,
)

matrices = st.integers(1, 7).flatmap(
    lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=0, max_size=7)
)


def _sparse(rows):
    return [{j: v for j, v in enumerate(r) if v} for r in rows]


@given(matrices)
def test_three_eliminations_agree_with_reference(rows):
    ncols = len(rows[0]) if rows else 3
    sp = _sparse(rows)
    for p in (2, 3, 32003):
        expected = _rank(rows, ncols, p)
        assert rank_dense_mod_p(sp, ncols, p) == expected
        assert rank_sparse_mod_p(sp, ncols, p) == expected
    assert rank_rational(sp, ncols) == _rank(rows, ncols, 0)


def test_characteristic_matters():
    rows = [{0: 1, 1: 1}, {1: 1, 2: 1}, {0: 1, 2: 1}]
    assert rank(rows, 3, FieldSpec(0)) == 3
    assert rank(rows, 3, FieldSpec(2)) == 2


def test_large_entries_rational():
    rng = random.Random(7)
    rows = [[rng.randint(-10**12, 10**12) for _ in range(6)] for _ in range(5)]
    rows.append([a + b for a, b in zip(rows[0], rows[1])])
    assert rank_rational(_sparse(rows), 6) == _rank(rows, 6, 0) == 5


def test_bit_cap():
    rows = [{0: 2**100, 1: 3}, {0: 5, 1: 2**100}]
    with pytest.raises(ResourceError):
        rank_rational(rows, 2, bit_cap=64)


def test_sparse_path_for_wide_matrices():
    rows = [{0: 1, 700: 1}, {700: 1, 900: 2}, {0: 1, 900: 32001}]
    assert rank(rows, 1000, FieldSpec(32003)) == rank_dense_mod_p(rows, 1000, 32003) == 2


def test_field_validation():
    assert str(FieldSpec(0)) == "QQ"
    assert str(FieldSpec()) == "GF(32003)"
    assert is_prime(32003) and not is_prime(1) and not is_prime(32001)
    for bad in (1, 4, -3):
        with pytest.raises(ValueError):
            FieldSpec(bad)
