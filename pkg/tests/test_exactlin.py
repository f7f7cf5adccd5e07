"""Exact linear algebra: rank, RREF, kernels, and the free-module elements."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from splitalg.exactlin import (
    FreeModuleElement,
    RationalMatrix,
    as_fraction,
    kernel_basis,
    lin_combine,
    rank,
    reduce_against,
    row_reduce,
    same_span,
    span_contains,
    span_rank,
)


def test_as_fraction_rejects_floats():
    with pytest.raises(TypeError):
        as_fraction(0.5)
    assert as_fraction(3) == Fraction(3)
    assert as_fraction(Fraction(2, 4)) == Fraction(1, 2)


def test_element_drops_zeros_and_merges():
    e = FreeModuleElement([("a", 1), ("b", 2), ("a", -1)])
    assert e.support() == ["b"]
    assert e.coefficient("a") == 0
    assert e.coefficient("b") == 2


def test_element_arithmetic():
    u = FreeModuleElement([("a", 1), ("b", 2)])
    v = FreeModuleElement([("b", -2), ("c", 3)])
    s = u + v
    assert s == FreeModuleElement([("a", 1), ("c", 3)])
    assert u - u == FreeModuleElement()
    assert (-u).coefficient("a") == -1
    assert u.scale(0).is_zero()
    assert lin_combine(2, u, 3, v) == FreeModuleElement(
        [("a", 2), ("b", -2), ("c", 9)]
    )


def test_element_hash_consistency():
    u = FreeModuleElement([("a", Fraction(1, 2))])
    v = FreeModuleElement([("a", Fraction(2, 4))])
    assert u == v and hash(u) == hash(v)


def test_rank_simple():
    assert rank(RationalMatrix([[1, 2], [2, 4], [0, 1]])) == 2
    assert rank(RationalMatrix([[0, 0], [0, 0]])) == 0
    assert rank([[Fraction(1, 3), Fraction(1, 6)]]) == 1


def test_row_reduce_identity_normalization():
    rref, pivots = row_reduce([[Fraction(2), Fraction(4)], [Fraction(1), Fraction(3)]])
    assert pivots == (0, 1)
    assert rref[0] == (Fraction(1), Fraction(0))
    assert rref[1] == (Fraction(0), Fraction(1))


def test_reduce_against():
    rref, pivots = row_reduce([[Fraction(1), Fraction(1), Fraction(0)]])
    residual = reduce_against([Fraction(2), Fraction(2), Fraction(1)], rref, pivots)
    assert residual == (Fraction(0), Fraction(0), Fraction(1))
    residual = reduce_against([Fraction(3), Fraction(3), Fraction(0)], rref, pivots)
    assert residual == (Fraction(0),) * 3


def test_kernel_canonical_form():
    # The kernel of (1 1) is the line through (1, -1).
    vecs = kernel_basis(RationalMatrix([[1, 1]]))
    assert vecs == [(Fraction(1), Fraction(-1))]


def test_kernel_of_full_rank_matrix_is_trivial():
    assert kernel_basis(RationalMatrix([[1, 0], [0, 1]])) == []


def test_span_helpers():
    rows = [[1, 0, 1], [0, 1, 1]]
    assert span_rank(rows) == 2
    assert span_contains(rows, [1, 1, 2])
    assert not span_contains(rows, [0, 0, 1])
    assert same_span(rows, [[1, 1, 2], [1, -1, 0]])
    assert not same_span(rows, [[1, 0, 1]])


small_fractions = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)


@settings(deadline=None, max_examples=60)
@given(
    st.lists(
        st.lists(small_fractions, min_size=4, max_size=4),
        min_size=1,
        max_size=5,
    )
)
def test_rank_nullity(rows):
    m = RationalMatrix(rows)
    assert rank(m) + len(kernel_basis(m)) == 4


@settings(deadline=None, max_examples=60)
@given(
    st.lists(
        st.lists(small_fractions, min_size=3, max_size=3),
        min_size=1,
        max_size=4,
    )
)
def test_kernel_vectors_annihilate(rows):
    m = RationalMatrix(rows)
    for vec in kernel_basis(m):
        for row in rows:
            assert sum(as_fraction(a) * b for a, b in zip(row, vec)) == 0


@settings(deadline=None, max_examples=60)
@given(
    st.lists(
        st.lists(small_fractions, min_size=3, max_size=3),
        min_size=1,
        max_size=4,
    )
)
def test_rref_rank_agreement(rows):
    rref, pivots = row_reduce(rows)
    assert len(pivots) == rank(RationalMatrix(rows))
    for row in rows:
        assert reduce_against(row, rref, pivots) == (Fraction(0),) * 3
