from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from invder import qlinalg as ql
from invder.errors import ContainmentError, ShapeError, SingularMatrixError

small_q = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@st.composite
def matrices(draw, max_rows=4, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return ql.qarray(draw(st.lists(st.lists(small_q, min_size=c, max_size=c),
                                   min_size=r, max_size=r)))


@st.composite
def square(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    return ql.qarray(draw(st.lists(st.lists(small_q, min_size=n, max_size=n),
                                   min_size=n, max_size=n)))


def test_to_q_accepts_exact_inputs():
    assert ql.to_q("3/6") == Fraction(1, 2)
    assert ql.to_q(" -2 ") == Fraction(-2)
    assert ql.to_q(7) == Fraction(7)


@pytest.mark.parametrize("bad", [0.5, True, None, [1]])
def test_to_q_rejects_inexact_inputs(bad):
    with pytest.raises(TypeError):
        ql.to_q(bad)


def test_frozen_is_read_only():
    a = ql.frozen([[1, 2]])
    with pytest.raises(ValueError):
        a[0, 0] = 5


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_rank_and_rref_match_sympy(m):
    ref = sp.Matrix(m.tolist())
    r, piv = ql.rref(m)
    sr, spiv = ref.rref()
    assert list(piv) == list(spiv)
    assert sp.Matrix(r.tolist()) == sr
    assert ql.rank(m) == ref.rank()


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_kernel_basis_spans_null_space(m):
    basis = ql.kernel_basis(m)
    assert len(basis) == m.shape[1] - ql.rank(m)
    for v in basis:
        assert ql.is_zero(m @ v)
    if basis:
        assert ql.rank(np.array(basis)) == len(basis)


@given(matrices(), st.data())
@settings(max_examples=60, deadline=None)
def test_solve_finds_solutions_of_consistent_systems(m, data):
    x0 = ql.qarray(data.draw(st.lists(small_q, min_size=m.shape[1], max_size=m.shape[1])))
    x = ql.solve(m, m @ x0)
    assert x is not None and np.all(m @ x == m @ x0)


def test_solve_reports_inconsistency():
    assert ql.solve(ql.qarray([[1, 1], [2, 2]]), ql.qarray([1, 3])) is None


@given(square(), square())
@settings(max_examples=60, deadline=None)
def test_det_is_multiplicative_and_matches_sympy(a, b):
    if a.shape != b.shape:
        b = ql.identity(a.shape[0])
    assert ql.det(a @ b) == ql.det(a) * ql.det(b)
    assert ql.det(a) == sp.Matrix(a.tolist()).det()


@given(square())
@settings(max_examples=60, deadline=None)
def test_inverse_or_singular(a):
    if ql.det(a) == 0:
        with pytest.raises(SingularMatrixError):
            ql.inverse(a)
    else:
        assert np.all(a @ ql.inverse(a) == ql.identity(a.shape[0]))


def test_shape_errors():
    with pytest.raises(ShapeError):
        ql.det(ql.zeros(2, 3))
    with pytest.raises(ShapeError):
        ql.solve(ql.zeros(2, 2), ql.zeros(3))


def test_quotient_dimension_and_containment():
    z = [ql.qarray([1, 0, 0]), ql.qarray([0, 1, 0])]
    assert ql.quotient_dimension(z, [ql.qarray([1, 1, 0])]) == 1
    with pytest.raises(ContainmentError):
        ql.quotient_dimension(z, [ql.qarray([0, 0, 1])])


def test_reduce_modulo_clears_pivots():
    ech = ql.span_basis([ql.qarray([2, 4, 0]), ql.qarray([0, 1, 1])])
    piv = [next(k for k, x in enumerate(row) if x != 0) for row in ech]
    v = ql.reduce_modulo(ql.qarray([3, 5, 7]), ech, piv)
    assert all(v[p] == 0 for p in piv)
    assert ql.in_span(list(ech) + [v], ql.qarray([3, 5, 7]))


def test_empty_inputs():
    assert ql.rank(ql.zeros(0, 3)) == 0
    assert len(ql.kernel_basis(ql.zeros(0, 3))) == 3
    assert ql.in_span([], ql.zeros(2))
