import random
from fractions import Fraction

import numpy as np
import pytest

import oracles
from corpus import rand_invertible, random_abelian
from invder import qlinalg as ql
from invder.errors import CheckFailed, ShapeError
from invder.fixtures import H3_DELTA, h3_invder, heisenberg, plane_invder, sl2
from invder.lie import (InvDerStructure, LieAlgebra, abelian, ad_map, bracket,
                        check_cyclic_identity, cyclic_sums, delta_derivation_space,
                        derivation_space, from_brackets, inverse_is_derivation, is_delta_derivation,
                        is_derivation, is_homomorphism, is_invder, lie_check, twist, validate_lie)

H3_DIAG = ql.qarray([[1, 0, 0], [0, 1, 0], [0, 0, 2]])


def _nested(L):
    return L.c.tolist()


@pytest.mark.parametrize("L, expected", [(abelian(1), 1), (abelian(2), 4), (abelian(3), 9),
                                         (heisenberg(), 6), (sl2(), 3)])
def test_derivation_dimensions_match_oracle(L, expected):
    assert oracles.derivation_dim(_nested(L)) == expected
    basis = derivation_space(L)
    assert len(basis) == expected
    for D in basis:
        assert is_derivation(L, D)


def test_sl2_derivations_are_inner():
    L = sl2()
    ads = [ad_map(L, e).ravel() for e in ql.identity(3)]
    for D in derivation_space(L):
        assert ql.in_span(ads, D.ravel())


def test_bracket_and_ad_map():
    L = sl2()
    h, e, f = ql.identity(3)
    assert np.all(bracket(L, h, e) == 2 * e)
    assert np.all(bracket(L, e, f) == h)
    assert np.all(ad_map(L, h) @ f == -2 * f)
    assert np.all(ad_map(L, h, right=True) @ f == 2 * f)


def test_lie_check_reports_each_violation():
    c = ql.zeros(3, 3, 3)
    c[0, 1, 2] = 1
    bad = lie_check(c)
    assert not bad and bad.first.clause == "antisymmetry"
    # [e1,e2]=e1, [e2,e3]=e2, [e1,e3]=e3 breaks Jacobi
    c = ql.zeros(3, 3, 3)
    for (i, j), k in {(0, 1): 0, (1, 2): 1, (0, 2): 2}.items():
        c[i, j, k], c[j, i, k] = 1, -1
    report = lie_check(c)
    assert [f.clause for f in report.failures] == ["Jacobi identity"]
    assert list(report.first.residual) == [-1, 1, 1]
    with pytest.raises(CheckFailed):
        validate_lie(c)
    with pytest.raises(CheckFailed):
        from_brackets(3, {(0, 1): [1, 0, 0], (1, 2): [0, 1, 0], (0, 2): [0, 0, 1]})


def test_lie_check_rejects_bad_shape():
    with pytest.raises(ShapeError):
        lie_check(ql.zeros(2, 2, 3))


def test_h3_sample_is_an_inv_derivation():
    report = is_invder(heisenberg(), H3_DELTA)
    assert report.ok
    assert report.passed == ("Leibniz rule", "invertibility", "Inv condition")
    assert inverse_is_derivation(heisenberg(), H3_DELTA)


def test_h3_diagonal_fails_only_the_inv_condition():
    report = is_invder(heisenberg(), H3_DIAG)
    assert [f.clause for f in report.failures] == ["Inv condition"]
    f = report.first
    assert f.indices == (0, 1)
    assert list(f.residual) == [0, 0, -3]
    inv = inverse_is_derivation(heisenberg(), H3_DIAG)
    assert list(inv.first.residual) == [0, 0, Fraction(-3, 2)]
    with pytest.raises(CheckFailed):
        InvDerStructure.checked(heisenberg(), H3_DIAG)


def test_singular_map_fails_invertibility():
    report = is_invder(abelian(2), ql.qarray([[1, 0], [0, 0]]))
    assert [f.clause for f in report.failures] == ["invertibility"]


def test_non_derivation_fails_leibniz():
    d = ql.qarray([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    report = is_invder(heisenberg(), d)
    assert report.first.clause == "Leibniz rule"


@pytest.mark.parametrize("S", random_abelian(10, seed=7) + [h3_invder(), plane_invder()])
def test_inv_condition_matches_inverse_leibniz(S):
    assert is_invder(S.algebra, S.delta).ok == inverse_is_derivation(S.algebra, S.delta).ok


def test_twist_of_h3_is_lie_and_keeps_delta():
    T = twist(h3_invder())
    assert lie_check(T.c)
    assert is_invder(T, H3_DELTA)


def test_cyclic_sums_vanish_on_h3():
    S = h3_invder()
    lhs, rhs = cyclic_sums(S, 0, 1, 2)
    assert ql.is_zero(lhs) and ql.is_zero(rhs)
    assert check_cyclic_identity(S)


def test_cyclic_sums_agree_for_any_derivation():
    # both sides are negatives of each other for a derivation; they agree only when zero
    D = derivation_space(sl2())[0]
    lhs, rhs = cyclic_sums(InvDerStructure(sl2(), D), 0, 1, 2)
    assert np.all(lhs == -rhs)


def test_delta_derivations_match_oracle():
    S = h3_invder()
    expected = oracles.delta_derivation_dim(_nested(S.algebra), S.delta.tolist())
    basis = delta_derivation_space(S)
    assert len(basis) == expected
    P = plane_invder()
    basis = delta_derivation_space(P)
    assert len(basis) == oracles.delta_derivation_dim(_nested(P.algebra), P.delta.tolist())
    for D in basis:
        assert is_delta_derivation(P, D)


def test_delta_derivation_clauses():
    S = InvDerStructure.checked(abelian(1), ql.qarray([[2]]))
    # D delta = delta^2 D forces D = 0 when delta = 2
    assert delta_derivation_space(S) == []
    assert is_delta_derivation(S, ql.qarray([[1]])).first.clause == "D delta = delta^2 D"


def test_homomorphism_checks_bracket_and_delta():
    S = h3_invder()
    assert is_homomorphism(S, S, ql.identity(3))
    # scaling e3 breaks the bracket
    phi = ql.qarray([[1, 0, 0], [0, 1, 0], [0, 0, 2]])
    assert is_homomorphism(S, S, phi).first.clause == "bracket preserved"
    other = InvDerStructure.checked(heisenberg(), -H3_DELTA)
    assert is_homomorphism(S, other, ql.identity(3)).first.clause == "intertwines delta"


def test_structures_are_immutable():
    L = LieAlgebra(ql.zeros(1, 1, 1))
    with pytest.raises(ValueError):
        L.c[0, 0, 0] = 1
    assert L.basis == ("e1",)


def test_random_invertible_maps_are_inv_derivations_of_abelian_algebras():
    rng = random.Random(3)
    for n in (1, 2, 3):
        assert is_invder(abelian(n), rand_invertible(rng, n))
