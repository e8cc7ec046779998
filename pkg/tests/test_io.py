import json
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cli_cases import data
from corpus import rand_invertible, rand_matrix
from invder import io
from invder import qlinalg as ql
from invder.deformation import Deformation, deformation_cocycles, from_cochain
from invder.errors import CheckFailed, InputError
from invder.extension import ExtensionCocycle
from invder.fixtures import abelian_invder, abelian_nilpotent_rep_data, h3_invder, plane_invder
from invder.representation import Representation


def _write(tmp_path, obj, name="in.json"):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return p


def test_bundled_fixtures_parse():
    assert io.parse_algebra(data("h3.json")).same_as(h3_invder())
    assert io.parse_algebra(data("abelian2.json")).same_as(plane_invder())
    assert io.parse_lie(data("sl2.json")).basis == ("h", "e", "f")


def test_negative_fixture_names_first_violation():
    with pytest.raises(CheckFailed, match="Inv condition"):
        io.parse_algebra(data("h3_diag.json"))


def test_reversed_bracket_entry_is_an_input_error(tmp_path):
    p = _write(tmp_path, {"dim": 3, "brackets": [{"i": 2, "j": 1, "k": 3, "c": "1"}],
                          "delta": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]})
    with pytest.raises(InputError, match="expected i<j"):
        io.parse_algebra(p)


@pytest.mark.parametrize("entry, message", [
    ({"i": 1, "j": 4, "k": 1, "c": "1"}, "out of range"),
    ({"i": 1, "j": 2, "k": 3, "c": 0.5}, "not an exact rational"),
    ({"i": 1, "j": 2, "k": 3, "c": "1/0"}, "not an exact rational"),
    ({"i": "1", "j": 2, "k": 3, "c": "1"}, "must be an integer"),
])
def test_bad_bracket_entries(entry, message):
    with pytest.raises(InputError, match=message):
        io.parse_brackets([entry], 3)


def test_duplicate_entries_rejected():
    e = {"i": 1, "j": 2, "k": 3, "c": "1"}
    with pytest.raises(InputError, match="duplicate"):
        io.parse_brackets([e, e], 3)


def test_missing_delta_and_bad_json(tmp_path):
    with pytest.raises(InputError, match="no 'delta'"):
        io.parse_algebra(_write(tmp_path, {"dim": 1}))
    with pytest.raises(InputError, match="invalid JSON"):
        io.parse_algebra(_write(tmp_path, "{not json"))
    with pytest.raises(InputError, match="cannot read"):
        io.parse_algebra(tmp_path / "missing.json")


def test_parse_matrix_shapes():
    assert np.all(io.parse_matrix({"matrix": [["1", "2/4"]]}) == ql.qarray([[1, "1/2"]]))
    with pytest.raises(InputError, match="ragged"):
        io.parse_matrix([["1"], ["1", "2"]])
    with pytest.raises(InputError, match="expected 2 rows"):
        io.parse_matrix([["1"]], 2, 1)


@st.composite
def structures(draw):
    rng = random.Random(draw(st.integers(0, 10 ** 6)))
    n = draw(st.integers(1, 4))
    return abelian_invder(n, rand_invertible(rng, n))


@given(structures())
@settings(max_examples=30, deadline=None)
def test_algebra_round_trip(S):
    L, delta = io.parse_algebra_data(json.loads(io.dumps(io.algebra_to_json(S))))
    assert L.same_structure(S.algebra) and L.basis == S.algebra.basis
    assert np.all(delta == S.delta)


def test_h3_round_trip_keeps_names_and_brackets():
    S = h3_invder()
    L, delta = io.parse_algebra_data(io.algebra_to_json(S))
    assert L.same_structure(S.algebra) and np.all(delta == S.delta)
    assert io.algebra_to_json(S)["brackets"] == [{"i": 1, "j": 2, "k": 3, "c": "1"}]


def test_representation_round_trip():
    rho, dv = abelian_nilpotent_rep_data(2)
    S = abelian_invder(2)
    r = Representation(S, np.stack(rho), dv)
    back = io.parse_representation(io.representation_to_json(r), S)
    assert np.all(back.rho == r.rho) and np.all(back.delta_v == r.delta_v)


def test_cocycle_round_trip():
    rng = random.Random(1)
    e = ExtensionCocycle(rand_matrix(rng, 2, 3), rand_matrix(rng, 2, 3), rand_invertible(rng, 2))
    assert io.parse_cocycle(io.cocycle_to_json(e), h3_invder()).equals(e)


def test_deformation_round_trip_with_and_without_base():
    S = h3_invder()
    for w in deformation_cocycles(S)[:3]:
        d = from_cochain(S, w)
        for include in (False, True):
            back = io.parse_deformation(io.deformation_to_json(d, include), S)
            assert all(np.all(a == b) for a, b in zip(back.mu, d.mu))
            assert all(np.all(a == b) for a, b in zip(back.delta, d.delta))


def test_deformation_accepts_dense_grids():
    S = h3_invder()
    grid = [[[str(x) for x in row] for row in plane] for plane in S.c]
    d = io.parse_deformation({"order": 1, "mu": [grid], "delta": [[["0"] * 3] * 3]}, S)
    assert np.all(d.mu[1] == S.c)


def test_deformation_entry_counts():
    S = h3_invder()
    with pytest.raises(InputError, match="'mu' must have"):
        io.parse_deformation({"order": 2, "mu": [[]], "delta": [[["0"] * 3] * 3] * 2}, S)


def test_dumps_is_deterministic():
    obj = io.algebra_to_json(h3_invder())
    assert io.dumps(obj) == io.dumps(json.loads(io.dumps(obj)))
    assert io.dumps(obj).endswith("}\n")


def test_trivial_deformation_serialises_order_zero_on_request():
    d = Deformation.trivial(h3_invder(), 1)
    assert len(io.deformation_to_json(d, include_base=True)["mu"]) == 2
