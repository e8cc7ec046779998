"""JSON file formats.

Rationals are written as strings ``"p/q"`` (or ``"p"``).  Indices in files are
1-based.  Matrices are lists of rows; a linear map's column ``j`` is the image
of ``e_j``.

Algebra file::

    {"dim": 3, "basis": ["e1", "e2", "e3"],
     "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1"}],
     "delta": [["0", "-1", "0"], ["1", "1", "0"], ["0", "0", "1"]]}

Only ``i < j`` bracket entries are allowed; omitted entries are zero and
``"delta"`` may be omitted for a bare Lie algebra.
"""
from __future__ import annotations

import json
from itertools import product
from pathlib import Path

import numpy as np

from . import qlinalg as ql
from .cohomology import pairs
from .deformation import Deformation
from .errors import CheckFailed, InputError
from .extension import ExtensionCocycle
from .lie import InvDerStructure, LieAlgebra, lie_check
from .representation import Representation


def load_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _q(x, where: str):
    try:
        return ql.to_q(x)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"{where}: {x!r} is not an exact rational") from exc


def parse_matrix(data, rows: int | None = None, cols: int | None = None, where="matrix"):
    if isinstance(data, dict) and "matrix" in data:
        data = data["matrix"]
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise InputError(f"{where}: expected a list of rows")
    if rows is not None and len(data) != rows:
        raise InputError(f"{where}: expected {rows} rows, got {len(data)}")
    widths = {len(r) for r in data}
    if len(widths) > 1:
        raise InputError(f"{where}: ragged rows")
    width = widths.pop() if widths else (cols or 0)
    if cols is not None and width != cols:
        raise InputError(f"{where}: expected {cols} columns, got {width}")
    out = ql.zeros(len(data), width)
    for a, row in enumerate(data):
        for b, x in enumerate(row):
            out[a, b] = _q(x, f"{where}[{a + 1}][{b + 1}]")
    return out


def matrix_to_json(a) -> list:
    return [[ql.frac_str(x) for x in row] for row in np.asarray(a, dtype=object)]


def vector_to_json(v) -> list:
    return [ql.frac_str(x) for x in v]


def _int(obj, key, where):
    v = obj.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise InputError(f"{where}: '{key}' must be an integer")
    return v


def parse_brackets(entries, n: int, where="brackets") -> np.ndarray:
    if not isinstance(entries, list):
        raise InputError(f"{where}: expected a list of bracket entries")
    c = ql.zeros(n, n, n)
    seen = set()
    for t, e in enumerate(entries):
        loc = f"{where}[{t + 1}]"
        if not isinstance(e, dict):
            raise InputError(f"{loc}: expected an object with i, j, k, c")
        i, j, k = (_int(e, key, loc) for key in "ijk")
        for name, v in zip("ijk", (i, j, k)):
            if not 1 <= v <= n:
                raise InputError(f"{loc}: index {name}={v} out of range 1..{n}")
        if i >= j:
            raise InputError(f"{loc}: expected i<j, got i={i}, j={j}")
        if (i, j, k) in seen:
            raise InputError(f"{loc}: duplicate entry ({i},{j},{k})")
        seen.add((i, j, k))
        v = _q(e.get("c"), f"{loc}.c")
        c[i - 1, j - 1, k - 1] = v
        c[j - 1, i - 1, k - 1] = -v
    return c


def brackets_to_json(c) -> list:
    n = c.shape[0]
    return [{"i": i + 1, "j": j + 1, "k": k + 1, "c": ql.frac_str(c[i, j, k])}
            for i, j in pairs(n) for k in range(n) if c[i, j, k] != 0]


def parse_algebra_data(data, where="algebra"):
    """Structural parse: ``(LieAlgebra, delta or None)`` without any validation."""
    if not isinstance(data, dict):
        raise InputError(f"{where}: expected a JSON object")
    n = _int(data, "dim", where)
    if n < 0:
        raise InputError(f"{where}: negative dimension")
    basis = data.get("basis") or [f"e{i + 1}" for i in range(n)]
    if len(basis) != n or not all(isinstance(b, str) for b in basis):
        raise InputError(f"{where}: basis must list {n} names")
    c = parse_brackets(data.get("brackets", []), n, f"{where}.brackets")
    delta = None
    if data.get("delta") is not None:
        delta = parse_matrix(data["delta"], n, n, f"{where}.delta")
    return LieAlgebra(c, tuple(basis)), delta


def parse_algebra(path) -> InvDerStructure:
    """Read and fully validate an InvDer Lie algebra file."""
    L, delta = parse_algebra_data(load_json(path), str(path))
    lie = lie_check(L.c)
    if not lie:
        raise CheckFailed(f"{path}: not a Lie algebra: {lie.first}", lie)
    if delta is None:
        raise InputError(f"{path}: no 'delta' given")
    return InvDerStructure.checked(L, delta)


def parse_lie(path) -> LieAlgebra:
    L, _ = parse_algebra_data(load_json(path), str(path))
    lie = lie_check(L.c)
    if not lie:
        raise CheckFailed(f"{path}: not a Lie algebra: {lie.first}", lie)
    return L


def algebra_to_json(S) -> dict:
    L = S.algebra if isinstance(S, InvDerStructure) else S
    out = {"dim": L.dim, "basis": list(L.basis), "brackets": brackets_to_json(L.c)}
    if isinstance(S, InvDerStructure):
        out["delta"] = matrix_to_json(S.delta)
    return out


def parse_representation(data, S: InvDerStructure, where="representation") -> Representation:
    if not isinstance(data, dict):
        raise InputError(f"{where}: expected a JSON object")
    m = _int(data, "target_dim", where)
    rho = data.get("rho")
    if not isinstance(rho, list) or len(rho) != S.dim:
        raise InputError(f"{where}: 'rho' must list {S.dim} matrices")
    mats = [parse_matrix(r, m, m, f"{where}.rho[{i + 1}]") for i, r in enumerate(rho)]
    dv = parse_matrix(data.get("delta_v"), m, m, f"{where}.delta_v")
    stacked = np.stack(mats) if mats else ql.zeros(0, m, m)
    return Representation(S, stacked, dv)


def representation_to_json(r: Representation) -> dict:
    return {"target_dim": r.target_dim, "rho": [matrix_to_json(a) for a in r.rho],
            "delta_v": matrix_to_json(r.delta_v)}


def parse_cocycle(data, S: InvDerStructure, where="cocycle") -> ExtensionCocycle:
    """``{"v_dim": m, "delta_v": m x m, "gamma": m x C(n,2), "chi": m x n}``.

    The columns of ``gamma`` are the pairs ``i < j`` in lexicographic order.
    """
    if not isinstance(data, dict):
        raise InputError(f"{where}: expected a JSON object")
    m = _int(data, "v_dim", where)
    n = S.dim
    dv = parse_matrix(data.get("delta_v"), m, m, f"{where}.delta_v")
    gamma = parse_matrix(data.get("gamma"), m, len(pairs(n)), f"{where}.gamma")
    chi = parse_matrix(data.get("chi"), m, n, f"{where}.chi")
    return ExtensionCocycle(gamma, chi, dv)


def cocycle_to_json(e: ExtensionCocycle) -> dict:
    return {"v_dim": e.v_dim, "delta_v": matrix_to_json(e.delta_v),
            "gamma": matrix_to_json(e.gamma), "chi": matrix_to_json(e.chi)}


def _parse_grid(g, n: int, where: str) -> np.ndarray:
    if isinstance(g, list) and all(isinstance(e, dict) for e in g):
        return parse_brackets(g, n, where)
    try:
        arr = np.array(g, dtype=object)
    except ValueError as exc:
        raise InputError(f"{where}: ragged structure-constant grid") from exc
    if arr.shape != (n, n, n):
        raise InputError(f"{where}: expected bracket entries or an {n}x{n}x{n} grid")
    out = ql.zeros(n, n, n)
    for idx in product(range(n), repeat=3):
        out[idx] = _q(arr[idx], f"{where}{list(i + 1 for i in idx)}")
    return out


def parse_deformation(data, S: InvDerStructure, where="deformation") -> Deformation:
    """``{"order": N, "mu": [...], "delta": [...]}``; the order-0 terms may be omitted."""
    if not isinstance(data, dict):
        raise InputError(f"{where}: expected a JSON object")
    N = _int(data, "order", where)
    mus, deltas = data.get("mu"), data.get("delta")
    if not isinstance(mus, list) or len(mus) not in (N, N + 1):
        raise InputError(f"{where}: 'mu' must have {N} or {N + 1} entries")
    if not isinstance(deltas, list) or len(deltas) not in (N, N + 1):
        raise InputError(f"{where}: 'delta' must have {N} or {N + 1} entries")
    n = S.dim
    mu = [_parse_grid(g, n, f"{where}.mu[{i}]") for i, g in enumerate(mus, start=N + 1 - len(mus))]
    de = [parse_matrix(d, n, n, f"{where}.delta[{i}]")
          for i, d in enumerate(deltas, start=N + 1 - len(deltas))]
    if len(mu) == N:
        mu.insert(0, S.c)
    if len(de) == N:
        de.insert(0, S.delta)
    return Deformation(S, tuple(mu), tuple(de))


def deformation_to_json(d: Deformation, include_base: bool = False) -> dict:
    start = 0 if include_base else 1
    return {"order": d.order,
            "mu": [brackets_to_json(m) for m in d.mu[start:]],
            "delta": [matrix_to_json(x) for x in d.delta[start:]]}
