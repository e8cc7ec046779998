"""The InvDer cochain complex in degrees 1 and 2.

Coordinates
-----------
* 1-cochain: ``m x n`` matrix, column ``j`` is ``f(e_j)``.
* 2-cochain: ``m x C(n,2)`` matrix, one column per pair ``i < j`` in
  lexicographic order.  ``f(e_j, e_i) = -f(e_i, e_j)``, ``f(e_i, e_i) = 0``.
* 3-cochain: ``m x C(n,3)`` matrix, columns are triples ``i < j < k``.

Flattened vectors list basis tuples in order and, within each, the target
coordinate; triples are flattened block by block (f, then g, then h).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from . import qlinalg as ql
from .errors import InternalError, ShapeError
from .representation import Representation

# -- index bookkeeping -----------------------------------------------------


@lru_cache(maxsize=None)
def pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


@lru_cache(maxsize=None)
def triples(n: int) -> tuple[tuple[int, int, int], ...]:
    return tuple(combinations(range(n), 3))


@lru_cache(maxsize=None)
def _pair_index(n: int) -> dict:
    return {p: k for k, p in enumerate(pairs(n))}


def wedge2(f: np.ndarray, x, y) -> np.ndarray:
    """Evaluate the 2-cochain ``f`` on arbitrary vectors ``x, y``."""
    n = len(x)
    out = ql.zeros(f.shape[0])
    for k, (i, j) in enumerate(pairs(n)):
        coef = x[i] * y[j] - x[j] * y[i]
        if coef != 0:
            out = out + coef * f[:, k]
    return out


def cochain2_from_bilinear(mu: np.ndarray) -> np.ndarray:
    """``n x n x m`` grid ``mu[i, j] = f(e_i, e_j)`` to the pair layout."""
    n = mu.shape[0]
    if not pairs(n):
        return ql.zeros(mu.shape[2], 0)
    return np.stack([mu[i, j] for i, j in pairs(n)], axis=1)


def bilinear_from_cochain2(f: np.ndarray, n: int) -> np.ndarray:
    out = ql.zeros(n, n, f.shape[0])
    for k, (i, j) in enumerate(pairs(n)):
        out[i, j] = f[:, k]
        out[j, i] = -f[:, k]
    return out


@dataclass(frozen=True, eq=False)
class InvDerCochain2:
    f: np.ndarray  # 2-cochain
    g: np.ndarray  # 1-cochain
    h: np.ndarray  # 1-cochain

    def __post_init__(self):
        for name in ("f", "g", "h"):
            object.__setattr__(self, name, ql.frozen(getattr(self, name)))
        if self.g.shape != self.h.shape or self.f.shape[0] != self.g.shape[0]:
            raise ShapeError("components of a 2-cochain triple disagree in shape")

    def flatten(self) -> np.ndarray:
        return np.concatenate([_flat(self.f), _flat(self.g), _flat(self.h)])

    def __add__(self, other):
        return InvDerCochain2(self.f + other.f, self.g + other.g, self.h + other.h)

    def __sub__(self, other):
        return InvDerCochain2(self.f - other.f, self.g - other.g, self.h - other.h)

    def __neg__(self):
        return InvDerCochain2(-self.f, -self.g, -self.h)

    def is_zero(self) -> bool:
        return ql.is_zero(self.flatten())

    def equals(self, other) -> bool:
        return bool(np.all(self.flatten() == other.flatten()))


@dataclass(frozen=True, eq=False)
class InvDerCochain3:
    a: np.ndarray  # 3-cochain
    b: np.ndarray  # 2-cochain
    c: np.ndarray  # 2-cochain

    def flatten(self) -> np.ndarray:
        return np.concatenate([_flat(self.a), _flat(self.b), _flat(self.c)])

    def is_zero(self) -> bool:
        return ql.is_zero(self.flatten())


def _flat(a: np.ndarray) -> np.ndarray:
    # column (basis tuple) major, then target coordinate
    return np.asarray(a, dtype=object).T.reshape(-1)


def _unflat(v: np.ndarray, m: int, cols: int) -> np.ndarray:
    return ql.qarray(v).reshape(cols, m).T.copy()


def unflatten2(v, m: int, n: int) -> InvDerCochain2:
    p = len(pairs(n))
    v = ql.qarray(v)
    if v.shape != (m * p + 2 * m * n,):
        raise ShapeError(f"expected {m * p + 2 * m * n} coordinates, got {v.shape}")
    return InvDerCochain2(_unflat(v[: m * p], m, p),
                          _unflat(v[m * p: m * p + m * n], m, n),
                          _unflat(v[m * p + m * n:], m, n))


def unflatten1(v, m: int, n: int) -> np.ndarray:
    return _unflat(v, m, n)


def flatten1(f) -> np.ndarray:
    return _flat(ql.qarray(f))


def c1_dim(r: Representation) -> int:
    return r.target_dim * r.source.dim


def c2_dim(r: Representation) -> int:
    m, n = r.target_dim, r.source.dim
    return m * len(pairs(n)) + 2 * m * n


def c3_dim(r: Representation) -> int:
    m, n = r.target_dim, r.source.dim
    return m * len(triples(n)) + 2 * m * len(pairs(n))


# -- Chevalley-Eilenberg differential ---------------------------------------


def ce_coboundary(deg: int, c, rho, f) -> np.ndarray:
    """Chevalley-Eilenberg coboundary of a degree 1 or 2 cochain.

    ``c`` are structure constants, ``rho`` the ``n x m x m`` action.
    """
    c, rho, f = ql.qarray(c), ql.qarray(rho), ql.qarray(f)
    n = c.shape[0]
    m = rho.shape[1] if rho.ndim == 3 else f.shape[0]
    if deg == 1:
        if f.shape != (m, n):
            raise ShapeError(f"1-cochain must be {m} x {n}, got {f.shape}")
        cols = [rho[i] @ f[:, j] - rho[j] @ f[:, i] - f @ c[i, j] for i, j in pairs(n)]
        return np.stack(cols, axis=1) if cols else ql.zeros(m, 0)
    if deg == 2:
        if f.shape != (m, len(pairs(n))):
            raise ShapeError(f"2-cochain must be {m} x {len(pairs(n))}, got {f.shape}")
        e = ql.identity(n)
        pi = _pair_index(n)
        cols = []
        for i, j, k in triples(n):
            col = rho[i] @ f[:, pi[j, k]] - rho[j] @ f[:, pi[i, k]] + rho[k] @ f[:, pi[i, j]]
            col = (col - wedge2(f, c[i, j], e[k]) + wedge2(f, c[i, k], e[j])
                   - wedge2(f, c[j, k], e[i]))
            cols.append(col)
        return np.stack(cols, axis=1) if cols else ql.zeros(m, 0)
    raise ValueError(f"unsupported degree {deg}; only 1 and 2 are defined")


def ce_differential(deg: int, r: Representation, f) -> np.ndarray:
    return ce_coboundary(deg, r.source.c, r.rho, f)


# -- the four twisting operators ----------------------------------------------


def _check1(r: Representation, f) -> np.ndarray:
    f = ql.qarray(f)
    if f.shape != (r.target_dim, r.source.dim):
        raise ShapeError(f"1-cochain must be {r.target_dim} x {r.source.dim}, got {f.shape}")
    return f


def _check2(r: Representation, f) -> np.ndarray:
    f = ql.qarray(f)
    if f.shape != (r.target_dim, len(pairs(r.source.dim))):
        raise ShapeError(f"2-cochain must be {r.target_dim} x {len(pairs(r.source.dim))}, "
                         f"got {f.shape}")
    return f


def delta1(r: Representation, f) -> np.ndarray:
    """``f delta - delta_V f``."""
    f = _check1(r, f)
    return f @ r.delta - r.delta_v @ f


# Used in the Inv slot of the first differential; it coincides with delta1.
delta1_inv = delta1


def delta2(r: Representation, f) -> np.ndarray:
    """``f(delta x, y) + f(x, delta y) - delta_V f(x, y)``."""
    f = _check2(r, f)
    d, e = r.delta, ql.identity(r.source.dim)
    cols = [wedge2(f, d[:, i], e[j]) + wedge2(f, e[i], d[:, j]) - r.delta_v @ f[:, k]
            for k, (i, j) in enumerate(pairs(r.source.dim))]
    return np.stack(cols, axis=1) if cols else ql.zeros(r.target_dim, 0)


def delta2_inv(r: Representation, f) -> np.ndarray:
    """``f(delta x, delta y) - delta_V^2 f(x, y)``."""
    f = _check2(r, f)
    d, dv = r.delta, r.delta_v
    cols = [wedge2(f, d[:, i], d[:, j]) - dv @ dv @ f[:, k]
            for k, (i, j) in enumerate(pairs(r.source.dim))]
    return np.stack(cols, axis=1) if cols else ql.zeros(r.target_dim, 0)


def phi1(r: Representation, h) -> np.ndarray:
    """``delta_V h([x,y]) + h(delta [x,y]) - rho(delta x) h(y) + rho(delta y) h(x)``."""
    h = _check1(r, h)
    c, d, dv = r.source.c, r.delta, r.delta_v
    cols = []
    for i, j in pairs(r.source.dim):
        b = c[i, j]
        cols.append(dv @ h @ b + h @ d @ b
                    - r.act(d[:, i]) @ h[:, j] + r.act(d[:, j]) @ h[:, i])
    return np.stack(cols, axis=1) if cols else ql.zeros(r.target_dim, 0)


# -- the InvDer differentials ---------------------------------------------------


def d1(r: Representation, f) -> InvDerCochain2:
    f = _check1(r, f)
    return InvDerCochain2(ce_differential(1, r, f), -delta1(r, f), -delta1_inv(r, f))


def d2(r: Representation, w: InvDerCochain2) -> InvDerCochain3:
    return InvDerCochain3(
        ce_differential(2, r, w.f),
        ce_differential(1, r, w.g) + delta2(r, w.f),
        phi1(r, w.h) - delta2_inv(r, w.f),
    )


def lieder_d1(r: Representation, f) -> tuple[np.ndarray, np.ndarray]:
    """First differential with the Inv component dropped (derivation-pair complex)."""
    w = d1(r, f)
    return w.f, w.g


def lieder_d2(r: Representation, f, g) -> tuple[np.ndarray, np.ndarray]:
    return ce_differential(2, r, f), ce_differential(1, r, g) + delta2(r, f)


# -- matrices of the differentials ---------------------------------------------
#
# Assembled block by block rather than by applying d1/d2 to every unit cochain:
# the unit-vector route spends almost all its time multiplying zeros.


class _Blocks:
    """A matrix of ``m x m`` blocks with named row and column block groups."""

    def __init__(self, m: int, rows: tuple[int, ...], cols: tuple[int, ...]):
        self.m = m
        self.row_off = np.cumsum((0,) + rows) * m
        self.col_off = np.cumsum((0,) + cols) * m
        self.mat = ql.zeros(int(self.row_off[-1]), int(self.col_off[-1]))

    def add(self, rg: int, r: int, cg: int, c: int, a):
        m = self.m
        r0, c0 = self.row_off[rg] + r * m, self.col_off[cg] + c * m
        if np.ndim(a) == 0:
            if a != 0:
                for t in range(m):
                    self.mat[r0 + t, c0 + t] += a
        else:
            self.mat[r0:r0 + m, c0:c0 + m] += a


def _wedge_terms(x, y):
    """``f(x, y) = sum coef * f[:, k]`` as ``(k, coef)`` pairs."""
    for k, (i, j) in enumerate(pairs(len(x))):
        coef = x[i] * y[j] - x[j] * y[i]
        if coef != 0:
            yield k, coef


def _add_ce1(B: _Blocks, rg: int, cg: int, r: Representation, sign=1):
    c, rho = r.source.c, r.rho
    for p, (i, j) in enumerate(pairs(r.source.dim)):
        B.add(rg, p, cg, j, sign * rho[i])
        B.add(rg, p, cg, i, -sign * rho[j])
        for l in range(r.source.dim):
            B.add(rg, p, cg, l, -sign * c[i, j, l])


def _add_delta1(B: _Blocks, rg: int, cg: int, r: Representation, sign=1):
    d, dv = r.delta, r.delta_v
    n = r.source.dim
    for j in range(n):
        for l in range(n):
            B.add(rg, j, cg, l, sign * d[l, j])
        B.add(rg, j, cg, j, -sign * dv)


def d1_matrix(r: Representation) -> np.ndarray:
    m, n = r.target_dim, r.source.dim
    B = _Blocks(m, (len(pairs(n)), n, n), (n,))
    _add_ce1(B, 0, 0, r)
    _add_delta1(B, 1, 0, r, -1)
    _add_delta1(B, 2, 0, r, -1)
    return B.mat


def d2_matrix(r: Representation) -> np.ndarray:
    m, n = r.target_dim, r.source.dim
    c, d, dv, rho = r.source.c, r.delta, r.delta_v, r.rho
    e = ql.identity(n)
    pi = _pair_index(n)
    B = _Blocks(m, (len(triples(n)), len(pairs(n)), len(pairs(n))), (len(pairs(n)), n, n))
    for t, (i, j, k) in enumerate(triples(n)):
        B.add(0, t, 0, pi[j, k], rho[i])
        B.add(0, t, 0, pi[i, k], -rho[j])
        B.add(0, t, 0, pi[i, j], rho[k])
        for sign, x, y in ((-1, c[i, j], e[k]), (1, c[i, k], e[j]), (-1, c[j, k], e[i])):
            for q, coef in _wedge_terms(x, y):
                B.add(0, t, 0, q, sign * coef)
    _add_ce1(B, 1, 1, r)
    rho_d = np.einsum("li,ljk->ijk", d, rho) if n else rho
    for p, (i, j) in enumerate(pairs(n)):
        # delta2 of f
        for x, y in ((d[:, i], e[j]), (e[i], d[:, j])):
            for q, coef in _wedge_terms(x, y):
                B.add(1, p, 0, q, coef)
        B.add(1, p, 0, p, -dv)
        # phi1 of h minus delta2_inv of f
        b = c[i, j]
        db = d @ b
        for l in range(n):
            if b[l] != 0:
                B.add(2, p, 2, l, b[l] * dv)
            B.add(2, p, 2, l, db[l])
        B.add(2, p, 2, j, -rho_d[i])
        B.add(2, p, 2, i, rho_d[j])
        for q, coef in _wedge_terms(d[:, i], d[:, j]):
            B.add(2, p, 0, q, -coef)
        B.add(2, p, 0, p, dv @ dv)
    return B.mat


# -- cocycles and cohomology ------------------------------------------------------


def h1(r: Representation) -> tuple[int, list[np.ndarray]]:
    """Kernel of the first differential (the degree-1 cocycles)."""
    m, n = r.target_dim, r.source.dim
    basis = [unflatten1(v, m, n) for v in ql.kernel_basis(d1_matrix(r))]
    return len(basis), basis


@dataclass(frozen=True)
class SecondCohomology:
    z2: tuple[np.ndarray, ...]        # flattened cocycle basis
    b2: tuple[np.ndarray, ...]        # flattened coboundary basis (echelon rows)
    representatives: tuple[InvDerCochain2, ...]

    @property
    def z2_dim(self) -> int:
        return len(self.z2)

    @property
    def b2_dim(self) -> int:
        return len(self.b2)

    @property
    def dim(self) -> int:
        return len(self.representatives)


def cocycles2(r: Representation) -> list[np.ndarray]:
    return ql.kernel_basis(d2_matrix(r))


def coboundaries2(r: Representation) -> np.ndarray:
    """Echelon basis (rows) of the image of the first differential."""
    m1 = d1_matrix(r)
    return ql.span_basis(list(m1.T), c2_dim(r))


def h2(r: Representation) -> SecondCohomology:
    z = cocycles2(r)
    b = coboundaries2(r)
    b_rows = list(b)
    for i, v in enumerate(b_rows):
        if not ql.in_span(z, v):
            raise InternalError(f"coboundary {i} is not a cocycle")
    dim = ql.quotient_dimension(z, b_rows)

    # reduce cocycles against the coboundary echelon, keep the independent ones
    b_piv = [next(k for k, x in enumerate(row) if x != 0) for row in b_rows]
    ech, ech_piv = list(b_rows), list(b_piv)
    reps = []
    m, n = r.target_dim, r.source.dim
    for v in z:
        full = ql.reduce_modulo(v, ech, ech_piv)
        if ql.is_zero(full):
            continue
        reps.append(unflatten2(ql.reduce_modulo(v, b_rows, b_piv), m, n))
        full = full / full[next(k for k, x in enumerate(full) if x != 0)]
        ech, ech_piv = _insert_echelon(ech, ech_piv, full)
    if len(reps) != dim:
        raise InternalError("representative count disagrees with quotient dimension")
    return SecondCohomology(tuple(z), tuple(b_rows), tuple(reps))


def diagonal_lift_matrix(m: int, n: int) -> np.ndarray:
    """Embeds ``(f, g)`` coordinates into ``C^2`` as the triple ``(f, g, g)``."""
    p, q = m * len(pairs(n)), m * n
    emb = ql.zeros(p + 2 * q, p + q)
    emb[:p, :p] = ql.identity(p)
    emb[p:p + q, p:] = ql.identity(q)
    emb[p + q:, p:] = ql.identity(q)
    return emb


def diagonal_cocycles(r: Representation) -> list[InvDerCochain2]:
    """Basis of the 2-cocycles of the form ``(f, g, g)``.

    With adjoint coefficients these are the infinitesimals of deformations;
    with trivial coefficients they are the extension cocycles ``(gamma, chi)``.
    """
    m, n = r.target_dim, r.source.dim
    emb = diagonal_lift_matrix(m, n)
    return [unflatten2(emb @ v, m, n) for v in ql.kernel_basis(d2_matrix(r) @ emb)]


def _insert_echelon(rows, piv, new):
    p = next(k for k, x in enumerate(new) if x != 0)
    rows = [row - row[p] * new if row[p] != 0 else row for row in rows]
    rows.append(new)
    piv = piv + [p]
    return rows, piv


def is_cocycle(r: Representation, w: InvDerCochain2) -> bool:
    return d2(r, w).is_zero()


def is_coboundary(r: Representation, w: InvDerCochain2) -> bool:
    return ql.solve(d1_matrix(r), w.flatten()) is not None
