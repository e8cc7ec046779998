"""Representations ``(V; rho, delta_V)`` of InvDer Lie algebras."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

import numpy as np

from . import qlinalg as ql
from .errors import CheckFailed, InternalError, ShapeError, SingularMatrixError
from .lie import InvDerStructure, LieAlgebra, ad_map, commutator, is_invder, lie_check
from .report import Check, Failure


@dataclass(frozen=True, eq=False)
class Representation:
    source: InvDerStructure
    rho: np.ndarray       # shape (n, m, m); rho[i] is the action of e_i
    delta_v: np.ndarray   # shape (m, m)

    def __post_init__(self):
        rho = ql.frozen(self.rho)
        dv = ql.frozen(self.delta_v)
        n = self.source.dim
        m = dv.shape[0] if dv.ndim == 2 else -1
        if dv.shape != (m, m):
            raise ShapeError(f"delta_V must be square, got {dv.shape}")
        if rho.size == 0:
            rho = ql.frozen(ql.zeros(n, m, m))
        if rho.shape != (n, m, m):
            raise ShapeError(f"rho must have shape ({n}, {m}, {m}), got {rho.shape}")
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "delta_v", dv)

    @property
    def target_dim(self) -> int:
        return self.delta_v.shape[0]

    @property
    def algebra(self) -> LieAlgebra:
        return self.source.algebra

    @property
    def delta(self) -> np.ndarray:
        return self.source.delta

    def act(self, x) -> np.ndarray:
        """The operator ``rho(x)`` for a vector ``x`` of the algebra."""
        return np.einsum("i,ijk->jk", ql.qarray(x), self.rho)


REP_CLAUSES = ("rho(delta x) delta_V = delta_V^2 rho(x)",
               "rho([x,y]) delta_V = rho(delta x) rho(y) - rho(delta y) rho(x)",
               "delta_V rho(x) = rho(delta x) + rho(x) delta_V")


def check_representation(r: Representation) -> Check:
    """The three compatibility equations between rho, delta and delta_V."""
    dv = r.delta_v
    if ql.det(dv) == 0:
        raise SingularMatrixError("delta_V is singular")
    n, c, d = r.source.dim, r.source.c, r.source.delta
    rho_d = np.einsum("li,ljk->ijk", d, r.rho)  # rho(delta e_i)
    failures = []
    for i in range(n):
        res = rho_d[i] @ dv - dv @ dv @ r.rho[i]
        if not ql.is_zero(res):
            failures.append(Failure(REP_CLAUSES[0], (i,), res))
    for i, j in combinations(range(n), 2):
        res = r.act(c[i, j]) @ dv - (rho_d[i] @ r.rho[j] - rho_d[j] @ r.rho[i])
        if not ql.is_zero(res):
            failures.append(Failure(REP_CLAUSES[1], (i, j), res))
    for i in range(n):
        res = dv @ r.rho[i] - rho_d[i] - r.rho[i] @ dv
        if not ql.is_zero(res):
            failures.append(Failure(REP_CLAUSES[2], (i,), res))
    failed = {f.clause for f in failures}
    return Check("representation", tuple(failures),
                 tuple(cl for cl in REP_CLAUSES if cl not in failed))


def check_lie_action(r: Representation) -> Check:
    """Whether rho is also a Lie algebra map into gl(V).

    Not implied by the three compatibility equations, but needed for the
    Chevalley-Eilenberg differential to square to zero and for the semidirect
    bracket to satisfy Jacobi.
    """
    failures = []
    for i, j in combinations(range(r.source.dim), 2):
        res = r.act(r.source.c[i, j]) - commutator(r.rho[i], r.rho[j])
        if not ql.is_zero(res):
            failures.append(Failure("rho([x,y]) = [rho(x), rho(y)]", (i, j), res))
    return Check("Lie action", tuple(failures))


def adjoint_rep(S: InvDerStructure) -> Representation:
    n = S.dim
    e = ql.identity(n)
    rho = np.stack([ad_map(S.c, e[i]) for i in range(n)]) if n else ql.zeros(0, 0, 0)
    return Representation(S, rho, S.delta)


def trivial_rep(S: InvDerStructure, m: int, delta_v=None) -> Representation:
    dv = ql.identity(m) if delta_v is None else ql.qarray(delta_v)
    if dv.shape != (m, m):
        raise ShapeError(f"delta_V must be {m} x {m}, got {dv.shape}")
    if ql.det(dv) == 0:
        raise SingularMatrixError("delta_V is singular")
    return Representation(S, ql.zeros(S.dim, m, m), dv)


class GlCriteria(NamedTuple):
    derivation: bool
    inv_derivation: bool


def check_gl_derivation_criteria(r: Representation) -> GlCriteria:
    """Pairwise tests ``rho(x) D rho(y) = rho(y) D rho(x)`` for D = delta_V, delta_V^2."""
    dv = r.delta_v
    dv2 = dv @ dv
    der = inv = True
    for i, j in combinations(range(r.source.dim), 2):
        a, b = r.rho[i], r.rho[j]
        der = der and bool(np.all(a @ dv @ b == b @ dv @ a))
        inv = inv and bool(np.all(a @ dv2 @ b == b @ dv2 @ a))
    return GlCriteria(der, inv)


def gl_direct_conditions(r: Representation, exhaustive: bool = False) -> GlCriteria:
    """Leibniz and Inv conditions of ``A -> delta_V A`` on gl(V), tested directly.

    By default only the generators ``rho(e_i)`` are tested; ``exhaustive``
    tests every pair of matrix units instead.
    """
    dv = r.delta_v
    m = r.target_dim
    if exhaustive:
        gens = []
        for a in range(m):
            for b in range(m):
                u = ql.zeros(m, m)
                u[a, b] = ql.Fraction(1)
                gens.append(u)
    else:
        gens = list(r.rho)
    der = inv = True
    for a, b in combinations(gens, 2):
        der = der and bool(np.all(dv @ commutator(a, b)
                                  == commutator(dv @ a, b) + commutator(a, dv @ b)))
        inv = inv and bool(np.all(commutator(dv @ a, dv @ b) == dv @ dv @ commutator(a, b)))
    return GlCriteria(der, inv)


def semidirect(r: Representation) -> InvDerStructure:
    """``L + V`` with ``[x+a, y+b] = [x,y] + rho(x) b - rho(y) a`` and ``delta + delta_V``.

    L occupies coordinates ``0..n-1`` and V the last ``m``.
    """
    rep = check_representation(r)
    if not rep:
        raise CheckFailed(f"not a representation: {rep.first}", rep)
    n, m = r.source.dim, r.target_dim
    c = ql.zeros(n + m, n + m, n + m)
    c[:n, :n, :n] = r.source.c
    for i in range(n):
        for a in range(m):
            c[i, n + a, n:] = r.rho[i][:, a]
            c[n + a, i, n:] = -r.rho[i][:, a]
    d = ql.zeros(n + m, n + m)
    d[:n, :n] = r.source.delta
    d[n:, n:] = r.delta_v
    lie = lie_check(c)
    if not lie:
        raise CheckFailed(f"semidirect bracket is not Lie (rho is not a Lie action?): {lie.first}",
                          lie)
    names = r.source.algebra.basis + tuple(f"v{a + 1}" for a in range(m))
    total = InvDerStructure(LieAlgebra(c, names), d)
    check = is_invder(total.algebra, d)
    if not check:
        raise InternalError(f"semidirect product fails {check.first}")
    return total
