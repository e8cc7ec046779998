"""Central extensions of an InvDer Lie algebra by an abelian one.

Extensions live on ``L + V`` with L in coordinates ``0..n-1`` and V in the
last ``m`` coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import qlinalg as ql
from .cohomology import (InvDerCochain2, d1, d1_matrix, d2, diagonal_cocycles, pairs, triples,
                         unflatten1, wedge2)
from .errors import CheckFailed, InputError, InternalError, ShapeError, SingularMatrixError
from .lie import InvDerStructure, LieAlgebra, is_homomorphism, is_invder, lie_check
from .report import Check, Failure
from .representation import trivial_rep


@dataclass(frozen=True, eq=False)
class ExtensionCocycle:
    gamma: np.ndarray    # m x C(n,2)
    chi: np.ndarray      # m x n
    delta_v: np.ndarray  # m x m

    def __post_init__(self):
        for name in ("gamma", "chi", "delta_v"):
            object.__setattr__(self, name, ql.frozen(getattr(self, name)))
        m = self.delta_v.shape[0]
        if self.delta_v.shape != (m, m) or self.gamma.shape[0] != m or self.chi.shape[0] != m:
            raise ShapeError("gamma, chi and delta_V disagree on dim V")

    @property
    def v_dim(self) -> int:
        return self.delta_v.shape[0]

    def as_cochain(self) -> InvDerCochain2:
        return InvDerCochain2(self.gamma, self.chi, self.chi)

    def equals(self, other: "ExtensionCocycle") -> bool:
        return all(a.shape == b.shape and bool(np.all(a == b)) for a, b in
                   ((self.gamma, other.gamma), (self.chi, other.chi),
                    (self.delta_v, other.delta_v)))


@dataclass(frozen=True, eq=False)
class CentralExtension:
    base: InvDerStructure
    total: InvDerStructure
    v_dim: int

    @property
    def injection(self) -> np.ndarray:
        n, m = self.base.dim, self.v_dim
        i = ql.zeros(n + m, m)
        i[n:, :] = ql.identity(m)
        return i

    @property
    def projection(self) -> np.ndarray:
        n, m = self.base.dim, self.v_dim
        p = ql.zeros(n, n + m)
        p[:, :n] = ql.identity(n)
        return p

    @property
    def delta_v(self) -> np.ndarray:
        n = self.base.dim
        return self.total.delta[n:, n:]


def _check_shapes(S: InvDerStructure, e: ExtensionCocycle):
    n, m = S.dim, e.v_dim
    if e.gamma.shape != (m, len(pairs(n))) or e.chi.shape != (m, n):
        raise ShapeError(f"cocycle shapes {e.gamma.shape}, {e.chi.shape} do not fit "
                         f"dim L = {n}, dim V = {m}")
    if ql.det(e.delta_v) == 0:
        raise SingularMatrixError("delta_V is singular")


COCYCLE_CLAUSES = ("gamma cyclic", "gamma-chi Leibniz", "gamma-chi Inv")


def extension_cocycles(S: InvDerStructure, delta_v) -> list[ExtensionCocycle]:
    """Basis of the cocycles ``(gamma, chi)`` for a given ``(V, delta_V)``."""
    delta_v = ql.qarray(delta_v)
    r = trivial_rep(S, delta_v.shape[0], delta_v)
    return [ExtensionCocycle(w.f, w.g, delta_v) for w in diagonal_cocycles(r)]


def cocycle_residuals(S: InvDerStructure, e: ExtensionCocycle):
    """Yield ``(clause, indices, residual)`` for the three cocycle equations."""
    n, c, d = S.dim, S.c, S.delta
    g, chi, dv = e.gamma, e.chi, e.delta_v
    eye = ql.identity(n)
    for i, j, k in triples(n):
        res = (wedge2(g, c[i, j], eye[k]) + wedge2(g, c[j, k], eye[i])
               + wedge2(g, c[k, i], eye[j]))
        yield "gamma cyclic", (i, j, k), res
    for p, (i, j) in enumerate(pairs(n)):
        res = chi @ c[i, j] + dv @ g[:, p] - wedge2(g, d[:, i], eye[j]) - wedge2(g, eye[i], d[:, j])
        yield "gamma-chi Leibniz", (i, j), res
    for p, (i, j) in enumerate(pairs(n)):
        res = chi @ d @ c[i, j] + dv @ chi @ c[i, j] + dv @ dv @ g[:, p] - wedge2(g, d[:, i], d[:, j])
        yield "gamma-chi Inv", (i, j), res


def check_extension_cocycle(S: InvDerStructure, e: ExtensionCocycle) -> Check:
    """The three cocycle equations, cross-checked against the cohomology complex."""
    _check_shapes(S, e)
    failures = tuple(Failure(cl, idx, res) for cl, idx, res in cocycle_residuals(S, e)
                     if not ql.is_zero(res))
    in_z2 = d2(trivial_rep(S, e.v_dim, e.delta_v), e.as_cochain()).is_zero()
    if in_z2 != (not failures):
        raise InternalError("cocycle equations disagree with the second differential")
    failed = {f.clause for f in failures}
    return Check("extension cocycle", failures,
                 tuple(cl for cl in COCYCLE_CLAUSES if cl not in failed))


def build_extension(S: InvDerStructure, e: ExtensionCocycle,
                    v_names: tuple[str, ...] | None = None) -> CentralExtension:
    """``[x+u, y+v] = [x,y] + gamma(x,y)`` and ``x+u -> delta x + chi(x) + delta_V u``."""
    report = check_extension_cocycle(S, e)
    if not report:
        raise CheckFailed(f"not a cocycle: {report.first}", report)
    n, m = S.dim, e.v_dim
    c = ql.zeros(n + m, n + m, n + m)
    c[:n, :n, :n] = S.c
    for p, (i, j) in enumerate(pairs(n)):
        c[i, j, n:] = e.gamma[:, p]
        c[j, i, n:] = -e.gamma[:, p]
    d = ql.zeros(n + m, n + m)
    d[:n, :n] = S.delta
    d[n:, :n] = e.chi
    d[n:, n:] = e.delta_v
    names = S.algebra.basis + tuple(v_names or default_v_names(S.algebra.basis, m))
    total = InvDerStructure(LieAlgebra(c, names), d)
    ext = CentralExtension(S, total, m)
    check = check_central_extension(ext)
    if not check:
        raise InternalError(f"built extension fails {check.first}")
    return ext


def default_v_names(base_names, m: int) -> tuple[str, ...]:
    n = len(base_names)
    if tuple(base_names) == tuple(f"e{i + 1}" for i in range(n)):
        return tuple(f"e{n + a + 1}" for a in range(m))
    return tuple(f"v{a + 1}" for a in range(m))


def check_central_extension(ext: CentralExtension) -> Check:
    """Total structure is InvDer, V is central and delta-stable, p is a homomorphism."""
    n, m = ext.base.dim, ext.v_dim
    tot = ext.total
    if tot.dim != n + m:
        raise ShapeError(f"total dimension {tot.dim} is not {n} + {m}")
    failures = []
    lie = lie_check(tot.c)
    failures += lie.failures
    failures += is_invder(tot.algebra, tot.delta).failures
    for a in range(n, n + m):
        for j in range(n + m):
            if not ql.is_zero(tot.c[a, j]):
                failures.append(Failure("V is central", (a, j), tot.c[a, j]))
    if not ql.is_zero(tot.delta[:n, n:]):
        failures.append(Failure("delta preserves V", (), tot.delta[:n, n:]))
    failures += is_homomorphism(tot, ext.base, ext.projection).failures
    return Check("central extension", tuple(failures))


def extract_cocycle(ext: CentralExtension, s) -> ExtensionCocycle:
    """``gamma(x,y) = [s x, s y] - s[x,y]`` and ``chi(x) = delta s(x) - s(delta x)``."""
    n, m = ext.base.dim, ext.v_dim
    s = ql.qarray(s)
    if s.shape != (n + m, n):
        raise ShapeError(f"section must be {(n + m)} x {n}, got {s.shape}")
    if not np.all(ext.projection @ s == ql.identity(n)):
        raise InputError("p o s is not the identity: not a section")
    tot, base = ext.total, ext.base
    cols = []
    for i, j in pairs(n):
        cols.append(np.einsum("a,b,abk->k", s[:, i], s[:, j], tot.c) - s @ base.c[i, j])
    gamma = np.stack(cols, axis=1) if cols else ql.zeros(n + m, 0)
    chi = tot.delta @ s - s @ base.delta
    if not ql.is_zero(gamma[:n]) or not ql.is_zero(chi[:n]):
        raise InputError("extracted cocycle leaves V: the extension is not central")
    e = ExtensionCocycle(gamma[n:], chi[n:], ext.delta_v)
    report = check_extension_cocycle(base, e)
    if not report:
        raise InternalError(f"extracted data is not a cocycle: {report.first}")
    return e


def canonical_section(ext: CentralExtension) -> np.ndarray:
    return ext.projection.T.copy()


def _same_v(e1: ExtensionCocycle, e2: ExtensionCocycle):
    if e1.v_dim != e2.v_dim or not np.all(e1.delta_v == e2.delta_v):
        raise InputError("cocycles have different (V, delta_V)")


def same_class(S: InvDerStructure, e1: ExtensionCocycle, e2: ExtensionCocycle):
    """A map ``Phi: L -> V`` with ``e1 = e2 + d1(Phi)``, or None if the classes differ."""
    _same_v(e1, e2)
    r = trivial_rep(S, e1.v_dim, e1.delta_v)
    x = ql.solve(d1_matrix(r), (e1.as_cochain() - e2.as_cochain()).flatten())
    if x is None:
        return None
    return unflatten1(x, e1.v_dim, S.dim)


def extension_isomorphism(S: InvDerStructure, e1: ExtensionCocycle, e2: ExtensionCocycle,
                          phi) -> np.ndarray:
    """``xi(x + u) = x + Phi(x) + u``, verified as an isomorphism of extensions."""
    _same_v(e1, e2)
    n, m = S.dim, e1.v_dim
    phi = ql.qarray(phi)
    if phi.shape != (m, n):
        raise ShapeError(f"Phi must be {m} x {n}, got {phi.shape}")
    ext1, ext2 = build_extension(S, e1), build_extension(S, e2)
    xi = ql.identity(n + m)
    xi[n:, :n] = phi
    if not np.all(xi @ ext1.injection == ext2.injection):
        raise CheckFailed("xi o i1 != i2")
    if not np.all(ext2.projection @ xi == ext1.projection):
        raise CheckFailed("p2 o xi != p1")
    hom = is_homomorphism(ext1.total, ext2.total, xi)
    if not hom:
        raise CheckFailed(f"xi is not an InvDer homomorphism: {hom.first}", hom)
    if not (e2.as_cochain() + d1(trivial_rep(S, m, e1.delta_v), phi)).equals(e1.as_cochain()):
        raise InternalError("xi is an isomorphism but e1 != e2 + d1(Phi)")
    return xi
