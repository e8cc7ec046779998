"""Truncated one-parameter formal deformations of an InvDer Lie algebra.

A deformation of order ``N`` is a list of bracket grids ``mu[0..N]`` and maps
``delta[0..N]``; ``mu[0]`` and ``delta[0]`` are the undeformed structure.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import qlinalg as ql
from .cohomology import (InvDerCochain2, bilinear_from_cochain2, cochain2_from_bilinear, d1, d2,
                         diagonal_cocycles)
from .errors import CheckFailed, InputError, InternalError
from .lie import InvDerStructure
from .report import Check, Failure
from .representation import adjoint_rep

EQUATIONS = ("jacobi", "leibniz", "inv")


@dataclass(frozen=True, eq=False)
class Deformation:
    base: InvDerStructure
    mu: tuple[np.ndarray, ...]
    delta: tuple[np.ndarray, ...]

    def __post_init__(self):
        mu = tuple(ql.frozen(m) for m in self.mu)
        delta = tuple(ql.frozen(d) for d in self.delta)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "delta", delta)
        n = self.base.dim
        if not mu or len(mu) != len(delta):
            raise InputError("mu and delta must be non-empty and of equal length")
        for i, m in enumerate(mu):
            if m.shape != (n, n, n):
                raise InputError(f"mu[{i}] has shape {m.shape}, expected {(n, n, n)}")
            if not np.all(m == -m.transpose(1, 0, 2)):
                raise InputError(f"mu[{i}] is not antisymmetric")
        for i, d in enumerate(delta):
            if d.shape != (n, n):
                raise InputError(f"delta[{i}] has shape {d.shape}, expected {(n, n)}")
        if not np.all(mu[0] == self.base.c) or not np.all(delta[0] == self.base.delta):
            raise InputError("order-0 terms must equal the base structure")

    @property
    def order(self) -> int:
        return len(self.mu) - 1

    @classmethod
    def trivial(cls, base: InvDerStructure, order: int = 1) -> "Deformation":
        n = base.dim
        return cls(base, (base.c,) + (ql.zeros(n, n, n),) * order,
                   (base.delta,) + (ql.zeros(n, n),) * order)

    @classmethod
    def first_order(cls, base: InvDerStructure, mu1, delta1) -> "Deformation":
        return cls(base, (base.c, ql.qarray(mu1)), (base.delta, ql.qarray(delta1)))


def _mu(m, x, y):
    return np.einsum("a,b,abk->k", x, y, m)


def order_residuals(d: Deformation, n_ord: int):
    """Yield ``(equation, indices, residual)`` for the coefficient of ``t**n_ord``."""
    dim = d.base.dim
    e = ql.identity(dim)
    mu, de = d.mu, d.delta
    for a, b, c in combinations(range(dim), 3):
        res = ql.zeros(dim)
        for i in range(n_ord + 1):
            j = n_ord - i
            for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                res = res + _mu(mu[i], e[x], mu[j][y, z])
        yield "jacobi", (a, b, c), res
    for a, b in combinations(range(dim), 2):
        res = ql.zeros(dim)
        for i in range(n_ord + 1):
            j = n_ord - i
            res = (res + de[i] @ mu[j][a, b] - _mu(mu[i], de[j][:, a], e[b])
                   - _mu(mu[i], e[a], de[j][:, b]))
        yield "leibniz", (a, b), res
    for a, b in combinations(range(dim), 2):
        res = ql.zeros(dim)
        for i in range(n_ord + 1):
            for j in range(n_ord + 1 - i):
                k = n_ord - i - j
                res = res + de[i] @ de[j] @ mu[k][a, b] - _mu(mu[i], de[j][:, a], de[k][:, b])
        yield "inv", (a, b), res


def check_deformation(d: Deformation, order: int | None = None) -> Check:
    """Coefficient equations of Jacobi, Leibniz and Inv up to ``order``.

    Each failure's clause reads ``"order <n> <equation>"``; failures are sorted
    by ``(n, equation, indices)``.
    """
    top = d.order if order is None else order
    if top > d.order or top < 0:
        raise InputError(f"cannot check order {top} of a deformation of order {d.order}")
    if ql.det(d.delta[0]) == 0:
        raise InputError("delta_0 must be invertible")
    failures = []
    for n_ord in range(top + 1):
        for eq, idx, res in order_residuals(d, n_ord):
            if not ql.is_zero(res):
                failures.append((n_ord, EQUATIONS.index(eq), idx,
                                 Failure(f"order {n_ord} {eq}", idx, res)))
    failures.sort(key=lambda t: t[:3])
    return Check("deformation", tuple(f for *_, f in failures))


def infinitesimal(d: Deformation) -> InvDerCochain2:
    """``(mu_1, delta_1, delta_1)`` as a 2-cochain with adjoint coefficients."""
    if d.order < 1:
        raise InputError("deformation has no order-1 term")
    report = check_deformation(d, 1)
    if not report:
        raise CheckFailed(f"order-1 equations fail: {report.first}", report)
    w = InvDerCochain2(cochain2_from_bilinear(d.mu[1]), d.delta[1], d.delta[1])
    if not d2(adjoint_rep(d.base), w).is_zero():
        raise InternalError("infinitesimal of a deformation is not a cocycle")
    return w


def from_cochain(base: InvDerStructure, w: InvDerCochain2) -> Deformation:
    """Order-1 deformation with ``mu_1 = w.f`` and ``delta_1 = w.g``; needs ``w.g == w.h``."""
    if not np.all(w.g == w.h):
        raise InputError("only cochains of the form (f, g, g) lift to deformations")
    return Deformation.first_order(base, bilinear_from_cochain2(w.f, base.dim), w.g)


def deformation_cocycles(base: InvDerStructure) -> list[InvDerCochain2]:
    """Basis of the adjoint 2-cocycles of the form ``(f, g, g)``.

    These are exactly the candidates for infinitesimals of deformations.
    """
    return diagonal_cocycles(adjoint_rep(base))


def equivalence_diff(S: InvDerStructure, psi1) -> InvDerCochain2:
    """Change of the infinitesimal under ``psi_t = id + t psi_1``."""
    return d1(adjoint_rep(S), psi1)


def apply_order1_equivalence(d: Deformation, psi1) -> Deformation:
    """Transport an order-1 deformation along ``psi_t = id + t psi_1``.

    The result is truncated at order 1; higher coefficients of the transported
    deformation also depend on ``psi_2, psi_3, ...``.
    """
    report = check_deformation(d, 1)
    if not report:
        raise CheckFailed(f"order-1 equations fail: {report.first}", report)
    psi1 = ql.qarray(psi1)
    S = d.base
    n = S.dim
    if psi1.shape != (n, n):
        raise InputError(f"psi_1 must be {n} x {n}")
    c = S.c
    mu1 = (d.mu[1] + np.einsum("ai,ajk->ijk", psi1, c) + np.einsum("bj,ibk->ijk", psi1, c)
           - np.einsum("kl,ijl->ijk", psi1, c))
    delta1 = d.delta[1] + S.delta @ psi1 - psi1 @ S.delta
    return Deformation.first_order(S, mu1, delta1)
