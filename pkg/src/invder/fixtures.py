"""Small algebras used throughout the tests and demos."""
from __future__ import annotations

from . import qlinalg as ql
from .lie import InvDerStructure, LieAlgebra, abelian, from_brackets

# delta on h3: e1 -> e2, e2 -> -e1 + e2, e3 -> e3 (columns are images)
H3_DELTA = ql.qarray([[0, -1, 0], [1, 1, 0], [0, 0, 1]])
# the same rotation-like map on a plane: det = 1 = trace^2
PLANE_DELTA = ql.qarray([[0, -1], [1, 1]])


def heisenberg() -> LieAlgebra:
    return from_brackets(3, {(0, 1): [0, 0, 1]})


def sl2() -> LieAlgebra:
    """Basis (h, e, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h."""
    return from_brackets(3, {(0, 1): [0, 2, 0], (0, 2): [0, 0, -2], (1, 2): [1, 0, 0]},
                         basis=("h", "e", "f"))


def h3_invder() -> InvDerStructure:
    return InvDerStructure.checked(heisenberg(), H3_DELTA)


def abelian_invder(n: int, delta=None) -> InvDerStructure:
    return InvDerStructure.checked(abelian(n), ql.identity(n) if delta is None else delta)


def plane_invder() -> InvDerStructure:
    """Abelian plane with the order-6 map; its symplectic extension is h3."""
    return abelian_invder(2, PLANE_DELTA)


def cube_root_block():
    """Companion matrix of x^2 + x + 1 (a rational cube root of identity)."""
    return ql.qarray([[0, -1], [1, -1]])


def abelian_nilpotent_rep_data(n: int = 1):
    """``(rho, delta_v)`` for a nonzero representation of ``abelian_invder(n)``.

    V = U + U' with U = U' = Q^2.  delta_v is W on U and W + 1 on U' where
    W^2 + W + 1 = 0; every rho(e_i) is the copy map U -> U'.
    """
    w = cube_root_block()
    dv = ql.zeros(4, 4)
    dv[:2, :2] = w
    dv[2:, 2:] = w + ql.identity(2)
    r = ql.zeros(4, 4)
    r[2:, :2] = ql.identity(2)
    return [r * (i + 1) for i in range(n)], dv
