"""Lie algebras given by structure constants, their derivations and Inv-derivations.

Structure constants are stored densely: ``c[i, j, k]`` is the ``e_k`` coefficient
of ``[e_i, e_j]``.  A linear map is an ``n x n`` matrix whose column ``j`` is the
image of ``e_j``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import qlinalg as ql
from .errors import CheckFailed, InternalError, ShapeError, SingularMatrixError
from .report import Check, Failure


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    c: np.ndarray
    basis: tuple[str, ...] = ()

    def __post_init__(self):
        c = ql.frozen(self.c)
        object.__setattr__(self, "c", c)
        if not self.basis:
            object.__setattr__(self, "basis", tuple(f"e{i + 1}" for i in range(c.shape[0])))

    @property
    def dim(self) -> int:
        return self.c.shape[0]

    def bracket(self, x, y) -> np.ndarray:
        return bracket(self, x, y)

    def same_structure(self, other: "LieAlgebra") -> bool:
        return self.c.shape == other.c.shape and bool(np.all(self.c == other.c))


@dataclass(frozen=True, eq=False)
class InvDerStructure:
    """A Lie algebra paired with a linear map ``delta``.

    Constructing one directly does not validate; use :meth:`checked` (or
    :func:`is_invder`) to enforce the Leibniz, invertibility and Inv conditions.
    """

    algebra: LieAlgebra
    delta: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "delta", ql.frozen(self.delta))
        n = self.algebra.dim
        if self.delta.shape != (n, n):
            raise ShapeError(f"delta has shape {self.delta.shape}, expected ({n}, {n})")

    @classmethod
    def checked(cls, algebra: LieAlgebra, delta) -> "InvDerStructure":
        report = is_invder(algebra, delta)
        if not report:
            raise CheckFailed(f"not an Inv-derivation: {report.first}", report)
        return cls(algebra, delta)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def c(self) -> np.ndarray:
        return self.algebra.c

    def same_as(self, other: "InvDerStructure") -> bool:
        return self.algebra.same_structure(other.algebra) and bool(np.all(self.delta == other.delta))


# -- multilinear helpers on whole structure-constant grids ------------------

def push(a, c) -> np.ndarray:
    """``a`` applied after the bracket: entry ``[i, j]`` is ``a [e_i, e_j]``."""
    return np.einsum("kl,ijl->ijk", a, c)


def pull(a, b, c) -> np.ndarray:
    """Bracket precomposed with ``a`` and ``b``: entry ``[i, j]`` is ``[a e_i, b e_j]``."""
    # two contractions instead of one three-operand einsum: n^5 rather than n^6
    return np.einsum("bj,ibk->ijk", b, np.einsum("ai,abk->ibk", a, c))


def _pair_failures(clause: str, residual: np.ndarray) -> list[Failure]:
    n = residual.shape[0]
    return [Failure(clause, (i, j), residual[i, j])
            for i, j in combinations(range(n), 2) if not ql.is_zero(residual[i, j])]


def _as_c(L) -> np.ndarray:
    return L.c if isinstance(L, (LieAlgebra, InvDerStructure)) else ql.qarray(L)


# -- validation --------------------------------------------------------------

def jacobiator(c, i: int, j: int, k: int) -> np.ndarray:
    c = _as_c(c)
    return (np.einsum("l,lm->m", c[i, j], c[:, k]) + np.einsum("l,lm->m", c[j, k], c[:, i])
            + np.einsum("l,lm->m", c[k, i], c[:, j]))


def lie_check(c) -> Check:
    """Antisymmetry and Jacobi on basis elements, listing every violation."""
    c = ql.qarray(c)
    if c.ndim != 3 or len(set(c.shape)) != 1:
        raise ShapeError(f"structure constants must be n x n x n, got {c.shape}")
    n = c.shape[0]
    failures = []
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                if c[i, j, k] != -c[j, i, k]:
                    failures.append(Failure("antisymmetry", (i, j, k), c[i, j, k] + c[j, i, k]))
    for i, j, k in combinations(range(n), 3):
        r = jacobiator(c, i, j, k)
        if not ql.is_zero(r):
            failures.append(Failure("Jacobi identity", (i, j, k), r))
    return Check("Lie algebra", tuple(failures),
                 () if failures else ("antisymmetry", "Jacobi identity"))


def validate_lie(c, basis=None) -> LieAlgebra:
    report = lie_check(c)
    if not report:
        raise CheckFailed(f"not a Lie algebra: {report.first}", report)
    return LieAlgebra(c, tuple(basis or ()))


def from_brackets(n: int, brackets: dict, basis=None) -> LieAlgebra:
    """Build and validate an algebra from ``{(i, j): vector}`` with 0-based ``i < j``."""
    c = ql.zeros(n, n, n)
    for (i, j), v in brackets.items():
        v = ql.qarray(v)
        c[i, j] = v
        c[j, i] = -v
    return validate_lie(c, basis)


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(ql.zeros(n, n, n))


def bracket(L, x, y) -> np.ndarray:
    c = _as_c(L)
    x, y = ql.qarray(x), ql.qarray(y)
    n = c.shape[0]
    if x.shape != (n,) or y.shape != (n,):
        raise ShapeError(f"bracket needs vectors of length {n}")
    return np.einsum("i,j,ijk->k", x, y, c)


def ad_map(L, x, right: bool = False) -> np.ndarray:
    """Matrix of ``y -> [x, y]``, or of ``y -> [y, x]`` when ``right``."""
    c = _as_c(L)
    x = ql.qarray(x)
    if x.shape != (c.shape[0],):
        raise ShapeError(f"ad needs a vector of length {c.shape[0]}")
    if right:
        return np.einsum("i,jik->kj", x, c)
    return np.einsum("i,ijk->kj", x, c)


# -- derivations ---------------------------------------------------------------

def leibniz_residual(c, d) -> np.ndarray:
    n = c.shape[0]
    one = ql.identity(n)
    return push(d, c) - pull(d, one, c) - pull(one, d, c)


def inv_residual(c, d) -> np.ndarray:
    return pull(d, d, c) - push(d @ d, c)


def _check_square(L, d) -> np.ndarray:
    d = ql.qarray(d)
    n = _as_c(L).shape[0]
    if d.shape != (n, n):
        raise ShapeError(f"map has shape {d.shape}, expected ({n}, {n})")
    return d


def is_derivation(L, d) -> Check:
    d = _check_square(L, d)
    fails = _pair_failures("Leibniz rule", leibniz_residual(_as_c(L), d))
    return Check("derivation", tuple(fails), () if fails else ("Leibniz rule",))


def is_invder(L, d) -> Check:
    """Leibniz rule, invertibility and ``[d x, d y] = d^2 [x, y]`` on basis pairs."""
    c = _as_c(L)
    d = _check_square(L, d)
    failures, passed = [], []
    for clause, fails in (
        ("Leibniz rule", _pair_failures("Leibniz rule", leibniz_residual(c, d))),
        ("invertibility", [] if ql.det(d) != 0 else [Failure("invertibility", (), ql.det(d))]),
        ("Inv condition", _pair_failures("Inv condition", inv_residual(c, d))),
    ):
        failures += fails
        if not fails:
            passed.append(clause)
    return Check("Inv-derivation", tuple(failures), tuple(passed))


def inverse_is_derivation(L, d) -> Check:
    """Leibniz rule for ``d^-1``; for an invertible derivation this matches the Inv condition."""
    d = _check_square(L, d)
    if ql.det(d) == 0:
        raise SingularMatrixError("delta is singular")
    r = is_derivation(L, ql.inverse(d))
    return Check("inverse is a derivation", r.failures, r.passed)


def _solution_maps(residual_of, n: int) -> list[np.ndarray]:
    """Canonical basis of the n x n maps ``D`` with ``residual_of(D) == 0``.

    ``D[a, b]`` is unknown number ``a * n + b``.
    """
    cols = []
    for a in range(n):
        for b in range(n):
            e = ql.zeros(n, n)
            e[a, b] = ql.Fraction(1)
            cols.append(residual_of(e).ravel())
    if not cols or cols[0].size == 0:
        system = ql.zeros(0, n * n)
    else:
        system = np.stack(cols, axis=1)
    return [v.reshape(n, n) for v in ql.kernel_basis(system)]


def _upper_pairs(r: np.ndarray) -> np.ndarray:
    n = r.shape[0]
    rows = [r[i, j] for i, j in combinations(range(n), 2)]
    return np.array(rows, dtype=object).reshape(-1) if rows else ql.zeros(0)


def derivation_space(L) -> list[np.ndarray]:
    c = _as_c(L)
    return _solution_maps(lambda e: _upper_pairs(leibniz_residual(c, e)), c.shape[0])


def delta_derivation_residuals(S: InvDerStructure, D) -> tuple[np.ndarray, np.ndarray]:
    d = S.delta
    return D @ d - d @ d @ D, push(D, S.c) - pull(D, d, S.c) - pull(d, D, S.c)


def is_delta_derivation(S: InvDerStructure, D) -> Check:
    D = _check_square(S, D)
    comm, leib = delta_derivation_residuals(S, D)
    failures = []
    if not ql.is_zero(comm):
        failures.append(Failure("D delta = delta^2 D", (), comm))
    failures += _pair_failures("twisted Leibniz rule", leib)
    return Check("delta-derivation", tuple(failures))


def delta_derivation_space(S: InvDerStructure) -> list[np.ndarray]:
    def residual(e):
        comm, leib = delta_derivation_residuals(S, e)
        return np.concatenate([comm.ravel(), _upper_pairs(leib)])
    return _solution_maps(residual, S.dim)


def commutator(a, b) -> np.ndarray:
    return a @ b - b @ a


# -- structures built from an Inv-derivation -------------------------------------

def twist(S: InvDerStructure) -> LieAlgebra:
    """The algebra with bracket ``delta o [-, -]``."""
    c = push(S.delta, S.c)
    report = lie_check(c)
    if not report:
        raise InternalError(f"twisted bracket is not Lie: {report.first}")
    return LieAlgebra(c, S.algebra.basis)


def cyclic_sums(S: InvDerStructure, i: int, j: int, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic sums of ``[x, delta [y, z]]`` and ``[delta x, [y, z]]`` on ``e_i, e_j, e_k``."""
    c, d = S.c, S.delta
    twisted = push(d, c)
    e = ql.identity(S.dim)
    lhs = ql.zeros(S.dim)
    rhs = ql.zeros(S.dim)
    for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
        lhs = lhs + bracket(c, e[x], twisted[y, z])
        rhs = rhs + bracket(c, d[:, x], c[y, z])
    return lhs, rhs


def check_cyclic_identity(S: InvDerStructure) -> Check:
    failures = []
    for i, j, k in combinations(range(S.dim), 3):
        lhs, rhs = cyclic_sums(S, i, j, k)
        if not np.all(lhs == rhs):
            failures.append(Failure("cyclic sums agree", (i, j, k), lhs - rhs))
        if not ql.is_zero(lhs):
            failures.append(Failure("twisted cyclic sum vanishes", (i, j, k), lhs))
        if not ql.is_zero(rhs):
            failures.append(Failure("InvDer-Jacobi cyclic sum vanishes", (i, j, k), rhs))
    return Check("cyclic identity", tuple(failures))


def is_lie_homomorphism(L1, L2, phi) -> Check:
    c1, c2 = _as_c(L1), _as_c(L2)
    phi = ql.qarray(phi)
    if phi.shape != (c2.shape[0], c1.shape[0]):
        raise ShapeError(f"map has shape {phi.shape}, expected ({c2.shape[0]}, {c1.shape[0]})")
    res = push(phi, c1) - pull(phi, phi, c2)
    return Check("Lie homomorphism", tuple(_pair_failures("bracket preserved", res)))


def is_homomorphism(S1: InvDerStructure, S2: InvDerStructure, phi) -> Check:
    """Bracket preserved on basis pairs and ``phi delta_1 = delta_2 phi``."""
    failures = list(is_lie_homomorphism(S1, S2, phi).failures)
    phi = ql.qarray(phi)
    inter = phi @ S1.delta - S2.delta @ phi
    if not ql.is_zero(inter):
        failures.append(Failure("intertwines delta", (), inter))
    return Check("InvDer homomorphism", tuple(failures))
