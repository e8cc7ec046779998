"""Exact linear algebra over the rationals.

Matrices and vectors are numpy arrays with ``dtype=object`` holding
:class:`fractions.Fraction` entries.  Nothing here touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

import numpy as np

from .errors import ContainmentError, ShapeError, SingularMatrixError

__all__ = [
    "Fraction", "to_q", "qarray", "zeros", "identity", "is_zero",
    "rref", "rank", "kernel_basis", "solve", "det", "inverse",
    "in_span", "span_basis", "quotient_dimension", "reduce_modulo",
    "frac_str", "frozen",
]


def to_q(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: every value in this package is exact.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} {x!r} as an exact rational")


def qarray(data, shape: tuple[int, ...] | None = None) -> np.ndarray:
    a = np.array(data, dtype=object)
    if shape is not None:
        a = a.reshape(shape)
    out = np.empty(a.shape, dtype=object)
    for idx, v in np.ndenumerate(a):
        out[idx] = to_q(v)
    return out


def zeros(*shape: int) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(Fraction(0))
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def frozen(a: np.ndarray) -> np.ndarray:
    a = qarray(a)
    a.flags.writeable = False
    return a


def is_zero(a) -> bool:
    return all(v == 0 for v in np.asarray(a, dtype=object).flat)


def frac_str(x) -> str:
    return str(to_q(x))


def rref(m) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    r = qarray(m)
    if r.ndim != 2:
        raise ShapeError(f"expected a matrix, got shape {r.shape}")
    rows, cols = r.shape
    pivots: list[int] = []
    pr = 0
    for pc in range(cols):
        if pr == rows:
            break
        hit = next((i for i in range(pr, rows) if r[i, pc] != 0), None)
        if hit is None:
            continue
        if hit != pr:
            r[[pr, hit]] = r[[hit, pr]]
        r[pr] = r[pr] / r[pr, pc]
        for i in range(rows):
            if i != pr and r[i, pc] != 0:
                r[i] = r[i] - r[i, pc] * r[pr]
        pivots.append(pc)
        pr += 1
    return r, pivots


def rank(m) -> int:
    m = np.asarray(m, dtype=object)
    if m.size == 0:
        return 0
    return len(rref(m)[1])


def kernel_basis(m) -> list[np.ndarray]:
    """Canonical basis of the null space of ``m``.

    One vector per free column ``f``: it has a 1 at ``f``, zeros at the other
    free columns, and the negated RREF entries at the pivot columns.
    """
    m = np.asarray(m, dtype=object)
    if m.ndim != 2:
        raise ShapeError(f"expected a matrix, got shape {m.shape}")
    cols = m.shape[1]
    if m.shape[0] == 0:
        r, pivots = zeros(0, cols), []
    else:
        r, pivots = rref(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = zeros(cols)
        v[f] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -r[row, f]
        basis.append(v)
    return basis


def solve(m, b) -> np.ndarray | None:
    """One solution of ``m x = b`` with free variables set to zero, or None."""
    m = np.asarray(m, dtype=object)
    b = qarray(b)
    if m.ndim != 2 or b.shape != (m.shape[0],):
        raise ShapeError(f"cannot solve {m.shape} system with rhs {b.shape}")
    rows, cols = m.shape
    if rows == 0:
        return zeros(cols)
    aug = np.concatenate([qarray(m), b.reshape(rows, 1)], axis=1)
    r, pivots = rref(aug)
    if cols in pivots:
        return None
    x = zeros(cols)
    for row, pc in enumerate(pivots):
        x[pc] = r[row, cols]
    return x


def det(m) -> Fraction:
    m = qarray(m)
    n = m.shape[0]
    if m.shape != (n, n):
        raise ShapeError(f"determinant of non-square matrix {m.shape}")
    a = m.copy()
    d = Fraction(1)
    for c in range(n):
        hit = next((i for i in range(c, n) if a[i, c] != 0), None)
        if hit is None:
            return Fraction(0)
        if hit != c:
            a[[c, hit]] = a[[hit, c]]
            d = -d
        d *= a[c, c]
        for i in range(c + 1, n):
            if a[i, c] != 0:
                a[i] = a[i] - (a[i, c] / a[c, c]) * a[c]
    return d


def inverse(m) -> np.ndarray:
    m = qarray(m)
    n = m.shape[0]
    if m.shape != (n, n):
        raise ShapeError(f"inverse of non-square matrix {m.shape}")
    r, pivots = rref(np.concatenate([m, identity(n)], axis=1))
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return r[:, n:]


def span_basis(vectors, dim: int | None = None) -> np.ndarray:
    """Rows of the RREF of the given vectors (a canonical basis of their span)."""
    vectors = list(vectors)
    if not vectors:
        return zeros(0, dim or 0)
    r, pivots = rref(np.array(vectors, dtype=object))
    return r[: len(pivots)]


def in_span(basis, v) -> bool:
    basis = list(basis)
    v = qarray(v)
    if not basis:
        return is_zero(v)
    return solve(np.array(basis, dtype=object).T, v) is not None


def quotient_dimension(z, b) -> int:
    """``dim span(z) - dim span(b)`` after checking ``span(b)`` lies in ``span(z)``."""
    z, b = list(z), list(b)
    for i, v in enumerate(b):
        if not in_span(z, v):
            raise ContainmentError(f"vector {i} of the subspace is not in the ambient span")
    rz = rank(np.array(z, dtype=object)) if z else 0
    rb = rank(np.array(b, dtype=object)) if b else 0
    return rz - rb


def reduce_modulo(v, echelon: np.ndarray, pivots: list[int]) -> np.ndarray:
    """Eliminate the pivot coordinates of ``v`` using RREF rows ``echelon``."""
    v = qarray(v)
    for row, pc in zip(echelon, pivots):
        if v[pc] != 0:
            v = v - v[pc] * row
    return v
