"""Seeded random inputs shared by the test modules."""
from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from invder import qlinalg as ql
from invder.fixtures import abelian_invder, h3_invder, plane_invder

SEED = 20240611


def rand_q(rng: random.Random, lo: int = -3, hi: int = 3) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.choice((1, 1, 2, 3)))


def rand_matrix(rng: random.Random, rows: int, cols: int) -> np.ndarray:
    return ql.qarray([[rand_q(rng) for _ in range(cols)] for _ in range(rows)])


def rand_invertible(rng: random.Random, n: int) -> np.ndarray:
    while True:
        a = rand_matrix(rng, n, n)
        if ql.det(a) != 0:
            return a


def random_abelian(count: int = 50, max_dim: int = 4, seed: int = SEED):
    """Abelian InvDer structures with random invertible delta (every such map qualifies)."""
    rng = random.Random(seed)
    return [abelian_invder(n, rand_invertible(rng, n))
            for n in (rng.randint(1, max_dim) for _ in range(count))]


def named_fixtures():
    return {"h3": h3_invder(), "plane": plane_invder(), "abelian1": abelian_invder(1),
            "abelian2": abelian_invder(2)}
