"""Shared random-instance generators.

Every test that samples uses its own seeded ``random.Random`` so runs are
reproducible and order-independent.
"""
from __future__ import annotations

import random
from fractions import Fraction

from ratcert.ratlin import RatMat, RatVec, mat, vec


def rand_rat(rng: random.Random, lo: int = -3, hi: int = 3, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def rand_vec(rng: random.Random, n: int, lo: int = -3, hi: int = 3, max_den: int = 4) -> RatVec:
    return vec(rand_rat(rng, lo, hi, max_den) for _ in range(n))


def rand_mat(
    rng: random.Random, m: int, n: int, lo: int = -3, hi: int = 3, max_den: int = 4
) -> RatMat:
    return mat([rand_rat(rng, lo, hi, max_den) for _ in range(n)] for _ in range(m))
