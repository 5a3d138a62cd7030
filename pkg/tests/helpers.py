"""Shared builders for the test suite."""

import random
from fractions import Fraction
from typing import List, Tuple

from tropdual.matrix import TropMatrix
from tropdual.polynomial import TropPolynomial
from tropdual.quadric import QuadricMatrix
from tropdual.semiring import TropValue

# exponent slots of a symmetric 3x3 quadric over (x, y):
# a1 x^2 + a2 y^2 + a3 + a4 xy + a5 x + a6 y
CONIC_SLOTS: Tuple[Tuple[int, int], ...] = ((2, 0), (0, 2), (0, 0), (1, 1), (1, 0), (0, 1))


def conic_poly(a1, a2, a3, a4, a5, a6) -> TropPolynomial:
    coeffs = (a1, a2, a3, a4, a5, a6)
    return TropPolynomial.from_terms(2, list(zip(CONIC_SLOTS, coeffs)))


def conic_matrix(a1, a2, a3, a4, a5, a6) -> TropMatrix:
    # diagonal (a1, a2, a3), off-diagonal a4 = (1,2), a5 = (1,3), a6 = (2,3)
    return TropMatrix.symmetric_from_upper(3, (a1, a4, a5, a2, a6, a3))


def conic_quadric(a1, a2, a3, a4, a5, a6) -> QuadricMatrix:
    return QuadricMatrix(conic_matrix(a1, a2, a3, a4, a5, a6))


def quadric_from_distortion(size: int, diag, off) -> QuadricMatrix:
    """Quadric with the given diagonal and off-diagonal distortions (row-major i < j)."""
    upper = []
    k = 0
    for i in range(size):
        for j in range(i, size):
            if i == j:
                upper.append(Fraction(diag[i]))
            else:
                upper.append(Fraction(diag[i] + diag[j], 2) + Fraction(off[k]))
                k += 1
    return QuadricMatrix.from_upper(size, upper)


def rand_fraction(rng: random.Random, lo: int = -30, hi: int = 30, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def triangle_nodes(degree: int) -> List[Tuple[int, int]]:
    """All lattice points of the dilated standard triangle."""
    return [(x, y) for x in range(degree + 1) for y in range(degree + 1 - x)]


def rand_planar_poly(rng: random.Random, max_degree: int = 4) -> TropPolynomial:
    """Random support inside a dilated triangle with random rational coefficients."""
    degree = rng.randint(1, max_degree)
    nodes = triangle_nodes(degree)
    size = rng.randint(1, len(nodes))
    support = rng.sample(nodes, size)
    return TropPolynomial.from_terms(2, [(p, TropValue(rand_fraction(rng))) for p in support])
