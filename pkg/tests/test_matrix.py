import random
from fractions import Fraction
from math import factorial

import pytest

from tropdual.errors import UnsupportedShapeError
from tropdual.matrix import (
    TropMatrix,
    trop_adjoint,
    trop_det,
    trop_minor,
    trop_scale_matrix,
)
from tropdual.semiring import NEG_INF, TropValue, t_add, t_mul


def conic(a1, a2, a3, a4, a5, a6) -> TropMatrix:
    """3x3 symmetric matrix with diagonal (a1, a2, a3) and off-diagonal
    entries a4 = (1,2), a5 = (1,3), a6 = (2,3)."""
    return TropMatrix.symmetric_from_upper(3, (a1, a4, a5, a2, a6, a3))


def rand_matrix(rng: random.Random, n: int, neg_inf_p: float = 0.15, symmetric: bool = False) -> TropMatrix:
    def draw():
        if rng.random() < neg_inf_p:
            return NEG_INF
        return TropValue(Fraction(rng.randint(-40, 40), rng.randint(1, 4)))

    if symmetric:
        upper = [draw() for _ in range(n * (n + 1) // 2)]
        return TropMatrix.symmetric_from_upper(n, upper)
    return TropMatrix([[draw() for _ in range(n)] for _ in range(n)])


def det_by_expansion(M: TropMatrix) -> TropValue:
    """Independent oracle: recursive first-row minor expansion (value only)."""
    if M.n == 1:
        return M.rows[0][0]
    acc = NEG_INF
    for j in range(1, M.n + 1):
        acc = t_add(acc, t_mul(M.entry(1, j), det_by_expansion(trop_minor(M, 1, j))))
    return acc


class TestTropMatrix:
    def test_square_validation(self):
        with pytest.raises(ValueError):
            TropMatrix([[1, 2], [3, 4], [5, 6]])
        with pytest.raises(ValueError):
            TropMatrix([])

    def test_symmetric_validation(self):
        with pytest.raises(ValueError):
            TropMatrix([[0, 1], [2, 0]], symmetric=True)
        M = TropMatrix([[0, 1], [1, 0]], symmetric=True)
        assert M.symmetric

    def test_symmetric_from_upper_layout(self):
        M = conic(1, 2, 3, -2, 1, -1)
        assert M.entry(1, 1) == TropValue(1)
        assert M.entry(2, 2) == TropValue(2)
        assert M.entry(3, 3) == TropValue(3)
        assert M.entry(1, 2) == M.entry(2, 1) == TropValue(-2)
        assert M.entry(1, 3) == M.entry(3, 1) == TropValue(1)
        assert M.entry(2, 3) == M.entry(3, 2) == TropValue(-1)
        assert M.upper_triangle() == (
            TropValue(1), TropValue(-2), TropValue(1),
            TropValue(2), TropValue(-1),
            TropValue(3),
        )

    def test_entry_bounds(self):
        M = conic(1, 2, 3, -2, 1, -1)
        with pytest.raises(IndexError):
            M.entry(0, 1)
        with pytest.raises(IndexError):
            M.entry(1, 4)

    def test_minor_labels_track_source_indices(self):
        M = rand_matrix(random.Random(7), 4)
        m = trop_minor(M, 2, 3)
        assert m.row_labels == (1, 3, 4)
        assert m.col_labels == (1, 2, 4)
        mm = trop_minor(m, 1, 1)
        assert mm.row_labels == (3, 4)
        assert mm.col_labels == (2, 4)

    def test_minor_bounds(self):
        M = conic(0, 0, 0, 0, 0, 0)
        with pytest.raises(IndexError):
            trop_minor(M, 4, 1)
        with pytest.raises(ValueError):
            trop_minor(TropMatrix([[0]]), 1, 1)

    def test_scale_matrix_adds_constant(self):
        M = conic(1, 2, 3, -2, 1, NEG_INF)
        S = trop_scale_matrix(M, TropValue(Fraction(1, 2)))
        assert S.entry(1, 1) == TropValue(Fraction(3, 2))
        assert S.entry(2, 3) == NEG_INF
        assert S.symmetric


class TestTropDet:
    def test_full_conic_value(self):
        # diagonal permutation: 1 + 2 + 3 = 6; transpositions give -1, 4, -1;
        # both 3-cycles give -2; single achiever
        res = trop_det(conic(1, 2, 3, -2, 1, -1))
        assert res.value == TropValue(6)
        assert res.achiever_count == 1
        assert not res.degenerate

    def test_empty_conic_value_degenerate(self):
        # (1,2): 3 + 3 + 5 = 11, both 3-cycles: 3 + 4 + 4 = 11, diagonal: 8;
        # three achievers tie at the top
        res = trop_det(conic(1, 2, 5, 3, 4, 4))
        assert res.value == TropValue(11)
        assert res.achiever_count == 3
        assert res.degenerate

    def test_size_one(self):
        res = trop_det(TropMatrix([[Fraction(5, 3)]]))
        assert res.value == TropValue(Fraction(5, 3))
        assert res.achiever_count == 1

    def test_all_neg_inf(self):
        M = TropMatrix([[NEG_INF] * 3 for _ in range(3)])
        res = trop_det(M)
        assert res.value == NEG_INF
        assert res.achiever_count == factorial(3)
        assert res.degenerate

    def test_single_neg_inf_row_is_neg_inf(self):
        M = TropMatrix([[0, 0, 0], [NEG_INF, NEG_INF, NEG_INF], [0, 0, 0]])
        res = trop_det(M)
        assert res.value == NEG_INF
        assert res.achiever_count == factorial(3)

    def test_size_cap(self):
        M = TropMatrix([[0] * 9 for _ in range(9)])
        with pytest.raises(UnsupportedShapeError):
            trop_det(M)
        with pytest.raises(UnsupportedShapeError):
            trop_adjoint(M)

    def test_matches_recursive_expansion_random(self):
        rng = random.Random(1123)
        for trial in range(120):
            n = rng.randint(1, 6)
            M = rand_matrix(rng, n, neg_inf_p=0.25)
            assert trop_det(M).value == det_by_expansion(M), f"trial {trial}"

    def test_constant_shift_adds_n_times_c(self):
        rng = random.Random(5150)
        for _ in range(60):
            n = rng.randint(1, 5)
            M = rand_matrix(rng, n, neg_inf_p=0.2)
            c = TropValue(Fraction(rng.randint(-9, 9), rng.randint(1, 3)))
            base = trop_det(M)
            shifted = trop_det(trop_scale_matrix(M, c))
            if base.value.is_neg_inf:
                assert shifted.value.is_neg_inf
            else:
                assert shifted.value == t_mul(base.value, TropValue(n * c.finite))
            # shifting every entry by the same constant permutes nothing
            assert shifted.achiever_count == base.achiever_count


class TestTropAdjoint:
    def test_full_conic_adjoint(self):
        # minor determinants computed by hand, e.g. (1,1): max(2+3, -1-1) = 5
        adj = trop_adjoint(conic(1, 2, 3, -2, 1, -1))
        assert adj == conic(5, 4, 3, 1, 3, 0)
        assert adj.symmetric

    def test_full_conic_double_adjoint_is_shift_by_6(self):
        M = conic(1, 2, 3, -2, 1, -1)
        twice = trop_adjoint(trop_adjoint(M))
        assert twice == conic(7, 8, 9, 4, 7, 5)
        assert twice == trop_scale_matrix(M, TropValue(6))

    def test_empty_conic_adjoint(self):
        adj = trop_adjoint(conic(1, 2, 5, 3, 4, 4))
        assert adj == conic(8, 8, 6, 8, 7, 7)

    def test_empty_conic_double_adjoint(self):
        twice = trop_adjoint(trop_adjoint(conic(1, 2, 5, 3, 4, 4)))
        assert twice == conic(14, 14, 16, 14, 15, 15)

    def test_diagonal_conic_adjoint(self):
        M = conic(0, 0, 0, NEG_INF, NEG_INF, NEG_INF)
        adj = trop_adjoint(M)
        assert adj == M

    def test_neg_inf_minor_handling(self):
        # minor (1,2) of this matrix is all -inf in one row
        M = TropMatrix([[0, 0], [NEG_INF, NEG_INF]])
        adj = trop_adjoint(M)
        assert adj.entry(1, 1) == NEG_INF
        assert adj.entry(1, 2) == NEG_INF
        assert adj.entry(2, 1) == TropValue(0)
        assert adj.entry(2, 2) == TropValue(0)

    def test_size_two_swaps(self):
        M = TropMatrix([[1, 2], [3, 4]])
        adj = trop_adjoint(M)
        assert adj == TropMatrix([[4, 3], [2, 1]])

    def test_matches_minor_composition_random(self):
        # oracle: entry (i, j) of the adjoint is the determinant of minor (i, j)
        rng = random.Random(90210)
        for trial in range(80):
            n = rng.randint(2, 5)
            M = rand_matrix(rng, n, neg_inf_p=0.25)
            adj = trop_adjoint(M)
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    expected = trop_det(trop_minor(M, i, j)).value
                    assert adj.entry(i, j) == expected, f"trial {trial} entry ({i},{j})"

    def test_symmetric_input_symmetric_output(self):
        rng = random.Random(31337)
        for _ in range(40):
            n = rng.randint(2, 5)
            M = rand_matrix(rng, n, neg_inf_p=0.2, symmetric=True)
            adj = trop_adjoint(M)
            assert adj.symmetric
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    assert adj.entry(i, j) == adj.entry(j, i)

    def test_size_one_rejected(self):
        with pytest.raises(ValueError):
            trop_adjoint(TropMatrix([[0]]))
