import random
from fractions import Fraction

import pytest

from tropdual.semiring import NEG_INF, TROP_ONE, TropValue, t_add, t_mul, t_scale, t_sum


def rand_value(rng: random.Random) -> TropValue:
    if rng.random() < 0.2:
        return NEG_INF
    num = rng.randint(-50, 50)
    den = rng.randint(1, 9)
    return TropValue(Fraction(num, den))


class TestTropValue:
    def test_construction_and_equality(self):
        assert TropValue(3) == TropValue(Fraction(3))
        assert TropValue(Fraction(1, 2)) == Fraction(1, 2)
        assert TropValue(None) == NEG_INF
        assert TropValue(NEG_INF).is_neg_inf
        assert TropValue(3) != TropValue(4)

    def test_immutability(self):
        v = TropValue(1)
        with pytest.raises(AttributeError):
            v._value = Fraction(2)

    def test_ordering_bottom_is_least(self):
        assert NEG_INF < TropValue(-1000)
        assert not (NEG_INF < NEG_INF)
        assert NEG_INF <= NEG_INF
        assert TropValue(Fraction(1, 3)) < TropValue(Fraction(1, 2))

    def test_finite_accessor(self):
        assert TropValue(Fraction(7, 2)).finite == Fraction(7, 2)
        with pytest.raises(ValueError):
            NEG_INF.finite

    def test_parse(self):
        assert TropValue.parse("-inf") == NEG_INF
        assert TropValue.parse("-7/2") == TropValue(Fraction(-7, 2))
        assert TropValue.parse(" 3 ") == TropValue(3)
        with pytest.raises(ValueError):
            TropValue.parse("spam")
        with pytest.raises(ValueError):
            TropValue.parse("1/0")

    def test_hashable(self):
        assert len({TropValue(1), TropValue(Fraction(2, 2)), NEG_INF}) == 2

    def test_str(self):
        assert str(TropValue(Fraction(-7, 2))) == "-7/2"
        assert str(NEG_INF) == "-inf"


class TestOperations:
    def test_add_is_max(self):
        assert t_add(TropValue(2), TropValue(5)) == TropValue(5)
        assert t_add(TropValue(2), NEG_INF) == TropValue(2)
        assert t_add(NEG_INF, NEG_INF) == NEG_INF

    def test_mul_is_plus(self):
        assert t_mul(TropValue(2), TropValue(5)) == TropValue(7)
        assert t_mul(TropValue(2), NEG_INF) == NEG_INF
        assert t_mul(NEG_INF, NEG_INF) == NEG_INF

    def test_scale(self):
        assert t_scale(TropValue(Fraction(3, 2)), 2) == TropValue(3)
        assert t_scale(TropValue(4), Fraction(1, 2)) == TropValue(2)
        assert t_scale(NEG_INF, 5) == NEG_INF
        # half-integer scaling shows up in the distortion formulas
        assert t_scale(TropValue(3), Fraction(1, 2)) == TropValue(Fraction(3, 2))

    def test_sum(self):
        assert t_sum([]) == NEG_INF
        assert t_sum([TropValue(1), NEG_INF, TropValue(3)]) == TropValue(3)

    def test_semiring_laws_random(self):
        # associativity, commutativity, identities, absorption, distributivity
        rng = random.Random(20260822)
        for _ in range(300):
            a, b, c = rand_value(rng), rand_value(rng), rand_value(rng)
            assert t_add(a, b) == t_add(b, a)
            assert t_mul(a, b) == t_mul(b, a)
            assert t_add(t_add(a, b), c) == t_add(a, t_add(b, c))
            assert t_mul(t_mul(a, b), c) == t_mul(a, t_mul(b, c))
            assert t_add(a, NEG_INF) == a
            assert t_mul(a, TROP_ONE) == a
            assert t_mul(a, NEG_INF) == NEG_INF
            assert t_mul(a, t_add(b, c)) == t_add(t_mul(a, b), t_mul(a, c))
            # idempotent addition
            assert t_add(a, a) == a
