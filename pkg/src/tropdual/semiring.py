"""Exact max-plus arithmetic over the rationals extended with a bottom element.

Values live in (Q u {-inf}, max, +).  Addition is max, multiplication is
ordinary +, the additive identity is -inf and the multiplicative identity
is 0.  Everything is exact: coordinates are `fractions.Fraction`, never
floats.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]


class TropValue:
    """A single max-plus element: a rational number or -inf.

    Immutable and hashable.  The bottom element is exposed as the module
    constant NEG_INF; any TropValue built from None compares equal to it.
    """

    __slots__ = ("_value",)

    def __init__(self, value: Union[RationalLike, "TropValue", None]):
        if isinstance(value, TropValue):
            object.__setattr__(self, "_value", value._value)
        elif value is None:
            object.__setattr__(self, "_value", None)
        elif isinstance(value, (int, Fraction)):
            object.__setattr__(self, "_value", Fraction(value))
        else:
            raise TypeError(f"cannot build a tropical value from {type(value).__name__}")

    def __setattr__(self, name, value):
        raise AttributeError("TropValue is immutable")

    @property
    def is_neg_inf(self) -> bool:
        return self._value is None

    @property
    def value(self) -> Union[Fraction, None]:
        """The underlying rational, or None for -inf."""
        return self._value

    @property
    def finite(self) -> Fraction:
        """The underlying rational; raises if the value is -inf."""
        if self._value is None:
            raise ValueError("tropical value is -inf, no finite representative")
        return self._value

    @classmethod
    def parse(cls, text: str) -> "TropValue":
        """Parse '-inf' or anything Fraction() accepts ('3', '-7/2', '1.25')."""
        stripped = text.strip()
        if stripped in ("-inf", "-Inf", "-INF"):
            return NEG_INF
        try:
            return cls(Fraction(stripped))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational or '-inf': {text!r}") from exc

    def __eq__(self, other) -> bool:
        if isinstance(other, TropValue):
            return self._value == other._value
        if isinstance(other, (int, Fraction)):
            return self._value == Fraction(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("TropValue", self._value))

    def __lt__(self, other: "TropValue") -> bool:
        other = TropValue(other)
        if self._value is None:
            return other._value is not None
        if other._value is None:
            return False
        return self._value < other._value

    def __le__(self, other: "TropValue") -> bool:
        return self == TropValue(other) or self < other

    def __gt__(self, other: "TropValue") -> bool:
        return not self <= other

    def __ge__(self, other: "TropValue") -> bool:
        return not self < other

    def __repr__(self) -> str:
        return f"TropValue({self})"

    def __str__(self) -> str:
        return "-inf" if self._value is None else str(self._value)


NEG_INF = TropValue(None)

# The multiplicative identity of the semiring.
TROP_ONE = TropValue(0)


def t_add(a: TropValue, b: TropValue) -> TropValue:
    """Tropical addition: max(a, b).  -inf is the neutral element."""
    a, b = TropValue(a), TropValue(b)
    if a._value is None:
        return b
    if b._value is None:
        return a
    return a if a._value >= b._value else b


def t_mul(a: TropValue, b: TropValue) -> TropValue:
    """Tropical multiplication: a + b.  -inf is absorbing."""
    a, b = TropValue(a), TropValue(b)
    if a._value is None or b._value is None:
        return NEG_INF
    return TropValue(a._value + b._value)


def t_scale(a: TropValue, k: RationalLike) -> TropValue:
    """Classical scaling k * a, i.e. the tropical k-th power for integer k.

    -inf scaled by any k stays -inf.
    """
    a = TropValue(a)
    if a._value is None:
        return NEG_INF
    return TropValue(Fraction(k) * a._value)


def t_sum(values) -> TropValue:
    """Tropical sum (max) of an iterable; -inf on an empty iterable."""
    acc = NEG_INF
    for v in values:
        acc = t_add(acc, v)
    return acc
