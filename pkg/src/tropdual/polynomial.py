"""Tropical Laurent polynomials: sparse exponent -> coefficient maps.

A term (omega, a) stands for a + omega . x under max-plus evaluation.
Duplicate exponents collapse by max at construction time and terms with
coefficient -inf are dropped, since they never achieve a maximum.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Sequence, Tuple, Union

from .semiring import NEG_INF, RationalLike, TropValue, t_add

Exponent = Tuple[int, ...]


class TropPolynomial:
    """Immutable sparse tropical polynomial in `nvars` variables.

    Exponents are integer tuples (negative entries allowed), coefficients
    are finite TropValues.  At least one term is required.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Dict[Exponent, TropValue]):
        if nvars < 1:
            raise ValueError("a tropical polynomial needs at least one variable")
        cleaned: Dict[Exponent, TropValue] = {}
        for exp, coef in terms.items():
            exp = tuple(exp)
            if len(exp) != nvars or not all(isinstance(e, int) for e in exp):
                raise ValueError(f"exponent {exp!r} is not a length-{nvars} integer tuple")
            coef = TropValue(coef)
            if coef.is_neg_inf:
                continue
            prev = cleaned.get(exp)
            cleaned[exp] = coef if prev is None else t_add(prev, coef)
        if not cleaned:
            raise ValueError("polynomial has no finite term")
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", dict(sorted(cleaned.items())))

    def __setattr__(self, name, value):
        raise AttributeError("TropPolynomial is immutable")

    @classmethod
    def from_terms(
        cls,
        nvars: int,
        pairs: Iterable[Tuple[Sequence[int], Union[TropValue, RationalLike, None]]],
    ) -> "TropPolynomial":
        """Build from (exponent, coefficient) pairs; duplicates collapse by max."""
        acc: Dict[Exponent, TropValue] = {}
        for exp, coef in pairs:
            exp = tuple(int(e) for e in exp)
            coef = TropValue(coef)
            prev = acc.get(exp)
            acc[exp] = coef if prev is None else t_add(prev, coef)
        return cls(nvars, acc)

    def support(self) -> Tuple[Exponent, ...]:
        """Exponents with a finite coefficient, in lexicographic order."""
        return tuple(self.terms.keys())

    def coefficient(self, exp: Sequence[int]) -> TropValue:
        return self.terms.get(tuple(exp), NEG_INF)

    def degree(self) -> int:
        """Max total degree over the support (meaningful for non-Laurent supports)."""
        return max(sum(exp) for exp in self.terms)

    def translate(self, shift: Sequence[int]) -> "TropPolynomial":
        """Translate the support by an integer vector, keeping coefficients."""
        shift = tuple(int(s) for s in shift)
        if len(shift) != self.nvars:
            raise ValueError("shift length must match the number of variables")
        return TropPolynomial(
            self.nvars,
            {tuple(e + s for e, s in zip(exp, shift)): coef for exp, coef in self.terms.items()},
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, TropPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, tuple(self.terms.items())))

    def __repr__(self) -> str:
        parts = [f"{coef} . x^{exp}" for exp, coef in self.terms.items()]
        return "TropPolynomial(max: " + ", ".join(parts) + ")"


def eval_poly(F: TropPolynomial, point: Sequence[RationalLike]) -> TropValue:
    """Evaluate max over terms of (coefficient + omega . x) at a rational point."""
    if len(point) != F.nvars:
        raise ValueError(f"point has {len(point)} coordinates, polynomial has {F.nvars} variables")
    best = NEG_INF
    for exp, coef in F.terms.items():
        val = coef.finite + sum(e * p for e, p in zip(exp, point))
        cand = TropValue(val)
        if best.is_neg_inf or cand > best:
            best = cand
    return best


def achieving_exponents(F: TropPolynomial, point: Sequence[RationalLike], sign: int = 1) -> List[Exponent]:
    """Exponents maximising omega . x - sign * a_omega at a rational point.

    With sign=+1 the maximisers are exactly the support points whose lifted
    copies touch the lower hull above x; that is the combinatorial datum the
    subdivision-to-curve duality is phrased in.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if len(point) != F.nvars:
        raise ValueError(f"point has {len(point)} coordinates, polynomial has {F.nvars} variables")
    best = None
    winners: List[Exponent] = []
    for exp, coef in F.terms.items():
        val = sum(e * p for e, p in zip(exp, point)) - sign * coef.finite
        if best is None or val > best:
            best = val
            winners = [exp]
        elif val == best:
            winners.append(exp)
    return sorted(winners)
