"""Exact multivariate polynomials, symbolic matrix duals, and valuation.

This is the classical side of the package: polynomials with rational
coefficients support the duality constructions that the max-plus side
mirrors, and `tropicalize` is the bridge, sending each monomial to the
sum of its exponents weighted by the valuations of its variables while
forgetting signs and scalar factors.

Polynomials are kept canonical: zero coefficients are dropped, variables
that occur in no term are pruned, and the variable list is sorted, so
structural equality is semantic equality.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .polynomial import TropPolynomial
from .semiring import NEG_INF, TropValue, t_sum

ScalarLike = Union[int, Fraction]
PolyLike = Union["SymbolicPoly", ScalarLike]


class SymbolicPoly:
    """Immutable polynomial in named variables over the rationals."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Tuple[int, ...], ScalarLike]):
        variables = tuple(variables)
        cleaned: Dict[Tuple[int, ...], Fraction] = {}
        for exp, coef in terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(variables):
                raise ValueError(f"exponent {exp} does not match variables {variables}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            coef = Fraction(coef)
            if coef == 0:
                continue
            cleaned[exp] = cleaned.get(exp, Fraction(0)) + coef
        cleaned = {e: c for e, c in cleaned.items() if c != 0}
        # canonical form: prune unused variables, sort the rest
        used = [k for k in range(len(variables)) if any(e[k] for e in cleaned)]
        names = tuple(variables[k] for k in used)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {variables}")
        order = sorted(range(len(names)), key=lambda k: names[k])
        final_names = tuple(names[k] for k in order)
        final_terms = {}
        for exp, coef in cleaned.items():
            packed = tuple(exp[used[k]] for k in order)
            final_terms[packed] = coef
        object.__setattr__(self, "variables", final_names)
        object.__setattr__(self, "terms", final_terms)

    def __setattr__(self, name, value):
        raise AttributeError("SymbolicPoly is immutable")

    @classmethod
    def constant(cls, value: ScalarLike) -> "SymbolicPoly":
        return cls((), {(): Fraction(value)})

    @classmethod
    def variable(cls, name: str) -> "SymbolicPoly":
        return cls((name,), {(1,): Fraction(1)})

    @classmethod
    def zero(cls) -> "SymbolicPoly":
        return cls((), {})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return not self.variables

    def constant_value(self) -> Fraction:
        if self.variables:
            raise ValueError("polynomial is not constant")
        return self.terms.get((), Fraction(0))

    # -- arithmetic -------------------------------------------------------

    def _aligned(self, other: "SymbolicPoly"):
        names = tuple(sorted(set(self.variables) | set(other.variables)))
        pos = {n: k for k, n in enumerate(names)}

        def lift(poly: "SymbolicPoly"):
            spots = [pos[n] for n in poly.variables]
            out = {}
            for exp, coef in poly.terms.items():
                e = [0] * len(names)
                for s, v in zip(spots, exp):
                    e[s] = v
                out[tuple(e)] = coef
            return out

        return names, lift(self), lift(other)

    @staticmethod
    def _coerce(value: PolyLike) -> "SymbolicPoly":
        if isinstance(value, SymbolicPoly):
            return value
        return SymbolicPoly.constant(value)

    def __add__(self, other: PolyLike) -> "SymbolicPoly":
        other = self._coerce(other)
        names, a, b = self._aligned(other)
        for exp, coef in b.items():
            a[exp] = a.get(exp, Fraction(0)) + coef
        return SymbolicPoly(names, a)

    __radd__ = __add__

    def __neg__(self) -> "SymbolicPoly":
        return SymbolicPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: PolyLike) -> "SymbolicPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: PolyLike) -> "SymbolicPoly":
        return self._coerce(other) - self

    def __mul__(self, other: PolyLike) -> "SymbolicPoly":
        other = self._coerce(other)
        names, a, b = self._aligned(other)
        out: Dict[Tuple[int, ...], Fraction] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return SymbolicPoly(names, out)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "SymbolicPoly":
        if power < 0:
            raise ValueError("negative power")
        result = SymbolicPoly.constant(1)
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymbolicPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.variables, tuple(sorted(self.terms.items()))))

    # -- structure --------------------------------------------------------

    def degree_in(self, var: str) -> int:
        if var not in self.variables:
            return 0
        k = self.variables.index(var)
        return max((e[k] for e in self.terms), default=0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def coefficients_in(self, var: str) -> List["SymbolicPoly"]:
        """Coefficient polynomials of var^0, var^1, ... (ascending)."""
        if var not in self.variables:
            return [self]
        k = self.variables.index(var)
        rest = self.variables[:k] + self.variables[k + 1:]
        buckets: Dict[int, Dict[Tuple[int, ...], Fraction]] = {}
        for exp, coef in self.terms.items():
            d = exp[k]
            e = exp[:k] + exp[k + 1:]
            buckets.setdefault(d, {})[e] = coef
        top = max(buckets)
        return [SymbolicPoly(rest, buckets.get(d, {})) for d in range(top + 1)]

    def derivative(self, var: str) -> "SymbolicPoly":
        if var not in self.variables:
            return SymbolicPoly.zero()
        k = self.variables.index(var)
        out = {}
        for exp, coef in self.terms.items():
            if exp[k] == 0:
                continue
            e = exp[:k] + (exp[k] - 1,) + exp[k + 1:]
            out[e] = out.get(e, Fraction(0)) + coef * exp[k]
        return SymbolicPoly(self.variables, out)

    def subs(self, mapping: Mapping[str, PolyLike]) -> "SymbolicPoly":
        """Replace variables by polynomials (or scalars)."""
        values = {name: self._coerce(value) for name, value in mapping.items()}
        result = SymbolicPoly.zero()
        for exp, coef in self.terms.items():
            term = SymbolicPoly.constant(coef)
            for name, e in zip(self.variables, exp):
                if e == 0:
                    continue
                base = values.get(name, SymbolicPoly.variable(name))
                term = term * base ** e
            result = result + term
        return result

    def evaluate(self, assignment: Mapping[str, ScalarLike]) -> Fraction:
        total = Fraction(0)
        for exp, coef in self.terms.items():
            value = coef
            for name, e in zip(self.variables, exp):
                if e:
                    value *= Fraction(assignment[name]) ** e
            total += value
        return total

    # -- normalization ----------------------------------------------------

    def scalar_content(self) -> Fraction:
        """Positive gcd of the coefficients (0 for the zero polynomial)."""
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator))
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den) if num else Fraction(0)

    def strip_scalar_content(self) -> "SymbolicPoly":
        content = self.scalar_content()
        if content in (0, 1):
            return self
        return SymbolicPoly(self.variables, {e: c / content for e, c in self.terms.items()})

    def strip_monomial_content(self, names: Optional[Iterable[str]] = None) -> "SymbolicPoly":
        """Divide out the largest monomial factor in the given variables
        (all variables when names is None)."""
        if self.is_zero:
            return self
        allowed = set(self.variables if names is None else names)
        shift = []
        for k, name in enumerate(self.variables):
            low = min(e[k] for e in self.terms)
            shift.append(low if name in allowed else 0)
        if not any(shift):
            return self
        out = {tuple(e - s for e, s in zip(exp, shift)): c for exp, c in self.terms.items()}
        return SymbolicPoly(self.variables, out)

    def __repr__(self) -> str:
        if self.is_zero:
            return "SymbolicPoly(0)"
        bits = []
        for exp, coef in sorted(self.terms.items()):
            factors = [] if coef != 1 or not any(exp) else ["1"]
            if coef != 1:
                factors.append(str(coef))
            for name, e in zip(self.variables, exp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            bits.append("*".join(factors))
        return "SymbolicPoly(" + " + ".join(bits) + ")"


def proportional(p: SymbolicPoly, q: SymbolicPoly) -> bool:
    """Whether p = c * q for some nonzero rational c (zero ~ zero only)."""
    if p.is_zero or q.is_zero:
        return p.is_zero and q.is_zero
    if p.variables != q.variables or set(p.terms) != set(q.terms):
        return False
    exp = next(iter(p.terms))
    ratio = p.terms[exp] / q.terms[exp]
    return all(c == ratio * q.terms[e] for e, c in p.terms.items())


class SymbolicMatrix:
    """Immutable square grid of symbolic polynomials."""

    __slots__ = ("n", "entries")

    def __init__(self, entries: Iterable[Iterable[PolyLike]]):
        grid = tuple(tuple(SymbolicPoly._coerce(e) for e in row) for row in entries)
        n = len(grid)
        if n == 0 or any(len(row) != n for row in grid):
            raise ValueError("matrix must be square and non-empty")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", grid)

    def __setattr__(self, name, value):
        raise AttributeError("SymbolicMatrix is immutable")

    @classmethod
    def symmetric_from_upper(cls, n: int, upper: Sequence[PolyLike]) -> "SymbolicMatrix":
        expected = n * (n + 1) // 2
        if len(upper) != expected:
            raise ValueError(f"upper triangle of {n}x{n} needs {expected} entries")
        grid: List[List[PolyLike]] = [[0] * n for _ in range(n)]
        it = iter(upper)
        for i in range(n):
            for j in range(i, n):
                v = next(it)
                grid[i][j] = v
                grid[j][i] = v
        return cls(grid)

    def entry(self, i: int, j: int) -> SymbolicPoly:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"entry ({i},{j}) out of range")
        return self.entries[i - 1][j - 1]

    def is_symmetric(self) -> bool:
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )

    def scale(self, factor: PolyLike) -> "SymbolicMatrix":
        factor = SymbolicPoly._coerce(factor)
        return SymbolicMatrix([[e * factor for e in row] for row in self.entries])

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymbolicMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"SymbolicMatrix({self.entries!r})"


def _minor_grid(grid, i: int, j: int):
    return [
        [e for c, e in enumerate(row) if c != j]
        for r, row in enumerate(grid)
        if r != i
    ]


def _det_grid(grid) -> SymbolicPoly:
    n = len(grid)
    if n == 1:
        return grid[0][0]
    # expand along the row with the fewest nonzero entries
    row = min(range(n), key=lambda r: sum(not e.is_zero for e in grid[r]))
    total = SymbolicPoly.zero()
    for col, entry in enumerate(grid[row]):
        if entry.is_zero:
            continue
        cofactor = _det_grid(_minor_grid(grid, row, col))
        if (row + col) % 2:
            cofactor = -cofactor
        total = total + entry * cofactor
    return total


def sym_det(M: SymbolicMatrix) -> SymbolicPoly:
    """Exact determinant by cofactor expansion."""
    return _det_grid([list(row) for row in M.entries])


def sym_adjoint(M: SymbolicMatrix) -> SymbolicMatrix:
    """Negated unsigned minors: entry (i,j) is minus the determinant of M
    with row i and column j deleted.  No transpose and no checkerboard
    signs, so this differs from the classical adjugate at odd positions;
    for symmetric 3x3 input the two agree up to conjugation by
    diag(-1, 1, -1).  Requires n >= 2.
    """
    if M.n < 2:
        raise ValueError("adjoint needs at least a 2x2 matrix")
    grid = [list(row) for row in M.entries]
    return SymbolicMatrix(
        [[-_det_grid(_minor_grid(grid, i, j)) for j in range(M.n)] for i in range(M.n)]
    )


def sym_adjugate(M: SymbolicMatrix) -> SymbolicMatrix:
    """Classical adjugate (transposed cofactors): adjugate(M) * M = det * I."""
    if M.n < 2:
        raise ValueError("adjugate needs at least a 2x2 matrix")
    grid = [list(row) for row in M.entries]
    out = []
    for i in range(M.n):
        row = []
        for j in range(M.n):
            cof = _det_grid(_minor_grid(grid, j, i))
            if (i + j) % 2:
                cof = -cof
            row.append(cof)
        out.append(row)
    return SymbolicMatrix(out)


def tropicalize(
    P: SymbolicPoly,
    val: Mapping[str, Union[TropValue, ScalarLike]],
    vars: Optional[Sequence[str]] = None,
):
    """Monomial-wise valuation: scalar and sign are discarded, each
    valued variable contributes exponent * valuation to the tropical
    coefficient, and parallel monomials combine by max.

    Variables not in `val` stay as the variables of a resulting
    TropPolynomial, ordered as in `vars` when given (then any variable in
    neither mapping is an error) or as in P otherwise.  With no variable
    left over the result is a single TropValue.
    """
    if P.is_zero:
        raise ValueError("cannot tropicalize the zero polynomial")
    valuation = {name: TropValue(v) if not isinstance(v, TropValue) else v for name, v in val.items()}
    if vars is not None:
        structural = tuple(vars)
        for name in P.variables:
            if name not in valuation and name not in structural:
                raise ValueError(f"variable {name} has no valuation and is not structural")
    else:
        structural = tuple(name for name in P.variables if name not in valuation)
    spots = {name: k for k, name in enumerate(structural)}

    scalars: List[TropValue] = []
    pairs = []
    for exp, _coef in P.terms.items():
        height = Fraction(0)
        dead = False
        sexp = [0] * len(structural)
        for name, e in zip(P.variables, exp):
            if e == 0:
                continue
            if name in valuation:
                v = valuation[name]
                if v.is_neg_inf:
                    dead = True
                    break
                height += e * v.finite
            else:
                sexp[spots[name]] = e
        if structural:
            if not dead:
                pairs.append((tuple(sexp), TropValue(height)))
        else:
            scalars.append(NEG_INF if dead else TropValue(height))
    if structural:
        if not pairs:
            raise ValueError("every monomial has valuation -inf")
        return TropPolynomial.from_terms(len(structural), pairs)
    return t_sum(scalars)
