"""Symmetric quadric duality: adjoint duals, distortion calculus, regularity.

A quadric in n variables is a symmetric (n+1) x (n+1) max-plus matrix:
index i <= n pairs with the variable x_i and index n+1 with the affine
slot, so entry (i,i) holds the coefficient of x_i^2, entry (i,j) the
cross term x_i x_j, entry (i,n+1) the linear term x_i, and (n+1,n+1) the
constant.  The dual quadric is the tropical adjoint matrix.

Every finite off-diagonal entry splits classically as

    a_{i,j} = (a_{i,i} + a_{j,j}) / 2 + eps_{i,j},

and the distortion eps_{i,j} measures how far the cross coefficient sits
above or below the average of the two matching diagonal entries.  The
sign pattern of eps decides which lattice nodes appear in the induced
subdivision, minor determinants factor through eps, and the regularity
test (double dual equals the input shifted by one constant) reduces to
properties of eps alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import UnsupportedShapeError
from .matrix import EntryLike, TropMatrix, trop_det, trop_minor, trop_adjoint
from .polynomial import TropPolynomial
from .semiring import NEG_INF, TROP_ONE, TropValue, t_add, t_mul, t_sum


def _validated_symmetric(matrix: TropMatrix, what: str) -> TropMatrix:
    if matrix.symmetric:
        return matrix
    for i in range(matrix.n):
        for j in range(i + 1, matrix.n):
            if matrix.rows[i][j] != matrix.rows[j][i]:
                raise ValueError(
                    f"{what} must be symmetric; entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) differ"
                )
    return TropMatrix(matrix.rows, symmetric=True)


class QuadricMatrix:
    """Coefficient matrix of a quadric in `size - 1` variables.

    Wraps a symmetric TropMatrix; rejects asymmetric input.  Entries may
    be NEG_INF (missing monomials), including whole rows.
    """

    __slots__ = ("matrix",)

    def __init__(self, matrix: TropMatrix):
        if matrix.n < 2:
            raise ValueError("a quadric matrix needs at least 2 rows (1 variable plus the affine slot)")
        object.__setattr__(self, "matrix", _validated_symmetric(matrix, "a quadric matrix"))

    def __setattr__(self, name, value):
        raise AttributeError("QuadricMatrix is immutable")

    @classmethod
    def from_upper(cls, size: int, upper: Sequence[EntryLike]) -> "QuadricMatrix":
        """Build from the row-major upper triangle, diagonal included."""
        return cls(TropMatrix.symmetric_from_upper(size, upper))

    @property
    def size(self) -> int:
        return self.matrix.n

    @property
    def nvars(self) -> int:
        return self.matrix.n - 1

    def entry(self, i: int, j: int) -> TropValue:
        return self.matrix.entry(i, j)

    def upper_triangle(self) -> Tuple[TropValue, ...]:
        return self.matrix.upper_triangle()

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuadricMatrix):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(("quadric", self.matrix))

    def __repr__(self) -> str:
        return f"QuadricMatrix({self.matrix!r})"


class DistortionMatrix:
    """Symmetric grid of cross-term offsets with an all-zero diagonal.

    Entry (i,j) is the amount by which the quadric coefficient a_{i,j}
    exceeds the average of a_{i,i} and a_{j,j}; NEG_INF marks a missing
    cross term.  Diagonal entries are exactly 0 by construction.
    """

    __slots__ = ("matrix",)

    def __init__(self, matrix: TropMatrix):
        if matrix.n < 2:
            raise ValueError("a distortion matrix needs at least 2 rows")
        matrix = _validated_symmetric(matrix, "a distortion matrix")
        for i in range(matrix.n):
            if matrix.rows[i][i] != TROP_ONE:
                raise ValueError(f"distortion diagonal must be zero, entry ({i + 1},{i + 1}) is {matrix.rows[i][i]}")
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError("DistortionMatrix is immutable")

    @classmethod
    def from_off_diagonal(cls, size: int, values: Sequence[EntryLike]) -> "DistortionMatrix":
        """Build from the row-major strict upper triangle (i < j)."""
        expected = size * (size - 1) // 2
        if len(values) != expected:
            raise ValueError(f"size {size} needs {expected} off-diagonal entries, got {len(values)}")
        grid: List[List[EntryLike]] = [[0 if i == j else NEG_INF for j in range(size)] for i in range(size)]
        it = iter(values)
        for i in range(size):
            for j in range(i + 1, size):
                v = next(it)
                grid[i][j] = v
                grid[j][i] = v
        return cls(TropMatrix(grid, symmetric=True))

    @property
    def size(self) -> int:
        return self.matrix.n

    def entry(self, i: int, j: int) -> TropValue:
        return self.matrix.entry(i, j)

    def off_diagonal(self) -> Tuple[TropValue, ...]:
        """Row-major strict upper triangle (i < j)."""
        n = self.matrix.n
        return tuple(self.matrix.rows[i][j] for i in range(n) for j in range(i + 1, n))

    def __eq__(self, other) -> bool:
        if not isinstance(other, DistortionMatrix):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(("distortion", self.matrix))

    def __repr__(self) -> str:
        return f"DistortionMatrix({self.matrix!r})"


@dataclass(frozen=True)
class RegularityVerdict:
    """Outcome of the double-dual comparison.

    status "regular": every entry of the double dual is the input entry
    shifted by `lifting_constant`.  status "not_regular": two finite
    entries need different shifts; `witness` holds both positions.
    status "degenerate": a position is NEG_INF on one side only;
    `witness` holds that single position.  `dual` and `double_dual` are
    kept for reporting.
    """

    status: str
    lifting_constant: Optional[TropValue]
    witness: Optional[Tuple[Tuple[int, int], ...]]
    dual: "QuadricMatrix"
    double_dual: "QuadricMatrix"


def matrix_from_poly(F: TropPolynomial) -> QuadricMatrix:
    """Fold a polynomial of degree at most 2 into its coefficient matrix.

    Each monomial lands in one symmetric slot: x_i^2 on the diagonal,
    x_i x_j off-diagonal, x_i in the affine column, the constant in the
    corner.  Raises UnsupportedShapeError for any other monomial.
    """
    n = F.nvars
    size = n + 1
    grid: List[List[TropValue]] = [[NEG_INF] * size for _ in range(size)]
    for exp, coef in F.terms.items():
        if any(e < 0 for e in exp) or sum(exp) > 2:
            raise UnsupportedShapeError(f"monomial {exp} is not quadric (need exponents >= 0 with total degree <= 2)")
        carriers = [k + 1 for k, e in enumerate(exp) if e > 0]
        if len(carriers) == 2:
            i, j = carriers
        elif len(carriers) == 1:
            i = carriers[0]
            j = i if exp[i - 1] == 2 else size
        else:
            i = j = size
        grid[i - 1][j - 1] = coef
        grid[j - 1][i - 1] = coef
    return QuadricMatrix(TropMatrix(grid, symmetric=True))


def poly_from_matrix(A: QuadricMatrix) -> TropPolynomial:
    """Unfold a quadric matrix into its polynomial.

    Each symmetric pair of entries contributes a single monomial, so the
    map is inverse to matrix_from_poly.  Raises ValueError when no entry
    is finite (there is no polynomial to build).
    """
    n = A.nvars
    size = A.size
    pairs = []
    for i in range(1, size + 1):
        for j in range(i, size + 1):
            coef = A.entry(i, j)
            if coef.is_neg_inf:
                continue
            exp = [0] * n
            if i <= n:
                exp[i - 1] += 1
            if j <= n:
                exp[j - 1] += 1
            pairs.append((tuple(exp), coef))
    if not pairs:
        raise ValueError("quadric matrix has no finite entry")
    return TropPolynomial.from_terms(n, pairs)


def dual_quadric(A: QuadricMatrix) -> QuadricMatrix:
    """The adjoint matrix, which is again symmetric."""
    return QuadricMatrix(trop_adjoint(A.matrix))


def _require_finite_diagonal(A: QuadricMatrix, what: str) -> None:
    for i in range(1, A.size + 1):
        if A.entry(i, i).is_neg_inf:
            raise ValueError(f"{what} needs a finite diagonal, entry ({i},{i}) is -inf")


def distortion_matrix(A: QuadricMatrix) -> DistortionMatrix:
    """Offsets of the off-diagonal entries against their diagonal averages.

    Entry (i,j) of the result is a_{i,j} - (a_{i,i} + a_{j,j}) / 2, or
    NEG_INF when a_{i,j} is.  The diagonal must be finite.
    """
    _require_finite_diagonal(A, "the distortion matrix")
    size = A.size
    grid: List[List[TropValue]] = [[TROP_ONE] * size for _ in range(size)]
    for i in range(1, size + 1):
        for j in range(i + 1, size + 1):
            a = A.entry(i, j)
            if a.is_neg_inf:
                eps = NEG_INF
            else:
                eps = TropValue(a.finite - (A.entry(i, i).finite + A.entry(j, j).finite) / 2)
            grid[i - 1][j - 1] = eps
            grid[j - 1][i - 1] = eps
    return DistortionMatrix(TropMatrix(grid, symmetric=True))


def _check_index(A: QuadricMatrix, i: int, j: int) -> None:
    if not (1 <= i <= A.size and 1 <= j <= A.size):
        raise IndexError(f"indices ({i},{j}) out of range for size {A.size}")


def G_factor(A: QuadricMatrix, i: int, j: int) -> TropValue:
    """Classical sum of the diagonal entries away from i and j, plus half
    of a_{i,i} and a_{j,j} when i != j.

    This is the part of any (i,j) minor diagonal sum contributed by the
    diagonal averages; it is the same for every permutation, which is why
    minors factor as G_factor + distortion minor.  Diagonal must be finite.
    """
    _require_finite_diagonal(A, "G_factor")
    _check_index(A, i, j)
    total = Fraction(0)
    if i != j:
        total += (A.entry(i, i).finite + A.entry(j, j).finite) / 2
    for l in range(1, A.size + 1):
        if l != i and l != j:
            total += A.entry(l, l).finite
    return TropValue(total)


def decompose_minor(A: QuadricMatrix, i: int, j: int) -> Tuple[TropValue, TropValue]:
    """Split the (i,j) minor determinant of A into its constant diagonal
    part and the matching minor determinant of the distortion matrix.

    Returns (G_factor(A, i, j), det of the (i,j) minor of distortion);
    their classical sum equals trop_det(trop_minor(A, i, j)).value.
    """
    g = G_factor(A, i, j)
    E = distortion_matrix(A)
    d = trop_det(trop_minor(E.matrix, i, j)).value
    return g, d


def classify_by_distortion(E: DistortionMatrix) -> str:
    """Sign pattern of the off-diagonal entries.

    "all_negative" / "all_positive" need every off-diagonal entry finite
    with that strict sign; zeros and NEG_INF entries make the pattern
    "mixed".
    """
    any_blocker = False
    any_neg = False
    any_pos = False
    for e in E.off_diagonal():
        if e.is_neg_inf or e.finite == 0:
            any_blocker = True
        elif e.finite < 0:
            any_neg = True
        else:
            any_pos = True
    if any_neg and not any_pos and not any_blocker:
        return "all_negative"
    if any_pos and not any_neg and not any_blocker:
        return "all_positive"
    return "mixed"


def is_regular(A: QuadricMatrix) -> RegularityVerdict:
    """Test whether the double dual is the input lifted by one constant.

    NEG_INF positions must agree exactly between input and double dual;
    a one-sided NEG_INF cannot be bridged by any constant and yields
    status "degenerate" with that position as witness.  Otherwise the
    finite differences are compared entrywise: one shared value gives
    "regular" with that lifting constant, a clash gives "not_regular"
    with the two clashing positions.  A matrix with no finite entry at
    all is regular at lifting constant 0 (every constant lifts bottom
    to bottom).
    """
    dual = dual_quadric(A)
    double_dual = dual_quadric(dual)
    size = A.size
    positions = [(i, j) for i in range(1, size + 1) for j in range(i, size + 1)]
    for i, j in positions:
        if A.entry(i, j).is_neg_inf != double_dual.entry(i, j).is_neg_inf:
            return RegularityVerdict("degenerate", None, ((i, j),), dual, double_dual)
    first: Optional[Tuple[int, int]] = None
    lam: Optional[Fraction] = None
    for i, j in positions:
        a = A.entry(i, j)
        if a.is_neg_inf:
            continue
        diff = double_dual.entry(i, j).finite - a.finite
        if lam is None:
            lam = diff
            first = (i, j)
        elif diff != lam:
            return RegularityVerdict("not_regular", None, (first, (i, j)), dual, double_dual)
    if lam is None:
        return RegularityVerdict("regular", TROP_ONE, None, dual, double_dual)
    return RegularityVerdict("regular", TropValue(lam), None, dual, double_dual)


def _require_all_negative(E: DistortionMatrix, what: str) -> None:
    for e in E.off_diagonal():
        if e.is_neg_inf or e.finite >= 0:
            raise ValueError(f"{what} needs every off-diagonal entry finite and strictly negative, got {e}")


def negative_regularity_criterion(E: DistortionMatrix) -> bool:
    """Strict two-step comparison on an all-negative distortion matrix.

    For every ordered pair i != j the direct entry eps_{j,i} must be
    strictly larger than the best step out of j plus the best step into
    i, each maximized over the remaining indices independently.  With no
    remaining index (size 2) the right side is NEG_INF and the test is
    vacuously true.

    True implies the quadric is regular.  The converse holds for size 3
    up to ties; for larger matrices the two maxima may pick different
    intermediate indices, making the test strictly stronger than
    regularity on some inputs.
    """
    _require_all_negative(E, "the regularity criterion")
    size = E.size
    for i in range(1, size + 1):
        for j in range(1, size + 1):
            if i == j:
                continue
            best_out = t_sum(E.entry(j, k) for k in range(1, size + 1) if k != i and k != j)
            best_in = t_sum(E.entry(h, i) for h in range(1, size + 1) if h != i and h != j)
            if not E.entry(j, i) > t_mul(best_out, best_in):
                return False
    return True


def minor_formula_negative(E: DistortionMatrix, i: int, j: int) -> TropValue:
    """Two-step closed form for the (i,j) minor determinant of an
    all-negative distortion matrix.

    Returns 0 for i = j.  Otherwise takes the larger of the direct entry
    eps_{j,i} and the sum of the best step out of j and the best step
    into i over the remaining indices, maximized independently.  This
    equals the true minor determinant for sizes up to 3; for size 4 and
    beyond the independent maxima can land on different intermediate
    indices and the value may strictly exceed the minor determinant.
    """
    _require_all_negative(E, "the minor closed form")
    if not (1 <= i <= E.size and 1 <= j <= E.size):
        raise IndexError(f"indices ({i},{j}) out of range for size {E.size}")
    if i == j:
        return TROP_ONE
    size = E.size
    best_out = t_sum(E.entry(j, k) for k in range(1, size + 1) if k != i and k != j)
    best_in = t_sum(E.entry(h, i) for h in range(1, size + 1) if h != i and h != j)
    return t_add(E.entry(j, i), t_mul(best_out, best_in))
