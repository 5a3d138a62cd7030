"""Tropical matrices, permanent-style determinants, minors, and adjoints.

The determinant of an n x n max-plus matrix is the maximum over all
permutations of the corresponding diagonal sums.  There is no cancellation,
so "determinant" and "permanent" coincide; degeneracy is witnessed by two
or more permutations achieving the maximum.

All public indices are 1-based, matching the usual matrix convention used
in the reports.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import factorial, gcd
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .errors import UnsupportedShapeError
from .semiring import NEG_INF, RationalLike, TropValue

# Exhaustive permutation enumeration is only sane up to this size.
MAX_DET_SIZE = 8

EntryLike = Union[TropValue, RationalLike, None]


def _coerce(entry: EntryLike) -> TropValue:
    return entry if isinstance(entry, TropValue) else TropValue(entry)


class TropMatrix:
    """An immutable square max-plus matrix.

    `row_labels` / `col_labels` carry the original 1-based indices through
    minor extraction so downstream reports can name entries of the source
    matrix.  Labels do not participate in equality.
    """

    __slots__ = ("n", "rows", "symmetric", "row_labels", "col_labels")

    def __init__(
        self,
        rows: Iterable[Iterable[EntryLike]],
        symmetric: bool = False,
        row_labels: Optional[Tuple[int, ...]] = None,
        col_labels: Optional[Tuple[int, ...]] = None,
    ):
        grid = tuple(tuple(_coerce(e) for e in row) for row in rows)
        n = len(grid)
        if n == 0:
            raise ValueError("matrix must have at least one row")
        for row in grid:
            if len(row) != n:
                raise ValueError(f"matrix must be square, got row of length {len(row)} in {n}x{n}")
        if symmetric:
            for i in range(n):
                for j in range(i + 1, n):
                    if grid[i][j] != grid[j][i]:
                        raise ValueError(
                            f"matrix declared symmetric but entries ({i + 1},{j + 1}) and "
                            f"({j + 1},{i + 1}) differ"
                        )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", grid)
        object.__setattr__(self, "symmetric", symmetric)
        object.__setattr__(self, "row_labels", row_labels if row_labels is not None else tuple(range(1, n + 1)))
        object.__setattr__(self, "col_labels", col_labels if col_labels is not None else tuple(range(1, n + 1)))
        if len(self.row_labels) != n or len(self.col_labels) != n:
            raise ValueError("label tuples must match the matrix size")

    def __setattr__(self, name, value):
        raise AttributeError("TropMatrix is immutable")

    @classmethod
    def symmetric_from_upper(cls, n: int, upper: Sequence[EntryLike]) -> "TropMatrix":
        """Build a symmetric matrix from the row-major upper triangle
        (diagonal included), e.g. n=3 takes (a11, a12, a13, a22, a23, a33).
        """
        expected = n * (n + 1) // 2
        if len(upper) != expected:
            raise ValueError(f"upper triangle of an {n}x{n} matrix needs {expected} entries, got {len(upper)}")
        grid: List[List[TropValue]] = [[NEG_INF] * n for _ in range(n)]
        it = iter(upper)
        for i in range(n):
            for j in range(i, n):
                v = _coerce(next(it))
                grid[i][j] = v
                grid[j][i] = v
        return cls(grid, symmetric=True)

    def entry(self, i: int, j: int) -> TropValue:
        """1-based entry access."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"entry ({i},{j}) out of range for {self.n}x{self.n} matrix")
        return self.rows[i - 1][j - 1]

    def upper_triangle(self) -> Tuple[TropValue, ...]:
        """Row-major upper triangle including the diagonal."""
        return tuple(self.rows[i][j] for i in range(self.n) for j in range(i, self.n))

    def neg_inf_pattern(self) -> Tuple[Tuple[bool, ...], ...]:
        return tuple(tuple(e.is_neg_inf for e in row) for row in self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TropMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(e) for e in row) for row in self.rows)
        return f"TropMatrix[{body}]"


class TropDetResult:
    """Determinant value plus the permutation count achieving it.

    `degenerate` is equivalent to `achiever_count >= 2`.  When every
    diagonal sum is -inf the value is -inf and all n! permutations count
    as achievers.
    """

    __slots__ = ("value", "achiever_count", "degenerate")

    def __init__(self, value: TropValue, achiever_count: int):
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "achiever_count", achiever_count)
        object.__setattr__(self, "degenerate", achiever_count >= 2)

    def __setattr__(self, name, value):
        raise AttributeError("TropDetResult is immutable")

    def __repr__(self) -> str:
        return f"TropDetResult(value={self.value}, achievers={self.achiever_count}, degenerate={self.degenerate})"


def _int_grid(M: TropMatrix) -> Tuple[List[List[Optional[int]]], int]:
    """Rescale all finite entries to integers; None marks -inf.

    Exact permutation sums over ints are much faster than Fraction sums;
    the common denominator is divided back out at the end.
    """
    scale = 1
    for row in M.rows:
        for e in row:
            if e.value is not None:
                d = e.value.denominator
                scale = scale * d // gcd(scale, d)
    grid: List[List[Optional[int]]] = [
        [None if e.value is None else int(e.value * scale) for e in row] for row in M.rows
    ]
    return grid, scale


def _check_size(n: int, what: str) -> None:
    if n > MAX_DET_SIZE:
        raise UnsupportedShapeError(
            f"{what} enumerates all {n}! permutations; sizes above {MAX_DET_SIZE} are rejected"
        )


def trop_det(M: TropMatrix) -> TropDetResult:
    """Tropical determinant: max over permutations of the diagonal sums.

    Returns the value together with the exact number of achieving
    permutations.  Exhaustive enumeration, capped at n = 8.
    """
    n = M.n
    _check_size(n, "tropical determinant")
    grid, scale = _int_grid(M)
    best: Optional[int] = None
    count = 0
    for perm in permutations(range(n)):
        total = 0
        dead = False
        for k in range(n):
            e = grid[k][perm[k]]
            if e is None:
                dead = True
                break
            total += e
        if dead:
            continue
        if best is None or total > best:
            best = total
            count = 1
        elif total == best:
            count += 1
    if best is None:
        # Every permutation hits a -inf entry, so all of them tie at -inf.
        return TropDetResult(NEG_INF, factorial(n))
    return TropDetResult(TropValue(Fraction(best, scale)), count)


def trop_minor(M: TropMatrix, i: int, j: int) -> TropMatrix:
    """Delete row i and column j (1-based positions in the current matrix).

    Labels of the result keep the original indices, so reports can refer
    back to entries of the source matrix.
    """
    n = M.n
    if n < 2:
        raise ValueError("minors need a matrix of size at least 2")
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"minor position ({i},{j}) out of range for {n}x{n} matrix")
    rows = [
        [M.rows[r][c] for c in range(n) if c != j - 1]
        for r in range(n)
        if r != i - 1
    ]
    return TropMatrix(
        rows,
        symmetric=(M.symmetric and i == j),
        row_labels=tuple(lbl for k, lbl in enumerate(M.row_labels) if k != i - 1),
        col_labels=tuple(lbl for k, lbl in enumerate(M.col_labels) if k != j - 1),
    )


def trop_adjoint(M: TropMatrix) -> TropMatrix:
    """Matrix of all (n-1) x (n-1) minor determinants: A*[i][j] = det(minor(i, j)).

    There are no cofactor signs in max-plus, and no transpose is taken.
    A single pass over the n! permutations of the full matrix feeds every
    minor simultaneously: a permutation through cell (i, j) contributes its
    diagonal sum minus entry (i, j) to minor (i, j), and a permutation whose
    only -inf entry sits at (i, j) contributes its finite part there.
    """
    n = M.n
    if n < 2:
        raise ValueError("the adjoint needs a matrix of size at least 2")
    _check_size(n, "tropical adjoint")
    grid, scale = _int_grid(M)
    # best[i][j] = max finite candidate for minor (i, j); None = -inf so far
    best: List[List[Optional[int]]] = [[None] * n for _ in range(n)]
    for perm in permutations(range(n)):
        total = 0
        inf_row = -1
        dead = False
        for k in range(n):
            e = grid[k][perm[k]]
            if e is None:
                if inf_row >= 0:
                    dead = True
                    break
                inf_row = k
            else:
                total += e
        if dead:
            continue
        if inf_row >= 0:
            # Exactly one -inf on the diagonal: only the minor skipping that
            # cell sees a finite sum.
            j = perm[inf_row]
            row = best[inf_row]
            if row[j] is None or total > row[j]:
                row[j] = total
        else:
            for k in range(n):
                j = perm[k]
                cand = total - grid[k][j]  # type: ignore[operator]
                row = best[k]
                if row[j] is None or cand > row[j]:
                    row[j] = cand
    entries = [
        [NEG_INF if best[i][j] is None else TropValue(Fraction(best[i][j], scale)) for j in range(n)]
        for i in range(n)
    ]
    return TropMatrix(entries, symmetric=M.symmetric)


def trop_scale_matrix(M: TropMatrix, c: TropValue) -> TropMatrix:
    """Add the constant c to every entry (tropical scalar multiplication)."""
    from .semiring import t_mul

    c = TropValue(c)
    return TropMatrix(
        [[t_mul(e, c) for e in row] for row in M.rows],
        symmetric=M.symmetric,
        row_labels=M.row_labels,
        col_labels=M.col_labels,
    )
