"""Exact rational linear algebra for point sets and hyperplanes.

Everything here works on :class:`fractions.Fraction`; no floats are ever
introduced, so incidence tests ("is this point on that hyperplane?") are
decidable.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

Rational = Fraction
RationalPoint = tuple  # tuple of Fraction, one entry per ambient coordinate


class GeometryError(ValueError):
    """Raised for empty, degenerate or dimensionally inconsistent input."""


def as_point(coords) -> tuple:
    """Convert an iterable of ints / Fractions / "p/q" strings to a point."""
    return tuple(Fraction(c) for c in coords)


def _check_uniform(points: Sequence[Sequence]) -> int:
    if len(points) == 0:
        raise GeometryError("empty point set")
    d = len(points[0])
    for p in points:
        if len(p) != d:
            raise GeometryError("dimension mismatch")
    return d


@dataclass(frozen=True)
class SolveResult:
    rank: int
    consistent: bool
    solution: Optional[tuple]
    pivot_columns: tuple
    free_columns: tuple


def _row_reduce(rows, rhs=None):
    """Reduced row echelon form in place.

    Pivot search is lexicographic: the leftmost column with a nonzero entry,
    and within it the topmost such row.  Returns the pivot columns.
    """
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        for i in range(r, n_rows):
            if rows[i][c] != 0:
                break
        else:
            continue
        if i != r:
            rows[r], rows[i] = rows[i], rows[r]
            if rhs is not None:
                rhs[r], rhs[i] = rhs[i], rhs[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        if rhs is not None:
            rhs[r] *= inv
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
                if rhs is not None:
                    rhs[i] -= f * rhs[r]
        pivots.append(c)
        r += 1
    return pivots


def solve_exact(matrix: Sequence[Sequence], rhs: Sequence) -> SolveResult:
    """Solve ``matrix @ x = rhs`` by exact Gaussian elimination.

    Returns the rank, whether the system is consistent and, if it is, the
    particular solution obtained by setting all free variables to zero.
    """
    if len(matrix) != len(rhs):
        raise GeometryError("shape mismatch: %d rows but %d right-hand sides"
                            % (len(matrix), len(rhs)))
    n_cols = len(matrix[0]) if matrix else 0
    if any(len(row) != n_cols for row in matrix):
        raise GeometryError("shape mismatch: ragged matrix")
    rows = [[Fraction(v) for v in row] for row in matrix]
    b = [Fraction(v) for v in rhs]
    pivots = _row_reduce(rows, b)
    rank = len(pivots)
    free = tuple(c for c in range(n_cols) if c not in pivots)
    if any(b[i] != 0 for i in range(rank, len(b))):
        return SolveResult(rank, False, None, tuple(pivots), free)
    x = [Fraction(0)] * n_cols
    for i, c in enumerate(pivots):
        x[c] = b[i]
    return SolveResult(rank, True, tuple(x), tuple(pivots), free)


def matrix_rank(matrix: Sequence[Sequence]) -> int:
    if not matrix or not matrix[0]:
        return 0
    rows = [[Fraction(v) for v in row] for row in matrix]
    return len(_row_reduce(rows))


def nullspace(matrix: Sequence[Sequence], n_cols: int) -> list:
    """Basis of the right nullspace, one vector per free column."""
    rows = [[Fraction(v) for v in row] for row in matrix]
    pivots = _row_reduce(rows) if rows else []
    basis = []
    for f in range(n_cols):
        if f in pivots:
            continue
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -rows[i][f]
        basis.append(tuple(v))
    return basis


def affine_rank(points: Sequence[Sequence]) -> int:
    """Rank of the difference vectors ``p_i - p_last``.

    ``k`` points are affinely independent iff the result is ``k - 1``.
    """
    _check_uniform(points)
    base = points[-1]
    diffs = [[Fraction(a) - Fraction(b) for a, b in zip(p, base)]
             for p in points[:-1]]
    return matrix_rank(diffs)


def affinely_independent(points: Sequence[Sequence]) -> bool:
    return affine_rank(points) == len(points) - 1


class Side(Enum):
    ON = 0
    POSITIVE = 1
    NEGATIVE = -1


@dataclass(frozen=True)
class Hyperplane:
    """The locus ``normal . x == offset``, stored in canonical form.

    Canonical form scales the normal so its first nonzero entry is +1, which
    makes two hyperplanes equal iff they describe the same point set.
    """

    normal: tuple
    offset: Fraction

    def __post_init__(self):
        normal = tuple(Fraction(v) for v in self.normal)
        lead = next((v for v in normal if v != 0), None)
        if lead is None:
            raise GeometryError("hyperplane normal is the zero vector")
        object.__setattr__(self, "normal", tuple(v / lead for v in normal))
        object.__setattr__(self, "offset", Fraction(self.offset) / lead)

    @property
    def dim(self) -> int:
        return len(self.normal)

    def evaluate(self, p) -> Fraction:
        if len(p) != len(self.normal):
            raise GeometryError("dimension mismatch")
        return sum((a * b for a, b in zip(self.normal, p)), Fraction(0)) - self.offset


def hyperplane_through(points: Sequence[Sequence]) -> Hyperplane:
    """The unique hyperplane through ``d`` affinely independent points of R^d."""
    d = _check_uniform(points)
    if len(points) != d or affine_rank(points) != d - 1:
        raise GeometryError("degenerate spanning set")
    base = points[-1]
    diffs = [[Fraction(a) - Fraction(b) for a, b in zip(p, base)]
             for p in points[:-1]]
    (normal,) = nullspace(diffs, d)
    offset = sum((a * Fraction(b) for a, b in zip(normal, base)), Fraction(0))
    return Hyperplane(normal, offset)


def classify_side(h: Hyperplane, p) -> Side:
    value = h.evaluate(p)
    if value == 0:
        return Side.ON
    return Side.POSITIVE if value > 0 else Side.NEGATIVE


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)
