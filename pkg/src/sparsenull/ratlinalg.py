"""Exact dense linear algebra over the rationals.

Scalars are :class:`fractions.Fraction` (always canonical), vectors are tuples
of fractions and matrices are immutable :class:`Mat` values.  No floating point
enters any routine in this module.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, NamedTuple, Sequence, Union

Rat = Fraction
Vec = tuple  # tuple[Fraction, ...]

RatLike = Union[int, Fraction, str]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def rat(x: RatLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass int, Fraction or str")
    return Fraction(x)


def vec(values: Iterable[RatLike]) -> tuple:
    return tuple(rat(v) for v in values)


class NotSquareError(ValueError):
    pass


class RankDeficientError(ValueError):
    pass


@dataclass(frozen=True)
class Mat:
    """Immutable dense matrix of rationals stored row-major.

    ``rows`` and ``cols`` are carried explicitly so that empty shapes such as
    ``0 x 3`` or ``4 x 0`` are representable.
    """

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    # construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RatLike]], cols: int | None = None) -> "Mat":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cols must be given for a matrix with no rows")
            cols = len(rows[0])
        flat = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
            flat.extend(rat(x) for x in r)
        return cls(len(rows), cols, tuple(flat))

    @classmethod
    def from_cols(cls, columns: Sequence[Sequence[RatLike]], rows: int | None = None) -> "Mat":
        columns = [vec(c) for c in columns]
        if rows is None:
            if not columns:
                raise ValueError("rows must be given for a matrix with no columns")
            rows = len(columns[0])
        if any(len(c) != rows for c in columns):
            raise ValueError("ragged columns")
        return cls(rows, len(columns),
                   tuple(columns[j][i] for i in range(rows) for j in range(len(columns))))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Mat":
        return cls(rows, cols, (_ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls(n, n, tuple(_ONE if i == j else _ZERO for i in range(n) for j in range(n)))

    @classmethod
    def column(cls, v: Sequence[RatLike]) -> "Mat":
        v = vec(v)
        return cls(len(v), 1, v)

    # access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.cols)]

    @property
    def T(self) -> "Mat":
        return Mat(self.cols, self.rows,
                   tuple(self.entries[i * self.cols + j]
                         for j in range(self.cols) for i in range(self.rows)))

    def submatrix(self, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None) -> "Mat":
        rows = range(self.rows) if rows is None else list(rows)
        cols = range(self.cols) if cols is None else list(cols)
        return Mat(len(rows), len(cols),
                   tuple(self.entries[i * self.cols + j] for i in rows for j in cols))

    def drop_col(self, j: int) -> "Mat":
        return self.submatrix(None, [k for k in range(self.cols) if k != j])

    def nnz(self) -> int:
        return sum(1 for x in self.entries if x)

    def is_zero(self) -> bool:
        return not any(self.entries)

    # arithmetic ---------------------------------------------------------

    def __matmul__(self, other):
        if isinstance(other, Mat):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            ocols = [other.col(j) for j in range(other.cols)]
            out = []
            for i in range(self.rows):
                r = self.row(i)
                for c in ocols:
                    out.append(sum((a * b for a, b in zip(r, c) if a and b), _ZERO))
            return Mat(self.rows, other.cols, tuple(out))
        v = tuple(other)
        if len(v) != self.cols:
            raise ValueError(f"shape mismatch {self.shape} @ vector of length {len(v)}")
        return tuple(sum((a * b for a, b in zip(self.row(i), v) if a and b), _ZERO)
                     for i in range(self.rows))

    def __add__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Mat(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Mat(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Mat":
        return Mat(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, k: RatLike) -> "Mat":
        k = rat(k)
        return Mat(self.rows, self.cols, tuple(k * a for a in self.entries))

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))


def hstack(*mats: Mat) -> Mat:
    if not mats:
        raise ValueError("nothing to stack")
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise ValueError("row counts differ")
    cols = sum(m.cols for m in mats)
    out = []
    for i in range(rows):
        for m in mats:
            out.extend(m.row(i))
    return Mat(rows, cols, tuple(out))


def vstack(*mats: Mat) -> Mat:
    if not mats:
        raise ValueError("nothing to stack")
    cols = mats[0].cols
    if any(m.cols != cols for m in mats):
        raise ValueError("column counts differ")
    return Mat(sum(m.rows for m in mats), cols, tuple(x for m in mats for x in m.entries))


def vsub(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def l0(v: Iterable[Fraction]) -> int:
    return sum(1 for x in v if x)


def support(v: Sequence[Fraction]) -> tuple[int, ...]:
    return tuple(i for i, x in enumerate(v) if x)


def sgn(x: Fraction) -> Fraction:
    return _ONE if x > 0 else (-_ONE if x < 0 else _ZERO)


# elimination ---------------------------------------------------------------

def _rref_rows(rows: list[list[Fraction]], ncols: int, stop_col: int | None = None):
    """In-place Gauss-Jordan on a list of row lists; returns pivot columns.

    Pivoting is restricted to columns ``< stop_col`` when given (used for
    augmented systems).
    """
    limit = ncols if stop_col is None else stop_col
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(limit):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        inv = 1 / prow[c]
        if inv != 1:
            prow[:] = [x * inv for x in prow]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    for k in range(c, ncols):
                        if prow[k]:
                            ri[k] -= f * prow[k]
        pivots.append(c)
        r += 1
    return pivots


class RrefResult(NamedTuple):
    R: Mat
    pivots: tuple
    rank: int


def rref(A: Mat) -> RrefResult:
    rows = A.to_rows()
    pivots = _rref_rows(rows, A.cols)
    return RrefResult(Mat(A.rows, A.cols, tuple(x for r in rows for x in r)),
                      tuple(pivots), len(pivots))


def rank(A: Mat) -> int:
    return len(_rref_rows(A.to_rows(), A.cols))


def rank_of_columns(columns: Sequence[Sequence[Fraction]], nrows: int) -> int:
    """Rank of the matrix whose columns are given (eliminates on the transpose)."""
    rows = [list(c) for c in columns]
    return len(_rref_rows(rows, nrows)) if rows else 0


def null_basis(A: Mat) -> Mat:
    """Full null matrix of ``A``: one column per free variable of the RREF."""
    rows = A.to_rows()
    pivots = _rref_rows(rows, A.cols)
    free = [j for j in range(A.cols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [_ZERO] * A.cols
        v[f] = _ONE
        for i, p in enumerate(pivots):
            v[p] = -rows[i][f]
        basis.append(v)
    return Mat.from_cols(basis, rows=A.cols)


def corank(A: Mat) -> int:
    return A.cols - rank(A)


def particular_solution(A: Mat, b: Sequence[RatLike]):
    """Some ``x`` with ``A x = b``, or ``None`` when ``b`` is outside col(A)."""
    b = vec(b)
    if len(b) != A.rows:
        raise ValueError("rhs length does not match row count")
    rows = [list(A.row(i)) + [b[i]] for i in range(A.rows)]
    pivots = _rref_rows(rows, A.cols + 1, stop_col=A.cols)
    for i in range(len(pivots), A.rows):
        if rows[i][A.cols]:
            return None
    x = [_ZERO] * A.cols
    for i, p in enumerate(pivots):
        x[p] = rows[i][A.cols]
    return tuple(x)


def in_col_span(A: Mat, b: Sequence[Fraction]) -> bool:
    return particular_solution(A, b) is not None


def column_basis(A: Mat) -> tuple[Mat, tuple]:
    """Columns of ``A`` at its pivot positions, together with those indices."""
    pivots = rref(A).pivots
    return A.submatrix(None, pivots), pivots


def same_column_space(A: Mat, B: Mat) -> bool:
    if A.rows != B.rows:
        return False
    r = rank(A)
    return r == rank(B) and rank(hstack(A, B)) == r


def kron(A: Mat, B: Mat) -> Mat:
    rows, cols = A.rows * B.rows, A.cols * B.cols
    out = []
    for i in range(A.rows):
        for k in range(B.rows):
            for j in range(A.cols):
                a = A[i, j]
                out.extend(a * b for b in B.row(k))
    return Mat(rows, cols, tuple(out))


def det(A: Mat) -> Fraction:
    """Determinant by Bareiss fraction-free elimination.

    Each row is first scaled to integers; the integer determinant is then
    divided by the product of the scale factors.
    """
    if A.rows != A.cols:
        raise NotSquareError(f"determinant of a {A.rows}x{A.cols} matrix")
    n = A.rows
    if n == 0:
        return _ONE
    scale = 1
    M = []
    for i in range(n):
        r = A.row(i)
        d = lcm(*(x.denominator for x in r))
        scale *= d
        M.append([x.numerator * (d // x.denominator) for x in r])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            p = next((i for i in range(k + 1, n) if M[i][k]), None)
            if p is None:
                return _ZERO
            M[k], M[p] = M[p], M[k]
            sign = -sign
        akk = M[k][k]
        for i in range(k + 1, n):
            aik = M[i][k]
            Mi, Mk = M[i], M[k]
            for j in range(k + 1, n):
                Mi[j] = (Mi[j] * akk - aik * Mk[j]) // prev
            Mi[k] = 0
        prev = akk
    return Fraction(sign * M[n - 1][n - 1], scale)


def inverse(A: Mat) -> Mat:
    if A.rows != A.cols:
        raise NotSquareError("inverse of a non-square matrix")
    n = A.rows
    rows = [list(A.row(i)) + [_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]
    pivots = _rref_rows(rows, 2 * n, stop_col=n)
    if len(pivots) < n:
        raise RankDeficientError("matrix is singular")
    return Mat(n, n, tuple(x for r in rows for x in r[n:]))


def pseudoinverse(A: Mat) -> Mat:
    """``(A^T A)^{-1} A^T`` for a matrix of full column rank."""
    if rank(A) != A.cols:
        raise RankDeficientError(
            f"pseudoinverse needs full column rank; rank {rank(A)} < {A.cols} columns")
    At = A.T
    return inverse(At @ A) @ At


class Norms(NamedTuple):
    l0: int
    l1: Fraction
    linf: Fraction
    induced_11: Fraction | None = None


def norms(x: Union[Mat, Sequence[RatLike]]) -> Norms:
    """Sparsity and size measures of a vector or matrix.

    For a matrix, ``l0``/``l1``/``linf`` are entrywise and ``induced_11`` is
    the l1 -> l1 operator norm (maximum absolute column sum).
    """
    if isinstance(x, Mat):
        ent = x.entries
        induced = max((sum((abs(a) for a in x.col(j)), _ZERO) for j in range(x.cols)),
                      default=_ZERO)
    else:
        ent = vec(x)
        induced = None
    return Norms(l0(ent), sum((abs(a) for a in ent), _ZERO),
                 max((abs(a) for a in ent), default=_ZERO), induced)


def induced_inf(A: Mat) -> Fraction:
    """l-inf -> l-inf operator norm (maximum absolute row sum)."""
    return max((sum((abs(a) for a in A.row(i)), _ZERO) for i in range(A.rows)), default=_ZERO)


class SubsquareCheck(NamedTuple):
    ok: bool
    violation: tuple | None  # (rows, cols) of the first singular subsquare


def all_subsquares_nonsingular(A: Mat, max_order: int | None = None) -> SubsquareCheck:
    """Exhaustively test every k x k submatrix (k <= max_order) for det != 0.

    Enumeration is by increasing order, then lexicographic rows, then columns.
    """
    top = min(A.rows, A.cols)
    if max_order is None:
        max_order = top
    if max_order > top:
        raise ValueError(f"max_order {max_order} exceeds min(rows, cols) = {top}")
    for k in range(1, max_order + 1):
        for R in combinations(range(A.rows), k):
            for C in combinations(range(A.cols), k):
                if det(A.submatrix(R, C)) == 0:
                    return SubsquareCheck(False, (R, C))
    return SubsquareCheck(True, None)


def solve_matrix(A: Mat, B: Mat) -> Mat | None:
    """Some ``X`` with ``A X = B`` (column by column), or ``None`` if inconsistent."""
    cols = []
    for j in range(B.cols):
        x = particular_solution(A, B.col(j))
        if x is None:
            return None
        cols.append(x)
    return Mat.from_cols(cols, rows=A.cols)
