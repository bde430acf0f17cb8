"""Problem instances.  Every constructor validates its defining invariant."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..ratlinalg import Mat, in_col_span, l0, rank, rat, same_column_space, vec


class InstanceError(ValueError):
    pass


@dataclass(frozen=True)
class EdrInstance:
    D: Mat
    s: tuple

    def __post_init__(self):
        object.__setattr__(self, "s", vec(self.s))
        if len(self.s) != self.D.rows:
            raise InstanceError("target length differs from dictionary row count")
        if not in_col_span(self.D, self.s):
            raise InstanceError("target is not in the column span of the dictionary")

    def objective(self, v) -> int:
        return l0(v)

    def is_solution(self, v) -> bool:
        return len(v) == self.D.cols and self.D @ v == self.s


@dataclass(frozen=True)
class MuInstance:
    A: Mat
    y: tuple

    def __post_init__(self):
        object.__setattr__(self, "y", vec(self.y))
        if len(self.y) != self.A.rows:
            raise InstanceError("y length differs from row count of A")

    def residual(self, x) -> tuple:
        return tuple(a - b for a, b in zip(self.y, self.A @ x))

    def objective(self, x) -> int:
        return l0(self.residual(x))

    def is_solution(self, x) -> bool:
        return len(x) == self.A.cols


@dataclass(frozen=True)
class SnsInstance:
    A: Mat

    def is_solution(self, N: Mat) -> bool:
        """Full-null-matrix test: ``A N = 0`` and rank(N) = corank(A) = #col(N)."""
        if N.rows != self.A.cols:
            return False
        c = self.A.cols - rank(self.A)
        return N.cols == c and (self.A @ N).is_zero() and rank(N) == c

    def objective(self, N: Mat) -> int:
        return N.nnz()


@dataclass(frozen=True)
class MsInstance:
    B: Mat

    def __post_init__(self):
        if rank(self.B) != self.B.cols:
            raise InstanceError(
                f"matrix sparsification needs full column rank; rank {rank(self.B)} < {self.B.cols}")

    def is_solution(self, N: Mat) -> bool:
        """Column equivalence: same shape, full rank and the same column span."""
        return N.shape == self.B.shape and same_column_space(N, self.B) and rank(N) == N.cols

    def objective(self, N: Mat) -> int:
        return N.nnz()


@dataclass(frozen=True)
class SivInstance:
    """Sparsest independent vector: ``A = (C | B)`` with B a column suffix of A."""

    A: Mat
    B: Mat

    def __post_init__(self):
        if self.A.rows != self.B.rows:
            raise InstanceError("A and B row counts differ")
        if self.B.cols >= self.A.cols:
            raise InstanceError("A must have at least one column outside B")
        if rank(self.A) != self.A.cols:
            raise InstanceError("A must have full column rank")
        k = self.A.cols - self.B.cols
        if self.A.submatrix(None, range(k, self.A.cols)) != self.B:
            raise InstanceError("B must be the rightmost columns of A")

    @property
    def prefix(self) -> int:
        """Number of columns of A that are not in B."""
        return self.A.cols - self.B.cols

    def is_solution(self, a) -> bool:
        return (len(a) == self.A.rows and in_col_span(self.A, a)
                and not in_col_span(self.B, a))

    def objective(self, a) -> int:
        return l0(a)


@dataclass(frozen=True)
class RelaxedInstance:
    """Relaxed variants (RDR, RMU, RSNS, RMS): data only, no solver semantics.

    ``norm_tag`` names the norm bounding the perturbation, which the
    underlying problem statements leave unspecified.
    """

    kind: str
    base: object
    delta: Fraction
    norm_tag: str = "l2"

    KINDS = ("RDR", "RMU", "RSNS", "RMS")
    _BASES = {"RDR": EdrInstance, "RMU": MuInstance, "RSNS": SnsInstance, "RMS": MsInstance}

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise InstanceError(f"unknown relaxed problem {self.kind!r}")
        if not isinstance(self.base, self._BASES[self.kind]):
            raise InstanceError(f"{self.kind} wraps a {self._BASES[self.kind].__name__}")
        object.__setattr__(self, "delta", rat(self.delta))
        if self.delta < 0:
            raise InstanceError("delta must be nonnegative")

