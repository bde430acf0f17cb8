"""Exact-arithmetic tools for sparse null space, matrix sparsification,
min unsatisfy and exact dictionary representation."""

from .ratlinalg import Mat, Rat, rat, vec

__all__ = ["Mat", "Rat", "rat", "vec"]
__version__ = "0.1.0"
