"""Text matrix format.

::

    rmat <rows> <cols>
    <rows * cols whitespace-separated rationals: "p", "-p" or "p/q" with q > 0>

Rendering writes one matrix row per line with single spaces and canonical
tokens, so ``parse(render(M)) == M`` and ``render(parse(text))`` is stable.
"""
from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from .ratlinalg import Mat

_TOKEN = re.compile(r"^(-?\d+)(?:/(\d+))?$")


class MatrixParseError(ValueError):
    def __init__(self, message: str, line: int, column: int, source: str = "<input>"):
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.line = line
        self.column = column


def parse_token(tok: str) -> Fraction:
    m = _TOKEN.match(tok)
    if not m:
        raise ValueError(f"invalid rational token {tok!r}")
    num, den = m.group(1), m.group(2)
    if den is None:
        return Fraction(int(num))
    if int(den) == 0:
        raise ValueError(f"zero denominator in {tok!r}")
    return Fraction(int(num), int(den))


def parse(text: str, source: str = "<input>") -> Mat:
    lines = text.splitlines()
    if not lines:
        raise MatrixParseError("empty input; expected header 'rmat <rows> <cols>'", 1, 1, source)
    head = lines[0].split()
    if len(head) != 3 or head[0] != "rmat" or not all(h.isdigit() for h in head[1:]):
        raise MatrixParseError("expected header 'rmat <rows> <cols>'", 1, 1, source)
    rows, cols = int(head[1]), int(head[2])
    want = rows * cols
    values = []
    for lineno, line in enumerate(lines[1:], start=2):
        for m in re.finditer(r"\S+", line):
            col = m.start() + 1
            if len(values) == want:
                raise MatrixParseError(f"too many entries; expected {want}", lineno, col, source)
            try:
                values.append(parse_token(m.group()))
            except ValueError as e:
                raise MatrixParseError(str(e), lineno, col, source) from None
    if len(values) != want:
        raise MatrixParseError(f"expected {want} entries, found {len(values)}",
                               len(lines) + 1, 1, source)
    return Mat(rows, cols, tuple(values))


def render(M: Mat) -> str:
    out = [f"rmat {M.rows} {M.cols}"]
    for i in range(M.rows):
        out.append(" ".join(str(x) for x in M.row(i)))
    return "\n".join(out) + "\n"


def read_matrix(path) -> Mat:
    path = Path(path)
    return parse(path.read_text(), source=str(path))


def write_matrix(path, M: Mat) -> None:
    Path(path).write_text(render(M))


def as_vector(M: Mat) -> tuple:
    """Entries of a single-row or single-column matrix."""
    if M.cols == 1 or M.rows == 1:
        return M.entries
    if M.rows == 0 or M.cols == 0:
        return ()
    raise ValueError(f"expected a vector, got a {M.rows}x{M.cols} matrix")
