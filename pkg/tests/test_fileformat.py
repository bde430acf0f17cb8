import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sparsenull.fileformat import MatrixParseError, as_vector, parse, parse_token, render
from sparsenull.ratlinalg import Mat


def test_parse_basic():
    A = parse("rmat 2 2\n1 -2\n3/4 -5/10\n")
    assert A.to_rows() == [[1, -2], [Fraction(3, 4), Fraction(-1, 2)]]
    assert parse("rmat 0 3\n").shape == (0, 3)
    assert parse(render(Mat.zeros(2, 0))).shape == (2, 0)
    # tokens may wrap lines freely
    assert parse("rmat 2 2\n1 2 3\n4").to_rows() == [[1, 2], [3, 4]]


def test_render_is_canonical():
    text = render(parse("rmat 1 3\n2/4 -0 6/3\n"))
    assert text == "rmat 1 3\n1/2 0 2\n"


@pytest.mark.parametrize("text, line, col", [
    ("rmat 1 2\n1 1/0\n", 2, 3),
    ("rmat 1 2\n1 x\n", 2, 3),
    ("rmat 1 2\n1 1/-2\n", 2, 3),
    ("rmat 1 2\n1\n", 3, 1),
    ("rmat 1 1\n1 2\n", 2, 3),
    ("matrix 1 1\n1\n", 1, 1),
    ("", 1, 1),
    ("rmat 1 1 1\n1\n", 1, 1),
    ("rmat 1 1\n1.5\n", 2, 1),
])
def test_parse_errors_have_positions(text, line, col):
    with pytest.raises(MatrixParseError) as exc:
        parse(text, source="f.rmat")
    assert (exc.value.line, exc.value.column) == (line, col)
    assert str(exc.value).startswith(f"f.rmat:{line}:{col}:")


def test_parse_token():
    assert parse_token("-7/21") == Fraction(-1, 3)
    with pytest.raises(ValueError):
        parse_token("+1")


def test_round_trip_1000_random_matrices():
    rng = random.Random(0)
    for _ in range(1000):
        m, n = rng.randint(0, 5), rng.randint(0, 5)
        entries = tuple(Fraction(rng.randint(-50, 50), rng.randint(1, 12)) for _ in range(m * n))
        A = Mat(m, n, entries)
        text = render(A)
        assert parse(text) == A
        assert render(parse(text)) == text


@given(st.integers(0, 4), st.integers(0, 4), st.data())
def test_round_trip_property(m, n, data):
    vals = data.draw(st.lists(st.fractions(), min_size=m * n, max_size=m * n))
    A = Mat(m, n, tuple(vals))
    assert parse(render(A)) == A


def test_as_vector():
    assert as_vector(parse("rmat 2 1\n1\n2\n")) == (1, 2)
    assert as_vector(parse("rmat 1 2\n1 2\n")) == (1, 2)
    assert as_vector(parse("rmat 0 1\n")) == ()
    with pytest.raises(ValueError):
        as_vector(parse("rmat 2 2\n1 2 3 4\n"))
