import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyball import ratlin as rl
from polyball.errors import DimensionError, InputError

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(st.lists(rationals, min_size=n, max_size=n),
                               min_size=m, max_size=m)))


def naive_rank(mat):
    # textbook Gauss-Jordan over Fractions, the oracle for Bareiss
    rows = [list(r) for r in mat]
    rank = 0
    for col in range(len(rows[0])):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def test_parse_forms():
    assert rl.parse_rational("3/6") == F(1, 2)
    assert rl.parse_rational("-4") == F(-4)
    assert rl.parse_rational(" 7 / 2 ") == F(7, 2)
    assert rl.parse_rational(5) == 5


@pytest.mark.parametrize("bad", ["1.5", "1/0", "abc", "", 1.5, True, None])
def test_parse_rejects(bad):
    with pytest.raises(InputError):
        rl.parse_rational(bad)


def test_format_canonical():
    assert rl.format_rational(F(6, -4)) == "-3/2"
    assert rl.format_rational(F(8, 4)) == "2"


@given(rationals)
def test_format_parse_roundtrip(q):
    s = rl.format_rational(q)
    assert rl.parse_rational(s) == q
    assert rl.format_rational(rl.parse_rational(s)) == s


def test_rank_examples():
    assert rl.rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert rl.rank([[1, 0, 1], [0, 1, 1], [1, 1, 2]]) == 2
    assert rl.rank([[1, 0, 1, 0], [0, 1, 1, 0], [0, 0, 0, 1]]) == 3


def test_solve_examples():
    assert rl.solve_square([[1, 0], [0, 1]], [2, 3]) == (2, 3)
    assert rl.solve_square([[1, 1], [1, -1]], [1, 1]) == (1, 0)
    assert rl.solve_square([[1, 1], [2, 2]], [1, 3]) is None


def test_solve_dimension_errors():
    with pytest.raises(DimensionError):
        rl.solve_square([[1, 2, 3], [4, 5, 6]], [1, 2])
    with pytest.raises(DimensionError):
        rl.solve_square([[1, 0], [0, 1]], [1, 2, 3])


def test_ragged_matrix():
    with pytest.raises(DimensionError):
        rl.as_matrix([[1, 2], [3]])


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_transpose(mat):
    assert rl.rank(mat) == rl.rank(rl.transpose(rl.as_matrix(mat)))


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_matches_naive(mat):
    assert rl.rank(mat) == naive_rank(rl.as_matrix(mat))


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(rationals, min_size=n, max_size=n))))
def test_solve_roundtrip(case):
    mat, x = case
    mat = rl.as_matrix(mat)
    sol = rl.solve_square(mat, rl.matvec(mat, x))
    if rl.rank(mat) < len(mat):
        assert sol is None
    else:
        assert sol == tuple(x)


@given(st.lists(rationals, min_size=3, max_size=3), st.lists(rationals, min_size=3, max_size=3))
def test_canonical_form(u, v):
    for q in (rl.dot(u, v), *rl.add(u, v), *rl.scale(F(-3, 4), u)):
        assert q.denominator > 0
        assert math.gcd(q.numerator, q.denominator) == 1
