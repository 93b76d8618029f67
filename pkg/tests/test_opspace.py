import itertools
from fractions import Fraction as F

import pytest

from polyball import lp
from polyball import ratlin as rl
from polyball.errors import DimensionError, InputError, NotABallError, NotExtremeError
from polyball.opspace import (
    analyze_operator_space,
    operator_norm,
    operator_space_basis,
    validate_extreme_set,
)
from polyball.polytope import enumerate_vertices, unit_ball_hrep

LASTEX = [(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)]
HEXAGON = [(1, 0), (0, 1), (1, 1)]


def l1_ext(m):
    return [tuple(int(i == j) for j in range(m)) for i in range(m)]


def test_w_basis_lastex():
    assert operator_space_basis(LASTEX).vectors == ((1, 0, 1, 0), (0, 1, 1, 0), (0, 0, 0, 1))


def test_lastex_counts():
    rep = analyze_operator_space(LASTEX, 2)
    assert rep.extreme_contractions == 144 and rep.facet_count == 16
    assert rep.facet_formula == "8*n" and rep.extreme_formula == "12^n"
    assert rep.cross_checked
    assert analyze_operator_space(LASTEX, 1).extreme_contractions == 12


def test_hexagon_counts():
    rep = analyze_operator_space(HEXAGON, 2)
    assert (rep.extreme_contractions, rep.facet_count) == (36, 12)


@pytest.mark.parametrize("m,n", list(itertools.product((1, 2, 3), repeat=2)))
def test_l1_to_linf(m, n):
    rep = analyze_operator_space(l1_ext(m), n)
    assert rep.extreme_contractions == 2 ** (m * n)
    assert rep.facet_count == 2 * m * n


def test_validate_errors():
    with pytest.raises(NotABallError):
        validate_extreme_set([(1, 0), (2, 0)])
    with pytest.raises(NotExtremeError) as exc:
        validate_extreme_set([(1, 0), (0, 1), (F(1, 2), F(1, 2))])
    assert exc.value.index == 2
    with pytest.raises(NotExtremeError):
        validate_extreme_set([(1, 0), (0, 1), (-1, 0)])
    with pytest.raises(InputError):
        analyze_operator_space(HEXAGON, 0)


def linf_ball_support(points, row):
    # oracle: sup of |<row, x>| over the absolute convex hull via LP
    m = len(row)
    cons = []
    # x in aconv(points) <=> x = sum (p_j - q_j) v_j, p, q >= 0, sum <= 1
    k = len(points)
    one = F(1)
    nvar = m + 2 * k
    for i in range(m):
        eq = [F(0)] * nvar
        eq[i] = one
        for j, v in enumerate(points):
            eq[m + j] = -F(v[i])
            eq[m + k + j] = F(v[i])
        cons.append(lp.LinConstraint(tuple(eq), F(0)))
        cons.append(lp.LinConstraint(tuple(-x for x in eq), F(0)))
    cons.append(lp.LinConstraint((F(0),) * m + (one,) * (2 * k), one))
    for j in range(2 * k):
        e = [F(0)] * nvar
        e[m + j] = -one
        cons.append(lp.LinConstraint(tuple(e), F(0)))
    obj = tuple(row) + (F(0),) * (2 * k)
    return lp.lp_optimize(obj, cons).value


def test_operator_norm_vs_lp_oracle():
    A = [[1, -2, F(1, 2)], [0, 3, -1]]
    expected = max(linf_ball_support(LASTEX, row) for row in A)
    assert operator_norm(A, LASTEX) == expected
    with pytest.raises(DimensionError):
        operator_norm([[1, 2]], LASTEX)


def test_extreme_contractions_have_norm_one():
    # every extreme contraction maps the v_i to vertices of B_W, coordinatewise
    rep = analyze_operator_space(HEXAGON, 2)
    for rows in itertools.product(rep.w_vertices, repeat=2):
        assert operator_norm(rows, HEXAGON) == 1
    assert len(enumerate_vertices(unit_ball_hrep(rep.w_basis))) == rep.ext_w
    assert all(rl.max_abs(rl.matvec([v], p)) <= 1 for v in rep.w_vertices for p in HEXAGON)
