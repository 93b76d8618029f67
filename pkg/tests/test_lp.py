from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import margin_oracle, vertex_lp
from polyball import lp
from polyball.errors import DimensionError, ZeroComponentError

C = lp.LinConstraint


def test_optimize_segment():
    out = lp.lp_optimize((1,), [C((1,), 1), C((-1,), 0)])
    assert out.status == lp.OPTIMAL and out.value == 1 and out.point == (1,)


def test_optimize_infeasible():
    assert lp.lp_optimize((1,), [C((1,), -1), C((-1,), -2)]).status == lp.INFEASIBLE


def test_optimize_box():
    box = [C((1, 0), 1), C((0, 1), 1), C((-1, 0), 1), C((0, -1), 1)]
    out = lp.lp_optimize((1, 1), box)
    assert out.value == 2 and out.point == (1, 1)


def test_optimize_unbounded_and_empty():
    assert lp.lp_optimize((1, 0), [C((0, 1), 1)]).status == lp.UNBOUNDED
    assert lp.lp_optimize((1,), []).status == lp.UNBOUNDED
    assert lp.lp_optimize((0, 0), []).value == 0


def test_optimize_dimension_mismatch():
    with pytest.raises(DimensionError):
        lp.lp_optimize((1, 1), [C((1,), 1)])


small = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@st.composite
def bounded_lps(draw):
    d = draw(st.integers(1, 3))
    k = draw(st.integers(0, 4))
    cons = [(tuple(draw(small) for _ in range(d)), draw(small)) for _ in range(k)]
    # a box keeps every instance bounded so the vertex oracle applies
    for i in range(d):
        e = [0] * d
        e[i] = 1
        cons.append((tuple(e), F(3)))
        e[i] = -1
        cons.append((tuple(e), F(3)))
    obj = tuple(draw(small) for _ in range(d))
    return obj, cons


@settings(max_examples=200, deadline=None)
@given(bounded_lps())
def test_optimize_matches_vertex_oracle(case):
    obj, cons = case
    out = lp.lp_optimize(obj, [C(n, b) for n, b in cons])
    expected = vertex_lp(obj, cons)
    if expected is None:
        assert out.status == lp.INFEASIBLE
    else:
        assert out.status == lp.OPTIMAL
        assert out.value == expected[0]
        # the returned point satisfies every constraint exactly
        assert all(C(n, b).holds(out.point) for n, b in cons)


def test_margin_strict_example():
    cert = lp.strict_margin((3, 2), [(F(5, 2), F(5, 2)), (2, 3)])
    assert cert.margin > 0
    assert margin_oracle((3, 2), [(F(5, 2), F(5, 2)), (2, 3)]) == cert.margin


def test_margin_tie_is_exactly_zero():
    # (5/2,5/2) is the midpoint of the other two; oracle enumerates basic solutions
    others = [(3, 2), (2, 3)]
    cert = lp.strict_margin((F(5, 2), F(5, 2)), others)
    assert cert is not None and cert.margin == 0 and not cert.strict
    assert margin_oracle((F(5, 2), F(5, 2)), others) == 0


def test_margin_no_competitors():
    cert = lp.strict_margin((1, 0), [])
    assert cert.margin == 1 and cert.beta == (1, 0)


def test_margin_zero_target():
    with pytest.raises(ZeroComponentError):
        lp.strict_margin((0, 0), [(1, 0)])
    with pytest.raises(ZeroComponentError):
        lp.weak_feasible((0, 0), [(1, 0)])


def test_margin_certificate_inequalities():
    target, others = (3, 2), [(F(5, 2), F(5, 2)), (2, 3)]
    cert = lp.strict_margin(target, others)
    b = cert.beta
    assert sum(x * y for x, y in zip(b, target)) == 1
    for c in others:
        assert abs(sum(x * y for x, y in zip(b, c))) <= 1 - cert.margin


def test_weak_prop13_limit():
    comps = [(F(3, 2), F(1, 2)), (F(5, 4), F(3, 4)), (F(9, 8), F(7, 8)), (F(17, 16), F(15, 16))]
    cert = lp.weak_feasible((1, 1), comps)
    assert cert is not None
    # beta = (1/2, 1/2) is one valid certificate; check the returned one directly
    assert sum(cert.beta) == 1
    assert all(abs(cert.beta[0] * a + cert.beta[1] * b) <= 1 for a, b in comps)


def test_weak_interior_none():
    others = [(1, 2), (-5, 6), (7, -5)]
    assert lp.weak_feasible((0, 1), others) is None
    # oracle: (0,1) = 5/16 (1,2) + 1/16 (-5,6), coefficients sum to 3/8 < 1
    assert tuple(F(5, 16) * a + F(1, 16) * b for a, b in zip((1, 2), (-5, 6))) == (0, 1)
    assert margin_oracle((0, 1), others) is None


def test_weak_no_competitors():
    assert lp.weak_feasible((1, 0), []).margin == 1


def _pairs(reps):
    cons = []
    for r in reps:
        cons.append(C(tuple(r), F(1)))
        cons.append(C(tuple(-x for x in r), F(1)))
    return cons


def test_redundancy_box():
    cons = _pairs([(1, 0), (0, 1)])
    assert all(lp.redundancy_check(i, cons).irredundant for i in range(4))


def test_redundancy_midpoint_pair():
    cons = _pairs([(3, 2), (F(5, 2), F(5, 2)), (2, 3)])
    flags = [lp.redundancy_check(i, cons).irredundant for i in range(6)]
    assert flags == [True, True, False, False, True, True]


def test_redundancy_hexagon():
    cons = _pairs([(1, 0), (0, 1), (1, 1)])
    assert all(lp.redundancy_check(i, cons).irredundant for i in range(6))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(small, small), min_size=1, max_size=4), st.tuples(small, small))
def test_strict_margin_matches_oracle(others, target):
    if target == (0, 0):
        return
    cert = lp.strict_margin(target, others)
    expected = margin_oracle(target, others)
    if expected is None:
        assert cert is None
    else:
        # the oracle's beta box is 1000; only trust it when the LP beta is inside
        assert cert is not None
        if all(abs(x) < 1000 for x in cert.beta):
            assert cert.margin == expected
