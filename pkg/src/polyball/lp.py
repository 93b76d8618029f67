"""Exact linear programming over the rationals.

A dense two-phase tableau simplex with Bland's rule, plus the three LPs the
rest of the package is built on: the strict-margin LP, the weak feasibility
LP and the constraint redundancy LP.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import ratlin as rl
from .errors import DimensionError, ZeroComponentError

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LinConstraint:
    """``<normal, x> <= bound``."""

    normal: tuple
    bound: Fraction

    def value(self, x):
        return rl.dot(self.normal, x)

    def holds(self, x):
        return self.value(x) <= self.bound


@dataclass(frozen=True)
class LpOutcome:
    status: str
    value: Optional[Fraction] = None
    point: Optional[tuple] = None


@dataclass(frozen=True)
class StarCertificate:
    """A coefficient vector ``beta`` with ``<beta, target> = 1``.

    ``margin`` is the largest ``t`` such that every competitor ``c`` obeys
    ``|<beta, c>| <= 1 - t``.
    """

    beta: tuple
    margin: Fraction
    target: tuple

    @property
    def strict(self):
        return self.margin > 0


@dataclass(frozen=True)
class RedundancyResult:
    irredundant: bool
    witness: tuple
    value: Fraction


def _int_row(values):
    """Scale a rational row by a positive factor to coprime integers."""
    values = [Fraction(x) for x in values]
    lcm = math.lcm(*(x.denominator for x in values))
    row = [x.numerator * (lcm // x.denominator) for x in values]
    return _reduce(row)


def _reduce(row):
    g = math.gcd(*row)
    return [x // g for x in row] if g > 1 else row


def _pivot(rows, obj, basis, p, j):
    # Rows are integer vectors known only up to a positive factor, so no
    # division is needed; a positive pivot keeps every sign meaningful.
    row_p = rows[p]
    piv = row_p[j]
    if piv < 0:
        rows[p] = row_p = [-x for x in row_p]
        piv = -piv
    for i, row in enumerate(rows):
        f = row[j]
        if i != p and f != 0:
            new = [piv * a - f * b for a, b in zip(row, row_p)]
            g = math.gcd(*new)
            rows[i] = [x // g for x in new] if g > 1 else new
    f = obj[j]
    if f != 0:
        new = [piv * a - f * b for a, b in zip(obj, row_p)]
        g = math.gcd(*new)
        obj[:] = [x // g for x in new] if g > 1 else new
    basis[p] = j


def _objective_row(rows, basis, cost):
    # reduced costs c_j - sum_i c_b(i) row_i[j] / row_i[b(i)], scaled to integers
    cost = _int_row(cost)
    used = [(i, cost[b]) for i, b in enumerate(basis) if cost[b] != 0]
    lcm = math.lcm(*(rows[i][basis[i]] for i, _ in used)) if used else 1
    obj = [c * lcm for c in cost] + [0]
    for i, cb in used:
        row = rows[i]
        f = cb * (lcm // row[basis[i]])
        obj = [o - f * a for o, a in zip(obj, row)]
    return _reduce(obj)


def _run_simplex(rows, basis, cost, allowed):
    """Maximise ``cost`` from a feasible basis.  Returns OPTIMAL or UNBOUNDED."""
    obj = _objective_row(rows, basis, cost)
    rhs = len(cost)
    while True:
        # Bland: lowest-index improving column enters
        j = next((j for j in allowed if obj[j] > 0), None)
        if j is None:
            return OPTIMAL
        best = None
        for i, row in enumerate(rows):
            a = row[j]
            if a > 0:
                if best is None:
                    best = i
                    continue
                bn, bd = rows[best][rhs], rows[best][j]
                # compare row[rhs]/a with bn/bd, ties to the lower basic index
                lhs, rhs_ = row[rhs] * bd, bn * a
                if lhs < rhs_ or (lhs == rhs_ and basis[i] < basis[best]):
                    best = i
        if best is None:
            return UNBOUNDED
        _pivot(rows, obj, basis, best, j)


def _basic_values(rows, basis, width):
    values = [Fraction(0)] * width
    for row, b in zip(rows, basis):
        values[b] = Fraction(row[width], row[b])
    return values


def lp_optimize(objective, constraints):
    """Maximise ``<objective, x>`` over free ``x`` subject to ``constraints``."""
    n = len(objective)
    for con in constraints:
        if len(con.normal) != n:
            raise DimensionError(
                f"constraint of dim {len(con.normal)} against objective of dim {n}")
    objective = tuple(Fraction(c) for c in objective)
    if not constraints:
        if rl.is_zero(objective):
            return LpOutcome(OPTIMAL, Fraction(0), tuple(Fraction(0) for _ in range(n)))
        return LpOutcome(UNBOUNDED)

    k = len(constraints)
    # columns: u (n), v (n), slack (k), artificial (one per negative rhs row)
    n_art = sum(1 for con in constraints if con.bound < 0)
    n_real = 2 * n + k
    width = n_real + n_art
    rows = []
    basis = []
    art_col = n_real
    for i, con in enumerate(constraints):
        coeffs = [Fraction(a) for a in con.normal]
        bound = Fraction(con.bound)
        scale = math.lcm(bound.denominator, *(a.denominator for a in coeffs))
        if bound < 0:
            scale = -scale
        ints = [int(a * scale) for a in coeffs]
        row = [0] * (width + 1)
        row[:n] = ints
        row[n:2 * n] = [-a for a in ints]
        row[2 * n + i] = scale
        row[width] = int(bound * scale)
        if scale < 0:
            # negative rhs: flipped row, artificial starts basic
            row[art_col] = 1
            basis.append(art_col)
            art_col += 1
        else:
            basis.append(2 * n + i)
        rows.append(_reduce(row))

    real_cols = range(n_real)
    if n_art:
        phase1 = [0] * n_real + [-1] * n_art
        _run_simplex(rows, basis, phase1, range(width))
        values = _basic_values(rows, basis, width)
        if any(values[j] > 0 for j in range(n_real, width)):
            return LpOutcome(INFEASIBLE)
        # drive zero-level artificials out of the basis, dropping dependent rows
        i = 0
        while i < len(rows):
            if basis[i] >= n_real:
                j = next((j for j in real_cols if rows[i][j] != 0), None)
                if j is None:
                    del rows[i]
                    del basis[i]
                    continue
                dummy = [0] * (width + 1)
                _pivot(rows, dummy, basis, i, j)
            i += 1

    cost = [0] * width
    for j, c in enumerate(objective):
        cost[j] = c
        cost[n + j] = -c
    if _run_simplex(rows, basis, cost, real_cols) == UNBOUNDED:
        return LpOutcome(UNBOUNDED)
    values = _basic_values(rows, basis, width)
    point = tuple(values[j] - values[n + j] for j in range(n))
    return LpOutcome(OPTIMAL, rl.dot(objective, point), point)


def _lone_target_beta(target):
    norm2 = rl.dot(target, target)
    return tuple(x / norm2 for x in target)


def _check_target(target, others):
    target = tuple(Fraction(x) for x in target)
    if rl.is_zero(target):
        raise ZeroComponentError("target component is zero")
    others = [tuple(Fraction(x) for x in c) for c in others]
    for c in others:
        if len(c) != len(target):
            raise DimensionError("competitor dimension differs from target")
    return target, others


def strict_margin(target, others):
    """Maximise ``t`` subject to ``<beta, target> = 1`` and ``|<beta, c>| <= 1 - t``.

    Returns a certificate whose margin is ``t*`` (``> 0`` when the target
    strictly dominates, ``0`` when it only ties), or None when the target
    can never reach the competitors' level.  With no competitors the margin
    is capped at 1.
    """
    target, others = _check_target(target, others)
    if not others:
        return StarCertificate(_lone_target_beta(target), Fraction(1), target)
    m = len(target)
    one = Fraction(1)
    cons = [LinConstraint(target + (0,), one), LinConstraint(rl.neg(target) + (0,), -one)]
    for c in others:
        cons.append(LinConstraint(c + (one,), one))
        cons.append(LinConstraint(rl.neg(c) + (one,), one))
    cons.append(LinConstraint((0,) * m + (-one,), Fraction(0)))
    out = lp_optimize((0,) * m + (one,), cons)
    if out.status != OPTIMAL:
        return None
    return StarCertificate(out.point[:m], out.value, target)


def weak_feasible(target, others):
    """Find ``beta`` with ``<beta, target> = 1`` and ``|<beta, c>| <= 1``."""
    target, others = _check_target(target, others)
    if not others:
        return StarCertificate(_lone_target_beta(target), Fraction(1), target)
    one = Fraction(1)
    cons = [LinConstraint(target, one), LinConstraint(rl.neg(target), -one)]
    for c in others:
        cons.append(LinConstraint(c, one))
        cons.append(LinConstraint(rl.neg(c), one))
    out = lp_optimize((0,) * len(target), cons)
    if out.status != OPTIMAL:
        return None
    return StarCertificate(out.point, Fraction(0), target)


def redundancy_check(i, constraints):
    """Decide whether constraint ``i`` is implied by the others.

    Maximises ``<normal_i, x>`` over the remaining constraints, capped at
    ``bound_i + 1`` so that the witness is always a finite point.  The
    constraint is irredundant iff the optimum exceeds ``bound_i``.
    """
    con = constraints[i]
    rest = [c for j, c in enumerate(constraints) if j != i]
    rest.append(LinConstraint(con.normal, con.bound + 1))
    out = lp_optimize(con.normal, rest)
    if out.status != OPTIMAL:
        raise ValueError(f"redundancy LP is {out.status}; system must contain the origin")
    return RedundancyResult(out.value > con.bound, out.point, out.value)
