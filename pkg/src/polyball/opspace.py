"""Extreme contractions of L(X, l_inf^n) for a polyhedral X.

If ``Ext(B_X) = {+-v_1, ..., +-v_r}`` then evaluating an operator at the
``v_i`` identifies L(X, l_inf^n) isometrically with the n-fold l_inf sum of
``W = span(w_1, ..., w_m)`` in l_inf^r, where the components of the ``w_k``
are exactly the ``v_i``.  Facets and extreme points of the operator ball
are then counted from ``W``.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import lp
from . import ratlin as rl
from .components import Basis, canonical, star_satisfiers
from .errors import DimensionError, InconsistencyError, InputError, NotABallError, NotExtremeError
from .polytope import enumerate_vertices, unit_ball_hrep
from .spaces import direct_sum_basis

CROSS_CHECK_MAX_DIM = 6


@dataclass(frozen=True)
class ExtremeSet:
    """One representative per +- pair of extreme points of B_X."""

    points: tuple

    @property
    def m(self):
        return len(self.points[0])

    @property
    def r(self):
        return len(self.points)


def _in_hull_of_others(points, i):
    # v_i = sum_j (lp_j - ln_j) v_j with lp, ln >= 0 and sum(lp + ln) <= 1
    target = points[i]
    others = [p for j, p in enumerate(points) if j != i]
    k = len(others)
    m = len(target)
    nvar = 2 * k
    one = Fraction(1)
    cons = [lp.LinConstraint((one,) * nvar, one)]
    for j in range(nvar):
        cons.append(lp.LinConstraint(tuple(-one if jj == j else 0 for jj in range(nvar)), Fraction(0)))
    for coord in range(m):
        row = tuple(p[coord] for p in others) + tuple(-p[coord] for p in others)
        cons.append(lp.LinConstraint(row, target[coord]))
        cons.append(lp.LinConstraint(rl.neg(row), -target[coord]))
    return lp.lp_optimize((0,) * nvar, cons).status == lp.OPTIMAL


def validate_extreme_set(points):
    """Check the points span and each lies outside the hull of +- the others."""
    pts = rl.as_matrix(points)
    m = len(pts[0])
    if rl.rank(pts) < m:
        raise NotABallError(
            f"points span dimension {rl.rank(pts)} < {m}; their hull is not a unit ball")
    seen = {}
    for i, p in enumerate(pts):
        if rl.is_zero(p):
            raise NotExtremeError(f"point {i} is zero", index=i)
        key = canonical(p)
        if key in seen:
            raise NotExtremeError(
                f"point {i} {_fmt(p)} duplicates point {seen[key]} up to sign", index=i)
        seen[key] = i
    for i, p in enumerate(pts):
        if len(pts) > 1 and _in_hull_of_others(pts, i):
            raise NotExtremeError(
                f"point {i} {_fmt(p)} lies in the absolute convex hull of the others", index=i)
    return ExtremeSet(pts)


def _fmt(v):
    return "(" + ", ".join(rl.format_rational(x) for x in v) + ")"


def operator_space_basis(ext):
    """The m x r basis of W whose i-th component is ``v_i``."""
    if not isinstance(ext, ExtremeSet):
        ext = validate_extreme_set(ext)
    return Basis(rl.transpose(ext.points))


@dataclass(frozen=True)
class OpSpaceReport:
    m: int
    n: int
    r: int
    w_basis: Basis
    strict_count: int
    ext_w: int
    w_vertices: tuple
    cross_checked: bool

    @property
    def facet_count(self):
        return 2 * self.strict_count * self.n

    @property
    def extreme_contractions(self):
        return self.ext_w ** self.n

    @property
    def facet_formula(self):
        return f"{2 * self.strict_count}*n"

    @property
    def extreme_formula(self):
        return f"{self.ext_w}^n"


def analyze_operator_space(ext, n, cross_check=None):
    """Facet and extreme-contraction counts of the unit ball of L(X, l_inf^n).

    When ``cross_check`` is true (default: small problems with ``n <= 2``)
    the n-fold direct sum is also built explicitly and its counts compared.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError(f"n must be a positive integer, got {n!r}")
    if not isinstance(ext, ExtremeSet):
        ext = validate_extreme_set(ext)
    w = operator_space_basis(ext)
    q = star_satisfiers(w).strict_count
    verts = enumerate_vertices(unit_ball_hrep(w))
    report = OpSpaceReport(ext.m, n, ext.r, w, q, len(verts), verts.vertices, False)
    if cross_check is None:
        cross_check = n <= 2 and ext.m * n <= CROSS_CHECK_MAX_DIM
    if cross_check:
        big = direct_sum_basis([w] * n)
        big_q = star_satisfiers(big).strict_count
        big_ext = len(enumerate_vertices(unit_ball_hrep(big)))
        if big_q != q * n or big_ext != report.extreme_contractions:
            raise InconsistencyError(
                f"direct-sum cross-check failed: strict {big_q} vs {q * n}, "
                f"extreme {big_ext} vs {report.extreme_contractions}")
        report = OpSpaceReport(ext.m, n, ext.r, w, q, len(verts), verts.vertices, True)
    return report


def operator_norm(A, ext):
    """``||A|| = max_i ||A v_i||_inf`` for ``A: X -> l_inf^k``."""
    A = rl.as_matrix(A)
    if not isinstance(ext, ExtremeSet):
        ext = validate_extreme_set(ext)
    if len(A[0]) != ext.m:
        raise DimensionError(f"operator has {len(A[0])} columns, X has dimension {ext.m}")
    return max(rl.max_abs(rl.matvec(A, v)) for v in ext.points)
