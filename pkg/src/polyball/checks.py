"""Cross-checks between independent routes to the same geometric quantity.

Each check returns a :class:`CheckResult`; :func:`verify_space` and
:func:`verify_operator_space` bundle them for the ``verify`` subcommand.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from . import lp
from . import ratlin as rl
from .components import (
    STRICT,
    as_component_set,
    star_satisfiers,
    weak_star_satisfiers,
)
from .polytope import (
    enumerate_vertices,
    facet_classes,
    is_extreme,
    is_maximal_star_constant,
    star_set_margin,
    unit_ball_hrep,
)
from .spaces import direct_sum_basis, direct_sum_extremes, random_beta

HEXAGON = ((1, 0, 1), (0, 1, 1))
EXHAUSTIVE_MAX_DIM = 3
EXHAUSTIVE_MAX_CLASSES = 6


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def check_facets_vs_strict(obj):
    """Facet count from LP redundancy equals twice the strict count, class by class."""
    cs = as_component_set(obj)
    report = star_satisfiers(cs)
    P = unit_ball_hrep(cs)
    facets = facet_classes(P)
    strict_reps = {c.representative for c in report.strict_classes}
    facet_reps = {f.cls.representative for f in facets if f.is_facet}
    count = 2 * len(facet_reps)
    ok = facet_reps == strict_reps and count == 2 * report.strict_count
    return CheckResult("facets_eq_2r", ok, f"facets={count} r={report.strict_count}")


def star_constants(P):
    """Every star-set (as a signed class set) with one star-constant each.

    Depth-first over signed class sets in increasing index order; a branch is
    cut as soon as the face it describes is empty.
    """
    found = []
    k = len(P.classes)

    def walk(signed, start):
        for idx in range(start, k):
            for s in (1, -1):
                trial = dict(signed)
                trial[idx] = s
                res = star_set_margin(P, trial)
                if res is None or res[0] < 0:
                    continue
                if res[0] > 0:
                    found.append((tuple(sorted(trial.items())), res[1]))
                walk(trial, idx + 1)

    walk({}, 0)
    return found


def check_vertices_vs_maximal(obj):
    """Vertex enumeration, the rank criterion and the LP extension test agree.

    Small inputs are searched exhaustively over all star-sets; larger ones
    test the vertices plus midpoints of vertex pairs that stay on the sphere.
    """
    cs = as_component_set(obj)
    P = unit_ball_hrep(cs)
    verts = set(enumerate_vertices(P).vertices)
    problems = []
    for v in verts:
        if not is_extreme(P, v):
            problems.append(f"vertex {v} fails rank test")
        if not is_maximal_star_constant(P, v):
            problems.append(f"vertex {v} fails LP maximality test")
    if any(rl.neg(v) not in verts for v in verts):
        problems.append("vertex set not symmetric")

    if P.dim <= EXHAUSTIVE_MAX_DIM and len(P.classes) <= EXHAUSTIVE_MAX_CLASSES:
        mode = "exhaustive"
        candidates = [beta for _, beta in star_constants(P)]
    else:
        mode = "midpoints"
        ordered = sorted(verts)
        candidates = []
        for i, a in enumerate(ordered):
            for b in ordered[i + 1:]:
                mid = tuple((x + y) / 2 for x, y in zip(a, b))
                if P.norm(mid) == 1:
                    candidates.append(mid)
    maximal = set()
    for beta in candidates:
        by_rank = is_extreme(P, beta)
        by_lp = is_maximal_star_constant(P, beta)
        if by_rank != by_lp:
            problems.append(f"rank={by_rank} but lp={by_lp} at {beta}")
        if by_rank:
            maximal.add(beta)
    if mode == "exhaustive" and maximal != verts:
        problems.append(f"maximal star-constants {len(maximal)} != vertices {len(verts)}")
    if mode == "midpoints" and maximal - verts:
        problems.append("a midpoint passed as extreme")
    return CheckResult(
        "vertices_eq_maximal_star_constants", not problems,
        "; ".join(problems) or f"{len(verts)} vertices, {len(candidates)} {mode} candidates")


def check_weak_count(obj):
    """|P| >= m, both weak routes agree, and strict implies weak."""
    cs = as_component_set(obj)
    strict_report = star_satisfiers(cs)
    weak_report = weak_star_satisfiers(cs)
    weak_a = {c.representative for c in strict_report.weak_classes}
    weak_b = {c.representative for c in weak_report.weak_classes}
    strict = {c.representative for c in strict_report.strict_classes}
    ok = weak_report.weak_count >= cs.m and weak_a == weak_b and strict <= weak_b
    detail = f"|P|={weak_report.weak_count} m={cs.m}"
    if weak_a != weak_b:
        detail += " (weak routes disagree)"
    return CheckResult("weak_count_ge_m", ok, detail)


def check_norm_attainment(obj, samples=25, seed=0):
    """The norm is attained on a weak class for random coefficient vectors."""
    cs = as_component_set(obj)
    weak = [c.representative for c in weak_star_satisfiers(cs).weak_classes]
    rng = random.Random(seed)
    for _ in range(samples):
        beta = random_beta(rng, cs.m)
        full = rl.max_abs(rl.dot(beta, c) for c in cs.components)
        if full != rl.max_abs(rl.dot(beta, c) for c in weak):
            return CheckResult("norm_attained_on_weak", False, f"beta={beta}")
    return CheckResult("norm_attained_on_weak", True, f"{samples} samples")


def _basis_of(obj):
    # direct sums need a basis; a component set's transpose is one
    cs = as_component_set(obj)
    return rl.transpose(cs.components)


def check_direct_sum_product(obj, partner=HEXAGON):
    """|Ext(A + B)| = |Ext(A)| * |Ext(B)| for the l_inf sum."""
    a = _basis_of(obj)
    ext_a = enumerate_vertices(unit_ball_hrep(a))
    ext_b = enumerate_vertices(unit_ball_hrep(partner))
    direct = len(enumerate_vertices(unit_ball_hrep(direct_sum_basis([a, partner]))))
    product = direct_sum_extremes([ext_a, ext_b]).count
    return CheckResult("direct_sum_extreme_product", direct == product,
                       f"{direct} vs {len(ext_a)}*{len(ext_b)}={product}")


def check_doubling(obj):
    """strict_count(A + A) = 2 strict_count(A)."""
    a = _basis_of(obj)
    r = star_satisfiers(a).strict_count
    r2 = star_satisfiers(direct_sum_basis([a, a])).strict_count
    return CheckResult("direct_sum_doubles_r", r2 == 2 * r, f"r(A+A)={r2} r(A)={r}")


def check_facet_witness(obj):
    """Each facet class admits beta hitting it at 1 and every other class below 1."""
    cs = as_component_set(obj)
    P = unit_ball_hrep(cs)
    for f in facet_classes(P):
        if not f.is_facet:
            continue
        rep = f.cls.representative
        top = rl.dot(f.witness, rep)
        beta = rl.scale(1 / top, f.witness)
        others = [c.representative for c in P.classes if c is not f.cls]
        if rl.dot(beta, rep) != 1 or any(abs(rl.dot(beta, c)) >= 1 for c in others):
            return CheckResult("facet_interior_witness", False, f"class {rep}")
    return CheckResult("facet_interior_witness", True)


def check_strict_vs_redundancy(obj):
    """Positive strict margin iff the class constraint is irredundant."""
    cs = as_component_set(obj)
    report = star_satisfiers(cs)
    P = unit_ball_hrep(cs)
    verdict = {c.representative: v for c, v in zip(report.classes, report.verdicts)}
    for k, cls in enumerate(P.classes):
        irr = lp.redundancy_check(2 * k, P.constraints).irredundant
        if irr != (verdict[cls.representative] == STRICT):
            return CheckResult("strict_iff_irredundant", False, f"class {cls.representative}")
    return CheckResult("strict_iff_irredundant", True)


SPACE_CHECKS = (
    check_facets_vs_strict,
    check_strict_vs_redundancy,
    check_vertices_vs_maximal,
    check_weak_count,
    check_norm_attainment,
    check_direct_sum_product,
    check_doubling,
    check_facet_witness,
)


def verify_space(obj):
    return [check(obj) for check in SPACE_CHECKS]


def verify_operator_space(ext, n):
    from .opspace import analyze_operator_space, operator_space_basis

    w = operator_space_basis(ext)
    results = verify_space(w)
    report = analyze_operator_space(ext, n, cross_check=False)
    big_n = min(n, 2)
    big = direct_sum_basis([w] * big_n)
    direct = len(enumerate_vertices(unit_ball_hrep(big)))
    results.append(CheckResult(
        "opspace_extremes_eq_direct_sum", direct == report.ext_w ** big_n,
        f"n={big_n}: {direct} vs {report.ext_w}^{big_n}"))
    results.append(CheckResult(
        "opspace_facets_eq_2rn", report.strict_count == report.r,
        f"q={report.strict_count} r={report.r}"))
    return results


def random_basis(rng, m, n, den=2, span=3):
    """A random rational m x n basis with small entries (degenerate ties welcome)."""
    while True:
        rows = tuple(
            tuple(Fraction(rng.randint(-span * den, span * den), rng.randint(1, den))
                  for _ in range(n))
            for _ in range(m))
        if rl.rank(rows) == m:
            return rows

