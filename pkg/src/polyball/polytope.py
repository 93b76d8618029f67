"""The unit ball of ``span(basis)`` in coefficient coordinates.

``B = {beta : |<beta, c>| <= 1 for every component c}``, one constraint pair
per nonzero component class.  Vertices of ``B`` are the maximal
star-constants, i.e. the coefficient vectors of the extreme points of the
subspace unit ball.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import lp
from . import ratlin as rl
from ._parallel import pmap
from .components import as_component_set, equivalence_classes
from .errors import DimensionError, NotInBallError, NotOnSphereError, PreconditionError


@dataclass(frozen=True)
class BallPolytope:
    """H-representation of the unit ball.

    ``constraints[2k]`` is ``<beta, rep_k> <= 1`` and ``constraints[2k+1]``
    its negation, where ``rep_k`` is the representative of ``classes[k]``.
    ``components`` keeps every coordinate so faces can be reported in
    coordinate indices.
    """

    dim: int
    classes: tuple
    constraints: tuple
    components: tuple

    def class_of_constraint(self, i):
        return self.classes[i // 2]

    def norm(self, beta):
        return rl.max_abs(rl.dot(beta, c.representative) for c in self.classes)


@dataclass(frozen=True)
class FaceDescriptor:
    tight_set: tuple
    signs: tuple
    dim_estimate: int


@dataclass(frozen=True)
class VertexList:
    vertices: tuple
    faces: tuple

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


@dataclass(frozen=True)
class FacetClass:
    cls: object
    is_facet: bool
    witness: tuple


def unit_ball_hrep(obj):
    cs = as_component_set(obj)
    classes = tuple(c for c in equivalence_classes(cs) if not c.is_zero)
    one = Fraction(1)
    cons = []
    for c in classes:
        cons.append(lp.LinConstraint(c.representative, one))
        cons.append(lp.LinConstraint(rl.neg(c.representative), one))
    return BallPolytope(cs.m, classes, tuple(cons), cs.components)


def _as_beta(P, beta):
    beta = rl.as_vector(beta)
    if len(beta) != P.dim:
        raise DimensionError(f"beta has dim {len(beta)}, ball lives in dimension {P.dim}")
    return beta


def _face(P, beta):
    tight, signs = [], []
    for i, c in enumerate(P.components):
        v = rl.dot(beta, c)
        if abs(v) == 1:
            tight.append(i)
            signs.append(1 if v > 0 else -1)
    rank = rl.rank([P.components[i] for i in tight]) if tight else 0
    return FaceDescriptor(tuple(tight), tuple(signs), P.dim - rank)


def enumerate_vertices(P):
    """All vertices, by solving every nonsingular ``m``-subset of tight constraints.

    Choosing ``m`` classes and a sign for each is the same as choosing ``m``
    constraints, minus the subsets containing both halves of a pair, which
    are singular anyway.
    """
    reps = [c.representative for c in P.classes]
    m = P.dim

    def solve_subset(subset):
        mat = [reps[k] for k in subset]
        if rl.rank(mat) < m:
            return []
        # columns of the inverse; each candidate is a signed sum of them
        cols = [rl.solve_square(mat, tuple(Fraction(int(i == j)) for i in range(m)))
                for j in range(m)]
        # <beta(signs), rep> = sum_j signs_j <col_j, rep>, tested in integers
        gram = [[rl.dot(col, r) for col in cols] for r in reps]
        den = math.lcm(*(g.denominator for row in gram for g in row))
        igram = [[int(g * den) for g in row] for row in gram]
        found = []
        for signs in itertools.product((1, -1), repeat=m):
            if all(abs(sum(s * g for s, g in zip(signs, row))) <= den for row in igram):
                found.append(tuple(sum((s * col[i] for s, col in zip(signs, cols)), Fraction(0))
                                   for i in range(m)))
        return found

    vertices = set()
    for chunk in pmap(solve_subset, itertools.combinations(range(len(reps)), m)):
        vertices.update(chunk)
    ordered = tuple(sorted(vertices))
    return VertexList(ordered, tuple(_face(P, v) for v in ordered))


def facet_classes(P):
    """One entry per class; ``is_facet`` iff its constraint is irredundant."""

    def one(k):
        res = lp.redundancy_check(2 * k, P.constraints)
        return FacetClass(P.classes[k], res.irredundant, res.witness)

    return pmap(one, range(len(P.classes)))


def facet_count(P):
    return 2 * sum(f.is_facet for f in facet_classes(P))


def minimal_face(P, beta):
    """Tight coordinates of a unit-norm ``beta``: its minimal face in the cube."""
    beta = _as_beta(P, beta)
    norm = P.norm(beta)
    if norm < 1:
        raise NotOnSphereError(f"norm of beta is {norm} < 1; the point is interior")
    if norm > 1:
        raise NotInBallError(f"norm of beta is {norm} > 1; the point is outside the ball")
    return _face(P, beta)


def is_extreme(P, beta):
    """Extreme iff the tight components have full rank."""
    return minimal_face(P, beta).dim_estimate == 0


def is_maximal_star_constant(P, beta):
    """LP test: can ``beta`` be moved, keeping its tight values, onto a new tight class?

    For each slack class ``p`` and sign, maximise ``+-<alpha, rep_p>`` over the
    ball subject to ``<alpha, c> = <beta, c>`` on the tight classes.  Reaching
    1 yields a star-constant of a strictly larger set, so ``beta`` is not
    maximal.
    """
    beta = _as_beta(P, beta)
    if P.norm(beta) != 1:
        raise PreconditionError("beta is not a star-constant: its norm is not 1")
    tight = []
    slack = []
    for c in P.classes:
        v = rl.dot(beta, c.representative)
        (tight if abs(v) == 1 else slack).append((c.representative, v))
    fixed = []
    for rep, v in tight:
        fixed.append(lp.LinConstraint(rep, v))
        fixed.append(lp.LinConstraint(rl.neg(rep), -v))
    system = list(P.constraints) + fixed
    for rep, _ in slack:
        for direction in (rep, rl.neg(rep)):
            out = lp.lp_optimize(direction, system)
            if out.status == lp.OPTIMAL and out.value >= 1:
                return False
    return True


def star_set_margin(P, signed_classes):
    """Slack LP for a signed class set.

    ``signed_classes`` maps class index to the sign ``<beta, rep>`` must
    take.  Maximises ``t`` with ``|<beta, c>| <= 1 - t`` on all other
    classes (``t`` free, capped at 1).  Returns ``(t, beta)``, or None when
    the equalities are inconsistent.  ``t >= 0`` means the face cut out by
    the equalities is nonempty; ``t > 0`` means the set is a star-set and
    ``beta`` one of its star-constants.
    """
    one = Fraction(1)
    m = P.dim
    cons = []
    for k, s in signed_classes.items():
        rep = P.classes[k].representative
        cons.append(lp.LinConstraint(rep + (0,), Fraction(s)))
        cons.append(lp.LinConstraint(rl.neg(rep) + (0,), -Fraction(s)))
    for k, c in enumerate(P.classes):
        if k not in signed_classes:
            cons.append(lp.LinConstraint(c.representative + (one,), one))
            cons.append(lp.LinConstraint(rl.neg(c.representative) + (one,), one))
    cons.append(lp.LinConstraint((0,) * m + (one,), one))
    out = lp.lp_optimize((0,) * m + (one,), cons)
    if out.status != lp.OPTIMAL:
        return None
    return out.value, out.point[:m]


def find_star_constant(P, signed_classes):
    """A star-constant of the signed class set, or None if it is not a star-set."""
    res = star_set_margin(P, signed_classes)
    if res is None or res[0] <= 0:
        return None
    return res[1]
