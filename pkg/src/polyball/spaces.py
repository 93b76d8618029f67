"""Space-level decisions: optimal l_inf embedding, l_inf^m test, direct sums."""

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import lp
from . import ratlin as rl
from .components import (
    Basis,
    as_component_set,
    star_satisfiers,
    weak_star_satisfiers,
)
from .errors import DimensionError, InconsistencyError, InputError
from .polytope import enumerate_vertices, unit_ball_hrep

RANDOM_CHECKS = 100


@dataclass(frozen=True)
class EmbeddingMap:
    """``sum beta_k a_k  ->  sum beta_k b_k`` with ``b_k`` living in l_inf^r.

    Row ``k`` of ``image_basis`` lists the ``k``-th coordinate of each strict
    class representative.
    """

    source: object
    strict_reps: tuple
    image_basis: Basis

    @property
    def r(self):
        return len(self.strict_reps)

    def image_norm(self, beta):
        return rl.max_abs(rl.dot(beta, rep) for rep in self.strict_reps)


@dataclass(frozen=True)
class SpaceVerdict:
    m: int
    n: int
    strict_count: int
    weak_count: int
    facet_count: int
    extreme_count: int
    iso_to_linf_m: bool
    closure: bool = False

    @property
    def embeddable_min_s(self):
        return self.strict_count

    def embeddable_into(self, s):
        return self.strict_count <= s


def random_beta(rng, m, num=20, den=10):
    return tuple(Fraction(rng.randint(-num, num), rng.randint(1, den)) for _ in range(m))


def embed_into_linf(obj, seed=0):
    """Project onto the strict classes and verify the result is isometric.

    Dropping weak-only classes is sound only because their constraints are
    redundant; that fact is re-checked here rather than assumed.
    """
    cs = as_component_set(obj)
    report = star_satisfiers(cs)
    reps = tuple(c.representative for c in report.strict_classes)
    image = Basis(rl.transpose(reps))
    emb = EmbeddingMap(obj, reps, image)

    one = Fraction(1)
    image_ball = []
    for rep in reps:
        image_ball.append(lp.LinConstraint(rep, one))
        image_ball.append(lp.LinConstraint(rl.neg(rep), one))
    for cls in report.classes:
        if cls.is_zero or cls.representative in reps:
            continue
        out = lp.lp_optimize(cls.representative, image_ball)
        if out.status != lp.OPTIMAL or out.value > 1:
            raise InconsistencyError(
                f"dropped class {cls.representative} is not redundant for the strict classes")

    source_ball = unit_ball_hrep(cs)
    rng = random.Random(seed)
    samples = list(enumerate_vertices(source_ball).vertices)
    samples += [random_beta(rng, cs.m) for _ in range(RANDOM_CHECKS)]
    for beta in samples:
        if source_ball.norm(beta) != emb.image_norm(beta):
            raise InconsistencyError(f"embedding changes the norm at beta={beta}")
    return emb


def analyze_space(obj):
    cs = as_component_set(obj)
    report = star_satisfiers(cs)
    ext = enumerate_vertices(unit_ball_hrep(cs))
    return SpaceVerdict(
        m=cs.m,
        n=cs.n,
        strict_count=report.strict_count,
        weak_count=report.weak_count,
        facet_count=2 * report.strict_count,
        extreme_count=len(ext),
        iso_to_linf_m=report.strict_count == cs.m,
        closure=cs.closure,
    )


def decide_embeddability(obj, s):
    if not isinstance(s, int) or isinstance(s, bool) or s < 1:
        raise InputError(f"embedding target must be a positive integer, got {s!r}")
    return star_satisfiers(obj).strict_count <= s


def decide_isometric_to_linfm(obj):
    cs = as_component_set(obj)
    return star_satisfiers(cs).strict_count == cs.m


def direct_sum_basis(bases):
    """Block-diagonal basis of the l_inf direct sum."""
    bases = [b if isinstance(b, Basis) else Basis(b) for b in bases]
    if not bases:
        raise InputError("direct sum of no spaces")
    total_n = sum(b.n for b in bases)
    rows = []
    offset = 0
    zero = Fraction(0)
    for b in bases:
        for vec in b.vectors:
            rows.append((zero,) * offset + vec + (zero,) * (total_n - offset - b.n))
        offset += b.n
    return Basis(tuple(rows))


@dataclass(frozen=True)
class DirectSumExtremes:
    count: int
    vertices: Optional[tuple] = None


def direct_sum_extremes(vertex_lists, listing=False):
    """Extreme points of an l_inf sum are tuples of extreme points of the summands."""
    lists = [tuple(v) for v in vertex_lists]
    count = math.prod(len(v) for v in lists)
    if not listing:
        return DirectSumExtremes(count)
    product = tuple(sorted(sum(combo, ()) for combo in itertools.product(*lists)))
    return DirectSumExtremes(count, product)


def weak_representatives(obj):
    return {c.representative for c in weak_star_satisfiers(obj).weak_classes}


def same_weak_components(b1, b2):
    """Sufficient test for isometry: identical weak-class representatives."""
    cs1, cs2 = as_component_set(b1), as_component_set(b2)
    if cs1.m != cs2.m:
        raise DimensionError(f"dimensions differ: {cs1.m} vs {cs2.m}")
    return weak_representatives(cs1) == weak_representatives(cs2)

