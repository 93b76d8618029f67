"""Components of a basis and their (weak) star-property verdicts.

For a basis ``a_1, ..., a_m`` of a subspace of l_inf^n, the i-th component is
the column ``(a_1[i], ..., a_m[i])``.  The norm of ``sum_k beta_k a_k`` is the
largest ``|<beta, c>|`` over components ``c``; a component class has the
star property when some ``beta`` makes it strictly larger than every
non-equivalent component, and the weak star property when it can at least
tie with the largest of them.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import lp
from . import ratlin as rl
from ._parallel import pmap
from .errors import DependentBasisError, DimensionError

STRICT = "strict"
WEAK_ONLY = "weak_only"
WEAK = "weak"
NONE = "none"
ZERO = "zero"


@dataclass(frozen=True)
class Basis:
    """``m`` linearly independent rows in l_inf^n."""

    vectors: tuple

    def __post_init__(self):
        mat = rl.as_matrix(self.vectors)
        object.__setattr__(self, "vectors", mat)
        m, n = rl.shape(mat)
        if m > n:
            raise DimensionError(f"{m} vectors cannot be independent in l_inf^{n}")
        if rl.rank(mat) < m:
            raise DependentBasisError(f"basis rows are linearly dependent (rank {rl.rank(mat)} < {m})")

    @property
    def m(self):
        return len(self.vectors)

    @property
    def n(self):
        return len(self.vectors[0])


@dataclass(frozen=True)
class ComponentSet:
    """Components in coordinate order.

    ``closure`` marks a user-supplied finite stand-in for the closed component
    set of a sequence space; such inputs are taken as given.
    """

    components: tuple
    closure: bool = False

    @property
    def m(self):
        return len(self.components[0])

    @property
    def n(self):
        return len(self.components)


def components_of(basis):
    if not isinstance(basis, Basis):
        basis = Basis(basis)
    return ComponentSet(rl.transpose(basis.vectors))


def component_set(vectors):
    """Validate a raw list of components (a finite closure model)."""
    comps = rl.as_matrix(vectors)
    m = len(comps[0])
    if rl.rank(comps) < m:
        raise DependentBasisError(
            f"components span a space of dimension {rl.rank(comps)} < {m}; "
            "they cannot come from a basis")
    return ComponentSet(comps, closure=True)


def as_component_set(obj):
    if isinstance(obj, ComponentSet):
        return obj
    return components_of(obj)


def canonical(c):
    """The lexicographically larger of ``c`` and ``-c``."""
    return max(c, rl.neg(c))


@dataclass(frozen=True)
class EquivClass:
    representative: tuple
    members: tuple
    is_zero: bool = False


def equivalence_classes(cs):
    """Group components up to sign.  Nonzero classes sorted, zero class last."""
    cs = as_component_set(cs)
    groups = {}
    zero = []
    for i, c in enumerate(cs.components):
        if rl.is_zero(c):
            zero.append(i)
        else:
            groups.setdefault(canonical(c), []).append(i)
    classes = [EquivClass(rep, tuple(groups[rep])) for rep in sorted(groups)]
    if zero:
        classes.append(EquivClass(tuple(Fraction(0) for _ in range(cs.m)), tuple(zero), True))
    return classes


@dataclass(frozen=True)
class StarReport:
    classes: tuple
    verdicts: tuple
    certificates: tuple
    weak_count: int
    strict_count: Optional[int] = None
    m: int = 0
    closure: bool = False

    def _with(self, *wanted):
        return [c for c, v in zip(self.classes, self.verdicts) if v in wanted]

    @property
    def strict_classes(self):
        return self._with(STRICT)

    @property
    def weak_classes(self):
        return self._with(STRICT, WEAK_ONLY, WEAK)

    @property
    def divergent_classes(self):
        """Classes with the weak but not the strict property."""
        return self._with(WEAK_ONLY)

    def verdict_of(self, vector):
        key = canonical(tuple(Fraction(x) for x in vector))
        for c, v in zip(self.classes, self.verdicts):
            if c.representative == key:
                return v
        raise KeyError(vector)


def _competitors(classes, idx):
    return [c.representative for j, c in enumerate(classes) if j != idx and not c.is_zero]


def star_satisfiers(cs):
    """Run the strict-margin LP for every nonzero class."""
    cs = as_component_set(cs)
    classes = equivalence_classes(cs)

    def one(idx):
        cls = classes[idx]
        if cls.is_zero:
            return ZERO, None
        cert = lp.strict_margin(cls.representative, _competitors(classes, idx))
        if cert is None:
            return NONE, None
        return (STRICT if cert.margin > 0 else WEAK_ONLY), cert

    results = pmap(one, range(len(classes)))
    verdicts = tuple(v for v, _ in results)
    strict = sum(v == STRICT for v in verdicts)
    return StarReport(
        classes=tuple(classes),
        verdicts=verdicts,
        certificates=tuple(c for _, c in results),
        weak_count=strict + sum(v == WEAK_ONLY for v in verdicts),
        strict_count=strict,
        m=cs.m,
        closure=cs.closure,
    )


def weak_star_satisfiers(cs):
    """Run the weak feasibility LP for every nonzero class.

    Independent of :func:`star_satisfiers`; ``strict_count`` is left unset.
    """
    cs = as_component_set(cs)
    classes = equivalence_classes(cs)

    def one(idx):
        cls = classes[idx]
        if cls.is_zero:
            return ZERO, None
        cert = lp.weak_feasible(cls.representative, _competitors(classes, idx))
        return (WEAK, cert) if cert is not None else (NONE, None)

    results = pmap(one, range(len(classes)))
    verdicts = tuple(v for v, _ in results)
    return StarReport(
        classes=tuple(classes),
        verdicts=verdicts,
        certificates=tuple(c for _, c in results),
        weak_count=sum(v == WEAK for v in verdicts),
        m=cs.m,
        closure=cs.closure,
    )


def subspace_norm(cs, beta):
    """``||sum_k beta_k a_k||``: the largest ``|<beta, c>|`` over components."""
    cs = as_component_set(cs)
    return rl.max_abs(rl.dot(beta, c) for c in cs.components)
