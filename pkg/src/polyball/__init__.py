"""Exact polyhedral geometry of finite-dimensional subspaces of l_inf^n."""

from .components import (
    Basis,
    ComponentSet,
    StarReport,
    component_set,
    components_of,
    equivalence_classes,
    star_satisfiers,
    subspace_norm,
    weak_star_satisfiers,
)
from .errors import InconsistencyError, InputError, PolyballError
from .lp import lp_optimize, redundancy_check, strict_margin, weak_feasible
from .opspace import (
    analyze_operator_space,
    operator_norm,
    operator_space_basis,
    validate_extreme_set,
)
from .polytope import (
    enumerate_vertices,
    facet_classes,
    facet_count,
    find_star_constant,
    is_extreme,
    is_maximal_star_constant,
    minimal_face,
    unit_ball_hrep,
)
from .ratlin import parse_rational, rank, solve_square
from .spaces import (
    analyze_space,
    decide_embeddability,
    decide_isometric_to_linfm,
    direct_sum_basis,
    direct_sum_extremes,
    embed_into_linf,
    same_weak_components,
)

__version__ = "0.1.0"
