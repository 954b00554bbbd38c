"""Orbit counting, fixed-point characters and structure constants for
permutation orbifolds of S_N, Z_N and GL(N, q)."""

from .errors import BudgetExceeded, OrblabError, ValidationError
from .groups import (
    PermGroupHandle,
    build_group,
    cycle_index,
    cycle_type,
    gl_order_asymptotic,
    parse_group_spec,
    stabilizers,
)
from .orbits import (
    OrbitTable,
    WeightedFunction,
    bn_table,
    fn_table,
    gl_fn_bounds,
    growth_exponent,
    oligomorphic_check,
    orbit_representatives,
)
from .scalar import Scalar
from .series import (
    CycleIndex,
    CycleType,
    TruncatedSeries,
    cycle_index_character,
    e8cubed_character,
    series_arith,
    sym_limit_character,
)
from .twisted import min_twisted_weight, orbifold_limit_report, twisted_weight

__version__ = "0.1.0"
