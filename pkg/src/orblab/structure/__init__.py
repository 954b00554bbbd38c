"""Structure constants of fixed-point algebras and their large-N limits."""

from .constants import (
    FreenessReport,
    LimitResult,
    factored_constant,
    fixed_point_constant,
    fixed_point_table,
    freeness_report,
    limit_constant,
    limit_table,
    single_trace_states,
)
from .cosets import CosetClass, coset_analysis, gl_m_squared, sn_m_closed_form
from .jacobi import JacobiReport, jacobi_check
from .seed import (
    VAC,
    SeedTable,
    builtin_seed,
    heisenberg_seed,
    load_seed,
    unit1_seed,
    vacuum_seed,
)
from .states import (
    SymmetrizedState,
    bruteforce_constant,
    fixed_point_states,
    normalization,
    tensor_constant,
)
