from .alexander import alexander_matrix, determinant, fox_alexander, state_sum_euler, wirtinger_arcs
from .alternation import (
    AlternationReport,
    FixableSet,
    PairCheck,
    alternating_assignments,
    brute_force_dalt,
    dalt,
    good_domain_violations,
    is_fixable,
    min_fixable_set,
    pair_decomposition_check,
    verify_theorem,
)
from .gradings import (
    DELTA_TABLE,
    STANDARD_TABLES,
    DeltaSpread,
    GradingTables,
    GradingVector,
    alexander,
    delta,
    delta_contribution,
    delta_spread,
    f_value,
    fold_deltas,
    format_quarters,
    grading_histogram,
    gradings,
    maslov,
)
from .laurent import LaurentPolynomial
