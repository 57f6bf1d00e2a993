"""Exact enumeration of border-strip tableaux and decompositions of simple
diagrams, their permutation encoding and q-statistics, and the identity
between ribbon tilings of the 2n x n rectangle and the volume sequence of
punctured-sphere moduli spaces (OEIS A115047)."""

from .shape import (
    Cell,
    SimpleDiagram,
    Word,
    build_diagram,
    diagram_from_json,
    diagram_to_json,
    hor_statistic,
    isometry_orbit,
    render_ascii,
)
from .ribbon import (
    BorderStrip,
    Decomposition,
    StripOrder,
    Tableau,
    ValidationResult,
    above,
    decomposition_from_json,
    decomposition_of,
    decomposition_to_json,
    head_tail,
    inner_relation,
    inversions_direct,
    is_border_strip,
    tableau_from_json,
    tableau_to_json,
    validate_decomposition,
    validate_tableau,
)
from .perm import (
    MembershipError,
    Permutation,
    canonicalize,
    descents_k,
    inv_window,
    is_bsp_member,
    psi,
    psi_inverse,
    word_of,
)
from .enumeration import (
    BudgetExceededError,
    DEFAULT_BUDGET,
    EnumerationBudget,
    count_bsd,
    count_bsp,
    enum_bsd,
    enum_bsp,
    enum_bst,
    fibers,
    oracle_tableaux,
    oracle_tilings,
    qpoly_bsd,
)
from .polynomial import Polynomial, falling_factorial
from .formulas import (
    ScanReport,
    StraightnessReport,
    UnsupportedRangeError,
    bsd_count_formula,
    bst_closed,
    compositions,
    conjecture_scan,
    f_polynomial,
    format_sequence,
    j_statistic,
    kaufmann_sum,
    multinomial,
    partition_ie_sum,
    partitions,
    q_bracket,
    q_factorial,
    qpoly_single_column,
    rc_closed,
    rect_recurrence,
    straightness_compare,
    total_over_words,
    wp_volume,
    zograf_sequence,
)

__version__ = "0.1.0"
