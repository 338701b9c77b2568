"""Newton maps for trinomial quintics: symbolic coding, kneading algebra,
Markov partitions, and topological entropy for the family x^5 - c*x + 1."""

__version__ = "0.1.0"

from .polynomials import IntPolynomial, RationalFunctionInT, smallest_root_in
from .words import (
    LAP_SIGN,
    SYMBOLS,
    SymbolWord,
    TAIL_A_INF,
    TAIL_PERIODIC,
    TAIL_UNRESOLVED,
    TreeNode,
    WordError,
    admissible_convergents,
    admissible_cycles,
    generate_tree,
    is_admissible,
    order_compare,
    parse_parent,
    transition_allowed,
)
from .kneading import (
    FormalSymbolSeries,
    KneadingMatrix,
    PolyTreeNode,
    StructureError,
    build_polynomial_tree,
    convergent_polynomial,
    cycle_polynomial,
    determinant_polynomial,
    invariant_coordinate,
    kneading_determinant,
    kneading_increment,
    shape_split,
    tree_polynomial_step,
)
from .dynamics import (
    C0,
    ConvergedToRoot,
    CriticalFrame,
    HitPole,
    PeriodicOrbit,
    PoleError,
    Truncated,
    critical_frame,
    critical_symbols,
    family_value,
    find_superstable_parameter,
    iterate_orbit,
    newton_derivative,
    newton_eval,
    symbol_stream,
)
from .coding import KneadingData, itinerary, kneading_data
from .markov import (
    CurvePoint,
    EntropyResult,
    MarkovPartition,
    TransitionMatrix,
    char_poly,
    critical_orbit,
    entropy_curve,
    entropy_from_charpoly,
    entropy_from_kneading,
    entropy_point,
    kneading_numerator,
    lap_growth_estimate,
    markov_partition,
    transition_matrix,
)
from .reduction import (
    BringJerrardQuintic,
    ConjugacyReport,
    ReducedQuintic,
    Regime,
    classify_regime,
    conjugacy_check,
    reduce_quintic,
)

__all__ = [
    "__version__",
    "IntPolynomial", "RationalFunctionInT", "smallest_root_in",
    "LAP_SIGN", "SYMBOLS", "SymbolWord",
    "TAIL_A_INF", "TAIL_PERIODIC", "TAIL_UNRESOLVED",
    "TreeNode", "WordError",
    "admissible_convergents", "admissible_cycles", "generate_tree",
    "is_admissible", "order_compare", "parse_parent", "transition_allowed",
    "FormalSymbolSeries", "KneadingMatrix", "PolyTreeNode", "StructureError",
    "build_polynomial_tree", "convergent_polynomial", "cycle_polynomial",
    "determinant_polynomial", "invariant_coordinate", "kneading_determinant",
    "kneading_increment", "shape_split", "tree_polynomial_step",
    "C0", "ConvergedToRoot", "CriticalFrame", "HitPole", "PeriodicOrbit",
    "PoleError", "Truncated", "critical_frame", "critical_symbols",
    "family_value", "find_superstable_parameter", "iterate_orbit",
    "newton_derivative", "newton_eval", "symbol_stream",
    "KneadingData", "itinerary", "kneading_data",
    "CurvePoint", "EntropyResult", "MarkovPartition", "TransitionMatrix",
    "char_poly", "critical_orbit", "entropy_curve", "entropy_from_charpoly",
    "entropy_from_kneading", "entropy_point", "kneading_numerator",
    "lap_growth_estimate", "markov_partition", "transition_matrix",
    "BringJerrardQuintic", "ConjugacyReport", "ReducedQuintic", "Regime",
    "classify_regime", "conjugacy_check", "reduce_quintic",
]
