"""De Bruijn sequences from preference functions."""

from .analysis import (
    ComplexityReport,
    CompletenessReport,
    Infeasible,
    PrecedenceConstraints,
    apply_permutation,
    build_constraints,
    complexity,
    equivalent_to_ford,
    induce_preference,
    is_complete,
)
from .census import (
    CensusTable,
    EnumerationTooLarge,
    count_by_complexity,
    count_de_bruijn,
    empirical_census,
    enumerate_complete,
)
from .core import (
    Alphabet,
    DigitSequence,
    LeastPreferenceMap,
    PreferenceFunction,
    TableFormatError,
    find_cycles,
    format_preference_table,
    least_preference,
    parse_preference_table,
)
from .generator import (
    generate,
    is_de_bruijn,
    max_overlap,
    missing_windows,
    overlap_preference,
    prefer_higher,
    prefer_opposite_binary,
)

__version__ = "0.1.0"
