"""Attribute-reduct engine for categorical decision tables.

Builds indiscernibility partitions and the topology bases they generate,
ranks attributes by positive-region significance, and eliminates redundant
attributes while checking every removal against the full-attribute base.  An
exhaustive minimal-subset search is bundled as a verification oracle.
"""

from .dataset import (
    InformationSystem,
    builtin_names,
    builtin_seven_segment,
    conditional_attributes,
    load_builtin,
    load_csv,
)
from .errors import (
    DuplicateAttribute,
    EmptyAttributeSet,
    EmptyTable,
    MalformedTable,
    NotACover,
    NotInRemaining,
    ReductForgeError,
    TooManyAttributes,
    UniverseMismatch,
    UnknownAttribute,
    UnknownDecision,
)
from .partition import (
    ObjectSet,
    Partition,
    decision_partition,
    gamma,
    ind_partition,
    meet,
    positive_region,
)
from .reduct import (
    DEFAULT_MAX_ATTRS,
    ReductResult,
    TraceEntry,
    core_attributes,
    eliminate,
    exhaustive_reducts,
    is_redundant,
)
from .significance import (
    CountSplit,
    SignificanceTable,
    ThresholdSplit,
    rank_attributes,
    significance,
    split_groups,
)
from .topology import (
    SetFamily,
    base_from_indiscernibility_matrix,
    compose_bases,
    family_equal,
    minimal_neighborhoods,
    subbase_of,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_MAX_ATTRS",
    "CountSplit",
    "DuplicateAttribute",
    "EmptyAttributeSet",
    "EmptyTable",
    "InformationSystem",
    "MalformedTable",
    "NotACover",
    "NotInRemaining",
    "ObjectSet",
    "Partition",
    "ReductForgeError",
    "ReductResult",
    "SetFamily",
    "SignificanceTable",
    "ThresholdSplit",
    "TooManyAttributes",
    "TraceEntry",
    "UniverseMismatch",
    "UnknownAttribute",
    "UnknownDecision",
    "base_from_indiscernibility_matrix",
    "builtin_names",
    "builtin_seven_segment",
    "compose_bases",
    "conditional_attributes",
    "core_attributes",
    "decision_partition",
    "eliminate",
    "exhaustive_reducts",
    "family_equal",
    "gamma",
    "ind_partition",
    "is_redundant",
    "load_builtin",
    "load_csv",
    "meet",
    "minimal_neighborhoods",
    "positive_region",
    "rank_attributes",
    "significance",
    "split_groups",
    "subbase_of",
]
