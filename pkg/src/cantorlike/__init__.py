"""Exact construction and analysis of Cantor-like set families."""

from .exact import (
    ClosedInterval,
    IntervalSet,
    format_rational,
    normalize,
    parse_rational,
)
from .families import (
    DEFAULT_DEPTH_CAP,
    ConstructionError,
    DepthCapError,
    DigitSet,
    FamilySpec,
    IfsMaps,
    LambdaFamily,
    LevelStats,
    OpenInterval,
    Power,
    Proportional,
    digit_equivalent,
    family_from_json,
    family_to_json,
    ifs_maps,
    ifs_step,
    iterate,
    level_stats,
    removed_by_generation,
    removed_intervals,
)
from .analysis import (
    CANTOR_TERNARY,
    DimensionReport,
    ExpansionRecord,
    base_expansion,
    cantor_function,
    dimension_estimates,
    limit_measure,
    measure_at_depth,
    member_at_depth,
    member_limit,
    membership_witness,
    similarity_dimension,
)
from .counterexample import (
    DiscontinuityReport,
    RemovedSequence,
    discontinuity_report,
    removed_sequence,
    tail_measure,
    tail_table,
    total_removed_measure,
)
from .render import RenderSpec, render_svg

__version__ = "0.1.0"
