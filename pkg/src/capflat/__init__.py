"""Cap diagrams, tally functions and the Catalan bound on matching sets."""

from .catalan import ArcSystem, catalan, enumerate_arc_systems, exercise1_count_check, exercise2_confined_count
from .diagram import (
    Cap,
    CapDiagram,
    PointClass,
    TallyProfile,
    WeightFunction,
    build_cap_diagram,
    classify_point,
    is_zigzag,
    matches,
    staircase,
    tally,
    zeros_left_of_anchor,
    zigzag,
)
from .moves import (
    HALF,
    FlatDecomposition,
    LegalMove,
    Step,
    apply_move,
    decomposition_counts,
    flat,
    flat_oracle,
    flat_recursive,
    legal_move_indices,
    lm_star_count_bound_check,
)
from .render import render

__version__ = "0.1.0"
