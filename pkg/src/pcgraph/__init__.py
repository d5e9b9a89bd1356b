"""Properly colored acyclicity in edge-colored multigraphs.

The level hierarchy (1 through 5, each stricter than the last) is
recognized by the functions in acyclicity; walk structures (cycles,
closed trails, closed walks) live in structures; separator and packing
questions in connectivity; instance transforms in reductions; slow
exhaustive references and generators in oracle.
"""

from .acyclicity import (
    ClassifyResult,
    Conflict,
    Orientation,
    PrecheckFailure,
    classify,
    count_cycle_monochromatic,
    procedure1_orient,
    recognize_type1,
    recognize_type2,
    recognize_type3,
    recognize_type4,
    recognize_type5,
    trail_deletion_fixpoint,
    verify_ordering,
)
from .connectivity import (
    SeparatorPackingResult,
    edge_disjoint_variant,
    menger_gap,
    solve_type4,
    strip_internal_monochromatic,
)
from .core import (
    Edge,
    EdgeColoredGraph,
    ParallelEdgeWarning,
    Walk,
    bridges,
    build_graph,
    connected_components,
    is_pc_walk,
    monochromatic_vertices,
    parse_graph,
    serialize_graph,
)
from .errors import (
    CapacityError,
    GraphError,
    InfeasibleSeparatorError,
    InvalidWalkError,
    InvariantViolation,
    NotTypeFourError,
    ParseError,
    PcgraphError,
    UnsupportedTransformError,
)
from .fixtures import Fixture, fixture, fixture_names, write_corpus
from .reductions import (
    BLUE,
    RED,
    BetweennessInstance,
    Digraph,
    PlainGraph,
    RbpmInstance,
    betweenness_to_type4,
    digraph_to_2ecg,
    extend,
    parse_betweenness,
    parse_digraph,
    parse_plain_graph,
    parse_rbpm,
    rbpm_to_packing,
    type5_deletion_reduction,
    vertex_cover_to_separator,
    vertex_split_edge_transform,
)
from .structures import (
    DetectionResult,
    TransitionDigraph,
    has_pc_closed_trail,
    has_pc_closed_walk,
    has_pc_cycle,
    transition_digraph,
)

__version__ = "0.1.0"
