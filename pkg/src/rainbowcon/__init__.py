"""Exact solvers, reduction constructors and machine-checkers for rainbow
connectivity and strong rainbow connectivity at desk scale."""

from .coloring import (
    EdgeColoring,
    edge_coloring,
    exists_geodesic_rainbow_path,
    exists_rainbow_path,
    is_rainbow_connected,
    is_rainbow_path,
    is_strong_rainbow_connected,
    is_subset_rainbow_connected,
    is_subset_strong_rainbow_connected,
)
from .errors import (
    BudgetExceededError,
    DisconnectedError,
    DisconnectedPairError,
    DomainMismatchError,
    EmptyGraphError,
    ImproperColoringError,
    IndexOutOfRangeError,
    InvalidOrderError,
    MissingLayerTagsError,
    NotAStarError,
    NotSubsetRainbowConnectedError,
    PairNotLeafPairError,
    ParseError,
    PathNotInGraphError,
    SelfLoopError,
    ToolkitError,
    TooFewColorsError,
)
from .graph import (
    UNREACHABLE,
    Graph,
    PairSet,
    Path,
    all_pairs,
    diameter,
    distances_from,
    geodesics,
    is_bipartite,
    is_connected,
    make_pairs,
    new_graph,
    simple_paths_up_to,
)
from .reductions import (
    Gadget,
    ReducedInstance,
    SplitBase,
    SrcExtension,
    StarInstance,
    SubsetInstance,
    build_gadget,
    build_order2_gadget,
    build_order3_gadget,
    combine_colorings,
    gadget_layers,
    lift_vertex_coloring,
    project_star_coloring,
    rc_reduction,
    split_base,
    src_extension,
    src_witness_coloring,
    star_reduction,
    witness_coloring,
)
from .search import (
    OptResult,
    SolveResult,
    rc_exact,
    restricted_growth_colorings,
    src_exact,
    subset_rc_leq,
    subset_src_leq,
    vertex_coloring_leq,
)
from .verify import (
    CheckReport,
    CounterRng,
    FuzzConfig,
    check_nonpair_distances,
    check_pair_distances,
    check_path_containment,
    check_rc_equivalence,
    check_src_equivalence,
    check_vertex_coloring_equivalence,
    check_witness,
    fuzz,
    run_battery,
)

__all__ = [name for name in dir() if not name.startswith("_")]
