"""Cost-optimal intervention design for learning causal graphs.

Given the undirected skeleton of a causal graph (chordal, as the unoriented
part of an essential graph always is) and a cost per variable, construct
sets of interventions of minimum total cost that identify every causal
graph with that skeleton, with or without a bound on the number of
interventions.  Ground-truth learning oracles, a random-graph benchmark
harness, and a CLI round it out.
"""

from .bench import BenchRow, rows_to_csv, run_benchmark
from .chordal import (
    Coloring,
    Peo,
    chromatic_number_chordal,
    find_peo_violation,
    greedy_color_chordal,
    is_chordal,
    is_peo,
    is_proper,
    max_weight_independent_set_frank,
    max_weight_k_colorable_interval,
    maximum_cardinality_search,
    set_weight,
)
from .design import (
    DesignResult,
    design_exact,
    design_greedy_chordal,
    design_greedy_interval,
    design_unbounded_optimal,
    export_ilp,
    min_separating_size,
)
from .errors import (
    BudgetExceeded,
    CausalSepError,
    DuplicateEdge,
    DuplicateLabel,
    GraphError,
    InconsistentEvidence,
    InsufficientInterventions,
    IntervalMismatch,
    InvalidK,
    InvalidPeo,
    InvalidWeight,
    LabelLengthMismatch,
    NegativeWeight,
    NoIntervals,
    NotChordal,
    NotEnoughLabels,
    NotSeparating,
    SelfLoop,
    TooLarge,
    VertexOutOfRange,
    WeightLengthMismatch,
)
from .graph import (
    Graph,
    build_graph,
    graph_from_dict,
    graph_from_json,
    graph_to_dict,
    graph_to_json,
    induced_subgraph,
    is_connected,
)
from .oracle import (
    Dag,
    LearnReport,
    Pdag,
    design_learns_all,
    enumerate_moral_orientations,
    meek_closure,
    random_moral_orientation,
    simulate_intervention,
)
from .randgen import GenConfig, sample_chordal, sample_costs
from .sepsys import (
    Design,
    Label,
    LabelPool,
    SeparationReport,
    assign_labels_min_cost,
    coloring_to_design,
    design_cost,
    design_from_interventions,
    design_from_json,
    design_to_coloring,
    design_to_dict,
    design_to_json,
    label_pool,
    verify_graph_separating,
)

__version__ = "0.1.0"
