"""Vertex-disjoint cycles of pairwise distinct lengths.

Finders for the constructive degree-threshold results, exact brute-force
oracles with machine-checkable certificates, tournament and digraph
routines, numeric reports for the probabilistic guarantees, and the
extremal instances that show the thresholds are sharp.
"""

from .certificates import (
    FORMAT,
    absence_certificate,
    check_certificate,
    packing_certificate,
    parse_certificate,
    to_json,
)
from .cycles import (
    even_distinct_cycles,
    has_cycle_of_length,
    iter_all_cycles,
    iter_cycles_of_length,
    maximal_path_cycles,
    residue_cycle,
)
from .dicycles import (
    ProbabilisticBudget,
    Tournament,
    camion_hamiltonian,
    dipath_distinct_cycles,
    probabilistic_bounds_report,
    regular_degree_requirement,
    regular_guarantee_onset,
    regular_partition_finder,
    tournament_cycle_shorten,
    tournament_degree_threshold,
    tournament_disjoint_distinct,
    tournament_long_cycle,
    uniform_partition_finder,
)
from .errors import (
    BadLength,
    BadParameters,
    BadResidue,
    BudgetError,
    CyclePackError,
    DegreeTooLow,
    GenerationFailed,
    GraphFormatError,
    InvalidCertificate,
    NotFound,
    NotOptimal,
    NotRegular,
    NotStrong,
    NotTriangleFree,
    PreconditionError,
    PreconditionUnmet,
    ResourceBudgetExceeded,
    RetriesExhausted,
    SearchExhausted,
    TooSmall,
)
from .extremal import (
    bidirected_complete,
    claim_ids,
    complete_bipartite,
    complete_graph,
    directed_cycle,
    gen,
    heawood_graph,
    petersen_graph,
    random_cubic_graph,
    random_regular_digraph,
    random_regular_graph,
    random_regular_tournament,
    random_tournament,
    rotational_tournament,
    tightness_check,
)
from .graphs import (
    Cycle,
    Digraph,
    Graph,
    format_edgelist,
    girth,
    graph_sha256,
    parse_edgelist,
    strong_components,
)
from .packing import (
    CyclePacking,
    OracleOutcome,
    divisible_degree_threshold,
    even_degree_threshold,
    exact_packing_oracle,
    find_disjoint_distinct,
    find_disjoint_distinct_trianglefree,
    find_disjoint_divisible,
    find_disjoint_even_distinct,
    find_residue_system,
    find_two_distinct,
    plain_degree_threshold,
    residue_system_degree_threshold,
    triangle_free_degree_threshold,
    uniform_cycle_structure,
)
from .partition import VertexPartition, degree_partition, multiway_degree_partition
from .profiles import EVEN, PLAIN, Profile
from .schema import PathVertexSchema, find_schema, optimize_schema, schema_cycles

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
