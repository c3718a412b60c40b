"""Edge-outer orientable graph embeddings.

Construct reporter strand walks for arbitrary connected multigraphs,
validate and realize closed walks as face boundaries, solve Chinese
postman and shortest-reporter-strand problems exactly at desk scale, and
build the staged hardness gadget graphs with walk translators in both
directions.
"""

from .embedding import (
    Embedding,
    FaceSet,
    clockwise_neighbor,
    embedding_from_neighbor_rotations,
    flip,
    genus,
    identity_embedding,
    make_embedding,
    trace_faces,
)
from .gadgets import (
    Fragment,
    GadgetMap,
    PassageForm,
    build_A,
    build_B,
    build_P,
    build_Q,
    build_R,
    classify_P_passages,
    cprs_P_to_hamilton,
    cubic_completion,
    forced_bplus_walk,
    hamilton_to_cprs_P,
    lift_P_to_R,
    normalize_P_walk,
    project_R_to_P,
    verify_stage,
)
from .multigraph import (
    DegreeProfile,
    Graph,
    build_graph,
    degree_profile,
    e3_classes,
    edge_disjoint_path_count,
    is_connected,
    make_dart,
    opposite,
    vertex_connectivity_at_least,
)
from .optimal import (
    BudgetExceededError,
    CprsCandidate,
    TraceFailure,
    chinese_postman_length,
    cprs_trace,
    enumerate_cprs,
    exact_srs,
    hamilton_cycle,
    max_genus_exhaustive,
    perfect_matchings,
)
from .reporter import reporter_strand_walk, reporter_strand_walk_max_genus
from .walks import (
    RotGraph,
    Walk,
    WalkReport,
    canonical_form,
    is_reporter_strand_walk,
    realize_as_face,
    rot_graph,
    validate_walk,
)

__version__ = "0.1.0"
