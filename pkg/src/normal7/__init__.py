"""Normal edge colorings of cubic graphs: flows, reductions, and a 7-color pipeline."""

from normal7.certify import (
    Certificate,
    GadgetSite,
    NamedGraph,
    REGISTRY,
    certify_fig6_flow_poor,
    certify_fig6_normal6,
    certify_gadget_K,
    certify_k33_three_rich,
    find_gadget_sites,
    run_claim,
    sweep_cycle_space,
)
from normal7.coloring_solver import (
    EdgeColoring,
    EdgeStatus,
    EnumerationResult,
    ImproperColoringError,
    SolverResult,
    color_set,
    coloring_from_flow,
    edge_status,
    enumerate_normal_colorings,
    exact_chi_n,
    find_normal_coloring,
    is_normal,
    is_three_edge_colorable,
)
from normal7.cuts_reductions import (
    EdgeCut,
    Ladder,
    ReductionPiece,
    ReductionTrace,
    StarProduct,
    find_2_edge_cuts,
    find_bridges,
    find_nontrivial_3_edge_cuts,
    is_cyclically_4ec,
    ladder_containing,
    splice_reduction,
    star_product,
    three_cut_reduction,
    two_cut_reduction,
    validate_ladder,
)
from normal7.flows_trees import (
    GF2Automorphism,
    GroupFlow,
    PackingError,
    TreePair,
    all_automorphisms,
    apply_automorphism,
    automorphism_extending,
    find_automorphism,
    flow_edge_status,
    flow_three_edges_distinct,
    flow_two_adjacent_distinct,
    flow_two_edges_equal,
    flow_value_set,
    nz_z23_flow,
    pack_two_spanning_trees,
    verify_flow,
)
from normal7.graph_core import (
    Graph6Error,
    PseudoGraph,
    attach_pendant,
    contract_edge_set,
    parse_edge_list,
    parse_graph6,
    subdivide_edge,
    write_dot,
    write_edge_list,
    write_graph6,
)
from normal7.matching import (
    FactorCycle,
    MatchingError,
    PerfectMatching,
    TwoFactorLift,
    complementary_two_factor,
    contract_two_factor,
    lift_flow,
    perfect_matching_through,
)
from normal7.normal7_pipeline import (
    CaseTag,
    CertificateStep,
    GlueForest,
    PendantBlockInput,
    PipelineVerificationError,
    build_glue_forest,
    color_degree13_graph,
    color_pendant_block,
    flow_edge_poor,
    flow_edge_rich,
    flow_two_adjacent_rich,
    graph_fingerprint,
    normal7_coloring,
)

__all__ = [
    "CaseTag",
    "Certificate",
    "CertificateStep",
    "EdgeColoring",
    "EdgeCut",
    "EdgeStatus",
    "EnumerationResult",
    "GadgetSite",
    "GlueForest",
    "ImproperColoringError",
    "NamedGraph",
    "PendantBlockInput",
    "PipelineVerificationError",
    "REGISTRY",
    "SolverResult",
    "build_glue_forest",
    "certify_fig6_flow_poor",
    "certify_fig6_normal6",
    "certify_gadget_K",
    "certify_k33_three_rich",
    "color_degree13_graph",
    "color_pendant_block",
    "color_set",
    "coloring_from_flow",
    "edge_status",
    "enumerate_normal_colorings",
    "exact_chi_n",
    "find_gadget_sites",
    "find_normal_coloring",
    "flow_edge_poor",
    "flow_edge_rich",
    "flow_two_adjacent_rich",
    "graph_fingerprint",
    "is_normal",
    "is_three_edge_colorable",
    "normal7_coloring",
    "run_claim",
    "sweep_cycle_space",
    "FactorCycle",
    "GF2Automorphism",
    "Graph6Error",
    "GroupFlow",
    "Ladder",
    "MatchingError",
    "PackingError",
    "PerfectMatching",
    "PseudoGraph",
    "ReductionPiece",
    "ReductionTrace",
    "StarProduct",
    "TreePair",
    "TwoFactorLift",
    "all_automorphisms",
    "apply_automorphism",
    "attach_pendant",
    "automorphism_extending",
    "complementary_two_factor",
    "contract_edge_set",
    "contract_two_factor",
    "find_2_edge_cuts",
    "find_automorphism",
    "find_bridges",
    "find_nontrivial_3_edge_cuts",
    "flow_edge_status",
    "flow_three_edges_distinct",
    "flow_two_adjacent_distinct",
    "flow_two_edges_equal",
    "flow_value_set",
    "is_cyclically_4ec",
    "ladder_containing",
    "lift_flow",
    "nz_z23_flow",
    "pack_two_spanning_trees",
    "parse_edge_list",
    "parse_graph6",
    "perfect_matching_through",
    "splice_reduction",
    "star_product",
    "subdivide_edge",
    "three_cut_reduction",
    "two_cut_reduction",
    "verify_flow",
    "write_dot",
    "write_edge_list",
    "write_graph6",
]
