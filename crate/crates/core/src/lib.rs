//! Exact algorithms for the perfect-matching structure of graphs.
//!
//! The crate covers feasible edge sets and parity spectra, switching
//! equivalence, equivalent edge classes, removable edges, the
//! Dulmage–Mendelsohn decomposition of matchable bipartite graphs with a
//! minimal augmentation to a matching-covered supergraph, and a generator
//! for k-regular class-1 graphs carrying a large equivalent class.

pub mod construct;
pub mod corpus;
pub mod crossval;
pub mod dm;
pub mod edgeset;
pub mod error;
pub mod feasibility;
pub mod graph;
pub mod matching;
pub mod search;
pub mod structure;
pub mod switching;

pub use construct::{
    build_generalized, build_gk, build_gkm, color_complete_bipartite, parse_construction,
    serialize_construction, strip_annotations, verify_construction, ConstructionResult,
    EdgeColoring, VerificationReport, VerifyMode,
};
pub use crossval::{CrossvalConfig, CrossvalReport, Suite};
pub use dm::{
    alternating_path, augment_to_matching_covered, directed_cuts, dm_decomposition, dm_digraph,
    min_path_family, sources_and_sinks, AugmentationPlan, CutMode, DirectedCut, DmDecomposition,
    DmDigraph, PathFamily,
};
pub use edgeset::EdgeSet;
pub use error::{Error, GraphError, ParseError, ParseErrorKind, Result};
pub use feasibility::{
    edges_equivalent, equivalent_classes, is_feasible, parity_spectrum, EquivalenceClasses,
    MatchingTable, ParitySpectrum,
};
pub use graph::{
    components, edge_cut_sides, is_bipartite, is_connected, nabla, parse_graph, serialize_graph,
    vertex_connectivity, BipartiteWitness, Bipartition, EdgeId, Graph, GraphView, Side,
    VertexCutSides, VertexId,
};
pub use matching::{
    allowed_edges, enumerate_perfect_matchings, find_perfect_matching, has_perfect_matching,
    is_k_extendable, is_matching_covered, MatchingEnumeration, PerfectMatching,
};
pub use search::{scan_edge_subsets, SubsetScan};
pub use structure::{
    balanced_two_cuts, classify, has_equivalent_class_bipartite, is_brace, is_brick,
    is_strongly_coverable, removable_edges, strongly_coverable_by_cuts, BalancedCut,
    ClassificationReport,
};
pub use switching::{
    are_switching_equivalent, equivalent_to_empty, equivalent_to_full, is_balanced, switch_at,
    SignedEdgeSet, SwitchWitness,
};
