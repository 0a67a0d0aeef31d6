//! Exact toughness and structural classification of sparse chordal graphs,
//! with an exhaustive small-graph verification harness.
//!
//! The crate computes graph toughness exactly (rational arithmetic over
//! all vertex subsets), tests minimal toughness by single-edge deletion,
//! builds and verifies clique trees, constructs and recognizes TT-graphs
//! (trees with selected degree-3 vertices collapsed into triangles), and
//! classifies interval graphs and caterpillars. The [`harness`] module
//! re-checks every classification statement over all labeled graphs and
//! trees at desk scale and persists machine-readable reports.
//!
//! Start with the runnable programs in `examples/`, one per capability:
//!
//! ```bash
//! cargo run --example toughness_basics
//! cargo run --example minimality_and_witness
//! cargo run --example clique_trees
//! cargo run --example tt_construction
//! cargo run --example interval_caterpillars
//! cargo run --example sweep_small_graphs
//! ```
//!
//! The same operations are scriptable through the thin `tough` binary; see
//! [`cli`].

pub mod chordal;
pub mod cli;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod interval;
pub mod oracle;
pub mod rational;
pub mod toughness;
pub mod ttgraph;

pub use chordal::{
    build_clique_tree, classify_vertex, is_chordal, lexbfs_order, max_pairwise_clique_intersection,
    maximal_cliques_chordal, verify_clique_intersection, verify_induced_subtree, ChordalError,
    CliqueTree, EliminationOrder, VertexClass,
};
pub use graph::{
    block_decomposition, local_connectivity, parse_edge_list, vertex_connectivity,
    BlockDecomposition, EdgeListError, Graph, GraphError, VertexSet, MAX_VERTICES,
};
pub use graph6::{emit_graph6, parse_graph6, Graph6Error};
pub use harness::{
    enumerate_labeled_graphs, enumerate_labeled_trees, run_sweep, HarnessError, Mismatch,
    SweepKind, SweepReport,
};
pub use interval::{
    corollary_check, find_asteroidal_triple, is_caterpillar, is_interval, AsteroidalTriple,
    CorollaryReport, IntervalError,
};
pub use rational::ExtendedRational;
pub use toughness::{
    find_witness_edge, is_minimally_tough, is_t_tough, kriesell_degree_check, toughness,
    witness_edge_report, MinimalToughness, ToughnessCertificate, ToughnessError, WitnessReport,
};
pub use ttgraph::{
    check_characterization, modified_degree, mu, recognize_tt, toughness_via_mu, tt_from_tree,
    CaseTag, CharacterizationReport, TTDecomposition, TriangleAssignment, TtError, TtRejection,
};
