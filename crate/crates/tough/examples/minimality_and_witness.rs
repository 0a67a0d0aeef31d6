//! Minimal toughness by single-edge deletion, and the witness-edge
//! certificate for graphs that are not minimally tough.
//!
//! Run with `cargo run --example minimality_and_witness`.

use tough::graph::Graph;
use tough::toughness::{
    find_witness_edge, is_minimally_tough, kriesell_degree_check, MinimalToughness,
};

fn inspect(name: &str, g: &Graph) {
    match is_minimally_tough(g).unwrap() {
        MinimalToughness::Minimal { t } => {
            println!("{name}: minimally {t}-tough");
            println!(
                "  has a vertex of degree ceil(2t): {}",
                kriesell_degree_check(g).unwrap()
            );
        }
        MinimalToughness::NotMinimal {
            edge,
            toughness_without_edge,
        } => {
            println!(
                "{name}: not minimal — deleting ({}, {}) keeps toughness {}",
                edge.0, edge.1, toughness_without_edge
            );
        }
    }
    match find_witness_edge(g).unwrap() {
        Some(report) => println!(
            "  witness edge ({}, {}): {} internally disjoint paths, {} qualifying cutsets all satisfy the bound",
            report.edge.0, report.edge.1, report.path_count, report.checked_cutsets
        ),
        None => println!("  no witness edge exists (that certifies minimality)"),
    }
}

fn main() {
    let net = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
    inspect("net graph", &net);

    // Diamond on 0,1,2,3 with pendants: the (0,1) edge can be deleted
    // without lowering toughness, so this graph is not minimally tough.
    let diamond_pendants =
        Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 4), (3, 5)]).unwrap();
    inspect("diamond with pendants", &diamond_pendants);

    inspect("cycle C_4", &Graph::cycle(4));
    inspect("path P_3", &Graph::path(3));
}
