//! Building TT-graphs from trees and recognizing them back.
//!
//! A spider with three legs of length two turns into the net graph when
//! its center collapses into a triangle; the recognizer reverses the step
//! and its certificate replays to the exact input graph.
//!
//! Run with `cargo run --example tt_construction`.

use tough::graph::{Graph, VertexSet};
use tough::toughness::toughness;
use tough::ttgraph::{check_characterization, mu, recognize_tt, tt_from_tree};

fn main() {
    // Spider: center 0, legs 1-2, 3-4, 5-6.
    let spider = Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
    let (net, built) = tt_from_tree(&spider, VertexSet::singleton(0)).unwrap();
    println!(
        "construction: case {:?}, mu = {}, graph edges {:?}",
        built.case_tag,
        built.mu,
        net.edges()
    );
    println!(
        "toughness of the result: {} (expected 1/mu = 1/{})",
        toughness(&net).value,
        mu(&net)
    );

    let recognized = recognize_tt(&net).unwrap();
    println!(
        "recognized back: case {:?}, source tree on {} vertices, replay ok: {}",
        recognized.case_tag,
        recognized.tree.vertex_count(),
        recognized.verifies_for(&net)
    );

    // Trees themselves are TT-graphs.
    let path = Graph::path(5);
    println!(
        "P_5 recognized as {:?}, mu = {}",
        recognize_tt(&path).unwrap().case_tag,
        recognize_tt(&path).unwrap().mu
    );

    // A graph with a block bigger than a triangle is rejected with a reason.
    let diamond =
        Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 4), (3, 5)]).unwrap();
    println!(
        "diamond with pendants: {}",
        recognize_tt(&diamond).unwrap_err()
    );

    // The two-sided classification report.
    let report = check_characterization(&net).unwrap();
    println!(
        "classification on the net graph: minimal side {}, TT side {}, agree {}",
        report.minimal_side(),
        report.tt_side(),
        report.agree
    );
}
