//! Chordality recognition, maximal cliques, and verified clique trees.
//!
//! Run with `cargo run --example clique_trees`. The DOT output at the end
//! can be piped into graphviz.

use tough::chordal::{
    build_clique_tree, classify_vertex, is_chordal, max_pairwise_clique_intersection,
    verify_clique_intersection, verify_induced_subtree,
};
use tough::graph::Graph;

fn main() {
    let net = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();

    match is_chordal(&net) {
        Some(order) => println!("net graph is chordal, elimination order {:?}", order.order),
        None => println!("net graph is not chordal"),
    }
    println!("C_4 chordal: {}", is_chordal(&Graph::cycle(4)).is_some());

    let ct = build_clique_tree(&net).unwrap();
    println!("maximal cliques of the net graph:");
    for (i, c) in ct.cliques.iter().enumerate() {
        println!("  clique {i}: {c}");
    }
    for (i, j, w) in &ct.tree_edges {
        println!("  tree edge {i} -- {j}, weight {w}");
    }
    println!(
        "clique-intersection property: {}",
        verify_clique_intersection(&ct)
    );
    println!(
        "induced-subtree property: {}",
        verify_induced_subtree(&ct, &net)
    );
    println!(
        "largest pairwise clique intersection: {}",
        max_pairwise_clique_intersection(&net).unwrap()
    );

    for v in net.vertices() {
        println!("vertex {v} is {:?}", classify_vertex(&net, v));
    }

    println!("\nDOT rendering of the clique tree:\n{}", ct.to_dot());
}
