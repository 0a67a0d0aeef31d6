//! Reading and writing the two supported graph formats, plus DOT export.
//!
//! Run with `cargo run --example graph_formats`.

use tough::graph::parse_edge_list;
use tough::graph6::{emit_graph6, parse_graph6};

fn main() {
    // Edge-list text: one `u v` pair per line, optional `n <count>` header
    // for declaring isolated vertices.
    let net = parse_edge_list("0 1\n1 2\n0 2\n0 3\n1 4\n2 5").unwrap();
    println!(
        "parsed net graph: {} vertices, {} edges",
        net.vertex_count(),
        net.edge_count()
    );

    let with_isolated = parse_edge_list("n 4\n0 1").unwrap();
    println!(
        "declared-count graph: {} vertices, connected: {}",
        with_isolated.vertex_count(),
        with_isolated.is_connected()
    );

    // graph6 is the compact interchange encoding; emission is canonical.
    let g6 = emit_graph6(&net);
    println!("net graph in graph6: {g6}");
    let back = parse_graph6(&g6).unwrap();
    assert_eq!(back, net);

    // Headers from harvested files are accepted.
    let k3 = parse_graph6(">>graph6<<Bw").unwrap();
    println!("K_3 from graph6: {:?}", k3.edges());

    // Parse errors carry the offending line.
    match parse_edge_list("0 1\n1 1") {
        Ok(_) => unreachable!(),
        Err(e) => println!("expected parse failure: {e}"),
    }

    println!("\nDOT rendering:\n{}", net.to_dot());
}
