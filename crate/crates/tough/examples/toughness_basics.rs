//! Exact toughness of a few small graphs, with the minimizing cutsets.
//!
//! Run with `cargo run --example toughness_basics`.

use tough::graph::Graph;
use tough::toughness::{is_t_tough, toughness};
use tough::ExtendedRational;

fn main() {
    // The net graph: a triangle 0,1,2 with a pendant vertex on each corner.
    let net = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();

    for (name, g) in [
        ("net graph", net),
        ("star K_{1,3}", Graph::star(3)),
        ("path P_5", Graph::path(5)),
        ("cycle C_4", Graph::cycle(4)),
        ("complete K_5", Graph::complete(5)),
        (
            "two disjoint edges",
            Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap(),
        ),
    ] {
        let cert = toughness(&g);
        match cert.tough_set {
            Some(s) => println!(
                "{name}: toughness = {}, tough set {s} leaves {} components",
                cert.value, cert.components_after
            ),
            None => println!("{name}: toughness = {}", cert.value),
        }
    }

    // Threshold queries evaluate the defining inequality exactly.
    let p3 = Graph::path(3);
    for t in [ExtendedRational::new(1, 2), ExtendedRational::new(2, 3)] {
        println!("P_3 is {t}-tough: {}", is_t_tough(&p3, t));
    }
}
