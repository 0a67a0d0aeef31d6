//! Asteroidal triples, interval recognition, and the caterpillar shape of
//! minimally tough interval graphs.
//!
//! Run with `cargo run --example interval_caterpillars`.

use tough::graph::Graph;
use tough::interval::{corollary_check, find_asteroidal_triple, is_caterpillar, is_interval};

fn main() {
    // Claw with each edge subdivided once: the smallest tree that is not
    // a caterpillar, and not an interval graph either.
    let claw2 = Graph::from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap();
    match find_asteroidal_triple(&claw2) {
        Some(at) => {
            println!(
                "subdivided claw has the asteroidal triple {{{},{},{}}}",
                at.x, at.y, at.z
            );
            for path in &at.witness_paths {
                println!("  witness path {path:?}");
            }
        }
        None => println!("subdivided claw has no asteroidal triple"),
    }

    for (name, g) in [
        ("P_6", Graph::path(6)),
        ("C_4", Graph::cycle(4)),
        ("subdivided claw", claw2.clone()),
        ("star K_{1,4}", Graph::star(4)),
    ] {
        println!(
            "{name}: interval {}, caterpillar {}",
            is_interval(&g),
            is_caterpillar(&g)
        );
    }

    // The consequence for minimally tough interval graphs: they are
    // caterpillars. P_4 satisfies the premise; the spider does not (it is
    // minimally tough but not interval).
    let spider = Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
    for (name, g) in [("P_4", Graph::path(4)), ("spider(2,2,2)", spider)] {
        let r = corollary_check(&g).unwrap();
        println!(
            "{name}: tau = {}, minimally tough {}, interval {}, applicable {}, consistent {}",
            r.tau, r.minimally_tough, r.interval, r.applicable, r.consistent
        );
    }
}
