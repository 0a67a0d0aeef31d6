//! Exhaustive invariant checks at the scales the library promises them:
//! dual-route equalities, structural properties of certificates, and
//! monotonicity of toughness, over every labeled graph or tree of the
//! stated sizes.

use rayon::prelude::*;

use tough::chordal::{
    all_simplicial_or_cut, max_pairwise_clique_intersection, maximal_cliques_chordal,
};
use tough::graph::{block_decomposition, local_connectivity, Graph};
use tough::graph6::{emit_graph6, parse_graph6};
use tough::harness::enumerate_labeled_trees;
use tough::interval::{find_asteroidal_triple, is_caterpillar};
use tough::oracle;
use tough::toughness::{find_witness_edge, is_minimally_tough, toughness};
use tough::VertexSet;

fn graphs_of_size(n: usize) -> impl ParallelIterator<Item = Graph> {
    let total = 1u64 << (n * (n - 1) / 2);
    (0..total)
        .into_par_iter()
        .map(move |mask| Graph::from_edge_mask(n, mask).expect("size in range"))
}

fn count_violations(n: usize, check: impl Fn(&Graph) -> bool + Sync) -> u64 {
    graphs_of_size(n).map(|g| u64::from(!check(&g))).sum()
}

#[test]
fn graph6_round_trips_on_every_enumerated_graph() {
    for n in 1..=7usize {
        let violations = count_violations(n, |g| {
            parse_graph6(&emit_graph6(g))
                .map(|back| back == *g)
                .unwrap_or(false)
        });
        assert_eq!(violations, 0, "graph6 round-trip failures at n = {n}");
    }
}

#[test]
fn local_connectivity_matches_separator_enumeration() {
    // For adjacent pairs, the flow-based path count must equal one plus
    // the brute-force minimum separator of the edge-deleted graph.
    for n in 2..=7usize {
        let violations = count_violations(n, |g| {
            g.edges().into_iter().all(|(u, v)| {
                let reduced = g.without_edge(u, v);
                let brute = oracle::min_uv_separator_bruteforce(&reduced, u, v)
                    .expect("nonadjacent after deletion");
                local_connectivity(g, u, v) == 1 + brute
            })
        });
        assert_eq!(violations, 0, "local connectivity mismatches at n = {n}");
    }
}

#[test]
fn block_decomposition_invariants() {
    // Every edge in exactly one block; a vertex lies in two or more blocks
    // exactly when it is a cut vertex.
    for n in 1..=6usize {
        let violations = count_violations(n, |g| {
            if !g.is_connected() {
                return true;
            }
            let d = block_decomposition(g).expect("connected");
            let block_edge_total: usize = d
                .blocks
                .iter()
                .map(|b| {
                    b.iter()
                        .map(|v| g.neighbors(v).intersection(*b).len())
                        .sum::<usize>()
                        / 2
                })
                .sum();
            if block_edge_total != g.edge_count() {
                return false;
            }
            for (u, v) in g.edges() {
                let containing = d
                    .blocks
                    .iter()
                    .filter(|b| b.contains(u) && b.contains(v))
                    .count();
                if containing != 1 {
                    return false;
                }
            }
            g.vertices().all(|v| {
                let in_blocks = d.blocks.iter().filter(|b| b.contains(v)).count();
                (in_blocks >= 2) == d.cut_vertices.contains(v)
            })
        });
        assert_eq!(violations, 0, "block invariant failures at n = {n}");
    }
}

#[test]
fn minimality_equals_witness_absence() {
    // The witness-edge search certifies exactly the non-minimal graphs.
    for n in 2..=7usize {
        let violations = count_violations(n, |g| {
            if !g.is_connected() || g.is_complete() {
                return true;
            }
            let minimal = is_minimally_tough(g)
                .expect("preconditions hold")
                .is_minimal();
            let witness = find_witness_edge(g).expect("preconditions hold");
            minimal == witness.is_none()
        });
        assert_eq!(violations, 0, "witness equivalence failures at n = {n}");
    }
}

#[test]
fn toughness_is_antitone_under_edge_deletion() {
    for n in 2..=7usize {
        let violations = count_violations(n, |g| {
            let tau = toughness(g).value;
            g.edges()
                .into_iter()
                .all(|(u, v)| toughness(&g.without_edge(u, v)).value <= tau)
        });
        assert_eq!(violations, 0, "antitone violations at n = {n}");
    }
}

#[test]
fn toughness_certificates_are_self_consistent() {
    for n in 2..=6usize {
        let violations = count_violations(n, |g| {
            let cert = toughness(g);
            match cert.tough_set {
                Some(s) => {
                    let omega = g.component_count(s);
                    omega == cert.components_after
                        && cert.value == tough::ExtendedRational::new(s.len() as u64, omega as u64)
                }
                None => g.is_complete() || !g.is_connected(),
            }
        });
        assert_eq!(violations, 0, "certificate failures at n = {n}");
    }
}

#[test]
fn weight_one_clique_trees_imply_simplicial_or_cut() {
    // If all pairwise maximal-clique intersections have size ≤ 1 (so every
    // clique tree is all-weight-1), each vertex is simplicial or cut.
    for n in 1..=7usize {
        let violations = count_violations(n, |g| {
            if !g.is_connected() || tough::is_chordal(g).is_none() {
                return true;
            }
            let bound = max_pairwise_clique_intersection(g).expect("chordal and connected");
            bound > 1 || all_simplicial_or_cut(g)
        });
        assert_eq!(violations, 0, "weight-1 implication failures at n = {n}");
    }
}

#[test]
fn maximal_cliques_are_nonnested_and_cover_edges() {
    for n in 1..=6usize {
        let violations = count_violations(n, |g| {
            if !g.is_connected() || tough::is_chordal(g).is_none() {
                return true;
            }
            let cliques = maximal_cliques_chordal(g).expect("chordal and connected");
            for (i, c) in cliques.iter().enumerate() {
                for (j, d) in cliques.iter().enumerate() {
                    if i != j && c.is_subset_of(*d) {
                        return false;
                    }
                }
            }
            g.edges()
                .into_iter()
                .all(|(u, v)| cliques.iter().any(|c| c.contains(u) && c.contains(v)))
        });
        assert_eq!(violations, 0, "clique set failures at n = {n}");
    }
}

#[test]
fn asteroidal_triples_carry_valid_witness_paths() {
    for n in 3..=6usize {
        let violations = count_violations(n, |g| match find_asteroidal_triple(g) {
            None => true,
            Some(at) => {
                let pairs = [(at.x, at.y, at.z), (at.x, at.z, at.y), (at.y, at.z, at.x)];
                !g.has_edge(at.x, at.y)
                    && !g.has_edge(at.x, at.z)
                    && !g.has_edge(at.y, at.z)
                    && at
                        .witness_paths
                        .iter()
                        .zip(pairs)
                        .all(|(p, (from, to, avoid))| {
                            oracle::validate_avoiding_path(g, p, from, to, avoid)
                        })
            }
        });
        assert_eq!(violations, 0, "asteroidal witness failures at n = {n}");
    }
}

#[test]
fn caterpillar_iff_no_subdivided_claw_on_trees() {
    for n in 1..=9usize {
        let violations = enumerate_labeled_trees(n)
            .expect("size within limits")
            .filter(|t| is_caterpillar(t) == oracle::contains_subdivided_claw(t))
            .count();
        assert_eq!(violations, 0, "caterpillar equivalence failures at n = {n}");
    }
}

#[test]
fn connectivity_lower_bound_examples() {
    // Cheap spot checks complementing the exhaustive acceptance run.
    let net = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
    assert_eq!(tough::vertex_connectivity(&net), 1);
    assert_eq!(toughness(&net).value, tough::ExtendedRational::new(1, 2));
    let c4 = Graph::cycle(4);
    assert_eq!(tough::vertex_connectivity(&c4), 2);
    assert_eq!(toughness(&c4).value, tough::ExtendedRational::from_int(1));
}

#[test]
fn tough_set_masks_are_first_in_ascending_order() {
    // Determinism contract for certificates: the reported tough set is the
    // first minimizing mask, so re-running can never change fixtures.
    for n in 2..=5usize {
        let violations = count_violations(n, |g| {
            let cert = toughness(g);
            let Some(s) = cert.tough_set else { return true };
            for mask in 0..s.bits() {
                let candidate = VertexSet::from_bits(mask);
                let omega = g.component_count(candidate);
                if omega > 1
                    && tough::ExtendedRational::new(candidate.len() as u64, omega as u64)
                        == cert.value
                {
                    return false; // an earlier mask already achieves the minimum
                }
            }
            true
        });
        assert_eq!(violations, 0, "tie-break violations at n = {n}");
    }
}
