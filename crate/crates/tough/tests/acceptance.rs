//! Acceptance suite: every classification statement and oracle equivalence
//! checked exhaustively at its stated scale, plus sanity constants and
//! performance floors. Each criterion prints one PASS/FAIL line
//! (`cargo test --test acceptance -- --nocapture` to watch them live).

use std::time::Instant;

use rayon::prelude::*;

use tough::chordal::{
    build_clique_tree, is_chordal, maximal_cliques_chordal, verify_clique_intersection,
    verify_induced_subtree,
};
use tough::graph::{vertex_connectivity, Graph};
use tough::harness::{run_sweep, SweepKind};
use tough::interval::is_interval;
use tough::oracle;
use tough::rational::ExtendedRational;
use tough::toughness::{is_minimally_tough, toughness};
use tough::ttgraph::tt_from_tree;
use tough::VertexSet;

fn verdict(number: usize, what: &str, ok: bool) {
    println!(
        "[acceptance] criterion {number} — {what}: {}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {number} failed: {what}");
}

fn graphs_of_size(n: usize) -> impl ParallelIterator<Item = Graph> {
    let total = 1u64 << (n * (n - 1) / 2);
    (0..total)
        .into_par_iter()
        .map(move |mask| Graph::from_edge_mask(n, mask).expect("size in range"))
}

#[test]
fn a1_characterization_sweep() {
    // Over all connected chordal noncomplete labeled graphs with n ≤ 7 and
    // τ ≤ 1/2, the brute-force minimality test and the TT recognizer with
    // τ = 1/μ agree on every instance, single-threaded within 10 minutes.
    let report = run_sweep(SweepKind::Main, 7, 1).expect("size within limits");
    let ok = report.passed()
        && report.counts["candidates"] > 0
        && report.counts["minimally_tough"] > 0
        && report.elapsed_ms <= 600_000;
    if !report.passed() {
        for m in &report.mismatches {
            eprintln!("  mismatch {} {}", m.graph6, m.reason);
        }
    }
    println!(
        "[acceptance]   (criterion 1: {} candidates, {} minimally tough, {} ms single-threaded)",
        report.counts["candidates"], report.counts["minimally_tough"], report.elapsed_ms
    );
    verdict(1, "characterization sweep n ≤ 7, zero mismatches", ok);
}

#[test]
fn a2_toughness_formula_sweep() {
    // τ = 1/μ exactly, for every connected noncomplete graph with n ≤ 6
    // whose vertices are all simplicial or cut.
    let report = run_sweep(SweepKind::TauMu, 6, 2).expect("size within limits");
    let ok = report.passed() && report.counts["admissible"] > 0;
    verdict(2, "τ = 1/μ sweep n ≤ 6, exact rational equality", ok);
}

#[test]
fn a3_witness_equivalence_sweep() {
    // A witness edge exists iff the graph fails the direct edge-deletion
    // minimality test, for every connected noncomplete graph with n ≤ 6.
    let report = run_sweep(SweepKind::Witness, 6, 2).expect("size within limits");
    let ok = report.passed() && report.counts["minimally_tough"] > 0;
    verdict(3, "witness-edge equivalence sweep n ≤ 6", ok);
}

#[test]
fn a4_simplicial_degree_sweep() {
    // At n ≤ 7 every minimally t-tough chordal graph with t ≤ 1/2 has all
    // simplicial vertices of degree 1, and none exist with 1/2 < t ≤ 1.
    let report = run_sweep(SweepKind::Simplicial, 7, 2).expect("size within limits");
    let ok = report.passed()
        && report.counts["tau_le_half"] > 0
        && !report.counts.contains_key("tau_in_half_one");
    verdict(
        4,
        "simplicial degrees and the empty (1/2, 1] band, n ≤ 7",
        ok,
    );
}

#[test]
fn a5_interval_caterpillar_sweep() {
    // At n ≤ 7 every minimally t-tough interval graph with t ≤ 1/2 is a
    // caterpillar.
    let report = run_sweep(SweepKind::Interval, 7, 2).expect("size within limits");
    let ok = report.passed() && report.counts["applicable"] > 0;
    verdict(5, "interval graphs are caterpillars, n ≤ 7", ok);
}

#[test]
fn a6_construction_closure() {
    // Every valid (tree, Y) instance with trees up to 9 vertices builds a
    // graph that is minimally (1/μ)-tough by brute force and is inverted
    // by the recognizer with replay identity.
    let report = run_sweep(SweepKind::Construction, 9, 2).expect("size within limits");
    let ok = report.passed()
        && report.counts["instances"] > 0
        && report.counts["instances"] == report.counts["verified"];
    println!(
        "[acceptance]   (criterion 6: {} instances over {} trees)",
        report.counts["instances"], report.counts["trees"]
    );
    verdict(6, "construction closure, trees n ≤ 9", ok);
}

#[test]
fn a7_oracle_equivalences() {
    // Four dual-route equivalences over every labeled graph with n ≤ 7:
    // chordality vs induced-cycle search, elimination-order cliques vs
    // subset enumeration, clique trees vs both property verifiers, and
    // interval recognition vs explicit model search.
    let mut ok = true;
    for n in 1..=7usize {
        let failures = graphs_of_size(n)
            .map(|g| {
                let chordal = is_chordal(&g).is_some();
                if chordal != oracle::is_chordal_bruteforce(&g) {
                    return 1u64;
                }
                if is_interval(&g) != oracle::is_interval_bruteforce(&g) {
                    return 1;
                }
                if chordal && g.is_connected() {
                    let mut fast = maximal_cliques_chordal(&g).expect("chordal and connected");
                    let mut brute = oracle::maximal_cliques_bruteforce(&g);
                    fast.sort();
                    brute.sort();
                    if fast != brute {
                        return 1;
                    }
                    let ct = build_clique_tree(&g).expect("chordal and connected");
                    if !ct.is_structurally_valid()
                        || !verify_clique_intersection(&ct)
                        || !verify_induced_subtree(&ct, &g)
                        || ct.tree_edges.iter().any(|&(_, _, w)| w < 1)
                    {
                        return 1;
                    }
                }
                0
            })
            .sum::<u64>();
        if failures > 0 {
            eprintln!("  {failures} oracle disagreements at n = {n}");
            ok = false;
        }
    }
    verdict(7, "oracle equivalences, all graphs n ≤ 7", ok);
}

#[test]
fn a8_sanity_constants() {
    // τ(K_n) = ∞ for n ≤ 8.
    let complete_ok = (1..=8).all(|n| toughness(&Graph::complete(n)).value.is_infinite());

    // τ = 0 exactly for disconnected graphs: exhaustively at n ≤ 5, plus
    // a larger spot check.
    let mut disconnected_ok = true;
    for n in 2..=5usize {
        for mask in 0..(1u64 << (n * (n - 1) / 2)) {
            let g = Graph::from_edge_mask(n, mask).expect("size in range");
            if !g.is_connected() && !toughness(&g).value.is_zero() {
                disconnected_ok = false;
            }
        }
    }
    let two_cliques = Graph::from_edges(
        10,
        (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .chain((5..10).flat_map(|u| (u + 1..10).map(move |v| (u, v)))),
    )
    .unwrap();
    disconnected_ok &= toughness(&two_cliques).value.is_zero();

    // κ(G) ≥ 2·τ(G) for every connected noncomplete graph with n ≤ 7,
    // compared as exact rationals.
    let mut connectivity_ok = true;
    for n in 2..=7usize {
        let violations = graphs_of_size(n)
            .map(|g| {
                if !g.is_connected() || g.is_complete() {
                    return 0u64;
                }
                let kappa = ExtendedRational::from_int(vertex_connectivity(&g) as u64);
                let twice_tau = toughness(&g).value.times(2);
                u64::from(kappa < twice_tau)
            })
            .sum::<u64>();
        if violations > 0 {
            eprintln!("  {violations} connectivity violations at n = {n}");
            connectivity_ok = false;
        }
    }

    verdict(
        8,
        "τ(K_n) = ∞, τ(disconnected) = 0, κ ≥ 2τ for n ≤ 7",
        complete_ok && disconnected_ok && connectivity_ok,
    );
}

/// Spider tree: vertex 0 is the center, each entry of `legs` the length
/// of one pendant path.
fn spider(legs: &[usize]) -> Graph {
    let n = 1 + legs.iter().sum::<usize>();
    let mut g = Graph::new(n).unwrap();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            g.add_edge(prev, next).unwrap();
            prev = next;
            next += 1;
        }
    }
    g
}

#[test]
fn a9_performance_floors() {
    // Exact toughness of an 18-vertex graph within 5 seconds. The input is
    // a spider tree; the enumeration cost is 2^18 subsets regardless.
    let spider18 = spider(&[6, 6, 5]);
    assert!(spider18.is_tree() && spider18.vertex_count() == 18);
    let started = Instant::now();
    let cert = toughness(&spider18);
    let toughness_elapsed = started.elapsed();
    assert_eq!(cert.value, ExtendedRational::new(1, 3));

    // Minimality of a 14-vertex TT-graph (one triangle, long pendant
    // paths) within 30 seconds.
    let spider15 = spider(&[5, 5, 4]);
    let (g14, _) = tt_from_tree(&spider15, VertexSet::singleton(0)).expect("valid case (a)");
    assert_eq!(g14.vertex_count(), 14);
    let started = Instant::now();
    let minimal = is_minimally_tough(&g14).expect("connected noncomplete");
    let minimal_elapsed = started.elapsed();
    assert!(minimal.is_minimal());

    println!(
        "[acceptance]   (criterion 9: toughness n=18 in {toughness_elapsed:?}, minimality n=14 in {minimal_elapsed:?})"
    );
    verdict(
        9,
        "toughness n=18 ≤ 5 s and minimality n=14 ≤ 30 s",
        toughness_elapsed.as_secs_f64() <= 5.0 && minimal_elapsed.as_secs_f64() <= 30.0,
    );
}
