//! Exhaustive enumeration of small labeled graphs and trees, plus the
//! verification sweeps that check every classification statement on every
//! admissible instance.
//!
//! Sweeps run over labeled graphs with no isomorphism reduction: the swept
//! statements are universal, so duplication cannot hide a counterexample,
//! and skipping canonization keeps the enumeration trivial. Reports are
//! deterministic — counts are kept in ordered maps and mismatch lists are
//! sorted — so identical inputs produce byte-identical JSON up to the
//! `elapsed_ms` field.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chordal::{all_simplicial_or_cut, is_chordal, is_simplicial, maximal_cliques_chordal};
use crate::graph::{Graph, VertexSet};
use crate::graph6::emit_graph6;
use crate::interval::corollary_check;
use crate::rational::ExtendedRational;
use crate::toughness::{
    find_witness_edge, is_minimally_tough, kriesell_degree_check, toughness, MinimalToughness,
};
use crate::ttgraph::{
    check_characterization, modified_degree, mu, recognize_tt, tt_from_tree, CaseTag,
    TTDecomposition,
};

/// Largest graph enumeration size: 2^28 graphs at n = 8.
pub const MAX_GRAPH_N: usize = 8;
/// Largest tree enumeration size: 9^7 trees at n = 9.
pub const MAX_TREE_N: usize = 9;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HarnessError {
    #[error("graph enumeration supports 1..={MAX_GRAPH_N} vertices, got {0}")]
    GraphSizeOutOfRange(usize),
    #[error("tree enumeration supports 1..={MAX_TREE_N} vertices, got {0}")]
    TreeSizeOutOfRange(usize),
    #[error("sweep `{sweep}` supports n up to {max}, got {n}")]
    SweepSizeTooLarge { sweep: String, max: usize, n: usize },
}

/// All 2^(n(n−1)/2) labeled graphs on n vertices, edge-mask ascending.
pub fn enumerate_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, HarnessError> {
    if !(1..=MAX_GRAPH_N).contains(&n) {
        return Err(HarnessError::GraphSizeOutOfRange(n));
    }
    let total = 1u64 << (n * (n - 1) / 2);
    Ok((0..total).map(move |mask| Graph::from_edge_mask(n, mask).expect("size in range")))
}

fn tree_count(n: usize) -> u64 {
    match n {
        1 | 2 => 1,
        _ => (n as u64).pow(n as u32 - 2),
    }
}

/// Decodes the `index`-th tree in the base-n ordering of Prüfer sequences.
fn tree_from_index(n: usize, index: u64) -> Graph {
    if n == 1 {
        return Graph::new(1).expect("size in range");
    }
    if n == 2 {
        return Graph::path(2);
    }
    let mut degree = vec![1u32; n];
    let mut seq = Vec::with_capacity(n - 2);
    let mut rest = index;
    for _ in 0..n - 2 {
        let digit = (rest % n as u64) as usize;
        rest /= n as u64;
        seq.push(digit);
        degree[digit] += 1;
    }
    let mut g = Graph::new(n).expect("size in range");
    for &a in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("leaf exists");
        g.add_edge(leaf, a).expect("ids in range");
        degree[leaf] = 0;
        degree[a] -= 1;
    }
    let mut ends = (0..n).filter(|&v| degree[v] == 1);
    let (u, v) = (ends.next().unwrap(), ends.next().unwrap());
    g.add_edge(u, v).expect("ids in range");
    g
}

/// All n^(n−2) labeled trees on n vertices (one tree for n ≤ 2), in
/// Prüfer-sequence order.
pub fn enumerate_labeled_trees(n: usize) -> Result<impl Iterator<Item = Graph>, HarnessError> {
    if !(1..=MAX_TREE_N).contains(&n) {
        return Err(HarnessError::TreeSizeOutOfRange(n));
    }
    Ok((0..tree_count(n)).map(move |i| tree_from_index(n, i)))
}

/// A graph that falsified the swept statement, pinned by its graph6
/// encoding so the failure is re-checkable in isolation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mismatch {
    pub graph6: String,
    pub reason: String,
}

/// One minimally tough graph encountered during a sweep.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MinimalToughRow {
    pub graph6: String,
    pub tau: (u64, u64),
    pub mu: usize,
    pub is_tt: bool,
    pub case_tag: Option<CaseTag>,
}

/// Aggregated result of one sweep. The JSON form is
/// `{sweep, n, counts{...}, mismatches[{graph6, reason}], elapsed_ms}`;
/// the CSV rows of minimally tough graphs are written separately.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepReport {
    pub sweep: String,
    /// Inclusive upper bound; the sweep ran over sizes `1..=n`.
    pub n: usize,
    pub counts: BTreeMap<String, u64>,
    pub mismatches: Vec<Mismatch>,
    pub elapsed_ms: u64,
    #[serde(skip)]
    pub rows: Vec<MinimalToughRow>,
}

impl SweepReport {
    /// Did the swept statement hold on every instance?
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// CSV of the minimally tough graphs found:
    /// `graph6,tau_num,tau_den,mu,is_tt,case_tag`.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "graph6,tau_num,tau_den,mu,is_tt,case_tag")?;
        for row in &self.rows {
            let case = match row.case_tag {
                Some(CaseTag::A) => "a",
                Some(CaseTag::B) => "b",
                Some(CaseTag::PureTree) => "pure_tree",
                None => "",
            };
            writeln!(
                w,
                "{},{},{},{},{},{}",
                row.graph6, row.tau.0, row.tau.1, row.mu, row.is_tt, case
            )?;
        }
        Ok(())
    }
}

/// Per-worker accumulator merged deterministically at the end.
#[derive(Default)]
struct Acc {
    counts: BTreeMap<String, u64>,
    mismatches: Vec<Mismatch>,
    rows: Vec<MinimalToughRow>,
}

impl Acc {
    fn bump(&mut self, key: &str) {
        *self.counts.entry(key.to_string()).or_insert(0) += 1;
    }

    fn mismatch(&mut self, g: &Graph, reason: impl Into<String>) {
        self.mismatches.push(Mismatch {
            graph6: emit_graph6(g),
            reason: reason.into(),
        });
    }

    fn merge(mut self, other: Acc) -> Acc {
        for (k, v) in other.counts {
            *self.counts.entry(k).or_insert(0) += v;
        }
        self.mismatches.extend(other.mismatches);
        self.rows.extend(other.rows);
        self
    }

    fn into_report(mut self, sweep: &str, n: usize, started: Instant) -> SweepReport {
        self.mismatches.sort();
        self.mismatches.dedup();
        self.rows.sort();
        self.rows.dedup();
        SweepReport {
            sweep: sweep.to_string(),
            n,
            counts: self.counts,
            mismatches: self.mismatches,
            elapsed_ms: started.elapsed().as_millis() as u64,
            rows: self.rows,
        }
    }
}

/// Folds `step` over `0..total`, sequentially for `jobs <= 1` and on a
/// dedicated thread pool otherwise. Accumulators must merge to the same
/// result regardless of the partition, which all sweeps guarantee by
/// sorting their mismatch and row lists afterwards.
fn par_fold<A, I, S, M>(total: u64, jobs: usize, init: I, step: S, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Send + Sync,
    S: Fn(A, u64) -> A + Send + Sync,
    M: Fn(A, A) -> A + Send + Sync,
{
    if jobs <= 1 {
        (0..total).fold(init(), step)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            (0..total)
                .into_par_iter()
                .fold(&init, &step)
                .reduce(&init, merge)
        })
    }
}

fn sweep_graphs<F>(name: &str, n_max: usize, jobs: usize, check: F) -> SweepReport
where
    F: Fn(&Graph, &mut Acc) + Send + Sync,
{
    let started = Instant::now();
    let mut acc = Acc::default();
    for n in 1..=n_max {
        let total = 1u64 << (n * (n - 1) / 2);
        let sub = par_fold(
            total,
            jobs,
            Acc::default,
            |mut a, mask| {
                let g = Graph::from_edge_mask(n, mask).expect("size in range");
                a.bump("graphs");
                check(&g, &mut a);
                a
            },
            Acc::merge,
        );
        acc = acc.merge(sub);
    }
    acc.into_report(name, n_max, started)
}

fn minimal_row(g: &Graph, tau: ExtendedRational, tt: Option<&TTDecomposition>) -> MinimalToughRow {
    MinimalToughRow {
        graph6: emit_graph6(g),
        tau: tau
            .as_ratio()
            .expect("minimally tough graphs have finite toughness"),
        mu: mu(g),
        is_tt: tt.is_some(),
        case_tag: tt.map(|d| d.case_tag),
    }
}

/// Central sweep: over connected chordal noncomplete graphs with
/// τ ≤ 1/2, "minimally t-tough" (brute force) must agree with "TT-graph
/// with τ = 1/μ" (recognizer) on every instance.
pub fn sweep_main(n_max: usize, jobs: usize) -> Result<SweepReport, HarnessError> {
    check_limit("main", n_max, MAX_GRAPH_N)?;
    Ok(sweep_graphs("main", n_max, jobs, |g, a| {
        if !g.is_connected() {
            return;
        }
        a.bump("connected");
        if is_chordal(g).is_none() {
            return;
        }
        a.bump("chordal");
        if g.is_complete() {
            return;
        }
        let report = check_characterization(g).expect("preconditions hold");
        if report.tau > ExtendedRational::new(1, 2) {
            a.bump("tau_above_half");
            return;
        }
        a.bump("candidates");
        if report.minimally_tough {
            a.bump("minimally_tough");
            a.bump(&format!("minimal_tau_{}", report.tau));
            a.rows.push(minimal_row(g, report.tau, report.tt.as_ref()));
        }
        if report.tt.is_some() {
            a.bump("tt_recognized");
        }
        if report.agree {
            a.bump("agreements");
        } else {
            a.mismatch(
                g,
                format!(
                    "classification sides disagree: minimal={}, tt={}, tau={}",
                    report.minimal_side(),
                    report.tt_side(),
                    report.tau
                ),
            );
        }
    }))
}

/// τ = 1/μ on every connected noncomplete graph whose vertices are all
/// simplicial or cut, with τ computed by brute force.
pub fn sweep_tau_mu(n_max: usize, jobs: usize) -> Result<SweepReport, HarnessError> {
    check_limit("tau-mu", n_max, MAX_GRAPH_N)?;
    Ok(sweep_graphs("tau-mu", n_max, jobs, |g, a| {
        if !g.is_connected() || g.is_complete() {
            return;
        }
        a.bump("connected_noncomplete");
        if !all_simplicial_or_cut(g) {
            return;
        }
        a.bump("admissible");
        let brute = toughness(g).value;
        match crate::ttgraph::toughness_via_mu(g) {
            Ok(v) if v == brute => a.bump("agreements"),
            Ok(v) => a.mismatch(g, format!("1/mu = {v} but brute-force tau = {brute}")),
            Err(e) => a.mismatch(g, format!("formula precondition rejected: {e}")),
        }
    }))
}

/// A witness edge exists if and only if the graph fails the direct
/// edge-deletion minimality test. The doubly exponential inner loop caps
/// this sweep at n = 6.
pub fn sweep_witness(n_max: usize, jobs: usize) -> Result<SweepReport, HarnessError> {
    check_limit("witness", n_max, 6)?;
    Ok(sweep_graphs("witness", n_max, jobs, |g, a| {
        if !g.is_connected() || g.is_complete() {
            return;
        }
        a.bump("connected_noncomplete");
        let witness = find_witness_edge(g).expect("preconditions hold");
        let minimality = is_minimally_tough(g).expect("preconditions hold");
        if let MinimalToughness::Minimal { t } = minimality {
            a.bump("minimally_tough");
            a.rows
                .push(minimal_row(g, t, recognize_tt(g).ok().as_ref()));
        }
        if witness.is_some() {
            a.bump("witness_found");
        }
        if witness.is_some() == !minimality.is_minimal() {
            a.bump("agreements");
        } else {
            a.mismatch(
                g,
                format!(
                    "witness edge {:?} vs minimality {:?}",
                    witness.map(|w| w.edge),
                    minimality.is_minimal()
                ),
            );
        }
    }))
}

/// Minimally tough chordal graphs: with t ≤ 1/2 every simplicial vertex
/// has degree 1, and none exist at all with 1/2 < t ≤ 1.
pub fn sweep_simplicial(n_max: usize, jobs: usize) -> Result<SweepReport, HarnessError> {
    check_limit("simplicial", n_max, MAX_GRAPH_N)?;
    let half = ExtendedRational::new(1, 2);
    let one = ExtendedRational::from_int(1);
    Ok(sweep_graphs("simplicial", n_max, jobs, move |g, a| {
        if !g.is_connected() || g.is_complete() || is_chordal(g).is_none() {
            return;
        }
        a.bump("chordal_noncomplete");
        let t = match is_minimally_tough(g).expect("preconditions hold") {
            MinimalToughness::Minimal { t } => t,
            MinimalToughness::NotMinimal { .. } => return,
        };
        a.bump("minimally_tough_chordal");
        a.rows
            .push(minimal_row(g, t, recognize_tt(g).ok().as_ref()));
        if t <= half {
            a.bump("tau_le_half");
            for v in g.vertices() {
                if is_simplicial(g, v) && g.degree(v) != 1 {
                    a.mismatch(
                        g,
                        format!("simplicial vertex {v} has degree {} != 1", g.degree(v)),
                    );
                    return;
                }
            }
            a.bump("simplicial_degrees_ok");
        } else if t <= one {
            a.bump("tau_in_half_one");
            a.mismatch(
                g,
                format!("minimally tough chordal graph with tau = {t} in (1/2, 1]"),
            );
        } else {
            a.bump("tau_above_one");
        }
    }))
}

/// Every minimally t-tough interval graph with t ≤ 1/2 is a caterpillar.
pub fn sweep_interval(n_max: usize, jobs: usize) -> Result<SweepReport, HarnessError> {
    check_limit("interval", n_max, MAX_GRAPH_N)?;
    Ok(sweep_graphs("interval", n_max, jobs, |g, a| {
        if !g.is_connected() {
            return;
        }
        a.bump("connected");
        let r = corollary_check(g).expect("connected");
        if r.interval {
            a.bump("interval");
        }
        if r.minimally_tough {
            a.rows
                .push(minimal_row(g, r.tau, recognize_tt(g).ok().as_ref()));
        }
        if r.applicable {
            a.bump("applicable");
            if r.caterpillar {
                a.bump("caterpillars_ok");
            }
        }
        if !r.consistent {
            a.mismatch(
                g,
                format!(
                    "minimally {}-tough interval graph is not a caterpillar",
                    r.tau
                ),
            );
        }
    }))
}

/// Every minimally tough graph has a vertex of degree ⌈2t⌉ (the
/// degree-witness conjecture, checked empirically at desk scale).
pub fn sweep_kriesell(n_max: usize, jobs: usize) -> Result<SweepReport, HarnessError> {
    check_limit("kriesell", n_max, MAX_GRAPH_N)?;
    Ok(sweep_graphs("kriesell", n_max, jobs, |g, a| {
        if !g.is_connected() || g.is_complete() {
            return;
        }
        a.bump("connected_noncomplete");
        let t = match is_minimally_tough(g).expect("preconditions hold") {
            MinimalToughness::Minimal { t } => t,
            MinimalToughness::NotMinimal { .. } => return,
        };
        a.bump("minimally_tough");
        a.rows
            .push(minimal_row(g, t, recognize_tt(g).ok().as_ref()));
        if kriesell_degree_check(g).expect("minimally tough") {
            a.bump("degree_witness");
        } else {
            a.mismatch(
                g,
                format!(
                    "no vertex of degree {} (= ceil(2t), t = {t})",
                    t.ceil_of_double()
                ),
            );
        }
    }))
}

/// Construction closure: every valid (tree, Y) instance yields a graph
/// that is connected, chordal, all-simplicial-or-cut, triangle-bounded,
/// minimally (1/μ)-tough by brute force, degree-1-bearing, and inverted
/// by the recognizer with replay identity.
pub fn sweep_construction(n_max: usize, jobs: usize) -> Result<SweepReport, HarnessError> {
    check_limit("construction", n_max, MAX_TREE_N)?;
    let started = Instant::now();
    let mut acc = Acc::default();
    for n in 1..=n_max {
        let sub = par_fold(
            tree_count(n),
            jobs,
            Acc::default,
            move |mut a, index| {
                let tree = tree_from_index(n, index);
                a.bump("trees");
                if tree.max_degree() < 3 {
                    return a;
                }
                a.bump("trees_delta_ge_3");
                let degree3: Vec<usize> =
                    tree.vertices().filter(|&v| tree.degree(v) == 3).collect();
                for ymask in 0u64..(1 << degree3.len()) {
                    let y: VertexSet = degree3
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| ymask >> i & 1 == 1)
                        .map(|(_, &v)| v)
                        .collect();
                    let (g, dec) = match tt_from_tree(&tree, y) {
                        Ok(built) => built,
                        Err(_) => continue, // not a valid Y for this tree
                    };
                    a.bump("instances");
                    if y.is_empty() {
                        a.bump("y_empty");
                    } else {
                        a.bump(match dec.case_tag {
                            CaseTag::A => "case_a",
                            CaseTag::B => "case_b",
                            CaseTag::PureTree => unreachable!("construction never tags pure_tree"),
                        });
                    }
                    verify_construction(&g, &dec, &mut a);
                }
                a
            },
            Acc::merge,
        );
        acc = acc.merge(sub);
    }
    Ok(acc.into_report("construction", n_max, started))
}

fn verify_construction(g: &Graph, dec: &TTDecomposition, a: &mut Acc) {
    if !g.is_connected() {
        a.mismatch(g, "constructed graph is disconnected");
        return;
    }
    if is_chordal(g).is_none() {
        a.mismatch(g, "constructed graph is not chordal");
        return;
    }
    if !all_simplicial_or_cut(g) {
        a.mismatch(
            g,
            "constructed graph has a vertex neither simplicial nor cut",
        );
        return;
    }
    match maximal_cliques_chordal(g) {
        Ok(cliques) if cliques.iter().all(|c| c.len() <= 3) => {}
        _ => {
            a.mismatch(g, "constructed graph has a clique larger than a triangle");
            return;
        }
    }
    let tau = toughness(g).value;
    if tau != ExtendedRational::new(1, dec.mu as u64) {
        a.mismatch(g, format!("tau = {tau} but 1/mu = 1/{}", dec.mu));
        return;
    }
    match is_minimally_tough(g) {
        Ok(m) if m.is_minimal() => {}
        _ => {
            a.mismatch(g, "constructed graph is not minimally tough");
            return;
        }
    }
    match recognize_tt(g) {
        Ok(d2) if d2.verifies_for(g) && d2.mu == dec.mu => {}
        Ok(_) => {
            a.mismatch(g, "recognizer certificate fails replay or mu check");
            return;
        }
        Err(r) => {
            a.mismatch(g, format!("recognizer rejected a constructed graph: {r}"));
            return;
        }
    }
    if !g.vertices().any(|v| g.degree(v) == 1) {
        a.mismatch(g, "constructed graph has no degree-1 vertex");
        return;
    }
    for v in g.vertices() {
        let triangles = dec
            .triangle_map
            .iter()
            .filter(|t| t.vertices.contains(&v))
            .count();
        if modified_degree(g, v) != g.degree(v) - triangles {
            a.mismatch(g, format!("md({v}) != degree({v}) - triangle count at {v}"));
            return;
        }
    }
    a.bump("verified");
}

fn check_limit(sweep: &str, n: usize, max: usize) -> Result<(), HarnessError> {
    if n == 0 || n > max {
        return Err(HarnessError::SweepSizeTooLarge {
            sweep: sweep.to_string(),
            max,
            n,
        });
    }
    Ok(())
}

/// The named sweeps exposed to the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepKind {
    Main,
    TauMu,
    Witness,
    Simplicial,
    Interval,
    Kriesell,
    Construction,
}

impl SweepKind {
    pub const ALL: [SweepKind; 7] = [
        SweepKind::Main,
        SweepKind::TauMu,
        SweepKind::Witness,
        SweepKind::Simplicial,
        SweepKind::Interval,
        SweepKind::Kriesell,
        SweepKind::Construction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SweepKind::Main => "main",
            SweepKind::TauMu => "tau-mu",
            SweepKind::Witness => "witness",
            SweepKind::Simplicial => "simplicial",
            SweepKind::Interval => "interval",
            SweepKind::Kriesell => "kriesell",
            SweepKind::Construction => "construction",
        }
    }

    pub fn max_n(self) -> usize {
        match self {
            SweepKind::Witness => 6,
            SweepKind::Construction => MAX_TREE_N,
            _ => MAX_GRAPH_N,
        }
    }

    /// Default size: sweeps with an inner per-edge loop stay at 6, the
    /// single-pass τ = 1/μ sweep at 7, the tree pipeline at 8. Larger
    /// sizes (n = 8 means ~2.7·10^8 graphs) must be requested explicitly.
    pub fn default_n(self) -> usize {
        match self {
            SweepKind::TauMu => 7,
            SweepKind::Construction => 8,
            _ => 6,
        }
    }
}

impl std::str::FromStr for SweepKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SweepKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = SweepKind::ALL.iter().map(|k| k.name()).collect();
                format!("unknown sweep {s:?}; expected one of {}", names.join(", "))
            })
    }
}

impl std::fmt::Display for SweepKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

pub fn run_sweep(kind: SweepKind, n_max: usize, jobs: usize) -> Result<SweepReport, HarnessError> {
    match kind {
        SweepKind::Main => sweep_main(n_max, jobs),
        SweepKind::TauMu => sweep_tau_mu(n_max, jobs),
        SweepKind::Witness => sweep_witness(n_max, jobs),
        SweepKind::Simplicial => sweep_simplicial(n_max, jobs),
        SweepKind::Interval => sweep_interval(n_max, jobs),
        SweepKind::Kriesell => sweep_kriesell(n_max, jobs),
        SweepKind::Construction => sweep_construction(n_max, jobs),
    }
}
