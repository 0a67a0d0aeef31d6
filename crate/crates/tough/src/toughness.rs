//! Exact toughness, tough sets, minimal toughness, and the witness-edge
//! characterization of non-minimality.
//!
//! Toughness is computed by plain exhaustive enumeration of all 2^n vertex
//! subsets with exact rational arithmetic — the enumeration is the
//! correctness oracle everything else in the crate is measured against, so
//! it stays unpruned. The minimality test does terminate each per-edge
//! scan at the first violating cutset, which is exact: it answers
//! "is τ(G−e) < t" rather than computing τ(G−e).

use serde::de;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{local_connectivity, Graph, VertexSet};
use crate::rational::ExtendedRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ToughnessError {
    #[error("operation undefined on complete graphs")]
    Complete,
    #[error("operation undefined on disconnected graphs")]
    Disconnected,
    #[error("graph is not minimally tough (edge ({0}, {1}) can be removed)")]
    NotMinimallyTough(usize, usize),
}

/// Toughness of a graph together with an optimal cutset when one exists.
///
/// `tough_set` is the first minimizing cutset in ascending bit-mask order;
/// for finite nonzero values `component_count(G − tough_set)` equals
/// `components_after` and the ratio |S| / ω reproduces `value` exactly.
/// Complete graphs carry `Infinity` and disconnected graphs `0`, both with
/// no tough set; `components_after` is then the component count of the
/// intact graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToughnessCertificate {
    pub value: ExtendedRational,
    pub tough_set: Option<VertexSet>,
    pub components_after: usize,
}

/// τ(G) = min |S| / ω(G−S) over all cutsets S, by exhaustive enumeration.
pub fn toughness(g: &Graph) -> ToughnessCertificate {
    if g.is_complete() {
        return ToughnessCertificate {
            value: ExtendedRational::infinity(),
            tough_set: None,
            components_after: g.component_count(VertexSet::EMPTY),
        };
    }
    if !g.is_connected() {
        return ToughnessCertificate {
            value: ExtendedRational::zero(),
            tough_set: None,
            components_after: g.component_count(VertexSet::EMPTY),
        };
    }
    let n = g.vertex_count();
    let mut best: Option<(usize, usize, u64)> = None; // (|S|, ω, mask)
    for mask in 0u64..(1 << n) {
        let s = VertexSet::from_bits(mask);
        let omega = g.component_count(s);
        if omega <= 1 {
            continue;
        }
        let size = s.len();
        let better = match best {
            None => true,
            // size/omega < best_size/best_omega, cross-multiplied.
            Some((bs, bo, _)) => (size as u64) * (bo as u64) < (bs as u64) * (omega as u64),
        };
        if better {
            best = Some((size, omega, mask));
        }
    }
    let (size, omega, mask) = best.expect("connected noncomplete graphs have a cutset");
    ToughnessCertificate {
        value: ExtendedRational::new(size as u64, omega as u64),
        tough_set: Some(VertexSet::from_bits(mask)),
        components_after: omega,
    }
}

/// Does every cutset S satisfy |S| ≥ t · ω(G−S)? Complete graphs have no
/// cutset and are t-tough for every t.
pub fn is_t_tough(g: &Graph, t: ExtendedRational) -> bool {
    assert!(t.is_finite(), "t must be finite");
    let n = g.vertex_count();
    let (num, den) = t.as_ratio().expect("finite");
    for mask in 0u64..(1 << n) {
        let s = VertexSet::from_bits(mask);
        let omega = g.component_count(s);
        if omega <= 1 {
            continue;
        }
        // |S| < t·ω  ⟺  |S|·den < num·ω
        if (s.len() as u128) * (den as u128) < (num as u128) * (omega as u128) {
            return false;
        }
    }
    true
}

/// Result of the single-edge-deletion minimality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinimalToughness {
    /// Deleting any edge strictly lowers toughness; `t` is τ(G).
    Minimal { t: ExtendedRational },
    /// Deleting `edge` keeps toughness at `toughness_without_edge` ≥ τ(G).
    NotMinimal {
        edge: (usize, usize),
        toughness_without_edge: ExtendedRational,
    },
}

impl MinimalToughness {
    pub fn is_minimal(&self) -> bool {
        matches!(self, MinimalToughness::Minimal { .. })
    }
}

// JSON form: {"minimal": true, "t": R} or
// {"minimal": false, "edge": [u, v], "toughness_without_edge": R}.
impl Serialize for MinimalToughness {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            MinimalToughness::Minimal { t } => {
                let mut s = serializer.serialize_struct("MinimalToughness", 2)?;
                s.serialize_field("minimal", &true)?;
                s.serialize_field("t", t)?;
                s.end()
            }
            MinimalToughness::NotMinimal {
                edge,
                toughness_without_edge,
            } => {
                let mut s = serializer.serialize_struct("MinimalToughness", 3)?;
                s.serialize_field("minimal", &false)?;
                s.serialize_field("edge", edge)?;
                s.serialize_field("toughness_without_edge", toughness_without_edge)?;
                s.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for MinimalToughness {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            minimal: bool,
            t: Option<ExtendedRational>,
            edge: Option<(usize, usize)>,
            toughness_without_edge: Option<ExtendedRational>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.minimal {
            Ok(MinimalToughness::Minimal {
                t: raw.t.ok_or_else(|| de::Error::missing_field("t"))?,
            })
        } else {
            Ok(MinimalToughness::NotMinimal {
                edge: raw.edge.ok_or_else(|| de::Error::missing_field("edge"))?,
                toughness_without_edge: raw
                    .toughness_without_edge
                    .ok_or_else(|| de::Error::missing_field("toughness_without_edge"))?,
            })
        }
    }
}

/// Is there a cutset of `g` witnessing τ(g) < t? Early-exits on the first
/// violation, which makes the common "toughness drops" answer cheap.
fn toughness_drops_below(g: &Graph, t: ExtendedRational) -> bool {
    !is_t_tough(g, t)
}

/// Tests whether G is minimally t-tough: τ(G) = t and deleting any single
/// edge strictly lowers the toughness. Undefined (error) for complete and
/// disconnected graphs.
pub fn is_minimally_tough(g: &Graph) -> Result<MinimalToughness, ToughnessError> {
    if g.is_complete() {
        return Err(ToughnessError::Complete);
    }
    if !g.is_connected() {
        return Err(ToughnessError::Disconnected);
    }
    let t = toughness(g).value;
    for (u, v) in g.edges() {
        let reduced = g.without_edge(u, v);
        if !toughness_drops_below(&reduced, t) {
            return Ok(MinimalToughness::NotMinimal {
                edge: (u, v),
                toughness_without_edge: toughness(&reduced).value,
            });
        }
    }
    Ok(MinimalToughness::Minimal { t })
}

/// Certificate that one edge satisfies both witness conditions for
/// non-minimality, or pins the cutset that defeats condition (b).
///
/// Reports are only built for edges that already pass the path-count
/// condition (a), so `failing_cutset` is absent exactly when the edge is a
/// full witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub edge: (usize, usize),
    /// Internally vertex-disjoint u–v paths, the uv edge included.
    pub path_count: usize,
    /// Number of qualifying cutsets inspected for condition (b).
    pub checked_cutsets: u64,
    pub failing_cutset: Option<VertexSet>,
}

/// Evaluates the witness conditions for a single edge `uv` at t = τ(G):
///
/// (a) there are at least 2t + 1 internally vertex-disjoint u–v paths
///     (the uv edge included);
/// (b) every cutset S of G that also separates u from v in G − uv
///     satisfies |S| ≥ (ω(G−S) + 1)·t, with ω taken in G.
///
/// Returns `None` when (a) fails; otherwise a report whose
/// `failing_cutset` is the first subset (ascending mask order) violating
/// (b), if any. The quantifier in (b) runs literally over all subsets of
/// V∖{u,v}, not only minimal ones.
pub fn witness_edge_report(
    g: &Graph,
    u: usize,
    v: usize,
) -> Result<Option<WitnessReport>, ToughnessError> {
    if g.is_complete() {
        return Err(ToughnessError::Complete);
    }
    if !g.is_connected() {
        return Err(ToughnessError::Disconnected);
    }
    let t = toughness(g).value;
    Ok(witness_edge_report_at(g, u, v, t))
}

fn witness_edge_report_at(
    g: &Graph,
    u: usize,
    v: usize,
    t: ExtendedRational,
) -> Option<WitnessReport> {
    debug_assert!(g.has_edge(u, v));
    let (num, den) = t
        .as_ratio()
        .expect("connected noncomplete graphs have finite toughness");
    let path_count = local_connectivity(g, u, v);
    // (a): path_count ≥ 2t + 1 ⟺ path_count·den ≥ 2·num + den.
    if (path_count as u128) * (den as u128) < 2 * num as u128 + den as u128 {
        return None;
    }
    let reduced = g.without_edge(u, v);
    let n = g.vertex_count();
    let candidates = g.all_vertices().without(u).without(v);
    let mut checked = 0u64;
    let mut failing = None;
    for mask in 0u64..(1 << n) {
        let s = VertexSet::from_bits(mask);
        if !s.is_subset_of(candidates) {
            continue;
        }
        // Cutset of G...
        let omega = g.component_count(s);
        if omega <= 1 {
            continue;
        }
        // ...that separates u from v in G − uv.
        if reduced.reachable_from(u, s).contains(v) {
            continue;
        }
        checked += 1;
        // |S| ≥ (ω + 1)·t ⟺ |S|·den ≥ (ω + 1)·num.
        if (s.len() as u128) * (den as u128) < (omega as u128 + 1) * (num as u128) {
            failing = Some(s);
            break;
        }
    }
    Some(WitnessReport {
        edge: (u, v),
        path_count,
        checked_cutsets: checked,
        failing_cutset: failing,
    })
}

/// Scans edges in ascending order for one satisfying both witness
/// conditions. Such an edge exists if and only if the graph is *not*
/// minimally τ(G)-tough; `None` certifies minimality.
pub fn find_witness_edge(g: &Graph) -> Result<Option<WitnessReport>, ToughnessError> {
    if g.is_complete() {
        return Err(ToughnessError::Complete);
    }
    if !g.is_connected() {
        return Err(ToughnessError::Disconnected);
    }
    let t = toughness(g).value;
    for (u, v) in g.edges() {
        if let Some(report) = witness_edge_report_at(g, u, v, t) {
            if report.failing_cutset.is_none() {
                return Ok(Some(report));
            }
        }
    }
    Ok(None)
}

/// Does some vertex have degree exactly ⌈2t⌉? Requires the graph to be
/// minimally tough (the degree-witness statement is about those graphs).
pub fn kriesell_degree_check(g: &Graph) -> Result<bool, ToughnessError> {
    match is_minimally_tough(g)? {
        MinimalToughness::Minimal { t } => {
            let target = t.ceil_of_double() as usize;
            Ok(g.vertices().any(|v| g.degree(v) == target))
        }
        MinimalToughness::NotMinimal { edge, .. } => {
            Err(ToughnessError::NotMinimallyTough(edge.0, edge.1))
        }
    }
}
