//! TT-graphs: construction from trees, recognition with replayable
//! certificates, and the toughness-vs-modified-degree machinery.
//!
//! A TT-graph arises from a tree with maximum degree Δ ≥ 3 by deleting an
//! independent set Y of degree-3 vertices (all at once) and joining each
//! deleted vertex's three neighbors into a triangle, where either
//!
//!   (a) Δ = 3, Y is *all* degree-3 vertices, and every neighbor of Y has
//!       degree 2, or
//!   (b) Y is any subset of the degree-3 vertices (possibly empty) and
//!       every neighbor of Y has degree Δ.
//!
//! Trees on at least three vertices count as TT-graphs in their own right
//! (`CaseTag::PureTree`), which keeps paths inside the classification even
//! though the construction itself needs Δ ≥ 3.
//!
//! Recognition goes through a decidable certificate instead of trying
//! source trees: every block must be an edge or a triangle, every vertex
//! in a triangle must have maximal modified degree, and the graph must be
//! connected and noncomplete. The recognizer then rebuilds a source tree
//! by swapping each triangle for a claw on a fresh center and *replays*
//! the construction, accepting only if the replay reproduces the input
//! graph exactly.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chordal::{classify_vertex, is_chordal, VertexClass};
use crate::graph::{block_decomposition, Graph, VertexSet};
use crate::rational::ExtendedRational;
use crate::toughness::{is_minimally_tough, toughness};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TtError {
    #[error("input is not a tree")]
    NotATree,
    #[error("tree has maximum degree {0}, need at least 3")]
    MaxDegreeBelowThree(usize),
    #[error("removed vertex {0} is not in the tree")]
    RemovedVertexOutOfRange(usize),
    #[error("removed vertex {vertex} has degree {degree}, need exactly 3")]
    RemovedVertexDegreeNotThree { vertex: usize, degree: usize },
    #[error("removed vertices {0} and {1} are adjacent")]
    RemovedSetNotIndependent(usize, usize),
    #[error(
        "neighbor {neighbor} of removed vertex {removed} has degree {degree}; \
         neither construction case applies"
    )]
    NeighborDegreeCondition {
        removed: usize,
        neighbor: usize,
        degree: usize,
    },
    #[error("vertex {0} is neither simplicial nor a cut vertex")]
    NotSimplicialOrCut(usize),
    #[error("graph is complete")]
    Complete,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not chordal")]
    NotChordal,
}

/// Why a graph was rejected by [`recognize_tt`]. Machine-readable; the
/// JSON form tags the variant under `"reason"`.
#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum TtRejection {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is complete")]
    Complete,
    #[error("block {block} is neither an edge nor a triangle")]
    BadBlock { block: VertexSet },
    #[error("triangle vertex {vertex} has modified degree {md} < maximum {mu}")]
    NonMaximalModifiedDegree { vertex: usize, md: usize, mu: usize },
    #[error("source tree needs {needed} vertices, beyond the 64-vertex representation")]
    TreeTooLarge { needed: usize },
    #[error("replaying the reconstructed tree did not reproduce the graph")]
    ReplayMismatch,
}

/// md(v) = ω(G − v), the number of components after deleting `v`.
pub fn modified_degree(g: &Graph, v: usize) -> usize {
    g.component_count(VertexSet::singleton(v))
}

/// μ(G), the maximum modified degree.
pub fn mu(g: &Graph) -> usize {
    g.vertices()
        .map(|v| modified_degree(g, v))
        .max()
        .unwrap_or(0)
}

/// τ(G) = 1/μ(G) for connected noncomplete graphs in which every vertex is
/// simplicial or a cut vertex. The precondition is checked and violations
/// name an offending vertex.
pub fn toughness_via_mu(g: &Graph) -> Result<ExtendedRational, TtError> {
    if !g.is_connected() {
        return Err(TtError::Disconnected);
    }
    if g.is_complete() {
        return Err(TtError::Complete);
    }
    for v in g.vertices() {
        if classify_vertex(g, v) == VertexClass::Neither {
            return Err(TtError::NotSimplicialOrCut(v));
        }
    }
    Ok(ExtendedRational::new(1, mu(g) as u64))
}

/// Which construction case produced a TT-graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    A,
    B,
    PureTree,
}

/// One deleted tree vertex and the triangle it became.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleAssignment {
    /// Vertex id in the tree's id space.
    pub center: usize,
    /// The triangle's vertex ids in the constructed graph, ascending.
    pub vertices: [usize; 3],
}

/// Certificate of TT-graph membership: the source tree, the deleted set,
/// and the map from deleted tree vertices to graph triangles. Replaying
/// the construction on `(tree, removed)` reproduces the graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TTDecomposition {
    pub tree: Graph,
    /// The deleted set Y, in the tree's id space.
    pub removed: VertexSet,
    #[serde(rename = "triangles")]
    pub triangle_map: Vec<TriangleAssignment>,
    #[serde(rename = "case")]
    pub case_tag: CaseTag,
    pub mu: usize,
}

impl TTDecomposition {
    /// Re-runs the construction this decomposition certifies.
    pub fn replay(&self) -> Result<Graph, TtError> {
        match self.case_tag {
            CaseTag::PureTree => Ok(self.tree.clone()),
            CaseTag::A | CaseTag::B => tt_from_tree(&self.tree, self.removed).map(|(g, _)| g),
        }
    }

    /// Full certificate check against the graph it is supposed to describe.
    pub fn verifies_for(&self, g: &Graph) -> bool {
        match self.replay() {
            Ok(replayed) => replayed == *g && self.mu == mu(g),
            Err(_) => false,
        }
    }
}

/// Applies the tree-to-triangles construction: deletes all of `y` in one
/// step and joins each deleted vertex's three neighbors into a triangle.
/// Surviving tree vertices are compacted into `0..n-|Y|` in id order, so
/// the identity map applies whenever `y` occupies the highest ids.
///
/// All preconditions are validated and violations return distinct errors.
pub fn tt_from_tree(tree: &Graph, y: VertexSet) -> Result<(Graph, TTDecomposition), TtError> {
    if !tree.is_tree() {
        return Err(TtError::NotATree);
    }
    let delta = tree.max_degree();
    if delta < 3 {
        return Err(TtError::MaxDegreeBelowThree(delta));
    }
    if !y.is_subset_of(tree.all_vertices()) {
        let v = y.difference(tree.all_vertices()).smallest().unwrap();
        return Err(TtError::RemovedVertexOutOfRange(v));
    }
    for v in y.iter() {
        if tree.degree(v) != 3 {
            return Err(TtError::RemovedVertexDegreeNotThree {
                vertex: v,
                degree: tree.degree(v),
            });
        }
        if let Some(w) = tree.neighbors(v).intersection(y).smallest() {
            return Err(TtError::RemovedSetNotIndependent(v.min(w), v.max(w)));
        }
    }

    let degree3: VertexSet = tree.vertices().filter(|&v| tree.degree(v) == 3).collect();
    let neighbors_of_y = y
        .iter()
        .fold(VertexSet::EMPTY, |acc, v| acc.union(tree.neighbors(v)));
    let case = if !y.is_empty()
        && delta == 3
        && y == degree3
        && neighbors_of_y.iter().all(|w| tree.degree(w) == 2)
    {
        CaseTag::A
    } else if neighbors_of_y.iter().all(|w| tree.degree(w) == delta) {
        CaseTag::B
    } else {
        let (removed, neighbor) = y
            .iter()
            .find_map(|v| {
                tree.neighbors(v)
                    .iter()
                    .find(|&w| tree.degree(w) != delta)
                    .map(|w| (v, w))
            })
            .expect("some neighbor violates both cases");
        return Err(TtError::NeighborDegreeCondition {
            removed,
            neighbor,
            degree: tree.degree(neighbor),
        });
    };

    // Compact surviving ids in order.
    let n = tree.vertex_count();
    let mut map = vec![usize::MAX; n];
    let mut next = 0usize;
    for (v, slot) in map.iter_mut().enumerate() {
        if !y.contains(v) {
            *slot = next;
            next += 1;
        }
    }
    let mut g = Graph::new(next).expect("fewer vertices than the tree");
    for (u, v) in tree.edges() {
        if !y.contains(u) && !y.contains(v) {
            g.add_edge(map[u], map[v]).expect("ids in range");
        }
    }
    let mut triangle_map = Vec::new();
    for center in y.iter() {
        let nbrs: Vec<usize> = tree.neighbors(center).iter().map(|w| map[w]).collect();
        let [a, b, c] = [nbrs[0], nbrs[1], nbrs[2]];
        for (p, q) in [(a, b), (a, c), (b, c)] {
            g.add_edge(p, q).expect("ids in range");
        }
        triangle_map.push(TriangleAssignment {
            center,
            vertices: [a, b, c],
        });
    }
    let decomposition = TTDecomposition {
        tree: tree.clone(),
        removed: y,
        triangle_map,
        case_tag: case,
        mu: mu(&g),
    };
    Ok((g, decomposition))
}

/// Number of triangle blocks containing `v`, given the block list.
fn triangle_count_at(blocks: &[VertexSet], v: usize) -> usize {
    blocks
        .iter()
        .filter(|b| b.len() == 3 && b.contains(v))
        .count()
}

/// Recognizes TT-graphs and returns a replay-checked decomposition, or a
/// machine-readable rejection reason.
///
/// Checks, in order: connected; noncomplete; every block is an edge or a
/// triangle (which already forces chordality, cliques of size ≤ 3,
/// pairwise clique intersections ≤ 1, and every vertex simplicial or
/// cut); every triangle vertex has maximal modified degree. Triangle-free
/// survivors are trees and are accepted as `PureTree`. Otherwise each
/// triangle is swapped for a claw on a fresh center and the construction
/// is replayed; any discrepancy rejects.
pub fn recognize_tt(g: &Graph) -> Result<TTDecomposition, TtRejection> {
    if !g.is_connected() {
        return Err(TtRejection::Disconnected);
    }
    if g.is_complete() {
        return Err(TtRejection::Complete);
    }
    let blocks = block_decomposition(g)
        .expect("connectivity checked above")
        .blocks;
    for block in &blocks {
        let size = block.len();
        let edge_count: usize = block
            .iter()
            .map(|v| g.neighbors(v).intersection(*block).len())
            .sum::<usize>()
            / 2;
        let ok = (size == 2 && edge_count == 1) || (size == 3 && edge_count == 3);
        if !ok {
            return Err(TtRejection::BadBlock { block: *block });
        }
    }
    let triangles: Vec<VertexSet> = blocks.iter().copied().filter(|b| b.len() == 3).collect();
    let mu_g = mu(g);
    if triangles.is_empty() {
        // Every block is a single edge, so the graph is a tree.
        debug_assert!(g.is_tree());
        return Ok(TTDecomposition {
            tree: g.clone(),
            removed: VertexSet::EMPTY,
            triangle_map: Vec::new(),
            case_tag: CaseTag::PureTree,
            mu: mu_g,
        });
    }
    let triangle_vertices = triangles
        .iter()
        .fold(VertexSet::EMPTY, |acc, t| acc.union(*t));
    for v in triangle_vertices.iter() {
        let md = modified_degree(g, v);
        if md != mu_g {
            return Err(TtRejection::NonMaximalModifiedDegree {
                vertex: v,
                md,
                mu: mu_g,
            });
        }
    }
    if cfg!(debug_assertions) {
        for v in g.vertices() {
            debug_assert_eq!(
                modified_degree(g, v),
                g.degree(v) - triangle_count_at(&blocks, v),
                "modified degree must equal degree minus triangle count"
            );
        }
    }

    // Swap each triangle for a claw on a fresh center; graph vertices keep
    // their ids, centers take n, n+1, ...
    let n = g.vertex_count();
    let k = triangles.len();
    let mut tree = match Graph::new(n + k) {
        Ok(t) => t,
        Err(_) => return Err(TtRejection::TreeTooLarge { needed: n + k }),
    };
    for block in &blocks {
        if block.len() == 2 {
            let mut it = block.iter();
            let (u, v) = (it.next().unwrap(), it.next().unwrap());
            tree.add_edge(u, v).expect("ids in range");
        }
    }
    for (i, triangle) in triangles.iter().enumerate() {
        for v in triangle.iter() {
            tree.add_edge(n + i, v).expect("ids in range");
        }
    }
    let y: VertexSet = (n..n + k).collect();
    match tt_from_tree(&tree, y) {
        Ok((replayed, decomposition)) if replayed == *g => Ok(decomposition),
        _ => Err(TtRejection::ReplayMismatch),
    }
}

/// Two-sided report for the central classification: "minimally t-tough
/// with t ≤ 1/2" versus "TT-graph with τ = 1/μ", both computed
/// independently. Disagreement is surfaced, never reconciled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterizationReport {
    pub tau: ExtendedRational,
    pub minimally_tough: bool,
    pub tau_at_most_half: bool,
    pub tt: Option<TTDecomposition>,
    pub rejection: Option<TtRejection>,
    pub toughness_is_one_over_mu: bool,
    pub agree: bool,
}

impl CharacterizationReport {
    /// The brute-force side: minimally t-tough with t ≤ 1/2.
    pub fn minimal_side(&self) -> bool {
        self.minimally_tough && self.tau_at_most_half
    }

    /// The structural side: recognized TT-graph with τ = 1/μ.
    pub fn tt_side(&self) -> bool {
        self.tt.is_some() && self.toughness_is_one_over_mu
    }
}

/// Runs both sides of the classification on a connected, chordal,
/// noncomplete graph.
pub fn check_characterization(g: &Graph) -> Result<CharacterizationReport, TtError> {
    if !g.is_connected() {
        return Err(TtError::Disconnected);
    }
    if g.is_complete() {
        return Err(TtError::Complete);
    }
    if is_chordal(g).is_none() {
        return Err(TtError::NotChordal);
    }
    let tau = toughness(g).value;
    let minimally_tough = is_minimally_tough(g)
        .expect("preconditions checked")
        .is_minimal();
    let tau_at_most_half = tau <= ExtendedRational::new(1, 2);
    let (tt, rejection) = match recognize_tt(g) {
        Ok(d) => (Some(d), None),
        Err(r) => (None, Some(r)),
    };
    let toughness_is_one_over_mu = match &tt {
        Some(d) => tau == ExtendedRational::new(1, d.mu as u64),
        None => false,
    };
    let agree = (minimally_tough && tau_at_most_half) == (tt.is_some() && toughness_is_one_over_mu);
    Ok(CharacterizationReport {
        tau,
        minimally_tough,
        tau_at_most_half,
        tt,
        rejection,
        toughness_is_one_over_mu,
        agree,
    })
}
