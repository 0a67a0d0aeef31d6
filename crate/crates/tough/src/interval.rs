//! Asteroidal triples, interval recognition, and caterpillars.
//!
//! Interval graphs are recognized as chordal and asteroidal-triple-free.
//! "Avoids the neighborhood" is read as the open neighborhood N(z); this
//! automatically keeps the third vertex itself off the witness paths,
//! since any path reaching it would pass through one of its neighbors.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chordal::is_chordal;
use crate::graph::{Graph, VertexSet};
use crate::rational::ExtendedRational;
use crate::toughness::{is_minimally_tough, toughness};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IntervalError {
    #[error("graph is disconnected")]
    Disconnected,
}

/// Three pairwise nonadjacent vertices such that every pair is joined by a
/// path avoiding the open neighborhood of the third, with the three
/// witness paths attached.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsteroidalTriple {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    /// `[x–y avoiding N(z), x–z avoiding N(y), y–z avoiding N(x)]`.
    pub witness_paths: [Vec<usize>; 3],
}

/// Shortest path between two vertices avoiding a removed set, as a vertex
/// sequence. `None` when separated.
fn path_avoiding(g: &Graph, from: usize, to: usize, removed: VertexSet) -> Option<Vec<usize>> {
    if removed.contains(from) || removed.contains(to) {
        return None;
    }
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    parent[from] = from;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbors(v).difference(removed).iter() {
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Searches independent triples in ascending lexicographic order and
/// returns the first asteroidal triple found, with its witness paths.
pub fn find_asteroidal_triple(g: &Graph) -> Option<AsteroidalTriple> {
    let n = g.vertex_count();
    for x in 0..n {
        for y in x + 1..n {
            if g.has_edge(x, y) {
                continue;
            }
            for z in y + 1..n {
                if g.has_edge(x, z) || g.has_edge(y, z) {
                    continue;
                }
                let xy = path_avoiding(g, x, y, g.neighbors(z));
                let xz = path_avoiding(g, x, z, g.neighbors(y));
                let yz = path_avoiding(g, y, z, g.neighbors(x));
                if let (Some(xy), Some(xz), Some(yz)) = (xy, xz, yz) {
                    return Some(AsteroidalTriple {
                        x,
                        y,
                        z,
                        witness_paths: [xy, xz, yz],
                    });
                }
            }
        }
    }
    None
}

/// Interval ⟺ chordal and asteroidal-triple-free.
pub fn is_interval(g: &Graph) -> bool {
    is_chordal(g).is_some() && find_asteroidal_triple(g).is_none()
}

/// A tree whose non-leaf vertices form a (possibly empty) path. The
/// degenerate cases count: isolated vertices, edges, and stars are all
/// caterpillars.
pub fn is_caterpillar(g: &Graph) -> bool {
    if !g.is_tree() {
        return false;
    }
    let leaves: VertexSet = g.vertices().filter(|&v| g.degree(v) == 1).collect();
    let spine = g.all_vertices().difference(leaves);
    // Removing all leaves of a tree leaves a subtree; it is a path exactly
    // when every spine vertex keeps at most two spine neighbors.
    spine
        .iter()
        .all(|v| g.neighbors(v).intersection(spine).len() <= 2)
}

/// Joint report for the interval consequence of the classification: a
/// minimally t-tough interval graph with t ≤ 1/2 must be a caterpillar.
/// `applicable` is false when the premise fails (in particular for
/// complete graphs, where minimal toughness is undefined).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryReport {
    pub interval: bool,
    pub tau: ExtendedRational,
    pub minimally_tough: bool,
    pub tau_at_most_half: bool,
    pub caterpillar: bool,
    pub applicable: bool,
    pub consistent: bool,
}

pub fn corollary_check(g: &Graph) -> Result<CorollaryReport, IntervalError> {
    if !g.is_connected() {
        return Err(IntervalError::Disconnected);
    }
    let interval = is_interval(g);
    let tau = toughness(g).value;
    let minimally_tough = match is_minimally_tough(g) {
        Ok(m) => m.is_minimal(),
        Err(_) => false, // complete: premise cannot hold
    };
    let tau_at_most_half = tau <= ExtendedRational::new(1, 2);
    let caterpillar = is_caterpillar(g);
    let applicable = interval && minimally_tough && tau_at_most_half;
    Ok(CorollaryReport {
        interval,
        tau,
        minimally_tough,
        tau_at_most_half,
        caterpillar,
        applicable,
        consistent: !applicable || caterpillar,
    })
}
