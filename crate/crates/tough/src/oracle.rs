//! Independent brute-force reference implementations.
//!
//! Every function here recomputes a property from its definition, using
//! machinery deliberately different from the main implementation it is
//! checked against (union-find instead of flood fill, subset enumeration
//! instead of elimination orders or flow). The verification suites compare
//! the two routes exhaustively on small graphs; nothing in the crate's
//! primary code paths calls into this module.

use crate::graph::{Graph, VertexSet};

/// Component count via union-find over the surviving vertices.
pub fn component_count_union_find(g: &Graph, removed: VertexSet) -> usize {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (u, v) in g.edges() {
        if !removed.contains(u) && !removed.contains(v) {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
            }
        }
    }
    (0..n)
        .filter(|&v| !removed.contains(v) && find(&mut parent, v) == v)
        .count()
}

/// Does the subset induce a cycle of length |S| ≥ 4? Checks that every
/// member has induced degree exactly 2 and the induced subgraph is
/// connected.
fn induces_long_cycle(g: &Graph, subset: VertexSet) -> bool {
    let k = subset.len();
    if k < 4 {
        return false;
    }
    for v in subset.iter() {
        if g.neighbors(v).intersection(subset).len() != 2 {
            return false;
        }
    }
    // Connected 2-regular graph on k vertices is the k-cycle.
    let start = subset.smallest().unwrap();
    let outside = g.all_vertices().difference(subset);
    g.reachable_from(start, outside) == subset
}

/// Chordality from the definition: no induced cycle of length at least 4.
pub fn is_chordal_bruteforce(g: &Graph) -> bool {
    let n = g.vertex_count();
    for mask in 0..(1u64 << n) {
        if induces_long_cycle(g, VertexSet::from_bits(mask)) {
            return false;
        }
    }
    true
}

fn is_clique(g: &Graph, subset: VertexSet) -> bool {
    subset
        .iter()
        .all(|v| subset.without(v).is_subset_of(g.neighbors(v)))
}

/// All maximal cliques by enumerating every vertex subset.
pub fn maximal_cliques_bruteforce(g: &Graph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let mut cliques: Vec<VertexSet> = Vec::new();
    for mask in 1..(1u64 << n) {
        let s = VertexSet::from_bits(mask);
        if is_clique(g, s) {
            cliques.push(s);
        }
    }
    let maximal: Vec<VertexSet> = cliques
        .iter()
        .copied()
        .filter(|&c| !cliques.iter().any(|&d| d != c && c.is_subset_of(d)))
        .collect();
    maximal
}

/// Interval recognition by explicit model search: try to order the maximal
/// cliques so that the cliques containing each vertex are consecutive,
/// then realize every vertex as the interval of clique positions it spans
/// and verify the resulting intersection graph is exactly `g`.
pub fn is_interval_bruteforce(g: &Graph) -> bool {
    if !is_chordal_bruteforce(g) {
        return false;
    }
    let cliques = maximal_cliques_bruteforce(g);
    if cliques.len() <= 1 {
        return true;
    }
    let mut order: Vec<usize> = Vec::new();
    let mut used = vec![false; cliques.len()];
    if !place_next(&cliques, &mut order, &mut used) {
        return false;
    }
    // Realize the model and check it reproduces the graph.
    let spans: Vec<(usize, usize)> = g
        .vertices()
        .map(|v| {
            let positions: Vec<usize> = order
                .iter()
                .enumerate()
                .filter(|(_, &c)| cliques[c].contains(v))
                .map(|(pos, _)| pos)
                .collect();
            (positions[0], *positions.last().unwrap())
        })
        .collect();
    for u in g.vertices() {
        for v in u + 1..g.vertex_count() {
            let overlap = spans[u].0 <= spans[v].1 && spans[v].0 <= spans[u].1;
            if overlap != g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

/// Depth-first search over clique orderings. A vertex whose clique run has
/// started and then stopped may never reappear; pruning on that keeps the
/// search exhaustive but fast at this scale.
fn place_next(cliques: &[VertexSet], order: &mut Vec<usize>, used: &mut [bool]) -> bool {
    if order.len() == cliques.len() {
        return true;
    }
    let placed: VertexSet = order
        .iter()
        .fold(VertexSet::EMPTY, |acc, &c| acc.union(cliques[c]));
    let open: VertexSet = match order.last() {
        Some(&c) => cliques[c],
        None => VertexSet::EMPTY,
    };
    let closed = placed.difference(open);
    for c in 0..cliques.len() {
        if used[c] || !cliques[c].intersection(closed).is_empty() {
            continue;
        }
        // Everything currently open that this clique drops becomes closed;
        // consecutiveness is enforced implicitly on later steps.
        used[c] = true;
        order.push(c);
        if place_next(cliques, order, used) {
            return true;
        }
        order.pop();
        used[c] = false;
    }
    false
}

/// Minimum size of a set S ⊆ V∖{u,v} whose removal separates `u` from `v`,
/// by checking every subset. `None` when no such set exists (in
/// particular when `u` and `v` are adjacent).
pub fn min_uv_separator_bruteforce(g: &Graph, u: usize, v: usize) -> Option<usize> {
    if g.has_edge(u, v) {
        return None;
    }
    let n = g.vertex_count();
    let candidates = g.all_vertices().without(u).without(v);
    let mut best = None;
    for mask in 0..(1u64 << n) {
        let s = VertexSet::from_bits(mask);
        if !s.is_subset_of(candidates) {
            continue;
        }
        if !g.reachable_from(u, s).contains(v) && best.is_none_or(|b| s.len() < b) {
            best = Some(s.len());
        }
    }
    best
}

/// Does `g` contain a subdivided claw as a subgraph: a center with three
/// neighbors, each of which has a further private neighbor, all seven
/// vertices distinct?
pub fn contains_subdivided_claw(g: &Graph) -> bool {
    let n = g.vertex_count();
    for center in 0..n {
        let nbrs: Vec<usize> = g.neighbors(center).iter().collect();
        if nbrs.len() < 3 {
            continue;
        }
        for a in 0..nbrs.len() {
            for b in a + 1..nbrs.len() {
                for c in b + 1..nbrs.len() {
                    let mids = [nbrs[a], nbrs[b], nbrs[c]];
                    if has_private_tips(g, center, &mids, 0, VertexSet::EMPTY) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn has_private_tips(
    g: &Graph,
    center: usize,
    mids: &[usize; 3],
    i: usize,
    taken: VertexSet,
) -> bool {
    if i == 3 {
        return true;
    }
    let forbidden = taken.with(center).with(mids[0]).with(mids[1]).with(mids[2]);
    for tip in g.neighbors(mids[i]).difference(forbidden).iter() {
        if has_private_tips(g, center, mids, i + 1, taken.with(tip)) {
            return true;
        }
    }
    false
}

/// Checks that `path` really is a walk of distinct vertices from `from` to
/// `to` inside `g` that avoids the open neighborhood of `avoid` (and hence
/// `avoid` itself, which has no edge into the path).
pub fn validate_avoiding_path(
    g: &Graph,
    path: &[usize],
    from: usize,
    to: usize,
    avoid: usize,
) -> bool {
    if path.first() != Some(&from) || path.last() != Some(&to) {
        return false;
    }
    let mut seen = VertexSet::EMPTY;
    let banned = g.neighbors(avoid).with(avoid);
    for pair in path.windows(2) {
        if !g.has_edge(pair[0], pair[1]) {
            return false;
        }
    }
    for &v in path {
        if banned.contains(v) || seen.contains(v) {
            return false;
        }
        seen.insert(v);
    }
    true
}
