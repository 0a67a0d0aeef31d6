//! Chordality recognition, maximal cliques, and clique trees.
//!
//! Recognition runs lexicographic BFS and validates the reversed visit
//! order as a perfect elimination order. Clique trees are maximum-weight
//! spanning trees of the clique intersection graph; the two defining
//! properties (clique-intersection and induced-subtree) have explicit
//! verifiers rather than being assumed from the construction.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChordalError {
    #[error("graph is not chordal")]
    NotChordal,
    #[error("graph is disconnected")]
    Disconnected,
}

/// A vertex ordering intended as an elimination order: when perfect, each
/// vertex's neighbors that appear later in `order` form a clique.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationOrder {
    pub order: Vec<usize>,
}

/// Lexicographic BFS, reversed into an elimination order.
///
/// Tie-break: among vertices with equal labels the smallest id is visited
/// next, so the search starts at vertex 0 and the result is deterministic.
pub fn lexbfs_order(g: &Graph) -> EliminationOrder {
    let n = g.vertex_count();
    // label[v] packs visit times of v's visited neighbors so that an
    // earlier time is a more significant bit; numeric comparison of the
    // masks is then exactly the lexicographic comparison of label words.
    let mut label = vec![0u64; n];
    let mut visited = VertexSet::EMPTY;
    let mut visit_order = Vec::with_capacity(n);
    for time in 0..n {
        let next = (0..n)
            .filter(|&v| !visited.contains(v))
            .max_by(|&a, &b| label[a].cmp(&label[b]).then(b.cmp(&a)))
            .expect("unvisited vertex remains");
        visited.insert(next);
        visit_order.push(next);
        let bit = 1u64 << (63 - time);
        for w in g.neighbors(next).iter() {
            if !visited.contains(w) {
                label[w] |= bit;
            }
        }
    }
    visit_order.reverse();
    EliminationOrder { order: visit_order }
}

/// Is `order` a perfect elimination order for `g`?
fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for (i, &v) in order.iter().enumerate() {
        let later: VertexSet = g.neighbors(v).iter().filter(|&w| pos[w] > i).collect();
        if later.is_empty() {
            continue;
        }
        // It suffices to check the rest of the later neighborhood against
        // the one eliminated soonest (Rose–Tarjan–Lueker).
        let parent = later
            .iter()
            .min_by_key(|&w| pos[w])
            .expect("nonempty later set");
        if !later.without(parent).is_subset_of(g.neighbors(parent)) {
            return false;
        }
    }
    true
}

/// Returns a perfect elimination order when the graph is chordal (no
/// induced cycle of length ≥ 4), `None` otherwise. Works on disconnected
/// graphs as well.
pub fn is_chordal(g: &Graph) -> Option<EliminationOrder> {
    let order = lexbfs_order(g);
    if is_perfect_elimination_order(g, &order.order) {
        Some(order)
    } else {
        None
    }
}

fn require_chordal_connected(g: &Graph) -> Result<EliminationOrder, ChordalError> {
    if !g.is_connected() {
        return Err(ChordalError::Disconnected);
    }
    is_chordal(g).ok_or(ChordalError::NotChordal)
}

/// The maximal cliques of a connected chordal graph, derived from a
/// perfect elimination order (there are at most n of them). Sorted by
/// bit mask for determinism.
pub fn maximal_cliques_chordal(g: &Graph) -> Result<Vec<VertexSet>, ChordalError> {
    let peo = require_chordal_connected(g)?;
    let n = g.vertex_count();
    let mut pos = vec![0usize; n];
    for (i, &v) in peo.order.iter().enumerate() {
        pos[v] = i;
    }
    let candidates: Vec<VertexSet> = peo
        .order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            g.neighbors(v)
                .iter()
                .filter(|&w| pos[w] > i)
                .collect::<VertexSet>()
                .with(v)
        })
        .collect();
    let mut cliques: Vec<VertexSet> = candidates
        .iter()
        .copied()
        .filter(|&c| !candidates.iter().any(|&d| d != c && c.is_subset_of(d)))
        .collect();
    cliques.sort();
    cliques.dedup();
    Ok(cliques)
}

/// A tree over the maximal cliques with intersection-size edge weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueTree {
    pub cliques: Vec<VertexSet>,
    /// `(i, j, weight)` with `weight = |cliques[i] ∩ cliques[j]|`.
    pub tree_edges: Vec<(usize, usize, usize)>,
}

impl CliqueTree {
    /// Structural sanity: edges reference valid distinct nodes, carry the
    /// true intersection sizes (all ≥ 1), and form a spanning tree.
    pub fn is_structurally_valid(&self) -> bool {
        let k = self.cliques.len();
        if self.tree_edges.len() + 1 != k.max(1) {
            return false;
        }
        for &(i, j, w) in &self.tree_edges {
            if i >= k || j >= k || i == j {
                return false;
            }
            let inter = self.cliques[i].intersection(self.cliques[j]).len();
            if w != inter || w == 0 {
                return false;
            }
        }
        k == 0 || self.reachable_in_tree(0, &|_| true).len() == k
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.cliques.len()];
        for &(i, j, _) in &self.tree_edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    /// Clique indices reachable from `start` through nodes allowed by the
    /// filter (the start must be allowed by the caller).
    fn reachable_in_tree(&self, start: usize, allowed: &dyn Fn(usize) -> bool) -> Vec<usize> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.cliques.len()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut out = vec![start];
        while let Some(a) = stack.pop() {
            for &b in &adj[a] {
                if !seen[b] && allowed(b) {
                    seen[b] = true;
                    stack.push(b);
                    out.push(b);
                }
            }
        }
        out
    }

    /// The unique tree path between two clique indices.
    fn path(&self, from: usize, to: usize) -> Vec<usize> {
        let adj = self.adjacency();
        let mut parent = vec![usize::MAX; self.cliques.len()];
        parent[from] = from;
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(a) = queue.pop_front() {
            if a == to {
                break;
            }
            for &b in &adj[a] {
                if parent[b] == usize::MAX {
                    parent[b] = a;
                    queue.push_back(b);
                }
            }
        }
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }

    /// DOT export: nodes labeled with their vertex sets, edges with weights.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph CliqueTree {\n");
        for (i, c) in self.cliques.iter().enumerate() {
            out.push_str(&format!("  {i} [label=\"{c}\"];\n"));
        }
        for &(i, j, w) in &self.tree_edges {
            out.push_str(&format!("  {i} -- {j} [label=\"{w}\"];\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Builds a clique tree as a maximum-weight spanning tree of the clique
/// intersection graph, using Kruskal with a deterministic edge order
/// (weight descending, then index pairs ascending).
pub fn build_clique_tree(g: &Graph) -> Result<CliqueTree, ChordalError> {
    let cliques = maximal_cliques_chordal(g)?;
    let k = cliques.len();
    let mut candidate_edges: Vec<(usize, usize, usize)> = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let w = cliques[i].intersection(cliques[j]).len();
            if w >= 1 {
                candidate_edges.push((i, j, w));
            }
        }
    }
    candidate_edges.sort_by(|a, b| b.2.cmp(&a.2).then(a.0.cmp(&b.0)).then(a.1.cmp(&b.1)));

    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut tree_edges = Vec::with_capacity(k.saturating_sub(1));
    for (i, j, w) in candidate_edges {
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
        if ri != rj {
            parent[ri] = rj;
            tree_edges.push((i, j, w));
        }
    }
    Ok(CliqueTree {
        cliques,
        tree_edges,
    })
}

/// Clique-intersection property: for every pair of cliques, their
/// intersection is contained in every clique on the tree path between
/// them.
pub fn verify_clique_intersection(ct: &CliqueTree) -> bool {
    let k = ct.cliques.len();
    for i in 0..k {
        for j in i + 1..k {
            let inter = ct.cliques[i].intersection(ct.cliques[j]);
            if inter.is_empty() {
                continue;
            }
            for &node in &ct.path(i, j) {
                if !inter.is_subset_of(ct.cliques[node]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Induced-subtree property: for every vertex of `g`, the cliques
/// containing it induce a connected subtree.
pub fn verify_induced_subtree(ct: &CliqueTree, g: &Graph) -> bool {
    for v in g.vertices() {
        let holders: Vec<usize> = (0..ct.cliques.len())
            .filter(|&i| ct.cliques[i].contains(v))
            .collect();
        if holders.len() <= 1 {
            continue;
        }
        let allowed = |i: usize| ct.cliques[i].contains(v);
        let reached = ct.reachable_in_tree(holders[0], &allowed);
        if reached.len() != holders.len() {
            return false;
        }
    }
    true
}

/// Largest |K ∩ K'| over all pairs of maximal cliques. Zero when there is
/// a single clique. A value ≤ 1 means every clique tree of the graph has
/// all edge weights 1: any pairwise intersection of size ≥ 2 would sit on
/// some tree edge of weight ≥ 2 by the clique-intersection property, even
/// when the two cliques are not adjacent in the tree.
pub fn max_pairwise_clique_intersection(g: &Graph) -> Result<usize, ChordalError> {
    let cliques = maximal_cliques_chordal(g)?;
    let mut best = 0;
    for i in 0..cliques.len() {
        for j in i + 1..cliques.len() {
            best = best.max(cliques[i].intersection(cliques[j]).len());
        }
    }
    Ok(best)
}

/// Classification of a vertex as simplicial (closed neighborhood is a
/// clique), a cut vertex (ω(G−v) > 1), both, or neither.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexClass {
    Simplicial,
    Cut,
    Both,
    Neither,
}

pub fn is_simplicial(g: &Graph, v: usize) -> bool {
    let nbrs = g.neighbors(v);
    nbrs.iter()
        .all(|w| nbrs.without(w).is_subset_of(g.neighbors(w)))
}

pub fn is_cut_vertex(g: &Graph, v: usize) -> bool {
    g.component_count(VertexSet::singleton(v)) > 1
}

pub fn classify_vertex(g: &Graph, v: usize) -> VertexClass {
    match (is_simplicial(g, v), is_cut_vertex(g, v)) {
        (true, true) => VertexClass::Both,
        (true, false) => VertexClass::Simplicial,
        (false, true) => VertexClass::Cut,
        (false, false) => VertexClass::Neither,
    }
}

/// Does every vertex classify as simplicial or cut (or both)?
pub fn all_simplicial_or_cut(g: &Graph) -> bool {
    g.vertices()
        .all(|v| classify_vertex(g, v) != VertexClass::Neither)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn net_graph() -> Graph {
        Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap()
    }

    fn diamond_with_pendants() -> Graph {
        Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 4), (3, 5)]).unwrap()
    }

    #[test]
    fn lexbfs_traces() {
        assert_eq!(lexbfs_order(&Graph::path(3)).order, vec![2, 1, 0]);
        assert_eq!(lexbfs_order(&Graph::complete(3)).order, vec![2, 1, 0]);
        assert_eq!(lexbfs_order(&Graph::new(1).unwrap()).order, vec![0]);
        // Net graph: visit 0,1,2,3,4,5.
        assert_eq!(lexbfs_order(&net_graph()).order, vec![5, 4, 3, 2, 1, 0]);
    }

    #[test]
    fn chordality_examples() {
        assert!(is_chordal(&Graph::cycle(4)).is_none());
        assert!(is_chordal(&Graph::path(6)).is_some());
        assert!(is_chordal(&Graph::star(4)).is_some());
        assert!(is_chordal(&net_graph()).is_some());
        assert!(is_chordal(&diamond_with_pendants()).is_some());
        assert!(is_chordal(&Graph::cycle(5)).is_none());
    }

    #[test]
    fn chordality_matches_bruteforce_up_to_n5() {
        for n in 1..=5usize {
            let bits = n * (n - 1) / 2;
            for mask in 0..(1u64 << bits) {
                let g = Graph::from_edge_mask(n, mask).unwrap();
                assert_eq!(
                    is_chordal(&g).is_some(),
                    oracle::is_chordal_bruteforce(&g),
                    "disagreement on n={n} mask={mask}"
                );
            }
        }
    }

    #[test]
    fn net_graph_cliques() {
        let cliques = maximal_cliques_chordal(&net_graph()).unwrap();
        let expected: Vec<VertexSet> = vec![
            [0, 1, 2].into_iter().collect(),
            [0, 3].into_iter().collect(),
            [1, 4].into_iter().collect(),
            [2, 5].into_iter().collect(),
        ];
        for c in &expected {
            assert!(cliques.contains(c));
        }
        assert_eq!(cliques.len(), 4);
    }

    #[test]
    fn complete_graph_is_one_clique() {
        assert_eq!(
            maximal_cliques_chordal(&Graph::complete(4)).unwrap(),
            vec![VertexSet::full(4)]
        );
    }

    #[test]
    fn path_cliques_are_edges() {
        let cliques = maximal_cliques_chordal(&Graph::path(4)).unwrap();
        assert_eq!(cliques.len(), 3);
        assert!(cliques.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn clique_errors() {
        assert_eq!(
            maximal_cliques_chordal(&Graph::cycle(4)),
            Err(ChordalError::NotChordal)
        );
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(maximal_cliques_chordal(&g), Err(ChordalError::Disconnected));
    }

    #[test]
    fn net_clique_tree_is_a_star_of_weight_one() {
        let ct = build_clique_tree(&net_graph()).unwrap();
        assert!(ct.is_structurally_valid());
        assert_eq!(ct.tree_edges.len(), 3);
        let triangle: VertexSet = [0, 1, 2].into_iter().collect();
        let t = ct.cliques.iter().position(|&c| c == triangle).unwrap();
        for &(i, j, w) in &ct.tree_edges {
            assert_eq!(w, 1);
            assert!(i == t || j == t);
        }
        assert!(verify_clique_intersection(&ct));
        assert!(verify_induced_subtree(&ct, &net_graph()));
    }

    #[test]
    fn single_clique_tree_has_no_edges() {
        let ct = build_clique_tree(&Graph::complete(4)).unwrap();
        assert_eq!(ct.cliques.len(), 1);
        assert!(ct.tree_edges.is_empty());
        assert!(ct.is_structurally_valid());
    }

    #[test]
    fn diamond_clique_tree_has_a_weight_two_edge() {
        let g = diamond_with_pendants();
        let ct = build_clique_tree(&g).unwrap();
        let a: VertexSet = [0, 1, 2].into_iter().collect();
        let b: VertexSet = [0, 1, 3].into_iter().collect();
        let ia = ct.cliques.iter().position(|&c| c == a).unwrap();
        let ib = ct.cliques.iter().position(|&c| c == b).unwrap();
        assert!(ct
            .tree_edges
            .iter()
            .any(|&(i, j, w)| w == 2 && ((i, j) == (ia, ib) || (i, j) == (ib, ia))));
        assert!(verify_clique_intersection(&ct));
        assert!(verify_induced_subtree(&ct, &g));
    }

    #[test]
    fn net_clique_path_arrangement_fails_both_verifiers() {
        // Wiring the net-graph cliques into a path puts a pendant clique
        // between the triangle and another pendant; the singleton
        // intersections are then missing from the intermediate clique and
        // the triangle vertices' clique sets disconnect. Only the star
        // arrangement is a valid clique tree here.
        let cliques: Vec<VertexSet> = vec![
            [0, 3].into_iter().collect(),
            [1, 4].into_iter().collect(),
            [0, 1, 2].into_iter().collect(),
            [2, 5].into_iter().collect(),
        ];
        let ct = CliqueTree {
            cliques,
            tree_edges: vec![(0, 1, 0), (1, 2, 1), (2, 3, 1)],
        };
        assert!(!verify_clique_intersection(&ct));
        assert!(!verify_induced_subtree(&ct, &net_graph()));
    }

    #[test]
    fn bad_arrangement_fails_the_intersection_verifier() {
        // Cliques of the diamond-with-pendants graph, deliberately wired
        // so {2,4} hangs off {0,1,3}: {2,4} ∩ {0,1,2} = {2} is then not on
        // the connecting path.
        let cliques: Vec<VertexSet> = vec![
            [0, 1, 2].into_iter().collect(),
            [0, 1, 3].into_iter().collect(),
            [2, 4].into_iter().collect(),
            [3, 5].into_iter().collect(),
        ];
        let ct = CliqueTree {
            cliques,
            tree_edges: vec![(0, 1, 2), (1, 2, 1), (1, 3, 1)],
        };
        assert!(!verify_clique_intersection(&ct));
        assert!(!verify_induced_subtree(&ct, &diamond_with_pendants()));
    }

    #[test]
    fn pairwise_intersection_examples() {
        assert_eq!(max_pairwise_clique_intersection(&net_graph()).unwrap(), 1);
        assert_eq!(
            max_pairwise_clique_intersection(&diamond_with_pendants()).unwrap(),
            2
        );
        assert_eq!(
            max_pairwise_clique_intersection(&Graph::path(5)).unwrap(),
            1
        );
        assert_eq!(
            max_pairwise_clique_intersection(&Graph::path(2)).unwrap(),
            0
        );
    }

    #[test]
    fn vertex_classification() {
        let net = net_graph();
        assert_eq!(classify_vertex(&net, 3), VertexClass::Simplicial);
        assert_eq!(classify_vertex(&net, 0), VertexClass::Cut);
        assert_eq!(classify_vertex(&Graph::cycle(4), 0), VertexClass::Neither);
        assert_eq!(classify_vertex(&Graph::path(3), 1), VertexClass::Cut);
        assert_eq!(
            classify_vertex(&Graph::complete(1), 0),
            VertexClass::Simplicial
        );
    }
}
