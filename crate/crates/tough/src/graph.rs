//! Simple undirected graphs on at most 64 vertices.
//!
//! Vertices are dense integer ids `0..n`. Neighborhoods and vertex subsets
//! are single `u64` bit masks, which keeps the exhaustive subset
//! enumerations used elsewhere in the crate cheap. Deleted vertices are
//! always expressed through a `removed` mask rather than by reindexing, so
//! certificates stay referable to the original ids.

use std::fmt;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Hard cap imposed by the bit-mask representation.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex id {id} out of range for {n} vertices")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
}

/// Edge-list parse failure, with the 1-based line it occurred on.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct EdgeListError {
    pub line: usize,
    pub message: String,
}

/// A set of vertex ids, stored as a bit mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// All of `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < MAX_VERTICES {
            self.0 &= !(1 << v);
        }
    }

    pub fn with(self, v: usize) -> Self {
        let mut s = self;
        s.insert(v);
        s
    }

    pub fn without(self, v: usize) -> Self {
        let mut s = self;
        s.remove(v);
        s
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn smallest(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterates members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

// JSON form: sorted array of vertex ids.
impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let ids = Vec::<usize>::deserialize(deserializer)?;
        for &v in &ids {
            if v >= MAX_VERTICES {
                return Err(de::Error::custom(format!("vertex id {v} out of range")));
            }
        }
        Ok(ids.into_iter().collect())
    }
}

/// A finite simple undirected graph.
///
/// Invariants: the adjacency relation is symmetric and irreflexive, and all
/// neighbor ids are `< n`. Construction enforces them; all operations treat
/// graphs as immutable values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for id in [u, v] {
            if id >= self.n {
                return Err(GraphError::VertexOutOfRange { id, n: self.n });
            }
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Builds the graph whose edge set is given by `mask` over the pairs
    /// (0,1),(0,2),(1,2),(0,3),... — the same column-wise upper-triangle
    /// order the graph6 encoding uses. The mask holds 64 bits, enough for
    /// the enumeration sizes (n ≤ 11); larger graphs must be built from
    /// explicit edges.
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Self, GraphError> {
        assert!(
            n.saturating_sub(1) * n / 2 <= 64,
            "edge mask holds at most 64 bits"
        );
        let mut g = Graph::new(n)?;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> k & 1 == 1 {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
                k += 1;
            }
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Copy of the graph with one edge removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        debug_assert!(self.has_edge(u, v));
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        g
    }

    pub fn is_complete(&self) -> bool {
        let full = self.all_vertices();
        self.vertices().all(|v| self.adj[v] == full.without(v))
    }

    pub fn is_connected(&self) -> bool {
        self.component_count(VertexSet::EMPTY) == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Number of connected components of the graph induced on
    /// `V \ removed`. The empty vertex set has 0 components.
    pub fn component_count(&self, removed: VertexSet) -> usize {
        let mut rem = self.all_vertices().bits() & !removed.bits();
        let mut count = 0;
        while rem != 0 {
            count += 1;
            let v = rem.trailing_zeros() as usize;
            let mut comp = 1u64 << v;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let u = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.adj[u].bits();
                }
                frontier = next & rem & !comp;
                comp |= frontier;
            }
            rem &= !comp;
        }
        count
    }

    /// Connected components of the graph induced on `V \ removed`,
    /// ordered by their smallest vertex.
    pub fn components(&self, removed: VertexSet) -> Vec<VertexSet> {
        let mut rem = self.all_vertices().bits() & !removed.bits();
        let mut out = Vec::new();
        while rem != 0 {
            let v = rem.trailing_zeros() as usize;
            let mut comp = 1u64 << v;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let u = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.adj[u].bits();
                }
                frontier = next & rem & !comp;
                comp |= frontier;
            }
            rem &= !comp;
            out.push(VertexSet::from_bits(comp));
        }
        out
    }

    /// Vertices reachable from `start` without entering `removed`.
    /// Returns the empty set when `start` itself is removed.
    pub fn reachable_from(&self, start: usize, removed: VertexSet) -> VertexSet {
        let alive = self.all_vertices().bits() & !removed.bits();
        if alive >> start & 1 == 0 {
            return VertexSet::EMPTY;
        }
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[u].bits();
            }
            frontier = next & alive & !comp;
            comp |= frontier;
        }
        VertexSet::from_bits(comp)
    }

    // Named constructions used throughout the tests and examples.

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n).expect("size in range");
        let full = VertexSet::full(n);
        for v in 0..n {
            g.adj[v] = full.without(v);
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("size in range")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0).unwrap();
        g
    }

    /// Star with `leaves` leaves; vertex 0 is the center.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("size in range")
    }

    /// DOT export with vertex ids as labels and no layout hints.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in self.vertices() {
            out.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

// JSON form: {"n": n, "edges": [[u, v], ...]}.
impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Graph", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("edges", &self.edges())?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        let raw = Raw::deserialize(deserializer)?;
        Graph::from_edges(raw.n, raw.edges).map_err(de::Error::custom)
    }
}

/// Parses the plain edge-list text format: one `u v` pair per line, with an
/// optional leading `n <count>` line declaring the vertex count. Blank
/// lines are ignored and duplicate edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let err = |line: usize, message: String| EdgeListError { line, message };
    let mut declared_n: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new(); // (u, v, line)
    let mut max_id: Option<usize> = None;
    let mut seen_edge_line = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "n" {
            if seen_edge_line || declared_n.is_some() {
                return Err(err(line_no, "vertex count must be the first line".into()));
            }
            if tokens.len() != 2 {
                return Err(err(line_no, "expected `n <count>`".into()));
            }
            let n: usize = tokens[1]
                .parse()
                .map_err(|_| err(line_no, format!("bad vertex count {:?}", tokens[1])))?;
            if n > MAX_VERTICES {
                return Err(err(
                    line_no,
                    format!("{n} vertices exceed the supported maximum of {MAX_VERTICES}"),
                ));
            }
            declared_n = Some(n);
            continue;
        }
        if tokens.len() != 2 {
            return Err(err(line_no, format!("expected `u v`, got {line:?}")));
        }
        let mut pair = [0usize; 2];
        for (slot, tok) in pair.iter_mut().zip(&tokens) {
            *slot = tok
                .parse()
                .map_err(|_| err(line_no, format!("bad vertex id {tok:?}")))?;
        }
        let (u, v) = (pair[0], pair[1]);
        if u == v {
            return Err(err(line_no, format!("self-loop at vertex {u}")));
        }
        if let Some(n) = declared_n {
            if u >= n || v >= n {
                return Err(err(
                    line_no,
                    format!("vertex id {} out of range for {n} vertices", u.max(v)),
                ));
            }
        }
        max_id = Some(max_id.unwrap_or(0).max(u).max(v));
        seen_edge_line = true;
        edges.push((u, v, line_no));
    }

    let n = declared_n.unwrap_or(match max_id {
        Some(m) => m + 1,
        None => 0,
    });
    if n > MAX_VERTICES {
        return Err(err(
            edges.first().map(|e| e.2).unwrap_or(1),
            format!("{n} vertices exceed the supported maximum of {MAX_VERTICES}"),
        ));
    }
    let mut g = Graph::new(n).map_err(|e| err(1, e.to_string()))?;
    for (u, v, line_no) in edges {
        g.add_edge(u, v).map_err(|e| err(line_no, e.to_string()))?;
    }
    Ok(g)
}

/// Decomposition of a connected graph into blocks (maximal 2-connected
/// subgraphs and bridge edges) plus its cut vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    pub cut_vertices: VertexSet,
    pub blocks: Vec<VertexSet>,
}

/// Hopcroft–Tarjan block decomposition. Errors on disconnected input.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let n = g.vertex_count();
    let mut state = BlockDfs {
        g,
        timer: 0,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        cut: VertexSet::EMPTY,
        blocks: Vec::new(),
        edge_stack: Vec::new(),
    };
    if n > 0 {
        state.dfs(0, None);
    }
    state.blocks.sort();
    Ok(BlockDecomposition {
        cut_vertices: state.cut,
        blocks: state.blocks,
    })
}

struct BlockDfs<'a> {
    g: &'a Graph,
    timer: usize,
    disc: Vec<usize>,
    low: Vec<usize>,
    cut: VertexSet,
    blocks: Vec<VertexSet>,
    edge_stack: Vec<(usize, usize)>,
}

impl BlockDfs<'_> {
    // n ≤ 64 keeps the recursion shallow.
    fn dfs(&mut self, v: usize, parent: Option<usize>) {
        self.disc[v] = self.timer;
        self.low[v] = self.timer;
        self.timer += 1;
        let mut children = 0usize;
        for w in self.g.neighbors(v).iter() {
            if self.disc[w] == usize::MAX {
                children += 1;
                self.edge_stack.push((v, w));
                self.dfs(w, Some(v));
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    if parent.is_some() || children > 1 {
                        self.cut.insert(v);
                    }
                    let mut block = VertexSet::EMPTY;
                    while let Some(&(a, b)) = self.edge_stack.last() {
                        self.edge_stack.pop();
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (v, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if Some(w) != parent && self.disc[w] < self.disc[v] {
                self.edge_stack.push((v, w));
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
    }
}

/// Maximum number of internally vertex-disjoint `u`–`v` paths, the `uv`
/// edge counting as one path when present. Computed as a unit-capacity
/// flow on the vertex-split graph (Menger).
pub fn local_connectivity(g: &Graph, u: usize, v: usize) -> usize {
    assert!(u != v, "local connectivity needs distinct endpoints");
    if g.has_edge(u, v) {
        1 + disjoint_paths_flow(&g.without_edge(u, v), u, v)
    } else {
        disjoint_paths_flow(g, u, v)
    }
}

/// Vertex connectivity κ(G): 0 for disconnected graphs, `n − 1` for
/// complete graphs, otherwise the minimum size of a vertex cut, taken over
/// nonadjacent pairs.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = usize::MAX;
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                best = best.min(disjoint_paths_flow(g, u, v));
            }
        }
    }
    best
}

/// Max flow from `u` to `v` where every vertex except the endpoints has
/// capacity 1. Nodes 2w / 2w+1 are the in/out copies of vertex w;
/// residual arcs are tracked as bit masks.
fn disjoint_paths_flow(g: &Graph, u: usize, v: usize) -> usize {
    let n = g.vertex_count();
    let size = 2 * n;
    let mut res: Vec<u128> = vec![0; size];
    for w in 0..n {
        res[2 * w] |= 1 << (2 * w + 1); // in -> out
        for x in g.neighbors(w).iter() {
            res[2 * w + 1] |= 1 << (2 * x); // out -> in of neighbor
        }
    }
    let source = 2 * u + 1;
    let sink = 2 * v;
    let mut flow = 0;
    loop {
        // BFS for an augmenting path in the residual graph.
        let mut parent = vec![usize::MAX; size];
        let mut visited: u128 = 1 << source;
        let mut queue = std::collections::VecDeque::from([source]);
        'bfs: while let Some(a) = queue.pop_front() {
            let mut out = res[a] & !visited;
            while out != 0 {
                let b = out.trailing_zeros() as usize;
                out &= out - 1;
                visited |= 1 << b;
                parent[b] = a;
                if b == sink {
                    break 'bfs;
                }
                queue.push_back(b);
            }
        }
        if parent[sink] == usize::MAX {
            return flow;
        }
        let mut b = sink;
        while b != source {
            let a = parent[b];
            res[a] &= !(1u128 << b);
            res[b] |= 1 << a;
            b = a;
        }
        flow += 1;
    }
}
