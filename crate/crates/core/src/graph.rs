//! Simple undirected graphs on vertices `1..=n`.
//!
//! Vertices are 1-indexed to line up with the variables `x_1..x_n` of the
//! polynomial ring. Every graph also carries a label map: deleting vertices
//! re-indexes the survivors to `1..=m` but keeps their original labels, so
//! results can always be reported against the graph the user started from.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest vertex count a [`Graph`] can hold (adjacency rows are `u64` masks).
pub const MAX_VERTICES: usize = 64;

/// Largest vertex count accepted by exhaustive enumeration.
pub const MAX_EXHAUSTIVE: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("malformed graph descriptor `{0}`")]
    Malformed(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("{0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("exhaustive enumeration is limited to n <= {MAX_EXHAUSTIVE} (got {0}); use seeded sampling")]
    EnumerationTooLarge(usize),
}

/// An edge `{u, v}` stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn new(u: usize, v: usize) -> Self {
        if u < v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint that is not `x`.
    pub fn other(&self, x: usize) -> Option<usize> {
        if self.0 == x {
            Some(self.1)
        } else if self.1 == x {
            Some(self.0)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// A subset of `1..=n`, stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet(0)
    }

    pub fn full(n: usize) -> Self {
        VertexSet(low_bits(n))
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    pub fn mask(&self) -> u64 {
        self.0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << (v - 1);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << (v - 1));
    }

    pub fn contains(&self, v: usize) -> bool {
        v >= 1 && v <= 64 && self.0 >> (v - 1) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                return None;
            }
            let v = m.trailing_zeros() as usize + 1;
            m &= m - 1;
            Some(v)
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A simple graph. Immutable once built; all derived graphs are new values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    labels: Vec<usize>,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n], labels: (1..=n).collect() })
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if g.has_edge(u, v) {
                let e = Edge::new(u, v);
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            g.adj[u - 1] |= 1 << (v - 1);
            g.adj[v - 1] |= 1 << (u - 1);
        }
        Ok(g)
    }

    fn from_adjacency(adj: Vec<u64>, labels: Vec<usize>) -> Self {
        Graph { n: adj.len(), adj, labels }
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges)
    }

    /// `C_n` with vertices in cyclic order `1, 2, ..., n`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::Malformed(format!("cycle:{n} (a cycle needs n >= 3)")));
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((1, n));
        Graph::from_edges(n, &edges)
    }

    /// `K_{1,leaves}`: vertex 1 is the center.
    pub fn star(leaves: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (2..=leaves + 1).map(|i| (1, i)).collect();
        Graph::from_edges(leaves + 1, &edges)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// `r` pairwise disjoint edges `{1,2}, {3,4}, ...`.
    pub fn matching(r: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (0..r).map(|i| (2 * i + 1, 2 * i + 2)).collect();
        Graph::from_edges(2 * r, &edges)
    }

    /// A random labeled forest on `n` vertices, reproducible from `seed`.
    pub fn random_forest(n: usize, seed: u64) -> Result<Self, GraphError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut order: Vec<usize> = (1..=n).collect();
        order.shuffle(&mut rng);
        let mut edges = Vec::new();
        for i in 1..order.len() {
            // roughly one vertex in five starts a new component
            if rng.gen_range(0..5) != 0 {
                let parent = order[rng.gen_range(0..i)];
                edges.push((parent, order[i]));
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// A G(n, p)-style random graph, reproducible from `seed`.
    pub fn random(n: usize, edge_probability: f64, seed: u64) -> Result<Self, GraphError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                if rng.gen_bool(edge_probability) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// Parses either a named family (`path:N`, `cycle:N`, `star:N`,
    /// `complete:N`, `empty:N`, `matching:R`, `forest:rand:N:SEED`), the
    /// compact form `N:u-v,u-v,...` used in verification reports, or the
    /// text format (optional `n <count>` header, then one `u v` per line).
    pub fn from_descriptor(desc: &str) -> Result<Self, GraphError> {
        let trimmed = desc.trim();
        if !trimmed.contains(char::is_whitespace) && trimmed.contains(':') {
            return Graph::from_family(trimmed);
        }
        Graph::parse_text(desc)
    }

    fn from_family(desc: &str) -> Result<Self, GraphError> {
        let malformed = || GraphError::Malformed(desc.to_string());
        let parts: Vec<&str> = desc.split(':').collect();
        let num = |s: &str| s.parse::<usize>().map_err(|_| malformed());
        match parts.as_slice() {
            ["path", n] => Graph::path(num(n)?),
            ["cycle", n] => Graph::cycle(num(n)?),
            ["star", n] => Graph::star(num(n)?),
            ["complete", n] => Graph::complete(num(n)?),
            ["empty", n] => Graph::empty(num(n)?),
            ["matching", r] => Graph::matching(num(r)?),
            ["forest", "rand", n, seed] => {
                let seed = seed.parse::<u64>().map_err(|_| malformed())?;
                Graph::random_forest(num(n)?, seed)
            }
            [n, edges] if n.parse::<usize>().is_ok() => {
                let edges = edges
                    .split(',')
                    .filter(|e| !e.is_empty())
                    .map(|e| {
                        let (u, v) = e.split_once('-').ok_or_else(malformed)?;
                        Ok((num(u)?, num(v)?))
                    })
                    .collect::<Result<Vec<_>, GraphError>>()?;
                Graph::from_edges(num(n)?, &edges)
            }
            _ => Err(malformed()),
        }
    }

    /// Parses the text format. Without a header the vertex count is the
    /// largest endpoint mentioned.
    pub fn parse_text(text: &str) -> Result<Self, GraphError> {
        let mut declared: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let perr = |msg: &str| GraphError::Parse { line: line_no, msg: msg.to_string() };
            if fields[0] == "n" {
                if declared.is_some() || !edges.is_empty() || fields.len() != 2 {
                    return Err(perr("`n <count>` must be a single leading header"));
                }
                declared = Some(fields[1].parse().map_err(|_| perr("bad vertex count"))?);
                continue;
            }
            if fields.len() != 2 {
                return Err(perr("expected `u v`"));
            }
            let u: usize = fields[0].parse().map_err(|_| perr("bad vertex"))?;
            let v: usize = fields[1].parse().map_err(|_| perr("bad vertex"))?;
            if u == 0 || v == 0 {
                return Err(perr("vertices are 1-indexed"));
            }
            edges.push((u, v));
        }
        let n = match declared {
            Some(n) => n,
            None => edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0),
        };
        Graph::from_edges(n, &edges)
    }

    /// Renders the text format (`n <count>` header, one edge per line).
    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for e in self.edges() {
            out.push_str(&format!("{} {}\n", e.0, e.1));
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v == 0 || v > self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Original label of vertex `v`.
    pub fn label(&self, v: usize) -> usize {
        self.labels[v - 1]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Current index of the vertex whose original label is `label`.
    pub fn index_of_label(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label).map(|i| i + 1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && v >= 1 && u <= self.n && v <= self.n && self.adj[u - 1] >> (v - 1) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v - 1])
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v - 1] | 1 << (v - 1))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 1..=self.n {
            let mut higher = self.adj[u - 1] >> u;
            while higher != 0 {
                let off = higher.trailing_zeros() as usize;
                out.push(Edge(u, u + 1 + off));
                higher &= higher - 1;
            }
        }
        out
    }

    /// Edges reported in original labels.
    pub fn labeled_edges(&self) -> BTreeSet<Edge> {
        self.edges().into_iter().map(|e| Edge::new(self.label(e.0), self.label(e.1))).collect()
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (1..=self.n).filter(|&v| self.adj[v - 1] == 0).collect()
    }

    /// Induced subgraph on `w`; survivors are re-indexed in increasing order.
    pub fn induced_subgraph(&self, w: &VertexSet) -> Result<Graph, GraphError> {
        if let Some(v) = w.iter().find(|&v| v > self.n) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let keep: Vec<usize> = w.iter().collect();
        let mut adj = Vec::with_capacity(keep.len());
        for &v in &keep {
            adj.push(compress(self.adj[v - 1], w.mask()));
        }
        let labels = keep.iter().map(|&v| self.labels[v - 1]).collect();
        Ok(Graph::from_adjacency(adj, labels))
    }

    /// `G \ W`: removes the vertices of `w` and their incident edges.
    pub fn delete_vertices(&self, w: &VertexSet) -> Result<Graph, GraphError> {
        if let Some(v) = w.iter().find(|&v| v > self.n) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        self.induced_subgraph(&self.vertices().difference(w))
    }

    /// `G \ x`.
    pub fn delete_vertex(&self, x: usize) -> Result<Graph, GraphError> {
        self.check_vertex(x)?;
        self.delete_vertices(&[x].into_iter().collect())
    }

    /// `G \ N[x]`.
    pub fn delete_closed_neighborhood(&self, x: usize) -> Result<Graph, GraphError> {
        self.check_vertex(x)?;
        self.delete_vertices(&self.closed_neighborhood(x))
    }

    /// `G \ e`: drops the edge, keeps both endpoints.
    pub fn delete_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        if !self.has_edge(e.0, e.1) {
            return Err(GraphError::NotAnEdge(e.0, e.1));
        }
        let mut adj = self.adj.clone();
        adj[e.0 - 1] &= !(1 << (e.1 - 1));
        adj[e.1 - 1] &= !(1 << (e.0 - 1));
        Ok(Graph::from_adjacency(adj, self.labels.clone()))
    }

    /// `G + e`: adds an edge between existing vertices.
    pub fn add_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        self.check_vertex(e.0)?;
        self.check_vertex(e.1)?;
        if e.0 == e.1 {
            return Err(GraphError::Loop(e.0));
        }
        if self.has_edge(e.0, e.1) {
            return Err(GraphError::DuplicateEdge(e.0, e.1));
        }
        let mut adj = self.adj.clone();
        adj[e.0 - 1] |= 1 << (e.1 - 1);
        adj[e.1 - 1] |= 1 << (e.0 - 1);
        Ok(Graph::from_adjacency(adj, self.labels.clone()))
    }

    /// `N[e] = N[u] ∪ N[v]`.
    pub fn edge_closed_neighborhood(&self, e: Edge) -> Result<VertexSet, GraphError> {
        if !self.has_edge(e.0, e.1) {
            return Err(GraphError::NotAnEdge(e.0, e.1));
        }
        Ok(self.closed_neighborhood(e.0).union(&self.closed_neighborhood(e.1)))
    }

    /// `G_e = G \ N[e]`.
    pub fn neighborhood_deleted_subgraph(&self, e: Edge) -> Result<Graph, GraphError> {
        let nbhd = self.edge_closed_neighborhood(e)?;
        self.delete_vertices(&nbhd)
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 1..=self.n {
            if seen >> (v - 1) & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << (v - 1);
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                let mut f = frontier;
                while f != 0 {
                    let i = f.trailing_zeros() as usize;
                    next |= self.adj[i];
                    f &= f - 1;
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(VertexSet(comp));
        }
        out
    }

    /// Acyclic iff `|E| = n - (number of components)`.
    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.connected_components().len() == self.n
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// A Hamiltonian path as a vertex sequence, if one exists.
    pub fn hamiltonian_path(&self) -> Option<Vec<usize>> {
        if self.n == 0 {
            return None;
        }
        if self.n == 1 {
            return Some(vec![1]);
        }
        let degrees: Vec<usize> = (1..=self.n).map(|v| self.degree(v)).collect();
        if degrees.iter().any(|&d| d == 0) || degrees.iter().filter(|&&d| d == 1).count() > 2 {
            return None;
        }
        if !self.is_connected() {
            return None;
        }
        // leaves must be endpoints, so start there when there are any
        let mut starts: Vec<usize> = (1..=self.n).collect();
        starts.sort_by_key(|&v| (degrees[v - 1], v));
        let mut path = Vec::with_capacity(self.n);
        for s in starts {
            path.clear();
            path.push(s);
            if self.extend_path(&mut path, 1 << (s - 1)) {
                return Some(path);
            }
            if degrees[s - 1] == 1 {
                // a path through a leaf must start or end there; trying it
                // as a start already covered both
                return None;
            }
        }
        None
    }

    /// A Hamiltonian cycle starting at vertex 1, if one exists.
    pub fn hamiltonian_cycle(&self) -> Option<Vec<usize>> {
        let mut found = None;
        self.for_each_hamiltonian_cycle(|c| {
            found = Some(c.to_vec());
            true
        });
        found
    }

    /// All Hamiltonian cycles, each listed once: starting at vertex 1 with
    /// the second vertex smaller than the last.
    pub fn hamiltonian_cycles(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.for_each_hamiltonian_cycle(|c| {
            out.push(c.to_vec());
            false
        });
        out
    }

    /// Calls `visit` on each Hamiltonian cycle until it returns `true`.
    pub fn for_each_hamiltonian_cycle<F: FnMut(&[usize]) -> bool>(&self, mut visit: F) {
        if self.n < 3 || (1..=self.n).any(|v| self.degree(v) < 2) || !self.is_connected() {
            return;
        }
        let mut path = vec![1];
        self.cycle_dfs(&mut path, 1, &mut visit);
    }

    fn cycle_dfs<F: FnMut(&[usize]) -> bool>(&self, path: &mut Vec<usize>, used: u64, visit: &mut F) -> bool {
        let last = *path.last().unwrap();
        if path.len() == self.n {
            if self.has_edge(last, 1) && path[1] < last {
                return visit(path);
            }
            return false;
        }
        let mut cand = self.adj[last - 1] & !used;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize + 1;
            cand &= cand - 1;
            path.push(v);
            let used2 = used | 1 << (v - 1);
            if self.remaining_viable(used2, v) && self.cycle_dfs(path, used2, visit) {
                return true;
            }
            path.pop();
        }
        false
    }

    /// Every unvisited vertex still needs two usable neighbors.
    fn remaining_viable(&self, used: u64, head: usize) -> bool {
        let all = low_bits(self.n);
        let free = all & !used;
        let mut f = free;
        while f != 0 {
            let i = f.trailing_zeros() as usize;
            f &= f - 1;
            // neighbors it could still attach to: free vertices, the path head, or vertex 1
            let avail = self.adj[i] & (free | 1 << (head - 1) | 1);
            if avail.count_ones() < 2 {
                return false;
            }
        }
        true
    }

    fn extend_path(&self, path: &mut Vec<usize>, used: u64) -> bool {
        if path.len() == self.n {
            return true;
        }
        let last = *path.last().unwrap();
        let mut cand = self.adj[last - 1] & !used;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize + 1;
            cand &= cand - 1;
            path.push(v);
            if self.extend_path(path, used | 1 << (v - 1)) {
                return true;
            }
            path.pop();
        }
        false
    }

    /// A Hamiltonian cycle `x_1..x_n` together with a `t` such that
    /// `{x_{t-1}, x_{t+2}}` is a chord (an edge joining two vertices three
    /// steps apart on the cycle, not itself a cycle edge). Every Hamiltonian
    /// cycle is tried before giving up.
    pub fn hamiltonian_cycle_with_chord(&self) -> Option<(Vec<usize>, Edge)> {
        let mut found = None;
        self.for_each_hamiltonian_cycle(|c| {
            if let Some(chord) = cycle_chord(self, c) {
                found = Some((c.to_vec(), chord));
                true
            } else {
                false
            }
        });
        found
    }

    /// Bitmask of the edge set over the pair order used by enumeration.
    pub fn edge_code(&self) -> u64 {
        let mut code = 0u64;
        let mut bit = 0;
        for u in 1..=self.n {
            for v in u + 1..=self.n {
                if self.has_edge(u, v) {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        code
    }
}

/// The first `{c[i-1], c[i+2]}` (indices mod n) present in `g`, for `n >= 5`.
pub fn cycle_chord(g: &Graph, cycle: &[usize]) -> Option<Edge> {
    let n = cycle.len();
    if n < 5 {
        return None;
    }
    (0..n).map(|i| (cycle[(i + n - 1) % n], cycle[(i + 2) % n])).find(|&(a, b)| g.has_edge(a, b)).map(|(a, b)| Edge::new(a, b))
}

/// Packs the bits of `mask` selected by `select` into the low bits.
fn compress(mask: u64, select: u64) -> u64 {
    let mut out = 0u64;
    let mut s = select;
    let mut k = 0;
    while s != 0 {
        let i = s.trailing_zeros();
        if mask >> i & 1 == 1 {
            out |= 1 << k;
        }
        k += 1;
        s &= s - 1;
    }
    out
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().iter().map(|e| format!("{}-{}", self.label(e.0), self.label(e.1))).collect();
        write!(f, "G(n={}; {})", self.n, edges.join(","))
    }
}

impl FromStr for Graph {
    type Err = GraphError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Graph::from_descriptor(s)
    }
}

/// Graph classes used to filter enumerations and samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphClass {
    All,
    /// At least one edge.
    NonEmpty,
    Forest,
    HamiltonianPath,
    HamiltonianCycle,
}

impl GraphClass {
    pub fn matches(&self, g: &Graph) -> bool {
        match self {
            GraphClass::All => true,
            GraphClass::NonEmpty => g.edge_count() > 0,
            GraphClass::Forest => g.is_forest(),
            GraphClass::HamiltonianPath => g.hamiltonian_path().is_some(),
            GraphClass::HamiltonianCycle => g.hamiltonian_cycle().is_some(),
        }
    }
}

/// All labeled graphs on `n` vertices in `class`, ordered by edge code.
pub fn enumerate_graphs(n: usize, class: GraphClass) -> Result<impl Iterator<Item = Graph>, GraphError> {
    if n > MAX_EXHAUSTIVE {
        return Err(GraphError::EnumerationTooLarge(n));
    }
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    Ok((0..total).filter_map(move |code| {
        let mut adj = vec![0u64; n];
        for (bit, &(u, v)) in pairs.iter().enumerate() {
            if code >> bit & 1 == 1 {
                adj[u - 1] |= 1 << (v - 1);
                adj[v - 1] |= 1 << (u - 1);
            }
        }
        let g = Graph::from_adjacency(adj, (1..=n).collect());
        class.matches(&g).then_some(g)
    }))
}

/// `count` graphs on `n` vertices in `class`, drawn reproducibly. Sample `i`
/// uses stream `i` of a ChaCha generator keyed by `seed`, so any sample can be
/// regenerated on its own.
pub fn sample_graphs(n: usize, count: usize, seed: u64, class: GraphClass) -> Result<Vec<Graph>, GraphError> {
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i as u64);
        let g = loop {
            let g = if class == GraphClass::Forest {
                Graph::random_forest(n, rng.gen())?
            } else {
                Graph::random(n, rng.gen_range(0.2..0.8), rng.gen())?
            };
            if class.matches(&g) {
                break g;
            }
        };
        out.push(g);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_set(g: &Graph) -> Vec<(usize, usize)> {
        g.labeled_edges().into_iter().map(|e| (e.0, e.1)).collect()
    }

    #[test]
    fn named_families() {
        assert_eq!(edge_set(&Graph::cycle(5).unwrap()), vec![(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)]);
        assert_eq!(edge_set(&Graph::path(3).unwrap()), vec![(1, 2), (2, 3)]);
        assert_eq!(Graph::star(3).unwrap().vertex_count(), 4);
        assert!(matches!(Graph::from_descriptor("cycle:2"), Err(GraphError::Malformed(_))));
        assert!(matches!(Graph::from_descriptor("wheel:5"), Err(GraphError::Malformed(_))));
        let f = Graph::from_descriptor("forest:rand:9:17").unwrap();
        assert!(f.is_forest());
        assert_eq!(f, Graph::from_descriptor("forest:rand:9:17").unwrap());
    }

    #[test]
    fn compact_form() {
        let g = Graph::from_descriptor("5:1-2,2-3,3-4,4-5,1-5").unwrap();
        assert_eq!(g, Graph::cycle(5).unwrap());
        assert_eq!(Graph::from_descriptor("4:").unwrap().edge_count(), 0);
        assert!(matches!(Graph::from_descriptor("4:1-2,2"), Err(GraphError::Malformed(_))));
        assert!(matches!(Graph::from_descriptor("3:1-4"), Err(GraphError::VertexOutOfRange { .. })));
    }

    #[test]
    fn text_format() {
        assert_eq!(Graph::from_descriptor("1 2\n1 2"), Err(GraphError::DuplicateEdge(1, 2)));
        assert_eq!(Graph::from_descriptor("1 1"), Err(GraphError::Loop(1)));
        let g = Graph::from_descriptor("n 5\n1 2\n# comment\n2 3\n").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(Graph::parse_text(&g.to_text()).unwrap(), g);
        assert!(matches!(Graph::from_descriptor("n 2\n1 3"), Err(GraphError::VertexOutOfRange { .. })));
        assert!(matches!(Graph::from_descriptor("1 2 3"), Err(GraphError::Parse { line: 1, .. })));
    }

    #[test]
    fn subgraphs() {
        let c5 = Graph::cycle(5).unwrap();
        let p = c5.induced_subgraph(&[1, 2, 3].into_iter().collect()).unwrap();
        assert_eq!(edge_set(&p), vec![(1, 2), (2, 3)]);
        assert_eq!(c5.induced_subgraph(&c5.vertices()).unwrap(), c5);

        let c6 = Graph::cycle(6).unwrap();
        let two = c6.induced_subgraph(&[1, 2, 4, 5].into_iter().collect()).unwrap();
        assert_eq!(edge_set(&two), vec![(1, 2), (4, 5)]);

        let ge = c5.neighborhood_deleted_subgraph(Edge(1, 2)).unwrap();
        assert_eq!(ge.vertex_count(), 1);
        assert_eq!(ge.label(1), 4);
        assert_eq!(ge.edge_count(), 0);

        let minus1 = c5.delete_vertex(1).unwrap();
        assert_eq!(edge_set(&minus1), vec![(2, 3), (3, 4), (4, 5)]);
        let minus_e = c5.delete_edge(Edge(1, 2)).unwrap();
        assert_eq!(minus_e.vertex_count(), 5);
        assert_eq!(edge_set(&minus_e), vec![(1, 5), (2, 3), (3, 4), (4, 5)]);
        assert!(minus_e.hamiltonian_path().is_some());
        assert_eq!(c5.delete_edge(Edge(1, 3)), Err(GraphError::NotAnEdge(1, 3)));
        assert!(c5.delete_vertex(6).is_err());
    }

    #[test]
    fn forests_and_components() {
        assert!(Graph::path(6).unwrap().is_forest());
        assert!(!Graph::cycle(3).unwrap().is_forest());
        let g = Graph::from_edges(5, &[(1, 2), (3, 4)]).unwrap();
        let comps: Vec<Vec<usize>> = g.connected_components().iter().map(|c| c.iter().collect()).collect();
        assert_eq!(comps, vec![vec![1, 2], vec![3, 4], vec![5]]);
    }

    #[test]
    fn hamiltonian_search() {
        let c6 = Graph::cycle(6).unwrap();
        let cyc = c6.hamiltonian_cycle().unwrap();
        assert_eq!(cyc, vec![1, 2, 3, 4, 5, 6]);
        assert!(Graph::matching(2).unwrap().hamiltonian_path().is_none());
        let p5 = Graph::path(5).unwrap();
        assert_eq!(p5.hamiltonian_path().unwrap(), vec![1, 2, 3, 4, 5]);
        assert!(p5.hamiltonian_cycle().is_none());
        assert_eq!(Graph::complete(5).unwrap().hamiltonian_cycles().len(), 12);
        assert!(Graph::cycle(5).unwrap().hamiltonian_cycle_with_chord().is_none());
        let chorded = Graph::cycle(6).unwrap().add_edge(Edge(1, 4)).unwrap();
        let (_, chord) = chorded.hamiltonian_cycle_with_chord().unwrap();
        assert_eq!(chord, Edge(1, 4));
        // 1-3 is only two steps apart on the cycle 1..6
        let short = Graph::cycle(6).unwrap().add_edge(Edge(1, 3)).unwrap();
        assert!(short.hamiltonian_cycle_with_chord().is_none());
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_graphs(3, GraphClass::Forest).unwrap().count(), 7);
        assert_eq!(enumerate_graphs(2, GraphClass::All).unwrap().count(), 2);
        assert!(matches!(enumerate_graphs(8, GraphClass::All), Err(GraphError::EnumerationTooLarge(8))));
        // labeled forests on 4 vertices: 38
        assert_eq!(enumerate_graphs(4, GraphClass::Forest).unwrap().count(), 38);
        let s = sample_graphs(9, 5, 3, GraphClass::Forest).unwrap();
        assert!(s.iter().all(|g| g.is_forest()));
        assert_eq!(s, sample_graphs(9, 5, 3, GraphClass::Forest).unwrap());
    }

    #[test]
    fn hamiltonian_agrees_with_brute_force() {
        // permutations of 1..=n checked directly
        fn brute(g: &Graph, cycle: bool) -> bool {
            fn perms(k: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
                if cur.len() == k {
                    return f(cur);
                }
                for v in 1..=k {
                    if !used[v] {
                        used[v] = true;
                        cur.push(v);
                        if perms(k, cur, used, f) {
                            return true;
                        }
                        cur.pop();
                        used[v] = false;
                    }
                }
                false
            }
            let n = g.vertex_count();
            perms(n, &mut Vec::new(), &mut vec![false; n + 1], &mut |p| {
                p.windows(2).all(|w| g.has_edge(w[0], w[1])) && (!cycle || (n >= 3 && g.has_edge(p[n - 1], p[0])))
            })
        }
        for g in enumerate_graphs(5, GraphClass::All).unwrap() {
            assert_eq!(g.hamiltonian_path().is_some(), brute(&g, false), "{g}");
            assert_eq!(g.hamiltonian_cycle().is_some(), brute(&g, true), "{g}");
        }
    }
}
