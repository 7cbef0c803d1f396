//! Simple graphs, the graph families, minimal vertex covers, chordality and
//! the combinatorial quantities attached to edge modules.

mod chordal;
mod covers;
mod family;
mod profile;

pub use chordal::{has_chordless_cycle, is_chordal, is_peo, maximum_cardinality_search, peo};
pub use covers::{cover_ideal, cover_monomials, maximal_independent_sets, minimal_vertex_covers, CoverSet};
pub use family::{biclique, cameron_walker, cw_variable_order, path, CW_ORDER_TEXT};
pub use profile::{back_degree, connectivity_profile, depth_bound_a, ConnectivityProfile};

pub(crate) use covers::bits;

use serde::Serialize;

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("{0} vertices exceed the supported maximum of 64")]
    TooManyVertices(usize),
    #[error("loop at vertex {0}")]
    Loop(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("the labeling is not a perfect elimination ordering")]
    NotPeo,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Family {
    Path { n: usize },
    Biclique { p: usize, q: usize, r: usize },
    CameronWalker { p: Vec<usize>, q: Vec<usize> },
    Custom,
}

/// A labeled simple graph on at most 64 vertices, stored as adjacency bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    adj: Vec<u64>,
    family: Family,
    /// Vertices from largest to smallest in the family's variable order.
    var_order: Vec<usize>,
}

impl Graph {
    /// Graph on vertices named `names` with 0-based `edges`.
    pub fn new(names: Vec<String>, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let n = names.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = vec![0u64; n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::InvalidParameters(format!("edge ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(GraphError::Loop(names[a].clone()));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(Self { names, adj, family: Family::Custom, var_order: (0..n).collect() })
    }

    /// Graph on vertices `1..=n` (named by their numbers) with 1-based edges.
    pub fn numbered(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let names = (1..=n).map(|i| i.to_string()).collect();
        let e: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(a, b)| {
                if a == 0 || b == 0 {
                    Err(GraphError::InvalidParameters("vertices are numbered from 1".into()))
                } else {
                    Ok((a - 1, b - 1))
                }
            })
            .collect::<Result<_, _>>()?;
        Self::new(names, &e)
    }

    /// Graph on `n` vertices from adjacency masks.
    pub fn from_adjacency(names: Vec<String>, adj: Vec<u64>) -> Self {
        let n = names.len();
        Self { names, adj, family: Family::Custom, var_order: (0..n).collect() }
    }

    pub(crate) fn with_family(mut self, family: Family, var_order: Vec<usize>) -> Self {
        debug_assert_eq!(var_order.len(), self.names.len());
        self.family = family;
        self.var_order = var_order;
        self
    }

    /// Read one edge `u v` per line. Integer labels `1..n` are used as vertex
    /// numbers; otherwise vertices are numbered by first appearance.
    /// `#` starts a comment.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut pairs: Vec<(usize, String, String)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
                return Err(GraphError::Parse { line: i + 1, msg: "expected `u v`".into() });
            };
            pairs.push((i + 1, a.to_string(), b.to_string()));
        }
        let numeric = pairs
            .iter()
            .all(|(_, a, b)| matches!(a.parse::<usize>(), Ok(v) if v > 0) && matches!(b.parse::<usize>(), Ok(v) if v > 0));
        if numeric {
            let edges: Vec<(usize, usize)> =
                pairs.iter().map(|(_, a, b)| (a.parse().unwrap(), b.parse().unwrap())).collect();
            let n = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
            if n > MAX_VERTICES {
                return Err(GraphError::TooManyVertices(n));
            }
            return Self::numbered(n, &edges);
        }
        let mut names: Vec<String> = Vec::new();
        let mut edges = Vec::new();
        for (line, a, b) in &pairs {
            let mut id = |s: &String| match names.iter().position(|x| x == s) {
                Some(p) => p,
                None => {
                    names.push(s.clone());
                    names.len() - 1
                }
            };
            let (ia, ib) = (id(a), id(b));
            if ia == ib {
                return Err(GraphError::Parse { line: *line, msg: format!("loop at `{a}`") });
            }
            edges.push((ia, ib));
        }
        Self::new(names, &edges)
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|x| x == name)
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn var_order(&self) -> &[usize] {
        &self.var_order
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n() {
            for b in a + 1..self.n() {
                if self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn all_mask(&self) -> u64 {
        if self.n() == 64 {
            u64::MAX
        } else {
            (1u64 << self.n()) - 1
        }
    }

    /// Number of connected components of the subgraph induced on `mask`.
    pub fn components_in(&self, mask: u64) -> usize {
        let mut left = mask;
        let mut count = 0;
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = self.adj[v] & mask & !comp;
                comp |= new;
                frontier |= new;
            }
            left &= !comp;
            count += 1;
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.components_in(self.all_mask()) == 1
    }

    /// The graph with vertex `order[k]` renamed to position `k`; names are kept.
    pub fn relabel(&self, order: &[usize]) -> Graph {
        let n = self.n();
        let mut pos = vec![0; n];
        for (k, &v) in order.iter().enumerate() {
            pos[v] = k;
        }
        let mut adj = vec![0u64; n];
        for (a, b) in self.edges() {
            adj[pos[a]] |= 1 << pos[b];
            adj[pos[b]] |= 1 << pos[a];
        }
        let names = order.iter().map(|&v| self.names[v].clone()).collect();
        Graph::from_adjacency(names, adj)
    }

    /// Edge list `"u v"` lines using vertex names.
    pub fn to_edge_list(&self) -> String {
        self.edges().iter().map(|&(a, b)| format!("{} {}\n", self.names[a], self.names[b])).collect()
    }
}

/// Canonical adjacency of a graph on at most 8 vertices: the
/// lexicographically smallest upper-triangle bit string over all relabelings.
pub fn canonical_form(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 8, "canonical form is exhaustive and limited to 8 vertices");
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut code = 0u64;
        let mut bit = 0;
        for a in 0..n {
            for b in a + 1..n {
                if g.has_edge(perm[a], perm[b]) {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(code);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// All connected graphs on vertices `1..=n` (n ≤ 8), one per edge set.
pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
        let names = (1..=n).map(|i| i.to_string()).collect();
        let g = Graph::new(names, &edges).expect("valid edges");
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// One connected graph per isomorphism class on `n ≤ 8` vertices.
pub fn connected_graph_classes(n: usize) -> Vec<Graph> {
    let mut seen = std::collections::HashSet::new();
    all_connected_graphs(n).into_iter().filter(|g| seen.insert(canonical_form(g))).collect()
}
