//! Finite undirected simple graphs with dense integer vertex labels.
//!
//! Vertices are always `0..n`. Edges are unordered pairs stored in normalized
//! form `(min, max)`, so an edge set is an ordinary `BTreeSet<Edge>` and every
//! listing of edges is automatically in lexicographic order.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// An unordered pair of distinct vertices, normalized so that `e.0 < e.1`.
pub type Edge = (usize, usize);

/// A set of edges, ordered lexicographically by the normalized pairs.
pub type EdgeSet = BTreeSet<Edge>;

/// Normalizes an unordered pair into an [`Edge`].
///
/// Does not reject loops; constructors that build graphs do.
pub fn edge(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: cannot parse {text:?} as an edge")]
    Malformed { line: usize, text: String },
    #[error("loop edge at vertex {v}")]
    Loop { v: usize },
    #[error("duplicate edge {0}-{1}", .e.0, .e.1)]
    Duplicate { e: Edge },
    #[error("vertex {v} out of range for vertex count {n}")]
    OutOfRange { v: usize, n: usize },
    #[error("edge {0}-{1} is not in the graph", .e.0, .e.1)]
    MissingEdge { e: Edge },
    #[error("edge connectivity is undefined for disconnected or single-vertex graphs")]
    ConnectivityUndefined,
}

/// A finite undirected simple graph: no loops, no multiple edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
}

#[derive(Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = GraphError;

    fn try_from(raw: RawGraph) -> Result<Self, Self::Error> {
        Graph::new(raw.n, raw.edges)
    }
}

impl Graph {
    /// Builds a graph on vertices `0..n` from a list of unordered pairs.
    ///
    /// Rejects loops, duplicate pairs (in either orientation) and endpoints
    /// outside `0..n`.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::Loop { v: u });
            }
            if u >= n {
                return Err(GraphError::OutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::OutOfRange { v, n });
            }
            let e = edge(u, v);
            if !set.insert(e) {
                return Err(GraphError::Duplicate { e });
            }
        }
        Ok(Graph { n, edges: set })
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is always valid")
    }

    /// The cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges = (0..n).map(|u| (u, (u + 1) % n));
        Graph::new(n, edges).expect("cycle is always valid")
    }

    /// The path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|u| (u - 1, u));
        Graph::new(n, edges).expect("path is always valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    /// All edges in lexicographic order. The position of an edge in this list
    /// is its edge id, used by orbit computations and the hitting-set solvers.
    pub fn edge_vec(&self) -> Vec<Edge> {
        self.edges.iter().copied().collect()
    }

    /// Map from edge to its id (rank in lexicographic order).
    pub fn edge_index(&self) -> BTreeMap<Edge, usize> {
        self.edges
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i))
            .collect()
    }

    pub fn edge_set(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&edge(u, v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Adjacency lists for all vertices, each sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Returns the graph with the edges of `x` removed; same vertex set.
    ///
    /// Every edge of `x` must be present in the graph.
    pub fn delete_edges(&self, x: &EdgeSet) -> Result<Graph, GraphError> {
        for e in x {
            if !self.edges.contains(e) {
                return Err(GraphError::MissingEdge { e: *e });
            }
        }
        Ok(Graph {
            n: self.n,
            edges: self.edges.difference(x).copied().collect(),
        })
    }

    /// True iff all vertices lie in one component. The empty graph and the
    /// single-vertex graph are connected by convention.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// Minimum number of edges whose removal disconnects the graph, computed
    /// as the minimum over `t != 0` of the max-flow between vertex `0` and `t`
    /// with unit edge capacities.
    pub fn edge_connectivity(&self) -> Result<usize, GraphError> {
        if self.n < 2 || !self.is_connected() {
            return Err(GraphError::ConnectivityUndefined);
        }
        let adj = self.adjacency();
        let mut best = usize::MAX;
        for t in 1..self.n {
            best = best.min(self.max_flow_unit(&adj, 0, t));
            if best == 0 {
                break;
            }
        }
        Ok(best)
    }

    /// Edmonds-Karp with capacity 1 per directed arc (two arcs per edge).
    fn max_flow_unit(&self, adj: &[Vec<usize>], s: usize, t: usize) -> usize {
        let mut cap: BTreeMap<(usize, usize), i32> = BTreeMap::new();
        for &(u, v) in &self.edges {
            cap.insert((u, v), 1);
            cap.insert((v, u), 1);
        }
        let mut flow = 0;
        loop {
            let mut prev = vec![usize::MAX; self.n];
            prev[s] = s;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for &w in &adj[u] {
                    if prev[w] == usize::MAX && cap[&(u, w)] > 0 {
                        prev[w] = u;
                        queue.push_back(w);
                    }
                }
            }
            if prev[t] == usize::MAX {
                return flow;
            }
            let mut v = t;
            while v != s {
                let u = prev[v];
                *cap.get_mut(&(u, v)).unwrap() -= 1;
                *cap.get_mut(&(v, u)).unwrap() += 1;
                v = u;
            }
            flow += 1;
        }
    }

    /// Renders the graph in the edge-list text format accepted by [`Graph::parse`].
    pub fn to_edge_list_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the edge-list text format: an optional first line `n <count>`
    /// declaring the vertex count, followed by one line `u v` per edge.
    /// Without a declaration the vertex count is one more than the largest
    /// label (zero for empty input). Blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut declared: Option<usize> = None;
        let mut pairs: Vec<(usize, usize, usize)> = Vec::new(); // (u, v, line)
        let mut saw_edge_line = false;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(GraphError::Malformed {
                    line: line_no,
                    text: raw.to_string(),
                });
            }
            if fields[0] == "n" && !saw_edge_line && declared.is_none() {
                let count = fields[1].parse().map_err(|_| GraphError::Malformed {
                    line: line_no,
                    text: raw.to_string(),
                })?;
                declared = Some(count);
                continue;
            }
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| GraphError::Malformed {
                    line: line_no,
                    text: raw.to_string(),
                })
            };
            let u = parse(fields[0])?;
            let v = parse(fields[1])?;
            saw_edge_line = true;
            pairs.push((u, v, line_no));
        }
        let max_label = pairs.iter().map(|&(u, v, _)| u.max(v)).max();
        let n = declared.unwrap_or(match max_label {
            Some(m) => m + 1,
            None => 0,
        });
        let mut set = BTreeSet::new();
        for (u, v, _line) in &pairs {
            if *u == *v {
                return Err(GraphError::Loop { v: *u });
            }
            if *u >= n {
                return Err(GraphError::OutOfRange { v: *u, n });
            }
            if *v >= n {
                return Err(GraphError::OutOfRange { v: *v, n });
            }
            let e = edge(*u, *v);
            if !set.insert(e) {
                return Err(GraphError::Duplicate { e });
            }
        }
        Ok(Graph { n, edges: set })
    }
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Graph::parse(s)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "graph on {} vertices with {} edges",
            self.n,
            self.edges.len()
        )
    }
}

/// Collects pairs into an [`EdgeSet`], normalizing each pair.
pub fn edge_set(pairs: &[(usize, usize)]) -> EdgeSet {
    pairs.iter().map(|&(u, v)| edge(u, v)).collect()
}
