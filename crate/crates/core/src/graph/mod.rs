//! Simple undirected graphs with dense integer vertex ids, plus the
//! generators and basic analysis the rest of the toolkit is built on.

mod necklace;
mod regular;
mod society;

pub use necklace::NecklaceSpec;
pub use regular::random_regular_with_girth;
pub use society::Society;

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("line graph requires at least one edge")]
    EdgelessLineGraph,
    #[error("vertex set is not connected (vertex {0} unreachable)")]
    DisconnectedSet(usize),
    #[error("vertex set contains duplicate vertex {0}")]
    DuplicateVertex(usize),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("necklace clique {index} has {size} vertices, exceeding q = {q}")]
    CliqueTooLarge { index: usize, size: usize, q: usize },
    #[error("necklace cliques {i} and {j} cross")]
    CrossingCliques { i: usize, j: usize },
    #[error("necklace cliques {i} and {j} share an edge (two common vertices)")]
    OverlappingCliques { i: usize, j: usize },
    #[error("necklace clique {index} is empty")]
    EmptyClique { index: usize },
    #[error("chain length must be positive")]
    EmptyChain,
    #[error("society boundary vertex {vertex} out of range for graph on {n} vertices")]
    OmegaOutOfRange { vertex: usize, n: usize },
    #[error("society boundary repeats vertex {0}")]
    OmegaDuplicate(usize),
    #[error("regular generator: degree and girth_min must be at least 1 and 3")]
    RegularBadParams,
    #[error("regular generator: target size {0} too large, refusing to search")]
    RegularTargetTooLarge(usize),
    #[error(
        "regular generator: {attempts} attempts exhausted without a {degree}-regular graph of girth >= {girth_min} (last size tried: {last_n})"
    )]
    RegularAttemptsExhausted {
        degree: usize,
        girth_min: usize,
        attempts: usize,
        last_n: usize,
    },
}

/// A simple undirected graph on vertices `0..n`.
///
/// Immutable after construction; edges are stored canonically as `(a, b)`
/// with `a < b`, sorted lexicographically and deduplicated, so two graphs
/// compare equal iff they have the same vertex count and edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; input
    /// order is irrelevant to equality.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut canon: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        canon.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &canon {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges: canon, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: each pair ascending, list sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_regular(&self, degree: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == degree)
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// BFS distances from `start`, restricted to vertices with `allowed[v]`.
    /// `usize::MAX` marks unreachable vertices.
    pub(crate) fn bfs_within(&self, start: usize, allowed: &[bool]) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if allowed[w] && dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Diameter of the subgraph induced on `component`, which must be a
    /// connected, duplicate-free vertex set of this graph.
    pub fn component_diameter(&self, component: &[usize]) -> Result<usize, GraphError> {
        if component.is_empty() {
            return Err(GraphError::EmptySet);
        }
        let mut allowed = vec![false; self.n];
        for &v in component {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
            if allowed[v] {
                return Err(GraphError::DuplicateVertex(v));
            }
            allowed[v] = true;
        }
        let mut diameter = 0;
        for &v in component {
            let dist = self.bfs_within(v, &allowed);
            for &w in component {
                if dist[w] == usize::MAX {
                    return Err(GraphError::DisconnectedSet(w));
                }
                diameter = diameter.max(dist[w]);
            }
        }
        Ok(diameter)
    }

    /// Length of a shortest cycle, or `None` for forests.
    ///
    /// BFS from every vertex; a non-tree edge scanned at `(u, w)` witnesses a
    /// closed walk of length `dist[u] + dist[w] + 1`, and the minimum over all
    /// roots and edges is exact.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        if best.map_or(true, |b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Graph {
        if n < 3 {
            return Graph::path(n);
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::new(n, &edges).expect("cycle edges are valid")
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).expect("complete graph edges are valid")
    }

    /// The 3-regular Petersen graph (girth 5).
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5)); // outer pentagon
            edges.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
            edges.push((i, 5 + i)); // spokes
        }
        Graph::new(10, &edges).expect("petersen edges are valid")
    }

    /// The k x k triangular grid: the square grid with one consistent
    /// diagonal per cell. Vertex (i, j) has index `i * k + j` for
    /// `0 <= i, j < k`; edges run (i,j)-(i+1,j), (i,j)-(i,j+1) and
    /// (i,j)-(i+1,j+1). Interior vertices have degree six.
    pub fn triangular_grid(k: usize) -> Graph {
        let idx = |i: usize, j: usize| i * k + j;
        let mut edges = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if i + 1 < k {
                    edges.push((idx(i, j), idx(i + 1, j)));
                }
                if j + 1 < k {
                    edges.push((idx(i, j), idx(i, j + 1)));
                }
                if i + 1 < k && j + 1 < k {
                    edges.push((idx(i, j), idx(i + 1, j + 1)));
                }
            }
        }
        Graph::new(k * k, &edges).expect("grid edges are valid")
    }

    /// Line graph: vertex `i` of the output is the `i`-th edge of `self` in
    /// canonical order; two output vertices are adjacent iff their edges
    /// share an endpoint.
    pub fn line_graph(&self) -> Result<Graph, GraphError> {
        if self.edges.is_empty() {
            return Err(GraphError::EdgelessLineGraph);
        }
        // For each vertex, the indices of its incident edges.
        let mut incident = vec![Vec::new(); self.n];
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            incident[a].push(i);
            incident[b].push(i);
        }
        let mut edges = Vec::new();
        for list in &incident {
            for (p, &e) in list.iter().enumerate() {
                for &f in &list[p + 1..] {
                    edges.push((e, f));
                }
            }
        }
        Graph::new(self.edges.len(), &edges)
    }
}
