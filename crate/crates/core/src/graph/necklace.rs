//! q-necklaces: a chain cycle v_0 v_1 ... v_{n-1} v_0 together with
//! pairwise edge-disjoint cliques of at most q vertices attached in a
//! non-crossing pattern along the chain.

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// Specification of a q-necklace. Chain positions are `0..n`; each clique is
/// a set of chain positions. Parallel edges of the underlying multigraph
/// (a clique edge doubling a chain edge) collapse in [`NecklaceSpec::graph`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecklaceSpec {
    pub n: usize,
    pub q: usize,
    pub cliques: Vec<Vec<usize>>,
}

impl NecklaceSpec {
    /// Validates and canonicalizes: cliques are sorted ascending, each with
    /// at most `q` distinct in-range vertices, pairwise sharing at most one
    /// vertex, and pairwise non-crossing.
    pub fn new(n: usize, q: usize, cliques: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyChain);
        }
        let mut canon = Vec::with_capacity(cliques.len());
        for (index, clique) in cliques.into_iter().enumerate() {
            let mut c = clique;
            c.sort_unstable();
            c.dedup();
            if c.is_empty() {
                return Err(GraphError::EmptyClique { index });
            }
            if let Some(&v) = c.iter().find(|&&v| v >= n) {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if c.len() > q {
                return Err(GraphError::CliqueTooLarge { index, size: c.len(), q });
            }
            canon.push(c);
        }
        for i in 0..canon.len() {
            for j in (i + 1)..canon.len() {
                let common = intersection_size(&canon[i], &canon[j]);
                if common >= 2 {
                    return Err(GraphError::OverlappingCliques { i, j });
                }
                if crosses(&canon[i], &canon[j]) {
                    return Err(GraphError::CrossingCliques { i, j });
                }
            }
        }
        Ok(NecklaceSpec { n, q, cliques: canon })
    }

    /// The necklace graph: chain cycle plus all clique edges, collapsed to a
    /// simple graph. Vertex ids are the chain positions.
    pub fn graph(&self) -> Graph {
        let mut edges = Vec::new();
        if self.n >= 2 {
            for i in 1..self.n {
                edges.push((i - 1, i));
            }
            if self.n >= 3 {
                edges.push((self.n - 1, 0));
            }
        }
        for clique in &self.cliques {
            for (p, &a) in clique.iter().enumerate() {
                for &b in &clique[p + 1..] {
                    edges.push((a, b));
                }
            }
        }
        Graph::new(self.n, &edges).expect("validated necklace spec yields valid edges")
    }
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|v| b.binary_search(v).is_ok()).count()
}

/// True iff there exist a < b < c < d with a, c in one clique and b, d in the
/// other (either orientation).
fn crosses(a: &[usize], b: &[usize]) -> bool {
    interleaves(a, b) || interleaves(b, a)
}

fn interleaves(outer: &[usize], inner: &[usize]) -> bool {
    for (p, &x) in inner.iter().enumerate() {
        for &y in &inner[p + 1..] {
            // Need outer elements strictly before x and strictly inside (x, y).
            let before = outer.first().map_or(false, |&o| o < x);
            let between = outer.iter().any(|&o| x < o && o < y);
            if before && between {
                return true;
            }
        }
    }
    false
}
