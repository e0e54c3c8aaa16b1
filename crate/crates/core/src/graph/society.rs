use super::{Graph, GraphError};

/// A graph together with a cyclically ordered sequence of distinct boundary
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Society {
    graph: Graph,
    omega: Vec<usize>,
}

impl Society {
    pub fn new(graph: Graph, omega: Vec<usize>) -> Result<Society, GraphError> {
        let mut seen = vec![false; graph.vertex_count()];
        for &v in &omega {
            if v >= graph.vertex_count() {
                return Err(GraphError::OmegaOutOfRange { vertex: v, n: graph.vertex_count() });
            }
            if seen[v] {
                return Err(GraphError::OmegaDuplicate(v));
            }
            seen[v] = true;
        }
        Ok(Society { graph, omega })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Boundary vertices in cyclic order.
    pub fn omega(&self) -> &[usize] {
        &self.omega
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_range() {
        let g = Graph::path(3);
        assert_eq!(
            Society::new(g.clone(), vec![0, 0]),
            Err(GraphError::OmegaDuplicate(0))
        );
        assert_eq!(
            Society::new(g, vec![0, 5]),
            Err(GraphError::OmegaOutOfRange { vertex: 5, n: 3 })
        );
    }
}
