//! Vertex-disjoint path counting and the vortex order check.
//!
//! Disjoint paths are counted by unit-capacity maximum flow on the split
//! graph (each vertex becomes an in/out arc of capacity one), which is
//! Menger's theorem made executable. A vertex lying in both the source and
//! sink sets counts as one path of length zero.

use std::collections::VecDeque;

use crate::graph::{Graph, Society};

use super::DecompError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointPaths {
    pub count: usize,
    /// Pairwise vertex-disjoint paths, each a vertex sequence from a source
    /// to a sink. Length-0 paths are single vertices in both sets.
    pub paths: Vec<Vec<usize>>,
}

/// Maximum number of pairwise vertex-disjoint paths between `sources` and
/// `sinks` (endpoints included in the disjointness requirement).
pub fn max_vertex_disjoint_paths(g: &Graph, sources: &[usize], sinks: &[usize]) -> DisjointPaths {
    let n = g.vertex_count();
    // Node 2v = "in" side of v, 2v+1 = "out" side; then source and sink.
    let s = 2 * n;
    let t = 2 * n + 1;
    let mut net = FlowNetwork::new(2 * n + 2);
    for v in 0..n {
        net.add_arc(2 * v, 2 * v + 1);
    }
    for &(u, v) in g.edges() {
        net.add_arc(2 * u + 1, 2 * v);
        net.add_arc(2 * v + 1, 2 * u);
    }
    let mut src = sources.to_vec();
    src.sort_unstable();
    src.dedup();
    let mut snk = sinks.to_vec();
    snk.sort_unstable();
    snk.dedup();
    for &v in &src {
        net.add_arc(s, 2 * v);
    }
    for &v in &snk {
        net.add_arc(2 * v + 1, t);
    }
    let count = net.max_flow(s, t);

    // Decompose the flow into paths; unit vertex capacities make every
    // forward walk simple.
    let mut paths = Vec::with_capacity(count);
    for &v in &src {
        let first = net.arc_with_flow(s, 2 * v);
        let Some(first) = first else { continue };
        net.drain(first);
        let mut cur = 2 * v;
        let mut path = Vec::new();
        while cur != t {
            if cur % 2 == 0 {
                path.push(cur / 2);
            }
            let arc = net
                .flow_arc_out(cur)
                .expect("flow conservation guarantees an outgoing unit");
            net.drain(arc);
            cur = net.head(arc);
        }
        paths.push(path);
    }
    debug_assert_eq!(paths.len(), count);
    DisjointPaths { count, paths }
}

struct FlowNetwork {
    // Arcs stored in pairs: arc 2i is forward, 2i+1 its residual twin.
    heads: Vec<usize>,
    residual: Vec<u8>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> FlowNetwork {
        FlowNetwork { heads: Vec::new(), residual: Vec::new(), out: vec![Vec::new(); nodes] }
    }

    fn add_arc(&mut self, from: usize, to: usize) {
        let id = self.heads.len();
        self.heads.push(to);
        self.residual.push(1);
        self.out[from].push(id);
        self.heads.push(from);
        self.residual.push(0);
        self.out[to].push(id + 1);
    }

    fn head(&self, arc: usize) -> usize {
        self.heads[arc]
    }

    fn max_flow(&mut self, s: usize, t: usize) -> usize {
        let mut total = 0;
        loop {
            // BFS for a shortest augmenting path.
            let mut pred: Vec<Option<usize>> = vec![None; self.out.len()];
            let mut queue = VecDeque::from([s]);
            let mut found = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for &arc in &self.out[u] {
                    let w = self.heads[arc];
                    if self.residual[arc] > 0 && pred[w].is_none() && w != s {
                        pred[w] = Some(arc);
                        if w == t {
                            found = true;
                            break 'bfs;
                        }
                        queue.push_back(w);
                    }
                }
            }
            if !found {
                return total;
            }
            let mut w = t;
            while w != s {
                let arc = pred[w].expect("path recorded");
                self.residual[arc] -= 1;
                self.residual[arc ^ 1] += 1;
                w = self.heads[arc ^ 1];
            }
            total += 1;
        }
    }

    /// Forward arc from `from` to `to` currently carrying flow, if any.
    fn arc_with_flow(&self, from: usize, to: usize) -> Option<usize> {
        self.out[from]
            .iter()
            .copied()
            .find(|&arc| arc % 2 == 0 && self.heads[arc] == to && self.residual[arc ^ 1] > 0)
    }

    /// Any forward arc leaving `from` that carries flow.
    fn flow_arc_out(&self, from: usize) -> Option<usize> {
        self.out[from]
            .iter()
            .copied()
            .find(|&arc| arc % 2 == 0 && self.residual[arc ^ 1] > 0)
    }

    /// Removes one unit of flow from a forward arc.
    fn drain(&mut self, arc: usize) {
        debug_assert!(arc % 2 == 0 && self.residual[arc ^ 1] > 0);
        self.residual[arc] += 1;
        self.residual[arc ^ 1] -= 1;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VortexWitness {
    pub u: usize,
    pub v: usize,
    /// More than rho mutually vertex-disjoint paths between the two boundary
    /// intervals anchored at `u` and `v`.
    pub paths: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VortexCheck {
    pub is_vortex: bool,
    pub witness: Option<VortexWitness>,
}

/// Checks whether `society` is a rho-vortex: for every ordered pair of
/// distinct boundary vertices u, v there are at most `rho` mutually
/// vertex-disjoint paths between I + {u} and J + {v}, where I is the
/// boundary interval strictly after u and before v in cyclic order and J
/// the complementary interval.
pub fn vortex_order_check(society: &Society, rho: usize) -> Result<VortexCheck, DecompError> {
    let omega = society.omega();
    let len = omega.len();
    if len < 2 {
        return Err(DecompError::OmegaTooSmall { len });
    }
    for u_pos in 0..len {
        for v_pos in 0..len {
            if u_pos == v_pos {
                continue;
            }
            let mut side_a = vec![omega[u_pos]];
            let mut p = (u_pos + 1) % len;
            while p != v_pos {
                side_a.push(omega[p]);
                p = (p + 1) % len;
            }
            let mut side_b = vec![omega[v_pos]];
            let mut p = (v_pos + 1) % len;
            while p != u_pos {
                side_b.push(omega[p]);
                p = (p + 1) % len;
            }
            let result = max_vertex_disjoint_paths(society.graph(), &side_a, &side_b);
            if result.count > rho {
                return Ok(VortexCheck {
                    is_vortex: false,
                    witness: Some(VortexWitness {
                        u: omega[u_pos],
                        v: omega[v_pos],
                        paths: result.paths,
                    }),
                });
            }
        }
    }
    Ok(VortexCheck { is_vortex: true, witness: None })
}
