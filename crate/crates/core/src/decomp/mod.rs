//! Tree- and path-shaped decompositions: validation, width and adhesion,
//! the constructive necklace decompositions, an exact treewidth oracle, and
//! the vortex order check.

mod necklace_td;
mod treewidth;
mod vortex;

pub use necklace_td::{combine_necklace_vortex, necklace_td};
pub use treewidth::{exact_treewidth, TreewidthResult, DEFAULT_EXACT_LIMIT, MAX_EXACT_VERTICES};
pub use vortex::{max_vertex_disjoint_paths, vortex_order_check, DisjointPaths, VortexCheck, VortexWitness};

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, GraphError, Society};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecompError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph has {vertices} vertices, exceeding the exact solver limit {limit}")]
    SizeLimitExceeded { vertices: usize, limit: usize },
    #[error("exact solver limit {limit} exceeds the hard cap {max}")]
    LimitTooLarge { limit: usize, max: usize },
    #[error("combination requires q >= 3, got q = {q}")]
    CombineRequiresQ3 { q: usize },
    #[error("necklace chain has {chain} vertices but the society boundary has {omega}")]
    ChainLengthMismatch { chain: usize, omega: usize },
    #[error("necklace decomposition invalid: {0:?}")]
    InvalidNecklaceTd(Vec<TdViolation>),
    #[error("vortical decomposition invalid: {0:?}")]
    InvalidVortical(Vec<VorticalViolation>),
    #[error("vortex order check needs at least 2 boundary vertices, got {len}")]
    OmegaTooSmall { len: usize },
}

/// A tree of bags over a host graph. Plain data: nothing is enforced at
/// construction, so invalid decompositions (for instance read from a file)
/// can be represented and then diagnosed by [`validate_td`].
///
/// Node ids are `0..bags.len()` and must match the tree's vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub tree: Graph,
    pub bags: Vec<Vec<usize>>,
}

impl TreeDecomposition {
    pub fn new(tree: Graph, bags: Vec<Vec<usize>>) -> TreeDecomposition {
        TreeDecomposition { tree, bags }
    }

    /// Max bag size minus one; -1 when every bag is empty.
    pub fn width(&self) -> i64 {
        self.bags.iter().map(Vec::len).max().unwrap_or(0) as i64 - 1
    }

    /// Max intersection size over adjacent bags; 0 for a single-node tree.
    pub fn adhesion(&self) -> usize {
        self.tree
            .edges()
            .iter()
            .map(|&(a, b)| intersection_size(&self.bags[a], &self.bags[b]))
            .max()
            .unwrap_or(0)
    }
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    // Bags are small; quadratic scan avoids any sortedness assumption.
    a.iter().filter(|v| b.contains(v)).count()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TdViolation {
    /// The tree's vertex count differs from the number of bags.
    BagCountMismatch { tree_nodes: usize, bags: usize },
    NotATree,
    BagVertexOutOfRange { node: usize, vertex: usize },
    VertexUncovered { vertex: usize },
    EdgeUncovered { u: usize, v: usize },
    /// The nodes whose bags contain `vertex` do not induce a connected subtree.
    TraceDisconnected { vertex: usize },
}

impl fmt::Display for TdViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TdViolation::BagCountMismatch { tree_nodes, bags } => {
                write!(f, "tree has {tree_nodes} nodes but {bags} bags were given")
            }
            TdViolation::NotATree => write!(f, "decomposition graph is not a tree"),
            TdViolation::BagVertexOutOfRange { node, vertex } => {
                write!(f, "bag {node} contains out-of-range vertex {vertex}")
            }
            TdViolation::VertexUncovered { vertex } => {
                write!(f, "vertex {vertex} lies in no bag")
            }
            TdViolation::EdgeUncovered { u, v } => {
                write!(f, "edge ({u}, {v}) has no bag containing both ends")
            }
            TdViolation::TraceDisconnected { vertex } => {
                write!(f, "bags containing vertex {vertex} do not form a connected subtree")
            }
        }
    }
}

/// Checks the three tree-decomposition conditions (vertex coverage, edge
/// coverage, connected traces) plus structural sanity of the inputs.
/// Returns the empty list iff `td` is a valid decomposition of `g`.
pub fn validate_td(g: &Graph, td: &TreeDecomposition) -> Vec<TdViolation> {
    let mut out = Vec::new();
    let nodes = td.tree.vertex_count();
    if nodes != td.bags.len() {
        out.push(TdViolation::BagCountMismatch { tree_nodes: nodes, bags: td.bags.len() });
        return out;
    }
    if nodes == 0 || td.tree.edge_count() != nodes - 1 || td.tree.components().len() != 1 {
        out.push(TdViolation::NotATree);
        return out;
    }
    let n = g.vertex_count();
    let mut range_ok = true;
    for (node, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                out.push(TdViolation::BagVertexOutOfRange { node, vertex: v });
                range_ok = false;
            }
        }
    }
    if !range_ok {
        return out;
    }

    let mut covered = vec![false; n];
    for bag in &td.bags {
        for &v in bag {
            covered[v] = true;
        }
    }
    for (v, &c) in covered.iter().enumerate() {
        if !c {
            out.push(TdViolation::VertexUncovered { vertex: v });
        }
    }

    for &(u, v) in g.edges() {
        let ok = td.bags.iter().any(|bag| bag.contains(&u) && bag.contains(&v));
        if !ok {
            out.push(TdViolation::EdgeUncovered { u, v });
        }
    }

    for v in 0..n {
        let trace: Vec<usize> = (0..nodes).filter(|&t| td.bags[t].contains(&v)).collect();
        if trace.len() <= 1 {
            continue;
        }
        let mut in_trace = vec![false; nodes];
        for &t in &trace {
            in_trace[t] = true;
        }
        let dist = td.tree.bfs_within(trace[0], &in_trace);
        if trace.iter().any(|&t| dist[t] == usize::MAX) {
            out.push(TdViolation::TraceDisconnected { vertex: v });
        }
    }
    out
}

/// A path-decomposition of a society, one bag per boundary vertex, aligned
/// with the boundary order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VorticalDecomposition {
    pub bags: Vec<Vec<usize>>,
}

impl VorticalDecomposition {
    pub fn new(bags: Vec<Vec<usize>>) -> VorticalDecomposition {
        VorticalDecomposition { bags }
    }

    /// View as a tree decomposition over a path.
    pub fn as_td(&self) -> TreeDecomposition {
        TreeDecomposition::new(Graph::path(self.bags.len()), self.bags.clone())
    }

    pub fn width(&self) -> i64 {
        self.as_td().width()
    }

    pub fn adhesion(&self) -> usize {
        self.as_td().adhesion()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VorticalViolation {
    /// The bag count differs from the boundary length.
    LengthMismatch { bags: usize, omega: usize },
    Path(TdViolation),
    /// Bag `index` does not contain the `index`-th boundary vertex.
    MissingOmegaVertex { index: usize, vertex: usize },
    AdhesionExceeded { found: usize, allowed: usize },
}

impl fmt::Display for VorticalViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VorticalViolation::LengthMismatch { bags, omega } => {
                write!(f, "{bags} bags for a boundary of length {omega}")
            }
            VorticalViolation::Path(v) => write!(f, "{v}"),
            VorticalViolation::MissingOmegaVertex { index, vertex } => {
                write!(f, "bag {index} misses boundary vertex {vertex}")
            }
            VorticalViolation::AdhesionExceeded { found, allowed } => {
                write!(f, "adhesion {found} exceeds allowed {allowed}")
            }
        }
    }
}

/// Checks that `vd` is a vortical decomposition of `society` with adhesion at
/// most `rho`: a valid path-decomposition whose `i`-th bag contains the
/// `i`-th boundary vertex.
pub fn validate_vortical(
    society: &Society,
    vd: &VorticalDecomposition,
    rho: usize,
) -> Vec<VorticalViolation> {
    let mut out = Vec::new();
    let omega = society.omega();
    if vd.bags.len() != omega.len() {
        out.push(VorticalViolation::LengthMismatch { bags: vd.bags.len(), omega: omega.len() });
        return out;
    }
    for v in validate_td(society.graph(), &vd.as_td()) {
        out.push(VorticalViolation::Path(v));
    }
    for (index, &vertex) in omega.iter().enumerate() {
        if !vd.bags[index].contains(&vertex) {
            out.push(VorticalViolation::MissingOmegaVertex { index, vertex });
        }
    }
    let found = vd.adhesion();
    if found > rho {
        out.push(VorticalViolation::AdhesionExceeded { found, allowed: rho });
    }
    out
}
