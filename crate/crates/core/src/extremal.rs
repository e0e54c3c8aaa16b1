//! Builders and exhaustive verifiers for the lower-bound constructions: the
//! triangular-grid HEX check, the recursive diameter gadget, and the
//! line-graph family.

use thiserror::Error;

use crate::coloring::{forall_colorings_check, ColoringError, ComponentPredicate, ForallOutcome};
use crate::graph::{random_regular_with_girth, Graph, GraphError};

pub const DEFAULT_SIZE_CAP: usize = 5000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtremalError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("gadget would have {predicted} vertices, over the cap {cap}")]
    SizeCapExceeded { predicted: u128, cap: usize },
    #[error("gadget parameters must be positive (level {level}, d {d}, base path {base_path_length})")]
    BadGadgetParams { level: usize, d: usize, base_path_length: usize },
    #[error("line family requires k >= 1 and component bound >= 3 (got k {k}, bound {bound})")]
    BadLineParams { k: usize, bound: usize },
}

/// Parameters of the recursive diameter gadget.
///
/// The base graph is a path on `base_path_length` vertices. The construction
/// verifies "diameter greater than d", and a path on d vertices only has
/// diameter d - 1, so the default base is d + 2 vertices; set
/// `base_path_length = d` to reproduce the shorter base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetParams {
    pub level: usize,
    pub d: usize,
    pub base_path_length: usize,
    pub size_cap: usize,
}

impl GadgetParams {
    pub fn new(level: usize, d: usize) -> GadgetParams {
        GadgetParams { level, d, base_path_length: d + 2, size_cap: DEFAULT_SIZE_CAP }
    }
}

/// Vertex count of the level-`i` gadget, saturating.
pub fn predicted_gadget_size(p: &GadgetParams) -> u128 {
    let mut size = p.base_path_length as u128;
    for _ in 2..=p.level {
        size = 1u128.saturating_add(tree_node_count(size, p.d).saturating_mul(size));
    }
    size
}

/// Nodes of the rooted n-ary tree of root-to-leaf distance d where every
/// internal node has exactly n children: 1 + n + ... + n^d.
fn tree_node_count(n: u128, d: usize) -> u128 {
    let mut total = 1u128;
    let mut layer = 1u128;
    for _ in 0..d {
        layer = layer.saturating_mul(n);
        total = total.saturating_add(layer);
    }
    total
}

/// Builds the level-`i` gadget: level 1 is a path; level i takes a rooted
/// n-ary tree T of depth d (n = |V(G_{i-1})|), one copy H_t of G_{i-1} per
/// tree node, an apex adjacent to all of the root copy, and joins the j-th
/// vertex of each internal copy to every vertex of its j-th child's copy.
///
/// Vertex layout: the apex is vertex 0; tree nodes are numbered in BFS order
/// (root 0, then its children left to right, and so on), and the copy of
/// tree node t occupies vertices 1 + t*n .. 1 + (t+1)*n, preserving the
/// vertex order of G_{i-1}.
pub fn build_gadget(p: &GadgetParams) -> Result<Graph, ExtremalError> {
    if p.level == 0 || p.d == 0 || p.base_path_length == 0 {
        return Err(ExtremalError::BadGadgetParams {
            level: p.level,
            d: p.d,
            base_path_length: p.base_path_length,
        });
    }
    // Size guard before any allocation, for every level.
    for level in 1..=p.level {
        let staged = GadgetParams { level, ..p.clone() };
        let predicted = predicted_gadget_size(&staged);
        if predicted > p.size_cap as u128 {
            return Err(ExtremalError::SizeCapExceeded { predicted, cap: p.size_cap });
        }
    }

    let mut g = Graph::path(p.base_path_length);
    for _ in 2..=p.level {
        g = grow(&g, p.d);
    }
    Ok(g)
}

fn grow(prev: &Graph, d: usize) -> Graph {
    let n = prev.vertex_count();
    // Tree in BFS order: children of node t are stored in children[t].
    let mut children: Vec<Vec<usize>> = Vec::new();
    let mut depth_of: Vec<usize> = vec![0];
    children.push(Vec::new());
    let mut head = 0;
    while head < children.len() {
        if depth_of[head] < d {
            for _ in 0..n {
                let id = children.len();
                children.push(Vec::new());
                depth_of.push(depth_of[head] + 1);
                children[head].push(id);
            }
        }
        head += 1;
    }
    let tree_nodes = children.len();
    let total = 1 + tree_nodes * n;
    let block = |t: usize| 1 + t * n;

    let mut edges: Vec<(usize, usize)> = Vec::new();
    for t in 0..tree_nodes {
        for &(a, b) in prev.edges() {
            edges.push((block(t) + a, block(t) + b));
        }
    }
    // Apex covers the root copy.
    for x in 0..n {
        edges.push((0, block(0) + x));
    }
    // u_{t,j} covers the entire copy of the j-th child of t.
    for t in 0..tree_nodes {
        for (j, &c) in children[t].iter().enumerate() {
            for x in 0..n {
                edges.push((block(t) + j, block(c) + x));
            }
        }
    }
    Graph::new(total, &edges).expect("gadget edges are valid")
}

/// Every `level`-coloring has a monochromatic component of diameter > d.
pub fn verify_gadget(
    g: &Graph,
    level: usize,
    d: usize,
    budget: u64,
    threads: usize,
) -> Result<ForallOutcome, ColoringError> {
    forall_colorings_check(g, level, ComponentPredicate::DiameterGreaterThan(d), budget, threads)
}

/// Every 2-coloring of the k x k triangular grid has a monochromatic
/// component of at least k vertices.
pub fn hex_check(k: usize, budget: u64, threads: usize) -> Result<ForallOutcome, ColoringError> {
    forall_colorings_check(
        &Graph::triangular_grid(k),
        2,
        ComponentPredicate::SizeAtLeast(k),
        budget,
        threads,
    )
}

/// A (4k-2)-regular graph whose k-colorings all have a component of at least
/// N vertices, kept alongside the 2k-regular girth >= N base graph it is the
/// line graph of.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineFamily {
    pub graph: Graph,
    pub base: Graph,
}

pub fn build_line_family(
    k: usize,
    component_bound: usize,
    seed: u64,
    max_attempts: usize,
) -> Result<LineFamily, ExtremalError> {
    if k == 0 || component_bound < 3 {
        return Err(ExtremalError::BadLineParams { k, bound: component_bound });
    }
    let base = random_regular_with_girth(2 * k, component_bound, seed, max_attempts)?;
    let graph = base.line_graph()?;
    Ok(LineFamily { graph, base })
}

/// Every k-coloring has a monochromatic component of at least N vertices.
pub fn verify_line_family(
    g: &Graph,
    k: usize,
    component_bound: usize,
    budget: u64,
    threads: usize,
) -> Result<ForallOutcome, ColoringError> {
    forall_colorings_check(g, k, ComponentPredicate::SizeAtLeast(component_bound), budget, threads)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::DEFAULT_BUDGET;
    use crate::decomp::exact_treewidth;

    #[test]
    fn level_one_is_a_path() {
        let g = build_gadget(&GadgetParams::new(1, 3)).unwrap();
        assert_eq!(g, Graph::path(5));
    }

    #[test]
    fn level_two_size_matches_prediction() {
        // base 3, d = 1: apex + (1 + 3) tree nodes x 3 vertices = 13.
        let p = GadgetParams { base_path_length: 3, ..GadgetParams::new(2, 1) };
        assert_eq!(predicted_gadget_size(&p), 13);
        let g = build_gadget(&p).unwrap();
        assert_eq!(g.vertex_count(), 13);
        // Default base for d = 1 is the same.
        assert_eq!(build_gadget(&GadgetParams::new(2, 1)).unwrap(), g);
    }

    #[test]
    fn level_two_treewidth_at_most_two() {
        let g = build_gadget(&GadgetParams::new(2, 1)).unwrap();
        let tw = exact_treewidth(&g, 20).unwrap();
        assert!(tw.width <= 2, "treewidth {}", tw.width);
    }

    #[test]
    fn size_cap_aborts_before_building() {
        let p = GadgetParams { size_cap: 10, ..GadgetParams::new(2, 2) };
        match build_gadget(&p).unwrap_err() {
            ExtremalError::SizeCapExceeded { predicted, cap } => {
                assert!(predicted > 10);
                assert_eq!(cap, 10);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn verify_level_one_single_coloring() {
        let g = build_gadget(&GadgetParams::new(1, 2)).unwrap();
        let out = verify_gadget(&g, 1, 2, DEFAULT_BUDGET, 1).unwrap();
        assert!(out.holds);
    }

    #[test]
    fn cycle_is_a_negative_control() {
        let g = Graph::cycle(4);
        let out = verify_gadget(&g, 2, 1, DEFAULT_BUDGET, 1).unwrap();
        assert!(!out.holds);
        // Least counterexample: opposite edges, every component a single edge.
        let w = out.witness.unwrap();
        assert_eq!(w.colors(), &[1, 1, 2, 2]);
    }

    #[test]
    fn hex_small_cases() {
        for k in 1..=3 {
            let out = hex_check(k, DEFAULT_BUDGET, 1).unwrap();
            assert!(out.holds, "hex fails at k = {k}");
        }
    }

    #[test]
    fn line_family_k1_is_a_cycle() {
        let fam = build_line_family(1, 5, 0, 10).unwrap();
        assert_eq!(fam.base, Graph::cycle(5));
        assert!(fam.graph.is_regular(2)); // 4k - 2 = 2
        assert_eq!(fam.graph.vertex_count(), 5);
    }

    #[test]
    fn line_family_k2_girth3_is_line_of_k5() {
        let fam = build_line_family(2, 3, 0, 10).unwrap();
        assert_eq!(fam.base, Graph::complete(5));
        assert_eq!(fam.graph.vertex_count(), 10);
        assert!(fam.graph.is_regular(6)); // 4k - 2 = 6
    }

    #[test]
    fn line_family_degree_law() {
        let fam = build_line_family(2, 5, 11, 200).unwrap();
        assert!(fam.base.girth().unwrap() >= 5);
        assert!(fam.graph.is_regular(6));
    }

    #[test]
    fn line_family_rejects_bad_params() {
        assert_eq!(
            build_line_family(0, 5, 0, 10).unwrap_err(),
            ExtremalError::BadLineParams { k: 0, bound: 5 }
        );
        assert_eq!(
            build_line_family(2, 2, 0, 10).unwrap_err(),
            ExtremalError::BadLineParams { k: 2, bound: 2 }
        );
    }
}
