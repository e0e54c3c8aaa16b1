//! Decomposition-guided 2-coloring verified against the 24 w Delta bound.
//!
//! The decomposition is rooted at node 0, every vertex takes the depth of
//! its topmost bag, and vertices are colored by floor(depth / b) mod 2. The
//! block size b is chosen adaptively among 1..=w+1 to minimize the measured
//! largest monochromatic component. The bound is verified per instance, not
//! guaranteed.

use num_bigint::BigUint;

use crate::bounds;
use crate::decomp::{validate_td, TreeDecomposition};
use crate::graph::Graph;

use super::{max_mono_size, mono_components, Coloring, ColoringError, MonoReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredColoringReport {
    pub coloring: Coloring,
    /// Block size that produced the coloring.
    pub block_size: usize,
    pub width: i64,
    pub max_degree: usize,
    pub max_component: usize,
    /// 24 w Delta.
    pub bound: BigUint,
    pub within_bound: bool,
    pub report: MonoReport,
}

pub fn td_two_coloring(
    g: &Graph,
    td: &TreeDecomposition,
) -> Result<LayeredColoringReport, ColoringError> {
    let violations = validate_td(g, td);
    if !violations.is_empty() {
        return Err(ColoringError::InvalidDecomposition(violations));
    }
    let width = td.width();
    let degree = g.max_degree();
    if width < 1 || degree < 1 {
        return Err(ColoringError::DegenerateLayering { width, degree });
    }

    // Depth of each node from the root (node 0), then the depth of each
    // vertex's topmost bag.
    let all = vec![true; td.tree.vertex_count()];
    let node_depth = td.tree.bfs_within(0, &all);
    let n = g.vertex_count();
    let mut vertex_depth = vec![usize::MAX; n];
    for (node, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            vertex_depth[v] = vertex_depth[v].min(node_depth[node]);
        }
    }

    let mut best: Option<(usize, usize, Vec<usize>)> = None; // (max_comp, b, colors)
    for b in 1..=(width as usize + 1) {
        let colors: Vec<usize> = vertex_depth.iter().map(|&d| 1 + (d / b) % 2).collect();
        let max_comp = max_mono_size(g, &colors);
        if best.as_ref().map_or(true, |(m, _, _)| max_comp < *m) {
            best = Some((max_comp, b, colors));
        }
    }
    let (max_component, block_size, colors) = best.expect("at least one block size");
    let coloring = Coloring::new(2, colors)?;
    let report = mono_components(g, &coloring)?;
    let bound = bounds::adov_bound(width as u64, degree as u64);
    let within_bound = BigUint::from(max_component) <= bound;
    Ok(LayeredColoringReport {
        coloring,
        block_size,
        width,
        max_degree: degree,
        max_component,
        bound,
        within_bound,
    report,
    })
}
