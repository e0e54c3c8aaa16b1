//! Exact treewidth by dynamic programming over vertex subsets.
//!
//! For a subset `S` and `v` in `S`, let `Q(S - v, v)` be the set of vertices
//! outside `S` reachable from `v` through `S - v`; this is the degree of `v`
//! at elimination time when `S` is the eliminated prefix ending in `v`. Then
//!
//!   f(S) = min over v in S of max(f(S - v), |Q(S - v, v)|),   f(empty) = 0
//!
//! and the treewidth equals f(V). An optimal elimination ordering is
//! recovered by unwinding the recurrence, and the witness decomposition is
//! the usual one-bag-per-vertex construction along that ordering.

use crate::graph::Graph;

use super::{DecompError, TreeDecomposition};

pub const DEFAULT_EXACT_LIMIT: usize = 20;
/// Hard cap: the table holds 2^n bytes.
pub const MAX_EXACT_VERTICES: usize = 26;

#[derive(Debug, Clone)]
pub struct TreewidthResult {
    pub width: i64,
    /// A decomposition attaining `width`; always passes `validate_td`.
    pub decomposition: TreeDecomposition,
}

pub fn exact_treewidth(g: &Graph, limit: usize) -> Result<TreewidthResult, DecompError> {
    if limit > MAX_EXACT_VERTICES {
        return Err(DecompError::LimitTooLarge { limit, max: MAX_EXACT_VERTICES });
    }
    let n = g.vertex_count();
    if n > limit {
        return Err(DecompError::SizeLimitExceeded { vertices: n, limit });
    }
    if n == 0 {
        return Ok(TreewidthResult {
            width: -1,
            decomposition: TreeDecomposition::new(Graph::new(1, &[]).unwrap(), vec![vec![]]),
        });
    }

    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let full: u32 = (1u32 << n) - 1;

    let mut f = vec![0u8; 1usize << n];
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let without = s & !(1 << v);
            let cost = (f[without as usize]).max(q_size(&adj, without, v));
            if cost < best {
                best = cost;
            }
        }
        f[s as usize] = best;
    }
    let width = f[full as usize] as i64;

    // Unwind: pick, at each step, the smallest vertex attaining the minimum.
    let mut order = vec![0usize; n];
    let mut s = full;
    for step in (0..n).rev() {
        let mut chosen = usize::MAX;
        let mut chosen_cost = u8::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let without = s & !(1 << v);
            let cost = (f[without as usize]).max(q_size(&adj, without, v));
            if cost < chosen_cost {
                chosen_cost = cost;
                chosen = v;
            }
        }
        order[step] = chosen;
        s &= !(1 << chosen);
    }

    // Bags along the elimination ordering: bag(i) = {order[i]} + the
    // later-eliminated vertices reachable through the earlier ones. Each bag
    // links to the bag of the first-eliminated vertex it contains; bags with
    // nothing later (component roots) chain to the next node to keep one tree.
    let mut position = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut bags: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut tree_edges: Vec<(usize, usize)> = Vec::new();
    let mut eliminated: u32 = 0;
    for (i, &v) in order.iter().enumerate() {
        let reach_mask = q_mask(&adj, eliminated, v);
        let mut bag: Vec<usize> = vec![v];
        let mut parent: Option<usize> = None;
        let mut rest = reach_mask;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            bag.push(w);
            if parent.map_or(true, |p| position[w] < position[p]) {
                parent = Some(w);
            }
        }
        bag.sort_unstable();
        bags.push(bag);
        match parent {
            Some(p) => tree_edges.push((i, position[p])),
            None => {
                if i + 1 < n {
                    tree_edges.push((i, i + 1));
                }
            }
        }
        eliminated |= 1 << v;
    }
    let tree = Graph::new(n, &tree_edges).expect("elimination tree is valid");
    Ok(TreewidthResult { width, decomposition: TreeDecomposition::new(tree, bags) })
}

/// Vertices outside `w | bit(v)` reachable from `v` through `w`, as a mask.
fn q_mask(adj: &[u32], w: u32, v: usize) -> u32 {
    let inside = w | (1 << v);
    let mut reach = 1u32 << v;
    let mut frontier = reach;
    let mut seen_nb = 0u32;
    while frontier != 0 {
        let mut nb = 0u32;
        let mut rest = frontier;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            nb |= adj[u];
        }
        seen_nb |= nb;
        frontier = nb & inside & !reach;
        reach |= frontier;
    }
    seen_nb & !inside
}

fn q_size(adj: &[u32], w: u32, v: usize) -> u8 {
    q_mask(adj, w, v).count_ones() as u8
}
