//! Exact minimization of the largest monochromatic component over all
//! k-colorings extending a precoloring.
//!
//! Branch and bound over vertices in BFS order from the precolored set,
//! bounding by the largest component already forced (components only merge
//! as colors are filled in). A second pass fixes colors in vertex order to
//! the least feasible choice, so the returned witness is the
//! lexicographically least optimal coloring.

use crate::graph::Graph;

use super::{Coloring, ColoringError};

pub const DEFAULT_EXACT_COLORING_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSolution {
    /// Minimum over colorings of the maximum monochromatic component size.
    pub optimum: usize,
    /// The lexicographically least coloring attaining the optimum.
    pub witness: Coloring,
}

pub fn exact_min_max_mono(
    g: &Graph,
    k: usize,
    precolored: &[(usize, usize)],
    limit: usize,
) -> Result<ExactSolution, ColoringError> {
    if k == 0 {
        return Err(ColoringError::NoColors);
    }
    if k > 60 {
        return Err(ColoringError::TooManyColors { k, max: 60 });
    }
    let n = g.vertex_count();
    if n > limit {
        return Err(ColoringError::SizeLimitExceeded { vertices: n, limit });
    }
    let mut fixed: Vec<Option<usize>> = vec![None; n];
    for &(vertex, color) in precolored {
        if vertex >= n {
            return Err(ColoringError::VertexOutOfRange { vertex });
        }
        if color < 1 || color > k {
            return Err(ColoringError::ColorOutOfRange { vertex, color, k });
        }
        if fixed[vertex].is_some() {
            return Err(ColoringError::DuplicatePrecolor { vertex });
        }
        fixed[vertex] = Some(color);
    }
    if n == 0 {
        return Ok(ExactSolution { optimum: 0, witness: Coloring::new(k, vec![])? });
    }

    let order = branch_order(g, &fixed);
    let mut search = Search::new(g, k, n, &fixed);
    let mut best = search.greedy_bound(&order, &fixed);
    search.minimize(&order, &fixed, 0, &mut best);

    // Lexicographic completion: fix each vertex to its least color that
    // still extends to a coloring with max component <= best.
    for v in 0..n {
        if fixed[v].is_some() {
            continue;
        }
        let mut chosen = None;
        for c in 1..=k {
            fixed[v] = Some(c);
            let order = branch_order(g, &fixed);
            let mut probe = Search::new(g, k, n, &fixed);
            if probe.feasible(&order, &fixed, 0, best) {
                chosen = Some(c);
                break;
            }
            fixed[v] = None;
        }
        fixed[v] = Some(chosen.expect("the optimum is attainable"));
    }
    let colors: Vec<usize> = fixed.into_iter().map(|c| c.expect("all fixed")).collect();
    debug_assert_eq!(super::max_mono_size(g, &colors), best);
    Ok(ExactSolution { optimum: best, witness: Coloring::new(k, colors)? })
}

/// BFS order from the precolored vertices (in index order), then any
/// unreached vertices in index order, each flooding its own component.
fn branch_order(g: &Graph, fixed: &[Option<usize>]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    for v in 0..n {
        if fixed[v].is_some() {
            seen[v] = true;
            order.push(v);
            queue.push_back(v);
        }
    }
    let flood = |queue: &mut std::collections::VecDeque<usize>,
                 seen: &mut Vec<bool>,
                 order: &mut Vec<usize>| {
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                    queue.push_back(w);
                }
            }
        }
    };
    flood(&mut queue, &mut seen, &mut order);
    for v in 0..n {
        if !seen[v] {
            seen[v] = true;
            order.push(v);
            queue.push_back(v);
            flood(&mut queue, &mut seen, &mut order);
        }
    }
    order
}

/// Union-find over colored vertices with an undo stack, tracking the largest
/// monochromatic component forced so far.
struct Search<'a> {
    g: &'a Graph,
    k: usize,
    /// Colors appearing in the fixed assignment; these never take part in
    /// the color-symmetry pruning.
    fixed_used: u64,
    color: Vec<usize>, // 0 = uncolored
    parent: Vec<usize>,
    size: Vec<usize>,
    current_max: usize,
    trail: Vec<(usize, usize, usize)>, // (child root, parent root, previous max)
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: usize, n: usize, fixed: &[Option<usize>]) -> Search<'a> {
        let fixed_used = fixed.iter().flatten().fold(0u64, |m, &c| m | (1 << c));
        Search {
            g,
            k,
            fixed_used,
            color: vec![0; n],
            parent: (0..n).collect(),
            size: vec![1; n],
            current_max: 0,
            trail: Vec::new(),
        }
    }

    /// An initial upper bound: color greedily, always taking the candidate
    /// color that keeps the forced maximum smallest.
    fn greedy_bound(&mut self, order: &[usize], fixed: &[Option<usize>]) -> usize {
        let mut undo_stack = Vec::with_capacity(order.len());
        for &v in order {
            let c = match fixed[v] {
                Some(c) => c,
                None => {
                    let (used, first_unused) = self.candidate_colors();
                    let mut best_c = 1;
                    let mut best_max = usize::MAX;
                    for c in 1..=self.k {
                        if used & (1 << c) == 0 && c != first_unused {
                            continue;
                        }
                        let merges = self.assign(v, c);
                        if self.current_max < best_max {
                            best_max = self.current_max;
                            best_c = c;
                        }
                        self.undo(v, merges);
                    }
                    best_c
                }
            };
            undo_stack.push((v, self.assign(v, c)));
        }
        let bound = self.current_max;
        for (v, merges) in undo_stack.into_iter().rev() {
            self.undo(v, merges);
        }
        bound
    }

    fn root(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    /// Colors `v` with `c`, merging same-colored neighbor components.
    /// Returns the number of union operations to undo.
    fn assign(&mut self, v: usize, c: usize) -> usize {
        self.color[v] = c;
        let mut merges = 0;
        for i in 0..self.g.neighbors(v).len() {
            let w = self.g.neighbors(v)[i];
            if self.color[w] != c {
                continue;
            }
            let mut a = self.root(v);
            let mut b = self.root(w);
            if a == b {
                continue;
            }
            if self.size[a] < self.size[b] {
                std::mem::swap(&mut a, &mut b);
            }
            self.trail.push((b, a, self.current_max));
            self.parent[b] = a;
            self.size[a] += self.size[b];
            self.current_max = self.current_max.max(self.size[a]);
            merges += 1;
        }
        // A fresh singleton can itself be the current maximum.
        self.trail.push((v, v, self.current_max));
        self.current_max = self.current_max.max(self.size[self.root(v)]);
        merges + 1
    }

    fn undo(&mut self, v: usize, merges: usize) {
        self.color[v] = 0;
        for _ in 0..merges {
            let (child, parent, prev_max) = self.trail.pop().expect("trail tracks merges");
            if child != parent {
                self.size[parent] -= self.size[child];
                self.parent[child] = child;
            }
            self.current_max = prev_max;
        }
    }

    /// Colors allowed at this node: every color already in use (by the
    /// precoloring or earlier branching) plus the least unused one, which
    /// prunes branches that only permute unused colors.
    fn candidate_colors(&self) -> (u64, usize) {
        let mut used = self.fixed_used;
        for &c in &self.color {
            if c > 0 {
                used |= 1 << c;
            }
        }
        let first_unused = (1..=self.k).find(|c| used & (1 << c) == 0);
        (used, first_unused.unwrap_or(0))
    }

    fn minimize(&mut self, order: &[usize], fixed: &[Option<usize>], depth: usize, best: &mut usize) {
        if self.current_max >= *best {
            return;
        }
        if depth == order.len() {
            *best = self.current_max;
            return;
        }
        let v = order[depth];
        if let Some(c) = fixed[v] {
            let merges = self.assign(v, c);
            self.minimize(order, fixed, depth + 1, best);
            self.undo(v, merges);
            return;
        }
        let (used, first_unused) = self.candidate_colors();
        for c in 1..=self.k {
            if used & (1 << c) == 0 && c != first_unused {
                continue;
            }
            let merges = self.assign(v, c);
            self.minimize(order, fixed, depth + 1, best);
            self.undo(v, merges);
        }
    }

    /// True iff the fixed assignment extends to a coloring whose largest
    /// monochromatic component is at most `target`.
    fn feasible(
        &mut self,
        order: &[usize],
        fixed: &[Option<usize>],
        depth: usize,
        target: usize,
    ) -> bool {
        if self.current_max > target {
            return false;
        }
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        if let Some(c) = fixed[v] {
            let merges = self.assign(v, c);
            let ok = self.feasible(order, fixed, depth + 1, target);
            self.undo(v, merges);
            return ok;
        }
        let (used, first_unused) = self.candidate_colors();
        for c in 1..=self.k {
            if used & (1 << c) == 0 && c != first_unused {
                continue;
            }
            let merges = self.assign(v, c);
            let ok = self.feasible(order, fixed, depth + 1, target);
            self.undo(v, merges);
            if ok {
                return true;
            }
        }
        false
    }
}
