//! Exhaustive check of a component predicate over every k-coloring.
//!
//! Colorings are enumerated up to color symmetry as restricted growth
//! strings: the first occurrence of each color appears in increasing order,
//! so each orbit under color permutation is visited exactly once. The
//! outcome is "holds" iff every coloring has some monochromatic component
//! satisfying the predicate; otherwise the lexicographically least canonical
//! counterexample is returned, independent of the worker count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::graph::Graph;

use super::{color_partition, max_mono_size, Coloring, ColoringError};

pub const DEFAULT_BUDGET: u64 = 1 << 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentPredicate {
    /// Some monochromatic component has at least this many vertices.
    SizeAtLeast(usize),
    /// Some monochromatic component has diameter strictly greater than this.
    DiameterGreaterThan(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForallOutcome {
    pub holds: bool,
    /// The least canonical coloring with no component satisfying the
    /// predicate, when the check fails.
    pub witness: Option<Coloring>,
    /// Canonical colorings in the search space.
    pub canonical_total: u128,
    /// 1-based canonical rank of the witness (colorings at or before it).
    pub witness_rank: Option<u128>,
}

/// Checks whether every k-coloring of `g` has a monochromatic component
/// satisfying `predicate`. Errors out before enumerating when the canonical
/// search space exceeds `budget`. `threads` splits the space by canonical
/// prefix; verdict and witness do not depend on it.
pub fn forall_colorings_check(
    g: &Graph,
    k: usize,
    predicate: ComponentPredicate,
    budget: u64,
    threads: usize,
) -> Result<ForallOutcome, ColoringError> {
    if k == 0 {
        return Err(ColoringError::NoColors);
    }
    let n = g.vertex_count();
    let counts = CanonicalCounts::new(n, k);
    let total = counts.total();
    if total > budget as u128 {
        return Err(ColoringError::BudgetExceeded { required: total, budget: budget as u128 });
    }
    if n == 0 {
        // The empty coloring has no components, so nothing satisfies the
        // predicate.
        return Ok(ForallOutcome {
            holds: false,
            witness: Some(Coloring::new(k, vec![])?),
            canonical_total: total,
            witness_rank: Some(1),
        });
    }

    let prefix_len = n.min(6);
    let blocks = canonical_prefixes(n, k, prefix_len);
    let next = AtomicUsize::new(0);
    let best_block = AtomicUsize::new(usize::MAX);
    let found: Mutex<Vec<Option<Vec<usize>>>> = Mutex::new(vec![None; blocks.len()]);
    let workers = threads.max(1).min(blocks.len().max(1));

    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| {
                let mut scratch = vec![0usize; n];
                loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= blocks.len() {
                        break;
                    }
                    if i > best_block.load(Ordering::Relaxed) {
                        continue;
                    }
                    let block = &blocks[i];
                    scratch[..block.len()].copy_from_slice(block);
                    let used = *block.iter().max().expect("prefixes are nonempty");
                    let cancelled = || i > best_block.load(Ordering::Relaxed);
                    if let Some(witness) =
                        search_block(g, k, predicate, &mut scratch, block.len(), used, &cancelled)
                    {
                        best_block.fetch_min(i, Ordering::Relaxed);
                        found.lock().expect("no poisoned lock")[i] = Some(witness);
                    }
                }
            });
        }
    });

    let winner = best_block.load(Ordering::Relaxed);
    if winner == usize::MAX {
        return Ok(ForallOutcome {
            holds: true,
            witness: None,
            canonical_total: total,
            witness_rank: None,
        });
    }
    let colors = found.lock().expect("no poisoned lock")[winner]
        .clone()
        .expect("winning block stored its witness");
    let rank = counts.rank(&colors);
    Ok(ForallOutcome {
        holds: false,
        witness: Some(Coloring::new(k, colors)?),
        canonical_total: total,
        witness_rank: Some(rank),
    })
}

/// Depth-first extension of `scratch[..depth]` in canonical lexicographic
/// order; returns the first full coloring with NO component satisfying the
/// predicate. `cancelled` is polled between subtrees.
fn search_block(
    g: &Graph,
    k: usize,
    predicate: ComponentPredicate,
    scratch: &mut Vec<usize>,
    depth: usize,
    used: usize,
    cancelled: &dyn Fn() -> bool,
) -> Option<Vec<usize>> {
    let n = scratch.len();
    if depth == n {
        if coloring_fails(g, scratch, predicate) {
            return Some(scratch.clone());
        }
        return None;
    }
    if depth % 4 == 0 && cancelled() {
        return None;
    }
    let limit = (used + 1).min(k);
    for c in 1..=limit {
        scratch[depth] = c;
        let r = search_block(g, k, predicate, scratch, depth + 1, used.max(c), cancelled);
        if r.is_some() {
            return r;
        }
    }
    None
}

/// True when no monochromatic component of `colors` satisfies the predicate,
/// i.e. the coloring is a counterexample to the universal claim.
fn coloring_fails(g: &Graph, colors: &[usize], predicate: ComponentPredicate) -> bool {
    match predicate {
        ComponentPredicate::SizeAtLeast(n) => max_mono_size(g, colors) < n,
        ComponentPredicate::DiameterGreaterThan(d) => {
            let parts = color_partition(g, colors);
            parts.iter().all(|comp| {
                g.component_diameter(comp).expect("components are connected") <= d
            })
        }
    }
}

/// All canonical color strings of the given length (the block prefixes), in
/// lexicographic order.
fn canonical_prefixes(n: usize, k: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len.min(n));
    fn rec(out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>, len: usize, k: usize, used: usize) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for c in 1..=(used + 1).min(k) {
            cur.push(c);
            rec(out, cur, len, k, used.max(c));
            cur.pop();
        }
    }
    rec(&mut out, &mut cur, len.min(n), k, 0);
    out
}

/// Counting table for canonical strings: `suffix[r][u]` is the number of
/// canonical extensions of length `r` after a prefix using `u` colors.
struct CanonicalCounts {
    n: usize,
    k: usize,
    suffix: Vec<Vec<u128>>,
}

impl CanonicalCounts {
    fn new(n: usize, k: usize) -> CanonicalCounts {
        let mut suffix = vec![vec![0u128; k + 2]; n + 1];
        for u in 0..=k + 1 {
            suffix[0][u] = 1;
        }
        for r in 1..=n {
            for u in 0..=k {
                let stay = suffix[r - 1][u].saturating_mul(u as u128);
                let fresh = if u < k { suffix[r - 1][u + 1] } else { 0 };
                suffix[r][u] = stay.saturating_add(fresh);
            }
        }
        CanonicalCounts { n, k, suffix }
    }

    fn total(&self) -> u128 {
        self.suffix[self.n][0]
    }

    /// 1-based rank of a canonical string in lexicographic order.
    fn rank(&self, colors: &[usize]) -> u128 {
        let mut rank = 1u128;
        let mut used = 0usize;
        for (i, &c) in colors.iter().enumerate() {
            let remaining = self.n - i - 1;
            for smaller in 1..c {
                // `smaller` is canonical here iff smaller <= used + 1.
                if smaller <= used + 1 && smaller <= self.k {
                    rank = rank.saturating_add(self.suffix[remaining][used.max(smaller)]);
                }
            }
            used = used.max(c);
        }
        rank
    }
}
