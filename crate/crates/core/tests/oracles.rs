//! Cross-checks of the fast solvers against independent brute-force oracles.
//!
//! The brute forces here deliberately avoid the implementation paths they
//! check: treewidth is recomputed by enumerating every elimination ordering
//! on an explicit fill graph, and the min-max component value by enumerating
//! all k^n colorings without symmetry pruning.

use clusterkit::coloring::{
    exact_min_max_mono, forall_colorings_check, ComponentPredicate, DEFAULT_BUDGET,
};
use clusterkit::corpus;
use clusterkit::decomp::{exact_treewidth, validate_td};
use clusterkit::graph::Graph;
use rand::Rng;

/// Treewidth as the minimum over all elimination orderings of the maximum
/// degree at elimination time, maintained on an explicit fill graph.
fn brute_force_treewidth(g: &Graph) -> i64 {
    let n = g.vertex_count();
    assert!(n <= 10, "factorial enumeration only");
    if n == 0 {
        return -1;
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let full = (1u32 << n) - 1;
    let mut best = (n - 1) as u32;

    fn go(adj: &[u32], alive: u32, worst: u32, best: &mut u32) {
        if alive == 0 {
            *best = (*best).min(worst);
            return;
        }
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let nb = adj[v] & alive & !(1 << v);
            let deg = nb.count_ones();
            // Eliminate v: its surviving neighbors become a clique.
            let mut filled = adj.to_vec();
            let mut ns = nb;
            while ns != 0 {
                let u = ns.trailing_zeros() as usize;
                ns &= ns - 1;
                filled[u] |= nb & !(1 << u);
            }
            go(&filled, alive & !(1 << v), worst.max(deg), best);
        }
    }
    go(&adj, full, 0, &mut best);
    best as i64
}

/// Min over all k^n colorings of the max monochromatic component size, by
/// plain base-k counting.
fn brute_force_min_max(g: &Graph, k: usize) -> usize {
    let n = g.vertex_count();
    let mut colors = vec![1usize; n];
    let mut best = usize::MAX;
    loop {
        best = best.min(max_component(g, &colors));
        // Increment in base k.
        let mut i = 0;
        loop {
            if i == n {
                return best;
            }
            if colors[i] < k {
                colors[i] += 1;
                break;
            }
            colors[i] = 1;
            i += 1;
        }
    }
}

fn max_component(g: &Graph, colors: &[usize]) -> usize {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut best = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut size = 0;
        while let Some(u) = stack.pop() {
            size += 1;
            for &w in g.neighbors(u) {
                if !seen[w] && colors[w] == colors[s] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        best = best.max(size);
    }
    best
}

#[test]
fn treewidth_oracle_matches_brute_force_on_small_graphs() {
    let mut rng = corpus::rng(90);
    let mut cases: Vec<Graph> = vec![
        Graph::path(6),
        Graph::cycle(7),
        Graph::complete(5),
        Graph::petersen(),
        Graph::complete(3).line_graph().unwrap(),
    ];
    for _ in 0..12 {
        let n = rng.gen_range(3..9);
        let p = rng.gen_range(0.2..0.8);
        cases.push(corpus::random_graph(n, p, None, &mut rng));
    }
    for g in &cases {
        let fast = exact_treewidth(g, 20).unwrap();
        let slow = brute_force_treewidth(g);
        assert_eq!(fast.width, slow, "graph {:?}", g.edges());
        assert!(validate_td(g, &fast.decomposition).is_empty());
        assert_eq!(fast.decomposition.width(), fast.width);
    }
}

/// Frozen regression fixture: the 3 x 3 triangular grid has treewidth 3,
/// first verified by the elimination-ordering brute force above.
#[test]
fn triangular_grid_three_fixture() {
    let g = Graph::triangular_grid(3);
    assert_eq!(brute_force_treewidth(&g), 3);
    assert_eq!(exact_treewidth(&g, 20).unwrap().width, 3);
}

#[test]
fn k4_two_colors_by_enumeration() {
    // All 16 colorings of K4 with 2 colors: best split is 2 + 2.
    let g = Graph::complete(4);
    assert_eq!(brute_force_min_max(&g, 2), 2);
    assert_eq!(exact_min_max_mono(&g, 2, &[], 16).unwrap().optimum, 2);
}

#[test]
fn exact_solver_matches_brute_force() {
    let mut rng = corpus::rng(41);
    for _ in 0..25 {
        let n = rng.gen_range(2..9);
        let p = rng.gen_range(0.1..0.9);
        let g = corpus::random_graph(n, p, None, &mut rng);
        for k in 2..=3 {
            let fast = exact_min_max_mono(&g, k, &[], 16).unwrap();
            let slow = brute_force_min_max(&g, k);
            assert_eq!(fast.optimum, slow, "n={n} k={k} edges {:?}", g.edges());
            assert_eq!(
                max_component(&g, fast.witness.colors()),
                fast.optimum,
                "witness must attain the optimum"
            );
        }
    }
}

#[test]
fn forall_agrees_with_exact_threshold() {
    let mut rng = corpus::rng(55);
    for _ in 0..20 {
        let n = rng.gen_range(2..8);
        let p = rng.gen_range(0.1..0.9);
        let g = corpus::random_graph(n, p, None, &mut rng);
        for k in 2..=3 {
            let optimum = exact_min_max_mono(&g, k, &[], 16).unwrap().optimum;
            for threshold in 1..=4 {
                let holds = forall_colorings_check(
                    &g,
                    k,
                    ComponentPredicate::SizeAtLeast(threshold),
                    DEFAULT_BUDGET,
                    1,
                )
                .unwrap()
                .holds;
                assert_eq!(
                    holds,
                    optimum >= threshold,
                    "n={n} k={k} threshold={threshold} optimum={optimum}"
                );
            }
        }
    }
}

/// The precolored variant agrees with filtering the brute-force enumeration.
#[test]
fn precolored_solver_matches_filtered_enumeration() {
    let mut rng = corpus::rng(77);
    for _ in 0..15 {
        let n = rng.gen_range(3..8);
        let g = corpus::random_graph(n, 0.5, None, &mut rng);
        let k = 3;
        let pre: Vec<(usize, usize)> = vec![(0, 1), (n - 1, rng.gen_range(1..=k))];
        let fast = exact_min_max_mono(&g, k, &pre, 16).unwrap();

        // Enumerate all colorings matching the precoloring.
        let mut best = usize::MAX;
        let mut colors = vec![1usize; n];
        'outer: loop {
            if pre.iter().all(|&(v, c)| colors[v] == c) {
                best = best.min(max_component(&g, &colors));
            }
            let mut i = 0;
            loop {
                if i == n {
                    break 'outer;
                }
                if colors[i] < k {
                    colors[i] += 1;
                    break;
                }
                colors[i] = 1;
                i += 1;
            }
        }
        assert_eq!(fast.optimum, best);
        for &(v, c) in &pre {
            assert_eq!(fast.witness.color(v), c);
        }
    }
}
