//! Property tests for the module invariants: generator well-formedness,
//! decomposition bounds, oracle consistency, monotonicity laws, and the
//! recoloring bound.

use clusterkit::coloring::{
    check_recolor_bound, exact_min_max_mono, forall_colorings_check, Coloring,
    ComponentPredicate, DEFAULT_BUDGET,
};
use clusterkit::corpus;
use clusterkit::decomp::{
    combine_necklace_vortex, exact_treewidth, necklace_td, validate_td, vortex_order_check,
};
use clusterkit::extremal::{verify_line_family, build_line_family};
use clusterkit::graph::{random_regular_with_girth, Graph, Society};
use clusterkit::io;
use proptest::prelude::*;
use rand::Rng;

/// Relabels a graph by a permutation derived from the seed.
fn relabel(g: &Graph, seed: u64) -> (Graph, Vec<usize>) {
    let mut rng = corpus::rng(seed);
    let n = g.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(a, b)| (perm[a], perm[b])).collect();
    (Graph::new(n, &edges).unwrap(), perm)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph_json_round_trip(seed in any::<u64>(), n in 0usize..30, p in 0.0f64..1.0) {
        let mut rng = corpus::rng(seed);
        let g = corpus::random_graph(n, p, None, &mut rng);
        let parsed = io::graph_from_json(&io::graph_to_json(&g)).unwrap();
        prop_assert_eq!(parsed, g);
    }

    #[test]
    fn line_graph_degree_law(seed in any::<u64>(), degree in 2usize..5) {
        // Regular inputs of girth 3 come straight from the table.
        let g = random_regular_with_girth(degree, 3, seed, 50).unwrap();
        let lg = g.line_graph().unwrap();
        prop_assert!(lg.is_regular(2 * degree - 2));
    }

    #[test]
    fn necklace_graph_contains_chain_cycle(seed in any::<u64>(), n in 3usize..40, q in 2usize..6) {
        let mut rng = corpus::rng(seed);
        let spec = corpus::random_necklace_spec(n, q, n / 2, &mut rng);
        let g = spec.graph();
        for i in 0..n {
            prop_assert!(g.has_edge(i, (i + 1) % n));
        }
    }

    #[test]
    fn necklace_td_width_bound(seed in any::<u64>(), n in 3usize..41, q in 2usize..6) {
        let mut rng = corpus::rng(seed);
        let spec = corpus::random_necklace_spec(n, q, n, &mut rng);
        let td = necklace_td(&spec);
        prop_assert!(validate_td(&spec.graph(), &td).is_empty());
        prop_assert!(td.width() <= (q as i64 - 1).max(2));
    }

    #[test]
    fn necklace_td_width_is_upper_bound_for_exact(seed in any::<u64>(), n in 3usize..15, q in 2usize..6) {
        let mut rng = corpus::rng(seed);
        let spec = corpus::random_necklace_spec(n, q, n, &mut rng);
        let td = necklace_td(&spec);
        let exact = exact_treewidth(&spec.graph(), 20).unwrap();
        prop_assert!(exact.width <= td.width());
    }

    #[test]
    fn combine_width_bound(seed in any::<u64>(), n in 4usize..10, q in 3usize..5, w in 0usize..3) {
        let mut rng = corpus::rng(seed);
        let spec = corpus::random_necklace_spec(n, q, n, &mut rng);
        let (society, vd) = corpus::random_society_with_vortex(n, 4, w, 0.7, &mut rng);
        let ntd = necklace_td(&spec);
        let (merged, td) = combine_necklace_vortex(&spec, &ntd, &society, &vd).unwrap();
        prop_assert!(validate_td(&merged, &td).is_empty());
        prop_assert!(td.width() <= (q as i64) * (w as i64 + 1) - 1);
        if merged.vertex_count() <= 15 {
            let exact = exact_treewidth(&merged, 20).unwrap();
            prop_assert!(exact.width <= td.width());
        }
    }

    #[test]
    fn treewidth_monotone_under_subgraphs(seed in any::<u64>(), n in 2usize..9, p in 0.2f64..0.9) {
        let mut rng = corpus::rng(seed);
        let g = corpus::random_graph(n, p, None, &mut rng);
        let full = exact_treewidth(&g, 20).unwrap().width;
        // Drop a random subset of edges.
        let kept: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(0.6))
            .collect();
        let sub = Graph::new(n, &kept).unwrap();
        prop_assert!(exact_treewidth(&sub, 20).unwrap().width <= full);
    }

    #[test]
    fn vortex_check_monotone_in_rho(seed in any::<u64>(), n in 2usize..7) {
        let mut rng = corpus::rng(seed);
        let g = corpus::random_graph(n + 2, 0.5, None, &mut rng);
        let society = Society::new(g, (0..n).collect()).unwrap();
        let mut previous = false;
        for rho in 0..4usize {
            let now = vortex_order_check(&society, rho).unwrap().is_vortex;
            prop_assert!(!previous || now, "vortex status fell from rho {} to {}", rho - 1, rho);
            previous = now;
        }
    }

    #[test]
    fn every_nonempty_graph_has_some_component(seed in any::<u64>(), n in 1usize..9, k in 1usize..4) {
        let mut rng = corpus::rng(seed);
        let g = corpus::random_graph(n, 0.4, None, &mut rng);
        let out = forall_colorings_check(&g, k, ComponentPredicate::SizeAtLeast(1), DEFAULT_BUDGET, 1).unwrap();
        prop_assert!(out.holds);
    }

    #[test]
    fn optimum_non_increasing_in_k(seed in any::<u64>(), n in 1usize..9) {
        let mut rng = corpus::rng(seed);
        let g = corpus::random_graph(n, 0.5, None, &mut rng);
        let mut last = usize::MAX;
        for k in 1..=n {
            let now = exact_min_max_mono(&g, k, &[], 16).unwrap().optimum;
            prop_assert!(now <= last);
            last = now;
        }
        prop_assert_eq!(last, 1, "k = n admits singleton classes");
    }

    #[test]
    fn recolor_bound_always_passes(seed in any::<u64>(), n in 1usize..41, zc in 0usize..6, k in 1usize..4) {
        let mut rng = corpus::rng(seed);
        let g = corpus::random_graph(n, 0.12, Some(5), &mut rng);
        let base: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=k)).collect();
        let base = Coloring::new(k, base).unwrap();
        let k_size = clusterkit::coloring::mono_components(&g, &base).unwrap().max_size;
        let mut z: Vec<usize> = Vec::new();
        for _ in 0..zc.min(n) {
            let v = rng.gen_range(0..n);
            if !z.contains(&v) {
                z.push(v);
            }
        }
        let mut recolored = base.colors().to_vec();
        for &v in &z {
            recolored[v] = rng.gen_range(1..=k);
        }
        let recolored = Coloring::new(k, recolored).unwrap();
        let check = check_recolor_bound(&g, &base, k_size, &z, &recolored).unwrap();
        prop_assert!(check.pass, "union {} over budget {} (|Z| {})", check.union_meeting_z, check.budget, z.len());
    }

    #[test]
    fn line_family_verdict_is_relabeling_invariant(seed in any::<u64>()) {
        let fam = build_line_family(2, 3, 0, 10).unwrap();
        let base = verify_line_family(&fam.graph, 2, 3, DEFAULT_BUDGET, 1).unwrap();
        let (shuffled, _) = relabel(&fam.graph, seed);
        let moved = verify_line_family(&shuffled, 2, 3, DEFAULT_BUDGET, 1).unwrap();
        prop_assert_eq!(base.holds, moved.holds);
    }
}

#[test]
fn hex_verdict_is_relabeling_invariant() {
    let g = Graph::triangular_grid(3);
    for seed in [1u64, 2, 9] {
        let (shuffled, _) = relabel(&g, seed);
        let out = forall_colorings_check(
            &shuffled,
            2,
            ComponentPredicate::SizeAtLeast(3),
            DEFAULT_BUDGET,
            1,
        )
        .unwrap();
        assert!(out.holds);
    }
}
