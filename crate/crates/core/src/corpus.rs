//! Deterministic instance generators for the stress and acceptance suites:
//! random graphs with degree caps, random trees, random non-crossing
//! necklace specs, and synthetic societies with valid vortical
//! decompositions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decomp::{TreeDecomposition, VorticalDecomposition};
use crate::graph::{Graph, NecklaceSpec, Society};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p) with an optional maximum degree; edges violating the cap are
/// dropped in scan order.
pub fn random_graph(n: usize, edge_prob: f64, max_degree: Option<usize>, rng: &mut ChaCha8Rng) -> Graph {
    let mut degree = vec![0usize; n];
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(edge_prob) {
                if let Some(cap) = max_degree {
                    if degree[u] >= cap || degree[v] >= cap {
                        continue;
                    }
                }
                degree[u] += 1;
                degree[v] += 1;
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("generated edges are valid")
}

/// Random tree by attaching each vertex to an earlier one, respecting a
/// degree cap when given.
pub fn random_tree(n: usize, max_degree: Option<usize>, rng: &mut ChaCha8Rng) -> Graph {
    let mut degree = vec![0usize; n];
    let mut edges = Vec::new();
    for v in 1..n {
        let parent = loop {
            let p = rng.gen_range(0..v);
            match max_degree {
                Some(cap) if degree[p] >= cap => continue,
                _ => break p,
            }
        };
        degree[parent] += 1;
        degree[v] += 1;
        edges.push((parent, v));
    }
    Graph::new(n, &edges).expect("tree edges are valid")
}

/// Width-1 decomposition of a tree: one node per vertex, bag(v) = {v} plus
/// the parent of v under a BFS rooting at 0.
pub fn tree_decomposition_of_tree(tree: &Graph) -> TreeDecomposition {
    let n = tree.vertex_count();
    let all = vec![true; n];
    let dist = tree.bfs_within(0, &all);
    let mut bags = vec![Vec::new(); n];
    for v in 0..n {
        bags[v].push(v);
        if v != 0 {
            let parent = *tree
                .neighbors(v)
                .iter()
                .find(|&&w| dist[w] != usize::MAX && dist[w] + 1 == dist[v])
                .expect("connected tree vertex has a parent");
            bags[v].push(parent);
            bags[v].sort_unstable();
        }
    }
    TreeDecomposition::new(tree.clone(), bags)
}

/// Random valid necklace spec: `attempts` candidate cliques of 2..=q
/// vertices are drawn and kept whenever the whole spec stays valid
/// (non-crossing, pairwise edge-disjoint).
pub fn random_necklace_spec(
    n: usize,
    q: usize,
    attempts: usize,
    rng: &mut ChaCha8Rng,
) -> NecklaceSpec {
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    for _ in 0..attempts {
        let size = rng.gen_range(2..=q.max(2)).min(n);
        if size < 2 {
            break;
        }
        let mut candidate = Vec::with_capacity(size);
        while candidate.len() < size {
            let v = rng.gen_range(0..n);
            if !candidate.contains(&v) {
                candidate.push(v);
            }
        }
        candidate.sort_unstable();
        let mut trial = cliques.clone();
        trial.push(candidate);
        if let Ok(valid) = NecklaceSpec::new(n, q, trial) {
            cliques = valid.cliques;
        }
    }
    NecklaceSpec::new(n, q, cliques).expect("incrementally validated spec")
}

/// A society together with a valid vortical decomposition of width at most
/// `w`: boundary vertices `0..boundary` each pinned to their own bag, up to
/// `extras` further vertices placed on contiguous bag intervals with free
/// capacity, and edges sampled inside bags so coverage holds by
/// construction. Extras that no longer fit are simply not created.
pub fn random_society_with_vortex(
    boundary: usize,
    extras: usize,
    w: usize,
    edge_prob: f64,
    rng: &mut ChaCha8Rng,
) -> (Society, VorticalDecomposition) {
    let mut bags: Vec<Vec<usize>> = (0..boundary).map(|i| vec![i]).collect();
    let mut next_vertex = boundary;
    for _ in 0..extras {
        let open: Vec<usize> = (0..boundary).filter(|&i| bags[i].len() <= w).collect();
        if open.is_empty() {
            break;
        }
        let start = open[rng.gen_range(0..open.len())];
        let v = next_vertex;
        next_vertex += 1;
        bags[start].push(v);
        let mut i = start + 1;
        while i < boundary && bags[i].len() <= w && rng.gen_bool(0.6) {
            bags[i].push(v);
            i += 1;
        }
    }
    let mut edges = Vec::new();
    for bag in &bags {
        for i in 0..bag.len() {
            for j in (i + 1)..bag.len() {
                if rng.gen_bool(edge_prob) {
                    edges.push((bag[i], bag[j]));
                }
            }
        }
    }
    let graph = Graph::new(next_vertex, &edges).expect("bag edges are valid");
    let society = Society::new(graph, (0..boundary).collect()).expect("distinct boundary");
    (society, VorticalDecomposition::new(bags))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::{validate_td, validate_vortical};

    #[test]
    fn random_graph_respects_degree_cap() {
        let mut r = rng(7);
        let g = random_graph(30, 0.4, Some(5), &mut r);
        assert!(g.max_degree() <= 5);
    }

    #[test]
    fn random_tree_is_a_tree() {
        let mut r = rng(3);
        let t = random_tree(25, Some(4), &mut r);
        assert_eq!(t.edge_count(), 24);
        assert_eq!(t.components().len(), 1);
        assert!(t.max_degree() <= 4);
        let td = tree_decomposition_of_tree(&t);
        assert!(validate_td(&t, &td).is_empty());
        assert_eq!(td.width(), 1);
    }

    #[test]
    fn random_specs_are_valid() {
        let mut r = rng(11);
        for _ in 0..20 {
            let n = r.gen_range(4..30);
            let q = r.gen_range(2..=5);
            let spec = random_necklace_spec(n, q, n, &mut r);
            assert!(NecklaceSpec::new(spec.n, spec.q, spec.cliques.clone()).is_ok());
        }
    }

    #[test]
    fn synthetic_vortex_decompositions_validate() {
        let mut r = rng(5);
        for _ in 0..20 {
            let (society, vd) = random_society_with_vortex(6, 3, 2, 0.7, &mut r);
            assert!(validate_vortical(&society, &vd, usize::MAX).is_empty());
            assert!(vd.width() <= 2);
        }
    }
}
