//! Constructive decompositions for necklaces.
//!
//! `necklace_td` realizes the recursive proof that a q-necklace has
//! tree-width at most max(q-1, 2): split the chain cycle at the vertices of a
//! designated clique, decompose each segment recursively, and join the
//! sub-decompositions at a central node whose bag is the clique.
//! `combine_necklace_vortex` then absorbs a vortical decomposition into a
//! necklace decomposition by augmenting every bag with the vortex bags of its
//! chain vertices, giving width at most q(w+1) - 1.

use crate::graph::{Graph, NecklaceSpec, Society};

use super::{validate_td, validate_vortical, DecompError, TreeDecomposition, VorticalDecomposition};

/// Builds a tree decomposition of `spec.graph()` of width at most
/// max(q-1, 2), following the chain-splitting recursion.
///
/// Determinism: the designated clique at each step is the one containing the
/// lowest chain position (ties broken by lexicographic position sequence),
/// and the chain is rotated so that clique starts the segment order.
pub fn necklace_td(spec: &NecklaceSpec) -> TreeDecomposition {
    let chain: Vec<usize> = (0..spec.n).collect();
    // Single-vertex cliques carry no edges and would derail the splitting.
    let cliques: Vec<Vec<usize>> =
        spec.cliques.iter().filter(|c| c.len() >= 2).cloned().collect();
    let mut builder = Builder { bags: Vec::new(), edges: Vec::new() };
    builder.build(chain, cliques);
    let tree = Graph::new(builder.bags.len(), &builder.edges).expect("builder emits valid tree");
    TreeDecomposition::new(tree, builder.bags)
}

struct Builder {
    bags: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn push_bag(&mut self, mut bag: Vec<usize>) -> usize {
        bag.sort_unstable();
        bag.dedup();
        self.bags.push(bag);
        self.bags.len() - 1
    }

    /// Decomposes the necklace whose chain cycle is `chain` (in cyclic order,
    /// original vertex ids) and whose cliques are `cliques`. Appends bags and
    /// tree edges; the new nodes form a connected subtree, and some bag
    /// contains both `chain[0]` and `chain[last]`.
    fn build(&mut self, chain: Vec<usize>, cliques: Vec<Vec<usize>>) {
        let m = chain.len();
        if m <= 3 {
            // Everything (chain edges, closing edge, cliques) fits one bag.
            self.push_bag(chain);
            return;
        }
        if cliques.is_empty() {
            // Pure cycle: the standard width-2 fan.
            let first = self.bags.len();
            for i in 1..m - 1 {
                self.push_bag(vec![chain[0], chain[i], chain[i + 1]]);
            }
            for t in first..self.bags.len() - 1 {
                self.edges.push((t, t + 1));
            }
            return;
        }

        // Positions of each clique in the current chain, sorted.
        let mut pos_of = vec![usize::MAX; chain.iter().max().unwrap() + 1];
        for (p, &v) in chain.iter().enumerate() {
            pos_of[v] = p;
        }
        let mut clique_positions: Vec<Vec<usize>> = cliques
            .iter()
            .map(|c| {
                let mut ps: Vec<usize> = c.iter().map(|&v| pos_of[v]).collect();
                ps.sort_unstable();
                ps
            })
            .collect();

        // Designated clique: lowest minimum position, ties by
        // lexicographically least position sequence.
        let designated = (0..cliques.len())
            .min_by(|&a, &b| clique_positions[a].cmp(&clique_positions[b]))
            .expect("cliques nonempty");

        // Rotate labels so the designated clique's least position becomes 0.
        let shift = clique_positions[designated][0];
        let rotated: Vec<usize> = (0..m).map(|p| chain[(p + shift) % m]).collect();
        for ps in &mut clique_positions {
            for p in ps.iter_mut() {
                *p = (*p + m - shift) % m;
            }
            ps.sort_unstable();
        }

        let anchors = clique_positions[designated].clone();
        let central = self.push_bag(cliques[designated].clone());
        let seg_count = anchors.len();

        // Distribute the remaining cliques over the segments between
        // consecutive anchors; non-crossing makes each fit exactly one.
        // The last segment wraps from the final anchor back to position 0.
        let mut per_segment: Vec<Vec<Vec<usize>>> = vec![Vec::new(); seg_count];
        for (i, ps) in clique_positions.iter().enumerate() {
            if i == designated {
                continue;
            }
            let min = ps[0];
            let max = *ps.last().unwrap();
            let fit = (0..seg_count - 1).find(|&j| anchors[j] <= min && max <= anchors[j + 1]);
            match fit {
                Some(j) => per_segment[j].push(cliques[i].clone()),
                None => {
                    // Either entirely past the last anchor, or wrapping
                    // through position 0 with its tail past the last anchor.
                    let wraps = min == 0 && ps[1..].iter().all(|&p| p >= anchors[seg_count - 1]);
                    debug_assert!(
                        min >= anchors[seg_count - 1] || wraps,
                        "non-crossing spec left clique unassigned"
                    );
                    per_segment[seg_count - 1].push(cliques[i].clone());
                }
            }
        }

        for (j, sub_cliques) in per_segment.into_iter().enumerate() {
            let seg: Vec<usize> = if j + 1 < seg_count {
                rotated[anchors[j]..=anchors[j + 1]].to_vec()
            } else {
                let mut s = rotated[anchors[j]..].to_vec();
                s.push(rotated[0]);
                s
            };
            let first_new = self.bags.len();
            let a = seg[0];
            let b = *seg.last().unwrap();
            self.build(seg, sub_cliques);
            let connector = (first_new..self.bags.len())
                .find(|&t| self.bags[t].contains(&a) && self.bags[t].contains(&b))
                .expect("segment decomposition covers its closing edge");
            self.edges.push((central, connector));
        }
    }
}

/// Merges a necklace on chain positions `0..n` with a society whose boundary
/// has length `n`, identifying chain position `i` with the `i`-th boundary
/// vertex, and returns the merged graph together with a tree decomposition
/// built by augmenting each necklace bag with the vortex bags of its chain
/// vertices. If the vortical decomposition has width `w`, the result has
/// width at most q(w+1) - 1.
pub fn combine_necklace_vortex(
    spec: &NecklaceSpec,
    ntd: &TreeDecomposition,
    society: &Society,
    vd: &VorticalDecomposition,
) -> Result<(Graph, TreeDecomposition), DecompError> {
    if spec.q < 3 {
        return Err(DecompError::CombineRequiresQ3 { q: spec.q });
    }
    let omega = society.omega();
    if spec.n != omega.len() {
        return Err(DecompError::ChainLengthMismatch { chain: spec.n, omega: omega.len() });
    }
    let violations = validate_td(&spec.graph(), ntd);
    if !violations.is_empty() {
        return Err(DecompError::InvalidNecklaceTd(violations));
    }
    // Adhesion is not constrained here, only path validity and membership.
    let violations = validate_vortical(society, vd, usize::MAX);
    if !violations.is_empty() {
        return Err(DecompError::InvalidVortical(violations));
    }

    // The necklace's vertices are exactly its chain, so the merged graph
    // lives on the society's vertex set with the necklace edges mapped in.
    let host = society.graph();
    let mut edges: Vec<(usize, usize)> = host.edges().to_vec();
    for &(a, b) in spec.graph().edges() {
        edges.push((omega[a], omega[b]));
    }
    let merged = Graph::new(host.vertex_count(), &edges)?;

    let mut bags = Vec::with_capacity(ntd.bags.len());
    for bag in &ntd.bags {
        let mut augmented: Vec<usize> = Vec::new();
        for &i in bag {
            augmented.push(omega[i]);
            augmented.extend_from_slice(&vd.bags[i]);
        }
        augmented.sort_unstable();
        augmented.dedup();
        bags.push(augmented);
    }
    Ok((merged, TreeDecomposition::new(ntd.tree.clone(), bags)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::exact_treewidth;

    fn spec(n: usize, q: usize, cliques: &[&[usize]]) -> NecklaceSpec {
        NecklaceSpec::new(n, q, cliques.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn plain_cycle_has_width_two() {
        let s = spec(4, 2, &[]);
        let td = necklace_td(&s);
        assert!(validate_td(&s.graph(), &td).is_empty());
        assert!(td.width() <= 2);
    }

    #[test]
    fn triangle_chord_necklace() {
        let s = spec(6, 3, &[&[0, 2, 4]]);
        let td = necklace_td(&s);
        assert!(validate_td(&s.graph(), &td).is_empty());
        assert!(td.width() <= 2);
        let tw = exact_treewidth(&s.graph(), 20).unwrap();
        assert!(tw.width <= td.width());
        assert_eq!(tw.width, 2);
    }

    #[test]
    fn two_four_cliques() {
        let s = spec(10, 4, &[&[0, 1, 2, 3], &[4, 6, 8, 9]]);
        let td = necklace_td(&s);
        assert!(validate_td(&s.graph(), &td).is_empty());
        assert!(td.width() <= 3);
        let tw = exact_treewidth(&s.graph(), 20).unwrap();
        assert_eq!(tw.width, 3); // contains K4
    }

    #[test]
    fn tiny_chains() {
        for n in 1..=3 {
            let s = spec(n, 2, &[]);
            let td = necklace_td(&s);
            assert!(validate_td(&s.graph(), &td).is_empty(), "n = {n}");
        }
    }

    #[test]
    fn nested_chords() {
        let s = spec(12, 2, &[&[0, 7], &[1, 5], &[2, 4], &[8, 11], &[9, 10]]);
        let td = necklace_td(&s);
        assert!(validate_td(&s.graph(), &td).is_empty());
        assert!(td.width() <= 2);
    }

    fn singleton_vd(n: usize) -> VorticalDecomposition {
        VorticalDecomposition::new((0..n).map(|i| vec![i]).collect())
    }

    #[test]
    fn combine_with_singleton_bags_preserves_width() {
        // Society on 6 vertices, edgeless, boundary = all vertices in order.
        let s = spec(6, 3, &[&[0, 2, 4]]);
        let society = Society::new(Graph::new(6, &[]).unwrap(), (0..6).collect()).unwrap();
        let vd = singleton_vd(6);
        let ntd = necklace_td(&s);
        let (merged, td) = combine_necklace_vortex(&s, &ntd, &society, &vd).unwrap();
        assert_eq!(merged, s.graph());
        assert_eq!(td.width(), ntd.width());
        assert_eq!(td.bags, ntd.bags);
        assert!(validate_td(&merged, &td).is_empty());
    }

    #[test]
    fn combine_with_width_one_vortex() {
        let s = spec(6, 3, &[&[0, 2, 4]]);
        // Society: boundary 0..6, one interior vertex 6 shared by bags 2 and 3.
        let g = Graph::new(7, &[(2, 6), (3, 6), (1, 2)]).unwrap();
        let society = Society::new(g, (0..6).collect()).unwrap();
        let vd = VorticalDecomposition::new(vec![
            vec![0],
            vec![1, 2],
            vec![2, 6],
            vec![3, 6],
            vec![4],
            vec![5],
        ]);
        assert!(validate_vortical(&society, &vd, 1).is_empty());
        assert_eq!(vd.width(), 1);
        let ntd = necklace_td(&s);
        let (merged, td) = combine_necklace_vortex(&s, &ntd, &society, &vd).unwrap();
        assert!(validate_td(&merged, &td).is_empty());
        assert!(td.width() <= 3 * (1 + 1) - 1);
        let tw = exact_treewidth(&merged, 20).unwrap();
        assert!(tw.width <= td.width());
    }

    #[test]
    fn combine_rejects_length_mismatch() {
        let s = spec(5, 3, &[]);
        let society = Society::new(Graph::new(4, &[]).unwrap(), (0..4).collect()).unwrap();
        let vd = singleton_vd(4);
        let ntd = necklace_td(&s);
        assert_eq!(
            combine_necklace_vortex(&s, &ntd, &society, &vd).unwrap_err(),
            DecompError::ChainLengthMismatch { chain: 5, omega: 4 }
        );
    }

    #[test]
    fn combine_rejects_small_q() {
        let s = spec(4, 2, &[]);
        let society = Society::new(Graph::new(4, &[]).unwrap(), (0..4).collect()).unwrap();
        let vd = singleton_vd(4);
        let ntd = necklace_td(&s);
        assert_eq!(
            combine_necklace_vortex(&s, &ntd, &society, &vd).unwrap_err(),
            DecompError::CombineRequiresQ3 { q: 2 }
        );
    }
}
