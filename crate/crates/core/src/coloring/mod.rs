//! Colorings and monochromatic-component analysis: the exact min-max
//! solver, the exhaustive universal checker, the decomposition-guided
//! 2-coloring, and the recolor-bound property.

mod forall;
mod layered;
mod solver;

pub use forall::{forall_colorings_check, ComponentPredicate, ForallOutcome, DEFAULT_BUDGET};
pub use layered::{td_two_coloring, LayeredColoringReport};
pub use solver::{exact_min_max_mono, ExactSolution, DEFAULT_EXACT_COLORING_LIMIT};

use num_bigint::BigUint;
use thiserror::Error;

use crate::bounds;
use crate::decomp::TdViolation;
use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("vertex {vertex} has color {color}, outside 1..={k}")]
    ColorOutOfRange { vertex: usize, color: usize, k: usize },
    #[error("coloring covers {found} vertices but the graph has {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("number of colors must be at least 1")]
    NoColors,
    #[error("{k} colors exceed the supported maximum {max}")]
    TooManyColors { k: usize, max: usize },
    #[error("recoloring differs from the base at vertex {vertex}, outside Z")]
    DiffersOffZ { vertex: usize },
    #[error("base coloring has a monochromatic component of {found} vertices, above the certified bound {bound}")]
    BaseBoundViolated { found: usize, bound: usize },
    #[error("vertex {vertex} out of range")]
    VertexOutOfRange { vertex: usize },
    #[error("vertex {vertex} precolored twice")]
    DuplicatePrecolor { vertex: usize },
    #[error("graph has {vertices} vertices, exceeding the exact solver limit {limit}")]
    SizeLimitExceeded { vertices: usize, limit: usize },
    #[error("enumeration needs {required} canonical colorings, over the budget {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("decomposition invalid: {0:?}")]
    InvalidDecomposition(Vec<TdViolation>),
    #[error("layered coloring requires width >= 1 and max degree >= 1 (got width {width}, degree {degree})")]
    DegenerateLayering { width: i64, degree: usize },
}

/// A total coloring of `0..n` with colors `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    k: usize,
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Coloring, ColoringError> {
        if k == 0 {
            return Err(ColoringError::NoColors);
        }
        for (vertex, &color) in colors.iter().enumerate() {
            if color < 1 || color > k {
                return Err(ColoringError::ColorOutOfRange { vertex, color, k });
            }
        }
        Ok(Coloring { k, colors })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoComponent {
    pub color: usize,
    /// Sorted vertex list; connected within its color class.
    pub vertices: Vec<usize>,
    pub diameter: usize,
}

/// The monochromatic components of a coloring, with extremal statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoReport {
    pub components: Vec<MonoComponent>,
    pub max_size: usize,
    pub max_diameter: usize,
}

/// Splits the color classes into connected components, ordered by least
/// vertex, with per-component diameters.
pub fn mono_components(g: &Graph, coloring: &Coloring) -> Result<MonoReport, ColoringError> {
    if coloring.len() != g.vertex_count() {
        return Err(ColoringError::LengthMismatch {
            expected: g.vertex_count(),
            found: coloring.len(),
        });
    }
    let parts = color_partition(g, coloring.colors());
    let mut components = Vec::with_capacity(parts.len());
    let mut max_size = 0;
    let mut max_diameter = 0;
    for vertices in parts {
        let diameter = g
            .component_diameter(&vertices)
            .expect("partition pieces are connected vertex sets");
        max_size = max_size.max(vertices.len());
        max_diameter = max_diameter.max(diameter);
        components.push(MonoComponent { color: coloring.color(vertices[0]), vertices, diameter });
    }
    Ok(MonoReport { components, max_size, max_diameter })
}

/// Connected components of equal-color vertices, each sorted, ordered by
/// least vertex. Shared by the exhaustive checkers, which skip the report.
pub(crate) fn color_partition(g: &Graph, colors: &[usize]) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        stack.push(start);
        let mut comp = vec![start];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] && colors[w] == colors[start] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Largest equal-color component size; the cheap path for enumeration.
pub(crate) fn max_mono_size(g: &Graph, colors: &[usize]) -> usize {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut best = 0;
    let mut stack = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        stack.push(start);
        let mut size = 0;
        while let Some(u) = stack.pop() {
            size += 1;
            for &w in g.neighbors(u) {
                if !seen[w] && colors[w] == colors[start] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        best = best.max(size);
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecolorCheck {
    pub pass: bool,
    /// Vertices in the union of new-coloring components meeting Z.
    pub union_meeting_z: usize,
    /// The budget |Z| (Delta * k_size + 1) the union is held against.
    pub budget: BigUint,
    /// Largest new-coloring component disjoint from Z.
    pub max_disjoint: usize,
    pub k_size: usize,
}

/// Checks the recoloring bound: starting from `base` whose monochromatic
/// components are certified to have at most `k_size` vertices, recoloring
/// only inside `z` must leave (a) the union of components meeting `z` at
/// most |Z| (Delta k_size + 1) vertices and (b) every component disjoint
/// from `z` at most `k_size` vertices.
///
/// Precondition violations (disagreement off `z`, an uncertified base) are
/// errors, not failures.
pub fn check_recolor_bound(
    g: &Graph,
    base: &Coloring,
    k_size: usize,
    z: &[usize],
    recolored: &Coloring,
) -> Result<RecolorCheck, ColoringError> {
    let n = g.vertex_count();
    for c in [base, recolored] {
        if c.len() != n {
            return Err(ColoringError::LengthMismatch { expected: n, found: c.len() });
        }
    }
    let mut in_z = vec![false; n];
    for &v in z {
        if v >= n {
            return Err(ColoringError::VertexOutOfRange { vertex: v });
        }
        in_z[v] = true;
    }
    let z_count = in_z.iter().filter(|&&b| b).count();
    for v in 0..n {
        if !in_z[v] && base.color(v) != recolored.color(v) {
            return Err(ColoringError::DiffersOffZ { vertex: v });
        }
    }
    let base_max = max_mono_size(g, base.colors());
    if base_max > k_size {
        return Err(ColoringError::BaseBoundViolated { found: base_max, bound: k_size });
    }

    let parts = color_partition(g, recolored.colors());
    let mut union_meeting_z = 0usize;
    let mut max_disjoint = 0usize;
    for comp in &parts {
        if comp.iter().any(|&v| in_z[v]) {
            union_meeting_z += comp.len();
        } else {
            max_disjoint = max_disjoint.max(comp.len());
        }
    }
    let budget = bounds::recolor_budget(z_count as u64, g.max_degree() as u64, k_size as u64);
    let pass = BigUint::from(union_meeting_z) <= budget && max_disjoint <= k_size;
    Ok(RecolorCheck { pass, union_meeting_z, budget, max_disjoint, k_size })
}
