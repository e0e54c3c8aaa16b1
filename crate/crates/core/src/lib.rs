//! Clustered-coloring toolkit: graph generators, constructive tree
//! decompositions with an exact treewidth oracle, exhaustive and exact
//! coloring solvers judged by monochromatic component size, extremal
//! lower-bound constructions, and exact bound-formula evaluation.

pub mod bounds;
pub mod coloring;
pub mod corpus;
pub mod decomp;
pub mod extremal;
pub mod graph;
pub mod io;
