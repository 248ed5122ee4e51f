//! Planar straight-line realization of weighted 2-trees with prescribed
//! edge lengths.
//!
//! The crate decides whether a weighted 2-tree admits a planar straight-line
//! drawing in which every edge has its prescribed Euclidean length, and
//! constructs such a drawing when one exists. Solvers are specialized by
//! instance class:
//!
//! * [`fixed_embedding`] — prescribed rotation system or plane embedding,
//! * [`two_lengths`] — at most two distinct edge lengths,
//! * [`outerplanar`] — maximal outerpaths and outerpillars,
//! * [`spq_solver`] — general 2-trees, parameterized by SPQ-tree height,
//! * [`oracle`] — exponential ground truth for small instances,
//! * [`reduction`] — hard-instance generator from planar monotone 3-SAT.

pub mod checker;
pub mod fixed_embedding;
pub mod geom;
pub mod model;
pub mod oracle;
pub mod outerplanar;
pub mod reduction;
pub mod spq_solver;
pub mod two_lengths;
