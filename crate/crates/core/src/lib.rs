//! Exact computational engine for balanced, strongly orthogonal, and
//! well-balanced subsets of positive roots of simple root systems.
//!
//! All arithmetic is integer-exact: ambient coordinates are stored in units
//! of one half, so the half-integer roots of the exceptional systems become
//! integer vectors and inner products come back scaled by four. On top of
//! the root-system layer sit exact feasibility solvers (meet-in-the-middle
//! over signed subset sums), obstruction certificates (coordinate parity,
//! sign-pair counting, lattice membership, the rank-seven pair scan), and
//! the extremal searches that pin down the minimal cocardinality of a
//! balanced subset and the maximal cocardinality of a well-balanced one
//! for every simple type.

pub mod balance;
mod error;
pub mod extremal;
mod lattice;
pub mod rootsys;
pub mod witnesses;

pub use error::{BudgetBreach, Error, Result};
pub use rootsys::{CoordVector, DynkinLabel, Family, RootRef, RootSystem, Sign};
