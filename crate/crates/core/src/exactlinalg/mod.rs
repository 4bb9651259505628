//! Exact rational arithmetic and linear algebra over `Q`.
//!
//! Dense [`Matrix`] values carry rank (fraction-free elimination) and
//! nullspace computations. [`RowEchelon`] is the sparse, row-incremental
//! integer variant used for the large and mostly-empty conditions matrices.

mod echelon;
mod matrix;
mod rational;

pub use echelon::{ReducedEchelon, RowEchelon, SparseRow, SparseVector};
pub use matrix::Matrix;
pub use rational::{binomial, binomial_u64, format_rational, parse_rational, Rational};
