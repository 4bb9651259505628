//! Hilbert functions, multiplicities and regularity indices of fat-point
//! schemes `Z = m_1 P_1 + ... + m_s P_s` in projective space, together with
//! the coordinate-padding embedding `P^n -> P^m` and machine checks of the
//! identities that relate the invariants of `Z` and of its image.
//!
//! All arithmetic is exact over the rationals. A Hilbert value `H(t)` is the
//! rank of the matrix of divided-power derivative conditions imposed by the
//! fat points on the degree-`t` monomials.

pub mod cli;
pub mod error;
pub mod exactlinalg;
pub mod hilbert;
pub mod scheme;
pub mod verify;

pub use error::{Error, Result};
pub use exactlinalg::{binomial, Matrix, Rational};
pub use hilbert::{ConditionsMatrix, Engine, HilbertTable, MonomialBasis, DEFAULT_COLUMN_CAP};
pub use scheme::{Component, FatPointScheme, PointConfig, ProjectivePoint, TruncatedScheme};
pub use verify::{CheckKind, Record, Relation, VerificationReport};
