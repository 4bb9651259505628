use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactlinalg::{format_rational, Rational};

/// A point of `P^n` as `n + 1` homogeneous coordinates whose first nonzero
/// entry is one. Two inputs describe the same projective point exactly when
/// their normalized coordinates are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    coords: Vec<Rational>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        let Some(lead) = coords.iter().find(|x| !x.is_zero()).cloned() else {
            return Err(Error::ZeroPoint);
        };
        let coords = if lead.is_one() {
            coords
        } else {
            coords.into_iter().map(|x| x / &lead).collect()
        };
        Ok(ProjectivePoint { coords })
    }

    pub fn from_integers(coords: &[i64]) -> Result<Self> {
        Self::new(
            coords
                .iter()
                .map(|&x| Rational::from_integer(x.into()))
                .collect(),
        )
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn ambient_dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// Appends `extra` zero coordinates. Normalization is unaffected.
    pub fn padded(&self, extra: usize) -> ProjectivePoint {
        let mut coords = self.coords.clone();
        coords.resize(coords.len() + extra, Rational::zero());
        ProjectivePoint { coords }
    }

    /// The representative with coprime integer coordinates and positive
    /// first nonzero entry.
    pub fn integer_coords(&self) -> Vec<BigInt> {
        let lcm = self
            .coords
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = self
            .coords
            .iter()
            .map(|x| x.numer() * (&lcm / x.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        debug_assert!(g.is_positive());
        ints.into_iter().map(|x| x / &g).collect()
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(" : "))
    }
}
