//! Fat-point schemes `Z = m_1 P_1 + ... + m_s P_s` in `P^n`.
//!
//! Points carry `n + 1` homogeneous rational coordinates, normalized so the
//! first nonzero coordinate is one. Component order is the input order and
//! is never changed.

mod generate;
mod json;
mod point;

pub use generate::{gen_random, rnc_points, PointConfig};
pub use json::{ComponentJson, SchemeJson};
pub use point::ProjectivePoint;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlinalg::{binomial_u64, Rational};

/// One fat point `m P`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Component {
    pub point: ProjectivePoint,
    pub multiplicity: u32,
}

impl Component {
    pub fn new(point: ProjectivePoint, multiplicity: u32) -> Self {
        Component {
            point,
            multiplicity,
        }
    }
}

/// A nonempty fat-point scheme with pairwise distinct support points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FatPointScheme {
    ambient_dim: usize,
    components: Vec<Component>,
}

/// Result of lowering every multiplicity by the same amount. A power of a
/// point ideal with nonpositive exponent is the whole ring, so components
/// that drop to zero or below disappear; when none survive the defining
/// ideal is the unit ideal and every Hilbert value vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TruncatedScheme {
    Scheme(FatPointScheme),
    UnitIdeal { ambient_dim: usize },
}

impl FatPointScheme {
    /// Validates raw `(coordinates, multiplicity)` pairs, normalizing each
    /// point.
    pub fn new(ambient_dim: usize, raw: Vec<(Vec<Rational>, i64)>) -> Result<Self> {
        let components = raw
            .into_iter()
            .map(|(coords, m)| {
                if coords.len() != ambient_dim + 1 {
                    return Err(Error::DimensionMismatch {
                        expected: ambient_dim + 1,
                        found: coords.len(),
                    });
                }
                if m < 1 {
                    return Err(Error::NonpositiveMultiplicity(m));
                }
                Ok(Component {
                    point: ProjectivePoint::new(coords)?,
                    multiplicity: u32::try_from(m)
                        .map_err(|_| Error::NonpositiveMultiplicity(m))?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_components(ambient_dim, components)
    }

    /// Integer-coordinate convenience constructor.
    pub fn from_integers(ambient_dim: usize, raw: &[(&[i64], i64)]) -> Result<Self> {
        Self::new(
            ambient_dim,
            raw.iter()
                .map(|(c, m)| {
                    (
                        c.iter()
                            .map(|&x| Rational::from_integer(x.into()))
                            .collect(),
                        *m,
                    )
                })
                .collect(),
        )
    }

    pub fn from_components(ambient_dim: usize, components: Vec<Component>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::ZeroAmbientDim);
        }
        if components.is_empty() {
            return Err(Error::EmptyScheme);
        }
        for c in &components {
            if c.point.coords().len() != ambient_dim + 1 {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim + 1,
                    found: c.point.coords().len(),
                });
            }
            if c.multiplicity == 0 {
                return Err(Error::NonpositiveMultiplicity(0));
            }
        }
        for i in 0..components.len() {
            for j in i + 1..components.len() {
                if components[i].point == components[j].point {
                    return Err(Error::DuplicatePoint {
                        first: i,
                        second: j,
                    });
                }
            }
        }
        Ok(FatPointScheme {
            ambient_dim,
            components,
        })
    }

    /// The fat point `m P`.
    pub fn single(point: ProjectivePoint, multiplicity: u32) -> Result<Self> {
        let n = point.ambient_dim();
        Self::from_components(
            n,
            vec![Component {
                point,
                multiplicity,
            }],
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Number of support points `s`.
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn multiplicities(&self) -> Vec<u32> {
        self.components.iter().map(|c| c.multiplicity).collect()
    }

    /// Multiplicities sorted in descending order.
    pub fn sorted_multiplicities(&self) -> Vec<u32> {
        let mut m = self.multiplicities();
        m.sort_unstable_by(|a, b| b.cmp(a));
        m
    }

    /// Degree of the scheme, `sum_i C(m_i + n - 1, n)`: the value at which
    /// the Hilbert function stabilizes.
    pub fn multiplicity(&self) -> u64 {
        let n = self.ambient_dim as i64;
        self.components
            .iter()
            .map(|c| binomial_u64(c.multiplicity as i64 + n - 1, n))
            .sum()
    }

    /// `(sum_i m_i) - 1`, an upper bound for the regularity index that is
    /// attained by collinear points.
    pub fn regularity_cap(&self) -> usize {
        self.components
            .iter()
            .map(|c| c.multiplicity as usize)
            .sum::<usize>()
            - 1
    }

    /// Image under `P^n -> P^m`, `(a_0, ..., a_n) -> (a_0, ..., a_n, 0, ..., 0)`.
    pub fn embed(&self, target_dim: usize) -> Result<FatPointScheme> {
        if target_dim < self.ambient_dim {
            return Err(Error::TargetTooSmall {
                ambient: self.ambient_dim,
                target: target_dim,
            });
        }
        let extra = target_dim - self.ambient_dim;
        Ok(FatPointScheme {
            ambient_dim: target_dim,
            components: self
                .components
                .iter()
                .map(|c| Component {
                    point: c.point.padded(extra),
                    multiplicity: c.multiplicity,
                })
                .collect(),
        })
    }

    /// Lowers every multiplicity by `k`, dropping components that reach zero.
    pub fn truncate(&self, k: i64) -> TruncatedScheme {
        let components: Vec<Component> = self
            .components
            .iter()
            .filter_map(|c| {
                let m = c.multiplicity as i64 - k;
                (m >= 1).then(|| Component {
                    point: c.point.clone(),
                    multiplicity: m as u32,
                })
            })
            .collect();
        if components.is_empty() {
            TruncatedScheme::UnitIdeal {
                ambient_dim: self.ambient_dim,
            }
        } else {
            TruncatedScheme::Scheme(FatPointScheme {
                ambient_dim: self.ambient_dim,
                components,
            })
        }
    }

    /// Whether every point lies on the rational normal curve
    /// `(s, t) -> (s^n, s^(n-1) t, ..., t^n)`, i.e. the 2 x n catalecticant
    /// `[[x_0 .. x_(n-1)], [x_1 .. x_n]]` has rank at most one.
    pub fn on_rational_normal_curve(&self) -> bool {
        self.components.iter().all(|c| {
            let x = c.point.coords();
            (0..x.len() - 1).all(|i| {
                (i + 1..x.len() - 1).all(|j| (&x[i] * &x[j + 1] - &x[i + 1] * &x[j]).is_zero())
            })
        })
    }

    /// Whether all multiplicities equal one (a reduced set of points).
    pub fn is_reduced(&self) -> bool {
        self.components.iter().all(|c| c.multiplicity == 1)
    }
}

impl TruncatedScheme {
    pub fn ambient_dim(&self) -> usize {
        match self {
            TruncatedScheme::Scheme(z) => z.ambient_dim(),
            TruncatedScheme::UnitIdeal { ambient_dim } => *ambient_dim,
        }
    }

    pub fn as_scheme(&self) -> Option<&FatPointScheme> {
        match self {
            TruncatedScheme::Scheme(z) => Some(z),
            TruncatedScheme::UnitIdeal { .. } => None,
        }
    }

    pub fn is_unit_ideal(&self) -> bool {
        matches!(self, TruncatedScheme::UnitIdeal { .. })
    }
}

impl From<FatPointScheme> for TruncatedScheme {
    fn from(z: FatPointScheme) -> Self {
        TruncatedScheme::Scheme(z)
    }
}
