use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Component, FatPointScheme, ProjectivePoint};
use crate::error::{Error, Result};
use crate::exactlinalg::Rational;

/// Integer coordinates and curve parameters are drawn from `[-BOX, BOX]`.
pub const COORDINATE_BOX: i64 = 5;

const MAX_ATTEMPTS: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointConfig {
    /// Independent uniform integer points.
    Generic,
    /// Points on one line, spanned by two random independent points.
    Collinear,
    /// Points on the rational normal curve of degree `n`.
    Rnc,
}

impl PointConfig {
    pub const ALL: [PointConfig; 3] = [
        PointConfig::Generic,
        PointConfig::Collinear,
        PointConfig::Rnc,
    ];
}

impl fmt::Display for PointConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PointConfig::Generic => "generic",
            PointConfig::Collinear => "collinear",
            PointConfig::Rnc => "rnc",
        })
    }
}

impl FromStr for PointConfig {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "generic" => Ok(PointConfig::Generic),
            "collinear" => Ok(PointConfig::Collinear),
            "rnc" => Ok(PointConfig::Rnc),
            other => Err(format!(
                "unknown configuration {other:?} (expected generic, collinear or rnc)"
            )),
        }
    }
}

/// Images of `(s, t) -> (s^n, s^(n-1) t, ..., t^n)`, normalized.
pub fn rnc_points(n: usize, params: &[(Rational, Rational)]) -> Result<Vec<ProjectivePoint>> {
    let mut seen: Vec<ProjectivePoint> = Vec::with_capacity(params.len());
    for (idx, (s, t)) in params.iter().enumerate() {
        if s.is_zero() && t.is_zero() {
            return Err(Error::ZeroParameter);
        }
        let on_line = ProjectivePoint::new(vec![s.clone(), t.clone()])?;
        if let Some(first) = seen.iter().position(|p| *p == on_line) {
            return Err(Error::DuplicateParameter { first, second: idx });
        }
        seen.push(on_line);
    }
    seen.iter()
        .map(|p| {
            let (s, t) = (&p.coords()[0], &p.coords()[1]);
            let coords = (0..=n).map(|k| pow(s, n - k) * pow(t, k)).collect();
            ProjectivePoint::new(coords)
        })
        .collect()
}

fn pow(x: &Rational, e: usize) -> Rational {
    num_traits::pow(x.clone(), e)
}

/// Draws a scheme in `P^n` with the given multiplicities (so `s = mults.len()`),
/// deterministically from `seed`.
pub fn gen_random(
    n: usize,
    mults: &[u32],
    config: PointConfig,
    seed: u64,
) -> Result<FatPointScheme> {
    if n == 0 {
        return Err(Error::ZeroAmbientDim);
    }
    if mults.is_empty() {
        return Err(Error::EmptyScheme);
    }
    if let Some(&bad) = mults.iter().find(|&&m| m == 0) {
        return Err(Error::NonpositiveMultiplicity(bad as i64));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = mults.len();
    let points = match config {
        PointConfig::Generic => distinct(s, || {
            let v: Vec<i64> = (0..=n).map(|_| draw(&mut rng)).collect();
            ProjectivePoint::from_integers(&v).ok()
        })?,
        PointConfig::Collinear => {
            let (a, b) = independent_pair(n, &mut rng)?;
            distinct(s, || {
                let (l, m) = (draw(&mut rng), draw(&mut rng));
                if l == 0 && m == 0 {
                    return None;
                }
                let v: Vec<i64> = a.iter().zip(&b).map(|(x, y)| l * x + m * y).collect();
                ProjectivePoint::from_integers(&v).ok()
            })?
        }
        PointConfig::Rnc => {
            let params = distinct(s, || {
                let (u, v) = (draw(&mut rng), draw(&mut rng));
                ProjectivePoint::from_integers(&[u, v]).ok()
            })?;
            let params: Vec<(Rational, Rational)> = params
                .into_iter()
                .map(|p| (p.coords()[0].clone(), p.coords()[1].clone()))
                .collect();
            rnc_points(n, &params)?
        }
    };
    FatPointScheme::from_components(
        n,
        points
            .into_iter()
            .zip(mults)
            .map(|(point, &m)| Component::new(point, m))
            .collect(),
    )
}

fn draw(rng: &mut ChaCha8Rng) -> i64 {
    rng.gen_range(-COORDINATE_BOX..=COORDINATE_BOX)
}

/// Collects `s` pairwise distinct points from a fallible sampler.
fn distinct(
    s: usize,
    mut sample: impl FnMut() -> Option<ProjectivePoint>,
) -> Result<Vec<ProjectivePoint>> {
    let mut out: Vec<ProjectivePoint> = Vec::with_capacity(s);
    for _ in 0..MAX_ATTEMPTS {
        if out.len() == s {
            break;
        }
        if let Some(p) = sample() {
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    if out.len() < s {
        return Err(Error::GeneratorExhausted {
            wanted: s,
            attempts: MAX_ATTEMPTS,
        });
    }
    Ok(out)
}

fn independent_pair(n: usize, rng: &mut ChaCha8Rng) -> Result<(Vec<i64>, Vec<i64>)> {
    for _ in 0..MAX_ATTEMPTS {
        let a: Vec<i64> = (0..=n).map(|_| draw(rng)).collect();
        let b: Vec<i64> = (0..=n).map(|_| draw(rng)).collect();
        let dependent = (0..=n).all(|i| (i + 1..=n).all(|j| a[i] * b[j] == a[j] * b[i]));
        if !dependent {
            return Ok((a, b));
        }
    }
    Err(Error::GeneratorExhausted {
        wanted: 2,
        attempts: MAX_ATTEMPTS,
    })
}
