//! Hilbert function and regularity index of fat points.
//!
//! A form `f` of degree `t` lies in `p^m` (the `m`-th power of the ideal of
//! a point `P`) exactly when every derivative of order `<= m - 1` vanishes
//! at `P` (characteristic zero). Writing the derivative conditions in
//! divided-power form, the row for a multi-index `a` has entry
//! `C(b, a) * P^(b - a)` at the monomial `X^b`, with `C(b, a) = prod_j C(b_j, a_j)`
//! and zero whenever some `b_j < a_j`. Stacking these rows for every
//! component gives the conditions matrix; its nullspace is `[I_Z]_t` and its
//! rank is `H(t)`.
//!
//! `reg(Z)` and `reg(R_n / I_Z)` name the same number; this module exposes it
//! once as [`Engine::regularity_index`].

mod monomial;

pub use monomial::{exponent_vectors, monomial_index, MonomialBasis};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlinalg::{binomial_u64, Matrix, Rational, RowEchelon, SparseRow};
use crate::scheme::{Component, FatPointScheme, TruncatedScheme};
use monomial::small_binomial;

/// Largest number of degree-`t` monomials an [`Engine`] will build a matrix
/// over unless configured otherwise.
pub const DEFAULT_COLUMN_CAP: usize = 20_000;

/// Anything with a Hilbert function: a fat-point scheme, or a truncation
/// that may have collapsed to the unit ideal.
pub trait Subscheme {
    fn ambient_dim(&self) -> usize;
    /// `None` for the unit ideal.
    fn fat_points(&self) -> Option<&FatPointScheme>;
}

impl Subscheme for FatPointScheme {
    fn ambient_dim(&self) -> usize {
        FatPointScheme::ambient_dim(self)
    }

    fn fat_points(&self) -> Option<&FatPointScheme> {
        Some(self)
    }
}

impl Subscheme for TruncatedScheme {
    fn ambient_dim(&self) -> usize {
        TruncatedScheme::ambient_dim(self)
    }

    fn fat_points(&self) -> Option<&FatPointScheme> {
        self.as_scheme()
    }
}

/// Conditions matrix of a scheme in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionsMatrix {
    pub matrix: Matrix,
    pub basis: MonomialBasis,
    /// `(component index, derivative multi-index)` for each row.
    pub rows: Vec<(usize, Vec<u32>)>,
}

/// `H(0), ..., H(reg)` of a scheme.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertTable {
    pub values: Vec<u64>,
    pub reg: usize,
    pub multiplicity: u64,
}

/// Hilbert-function calculator with a bound on matrix width.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Engine {
    column_cap: usize,
}

impl Default for Engine {
    fn default() -> Self {
        Engine {
            column_cap: DEFAULT_COLUMN_CAP,
        }
    }
}

impl Engine {
    pub fn new(column_cap: usize) -> Self {
        Engine { column_cap }
    }

    pub fn column_cap(&self) -> usize {
        self.column_cap
    }

    /// `C(t + n, n)`, or `ResourceLimit` when it exceeds the cap.
    pub fn columns(&self, n: usize, t: usize) -> Result<usize> {
        let columns = binomial_u64((t + n) as i64, n as i64);
        if columns > self.column_cap as u64 {
            return Err(Error::ResourceLimit {
                t,
                columns,
                cap: self.column_cap,
            });
        }
        Ok(columns as usize)
    }

    /// Dense conditions matrix over the normalized coordinates. Rows are in
    /// component order, then by `|a|`, then lexicographically in `a`.
    pub fn conditions_matrix(&self, z: &FatPointScheme, t: usize) -> Result<ConditionsMatrix> {
        let n = z.ambient_dim();
        self.columns(n, t)?;
        let basis = MonomialBasis::new(n + 1, t as u32);
        let mut rows = Vec::new();
        let mut labels = Vec::new();
        for (ci, c) in z.components().iter().enumerate() {
            for alpha in derivative_indices(n, c.multiplicity) {
                let row = basis
                    .exponents()
                    .iter()
                    .map(|beta| divided_power_entry(c.point.coords(), beta, &alpha))
                    .collect();
                rows.push(row);
                labels.push((ci, alpha));
            }
        }
        Ok(ConditionsMatrix {
            matrix: Matrix::from_rows(rows, basis.len()),
            basis,
            rows: labels,
        })
    }

    /// Sparse integer form of the conditions matrix, one row per
    /// `(component, a)` in the same order as [`Engine::conditions_matrix`].
    ///
    /// Each point is replaced by its coprime integer representative `c * P`,
    /// which multiplies the row for `a` by `c^(t - |a|)`; row space and
    /// nullspace are unchanged. Rows with `|a| > t` are identically zero and
    /// are returned empty.
    pub fn condition_rows(&self, z: &FatPointScheme, t: usize) -> Result<(usize, Vec<SparseRow>)> {
        let n = z.ambient_dim();
        let cols = self.columns(n, t)?;
        let mut rows = Vec::new();
        for c in z.components() {
            component_rows(c, n, t, &mut rows);
        }
        Ok((cols, rows))
    }

    /// Row echelon form of the conditions matrix, filled row by row and
    /// stopped early once it has full column rank.
    pub fn condition_echelon(&self, z: &FatPointScheme, t: usize) -> Result<RowEchelon> {
        let n = z.ambient_dim();
        let cols = self.columns(n, t)?;
        let mut echelon = RowEchelon::new(cols);
        let mut rows = Vec::new();
        for c in z.components() {
            rows.clear();
            component_rows(c, n, t, &mut rows);
            for row in rows.drain(..) {
                if echelon.is_full() {
                    return Ok(echelon);
                }
                echelon.insert(row);
            }
        }
        Ok(echelon)
    }

    /// `dim_K [I]_t = C(t + n, n) - H(t)`; the unit ideal contains every form.
    pub fn ideal_dim(&self, z: &impl Subscheme, t: usize) -> Result<u64> {
        let n = z.ambient_dim();
        let all = binomial_u64((t + n) as i64, n as i64);
        Ok(all - self.hilbert_function(z, t)?)
    }

    /// `H(t) = dim_K (R / I)_t`, the rank of the conditions matrix.
    pub fn hilbert_function(&self, z: &impl Subscheme, t: usize) -> Result<u64> {
        match z.fat_points() {
            None => Ok(0),
            Some(z) => Ok(self.condition_echelon(z, t)?.rank() as u64),
        }
    }

    /// Least `t` with `H(t) = e`, by ascending scan from `t = 0`.
    ///
    /// The scan is capped at `(sum m_i) - 1`; running past it means the
    /// Hilbert computation is wrong and yields `InternalBoundViolation`.
    pub fn regularity_index(&self, z: &FatPointScheme) -> Result<usize> {
        let e = z.multiplicity();
        let cap = z.regularity_cap();
        for t in 0..=cap {
            if self.hilbert_function(z, t)? == e {
                return Ok(t);
            }
        }
        Err(Error::InternalBoundViolation(format!(
            "H({cap}) has not reached the multiplicity {e}"
        )))
    }

    /// Values `H(0..=reg)`, checked to start at one, increase strictly and
    /// stay at `e` in degree `reg + 1`.
    pub fn hilbert_table(&self, z: &FatPointScheme) -> Result<HilbertTable> {
        let e = z.multiplicity();
        let cap = z.regularity_cap();
        let mut values: Vec<u64> = Vec::new();
        for t in 0..=cap {
            let h = self.hilbert_function(z, t)?;
            if let Some(&last) = values.last() {
                if h <= last {
                    return Err(Error::InternalBoundViolation(format!(
                        "H({t}) = {h} does not exceed H({}) = {last}",
                        t - 1
                    )));
                }
            } else if h != 1 {
                return Err(Error::InternalBoundViolation(format!("H(0) = {h}")));
            }
            if h > e {
                return Err(Error::InternalBoundViolation(format!(
                    "H({t}) = {h} exceeds the multiplicity {e}"
                )));
            }
            values.push(h);
            if h == e {
                let after = self.hilbert_function(z, t + 1)?;
                if after != e {
                    return Err(Error::InternalBoundViolation(format!(
                        "H({}) = {after} after reaching the multiplicity {e}",
                        t + 1
                    )));
                }
                return Ok(HilbertTable {
                    values,
                    reg: t,
                    multiplicity: e,
                });
            }
        }
        Err(Error::InternalBoundViolation(format!(
            "H({cap}) has not reached the multiplicity {e}"
        )))
    }
}

impl HilbertTable {
    /// `H(t)` for any `t >= 0`.
    pub fn value(&self, t: usize) -> u64 {
        self.values.get(t).copied().unwrap_or(self.multiplicity)
    }
}

/// Multi-indices `a` in `n + 1` variables with `|a| <= m - 1`, by degree and
/// then lexicographically.
pub fn derivative_indices(n: usize, multiplicity: u32) -> Vec<Vec<u32>> {
    (0..multiplicity)
        .flat_map(|d| exponent_vectors(n + 1, d))
        .collect()
}

/// `C(b, a) * P^(b - a)`, zero if `b - a` has a negative entry.
pub fn divided_power_entry(point: &[Rational], beta: &[u32], alpha: &[u32]) -> Rational {
    let mut acc = Rational::one();
    for ((x, &b), &a) in point.iter().zip(beta).zip(alpha) {
        if b < a {
            return Rational::zero();
        }
        let e = (b - a) as usize;
        if e > 0 {
            if x.is_zero() {
                return Rational::zero();
            }
            acc *= num_traits::pow(x.clone(), e);
        }
        let c = small_binomial(b as i64, a as i64);
        if c != 1 {
            acc *= Rational::from_integer(c.into());
        }
    }
    acc
}

/// Appends the integer divided-power rows of one component in degree `t`.
fn component_rows(c: &Component, n: usize, t: usize, out: &mut Vec<SparseRow>) {
    let coords = c.point.integer_coords();
    let support: Vec<usize> = (0..=n).filter(|&j| !coords[j].is_zero()).collect();
    // powers[j][e] = coords[j]^e
    let powers: Vec<Vec<BigInt>> = coords
        .iter()
        .map(|x| {
            let mut p = Vec::with_capacity(t + 1);
            let mut acc = BigInt::one();
            for _ in 0..=t {
                p.push(acc.clone());
                acc *= x;
            }
            p
        })
        .collect();
    let mut shifts: Vec<Option<Vec<Vec<u32>>>> = vec![None; t + 1];
    let mut beta = vec![0u32; n + 1];
    for alpha in derivative_indices(n, c.multiplicity) {
        let order: usize = alpha.iter().map(|&a| a as usize).sum();
        if order > t {
            out.push(SparseRow::default());
            continue;
        }
        let d = t - order;
        let gammas = shifts[d].get_or_insert_with(|| exponent_vectors(support.len(), d as u32));
        let mut entries = Vec::with_capacity(gammas.len());
        for gamma in gammas.iter() {
            beta.copy_from_slice(&alpha);
            let mut value = BigInt::one();
            for (&j, &g) in support.iter().zip(gamma) {
                beta[j] += g;
                if g > 0 {
                    value *= &powers[j][g as usize];
                }
            }
            for j in 0..=n {
                let c = small_binomial(beta[j] as i64, alpha[j] as i64);
                if c != 1 {
                    value *= c;
                }
            }
            entries.push((monomial_index(&beta), value));
        }
        out.push(SparseRow::from_entries(entries));
    }
}
