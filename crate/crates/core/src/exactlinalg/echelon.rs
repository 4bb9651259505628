use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;

/// Integer row stored as `(column, value)` pairs, sorted by column, with no
/// explicit zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseRow(Vec<(usize, BigInt)>);

/// Rational vector stored sparsely, sorted by index.
pub type SparseVector = Vec<(usize, Rational)>;

impl SparseRow {
    /// Builds a row from arbitrary `(column, value)` pairs. Zero values are
    /// dropped and repeated columns are summed.
    pub fn from_entries(mut entries: Vec<(usize, BigInt)>) -> Self {
        entries.sort_by_key(|(c, _)| *c);
        let mut out: Vec<(usize, BigInt)> = Vec::with_capacity(entries.len());
        for (c, v) in entries {
            match out.last_mut() {
                Some((lc, lv)) if *lc == c => *lv += v,
                _ => out.push((c, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        SparseRow(out)
    }

    pub fn entries(&self) -> &[(usize, BigInt)] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn leading(&self) -> Option<&(usize, BigInt)> {
        self.0.first()
    }

    /// Divides out the gcd of the entries and makes the leading entry
    /// positive.
    fn make_primitive(&mut self) {
        let Some((_, lead)) = self.0.first() else {
            return;
        };
        let negative = lead.is_negative();
        let mut g = BigInt::zero();
        for (_, v) in &self.0 {
            g = g.gcd(v);
            if g.is_one() {
                break;
            }
        }
        if negative {
            g = -g;
        }
        if !g.is_one() {
            for (_, v) in &mut self.0 {
                *v /= &g;
            }
        }
    }

    /// `a * self - b * other`, merged column-wise.
    fn combine(&self, a: &BigInt, other: &SparseRow, b: &BigInt) -> SparseRow {
        let (x, y) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(x.len() + y.len());
        let (mut i, mut j) = (0, 0);
        while i < x.len() || j < y.len() {
            let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
            let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
            if take_x {
                out.push((x[i].0, a * &x[i].1));
                i += 1;
            } else if take_y {
                out.push((y[j].0, -(b * &y[j].1)));
                j += 1;
            } else {
                let v = a * &x[i].1 - b * &y[j].1;
                if !v.is_zero() {
                    out.push((x[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        SparseRow(out)
    }
}

/// Row echelon form over `Z` built one row at a time.
///
/// Every stored row is primitive and has its leading (pivot) column distinct
/// from all other stored rows. Inserting a row reduces its leading entry
/// against the stored row with that pivot until the leading column is new
/// (the row is independent) or the row vanishes (it is dependent).
#[derive(Clone, Debug)]
pub struct RowEchelon {
    cols: usize,
    rows: Vec<SparseRow>,
    pivot_row: HashMap<usize, usize>,
}

impl RowEchelon {
    pub fn new(cols: usize) -> Self {
        RowEchelon {
            cols,
            rows: Vec::new(),
            pivot_row: HashMap::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Adds a row; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        debug_assert!(row.0.iter().all(|(c, _)| *c < self.cols));
        let mut row = row;
        loop {
            let Some((col, lead)) = row.leading() else {
                return false;
            };
            match self.pivot_row.get(col) {
                Some(&k) => {
                    let pivot = &self.rows[k];
                    let p = &pivot.0[0].1;
                    let g = lead.gcd(p);
                    let a = p / &g;
                    let b = lead / &g;
                    row = row.combine(&a, pivot, &b);
                    row.make_primitive();
                }
                None => {
                    let col = *col;
                    row.make_primitive();
                    self.pivot_row.insert(col, self.rows.len());
                    self.rows.push(row);
                    return true;
                }
            }
        }
    }

    /// Gauss-Jordan completion: pivots scaled to one and cleared from every
    /// other row.
    pub fn reduce(&self) -> ReducedEchelon {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&k| self.rows[k].0[0].0);
        let mut rows: Vec<(usize, SparseVector)> = order
            .iter()
            .map(|&k| {
                let row = &self.rows[k];
                let lead = row.0[0].1.clone();
                let v = row
                    .0
                    .iter()
                    .map(|(c, x)| (*c, Rational::new(x.clone(), lead.clone())))
                    .collect();
                (row.0[0].0, v)
            })
            .collect();
        // Eliminate the pivot of row k from rows above it, from the last
        // pivot backwards so cleared columns stay cleared.
        for k in (0..rows.len()).rev() {
            let (pc, pivot) = (rows[k].0, rows[k].1.clone());
            for row in rows[..k].iter_mut() {
                let Ok(pos) = row.1.binary_search_by_key(&pc, |(c, _)| *c) else {
                    continue;
                };
                let factor = row.1[pos].1.clone();
                row.1 = axpy(&row.1, &factor, &pivot);
            }
        }
        ReducedEchelon {
            cols: self.cols,
            rows,
        }
    }
}

/// `x - factor * y` on sparse rational vectors.
fn axpy(x: &SparseVector, factor: &Rational, y: &SparseVector) -> SparseVector {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push(x[i].clone());
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            out.push((y[j].0, -(factor * &y[j].1)));
            j += 1;
        } else {
            let v = &x[i].1 - factor * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Reduced row echelon form: rows sorted by pivot column, each pivot equal
/// to one and zero in every other row.
#[derive(Clone, Debug)]
pub struct ReducedEchelon {
    cols: usize,
    rows: Vec<(usize, SparseVector)>,
}

impl ReducedEchelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    /// Nullspace basis in the same normal form as
    /// [`Matrix::nullspace_basis`](super::Matrix::nullspace_basis), ordered
    /// by free column.
    pub fn nullspace_basis(&self) -> Vec<SparseVector> {
        let mut is_pivot = vec![false; self.cols];
        let mut by_column: HashMap<usize, Vec<(usize, Rational)>> = HashMap::new();
        for (p, row) in &self.rows {
            is_pivot[*p] = true;
            for (c, v) in row {
                if c != p {
                    by_column.entry(*c).or_default().push((*p, -v.clone()));
                }
            }
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = by_column.remove(&f).unwrap_or_default();
                v.push((f, Rational::one()));
                v.sort_by_key(|(c, _)| *c);
                v
            })
            .collect()
    }
}
