//! Shared fixtures for the integration tests: a seeded corpus of schemes and
//! closed forms that do not go through the rank engine.

#![allow(dead_code)]

use fatpoints::{FatPointScheme, PointConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Column cap used for corpus runs; the largest corpus image (five
/// collinear triple points of `P^3` pushed into `P^6`) needs about 54k
/// columns at `reg + 1`.
pub const CORPUS_COLUMN_CAP: usize = 200_000;

pub const SEEDS_PER_FAMILY: u64 = 200;

#[derive(Clone, Debug)]
pub struct Case {
    pub config: PointConfig,
    pub seed: u64,
    pub z: FatPointScheme,
}

impl Case {
    /// Targets `n + 1 ..= n + 3`.
    pub fn targets(&self) -> std::ops::RangeInclusive<usize> {
        let n = self.z.ambient_dim();
        n + 1..=n + 3
    }

    pub fn label(&self) -> String {
        format!(
            "{}#{} n={} mults={:?}",
            self.config,
            self.seed,
            self.z.ambient_dim(),
            self.z.multiplicities()
        )
    }
}

/// Multiplicity vector for one corpus seed: `n` cycles through 1..=3,
/// `1 <= s <= 5`, every tenth seed is reduced (all `m_i = 1`), the rest draw
/// `m_i` from 1..=3.
pub fn corpus_shape(config: PointConfig, seed: u64) -> (usize, Vec<u32>) {
    let tag = match config {
        PointConfig::Generic => 0x67,
        PointConfig::Collinear => 0x63,
        PointConfig::Rnc => 0x72,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9) ^ tag);
    let n = 1 + (seed % 3) as usize;
    let s = rng.gen_range(1..=5);
    let mults = if seed.is_multiple_of(10) {
        vec![1; s]
    } else {
        (0..s).map(|_| rng.gen_range(1..=3)).collect()
    };
    (n, mults)
}

pub fn corpus_with(seeds: u64) -> Vec<Case> {
    let mut cases = Vec::new();
    for config in PointConfig::ALL {
        for seed in 0..seeds {
            let (n, mults) = corpus_shape(config, seed);
            let z =
                fatpoints::scheme::gen_random(n, &mults, config, seed).expect("corpus generation");
            cases.push(Case { config, seed, z });
        }
    }
    cases
}

pub fn corpus() -> Vec<Case> {
    corpus_with(SEEDS_PER_FAMILY)
}

/// `C(a, b)` by the multiplicative formula in `u128`.
pub fn choose(a: usize, b: usize) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Hilbert function of a single point of multiplicity `m` in `P^n`: every
/// condition is independent until the conditions outnumber the monomials.
pub fn single_point_hilbert(n: usize, m: usize, t: usize) -> u128 {
    choose(t + n, n).min(choose(m - 1 + n, n))
}

/// Textbook Gauss-Jordan elimination over the rationals, written
/// independently of the library's kernels.
pub fn naive_rank(rows: &[Vec<fatpoints::Rational>]) -> usize {
    use num_traits::Zero;
    let mut a: Vec<Vec<fatpoints::Rational>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = &row[col] / &pivot[col];
                for (x, p) in row.iter_mut().zip(&pivot).skip(col) {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}
