/// All exponent vectors of total degree `degree` in `num_vars` variables, in
/// lexicographic order with `X_0` most significant (so `X_0^t` comes first
/// and `X_n^t` last).
pub fn exponent_vectors(num_vars: usize, degree: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if num_vars == 0 {
        if degree == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut current = vec![0u32; num_vars];
    fill(&mut current, 0, degree, &mut out);
    out
}

fn fill(current: &mut [u32], pos: usize, remaining: u32, out: &mut Vec<Vec<u32>>) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(current.to_vec());
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill(current, pos + 1, remaining - e, out);
    }
    current[pos] = 0;
}

/// The monomials spanning `[K[X_0, ..., X_n]]_t`, in graded lexicographic
/// order. Within one degree this is plain lexicographic order, so the order
/// is the one produced by [`exponent_vectors`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    num_vars: usize,
    degree: u32,
    exponents: Vec<Vec<u32>>,
}

impl MonomialBasis {
    pub fn new(num_vars: usize, degree: u32) -> Self {
        MonomialBasis {
            num_vars,
            degree,
            exponents: exponent_vectors(num_vars, degree),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponents(&self) -> &[Vec<u32>] {
        &self.exponents
    }

    /// Position of a monomial of this degree, see [`monomial_index`].
    pub fn index_of(&self, exponents: &[u32]) -> Option<usize> {
        if exponents.len() != self.num_vars || exponents.iter().sum::<u32>() != self.degree {
            return None;
        }
        Some(monomial_index(exponents))
    }
}

/// Position of `exponents` among the monomials of the same degree in the
/// order of [`exponent_vectors`], computed without enumeration.
///
/// At coordinate `j`, with remaining degree `r` and `k` later variables, the
/// monomials that share the prefix but have a larger `j`-th exponent number
/// `C(r - b_j - 1 + k, k)`.
pub fn monomial_index(exponents: &[u32]) -> usize {
    let nv = exponents.len();
    let mut remaining: i64 = exponents.iter().map(|&e| e as i64).sum();
    let mut index = 0u64;
    for (j, &e) in exponents.iter().enumerate().take(nv.saturating_sub(1)) {
        let k = (nv - 1 - j) as i64;
        index += small_binomial(remaining - e as i64 - 1 + k, k);
        remaining -= e as i64;
    }
    index as usize
}

/// Machine-word `C(a, b)` (zero outside `0 <= b <= a`) for the small
/// arguments met in monomial bookkeeping.
pub(crate) fn small_binomial(a: i64, b: i64) -> u64 {
    if b < 0 || a < b {
        return 0;
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut acc: u64 = 1;
    for i in 0..b {
        acc = acc * (a - i) / (i + 1);
    }
    acc
}
