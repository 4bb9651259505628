use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Parses `"p"` or `"p/q"`. Decimal points, exponents, whitespace and zero
/// denominators are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let integer = |part: &str, signed: bool| -> Result<BigInt> {
        let digits = if signed {
            part.strip_prefix('-').unwrap_or(part)
        } else {
            part
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        part.parse::<BigInt>().map_err(|_| bad())
    };
    let num = integer(num, true)?;
    let den = match den {
        Some(d) => integer(d, false)?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// `"p"` when the denominator is one, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `C(a, b)`, with `C(a, b) = 0` whenever `b < 0` or `a < b`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < b {
        return BigInt::zero();
    }
    // a >= b >= 0 here
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// [`binomial`] for values known to fit a machine word (dimensions of
/// graded pieces, multiplicities).
pub fn binomial_u64(a: i64, b: i64) -> u64 {
    let c = binomial(a, b);
    debug_assert!(!c.is_negative());
    c.to_u64().expect("binomial coefficient exceeds u64")
}
