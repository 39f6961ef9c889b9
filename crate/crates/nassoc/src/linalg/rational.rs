//! Exact rational scalars backed by `num-rational`.
//!
//! `BigRational` already keeps values in lowest terms with a positive
//! denominator, so the type is used directly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `p/q` reduced. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Rational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn half() -> Rational {
    frac(1, 2)
}

/// Canonical `p/q` string, always with an explicit denominator.
pub fn to_canonical(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Short human form: `3`, `-1/2`.
pub fn to_short(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `p/q`. Rejects zero or negative denominators and
/// fractions not in lowest terms.
pub fn parse_strict(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in `{s}`")))?;
    let q: BigInt = q
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator in `{s}`")))?;
    if q <= BigInt::zero() {
        return Err(Error::Parse(format!(
            "denominator must be positive in `{s}`"
        )));
    }
    let r = BigRational::new(p.clone(), q.clone());
    if r.numer() != &p || r.denom() != &q {
        return Err(Error::Parse(format!("`{s}` is not in lowest terms")));
    }
    Ok(r)
}

/// Parses `p` or `p/q` with any nonzero denominator, normalizing.
pub fn parse_loose(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in `{s}`")))?;
    let q: BigInt = q
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator in `{s}`")))?;
    if q.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(p, q))
}

pub fn pow(r: &Rational, e: usize) -> Rational {
    let mut acc = one();
    for _ in 0..e {
        acc *= r;
    }
    acc
}
