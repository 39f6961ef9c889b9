use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use num_traits::Zero;

use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// Dense coordinate vector over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector(Vec<Rational>);

impl Vector {
    pub fn new(entries: Vec<Rational>) -> Self {
        Vector(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![Rational::zero(); dim])
    }

    /// Standard basis vector with 0-based index `i`.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = rational::one();
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Vector(xs.iter().map(|&x| rational::int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.0.iter().enumerate().filter(|(_, x)| !x.is_zero())
    }

    pub fn check_dim(&self, dim: usize) -> Result<()> {
        if self.dim() == dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: dim,
                found: self.dim(),
            })
        }
    }

    pub fn scale(&self, c: &Rational) -> Vector {
        if c.is_zero() {
            return Vector::zeros(self.dim());
        }
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Rational, other: &Vector) {
        debug_assert_eq!(self.dim(), other.dim());
        if c.is_zero() {
            return;
        }
        for (s, o) in self.0.iter_mut().zip(&other.0) {
            if !o.is_zero() {
                *s += c * o;
            }
        }
    }

    pub fn dot(&self, other: &Vector) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        let mut acc = Rational::zero();
        for (a, b) in self.0.iter().zip(&other.0) {
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
        acc
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    /// Comma-separated short form, e.g. `1,-1/2,0`.
    pub fn to_csv(&self) -> String {
        self.0
            .iter()
            .map(rational::to_short)
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse_csv(s: &str) -> Result<Vector> {
        let parts: Result<Vec<_>> = s.split(',').map(|p| rational::parse_loose(p)).collect();
        Ok(Vector(parts?))
    }
}

impl Index<usize> for Vector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

/// Writes the vector as a combination of basis symbols, `e1 - 1/2 e3`.
pub fn format_combination(v: &Vector, names: &[String]) -> String {
    let mut out = String::new();
    for (i, c) in v.support() {
        let neg = c < &Rational::zero();
        let mag = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag != rational::one() {
            out.push_str(&rational::to_short(&mag));
            out.push(' ');
        }
        out.push_str(&names[i]);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_csv())
    }
}
