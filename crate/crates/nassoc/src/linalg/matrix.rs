use std::fmt;

use num_traits::{One, Zero};

use super::polynomial::Polynomial;
use super::rational::{self, Rational};
use super::subspace::Subspace;
use super::vector::Vector;
use crate::error::{Error, Result};

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| rational::int(x)).collect())
            .collect();
        Self::from_rows(rows).expect("ragged integer rows")
    }

    /// Matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(rows: usize, cols: &[Vector]) -> Result<Self> {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            c.check_dim(rows)?;
            for i in 0..rows {
                m.set(i, j, c[i].clone());
            }
        }
        Ok(m)
    }

    pub fn from_row_vectors(cols: usize, rows: &[Vector]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            r.check_dim(cols)?;
            data.extend(r.entries().iter().cloned());
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Inverse of [`Matrix::flatten`].
    pub fn from_flat(rows: usize, cols: usize, v: &Vector) -> Result<Self> {
        v.check_dim(rows * cols)?;
        Ok(Matrix {
            rows,
            cols,
            data: v.entries().to_vec(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Rational) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vector(&self, r: usize) -> Vector {
        Vector::new(self.row(r).to_vec())
    }

    pub fn column(&self, c: usize) -> Vector {
        Vector::new((0..self.rows).map(|r| self.get(r, c).clone()).collect())
    }

    /// Row-major flattening.
    pub fn flatten(&self) -> Vector {
        Vector::new(self.data.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Product `self * other`, skipping zero entries of `self`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &Vector) -> Result<Vector> {
        v.check_dim(self.cols)?;
        let mut out = Vector::zeros(self.rows);
        for i in 0..self.rows {
            let mut acc = Rational::zero();
            for (a, b) in self.row(i).iter().zip(v.entries()) {
                if !a.is_zero() && !b.is_zero() {
                    acc += a * b;
                }
            }
            out[i] = acc;
        }
        Ok(out)
    }

    fn zip_with(
        &self,
        other: &Matrix,
        f: impl Fn(&Rational, &Rational) -> Rational,
    ) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn trace(&self) -> Result<Rational> {
        self.require_square()?;
        Ok((0..self.rows).map(|i| self.get(i, i).clone()).sum())
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// First `(row, col)` where `self` and `other` differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((0, 0));
        }
        (0..self.rows)
            .flat_map(|r| (0..self.cols).map(move |c| (r, c)))
            .find(|&(r, c)| self.get(r, c) != other.get(r, c))
    }

    /// Reduced row-echelon form and rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(p, rank);
            let inv = m.get(rank, col).recip();
            if !inv.is_one() {
                for c in col..m.cols {
                    let x = m.get(rank, c) * &inv;
                    m.set(rank, c, x);
                }
            }
            for r in 0..m.rows {
                if r == rank {
                    continue;
                }
                let f = m.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let pc = m.get(rank, c);
                    if !pc.is_zero() {
                        let x = m.get(r, c) - &f * pc;
                        m.set(r, c, x);
                    }
                }
            }
            rank += 1;
        }
        (m, rank)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Null space `{x : self * x = 0}` as a canonical subspace.
    pub fn kernel(&self) -> Subspace {
        let (r, rank) = self.rref();
        let mut pivots = Vec::with_capacity(rank);
        for row in 0..rank {
            let p = (0..r.cols).find(|&c| !r.get(row, c).is_zero()).unwrap();
            pivots.push(p);
        }
        let mut gens = Vec::new();
        for free in (0..r.cols).filter(|c| !pivots.contains(c)) {
            let mut v = Vector::zeros(r.cols);
            v[free] = rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, free);
            }
            gens.push(v);
        }
        Subspace::from_vectors(r.cols, &gens).expect("kernel vectors have matching length")
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        let cols: Vec<Vector> = (0..self.cols).map(|c| self.column(c)).collect();
        Subspace::from_vectors(self.rows, &cols).expect("columns have matching length")
    }

    /// Determinant by fraction-exact Gaussian elimination.
    pub fn det(&self) -> Result<Rational> {
        self.require_square()?;
        let mut m = self.clone();
        let n = m.rows;
        let mut det = rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            for r in col + 1..n {
                let f = m.get(r, col) / &pivot;
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    let pc = m.get(col, c);
                    if !pc.is_zero() {
                        let x = m.get(r, c) - &f * pc;
                        m.set(r, c, x);
                    }
                }
            }
        }
        Ok(det)
    }

    /// `det(x I - self)` by Faddeev–LeVerrier.
    pub fn char_poly(&self) -> Result<Polynomial> {
        self.require_square()?;
        let n = self.rows;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = rational::one();
        let id = Matrix::identity(n);
        let mut m = Matrix::zeros(n, n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            m = self.mul(&m)?.add(&id.scale(&coeffs[n - k + 1]))?;
            let am = self.mul(&m)?;
            coeffs[n - k] = -am.trace()? / rational::int(k as i64);
        }
        Ok(Polynomial::new(coeffs))
    }

    /// Inverse when nonsingular.
    pub fn inverse(&self) -> Result<Option<Matrix>> {
        self.require_square()?;
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, rational::one());
        }
        let (red, _) = aug.rref();
        for i in 0..n {
            if !red.get(i, i).is_one() {
                return Ok(None);
            }
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.get(r, n + c).clone());
            }
        }
        Ok(Some(inv))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(rational::to_short).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
