//! Finite-dimensional algebras given by structure constants.

mod closure;
mod identities;
mod morphism;

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational, Vector};

pub use closure::{ideal_closure, is_simple_certified, subalgebra_closure, Simplicity};
pub use identities::{
    associativity_witness, center, commutativity_witness, commutator_algebra, jacobi_witness,
    jordan_linearized_witness, lower_central_series, nilpotency_class, Nilpotency,
};
pub use morphism::{check_morphism, Morphism, MorphismFailure};

/// Coordinates of an element in an algebra's basis.
pub type Element = Vector;

/// Bilinear product on `Q^dim` stored as a sparse table `(i, j) -> e_i * e_j`.
/// Zero products are never stored, so two algebras have the same product
/// exactly when their tables are equal.
#[derive(Clone, Debug)]
pub struct Algebra {
    label: String,
    dim: usize,
    unit: Option<usize>,
    table: BTreeMap<(usize, usize), Vector>,
}

impl Algebra {
    /// Algebra with the zero product.
    pub fn new(label: impl Into<String>, dim: usize, unit: Option<usize>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameter("dimension must be positive".into()));
        }
        if let Some(u) = unit {
            check_index(u, dim)?;
        }
        Ok(Algebra {
            label: label.into(),
            dim,
            unit,
            table: BTreeMap::new(),
        })
    }

    /// Builds the table from `f(i, j) = e_i * e_j` (0-based).
    pub fn from_fn(
        label: impl Into<String>,
        dim: usize,
        unit: Option<usize>,
        mut f: impl FnMut(usize, usize) -> Vector,
    ) -> Result<Self> {
        let mut a = Self::new(label, dim, unit)?;
        for i in 0..dim {
            for j in 0..dim {
                a.set_product(i, j, f(i, j))?;
            }
        }
        Ok(a)
    }

    /// Builds the table from a bilinear function on coordinate vectors.
    pub fn from_bilinear(
        label: impl Into<String>,
        dim: usize,
        unit: Option<usize>,
        f: impl Fn(&Vector, &Vector) -> Vector,
    ) -> Result<Self> {
        Self::from_fn(label, dim, unit, |i, j| {
            f(&Vector::basis(dim, i), &Vector::basis(dim, j))
        })
    }

    pub fn set_product(&mut self, i: usize, j: usize, v: Vector) -> Result<()> {
        check_index(i, self.dim)?;
        check_index(j, self.dim)?;
        v.check_dim(self.dim)?;
        if v.is_zero() {
            self.table.remove(&(i, j));
        } else {
            self.table.insert((i, j), v);
        }
        Ok(())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    pub fn require_unit(&self) -> Result<usize> {
        self.unit.ok_or_else(|| Error::NoUnit(self.label.clone()))
    }

    pub fn basis(&self, i: usize) -> Element {
        Vector::basis(self.dim, i)
    }

    /// Nonzero table entries in `(i, j)` order.
    pub fn products(&self) -> impl Iterator<Item = (&(usize, usize), &Vector)> {
        self.table.iter()
    }

    /// `e_i * e_j`.
    pub fn product(&self, i: usize, j: usize) -> Vector {
        self.table
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| Vector::zeros(self.dim))
    }

    pub fn product_ref(&self, i: usize, j: usize) -> Option<&Vector> {
        self.table.get(&(i, j))
    }

    /// Number of nonzero scalar constants `c_{ij}^k`.
    pub fn nonzero_constant_count(&self) -> usize {
        self.table.values().map(|v| v.support().count()).sum()
    }

    pub fn same_table(&self, other: &Algebra) -> bool {
        self.dim == other.dim && self.unit == other.unit && self.table == other.table
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        x.check_dim(self.dim)?;
        y.check_dim(self.dim)?;
        let mut out = Vector::zeros(self.dim);
        let ys: Vec<(usize, &Rational)> = y.support().collect();
        for (i, xi) in x.support() {
            for &(j, yj) in &ys {
                if let Some(v) = self.table.get(&(i, j)) {
                    out.axpy(&(xi * yj), v);
                }
            }
        }
        Ok(out)
    }

    /// Column `j` is `a * e_j`.
    pub fn left_mult_matrix(&self, a: &Element) -> Result<Matrix> {
        a.check_dim(self.dim)?;
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.multiply(a, &self.basis(j)))
            .collect::<Result<_>>()?;
        Matrix::from_columns(self.dim, &cols)
    }

    /// Column `j` is `e_j * a`.
    pub fn right_mult_matrix(&self, a: &Element) -> Result<Matrix> {
        a.check_dim(self.dim)?;
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.multiply(&self.basis(j), a))
            .collect::<Result<_>>()?;
        Matrix::from_columns(self.dim, &cols)
    }

    /// `x*y - y*x`.
    pub fn commutator(&self, x: &Element, y: &Element) -> Result<Element> {
        Ok(&self.multiply(x, y)? - &self.multiply(y, x)?)
    }

    /// `x*y + y*x`, not halved.
    pub fn anticommutator(&self, x: &Element, y: &Element) -> Result<Element> {
        Ok(&self.multiply(x, y)? + &self.multiply(y, x)?)
    }

    pub fn associator(&self, x: &Element, y: &Element, z: &Element) -> Result<Element> {
        let left = self.multiply(&self.multiply(x, y)?, z)?;
        let right = self.multiply(x, &self.multiply(y, z)?)?;
        Ok(&left - &right)
    }

    /// First basis index where the declared unit fails, if any.
    pub fn unit_law_failure(&self) -> Option<usize> {
        let u = self.unit?;
        (0..self.dim).find(|&i| {
            let e = self.basis(i);
            self.product(u, i) != e || self.product(i, u) != e
        })
    }

    /// Product `x*y` reversed to `y*x`.
    pub fn opposite(&self) -> Algebra {
        let table = self
            .table
            .iter()
            .map(|(&(i, j), v)| ((j, i), v.clone()))
            .collect();
        Algebra {
            label: format!("{}^op", self.label),
            dim: self.dim,
            unit: self.unit,
            table,
        }
    }

    /// Reorders the basis: new basis vector `k` is old basis vector `order[k]`.
    pub fn permute_basis(&self, order: &[usize]) -> Result<Algebra> {
        if order.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: order.len(),
            });
        }
        let mut new_of_old = vec![usize::MAX; self.dim];
        for (k, &old) in order.iter().enumerate() {
            check_index(old, self.dim)?;
            if new_of_old[old] != usize::MAX {
                return Err(Error::InvalidParameter(format!(
                    "index e{} repeated in permutation",
                    old + 1
                )));
            }
            new_of_old[old] = k;
        }
        let remap = |v: &Vector| {
            let mut w = Vector::zeros(self.dim);
            for (i, c) in v.support() {
                w[new_of_old[i]] = c.clone();
            }
            w
        };
        let table = self
            .table
            .iter()
            .map(|(&(i, j), v)| ((new_of_old[i], new_of_old[j]), remap(v)))
            .collect();
        Ok(Algebra {
            label: self.label.clone(),
            dim: self.dim,
            unit: self.unit.map(|u| new_of_old[u]),
            table,
        })
    }

    /// Same product written in the basis given by the columns of `p`
    /// (new basis vector `k` is column `k` of `p` in old coordinates).
    /// `new_unit` names the new basis index of the unit, if there is one.
    pub fn change_basis(&self, p: &Matrix, new_unit: Option<usize>) -> Result<Algebra> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: p.rows(),
            });
        }
        let inv = p
            .inverse()?
            .ok_or_else(|| Error::InvalidParameter("change of basis is singular".into()))?;
        let cols: Vec<Vector> = (0..self.dim).map(|k| p.column(k)).collect();
        let mut out = Algebra::new(self.label.clone(), self.dim, new_unit)?;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let prod = self.multiply(&cols[i], &cols[j])?;
                out.set_product(i, j, inv.mul_vec(&prod)?)?;
            }
        }
        Ok(out)
    }

    /// Basis pairs whose products differ, with both values.
    pub fn table_diff(&self, other: &Algebra) -> Result<Vec<(usize, usize, Vector, Vector)>> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let mut keys: Vec<(usize, usize)> = self
            .table
            .keys()
            .chain(other.table.keys())
            .copied()
            .collect();
        keys.sort_unstable();
        keys.dedup();
        Ok(keys
            .into_iter()
            .filter_map(|(i, j)| {
                let a = self.product(i, j);
                let b = other.product(i, j);
                (a != b).then_some((i, j, a, b))
            })
            .collect())
    }

    /// Display names `e1..e_d`.
    pub fn basis_names(&self) -> Vec<String> {
        (1..=self.dim).map(|i| format!("e{i}")).collect()
    }
}

pub(crate) fn check_index(i: usize, dim: usize) -> Result<()> {
    if i < dim {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index: i, dim })
    }
}

/// Scalar `c_{ij}^k`.
pub fn structure_constant(a: &Algebra, i: usize, j: usize, k: usize) -> Rational {
    a.product_ref(i, j)
        .map_or_else(Rational::zero, |v| v[k].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::int;

    fn v3() -> Algebra {
        let e = |i| Vector::basis(3, i);
        let mut a = Algebra::new("V3", 3, Some(0)).unwrap();
        for i in 0..3 {
            a.set_product(0, i, e(i)).unwrap();
            a.set_product(i, 0, e(i)).unwrap();
        }
        a.set_product(1, 1, -&e(0)).unwrap();
        a.set_product(2, 2, -&e(0)).unwrap();
        a.set_product(1, 2, e(0)).unwrap();
        a.set_product(2, 1, -&e(0)).unwrap();
        a
    }

    #[test]
    fn multiplication_matrices() {
        let a = v3();
        let l2 = a.left_mult_matrix(&a.basis(1)).unwrap();
        assert_eq!(
            l2,
            Matrix::from_int_rows(&[&[0, -1, 1], &[1, 0, 0], &[0, 0, 0]])
        );
        let r3 = a.right_mult_matrix(&a.basis(2)).unwrap();
        assert_eq!(
            r3,
            Matrix::from_int_rows(&[&[0, 1, -1], &[0, 0, 0], &[1, 0, 0]])
        );
        assert_eq!(
            a.left_mult_matrix(&a.basis(0)).unwrap(),
            Matrix::identity(3)
        );
    }

    #[test]
    fn commutators() {
        let a = v3();
        let x = Vector::from_ints(&[1, 2, -1]);
        assert!(a.commutator(&x, &x).unwrap().is_zero());
        assert_eq!(
            a.anticommutator(&a.basis(1), &a.basis(1)).unwrap(),
            Vector::from_ints(&[-2, 0, 0])
        );
        assert_eq!(a.unit_law_failure(), None);
        assert!(a.multiply(&Vector::zeros(2), &x).is_err());
    }

    #[test]
    fn permutation_and_change_of_basis_agree() {
        let a = v3();
        let p = a.permute_basis(&[0, 2, 1]).unwrap();
        let m = Matrix::from_columns(3, &[a.basis(0), a.basis(2), a.basis(1)]).unwrap();
        let c = a.change_basis(&m, Some(0)).unwrap();
        assert!(p.same_table(&c));
        assert_eq!(p.product(1, 2), Vector::from_ints(&[-1, 0, 0]));
        assert_eq!(structure_constant(&a, 1, 2, 0), int(1));
    }

    #[test]
    fn opposite_reverses() {
        let a = v3();
        let op = a.opposite();
        assert_eq!(op.product(1, 2), a.product(2, 1));
        assert_eq!(a.table_diff(&op).unwrap().len(), 2);
    }
}
