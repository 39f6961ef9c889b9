use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::rational::Rational;
use super::vector::Vector;
use crate::error::{Error, Result};

/// Incrementally maintained reduced echelon basis.
///
/// Rows have distinct pivots, each pivot entry is 1, and every row is
/// zero at the other rows' pivots, so a single pass reduces any vector.
#[derive(Clone, Debug)]
pub struct Echelon {
    ambient: usize,
    rows: Vec<(usize, Vector)>,
}

impl Echelon {
    pub fn new(ambient: usize) -> Self {
        Echelon {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Remainder of `v` after elimination against the current rows.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut r = v.clone();
        for (p, row) in &self.rows {
            if !r[*p].is_zero() {
                let c = -r[*p].clone();
                r.axpy(&c, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span. Returns whether the dimension grew.
    pub fn insert(&mut self, v: &Vector) -> Result<bool> {
        v.check_dim(self.ambient)?;
        let r = self.reduce(v);
        let Some((p, lead)) = r.support().next().map(|(i, x)| (i, x.clone())) else {
            return Ok(false);
        };
        let r = if lead.is_one() {
            r
        } else {
            r.scale(&lead.recip())
        };
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = -row[p].clone();
                row.axpy(&c, &r);
            }
        }
        self.rows.push((p, r));
        Ok(true)
    }

    pub fn into_subspace(mut self) -> Subspace {
        self.rows.sort_by_key(|(p, _)| *p);
        Subspace {
            ambient: self.ambient,
            basis: self.rows.into_iter().map(|(_, v)| v).collect(),
        }
    }
}

/// Subspace of `Q^ambient` stored by its RREF basis, so equality of
/// values is equality of subspaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| Vector::basis(ambient, i)).collect(),
        }
    }

    pub fn from_vectors(ambient: usize, vecs: &[Vector]) -> Result<Self> {
        let mut e = Echelon::new(ambient);
        for v in vecs {
            e.insert(v)?;
        }
        Ok(e.into_subspace())
    }

    /// Span of the standard basis vectors with the given 0-based indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        let vecs: Vec<Vector> = indices.iter().map(|&i| Vector::basis(ambient, i)).collect();
        Self::from_vectors(ambient, &vecs).expect("basis vectors have matching length")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|v| v.support().next().expect("basis rows are nonzero").0)
            .collect()
    }

    fn echelon(&self) -> Echelon {
        Echelon {
            ambient: self.ambient,
            rows: self
                .pivots()
                .into_iter()
                .zip(self.basis.iter().cloned())
                .collect(),
        }
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            })
        }
    }

    pub fn contains(&self, v: &Vector) -> Result<bool> {
        v.check_dim(self.ambient)?;
        Ok(self.echelon().contains(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        let e = self.echelon();
        Ok(other.basis.iter().all(|v| e.contains(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut e = self.echelon();
        for v in &other.basis {
            e.insert(v)?;
        }
        Ok(e.into_subspace())
    }

    /// Vectors orthogonal (standard dot product) to the subspace.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient);
        }
        Matrix::from_row_vectors(self.ambient, &self.basis)
            .expect("basis rows have ambient length")
            .kernel()
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut eqs: Vec<Vector> = self.annihilator().basis;
        eqs.extend(other.annihilator().basis);
        if eqs.is_empty() {
            return Ok(Subspace::full(self.ambient));
        }
        Ok(Matrix::from_row_vectors(self.ambient, &eqs)?.kernel())
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &Vector) -> Result<Option<Vector>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(Vector::new(
            self.pivots()
                .into_iter()
                .map(|p| v[p].clone())
                .collect::<Vec<Rational>>(),
        )))
    }
}

pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.sum(b)
}

pub fn subspace_contains(a: &Subspace, b: &Subspace) -> Result<bool> {
    a.contains_subspace(b)
}

pub fn subspace_equal(a: &Subspace, b: &Subspace) -> Result<bool> {
    a.check_ambient(b)?;
    Ok(a == b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_examples() {
        let e1 = Subspace::from_vectors(3, &[Vector::from_ints(&[1, 0, 0])]).unwrap();
        let e2 = Subspace::from_vectors(3, &[Vector::from_ints(&[0, 1, 0])]).unwrap();
        assert_eq!(subspace_sum(&e1, &e2).unwrap().dim(), 2);
        assert!(subspace_contains(&Subspace::full(3), &e1).unwrap());
        let a = Subspace::from_vectors(2, &[Vector::from_ints(&[1, 1])]).unwrap();
        let b = Subspace::from_vectors(2, &[Vector::from_ints(&[2, 2])]).unwrap();
        assert!(subspace_equal(&a, &b).unwrap());
        assert!(subspace_sum(&a, &Subspace::zero(3)).is_err());
    }

    #[test]
    fn intersection_and_coordinates() {
        let a = Subspace::coordinate(3, &[0, 1]);
        let b = Subspace::from_vectors(
            3,
            &[Vector::from_ints(&[1, 1, 1]), Vector::from_ints(&[0, 1, 0])],
        )
        .unwrap();
        let i = a.intersection(&b).unwrap();
        assert_eq!(i, Subspace::coordinate(3, &[1]));
        let c = b
            .coordinates(&Vector::from_ints(&[2, 5, 2]))
            .unwrap()
            .unwrap();
        let rebuilt = b.basis()[0].scale(&c[0]);
        let rebuilt = &rebuilt + &b.basis()[1].scale(&c[1]);
        assert_eq!(rebuilt, Vector::from_ints(&[2, 5, 2]));
        assert!(b
            .coordinates(&Vector::from_ints(&[1, 0, 0]))
            .unwrap()
            .is_none());
    }
}
