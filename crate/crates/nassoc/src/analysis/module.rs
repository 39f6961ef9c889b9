//! Multiplication algebra, centroid, derivations and the Azumaya predicate.

use num_traits::Zero;

use crate::algebra::{is_simple_certified, structure_constant, Algebra, Simplicity};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Matrix, Rational, Subspace, Vector};

/// Span of `d x d` matrices, stored through the row-major flattening.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixAlgebraSpan {
    d: usize,
    span: Subspace,
}

impl MatrixAlgebraSpan {
    pub fn ambient_dim(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.span
    }

    pub fn basis_matrices(&self) -> Vec<Matrix> {
        self.span
            .basis()
            .iter()
            .map(|v| Matrix::from_flat(self.d, self.d, v).expect("flattened length"))
            .collect()
    }

    pub fn contains(&self, m: &Matrix) -> Result<bool> {
        if m.rows() != self.d || m.cols() != self.d {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                found: m.rows(),
            });
        }
        self.span.contains(&m.flatten())
    }

    pub fn contains_identity(&self) -> bool {
        self.contains(&Matrix::identity(self.d))
            .expect("square of matching size")
    }

    /// First pair of basis matrices whose product leaves the span.
    pub fn closure_failure(&self) -> Option<(usize, usize)> {
        let basis = self.basis_matrices();
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let p = a.mul(b).expect("square matrices");
                if !self.span.contains(&p.flatten()).expect("flattened length") {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// Matrices `L_{e_i}` and `R_{e_i}` for all basis vectors.
pub fn multiplication_operators(a: &Algebra) -> Result<Vec<Matrix>> {
    let mut out = Vec::with_capacity(2 * a.dim());
    for i in 0..a.dim() {
        out.push(a.left_mult_matrix(&a.basis(i))?);
        out.push(a.right_mult_matrix(&a.basis(i))?);
    }
    Ok(out)
}

/// Unital associative algebra generated by all `L_{e_i}`, `R_{e_i}`.
pub fn multiplication_algebra(a: &Algebra) -> Result<MatrixAlgebraSpan> {
    let d = a.dim();
    let gens = multiplication_operators(a)?;
    let mut span = Echelon::new(d * d);
    let mut fresh = Vec::new();
    for m in std::iter::once(Matrix::identity(d)).chain(gens.iter().cloned()) {
        if span.insert(&m.flatten())? {
            fresh.push(m);
        }
    }
    // every word in the generators is reached by right multiplication
    while let Some(m) = fresh.pop() {
        if span.dim() == d * d {
            break;
        }
        for g in &gens {
            let p = m.mul(g)?;
            if span.insert(&p.flatten())? {
                fresh.push(p);
            }
        }
    }
    Ok(MatrixAlgebraSpan {
        d,
        span: span.into_subspace(),
    })
}

fn solve_homogeneous(unknowns: usize, rows: Vec<Vector>) -> Result<Subspace> {
    Ok(Subspace::from_vectors(unknowns, &rows)?.annihilator())
}

/// Endomorphisms `t` with `t(xy) = t(x)y = x t(y)`, as flattened matrices.
pub fn centroid(a: &Algebra) -> Result<Subspace> {
    let d = a.dim();
    let idx = |p: usize, q: usize| p * d + q;
    let mut rows = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let mut left = Vector::zeros(d * d);
                let mut right = Vector::zeros(d * d);
                for q in 0..d {
                    let c = structure_constant(a, i, j, q);
                    if !c.is_zero() {
                        left[idx(k, q)] += &c;
                        right[idx(k, q)] += &c;
                    }
                }
                for p in 0..d {
                    let c = structure_constant(a, p, j, k);
                    if !c.is_zero() {
                        left[idx(p, i)] -= &c;
                    }
                    let c = structure_constant(a, i, p, k);
                    if !c.is_zero() {
                        right[idx(p, j)] -= &c;
                    }
                }
                rows.push(left);
                rows.push(right);
            }
        }
    }
    solve_homogeneous(d * d, rows)
}

/// Endomorphisms `D` with `D(xy) = D(x)y + xD(y)`, as flattened matrices.
pub fn derivations(a: &Algebra) -> Result<Subspace> {
    let d = a.dim();
    let idx = |p: usize, q: usize| p * d + q;
    let mut rows = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let mut row = Vector::zeros(d * d);
                for q in 0..d {
                    let c = structure_constant(a, i, j, q);
                    if !c.is_zero() {
                        row[idx(k, q)] += &c;
                    }
                }
                for p in 0..d {
                    let c = structure_constant(a, p, j, k);
                    if !c.is_zero() {
                        row[idx(p, i)] -= &c;
                    }
                    let c = structure_constant(a, i, p, k);
                    if !c.is_zero() {
                        row[idx(p, j)] -= &c;
                    }
                }
                rows.push(row);
            }
        }
    }
    solve_homogeneous(d * d, rows)
}

/// Flattened subspace back to `d x d` matrices.
pub fn as_matrices(d: usize, s: &Subspace) -> Vec<Matrix> {
    s.basis()
        .iter()
        .map(|v| Matrix::from_flat(d, d, v).expect("flattened length"))
        .collect()
}

/// Central (centroid = scalars) and `M(A)` is all of `End(A)`.
///
/// Simple algebras with a larger centroid (a field extension of `Q`, such
/// as `Q(i)`) are rejected: whether they are Azumaya depends on the base
/// field chosen, which this predicate does not model.
pub fn is_azumaya(a: &Algebra) -> Result<bool> {
    a.require_unit()?;
    let d = a.dim();
    let c = centroid(a)?;
    if c.dim() > 1 && !matches!(is_simple_certified(a)?, Simplicity::NotSimple { .. }) {
        return Err(Error::OutOfScope(format!(
            "`{}` has a centroid of dimension {} and no proper ideal was found; \
             the answer depends on the base field",
            a.label(),
            c.dim()
        )));
    }
    Ok(c.dim() == 1 && multiplication_algebra(a)?.dim() == d * d)
}

/// Scalar multiple of the identity as a flattened vector.
pub fn scalar_matrix(d: usize, c: &Rational) -> Vector {
    Matrix::identity(d).scale(c).flatten()
}
