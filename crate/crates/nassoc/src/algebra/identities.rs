//! Polynomial identities checked on basis tuples.

use num_traits::Zero;

use super::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Matrix, Subspace, Vector};

pub fn commutativity_witness(a: &Algebra) -> Option<(usize, usize)> {
    let d = a.dim();
    (0..d)
        .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
        .find(|&(i, j)| a.product(i, j) != a.product(j, i))
}

pub fn associativity_witness(a: &Algebra) -> Option<(usize, usize, usize)> {
    let d = a.dim();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let assoc = a
                    .associator(&a.basis(i), &a.basis(j), &a.basis(k))
                    .expect("basis vectors match");
                if !assoc.is_zero() {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// Full linearization in `x` of `((x x) y) x - (x x)(y x)`:
/// the sum over permutations of `(x1, x2, x3)`.
pub fn jordan_linearized(a: &Algebra, xs: [&Element; 3], y: &Element) -> Result<Element> {
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut acc = Vector::zeros(a.dim());
    for p in PERMS {
        let sq = a.multiply(xs[p[0]], xs[p[1]])?;
        let left = a.multiply(&a.multiply(&sq, y)?, xs[p[2]])?;
        let right = a.multiply(&sq, &a.multiply(y, xs[p[2]])?)?;
        acc = &acc + &(&left - &right);
    }
    Ok(acc)
}

/// First basis 4-tuple `(x1, x2, x3, y)` violating the linearized Jordan identity.
pub fn jordan_linearized_witness(a: &Algebra) -> Option<([usize; 4], Vector)> {
    let d = a.dim();
    for i in 0..d {
        for j in i..d {
            for k in j..d {
                for y in 0..d {
                    let v =
                        jordan_linearized(a, [&a.basis(i), &a.basis(j), &a.basis(k)], &a.basis(y))
                            .expect("basis vectors match");
                    if !v.is_zero() {
                        return Some(([i, j, k, y], v));
                    }
                }
            }
        }
    }
    None
}

/// First basis triple violating `x(yz) + y(zx) + z(xy) = 0`.
pub fn jacobi_witness(a: &Algebra) -> Option<(usize, usize, usize)> {
    let d = a.dim();
    let m = |x: &Vector, y: &Vector| a.multiply(x, y).expect("basis vectors match");
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let (x, y, z) = (a.basis(i), a.basis(j), a.basis(k));
                let s = &(&m(&x, &m(&y, &z)) + &m(&y, &m(&z, &x))) + &m(&z, &m(&x, &y));
                if !s.is_zero() {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// The algebra with product `[x, y] = x*y - y*x`.
pub fn commutator_algebra(a: &Algebra) -> Algebra {
    Algebra::from_fn(format!("[{}]", a.label()), a.dim(), None, |i, j| {
        a.commutator(&a.basis(i), &a.basis(j))
            .expect("basis vectors match")
    })
    .expect("same dimension as the source algebra")
}

fn require_anticommutative(a: &Algebra) -> Result<()> {
    let d = a.dim();
    for i in 0..d {
        for j in i..d {
            let ok = if i == j {
                a.product(i, i).is_zero()
            } else {
                a.product(i, j) == -&a.product(j, i)
            };
            if !ok {
                return Err(Error::NotAnticommutative { i, j });
            }
        }
    }
    Ok(())
}

/// `C_1 = A`, `C_{k+1} = A * C_k`, until the terms stop shrinking.
pub fn lower_central_series(a: &Algebra) -> Result<Vec<Subspace>> {
    require_anticommutative(a)?;
    let d = a.dim();
    let mut series = vec![Subspace::full(d)];
    loop {
        let last = series.last().unwrap();
        let mut next = Echelon::new(d);
        for c in last.basis() {
            for i in 0..d {
                next.insert(&a.multiply(&a.basis(i), c)?)?;
            }
        }
        let next = next.into_subspace();
        let stop = next.is_zero() || next == *last;
        series.push(next);
        if stop {
            return Ok(series);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nilpotency {
    Class(usize),
    NotNilpotent,
}

/// Smallest `s` with `C_{s+1} = 0`.
pub fn nilpotency_class(a: &Algebra) -> Result<Nilpotency> {
    let series = lower_central_series(a)?;
    if series.last().unwrap().is_zero() {
        Ok(Nilpotency::Class(series.len() - 1))
    } else {
        Ok(Nilpotency::NotNilpotent)
    }
}

/// `{x : x*e_i = e_i*x for all i}`, as the kernel of the stacked maps
/// `x -> x*e_i - e_i*x`.
pub fn center(a: &Algebra) -> Result<Subspace> {
    let d = a.dim();
    let mut rows: Vec<Vector> = Vec::new();
    for i in 0..d {
        let ei = a.basis(i);
        let m = a.right_mult_matrix(&ei)?.sub(&a.left_mult_matrix(&ei)?)?;
        for r in 0..d {
            let row = m.row_vector(r);
            if row.entries().iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Ok(Subspace::full(d));
    }
    Ok(Matrix::from_row_vectors(d, &rows)?.kernel())
}
