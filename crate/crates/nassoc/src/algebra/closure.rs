use super::{Algebra, Element};
use crate::analysis::multiplication_algebra;
use crate::error::Result;
use crate::linalg::{Echelon, Subspace, Vector};

/// Grows `span(seed)` until stable. With `ideal` set, new vectors are
/// multiplied on both sides by every basis vector; otherwise only by the
/// span's own basis (subalgebra closure).
fn grow(a: &Algebra, seed: &[Element], ideal: bool) -> Result<Subspace> {
    let d = a.dim();
    let mut span = Echelon::new(d);
    let mut fresh = Vec::new();
    for s in seed {
        if span.insert(s)? {
            fresh.push(s.clone());
        }
    }
    let mut members = fresh.clone();
    while let Some(v) = fresh.pop() {
        let partners: Vec<Vector> = if ideal {
            (0..d).map(|i| a.basis(i)).collect()
        } else {
            members.clone()
        };
        for p in &partners {
            for prod in [a.multiply(&v, p)?, a.multiply(p, &v)?] {
                if span.insert(&prod)? {
                    fresh.push(prod.clone());
                    members.push(prod);
                }
            }
        }
    }
    Ok(span.into_subspace())
}

/// Smallest two-sided ideal containing `s`.
pub fn ideal_closure(a: &Algebra, s: &[Element]) -> Result<Subspace> {
    grow(a, s, true)
}

/// Smallest product-closed subspace containing `s`.
pub fn subalgebra_closure(a: &Algebra, s: &[Element]) -> Result<Subspace> {
    grow(a, s, false)
}

/// Outcome of the simplicity certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Simplicity {
    /// The multiplication algebra is all of `End(A)`; its dimension is the witness.
    Simple {
        multiplication_algebra_dim: usize,
    },
    /// A proper nonzero ideal generated by `generator`.
    NotSimple {
        ideal: Subspace,
        generator: Vector,
    },
    Inconclusive,
}

/// Basis vectors and every {-1,0,1} vector with at most two nonzeros.
pub fn simplicity_probes(d: usize) -> Vec<Vector> {
    let mut out = Vec::new();
    for i in 0..d {
        out.push(Vector::basis(d, i));
    }
    for i in 0..d {
        let mut v = Vector::zeros(d);
        v[i] = crate::linalg::rational::int(-1);
        out.push(v);
    }
    for i in 0..d {
        for j in i + 1..d {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = Vector::zeros(d);
                v[i] = crate::linalg::rational::int(si);
                v[j] = crate::linalg::rational::int(sj);
                out.push(v);
            }
        }
    }
    out
}

pub fn is_simple_certified(a: &Algebra) -> Result<Simplicity> {
    a.require_unit()?;
    let d = a.dim();
    let m = multiplication_algebra(a)?;
    if m.dim() == d * d {
        return Ok(Simplicity::Simple {
            multiplication_algebra_dim: m.dim(),
        });
    }
    for p in simplicity_probes(d) {
        let ideal = ideal_closure(a, std::slice::from_ref(&p))?;
        if !ideal.is_full() {
            return Ok(Simplicity::NotSimple {
                ideal,
                generator: p,
            });
        }
    }
    Ok(Simplicity::Inconclusive)
}
