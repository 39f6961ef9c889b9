use std::collections::BTreeMap;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Vector;

/// The seven-dimensional cross product, component by component.
pub fn cross7_formula(u: &Vector, v: &Vector) -> Result<Vector> {
    u.check_dim(7)?;
    v.check_dim(7)?;
    // t(a, b) = u_a v_b - u_b v_a with 1-based indices
    let t = |a: usize, b: usize| &u[a - 1] * &v[b - 1] - &u[b - 1] * &v[a - 1];
    Ok(Vector::new(vec![
        t(2, 3) + t(4, 5) + t(6, 7),
        -t(1, 3) + t(4, 6) - t(5, 7),
        t(1, 2) - t(4, 7) + t(5, 6),
        -t(1, 5) - t(2, 6) + t(3, 7),
        t(1, 4) + t(2, 7) - t(3, 6),
        -t(1, 7) + t(2, 4) + t(3, 5),
        t(1, 6) - t(2, 5) + t(3, 4),
    ]))
}

/// Basis table of the cross product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossProduct7 {
    table: BTreeMap<(usize, usize), Vector>,
}

impl CrossProduct7 {
    pub fn get(&self, i: usize, j: usize) -> Vector {
        self.table
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| Vector::zeros(7))
    }

    /// Bilinear extension of the table.
    pub fn apply(&self, u: &Vector, v: &Vector) -> Result<Vector> {
        u.check_dim(7)?;
        v.check_dim(7)?;
        let mut out = Vector::zeros(7);
        for (i, ui) in u.support() {
            for (j, vj) in v.support() {
                if let Some(w) = self.table.get(&(i, j)) {
                    out.axpy(&(ui * vj), w);
                }
            }
        }
        Ok(out)
    }

    /// The 21 pairs `i < j` with their nonzero products.
    pub fn upper_pairs(&self) -> Vec<((usize, usize), Vector)> {
        (0..7)
            .flat_map(|i| (i + 1..7).map(move |j| (i, j)))
            .map(|(i, j)| ((i, j), self.get(i, j)))
            .collect()
    }
}

pub fn cross7() -> CrossProduct7 {
    let mut table = BTreeMap::new();
    for i in 0..7 {
        for j in 0..7 {
            let w = cross7_formula(&Vector::basis(7, i), &Vector::basis(7, j)).unwrap();
            if !w.is_zero() {
                table.insert((i, j), w);
            }
        }
    }
    CrossProduct7 { table }
}

/// Seven-dimensional algebra with unit on axis `i` (0-based):
/// `(a.e_i) b + (b.e_i) a - (a.b) e_i + (e_i.(a x b)) e_i`.
pub fn vidinli7_directional(i: usize) -> Result<Algebra> {
    if i >= 7 {
        return Err(Error::IndexOutOfRange { index: i, dim: 7 });
    }
    let ei = Vector::basis(7, i);
    Algebra::from_bilinear(format!("V7[axis e{}]", i + 1), 7, Some(i), |a, b| {
        let mut out = b.scale(&a[i]);
        out.axpy(&b[i], a);
        out.axpy(&-a.dot(b), &ei);
        let c = cross7_formula(a, b).unwrap();
        out.axpy(&c[i], &ei);
        out
    })
}
