//! Identities linking the seven-dimensional cross product to `V7`.

use super::subalgebras::{classify_3plane, omega, ThreePlane};
use crate::algebra::subalgebra_closure;
use crate::constructors::{cross7, vidinli, vidinli7_directional};
use crate::error::Result;
use crate::linalg::rational::{frac, half};
use crate::linalg::{Rational, Subspace, Vector};

#[derive(Clone, Debug)]
pub struct AxisPlane {
    pub u: Vector,
    pub cross: Vector,
    pub closed: bool,
    pub is_v3: bool,
    /// `u * (e1 x u)` in `V7`.
    pub u_times_cross: Vector,
}

#[derive(Clone, Debug)]
pub struct Cross7Report {
    /// Pairs `(i, j)`, `1 <= i < j`, where `e1.(e_i x e_j) != w(e_i, e_j)`.
    pub omega_failures: Vec<(usize, usize)>,
    /// Pairs where `e_i x e_j != 1/2 sum_k [e_i, e_j]_k`.
    pub decomposition_failures: Vec<(usize, usize)>,
    pub axis_planes: Vec<AxisPlane>,
}

impl Cross7Report {
    pub fn passed(&self) -> bool {
        self.omega_failures.is_empty()
            && self.decomposition_failures.is_empty()
            && self.axis_planes.iter().all(|p| p.closed && p.is_v3)
    }
}

/// `span{e1, u, e1 x u}` for `u` in `e1^perp`.
pub fn axis_plane(u: &Vector) -> Result<AxisPlane> {
    let c = cross7();
    let v7 = vidinli(3)?;
    let e1 = v7.basis(0);
    let cross = c.apply(&e1, u)?;
    let gens = [e1.clone(), u.clone(), cross.clone()];
    let span = Subspace::from_vectors(7, &gens)?;
    let closed = subalgebra_closure(&v7, &gens)? == span;
    let is_v3 = matches!(
        classify_3plane(3, u, &cross)?,
        ThreePlane::IsV3 { flipped: false, .. }
    );
    Ok(AxisPlane {
        u: u.clone(),
        u_times_cross: v7.multiply(u, &cross)?,
        cross,
        closed,
        is_v3,
    })
}

pub fn cross7_checks() -> Result<Cross7Report> {
    let c = cross7();
    let directional = (0..7)
        .map(vidinli7_directional)
        .collect::<Result<Vec<_>>>()?;
    let e = |i: usize| Vector::basis(7, i);
    let mut omega_failures = Vec::new();
    let mut decomposition_failures = Vec::new();
    for i in 0..7 {
        for j in i + 1..7 {
            let x = c.get(i, j);
            if i > 0 && x[0] != omega(3, &e(i), &e(j))? {
                omega_failures.push((i + 1, j + 1));
            }
            let mut sum = Vector::zeros(7);
            for alg in &directional {
                sum = &sum + &alg.commutator(&e(i), &e(j))?;
            }
            if sum.scale(&half()) != x {
                decomposition_failures.push((i + 1, j + 1));
            }
        }
    }
    let mut probes: Vec<Vector> = (1..7).map(e).collect();
    let mut tilted = Vector::zeros(7);
    tilted[1] = frac(3, 5);
    tilted[3] = frac(4, 5);
    probes.push(tilted);
    let axis_planes = probes.iter().map(axis_plane).collect::<Result<Vec<_>>>()?;
    Ok(Cross7Report {
        omega_failures,
        decomposition_failures,
        axis_planes,
    })
}

/// Coefficient `c` with `u * (e1 x u) = c e1`, if the product is on the axis.
pub fn axis_coefficient(p: &AxisPlane) -> Option<Rational> {
    if p.u_times_cross.support().all(|(k, _)| k == 0) {
        Some(p.u_times_cross[0].clone())
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::one;

    #[test]
    fn report_passes() {
        let r = cross7_checks().unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.axis_planes.len(), 7);
    }

    #[test]
    fn w_e4_is_coordinate_plane() {
        let p = axis_plane(&Vector::basis(7, 3)).unwrap();
        assert_eq!(p.cross, Vector::basis(7, 4));
        // with this cross product e1 x u = Ju, so the axis coefficient is +1
        assert_eq!(axis_coefficient(&p), Some(one()));
    }

    #[test]
    fn e2_cross_e3() {
        assert_eq!(cross7().get(1, 2), Vector::basis(7, 0));
    }
}
