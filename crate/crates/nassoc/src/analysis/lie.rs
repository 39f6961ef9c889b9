//! The commutator of `V_{2n+1}` as a Heisenberg Lie algebra.

use super::subalgebras::omega;
use crate::algebra::{
    center, commutator_algebra, jacobi_witness, nilpotency_class, Morphism, Nilpotency,
};
use crate::constructors::{heisenberg, vidinli};
use crate::error::Result;
use crate::linalg::rational::int;
use crate::linalg::Subspace;

#[derive(Clone, Debug)]
pub struct HeisenbergReport {
    pub n: usize,
    /// `[e1, x] = 0` for all basis `x`.
    pub axis_central: bool,
    /// `[e_i, e_j] = 2 w(e_i, e_j) e1` on `e1^perp`.
    pub bracket_relations: bool,
    pub jacobi_witness: Option<(usize, usize, usize)>,
    pub class: Nilpotency,
    pub center: Subspace,
    /// `z -> 2 e1`, `p_i -> e_{2i}`, `q_i -> e_{2i+1}` from `heisenberg(n)`.
    pub isomorphism: Morphism,
    pub isomorphism_holds: bool,
}

impl HeisenbergReport {
    pub fn passed(&self) -> bool {
        self.axis_central
            && self.bracket_relations
            && self.jacobi_witness.is_none()
            && self.class == Nilpotency::Class(2)
            && self.center == Subspace::coordinate(2 * self.n + 1, &[0])
            && self.isomorphism_holds
    }
}

pub fn heisenberg_check(n: usize) -> Result<HeisenbergReport> {
    let v = vidinli(n)?;
    let d = v.dim();
    let lie = commutator_algebra(&v);
    let axis_central = (0..d).all(|i| lie.product(0, i).is_zero() && lie.product(i, 0).is_zero());
    let mut bracket_relations = true;
    for i in 1..d {
        for j in 1..d {
            let w = omega(n, &v.basis(i), &v.basis(j))?;
            bracket_relations &= lie.product(i, j) == v.basis(0).scale(&(int(2) * w));
        }
    }
    let mut images = vec![v.basis(0).scale(&int(2))];
    images.extend((1..d).map(|i| v.basis(i)));
    let isomorphism = Morphism::from_images(heisenberg(n)?, lie.clone(), &images)?;
    let isomorphism_holds = isomorphism.check() && isomorphism.is_injective();
    Ok(HeisenbergReport {
        n,
        axis_central,
        bracket_relations,
        jacobi_witness: jacobi_witness(&lie),
        class: nilpotency_class(&lie)?,
        center: center(&lie)?,
        isomorphism,
        isomorphism_holds,
    })
}
