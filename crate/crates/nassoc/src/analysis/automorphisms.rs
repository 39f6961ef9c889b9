//! Idempotents, automorphisms from unitary blocks, and the semidirect
//! representation on `V_{2n+1}`.

use num_traits::Zero;

use super::module::{as_matrices, derivations};
use crate::algebra::Morphism;
use crate::constructors::{standard_symplectic, vidinli, SkewForm};
use crate::error::{Error, Result};
use crate::linalg::rational::{frac, int, one};
use crate::linalg::{Matrix, Rational, Vector};

/// Result of the idempotent case analysis for `x = x1 e1 + x0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentAnalysis {
    pub idempotents: Vec<Vector>,
    /// `|x0|^2` forced when `x0 != 0`; negative, so that branch is empty.
    pub forced_norm_sq: Rational,
}

/// `x*x = (x1^2 - |x0|^2) e1 + 2 x1 x0`. Idempotency gives `2 x1 x0 = x0`
/// and `x1^2 - |x0|^2 = x1`. If `x0 != 0` then `x1 = 1/2` and
/// `|x0|^2 = -1/4`, impossible; so `x0 = 0` and `x1` is 0 or 1.
pub fn find_idempotents_vidinli(n: usize) -> Result<IdempotentAnalysis> {
    let v = vidinli(n)?;
    let d = v.dim();
    let x1 = frac(1, 2);
    let forced = &x1 * &x1 - &x1;
    if forced >= Rational::zero() {
        return Err(Error::CrossCheck(
            "case analysis expected a negative norm".into(),
        ));
    }
    let idempotents = vec![Vector::zeros(d), v.basis(0)];
    for x in &idempotents {
        if v.multiply(x, x)? != *x {
            return Err(Error::CrossCheck("claimed idempotent fails x*x = x".into()));
        }
    }
    Ok(IdempotentAnalysis {
        idempotents,
        forced_norm_sq: forced,
    })
}

/// Extends `psi` on `e1^perp` to `V_{2n+1}` fixing `e1`. Requires `psi`
/// orthogonal and symplectic for the standard form.
pub fn unitary_to_automorphism(n: usize, psi: &Matrix) -> Result<Morphism> {
    let w = standard_symplectic(n)?;
    let m = 2 * n;
    if psi.rows() != m || psi.cols() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: psi.rows(),
        });
    }
    let pt = psi.transpose();
    if let Some((row, col)) = pt.mul(psi)?.first_difference(&Matrix::identity(m)) {
        return Err(Error::NotOrthogonal { row, col });
    }
    if let Some((row, col)) = pt.mul(w.matrix())?.mul(psi)?.first_difference(w.matrix()) {
        return Err(Error::NotSymplectic { row, col });
    }
    let d = m + 1;
    let mut phi = Matrix::zeros(d, d);
    phi.set(0, 0, one());
    for r in 0..m {
        for c in 0..m {
            phi.set(r + 1, c + 1, psi.get(r, c).clone());
        }
    }
    let v = vidinli(n)?;
    let morph = Morphism::new(v.clone(), v, phi)?;
    if !morph.check() {
        return Err(Error::CrossCheck(
            "orthogonal symplectic extension failed the morphism check".into(),
        ));
    }
    Ok(morph)
}

/// Element `(A, u + lambda e1)` of `u(n) + h_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemidirectElement {
    a: Matrix,
    u: Vector,
    lambda: Rational,
}

impl SemidirectElement {
    /// Checks `A^T = -A` and `A^T W + W A = 0` for the standard form.
    pub fn new(a: Matrix, u: Vector, lambda: Rational) -> Result<Self> {
        let m = a.rows();
        if !a.is_square() || m % 2 != 0 || m == 0 {
            return Err(Error::InvalidParameter("operator must be 2n x 2n".into()));
        }
        u.check_dim(m)?;
        let at = a.transpose();
        if let Some((row, col)) = at.first_difference(&a.scale(&int(-1))) {
            return Err(Error::NotSkew { row, col });
        }
        let w = standard_symplectic(m / 2)?;
        let lhs = at.mul(w.matrix())?.add(&w.matrix().mul(&a)?)?;
        if let Some((row, col)) = lhs.first_difference(&Matrix::zeros(m, m)) {
            return Err(Error::NotSymplectic { row, col });
        }
        Ok(SemidirectElement { a, u, lambda })
    }

    pub fn n(&self) -> usize {
        self.a.rows() / 2
    }

    pub fn operator(&self) -> &Matrix {
        &self.a
    }

    pub fn vector(&self) -> &Vector {
        &self.u
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    fn form(&self) -> SkewForm {
        standard_symplectic(self.n()).expect("n >= 1")
    }
}

/// `[(A, u + l e1), (B, v + m e1)] = ([A,B], A v - B u + 2 w(u,v) e1)`.
pub fn semidirect_bracket(
    x: &SemidirectElement,
    y: &SemidirectElement,
) -> Result<SemidirectElement> {
    if x.n() != y.n() {
        return Err(Error::DimensionMismatch {
            expected: x.n(),
            found: y.n(),
        });
    }
    let a = x.a.commutator(&y.a)?;
    let u = &x.a.mul_vec(&y.u)? - &y.a.mul_vec(&x.u)?;
    let lambda = x.form().eval(&x.u, &y.u)? * int(2);
    SemidirectElement::new(a, u, lambda)
}

/// Action on `V_{2n+1}`: `e1 -> 0`, `v -> A v + 2 w(u, v) e1` for `v` in `V0`.
pub fn rho(x: &SemidirectElement) -> Result<Matrix> {
    let m = 2 * x.n();
    let w = x.form();
    let mut out = Matrix::zeros(m + 1, m + 1);
    for c in 0..m {
        let v = Vector::basis(m, c);
        out.set(0, c + 1, w.eval(&x.u, &v)? * int(2));
        for r in 0..m {
            out.set(r + 1, c + 1, x.a.get(r, c).clone());
        }
    }
    Ok(out)
}

/// Lower-right `2n x 2n` block of a derivation, after checking it maps
/// `e1 -> 0` and `V0 -> V0`.
fn restrict_to_v0(d_full: &Matrix) -> Result<Matrix> {
    let d = d_full.rows();
    for r in 0..d {
        if !d_full.get(r, 0).is_zero() || !d_full.get(0, r).is_zero() {
            return Err(Error::CrossCheck(
                "derivation does not kill e1 or leaves e1^perp".into(),
            ));
        }
    }
    let m = d - 1;
    let mut a = Matrix::zeros(m, m);
    for r in 0..m {
        for c in 0..m {
            a.set(r, c, d_full.get(r + 1, c + 1).clone());
        }
    }
    Ok(a)
}

/// Spanning set of `u(n) + V0 + Q e1`: a derivation basis (restricted),
/// the basis of `V0`, and `e1`.
pub fn semidirect_spanning_set(n: usize) -> Result<Vec<SemidirectElement>> {
    let v = vidinli(n)?;
    let d = v.dim();
    let m = d - 1;
    let mut out = Vec::new();
    for dm in as_matrices(d, &derivations(&v)?) {
        out.push(SemidirectElement::new(
            restrict_to_v0(&dm)?,
            Vector::zeros(m),
            Rational::zero(),
        )?);
    }
    for i in 0..m {
        out.push(SemidirectElement::new(
            Matrix::zeros(m, m),
            Vector::basis(m, i),
            Rational::zero(),
        )?);
    }
    out.push(SemidirectElement::new(
        Matrix::zeros(m, m),
        Vector::zeros(m),
        one(),
    )?);
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoReport {
    pub n: usize,
    pub spanning_set_size: usize,
    pub derivation_dim: usize,
    /// Pairs `(x, y)` where `rho([x,y]) != [rho x, rho y]`.
    pub homomorphism_failures: Vec<(usize, usize)>,
    /// `rho(A,0)(v) = A v` on basis inputs.
    pub operator_action_holds: bool,
    /// `rho(0,u)(v) = 2 w(u,v) e1` on basis inputs.
    pub heisenberg_action_holds: bool,
    /// `[rho(A,0), rho(0,u)] = rho(0, A u)`.
    pub mixed_bracket_holds: bool,
    pub jacobi_triples_checked: usize,
    pub jacobi_holds: bool,
}

impl RhoReport {
    pub fn passed(&self) -> bool {
        self.homomorphism_failures.is_empty()
            && self.operator_action_holds
            && self.heisenberg_action_holds
            && self.mixed_bracket_holds
            && self.jacobi_holds
    }
}

fn add_elements(x: &SemidirectElement, y: &SemidirectElement) -> Result<SemidirectElement> {
    SemidirectElement::new(x.a.add(&y.a)?, &x.u + &y.u, &x.lambda + &y.lambda)
}

pub fn rho_report(n: usize) -> Result<RhoReport> {
    let span = semidirect_spanning_set(n)?;
    let m = 2 * n;
    let w = standard_symplectic(n)?;
    let derivation_dim = span.len() - m - 1;
    let rhos: Vec<Matrix> = span.iter().map(rho).collect::<Result<_>>()?;

    let mut homomorphism_failures = Vec::new();
    for (i, x) in span.iter().enumerate() {
        for (j, y) in span.iter().enumerate() {
            let lhs = rho(&semidirect_bracket(x, y)?)?;
            let rhs = rhos[i].commutator(&rhos[j])?;
            if lhs != rhs {
                homomorphism_failures.push((i, j));
            }
        }
    }

    let full = |v: &Vector| {
        let mut out = vec![Rational::zero()];
        out.extend(v.entries().iter().cloned());
        Vector::new(out)
    };
    let mut operator_action_holds = true;
    let mut heisenberg_action_holds = true;
    for (x, r) in span.iter().zip(&rhos) {
        for c in 0..m {
            let v = Vector::basis(m, c);
            let image = r.mul_vec(&full(&v))?;
            if x.u.is_zero() && image != full(&x.a.mul_vec(&v)?) {
                operator_action_holds = false;
            }
            if x.a.is_zero() {
                let mut expected = Vector::zeros(m + 1);
                expected[0] = w.eval(&x.u, &v)? * int(2);
                if image != expected {
                    heisenberg_action_holds = false;
                }
            }
        }
        if !r.column(0).is_zero() {
            operator_action_holds = false;
        }
    }

    let mut mixed_bracket_holds = true;
    for x in span.iter().take(derivation_dim) {
        for i in 0..m {
            let u = Vector::basis(m, i);
            let zu = SemidirectElement::new(Matrix::zeros(m, m), u.clone(), Rational::zero())?;
            let lhs = rho(x)?.commutator(&rho(&zu)?)?;
            let au =
                SemidirectElement::new(Matrix::zeros(m, m), x.a.mul_vec(&u)?, Rational::zero())?;
            if lhs != rho(&au)? {
                mixed_bracket_holds = false;
            }
        }
    }

    // 20 triples of sums of spanning elements, chosen by fixed strides
    let s = span.len();
    let mut jacobi_holds = true;
    let combo = |k: usize| -> Result<SemidirectElement> {
        add_elements(&span[k % s], &span[(3 * k + 1) % s])
    };
    for t in 0..20 {
        let x = combo(t)?;
        let y = combo(t + 7)?;
        let z = combo(2 * t + 3)?;
        let a = semidirect_bracket(&x, &semidirect_bracket(&y, &z)?)?;
        let b = semidirect_bracket(&y, &semidirect_bracket(&z, &x)?)?;
        let c = semidirect_bracket(&z, &semidirect_bracket(&x, &y)?)?;
        let sum = add_elements(&add_elements(&a, &b)?, &c)?;
        if !sum.a.is_zero() || !sum.u.is_zero() || !sum.lambda.is_zero() {
            jacobi_holds = false;
        }
    }

    Ok(RhoReport {
        n,
        spanning_set_size: span.len(),
        derivation_dim,
        homomorphism_failures,
        operator_action_holds,
        heisenberg_action_holds,
        mixed_bracket_holds,
        jacobi_triples_checked: 20,
        jacobi_holds,
    })
}

pub fn rho_check(n: usize) -> Result<bool> {
    Ok(rho_report(n)?.passed())
}

/// Outcome of one automorphism probe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismProbe {
    pub name: String,
    pub orthogonal: bool,
    pub symplectic: bool,
    pub is_morphism: bool,
}

/// Probe maps on `V_{2n+1}`: rational rotations inside each coupled pair,
/// swaps of coupled pairs, a pair-internal swap, and a shear that moves
/// `e1^perp`. A map passes the morphism check exactly when it fixes `e1`
/// and is orthogonal and symplectic on `e1^perp`.
pub fn automorphism_probes(n: usize) -> Result<Vec<AutomorphismProbe>> {
    let v = vidinli(n)?;
    let w = standard_symplectic(n)?;
    let m = 2 * n;
    let mut probes: Vec<(String, Matrix)> = Vec::new();
    for k in 0..n {
        let mut psi = Matrix::identity(m);
        psi.set(2 * k, 2 * k, frac(3, 5));
        psi.set(2 * k, 2 * k + 1, frac(-4, 5));
        psi.set(2 * k + 1, 2 * k, frac(4, 5));
        psi.set(2 * k + 1, 2 * k + 1, frac(3, 5));
        probes.push((format!("rotation in pair {}", k + 1), psi));
        let mut swap = Matrix::identity(m);
        swap.set(2 * k, 2 * k, Rational::zero());
        swap.set(2 * k + 1, 2 * k + 1, Rational::zero());
        swap.set(2 * k, 2 * k + 1, one());
        swap.set(2 * k + 1, 2 * k, one());
        probes.push((format!("swap inside pair {}", k + 1), swap));
    }
    if n >= 2 {
        let mut p = Matrix::zeros(m, m);
        for r in 0..m {
            p.set((r + 2) % m, r, one());
        }
        probes.push(("cyclic shift of pairs".into(), p));
    }
    let mut out = Vec::new();
    for (name, psi) in probes {
        let pt = psi.transpose();
        let orthogonal = pt.mul(&psi)? == Matrix::identity(m);
        let symplectic = pt.mul(w.matrix())?.mul(&psi)? == *w.matrix();
        let mut phi = Matrix::zeros(m + 1, m + 1);
        phi.set(0, 0, one());
        for r in 0..m {
            for c in 0..m {
                phi.set(r + 1, c + 1, psi.get(r, c).clone());
            }
        }
        let is_morphism = Morphism::new(v.clone(), v.clone(), phi)?.check();
        out.push(AutomorphismProbe {
            name,
            orthogonal,
            symplectic,
            is_morphism,
        });
    }
    let mut shear = Matrix::identity(m + 1);
    shear.set(0, 1, one());
    out.push(AutomorphismProbe {
        name: "shear e2 -> e2 + e1".into(),
        orthogonal: false,
        symplectic: false,
        is_morphism: Morphism::new(v.clone(), v, shear)?.check(),
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn idempotents() {
        let r = find_idempotents_vidinli(1).unwrap();
        assert_eq!(r.idempotents.len(), 2);
        assert_eq!(r.forced_norm_sq, frac(-1, 4));
        let v = vidinli(1).unwrap();
        let x = Vector::new(vec![frac(1, 2), one(), Rational::zero()]);
        assert_ne!(v.multiply(&x, &x).unwrap(), x);
    }

    #[test]
    fn unitary_extensions() {
        let rot = Matrix::from_rows(vec![
            vec![frac(3, 5), frac(-4, 5)],
            vec![frac(4, 5), frac(3, 5)],
        ])
        .unwrap();
        assert!(unitary_to_automorphism(1, &rot).unwrap().check());
        let swap = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        assert!(matches!(
            unitary_to_automorphism(1, &swap),
            Err(Error::NotSymplectic { .. })
        ));
        let shear = Matrix::from_int_rows(&[&[1, 1], &[0, 1]]);
        assert!(matches!(
            unitary_to_automorphism(1, &shear),
            Err(Error::NotOrthogonal { .. })
        ));
        assert!(unitary_to_automorphism(2, &Matrix::identity(4))
            .unwrap()
            .check());
    }

    #[test]
    fn brackets() {
        let m = 2;
        let u = SemidirectElement::new(
            Matrix::zeros(m, m),
            Vector::from_ints(&[1, 0]),
            Rational::zero(),
        )
        .unwrap();
        let v = SemidirectElement::new(
            Matrix::zeros(m, m),
            Vector::from_ints(&[0, 1]),
            Rational::zero(),
        )
        .unwrap();
        let b = semidirect_bracket(&u, &v).unwrap();
        assert!(b.operator().is_zero() && b.vector().is_zero());
        assert_eq!(b.lambda(), &int(2));
        let j = Matrix::from_int_rows(&[&[0, -1], &[1, 0]]);
        let a = SemidirectElement::new(j.clone(), Vector::zeros(2), Rational::zero()).unwrap();
        let b = semidirect_bracket(&a, &u).unwrap();
        assert_eq!(b.vector(), &j.mul_vec(&Vector::from_ints(&[1, 0])).unwrap());
        assert!(SemidirectElement::new(
            Matrix::from_int_rows(&[&[0, 1], &[1, 0]]),
            Vector::zeros(2),
            Rational::zero()
        )
        .is_err());
    }

    #[test]
    fn rho_small() {
        let r = rho_report(1).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.derivation_dim, 1);
    }

    #[test]
    fn probes_classify() {
        for p in automorphism_probes(2).unwrap() {
            assert_eq!(p.is_morphism, p.orthogonal && p.symplectic, "{}", p.name);
        }
    }
}
