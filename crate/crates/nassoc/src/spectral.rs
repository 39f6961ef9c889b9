//! Spectra of left and right multiplication in `V_{2n+1}`.
//!
//! For `a = a1 e1 + u` the characteristic polynomial of `L_a` is
//! `(x - a1)^(2n-1) ((x - a1)^2 + |u|^2)`. Every closed form here is paired
//! with a brute-force computation and the report records both.

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::constructors::{standard_symplectic, vidinli};
use crate::error::{Error, Result};
use crate::linalg::rational::{int, one, pow};
use crate::linalg::{Matrix, Polynomial, Rational, Subspace, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
}

/// Which case of the eigenspace description applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Branch {
    /// `a` is a multiple of `e1`; `L_a = a1 I`.
    Degenerate,
    /// `a1 = 0`: the principal eigenspace is the kernel of `L_a`.
    ZeroAxis,
    Generic,
}

/// How the explicit principal eigenspace basis was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ExplicitBasis {
    /// Solved for the coordinate `e_{2k}` of pair `k` (0-based), whose
    /// coefficient `a_{2k} + a_{2k+1}` is nonzero.
    Pivot(usize),
    /// Every `a_{2k} + a_{2k+1}` vanishes; only the kernel is available.
    KernelFallback,
    /// Not applicable (degenerate branch).
    None,
}

#[derive(Clone, Debug)]
pub struct SpectralReport {
    pub n: usize,
    pub side: Side,
    pub a: Vector,
    pub a1: Rational,
    pub u_norm_sq: Rational,
    pub branch: Branch,
    /// `(x - a1)^(2n-1)`.
    pub principal_factor: Polynomial,
    /// `(x - a1)^2 + |u|^2`.
    pub quadratic_factor: Polynomial,
    pub closed_form: Polynomial,
    pub oracle: Polynomial,
    pub determinant: Rational,
    /// `a1^(2n-1) |a|^2`.
    pub determinant_formula: Rational,
    /// Kernel of `L_a - a1 I`.
    pub e_principal: Subspace,
    pub explicit_basis: ExplicitBasis,
    pub e_principal_explicit: Option<Subspace>,
    /// Kernel of `q(L_a)`.
    pub e_quadratic: Subspace,
    /// `span{e1, u}`.
    pub axis_plane: Subspace,
    /// `q(L_a)` kills `e1` and `u`.
    pub quadratic_annihilates: bool,
}

impl SpectralReport {
    pub fn closed_form_matches(&self) -> bool {
        self.closed_form == self.oracle
    }

    pub fn determinant_matches(&self) -> bool {
        self.determinant == self.determinant_formula
    }

    /// Eigenspace dimensions `(2n-1, 2)`, trivial intersection, both explicit
    /// descriptions agree. Vacuous on the degenerate branch.
    pub fn decomposition_holds(&self) -> bool {
        if self.branch == Branch::Degenerate {
            return true;
        }
        let d = 2 * self.n + 1;
        let explicit_ok = match (&self.explicit_basis, &self.e_principal_explicit) {
            (ExplicitBasis::Pivot(_), Some(s)) => *s == self.e_principal,
            (ExplicitBasis::KernelFallback, None) => true,
            _ => false,
        };
        explicit_ok
            && self.e_principal.dim() == 2 * self.n - 1
            && self.e_quadratic.dim() == 2
            && self.e_quadratic == self.axis_plane
            && self.quadratic_annihilates
            && self
                .e_principal
                .intersection(&self.e_quadratic)
                .is_ok_and(|s| s.is_zero())
            && self
                .e_principal
                .sum(&self.e_quadratic)
                .is_ok_and(|s| s.dim() == d)
    }

    pub fn passed(&self) -> bool {
        self.closed_form_matches() && self.determinant_matches() && self.decomposition_holds()
    }
}

fn mult_matrix(alg: &Algebra, side: Side, a: &Vector) -> Result<Matrix> {
    match side {
        Side::Left => alg.left_mult_matrix(a),
        Side::Right => alg.right_mult_matrix(a),
    }
}

pub fn spectral_report(n: usize, a: &Vector) -> Result<SpectralReport> {
    spectral_report_side(n, a, Side::Left)
}

/// Right multiplication is handled as left multiplication in the opposite
/// algebra, whose skew form is `-w`.
pub fn spectral_report_side(n: usize, a: &Vector, side: Side) -> Result<SpectralReport> {
    let v = vidinli(n)?;
    let d = v.dim();
    a.check_dim(d)?;
    if a.is_zero() {
        return Err(Error::InvalidParameter("a must be nonzero".into()));
    }
    let alg = match side {
        Side::Left => v.clone(),
        Side::Right => v.opposite(),
    };
    let la = mult_matrix(&alg, Side::Left, a)?;
    debug_assert_eq!(la, mult_matrix(&v, side, a)?);
    let a1 = a[0].clone();
    let mut u = a.clone();
    u[0] = Rational::zero();
    let u_norm_sq = u.norm_sq();
    let branch = if u.is_zero() {
        Branch::Degenerate
    } else if a1.is_zero() {
        Branch::ZeroAxis
    } else {
        Branch::Generic
    };
    let lin = Polynomial::linear_root(&a1);
    let principal_factor = lin.pow(2 * n - 1);
    let quadratic_factor = lin.pow(2).add(&Polynomial::constant(u_norm_sq.clone()));
    let closed_form = principal_factor.mul(&quadratic_factor);
    let oracle = la.char_poly()?;
    let determinant = la.det()?;
    let determinant_formula = pow(&a1, 2 * n - 1) * a.norm_sq();

    let shifted = la.sub(&Matrix::identity(d).scale(&a1))?;
    let e_principal = if branch == Branch::ZeroAxis {
        la.kernel()
    } else {
        shifted.kernel()
    };
    let q = quadratic_factor.eval_matrix(&la)?;
    let e_quadratic = q.kernel();
    let axis_plane = Subspace::from_vectors(d, &[v.basis(0), u.clone()])?;
    let quadratic_annihilates = q.mul_vec(&v.basis(0))?.is_zero() && q.mul_vec(&u)?.is_zero();

    let (explicit_basis, e_principal_explicit) = if branch == Branch::Degenerate {
        (ExplicitBasis::None, None)
    } else {
        explicit_principal(n, a, side)?
    };
    Ok(SpectralReport {
        n,
        side,
        a: a.clone(),
        a1,
        u_norm_sq,
        branch,
        principal_factor,
        quadratic_factor,
        closed_form,
        oracle,
        determinant,
        determinant_formula,
        e_principal,
        explicit_basis,
        e_principal_explicit,
        e_quadratic,
        axis_plane,
        quadratic_annihilates,
    })
}

/// Solves `v1 = 0` and `sum_j c_j v_j = 0` with `c_j = a_j - s w(a, e_j)`
/// (`s = 1` on the left, `-1` on the right). On the left `c_{2k} = a_{2k} +
/// a_{2k+1}` and `c_{2k+1} = a_{2k+1} - a_{2k}`.
fn explicit_principal(
    n: usize,
    a: &Vector,
    side: Side,
) -> Result<(ExplicitBasis, Option<Subspace>)> {
    let d = 2 * n + 1;
    let w = standard_symplectic(n)?;
    let sign = match side {
        Side::Left => one(),
        Side::Right => -one(),
    };
    let coef: Vec<Rational> = (0..d)
        .map(|j| {
            if j == 0 {
                return Ok(Rational::zero());
            }
            Ok(&a[j] - &sign * w.eval_on_full(a, &Vector::basis(d, j))?)
        })
        .collect::<Result<_>>()?;
    let Some(k) = (0..n).find(|&k| !coef[2 * k + 1].is_zero()) else {
        return Ok((ExplicitBasis::KernelFallback, None));
    };
    let p = 2 * k + 1;
    let mut gens = Vec::new();
    for j in 1..d {
        if j == p {
            continue;
        }
        let mut g = Vector::basis(d, j);
        g[p] = -&coef[j] / &coef[p];
        gens.push(g);
    }
    Ok((
        ExplicitBasis::Pivot(k),
        Some(Subspace::from_vectors(d, &gens)?),
    ))
}

/// Nonzero vectors with entries in `{-1, 0, 1, 2}` and at most three nonzero
/// coordinates, in a fixed order.
pub fn probe_family(d: usize) -> Vec<Vector> {
    let vals = [int(-1), int(1), int(2)];
    let mut out = Vec::new();
    let mut push = |support: &[usize]| {
        let m = support.len();
        for code in 0..3usize.pow(m as u32) {
            let mut v = Vector::zeros(d);
            let mut c = code;
            for &s in support {
                v[s] = vals[c % 3].clone();
                c /= 3;
            }
            out.push(v);
        }
    };
    for i in 0..d {
        push(&[i]);
        for j in i + 1..d {
            push(&[i, j]);
            for k in j + 1..d {
                push(&[i, j, k]);
            }
        }
    }
    out
}

/// `a` is a zero divisor iff `a.e1 = 0`; checked against `det L_a = 0`.
pub fn is_zero_divisor(n: usize, a: &Vector) -> Result<bool> {
    let v = vidinli(n)?;
    a.check_dim(v.dim())?;
    if a.is_zero() {
        return Err(Error::InvalidParameter("a must be nonzero".into()));
    }
    let criterion = a[0].is_zero();
    let singular = v.left_mult_matrix(a)?.det()?.is_zero();
    if criterion != singular {
        return Err(Error::CrossCheck(format!(
            "axis criterion says {criterion} but det L_a = 0 is {singular}"
        )));
    }
    Ok(criterion)
}

/// Whether `a*b = 0` for `a, b` in `e1^perp`; checked against `w(a,b) = a.b`.
pub fn zero_product_witness(n: usize, a: &Vector, b: &Vector) -> Result<bool> {
    let v = vidinli(n)?;
    a.check_dim(v.dim())?;
    b.check_dim(v.dim())?;
    if !a[0].is_zero() || !b[0].is_zero() {
        return Err(Error::Precondition("a and b must lie in e1^perp".into()));
    }
    let zero = v.multiply(a, b)?.is_zero();
    let lemma = standard_symplectic(n)?.eval_on_full(a, b)? == a.dot(b);
    if zero != lemma {
        return Err(Error::CrossCheck(
            "zero-product lemma disagrees with the product".into(),
        ));
    }
    Ok(zero)
}
