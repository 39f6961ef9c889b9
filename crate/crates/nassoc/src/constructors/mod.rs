//! Builders for the concrete algebras of the Vidinli family and its relatives.
//!
//! Basis convention throughout: index 0 is the unit axis `e1`, and the
//! pairs `(e_{2i}, e_{2i+1})` (indices `2i-1, 2i`) are symplectically coupled.

mod cross7;
mod skew;

use num_traits::Zero;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::rational::{self, int, Rational};
use crate::linalg::Vector;

pub use cross7::{cross7, cross7_formula, vidinli7_directional, CrossProduct7};
pub use skew::{omega_tilde, standard_symplectic, SkewForm};

fn e(d: usize, i: usize) -> Vector {
    Vector::basis(d, i)
}

/// `(a.e1) b + (b.e1) a - (a.b) e1 + omega(a, b) e1`, evaluated directly.
pub fn vidinli_product_formula(omega: &SkewForm, a: &Vector, b: &Vector) -> Result<Vector> {
    let d = 2 * omega.n() + 1;
    a.check_dim(d)?;
    b.check_dim(d)?;
    let mut out = b.scale(&a[0]);
    out.axpy(&b[0], a);
    let mut c0 = -a.dot(b);
    c0 += omega.eval_on_full(a, b)?;
    out[0] += c0;
    Ok(out)
}

/// Vidinli-type algebra of dimension `2n+1` with skew form `omega` on `e1^perp`.
pub fn vidinli_type(n: usize, omega: &SkewForm) -> Result<Algebra> {
    if n < 1 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if omega.n() != n {
        return Err(Error::DimensionMismatch {
            expected: 2 * n,
            found: 2 * omega.n(),
        });
    }
    let d = 2 * n + 1;
    let label = if omega.is_standard() {
        format!("V{d}")
    } else {
        format!("V{d}[omega]")
    };
    Algebra::from_fn(label, d, Some(0), |i, j| {
        if i == 0 {
            e(d, j)
        } else if j == 0 {
            e(d, i)
        } else if i == j {
            -&e(d, 0)
        } else {
            e(d, 0).scale(omega.entry(i - 1, j - 1))
        }
    })
}

/// The Vidinli algebra `V_{2n+1}` with the standard symplectic form.
pub fn vidinli(n: usize) -> Result<Algebra> {
    vidinli_type(n, &standard_symplectic(n)?)
}

/// Symmetric part alone: `e1` unit, `e_i e_i = -e1`, other products zero.
pub fn vidinli_jordan(m: usize) -> Result<Algebra> {
    if m < 1 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    Algebra::from_fn(format!("VJ{m}"), m, Some(0), |i, j| {
        if i == 0 {
            e(m, j)
        } else if j == 0 {
            e(m, i)
        } else if i == j {
            -&e(m, 0)
        } else {
            Vector::zeros(m)
        }
    })
}

/// Heisenberg Lie algebra on `(z, p1, q1, ..., pn, qn)`, bracket stored as
/// the product, `[p_i, q_i] = z`. No unit.
pub fn heisenberg(n: usize) -> Result<Algebra> {
    if n < 1 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let d = 2 * n + 1;
    let mut a = Algebra::new(format!("h{n}"), d, None)?;
    for i in 0..n {
        a.set_product(2 * i + 1, 2 * i + 2, e(d, 0))?;
        a.set_product(2 * i + 2, 2 * i + 1, -&e(d, 0))?;
    }
    Ok(a)
}

/// Spin factor `(a, x)(b, y) = (ab + <x, y>, ay + bx)` on `Q + Q^n`.
pub fn jspin(n: usize) -> Result<Algebra> {
    if n < 1 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let d = n + 1;
    Algebra::from_fn(format!("JSpin{n}"), d, Some(0), |i, j| {
        if i == 0 {
            e(d, j)
        } else if j == 0 {
            e(d, i)
        } else if i == j {
            e(d, 0)
        } else {
            Vector::zeros(d)
        }
    })
}

/// `Q(i)` on the basis `(1, i)`.
pub fn complex_algebra() -> Algebra {
    let mut a = Algebra::new("C", 2, Some(0)).unwrap();
    a.set_product(0, 0, e(2, 0)).unwrap();
    a.set_product(0, 1, e(2, 1)).unwrap();
    a.set_product(1, 0, e(2, 1)).unwrap();
    a.set_product(1, 1, -&e(2, 0)).unwrap();
    a
}

/// Quaternions on the basis `(1, i, j, k)`.
pub fn quaternions() -> Algebra {
    // sign and index of e_a e_b for imaginary units (1-based i, j, k = 1, 2, 3)
    let imag = |a: usize, b: usize| -> (i64, usize) {
        if a == b {
            return (-1, 0);
        }
        let c = 6 - a - b;
        let cyclic = matches!((a, b), (1, 2) | (2, 3) | (3, 1));
        (if cyclic { 1 } else { -1 }, c)
    };
    Algebra::from_fn("H", 4, Some(0), |a, b| {
        if a == 0 {
            e(4, b)
        } else if b == 0 {
            e(4, a)
        } else {
            let (s, c) = imag(a, b);
            e(4, c).scale(&int(s))
        }
    })
    .unwrap()
}

/// `Q x Q` on the basis `(1, f)` with `1 = (1,1)` and the idempotent `f = (1,0)`.
pub fn rational_pair() -> Algebra {
    let mut a = Algebra::new("QxQ", 2, Some(0)).unwrap();
    a.set_product(0, 0, e(2, 0)).unwrap();
    a.set_product(0, 1, e(2, 1)).unwrap();
    a.set_product(1, 0, e(2, 1)).unwrap();
    a.set_product(1, 1, e(2, 1)).unwrap();
    a
}

/// Dual numbers `Q[eps]/(eps^2)` on `(1, eps)`.
pub fn dual_numbers() -> Algebra {
    let mut a = Algebra::new("Q[eps]", 2, Some(0)).unwrap();
    a.set_product(0, 0, e(2, 0)).unwrap();
    a.set_product(0, 1, e(2, 1)).unwrap();
    a.set_product(1, 0, e(2, 1)).unwrap();
    a
}

/// One-dimensional algebra `Q`.
pub fn rationals() -> Algebra {
    let mut a = Algebra::new("Q", 1, Some(0)).unwrap();
    a.set_product(0, 0, e(1, 0)).unwrap();
    a
}

fn cross3_first(a: &Vector, b: &Vector) -> Rational {
    &a[1] * &b[2] - &a[2] * &b[1]
}

fn cross3(a: &Vector, b: &Vector) -> Vector {
    Vector::new(vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ])
}

/// Coordinate product with the twist `(T, U, V)` on the skew term.
pub fn twisted_v3_product(
    t: &Rational,
    u: &Rational,
    v: &Rational,
    a: &Vector,
    b: &Vector,
) -> Vector {
    let w = cross3_first(a, b);
    Vector::new(vec![
        &a[0] * &b[0] - &a[1] * &b[1] - &a[2] * &b[2] + t * &w,
        &a[0] * &b[1] + &a[1] * &b[0] + u * &w,
        &a[0] * &b[2] + &a[2] * &b[0] + v * &w,
    ])
}

/// Three-dimensional twisted multiplication. `(1, 0, 0)` is `V3` itself
/// and carries its label.
pub fn twisted_v3(t: &Rational, u: &Rational, v: &Rational) -> Algebra {
    let label = if t == &rational::one() && u.is_zero() && v.is_zero() {
        "V3".to_string()
    } else {
        format!(
            "V3[T={},U={},V={}]",
            rational::to_short(t),
            rational::to_short(u),
            rational::to_short(v)
        )
    };
    Algebra::from_bilinear(label, 3, Some(0), |a, b| twisted_v3_product(t, u, v, a, b)).unwrap()
}

/// `(a.e1) b + (b.e1) a - (a.b) e1 + (e1.(a x b)) v` with the 3D cross product.
pub fn coordfree_product(v: &Vector, a: &Vector, b: &Vector) -> Result<Vector> {
    v.check_dim(3)?;
    a.check_dim(3)?;
    b.check_dim(3)?;
    let mut out = b.scale(&a[0]);
    out.axpy(&b[0], a);
    out[0] -= a.dot(b);
    out.axpy(&cross3(a, b)[0], v);
    Ok(out)
}

/// `pi(nu(a) nu(b))` through the quaternions, with
/// `nu(a1,a2,a3) = (a1,0,a2,a3)` and `pi(x1..x4) = (x1+x2, x3, x4)`.
pub fn quaternion_pushforward(a: &Vector, b: &Vector) -> Result<Vector> {
    a.check_dim(3)?;
    b.check_dim(3)?;
    let nu = |x: &Vector| {
        Vector::new(vec![
            x[0].clone(),
            Rational::zero(),
            x[1].clone(),
            x[2].clone(),
        ])
    };
    let q = quaternions().multiply(&nu(a), &nu(b))?;
    Ok(Vector::new(vec![&q[0] + &q[1], q[2].clone(), q[3].clone()]))
}

fn require_unit_axis(a: &Algebra) -> Result<()> {
    if a.unit() == Some(0) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "`{}` must have its unit at e1",
            a.label()
        )))
    }
}

/// `2 (a.e1) e1 - a`.
pub fn conjugate(alg: &Algebra, a: &Element) -> Result<Element> {
    require_unit_axis(alg)?;
    a.check_dim(alg.dim())?;
    let mut out = -a;
    out[0] += &a[0] * int(2);
    Ok(out)
}

/// `conj(a) / |a|^2`.
pub fn inverse(alg: &Algebra, a: &Element) -> Result<Element> {
    let c = conjugate(alg, a)?;
    if a.is_zero() {
        return Err(Error::ZeroInverse);
    }
    Ok(c.scale(&a.norm_sq().recip()))
}

/// `(a.e1) b + (b.e1) a - (a.b) e1`.
pub fn jordan_part(alg: &Algebra, a: &Element, b: &Element) -> Result<Element> {
    require_unit_axis(alg)?;
    a.check_dim(alg.dim())?;
    b.check_dim(alg.dim())?;
    let mut out = b.scale(&a[0]);
    out.axpy(&b[0], a);
    out[0] -= a.dot(b);
    Ok(out)
}

/// Half the commutator; equals `omega(a, b) e1` on the Vidinli family.
pub fn lie_part(alg: &Algebra, a: &Element, b: &Element) -> Result<Element> {
    require_unit_axis(alg)?;
    Ok(alg.commutator(a, b)?.scale(&rational::half()))
}
