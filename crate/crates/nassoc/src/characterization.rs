//! Recognising Vidinli algebras from their structure constants.
//!
//! The product is split as `S + K` with `S` symmetric and `K` skew. An
//! algebra of odd dimension with unit `e1` is Vidinli-type exactly when `S`
//! is the spin-factor part `(a.e1) b + (b.e1) a - (a.b) e1`, `K` kills `e1`,
//! and `K = w e1` for a nondegenerate skew form `w`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{Algebra, Morphism};
use crate::constructors::{vidinli, vidinli_type, SkewForm};
use crate::error::{Error, Result};
use crate::linalg::rational::{half, one};
use crate::linalg::{Matrix, Rational, Subspace, Vector};

/// Symmetric and skew parts of the structure constants, both halved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitProduct {
    dim: usize,
    symmetric: BTreeMap<(usize, usize), Vector>,
    skew: BTreeMap<(usize, usize), Vector>,
}

impl SplitProduct {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn s(&self, i: usize, j: usize) -> Vector {
        self.symmetric
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| Vector::zeros(self.dim))
    }

    pub fn k(&self, i: usize, j: usize) -> Vector {
        self.skew
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| Vector::zeros(self.dim))
    }

    /// `S + K` as a table, with the given unit and label.
    pub fn reassemble(&self, label: &str, unit: Option<usize>) -> Result<Algebra> {
        Algebra::from_fn(label, self.dim, unit, |i, j| &self.s(i, j) + &self.k(i, j))
    }
}

pub fn split(a: &Algebra) -> SplitProduct {
    let d = a.dim();
    let mut symmetric = BTreeMap::new();
    let mut skew = BTreeMap::new();
    for i in 0..d {
        for j in 0..d {
            let (x, y) = (a.product(i, j), a.product(j, i));
            let s = (&x + &y).scale(&half());
            let k = (&x - &y).scale(&half());
            if !s.is_zero() {
                symmetric.insert((i, j), s);
            }
            if !k.is_zero() {
                skew.insert((i, j), k);
            }
        }
    }
    SplitProduct {
        dim: d,
        symmetric,
        skew,
    }
}

/// `(e_i.e1) e_j + (e_j.e1) e_i - (e_i.e_j) e1`.
fn spin_part(d: usize, i: usize, j: usize) -> Vector {
    let mut v = Vector::zeros(d);
    if i == 0 {
        v[j] += one();
    }
    if j == 0 {
        v[i] += one();
    }
    if i == j {
        v[0] -= one();
    }
    v
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VaOutcome {
    Pass,
    /// `pair` is 0-based. `expected` is the required value of `S` (or zero
    /// for `K(e1, e_j)`), `found` the actual one.
    Fails {
        pair: (usize, usize),
        skew_part: bool,
        expected: Vector,
        found: Vector,
    },
}

fn require_axis_unit(a: &Algebra) -> Result<()> {
    match a.unit() {
        Some(0) => Ok(()),
        _ => Err(Error::NoUnit(format!("`{}` has no unit at e1", a.label()))),
    }
}

pub fn check_va(a: &Algebra) -> Result<VaOutcome> {
    require_axis_unit(a)?;
    let d = a.dim();
    let sp = split(a);
    for i in 0..d {
        for j in 0..d {
            let expected = spin_part(d, i, j);
            let found = sp.s(i, j);
            if found != expected {
                return Ok(VaOutcome::Fails {
                    pair: (i, j),
                    skew_part: false,
                    expected,
                    found,
                });
            }
        }
    }
    for j in 0..d {
        let found = sp.k(0, j);
        if !found.is_zero() {
            return Ok(VaOutcome::Fails {
                pair: (0, j),
                skew_part: true,
                expected: Vector::zeros(d),
                found,
            });
        }
    }
    Ok(VaOutcome::Pass)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VbFailure {
    /// `K(e_i, e_j)` has a component off `e1`.
    OffAxisSkew {
        pair: (usize, usize),
        k_value: Vector,
    },
    /// `K(e_i, e_j)` is on the axis but differs from the supplied form.
    Mismatch {
        pair: (usize, usize),
        expected: Rational,
        found: Rational,
    },
    /// The form read from `K` is degenerate. `radical` is in `e1^perp`
    /// coordinates.
    Degenerate { rank: usize, radical: Subspace },
    /// A basis pair with `w = +-1` does not span a copy of `V3` with `e1`.
    PlaneTest { pair: (usize, usize) },
}

/// V3 morphism onto `span{e1, e_i, e_j}` for a basis pair with `w = +-1`.
fn plane_test(a: &Algebra, i: usize, j: usize, w: &Rational) -> Result<bool> {
    let ej = if w.is_zero() || *w > Rational::zero() {
        a.basis(j)
    } else {
        -&a.basis(j)
    };
    let m = Morphism::from_images(vidinli(1)?, a.clone(), &[a.basis(0), a.basis(i), ej])?;
    Ok(m.check())
}

pub fn check_vb(a: &Algebra, omega: &SkewForm) -> Result<Option<VbFailure>> {
    if check_va(a)? != VaOutcome::Pass {
        return Err(Error::VaNotEstablished);
    }
    let d = a.dim();
    if 2 * omega.n() + 1 != d {
        return Err(Error::DimensionMismatch {
            expected: d - 1,
            found: 2 * omega.n(),
        });
    }
    let sp = split(a);
    for i in 1..d {
        for j in 1..d {
            let k = sp.k(i, j);
            if k.support().any(|(r, _)| r != 0) {
                return Ok(Some(VbFailure::OffAxisSkew {
                    pair: (i, j),
                    k_value: k,
                }));
            }
            let w = omega.entry(i - 1, j - 1);
            if k[0] != *w {
                return Ok(Some(VbFailure::Mismatch {
                    pair: (i, j),
                    expected: w.clone(),
                    found: k[0].clone(),
                }));
            }
        }
    }
    if !omega.is_nondegenerate() {
        return Ok(Some(VbFailure::Degenerate {
            rank: omega.rank(),
            radical: omega.radical(),
        }));
    }
    for i in 1..d {
        for j in i + 1..d {
            let w = omega.entry(i - 1, j - 1);
            if (*w == one() || *w == -one()) && !plane_test(a, i, j, w)? {
                return Ok(Some(VbFailure::PlaneTest { pair: (i, j) }));
            }
        }
    }
    Ok(None)
}

/// Skew form read from the `e1` coefficient of `K`, or the first pair where
/// `K` leaves the axis.
pub fn extract_omega(a: &Algebra) -> Result<std::result::Result<SkewForm, VbFailure>> {
    let d = a.dim();
    if d < 3 || d % 2 == 0 {
        return Err(Error::OutOfScope(format!(
            "dimension {d} is not odd and at least 3"
        )));
    }
    let sp = split(a);
    let mut m = Matrix::zeros(d - 1, d - 1);
    for i in 1..d {
        for j in 1..d {
            let k = sp.k(i, j);
            if k.support().any(|(r, _)| r != 0) {
                return Ok(Err(VbFailure::OffAxisSkew {
                    pair: (i, j),
                    k_value: k,
                }));
            }
            m.set(i - 1, j - 1, k[0].clone());
        }
    }
    Ok(Ok(SkewForm::new(m)?))
}

#[derive(Clone, Debug)]
pub enum Verdict {
    IsVidinli {
        n: usize,
        omega: SkewForm,
        /// Identity on the basis, onto `vidinli_type(n, omega)`.
        to_type: Morphism,
        /// Identity on the basis onto `vidinli(n)`, when `omega` is standard.
        to_standard: Option<Morphism>,
    },
    FailsVa {
        pair: (usize, usize),
        skew_part: bool,
        expected: Vector,
        found: Vector,
    },
    FailsVb(VbFailure),
    NotApplicable {
        reason: String,
    },
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::IsVidinli { .. } => "IsVidinli",
            Verdict::FailsVa { .. } => "FailsVa",
            Verdict::FailsVb(_) => "FailsVb",
            Verdict::NotApplicable { .. } => "NotApplicable",
        }
    }

    /// Recomputes the witness against `a`.
    pub fn reverify(&self, a: &Algebra) -> bool {
        let sp = split(a);
        match self {
            Verdict::IsVidinli {
                n,
                omega,
                to_type,
                to_standard,
            } => {
                vidinli_type(*n, omega).is_ok_and(|t| t.same_table(to_type.target()))
                    && to_type.source().same_table(a)
                    && to_type.check()
                    && to_standard.as_ref().is_none_or(|m| m.check())
            }
            Verdict::FailsVa {
                pair,
                skew_part,
                expected,
                found,
            } => {
                let (i, j) = *pair;
                if *skew_part {
                    i == 0 && sp.k(i, j) == *found && !found.is_zero()
                } else {
                    sp.s(i, j) == *found
                        && *expected == spin_part(a.dim(), i, j)
                        && found != expected
                }
            }
            Verdict::FailsVb(VbFailure::OffAxisSkew { pair, k_value }) => {
                sp.k(pair.0, pair.1) == *k_value && k_value.support().any(|(r, _)| r != 0)
            }
            Verdict::FailsVb(VbFailure::Mismatch { pair, found, .. }) => {
                sp.k(pair.0, pair.1)[0] == *found
            }
            Verdict::FailsVb(VbFailure::Degenerate { rank, radical }) => match extract_omega(a) {
                Ok(Ok(w)) => w.rank() == *rank && w.radical() == *radical && !w.is_nondegenerate(),
                _ => false,
            },
            Verdict::FailsVb(VbFailure::PlaneTest { pair }) => match extract_omega(a) {
                Ok(Ok(w)) => {
                    let e = w.entry(pair.0 - 1, pair.1 - 1).clone();
                    plane_test(a, pair.0, pair.1, &e).is_ok_and(|ok| !ok)
                }
                _ => false,
            },
            Verdict::NotApplicable { .. } => a.dim() % 2 == 0 || a.unit() != Some(0),
        }
    }
}

pub fn classify(a: &Algebra) -> Result<Verdict> {
    let d = a.dim();
    if d < 3 || d % 2 == 0 {
        return Ok(Verdict::NotApplicable {
            reason: format!("dimension {d} is not odd and at least 3"),
        });
    }
    if a.unit() != Some(0) {
        return Ok(Verdict::NotApplicable {
            reason: "no unit declared at e1".into(),
        });
    }
    if let VaOutcome::Fails {
        pair,
        skew_part,
        expected,
        found,
    } = check_va(a)?
    {
        return Ok(Verdict::FailsVa {
            pair,
            skew_part,
            expected,
            found,
        });
    }
    let omega = match extract_omega(a)? {
        Ok(w) => w,
        Err(f) => return Ok(Verdict::FailsVb(f)),
    };
    if let Some(f) = check_vb(a, &omega)? {
        return Ok(Verdict::FailsVb(f));
    }
    let n = (d - 1) / 2;
    let target = vidinli_type(n, &omega)?;
    let to_type = Morphism::new(a.clone(), target, Matrix::identity(d))?;
    if !to_type.check() {
        return Err(Error::CrossCheck(
            "conditions hold but the identity map is not a morphism".into(),
        ));
    }
    let to_standard = if omega.is_standard() {
        let m = Morphism::new(a.clone(), vidinli(n)?, Matrix::identity(d))?;
        if !m.check() {
            return Err(Error::CrossCheck(
                "standard form but the identity onto V fails".into(),
            ));
        }
        Some(m)
    } else {
        None
    };
    Ok(Verdict::IsVidinli {
        n,
        omega,
        to_type,
        to_standard,
    })
}

/// The product `(a.e1) b + (b.e1) a - (a.b) e1 + K(a, b)` for a skew table
/// `k` with `k(e1, .) = 0`.
pub fn from_skew_part(
    label: &str,
    d: usize,
    k: &dyn Fn(usize, usize) -> Vector,
) -> Result<Algebra> {
    Algebra::from_fn(label, d, Some(0), |i, j| &spin_part(d, i, j) + &k(i, j))
}

/// Ten nondegenerate skew forms: the standard ones, band patterns, block
/// scalings, and the five-dimensional example coupling `e3, e4`.
pub fn round_trip_forms() -> Vec<SkewForm> {
    use crate::constructors::{omega_tilde, standard_symplectic};
    use crate::linalg::rational::int;
    let band = |n: usize, scale: i64| {
        let m = 2 * n;
        let mut mat = Matrix::zeros(m, m);
        for r in 0..m - 1 {
            mat.set(r, r + 1, int(scale));
            mat.set(r + 1, r, int(-scale));
        }
        SkewForm::new(mat).expect("band is skew")
    };
    let block = |n: usize, scales: &[i64]| {
        let m = 2 * n;
        let mut mat = Matrix::zeros(m, m);
        for i in 0..n {
            mat.set(2 * i, 2 * i + 1, int(scales[i]));
            mat.set(2 * i + 1, 2 * i, int(-scales[i]));
        }
        SkewForm::new(mat).expect("block is skew")
    };
    let mut forms = vec![
        standard_symplectic(1).unwrap(),
        standard_symplectic(2).unwrap(),
        standard_symplectic(3).unwrap(),
        omega_tilde(),
        band(3, 1),
        band(2, 2),
        block(2, &[2, -3]),
        block(3, &[1, -1, 5]),
        block(1, &[-7]),
    ];
    // couples (e2, e5) and (e3, e4)
    let mut cross = Matrix::zeros(4, 4);
    cross.set(0, 3, int(1));
    cross.set(3, 0, int(-1));
    cross.set(1, 2, int(1));
    cross.set(2, 1, int(-1));
    forms.push(SkewForm::new(cross).unwrap());
    debug_assert!(forms.iter().all(SkewForm::is_nondegenerate));
    forms
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{omega_tilde, quaternions, twisted_v3, vidinli_jordan};
    use crate::linalg::rational::int;
    use crate::pushout::degenerate_example_u;

    #[test]
    fn split_examples() {
        let sp = split(&vidinli(1).unwrap());
        assert_eq!(sp.k(1, 2), Vector::basis(3, 0));
        let t = twisted_v3(&int(1), &int(1), &int(0));
        assert_eq!(split(&t).k(1, 2), Vector::from_ints(&[1, 1, 0]));
        assert!(split(&vidinli_jordan(4).unwrap()).k(1, 2).is_zero());
        let a = vidinli(2).unwrap();
        assert!(split(&a).reassemble("x", Some(0)).unwrap().same_table(&a));
    }

    #[test]
    fn va_examples() {
        assert_eq!(check_va(&vidinli(2).unwrap()).unwrap(), VaOutcome::Pass);
        assert_eq!(
            check_va(&twisted_v3(&int(1), &int(1), &int(0))).unwrap(),
            VaOutcome::Pass
        );
        assert_eq!(check_va(&quaternions()).unwrap(), VaOutcome::Pass);
        assert!(check_va(&crate::constructors::heisenberg(1).unwrap()).is_err());
    }

    #[test]
    fn vb_examples() {
        let t = twisted_v3(&int(1), &int(1), &int(0));
        let f = check_vb(&t, &crate::constructors::standard_symplectic(1).unwrap()).unwrap();
        assert!(matches!(
            f,
            Some(VbFailure::OffAxisSkew { pair: (1, 2), .. })
        ));
        assert!(check_vb(
            &vidinli(2).unwrap(),
            &crate::constructors::standard_symplectic(2).unwrap()
        )
        .unwrap()
        .is_none());
        assert!(matches!(
            check_vb(
                &crate::pushout::mixed_pushout_j().unwrap(),
                &crate::constructors::standard_symplectic(1).unwrap()
            ),
            Err(Error::VaNotEstablished)
        ));
    }

    #[test]
    fn verdicts() {
        let v = classify(&vidinli(3).unwrap()).unwrap();
        assert!(matches!(
            &v,
            Verdict::IsVidinli {
                n: 3,
                to_standard: Some(_),
                ..
            }
        ));
        assert!(v.reverify(&vidinli(3).unwrap()));
        let t = twisted_v3(&int(1), &int(1), &int(0));
        let v = classify(&t).unwrap();
        assert!(matches!(v, Verdict::FailsVb(VbFailure::OffAxisSkew { .. })));
        assert!(v.reverify(&t));
        let u = degenerate_example_u().unwrap();
        let v = classify(&u).unwrap();
        match &v {
            Verdict::FailsVb(VbFailure::Degenerate { rank, radical }) => {
                assert_eq!((*rank, radical.dim()), (4, 2));
            }
            other => panic!("{other:?}"),
        }
        assert!(v.reverify(&u));
        assert!(matches!(
            classify(&vidinli_jordan(5).unwrap()).unwrap(),
            Verdict::FailsVb(VbFailure::Degenerate { rank: 0, .. })
        ));
        assert!(matches!(
            classify(&quaternions()).unwrap(),
            Verdict::NotApplicable { .. }
        ));
    }

    #[test]
    fn omega_round_trip() {
        for w in round_trip_forms() {
            let a = vidinli_type(w.n(), &w).unwrap();
            match classify(&a).unwrap() {
                Verdict::IsVidinli { omega, .. } => assert_eq!(omega, w),
                other => panic!("{other:?}"),
            }
        }
        let diff = vidinli(2)
            .unwrap()
            .table_diff(&vidinli_type(2, &omega_tilde()).unwrap())
            .unwrap();
        let pairs: Vec<_> = diff.iter().map(|d| (d.0, d.1)).collect();
        assert_eq!(pairs, vec![(2, 3), (3, 2)]);
    }

    #[test]
    fn synthetic_skew_passes_va() {
        let a = from_skew_part("synthetic", 5, &|i, j| {
            if i == 0 || j == 0 || i == j {
                Vector::zeros(5)
            } else {
                let mut v = Vector::zeros(5);
                v[(i + j) % 4 + 1] = int(i as i64 - j as i64);
                v
            }
        })
        .unwrap();
        assert_eq!(check_va(&a).unwrap(), VaOutcome::Pass);
        assert!(matches!(classify(&a).unwrap(), Verdict::FailsVb(_)));
    }
}
