//! Principal planes, 3-planes, the complex structure `J`, coordinate
//! Lagrangians and embeddings of smaller Vidinli algebras.

use num_traits::{One, Zero};

use crate::algebra::{
    commutativity_witness, jordan_linearized_witness, subalgebra_closure, Algebra, Morphism,
};
use crate::constructors::{standard_symplectic, vidinli, vidinli_jordan};
use crate::error::{Error, Result};
use crate::linalg::rational::{frac, int, one};
use crate::linalg::{Rational, Subspace, Vector};

fn in_v0(n: usize, u: &Vector) -> Result<()> {
    u.check_dim(2 * n + 1)?;
    if u[0].is_zero() {
        Ok(())
    } else {
        Err(Error::Precondition("vector must lie in e1^perp".into()))
    }
}

/// `w(u, v)` for full coordinates.
pub fn omega(n: usize, u: &Vector, v: &Vector) -> Result<Rational> {
    standard_symplectic(n)?.eval_on_full(u, v)
}

#[derive(Clone, Debug)]
pub enum ThreePlane {
    /// `e1 -> e1, e2 -> u, e3 -> +-v`; `flipped` records the sign change.
    IsV3 {
        morphism: Morphism,
        flipped: bool,
    },
    NotV3 {
        omega: Rational,
    },
}

/// Decides whether `span{e1, u, v}` is a copy of `V3`, for orthonormal `u, v`
/// in `e1^perp`.
pub fn classify_3plane(n: usize, u: &Vector, v: &Vector) -> Result<ThreePlane> {
    in_v0(n, u)?;
    in_v0(n, v)?;
    if !u.dot(v).is_zero() || !u.norm_sq().is_one() || !v.norm_sq().is_one() {
        return Err(Error::Precondition("u and v must be orthonormal".into()));
    }
    let w = omega(n, u, v)?;
    let flipped = if w == one() {
        false
    } else if w == -one() {
        true
    } else {
        return Ok(ThreePlane::NotV3 { omega: w });
    };
    let big = vidinli(n)?;
    let vv = if flipped { -v } else { v.clone() };
    let morphism = Morphism::from_images(vidinli(1)?, big.clone(), &[big.basis(0), u.clone(), vv])?;
    if !morphism.check() {
        return Err(Error::CrossCheck(
            "3-plane with omega = +-1 failed the morphism check".into(),
        ));
    }
    Ok(ThreePlane::IsV3 { morphism, flipped })
}

/// `J(e_{2k}) = e_{2k+1}`, `J(e_{2k+1}) = -e_{2k}` on `e1^perp`.
pub fn j_map(n: usize, u: &Vector) -> Result<Vector> {
    in_v0(n, u)?;
    let mut out = Vector::zeros(2 * n + 1);
    for k in 0..n {
        let (p, q) = (2 * k + 1, 2 * k + 2);
        out[q] = u[p].clone();
        out[p] = -u[q].clone();
    }
    Ok(out)
}

/// Deterministic rational unit vectors in `e1^perp`: `+-e_i` and
/// `(+-3/5) e_i + (+-4/5) e_j` for `i < j`.
pub fn unit_probes(n: usize) -> Vec<Vector> {
    let d = 2 * n + 1;
    let mut out = Vec::new();
    for i in 1..d {
        for s in [1, -1] {
            out.push(Vector::basis(d, i).scale(&int(s)));
        }
    }
    for i in 1..d {
        for j in i + 1..d {
            for (a, b) in [
                (3, 4),
                (3, -4),
                (-3, 4),
                (-3, -4),
                (4, 3),
                (4, -3),
                (-4, 3),
                (-4, -3),
            ] {
                let mut v = Vector::zeros(d);
                v[i] = frac(a, 5);
                v[j] = frac(b, 5);
                out.push(v);
            }
        }
    }
    out
}

/// `(Ju).v = w(u,v)` on 30 fixed pairs and, for unit `u`, the only probe
/// unit vectors `v` orthogonal to `u` with `w(u,v) = +-1` are `+-Ju`.
pub fn j_uniqueness_check(n: usize, u: &Vector) -> Result<bool> {
    in_v0(n, u)?;
    let d = 2 * n + 1;
    let probes = unit_probes(n);
    for t in 0..30 {
        let a = &probes[t % probes.len()];
        let mut b = probes[(7 * t + 3) % probes.len()].clone();
        b[d - 1] += frac(t as i64, 3);
        if j_map(n, a)?.dot(&b) != omega(n, a, &b)? {
            return Ok(false);
        }
    }
    if !u.norm_sq().is_one() {
        return Ok(true);
    }
    let ju = j_map(n, u)?;
    for v in &probes {
        if !u.dot(v).is_zero() {
            continue;
        }
        let w = omega(n, u, v)?;
        if (w == one() || w == -one()) && *v != ju && *v != -&ju {
            return Ok(false);
        }
    }
    Ok(omega(n, u, &ju)? == one())
}

/// The `2^n` coordinate Lagrangians: one of `e_{2i}`, `e_{2i+1}` from each pair.
/// Bit `i` of the mask selects `e_{2i+1}`.
pub fn coordinate_lagrangians(n: usize) -> Vec<Subspace> {
    let d = 2 * n + 1;
    (0..1usize << n)
        .map(|mask| {
            let idx: Vec<usize> = (0..n)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        2 * i + 2
                    } else {
                        2 * i + 1
                    }
                })
                .collect();
            Subspace::coordinate(d, &idx)
        })
        .collect()
}

/// The subalgebra `Q e1 + L` of `V_{2n+1}` in the basis `(e1, RREF basis of L)`.
pub fn jordan_from_lagrangian(n: usize, l: &Subspace) -> Result<Algebra> {
    let d = 2 * n + 1;
    if l.ambient_dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: l.ambient_dim(),
        });
    }
    for b in l.basis() {
        in_v0(n, b)?;
    }
    for (i, a) in l.basis().iter().enumerate() {
        for (j, b) in l.basis().iter().enumerate().skip(i + 1) {
            let w = omega(n, a, b)?;
            if !w.is_zero() {
                return Err(Error::NotIsotropic {
                    i,
                    j,
                    value: crate::linalg::rational::to_short(&w),
                });
            }
        }
    }
    let v = vidinli(n)?;
    let mut gens = vec![v.basis(0)];
    gens.extend(l.basis().iter().cloned());
    let sub = Subspace::from_vectors(d, &gens)?;
    let m = gens.len();
    let mut out = Algebra::new(format!("Qe1+L (n={n})"), m, Some(0))?;
    for i in 0..m {
        for j in 0..m {
            let p = v.multiply(&gens[i], &gens[j])?;
            let coords = sub
                .coordinates(&p)?
                .ok_or_else(|| Error::CrossCheck("Q e1 + L is not product-closed".into()))?;
            // `sub` has pivots in the same order as `gens`, since e1 is pivot 0
            // and L's basis is already reduced with zero first coordinate
            out.set_product(i, j, coords)?;
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LagrangianCorrespondence {
    pub n: usize,
    pub lagrangians: usize,
    /// Every induced algebra is commutative, unital, Jordan, of dim `n+1`
    /// and equal to `VJ_{n+1}`.
    pub all_jordan: bool,
    /// `Q e1 + L` is subalgebra-closed in `V_{2n+1}` for every `L`.
    pub all_closed: bool,
    /// Adding any further basis vector makes the generated subalgebra
    /// non-commutative.
    pub all_maximal: bool,
    /// Distinct `L` give distinct subalgebras, and `L` is recovered as
    /// the intersection with `e1^perp`.
    pub bijective: bool,
}

impl LagrangianCorrespondence {
    pub fn passed(&self) -> bool {
        self.all_jordan && self.all_closed && self.all_maximal && self.bijective
    }
}

pub fn lagrangian_correspondence(n: usize) -> Result<LagrangianCorrespondence> {
    let d = 2 * n + 1;
    let v = vidinli(n)?;
    let vj = vidinli_jordan(n + 1)?;
    let v0 = Subspace::coordinate(d, &(1..d).collect::<Vec<_>>());
    let ls = coordinate_lagrangians(n);
    let mut all_jordan = true;
    let mut all_closed = true;
    let mut all_maximal = true;
    let mut subalgebras = Vec::new();
    let mut recovered = true;
    for l in &ls {
        let a = jordan_from_lagrangian(n, l)?;
        all_jordan &= a.dim() == n + 1
            && a.unit_law_failure().is_none()
            && commutativity_witness(&a).is_none()
            && jordan_linearized_witness(&a).is_none()
            && a.same_table(&vj);
        let mut gens = vec![v.basis(0)];
        gens.extend(l.basis().iter().cloned());
        let span = Subspace::from_vectors(d, &gens)?;
        all_closed &= subalgebra_closure(&v, &gens)? == span;
        for extra in 1..d {
            if span.contains(&v.basis(extra))? {
                continue;
            }
            let mut g = gens.clone();
            g.push(v.basis(extra));
            let closure = subalgebra_closure(&v, &g)?;
            let commutative = closure.basis().iter().all(|x| {
                closure
                    .basis()
                    .iter()
                    .all(|y| v.commutator(x, y).is_ok_and(|c| c.is_zero()))
            });
            all_maximal &= !commutative;
        }
        recovered &= span.intersection(&v0)? == *l;
        subalgebras.push(span);
    }
    let mut sorted = subalgebras.clone();
    sorted.sort_by_key(|s| format!("{:?}", s.basis()));
    sorted.dedup();
    Ok(LagrangianCorrespondence {
        n,
        lagrangians: ls.len(),
        all_jordan,
        all_closed,
        all_maximal,
        bijective: recovered && sorted.len() == ls.len(),
    })
}

/// Injective morphism `V_{2k+1} -> V_{2n+1}` with `e1 -> e1` and
/// `(e_{2i}, e_{2i+1}) -> (u_i, v_i)`.
pub fn embed_sub_vidinli(n: usize, pairs: &[(Vector, Vector)]) -> Result<Morphism> {
    if pairs.is_empty() {
        return Err(Error::Precondition("at least one pair is required".into()));
    }
    let big = vidinli(n)?;
    let mut images = vec![big.basis(0)];
    for (i, (u, v)) in pairs.iter().enumerate() {
        in_v0(n, u)?;
        in_v0(n, v)?;
        if !u.norm_sq().is_one() || !v.norm_sq().is_one() || !u.dot(v).is_zero() {
            return Err(Error::Precondition(format!(
                "pair {} is not orthonormal",
                i + 1
            )));
        }
        if omega(n, u, v)? != one() {
            return Err(Error::Precondition(format!(
                "pair {} has omega(u, v) != 1",
                i + 1
            )));
        }
        images.push(u.clone());
        images.push(v.clone());
    }
    for (i, x) in images.iter().enumerate().skip(1) {
        for (j, y) in images.iter().enumerate().skip(1) {
            if (i - 1) / 2 != (j - 1) / 2 && !big.multiply(x, y)?.is_zero() {
                return Err(Error::Precondition(format!(
                    "products between pair {} and pair {} are not zero",
                    (i - 1) / 2 + 1,
                    (j - 1) / 2 + 1
                )));
            }
        }
    }
    let m = Morphism::from_images(vidinli(pairs.len())?, big, &images)?;
    if !m.is_injective() {
        return Err(Error::Precondition("images are linearly dependent".into()));
    }
    if !m.check() {
        return Err(Error::CrossCheck(
            "embedding failed the morphism check".into(),
        ));
    }
    Ok(m)
}

/// Checks `x*y = (a1 b1 - a2 b2) e1 + (a1 b2 + a2 b1 + 2 alpha a2 b2) u` on
/// `span{e1, u}` for unit `u` with `alpha = u.e1`, and computes the
/// discriminant `4(alpha^2 - 1)`.
pub fn principal_plane_law(n: usize, u: &Vector) -> Result<(bool, Rational)> {
    let v = vidinli(n)?;
    u.check_dim(v.dim())?;
    if !u.norm_sq().is_one() {
        return Err(Error::Precondition("u must be a unit vector".into()));
    }
    let alpha = u[0].clone();
    let e1 = v.basis(0);
    let coeffs = [
        (int(1), int(0)),
        (int(0), int(1)),
        (int(2), frac(-1, 3)),
        (frac(1, 2), int(5)),
    ];
    let mut holds = true;
    for (a1, a2) in &coeffs {
        for (b1, b2) in &coeffs {
            let x = &e1.scale(a1) + &u.scale(a2);
            let y = &e1.scale(b1) + &u.scale(b2);
            let got = v.multiply(&x, &y)?;
            let c1 = a1 * b1 - a2 * b2;
            let cu = a1 * b2 + a2 * b1 + int(2) * &alpha * a2 * b2;
            let expected = &e1.scale(&c1) + &u.scale(&cu);
            holds &= got == expected;
        }
    }
    Ok((holds, int(4) * (&alpha * &alpha - one())))
}
