//! Degenerate pushouts: unital algebras glued along a shared basis-aligned
//! subalgebra `Z`, with every product between different copies outside `Z`
//! set to zero.
//!
//! The result is built directly in normal form. Its basis is the `Z` basis
//! followed by each component's complement in ascending index order.

use crate::algebra::{Algebra, Morphism};
use crate::constructors::{complex_algebra, jspin, vidinli};
use crate::error::{Error, Result};
use crate::linalg::{Subspace, Vector};

/// Gluing data. `z_indices[c][t]` is the basis index in component `c` of the
/// `t`-th basis vector of `Z`; entry 0 is the shared unit when units exist.
#[derive(Clone, Debug)]
pub struct PushoutSpec {
    components: Vec<Algebra>,
    z_indices: Vec<Vec<usize>>,
}

impl PushoutSpec {
    pub fn new(components: Vec<Algebra>, z_indices: Vec<Vec<usize>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Pushout("at least one component is required".into()));
        }
        if z_indices.len() != components.len() {
            return Err(Error::Pushout(format!(
                "{} components but {} Z embeddings",
                components.len(),
                z_indices.len()
            )));
        }
        let z_dim = z_indices[0].len();
        if z_dim == 0 {
            return Err(Error::Pushout("Z must have dimension at least 1".into()));
        }
        for (c, (a, z)) in components.iter().zip(&z_indices).enumerate() {
            if z.len() != z_dim {
                return Err(Error::Pushout(format!(
                    "component {} embeds {} basis vectors of Z, expected {z_dim}",
                    c + 1,
                    z.len()
                )));
            }
            let mut seen = vec![false; a.dim()];
            for &i in z {
                if i >= a.dim() {
                    return Err(Error::IndexOutOfRange {
                        index: i,
                        dim: a.dim(),
                    });
                }
                if std::mem::replace(&mut seen[i], true) {
                    return Err(Error::Pushout(format!(
                        "component {}: e{} repeated in Z",
                        c + 1,
                        i + 1
                    )));
                }
            }
        }
        let units: Vec<Option<usize>> = components.iter().map(Algebra::unit).collect();
        let unital = units.iter().filter(|u| u.is_some()).count();
        if unital != 0 && unital != units.len() {
            return Err(Error::Pushout(
                "either every component has a unit or none does".into(),
            ));
        }
        for (c, u) in units.iter().enumerate() {
            if let Some(u) = u {
                if *u != z_indices[c][0] {
                    return Err(Error::Pushout(format!(
                        "component {}: unit e{} is not the first Z basis vector",
                        c + 1,
                        u + 1
                    )));
                }
            }
        }
        let spec = PushoutSpec {
            components,
            z_indices,
        };
        let reference = spec.z_table(0)?;
        for c in 1..spec.components.len() {
            let other = spec.z_table(c)?;
            if let Some(&(s, t, _, _)) = reference.table_diff(&other)?.first() {
                return Err(Error::Pushout(format!(
                    "Z product z{} * z{} differs between component 1 and component {}",
                    s + 1,
                    t + 1,
                    c + 1
                )));
            }
        }
        Ok(spec)
    }

    pub fn components(&self) -> &[Algebra] {
        &self.components
    }

    pub fn z_indices(&self) -> &[Vec<usize>] {
        &self.z_indices
    }

    pub fn z_dim(&self) -> usize {
        self.z_indices[0].len()
    }

    /// Basis indices of component `c` outside `Z`, ascending.
    pub fn complement(&self, c: usize) -> Vec<usize> {
        let z = &self.z_indices[c];
        (0..self.components[c].dim())
            .filter(|i| !z.contains(i))
            .collect()
    }

    /// Dimension predicted by the normal form.
    pub fn pushout_dim(&self) -> usize {
        self.z_dim()
            + self
                .components
                .iter()
                .map(|a| a.dim() - self.z_dim())
                .sum::<usize>()
    }

    /// `Z` as an algebra, read from component `c`; fails if the `Z` span is
    /// not product-closed there.
    pub fn z_table(&self, c: usize) -> Result<Algebra> {
        let a = &self.components[c];
        let z = &self.z_indices[c];
        let unit = a.unit().map(|_| 0);
        let mut out = Algebra::new(format!("Z in {}", a.label()), z.len(), unit)?;
        for (s, &i) in z.iter().enumerate() {
            for (t, &j) in z.iter().enumerate() {
                let p = a.product(i, j);
                let mut q = Vector::zeros(z.len());
                for (k, x) in p.support() {
                    let r = z.iter().position(|&m| m == k).ok_or_else(|| {
                        Error::Pushout(format!(
                            "component {}: e{} * e{} leaves the Z span",
                            c + 1,
                            i + 1,
                            j + 1
                        ))
                    })?;
                    q[r] = x.clone();
                }
                out.set_product(s, t, q)?;
            }
        }
        Ok(out)
    }

    /// Position in the pushout basis of basis index `i` of component `c`.
    pub fn position(&self, c: usize, i: usize) -> usize {
        if let Some(t) = self.z_indices[c].iter().position(|&m| m == i) {
            return t;
        }
        let offset: usize = self.z_dim()
            + self.components[..c]
                .iter()
                .map(|a| a.dim() - self.z_dim())
                .sum::<usize>();
        offset
            + self
                .complement(c)
                .iter()
                .position(|&m| m == i)
                .expect("index in range")
    }

    /// Component owning pushout position `p`, with its local index; `None`
    /// for positions inside `Z`.
    fn owner(&self, p: usize) -> Option<(usize, usize)> {
        if p < self.z_dim() {
            return None;
        }
        let mut offset = self.z_dim();
        for (c, a) in self.components.iter().enumerate() {
            let len = a.dim() - self.z_dim();
            if p < offset + len {
                return Some((c, self.complement(c)[p - offset]));
            }
            offset += len;
        }
        unreachable!("position beyond the pushout dimension")
    }

    fn translate(&self, c: usize, v: &Vector, dim: usize) -> Vector {
        let mut out = Vector::zeros(dim);
        for (k, x) in v.support() {
            out[self.position(c, k)] = x.clone();
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct Pushout {
    pub algebra: Algebra,
    pub embeddings: Vec<Morphism>,
}

pub fn pushout_label(components: &[Algebra]) -> String {
    components
        .iter()
        .map(Algebra::label)
        .collect::<Vec<_>>()
        .join(" (.) ")
}

pub fn degenerate_pushout(spec: &PushoutSpec) -> Result<Pushout> {
    let d = spec.pushout_dim();
    let unit = spec.components[0].unit().map(|_| 0);
    let algebra = Algebra::from_fn(pushout_label(&spec.components), d, unit, |p, q| {
        let (c, i, j) = match (spec.owner(p), spec.owner(q)) {
            (None, None) => (0, spec.z_indices[0][p], spec.z_indices[0][q]),
            (Some((c, i)), None) => (c, i, spec.z_indices[c][q]),
            (None, Some((c, j))) => (c, spec.z_indices[c][p], j),
            (Some((c, i)), Some((c2, j))) if c == c2 => (c, i, j),
            _ => return Vector::zeros(d),
        };
        spec.translate(c, &spec.components[c].product(i, j), d)
    })?;
    let mut embeddings = Vec::new();
    for (c, a) in spec.components.iter().enumerate() {
        let images: Vec<Vector> = (0..a.dim())
            .map(|i| Vector::basis(d, spec.position(c, i)))
            .collect();
        let m = Morphism::from_images(a.clone(), algebra.clone(), &images)?;
        if let Some(f) = m.failure() {
            return Err(Error::CrossCheck(format!(
                "embedding of component {} fails: {f:?}",
                c + 1
            )));
        }
        embeddings.push(m);
    }
    Ok(Pushout {
        algebra,
        embeddings,
    })
}

/// `k`-fold pushout of copies of `a` over the same `Z`.
pub fn iterated_pushout(a: &Algebra, z: &[usize], k: usize) -> Result<Algebra> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let spec = PushoutSpec::new(vec![a.clone(); k], vec![z.to_vec(); k])?;
    Ok(degenerate_pushout(&spec)?.algebra)
}

/// Builds the induced map out of the pushout from maps on the components
/// and verifies it is a morphism.
pub fn check_universal_property(
    spec: &PushoutSpec,
    target: &Algebra,
    maps: &[Morphism],
) -> Result<Morphism> {
    let k = spec.components.len();
    if maps.len() != k {
        return Err(Error::UniversalProperty(format!(
            "{k} components but {} maps",
            maps.len()
        )));
    }
    for (c, m) in maps.iter().enumerate() {
        if !m.source().same_table(&spec.components[c])
            || m.source().dim() != spec.components[c].dim()
        {
            return Err(Error::UniversalProperty(format!(
                "map {} does not start at component {}",
                c + 1,
                c + 1
            )));
        }
        if !m.target().same_table(target) || m.target().dim() != target.dim() {
            return Err(Error::UniversalProperty(format!(
                "map {} does not land in the target",
                c + 1
            )));
        }
    }
    for t in 0..spec.z_dim() {
        let reference = maps[0].apply(&Vector::basis(
            spec.components[0].dim(),
            spec.z_indices[0][t],
        ))?;
        for c in 1..k {
            let img = maps[c].apply(&Vector::basis(
                spec.components[c].dim(),
                spec.z_indices[c][t],
            ))?;
            if img != reference {
                return Err(Error::UniversalProperty(format!(
                    "maps 1 and {} disagree on Z basis vector z{}",
                    c + 1,
                    t + 1
                )));
            }
        }
    }
    for c in 0..k {
        for c2 in 0..k {
            if c == c2 {
                continue;
            }
            for &i in &spec.complement(c) {
                let x = maps[c].apply(&Vector::basis(spec.components[c].dim(), i))?;
                for &j in &spec.complement(c2) {
                    let y = maps[c2].apply(&Vector::basis(spec.components[c2].dim(), j))?;
                    if !target.multiply(&x, &y)?.is_zero() {
                        return Err(Error::UniversalProperty(format!(
                            "images of e{} (component {}) and e{} (component {}) do not annihilate",
                            i + 1,
                            c + 1,
                            j + 1,
                            c2 + 1
                        )));
                    }
                }
            }
        }
    }
    for (c, m) in maps.iter().enumerate() {
        if let Some(f) = m.failure() {
            return Err(Error::UniversalProperty(format!(
                "map {} is not a morphism: {f:?}",
                c + 1
            )));
        }
    }
    let pushout = degenerate_pushout(spec)?;
    let d = pushout.algebra.dim();
    let mut images = vec![Vector::zeros(target.dim()); d];
    for (c, m) in maps.iter().enumerate() {
        for i in 0..spec.components[c].dim() {
            images[spec.position(c, i)] = m.apply(&Vector::basis(spec.components[c].dim(), i))?;
        }
    }
    let phi = Morphism::from_images(pushout.algebra, target.clone(), &images)?;
    if let Some(f) = phi.failure() {
        return Err(Error::UniversalProperty(format!(
            "induced map is not a morphism: {f:?}"
        )));
    }
    Ok(phi)
}

/// `C (.) JSpin1` over the scalars, basis `(1, i, v)`.
pub fn mixed_pushout_j() -> Result<Algebra> {
    let spec = PushoutSpec::new(vec![complex_algebra(), jspin(1)?], vec![vec![0], vec![0]])?;
    Ok(degenerate_pushout(&spec)?.algebra.with_label("J"))
}

/// `V5 (.) V5` over `span{e1, e2, e4}`, in the basis
/// `(e1, e2, e3, e3', e4, e5, e5')`.
pub fn degenerate_example_u() -> Result<Algebra> {
    let v5 = vidinli(2)?;
    let spec = PushoutSpec::new(vec![v5.clone(), v5], vec![vec![0, 1, 3], vec![0, 1, 3]])?;
    // normal form order is e1, e2, e4, e3, e5, e3', e5'
    let a = degenerate_pushout(&spec)?
        .algebra
        .permute_basis(&[0, 1, 3, 5, 2, 4, 6])?;
    Ok(a.with_label("U"))
}

/// Complement basis pair `(i, j)` of component `c` with `e_i e_j` a nonzero
/// multiple of the unit.
pub fn scalar_product_pair(spec: &PushoutSpec, c: usize) -> Option<(usize, usize)> {
    let a = &spec.components[c];
    let unit = a.unit()?;
    let comp = spec.complement(c);
    for &i in &comp {
        for &j in &comp {
            let p = a.product(i, j);
            if !p.is_zero() && p.support().all(|(k, _)| k == unit) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Span of `Z` inside the pushout.
pub fn z_subspace(spec: &PushoutSpec) -> Subspace {
    Subspace::coordinate(spec.pushout_dim(), &(0..spec.z_dim()).collect::<Vec<_>>())
}
