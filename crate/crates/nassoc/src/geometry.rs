//! Incidence geometry of `PG(k-1, 2)` and reconstruction of `V_{2^{k-1}-1}`
//! from local rules on hyperplanes.
//!
//! Points are the nonzero vectors of `GF(2)^k`, written as integers
//! `1..2^k`. The labeling sends a point to its integer value, so `e1` is the
//! point `1` and every line through it is `{1, 2i, 2i+1}`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::algebra::{subalgebra_closure, Algebra, Morphism};
use crate::constructors::{vidinli, vidinli_jordan};
use crate::error::{Error, Result};
use crate::linalg::{Subspace, Vector};

/// Flats of every projective rank (0 = points, 1 = lines, ...).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PgSpace {
    pub k: usize,
    pub points: Vec<usize>,
    pub lines: Vec<[usize; 3]>,
    pub flats: BTreeMap<usize, Vec<Vec<usize>>>,
}

fn span_gf2(points: &BTreeSet<usize>, extra: usize) -> BTreeSet<usize> {
    let mut out = points.clone();
    for &p in points {
        out.insert(p ^ extra);
    }
    out.insert(extra);
    out.remove(&0);
    out
}

pub fn pg(k: usize) -> Result<PgSpace> {
    if !(2..=16).contains(&k) {
        return Err(Error::InvalidParameter("k must be between 2 and 16".into()));
    }
    let n = 1usize << k;
    let points: Vec<usize> = (1..n).collect();
    let mut flats = BTreeMap::new();
    let mut current: BTreeSet<BTreeSet<usize>> =
        points.iter().map(|&p| BTreeSet::from([p])).collect();
    for rank in 0..k {
        flats.insert(
            rank,
            current
                .iter()
                .map(|f| f.iter().copied().collect())
                .collect::<Vec<Vec<usize>>>(),
        );
        if rank + 1 == k {
            break;
        }
        let mut next = BTreeSet::new();
        for f in &current {
            for &p in &points {
                if !f.contains(&p) {
                    next.insert(span_gf2(f, p));
                }
            }
        }
        current = next;
    }
    let lines = flats
        .get(&1)
        .map(|ls| ls.iter().map(|l| [l[0], l[1], l[2]]).collect())
        .unwrap_or_default();
    Ok(PgSpace {
        k,
        points,
        lines,
        flats,
    })
}

/// Number of `d`-dimensional subspaces of `GF(2)^k`.
pub fn gaussian_binomial(k: usize, d: usize) -> u64 {
    if d > k {
        return 0;
    }
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..d {
        num *= (1u64 << (k - i)) - 1;
        den *= (1u64 << (i + 1)) - 1;
    }
    num / den
}

/// Point of `PG(k-1, 2)` for each label `1..2^k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Labeling {
    pub k: usize,
    pub point_of_label: Vec<usize>,
}

impl Labeling {
    pub fn label(&self, point: usize) -> usize {
        self.point_of_label
            .iter()
            .position(|&p| p == point)
            .expect("point in range")
            + 1
    }

    pub fn point(&self, label: usize) -> usize {
        self.point_of_label[label - 1]
    }

    /// Lines in label form, sorted.
    pub fn labeled_lines(&self, space: &PgSpace) -> Vec<[usize; 3]> {
        let mut out: Vec<[usize; 3]> = space
            .lines
            .iter()
            .map(|l| {
                let mut t = l.map(|p| self.label(p));
                t.sort_unstable();
                t
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// First line through label 1 not of the form `{1, 2i, 2i+1}`.
    pub fn violation(&self, space: &PgSpace) -> Option<[usize; 3]> {
        self.labeled_lines(space)
            .into_iter()
            .find(|l| l[0] == 1 && !(l[1] % 2 == 0 && l[2] == l[1] + 1))
    }
}

pub fn vidinli_labeling(k: usize) -> Result<Labeling> {
    if k < 2 {
        return Err(Error::InvalidParameter("k must be at least 2".into()));
    }
    Ok(Labeling {
        k,
        point_of_label: (1..1usize << k).collect(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FlatKind {
    AntiChain,
    VjChain,
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatClass {
    /// Sorted labels.
    pub flat: Vec<usize>,
    pub class: FlatKind,
}

/// Partner of a label in its coupled pair `{2i, 2i+1}`.
fn partner(label: usize) -> usize {
    label ^ 1
}

pub fn classify_flat(
    space: &PgSpace,
    labeling: &Labeling,
    rank: usize,
    flat: &[usize],
) -> FlatClass {
    let mut labels: Vec<usize> = flat.iter().map(|&p| labeling.label(p)).collect();
    labels.sort_unstable();
    let set: BTreeSet<usize> = labels.iter().copied().collect();
    let class = if rank + 2 != space.k {
        FlatKind::Neither
    } else if set.contains(&1) {
        if set
            .iter()
            .filter(|&&l| l != 1)
            .all(|&l| set.contains(&partner(l)))
        {
            FlatKind::AntiChain
        } else {
            FlatKind::Neither
        }
    } else if set.iter().all(|&l| !set.contains(&partner(l))) {
        FlatKind::VjChain
    } else {
        FlatKind::Neither
    };
    FlatClass {
        flat: labels,
        class,
    }
}

/// Every rank `k-2` flat, classified.
pub fn classify_flats(space: &PgSpace, labeling: &Labeling) -> Vec<FlatClass> {
    let rank = space.k.saturating_sub(2);
    let mut out: Vec<FlatClass> = space.flats[&rank]
        .iter()
        .map(|f| classify_flat(space, labeling, rank, f))
        .collect();
    out.sort_by(|a, b| a.flat.cmp(&b.flat));
    out
}

/// Product prescribed on the span of one flat, on every ordered pair of its
/// basis vectors (zero products included).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalRule {
    pub flat: Vec<usize>,
    pub kind: FlatKind,
    pub products: BTreeMap<(usize, usize), Vector>,
}

fn install(local: &Algebra, support: &[usize], dim: usize) -> BTreeMap<(usize, usize), Vector> {
    let mut products = BTreeMap::new();
    for (s, &i) in support.iter().enumerate() {
        for (t, &j) in support.iter().enumerate() {
            let mut v = Vector::zeros(dim);
            for (r, x) in local.product(s, t).support() {
                v[support[r]] = x.clone();
            }
            products.insert((i, j), v);
        }
    }
    products
}

/// Local rules: `V_{2^{k-1}-1}` on each anti-chain, `VJ_{2^{k-1}+1}` on
/// `e1` plus each VJ-chain.
pub fn local_rules(k: usize, labeling: &Labeling) -> Result<Vec<LocalRule>> {
    if k < 3 {
        return Err(Error::InvalidParameter(
            "reconstruction needs k >= 3".into(),
        ));
    }
    let space = pg(k)?;
    let dim = (1usize << k) - 1;
    let mut rules = Vec::new();
    for fc in classify_flats(&space, labeling) {
        let (local, support) = match fc.class {
            FlatKind::AntiChain => {
                let support: Vec<usize> = fc.flat.iter().map(|l| l - 1).collect();
                (vidinli((fc.flat.len() - 1) / 2)?, support)
            }
            FlatKind::VjChain => {
                let mut support = vec![0];
                support.extend(fc.flat.iter().map(|l| l - 1));
                (vidinli_jordan(fc.flat.len() + 1)?, support)
            }
            FlatKind::Neither => {
                return Err(Error::CrossCheck(format!(
                    "hyperplane {:?} is neither kind",
                    fc.flat
                )));
            }
        };
        rules.push(LocalRule {
            flat: fc.flat,
            kind: fc.class,
            products: install(&local, &support, dim),
        });
    }
    Ok(rules)
}

/// Glues local rules, failing on disagreement or an uncovered pair.
pub fn assemble(dim: usize, rules: &[LocalRule]) -> Result<Algebra> {
    let mut table: BTreeMap<(usize, usize), (&Vector, usize)> = BTreeMap::new();
    for (r, rule) in rules.iter().enumerate() {
        for (&pair, v) in &rule.products {
            if let Some(&(w, first)) = table.get(&pair) {
                if w != v {
                    return Err(Error::CompatibilityConflict {
                        first: rules[first].flat.clone(),
                        second: rule.flat.clone(),
                        pair,
                    });
                }
            } else {
                table.insert(pair, (v, r));
            }
        }
    }
    let mut out = Algebra::new(format!("PG-reconstruction (dim {dim})"), dim, Some(0))?;
    for i in 0..dim {
        for j in 0..dim {
            let (v, _) = table
                .get(&(i, j))
                .ok_or(Error::CoverageGap { pair: (i, j) })?;
            out.set_product(i, j, (*v).clone())?;
        }
    }
    Ok(out)
}

pub fn reconstruct_product(k: usize, labeling: &Labeling) -> Result<Algebra> {
    assemble((1usize << k) - 1, &local_rules(k, labeling)?)
}

/// Ordered pairs `(i, j)`, `i != j`, neither the unit, prescribed by at
/// least two local rules.
pub fn nontrivial_overlaps(rules: &[LocalRule]) -> usize {
    let mut count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for rule in rules {
        for &(i, j) in rule.products.keys() {
            if i != j && i != 0 && j != 0 {
                *count.entry((i, j)).or_default() += 1;
            }
        }
    }
    count.values().filter(|&&c| c >= 2).count()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineAudit {
    pub line: [usize; 3],
    pub through_unit: bool,
    pub closed: bool,
    /// V3 morphism for lines through `e1`, `VJ4` table match otherwise.
    pub matches_model: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanoAudit {
    pub lines: Vec<LineAudit>,
}

impl FanoAudit {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.closed && l.matches_model)
    }

    pub fn count(&self, through_unit: bool) -> usize {
        self.lines
            .iter()
            .filter(|l| l.through_unit == through_unit)
            .count()
    }
}

/// Product restricted to the coordinate span `support` (0-based), or `None`
/// if that span is not closed.
fn restrict(a: &Algebra, support: &[usize]) -> Result<Option<Algebra>> {
    let mut out = Algebra::new(format!("{} restricted", a.label()), support.len(), Some(0))?;
    for (s, &i) in support.iter().enumerate() {
        for (t, &j) in support.iter().enumerate() {
            let p = a.product(i, j);
            let mut q = Vector::zeros(support.len());
            for (r, x) in p.support() {
                match support.iter().position(|&m| m == r) {
                    Some(pos) => q[pos] = x.clone(),
                    None => return Ok(None),
                }
            }
            out.set_product(s, t, q)?;
        }
    }
    Ok(Some(out))
}

pub fn fano_subalgebra_audit(v7: &Algebra) -> Result<FanoAudit> {
    if v7.dim() != 7 {
        return Err(Error::DimensionMismatch {
            expected: 7,
            found: v7.dim(),
        });
    }
    let space = pg(3)?;
    let labeling = vidinli_labeling(3)?;
    let v3 = vidinli(1)?;
    let vj4 = vidinli_jordan(4)?;
    let mut lines = Vec::new();
    for line in labeling.labeled_lines(&space) {
        let idx: Vec<usize> = line.iter().map(|l| l - 1).collect();
        let through_unit = line[0] == 1;
        let support = if through_unit {
            idx.clone()
        } else {
            let mut s = vec![0];
            s.extend(&idx);
            s
        };
        let gens: Vec<Vector> = support.iter().map(|&i| v7.basis(i)).collect();
        let closed = subalgebra_closure(v7, &gens)? == Subspace::from_vectors(7, &gens)?;
        let matches_model = if through_unit {
            Morphism::from_images(v3.clone(), v7.clone(), &gens)?.check()
        } else {
            restrict(v7, &support)?.is_some_and(|r| r.same_table(&vj4))
        };
        lines.push(LineAudit {
            line,
            through_unit,
            closed,
            matches_model,
        });
    }
    Ok(FanoAudit { lines })
}
