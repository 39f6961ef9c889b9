//! Named verification checks grouped into suites.
//!
//! Every check runs one library operation against an independent
//! expectation and records a JSON witness. Reports list checks sorted by
//! id, so they are identical for every thread count.

use std::time::Instant;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{
    associativity_witness, check_morphism, commutativity_witness, ideal_closure,
    is_simple_certified, jordan_linearized_witness, nilpotency_class, Algebra, Morphism,
    Nilpotency, Simplicity,
};
use crate::analysis::{
    automorphism_probes, centroid, classify_3plane, cross7_checks, derivations, embed_sub_vidinli,
    find_idempotents_vidinli, heisenberg_check, is_azumaya, j_map, j_uniqueness_check,
    lagrangian_correspondence, multiplication_algebra, omega, principal_plane_law, rho_report,
    unit_probes, ThreePlane,
};
use crate::characterization::{classify, extract_omega, round_trip_forms, VbFailure, Verdict};
use crate::constructors::{
    complex_algebra, conjugate, coordfree_product, cross7, cross7_formula, dual_numbers,
    heisenberg, inverse, jordan_part, jspin, lie_part, omega_tilde, quaternion_pushforward,
    quaternions, rational_pair, rationals, standard_symplectic, twisted_v3, vidinli,
    vidinli7_directional, vidinli_jordan, vidinli_type, SkewForm,
};
use crate::error::{Error, Result};
use crate::geometry::{
    assemble, classify_flats, fano_subalgebra_audit, gaussian_binomial, local_rules,
    nontrivial_overlaps, pg, reconstruct_product, vidinli_labeling, FlatKind,
};
use crate::json;
use crate::linalg::rational::{frac, int, one};
use crate::linalg::{Matrix, Polynomial, Rational, Subspace, Vector};
use crate::pushout::{
    check_universal_property, degenerate_example_u, degenerate_pushout, iterated_pushout,
    mixed_pushout_j, scalar_product_pair, PushoutSpec,
};
use crate::spectral::{is_zero_divisor, probe_family, spectral_report, spectral_report_side, Side};

pub const SUITES: [&str; 7] = [
    "core",
    "spectral",
    "pushout",
    "geometry",
    "analysis",
    "characterization",
    "all",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub id: String,
    /// The statement being checked, in words.
    pub claim: String,
    pub status: Status,
    pub witness: Value,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: Value,
    pub checks: Vec<CheckResult>,
    pub totals: Totals,
    /// Only filled in when timing was requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_clock_ms: Option<u128>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.totals.fail == 0
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }
}

#[derive(Clone, Debug)]
pub struct SuiteParams {
    /// Largest `n` for the `V_{2n+1}` families.
    pub max_n: usize,
    /// Largest `k` for `PG(k-1, 2)`.
    pub k: usize,
    /// Extra algebra for the characterization suite.
    pub input: Option<Algebra>,
    /// `None` runs on the calling thread.
    pub threads: Option<usize>,
    pub timing: bool,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            max_n: 3,
            k: 4,
            input: None,
            threads: None,
            timing: false,
        }
    }
}

/// Reads `NASSOC_THREADS`; absent means single-threaded.
pub fn threads_from_env() -> Result<Option<usize>> {
    match std::env::var("NASSOC_THREADS") {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(t) if t > 0 => Ok(Some(t)),
            _ => Err(Error::InvalidParameter(format!(
                "NASSOC_THREADS must be a positive integer, got `{s}`"
            ))),
        },
    }
}

type Outcome = Result<(Status, Value)>;

struct Check {
    id: String,
    claim: String,
    run: Box<dyn Fn() -> Outcome + Send + Sync>,
}

fn check(
    id: impl Into<String>,
    claim: impl Into<String>,
    run: impl Fn() -> Outcome + Send + Sync + 'static,
) -> Check {
    Check {
        id: id.into(),
        claim: claim.into(),
        run: Box::new(run),
    }
}

fn verdict(ok: bool, witness: Value) -> Outcome {
    Ok((if ok { Status::Pass } else { Status::Fail }, witness))
}

fn run_one(c: &Check) -> CheckResult {
    let (status, witness) = match (c.run)() {
        Ok(x) => x,
        Err(e) => (Status::Fail, json!({"error": e.to_string()})),
    };
    CheckResult {
        id: c.id.clone(),
        claim: c.claim.clone(),
        status,
        witness,
    }
}

pub fn run_suite(name: &str, params: &SuiteParams) -> Result<SuiteReport> {
    if params.max_n == 0 {
        return Err(Error::InvalidParameter("max-n must be at least 1".into()));
    }
    if !(3..=6).contains(&params.k) {
        return Err(Error::InvalidParameter(format!(
            "k must be in 3..=6, got {}",
            params.k
        )));
    }
    let mut checks = Vec::new();
    let all = name == "all";
    if all || name == "core" {
        checks.extend(core_checks(params));
    }
    if all || name == "spectral" {
        checks.extend(spectral_checks(params));
    }
    if all || name == "pushout" {
        checks.extend(pushout_checks());
    }
    if all || name == "geometry" {
        checks.extend(geometry_checks(params));
    }
    if all || name == "analysis" {
        checks.extend(analysis_checks(params));
    }
    if all || name == "characterization" {
        checks.extend(characterization_checks(params));
    }
    if checks.is_empty() {
        return Err(Error::InvalidParameter(format!(
            "unknown suite `{name}`; expected one of {}",
            SUITES.join(", ")
        )));
    }
    let start = Instant::now();
    let mut results: Vec<CheckResult> = match params.threads {
        Some(t) if t > 1 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
            pool.install(|| checks.par_iter().map(run_one).collect())
        }
        _ => checks.iter().map(run_one).collect(),
    };
    results.sort_by(|a, b| a.id.cmp(&b.id));
    let mut totals = Totals::default();
    for r in &results {
        match r.status {
            Status::Pass => totals.pass += 1,
            Status::Fail => totals.fail += 1,
            Status::Inconclusive => totals.inconclusive += 1,
        }
    }
    Ok(SuiteReport {
        suite: name.to_string(),
        params: json!({
            "max_n": params.max_n,
            "k": params.k,
            "input": params.input.as_ref().map(|a| a.label().to_string()),
        }),
        checks: results,
        totals,
        wall_clock_ms: params.timing.then(|| start.elapsed().as_millis()),
    })
}

/// Deterministic pairs of rational vectors with entries `p/q`,
/// `|p| <= 3`, `1 <= q <= 4`.
pub fn rational_probe_pairs(d: usize, count: usize) -> Vec<(Vector, Vector)> {
    let mut state: u64 = 0x2545_f491_4f6c_dd1d ^ d as u64;
    let mut next = move || {
        state = state
            .wrapping_mul(6_364_136_223_846_793_005)
            .wrapping_add(1_442_695_040_888_963_407);
        (state >> 33) as i64
    };
    let mut entry = || frac(next() % 7 - 3, next() % 4 + 1);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let a = Vector::new((0..d).map(|_| entry()).collect());
        let b = Vector::new((0..d).map(|_| entry()).collect());
        if !a.is_zero() && !b.is_zero() {
            out.push((a, b));
        }
    }
    out
}

fn first_table_mismatch(
    a: &Algebra,
    expected: impl Fn(usize, usize) -> Vector,
) -> Option<(usize, usize)> {
    (0..a.dim())
        .flat_map(|i| (0..a.dim()).map(move |j| (i, j)))
        .find(|&(i, j)| a.product(i, j) != expected(i, j))
}

fn mismatch_json(m: Option<(usize, usize)>) -> Value {
    m.map_or(Value::Null, json::pair)
}

fn basis_pairs(d: usize) -> impl Iterator<Item = (Vector, Vector)> {
    (0..d).flat_map(move |i| (0..d).map(move |j| (Vector::basis(d, i), Vector::basis(d, j))))
}

// ---------------------------------------------------------------- core

/// Unit case, squares, then `e_{2k} e_{2k+1} = e1 = -e_{2k+1} e_{2k}`.
fn case_table(d: usize, i: usize, j: usize) -> Vector {
    let mut v = Vector::zeros(d);
    if i == 0 {
        v[j] = one();
    } else if j == 0 {
        v[i] = one();
    } else if i == j {
        v[0] = -one();
    } else if i % 2 == 1 && j == i + 1 {
        v[0] = one();
    } else if j % 2 == 1 && i == j + 1 {
        v[0] = -one();
    }
    v
}

fn core_checks(p: &SuiteParams) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push(check(
            format!("core.01.case-table.n{n:02}"),
            format!("structure constants of V{} follow the three-case table", 2 * n + 1),
            move || {
                let v = vidinli(n)?;
                let d = v.dim();
                let m = first_table_mismatch(&v, |i, j| case_table(d, i, j));
                verdict(
                    m.is_none(),
                    json!({"dim": d, "nonzero_constants": v.nonzero_constant_count(), "first_mismatch": mismatch_json(m)}),
                )
            },
        ));
    }
    out.push(check(
        "core.02.v7-coordinate-formula",
        "V7 equals (a.e1)b + (b.e1)a - (a.b)e1 + (e1.(a x b))e1 on all 49 basis pairs",
        || {
            let v = vidinli(3)?;
            let e1 = Vector::basis(7, 0);
            let m = first_table_mismatch(&v, |i, j| {
                let (a, b) = (Vector::basis(7, i), Vector::basis(7, j));
                let mut out = b.scale(&a[0]);
                out.axpy(&b[0], &a);
                out.axpy(&-a.dot(&b), &e1);
                out.axpy(&cross7_formula(&a, &b).unwrap()[0], &e1);
                out
            });
            verdict(
                m.is_none(),
                json!({"pairs": 49, "first_mismatch": mismatch_json(m)}),
            )
        },
    ));
    out.push(check(
        "core.03.directional-axis",
        "the cross-product algebra with unit on e1 is V7",
        || {
            let ok = vidinli7_directional(0)?.same_table(&vidinli(3)?);
            verdict(ok, json!({"axis": 1}))
        },
    ));
    for n in 1..=p.max_n {
        out.push(check(
            format!("core.04.basic-identities.n{n:02}"),
            format!("V{} is unital, noncommutative and nonassociative", 2 * n + 1),
            move || {
                let v = vidinli(n)?;
                let unit = v.unit_law_failure();
                let comm = commutativity_witness(&v);
                let assoc = associativity_witness(&v);
                verdict(
                    unit.is_none() && comm.is_some() && assoc.is_some(),
                    json!({
                        "unit_law_failure": unit.map(|u| u + 1),
                        "noncommuting_pair": comm.map(json::pair),
                        "nonassociative_triple": assoc.map(|(a, b, c)| json!([a + 1, b + 1, c + 1])),
                    }),
                )
            },
        ));
        out.push(check(
            format!("core.05.quadratic-law.n{n:02}"),
            format!(
                "every x in V{} satisfies x*x = 2(x.e1)x - |x|^2 e1 (probe family)",
                2 * n + 1
            ),
            move || {
                let v = vidinli(n)?;
                let e1 = v.basis(0);
                let probes = probe_family(v.dim());
                let mut failures = Vec::new();
                for x in &probes {
                    let mut rhs = x.scale(&(int(2) * &x[0]));
                    rhs.axpy(&-x.norm_sq(), &e1);
                    if v.multiply(x, x)? != rhs {
                        failures.push(json::vector(x));
                    }
                }
                verdict(
                    failures.is_empty(),
                    json!({"probes": probes.len(), "failures": failures}),
                )
            },
        ));
        out.push(check(
            format!("core.06.conjugation.n{n:02}"),
            format!(
                "in V{} conj(a)*b + conj(b)*a = 2(a.b)e1 and conj(a)*a = a*conj(a) = |a|^2 e1 (basis pairs and 50 rational pairs)",
                2 * n + 1
            ),
            move || {
                let v = vidinli(n)?;
                let d = v.dim();
                let e1 = v.basis(0);
                let pairs: Vec<(Vector, Vector)> = basis_pairs(d).chain(rational_probe_pairs(d, 50)).collect();
                let mut failures = Vec::new();
                for (k, (a, b)) in pairs.iter().enumerate() {
                    let (ca, cb) = (conjugate(&v, a)?, conjugate(&v, b)?);
                    let polar = &v.multiply(&ca, b)? + &v.multiply(&cb, a)?;
                    let norm = e1.scale(&a.norm_sq());
                    let inv = inverse(&v, a)?;
                    let ok = polar == e1.scale(&(int(2) * a.dot(b)))
                        && v.multiply(&ca, a)? == norm
                        && v.multiply(a, &ca)? == norm
                        && v.multiply(&inv, a)? == e1
                        && v.multiply(a, &inv)? == e1;
                    if !ok {
                        failures.push(k);
                    }
                }
                verdict(failures.is_empty(), json!({"pairs": pairs.len(), "failing_indices": failures}))
            },
        ));
        out.push(check(
            format!("core.07.jordan-lie-split.n{n:02}"),
            format!(
                "in V{} a*b is the Jordan part plus omega(a,b)e1 (basis pairs)",
                2 * n + 1
            ),
            move || {
                let v = vidinli(n)?;
                let w = standard_symplectic(n)?;
                let e1 = v.basis(0);
                let mut failures = Vec::new();
                for (a, b) in basis_pairs(v.dim()) {
                    let j = jordan_part(&v, &a, &b)?;
                    let l = lie_part(&v, &a, &b)?;
                    if &j + &l != v.multiply(&a, &b)? || l != e1.scale(&w.eval_on_full(&a, &b)?) {
                        failures.push(json!([json::sparse(&a), json::sparse(&b)]));
                    }
                }
                verdict(failures.is_empty(), json!({"failures": failures}))
            },
        ));
    }
    out.push(check(
        "core.08.quaternion-pushforward",
        "pushing the quaternion product forward gives V3 on all 9 basis pairs",
        || {
            let v = vidinli(1)?;
            let mut failures: Vec<Value> = Vec::new();
            for i in 0..3 {
                for j in 0..3 {
                    if quaternion_pushforward(&v.basis(i), &v.basis(j))? != v.product(i, j) {
                        failures.push(json::pair((i, j)));
                    }
                }
            }
            verdict(failures.is_empty(), json!({"failures": failures}))
        },
    ));
    out.push(check(
        "core.09.coordinate-free-twist",
        "the coordinate-free product with twist vector (T,U,V) equals the twisted V3 table",
        || {
            let twists = [
                (int(1), int(0), int(0)),
                (int(1), int(1), int(0)),
                (int(0), int(0), int(0)),
                (int(2), int(-1), int(3)),
                (frac(1, 2), frac(1, 3), int(-1)),
            ];
            let mut failures = Vec::new();
            for (t, u, w) in &twists {
                let alg = twisted_v3(t, u, w);
                let tv = Vector::new(vec![t.clone(), u.clone(), w.clone()]);
                for i in 0..3 {
                    for j in 0..3 {
                        let got =
                            coordfree_product(&tv, &Vector::basis(3, i), &Vector::basis(3, j))?;
                        if got != alg.product(i, j) {
                            failures.push(
                                json!({"twist": json::vector(&tv), "pair": json::pair((i, j))}),
                            );
                        }
                    }
                }
            }
            verdict(
                failures.is_empty(),
                json!({"twists": twists.len(), "failures": failures}),
            )
        },
    ));
    out.push(check(
        "core.10.untwisted-is-v3",
        "the twist (1,0,0) serializes to the same bytes as V3",
        || {
            let a = json::algebra_to_string(&twisted_v3(&int(1), &int(0), &int(0)));
            let b = json::algebra_to_string(&vidinli(1)?);
            verdict(a == b, json!({"bytes": a.len()}))
        },
    ));
    out.push(check(
        "core.11.simplicity",
        "V3, V5 and J are simple; QxQ and the dual numbers have proper ideals",
        || {
            let mut w = serde_json::Map::new();
            let mut ok = true;
            for a in [vidinli(1)?, vidinli(2)?, mixed_pushout_j()?] {
                let s = is_simple_certified(&a)?;
                ok &= matches!(s, Simplicity::Simple { .. });
                w.insert(a.label().to_string(), json!(format!("{s:?}")));
            }
            for a in [rational_pair(), dual_numbers()] {
                let s = is_simple_certified(&a)?;
                let proper = match &s {
                    Simplicity::NotSimple { ideal, generator } => {
                        ideal.dim() > 0
                            && ideal.dim() < a.dim()
                            && ideal_closure(&a, &[generator.clone()])? == *ideal
                    }
                    _ => false,
                };
                ok &= proper;
                w.insert(a.label().to_string(), json!(proper));
            }
            verdict(ok, Value::Object(w))
        },
    ));
    out.push(check(
        "core.12.jordan-identity",
        "the linearized Jordan identity holds for VJ_m (m<=7), JSpin_n (n<=5) and J, and fails for V3",
        || {
            let mut jordan: Vec<Algebra> = (1..=7).map(vidinli_jordan).collect::<Result<_>>()?;
            jordan.extend((1..=5).map(jspin).collect::<Result<Vec<_>>>()?);
            jordan.push(mixed_pushout_j()?);
            let failing: Vec<String> = jordan
                .iter()
                .filter(|a| jordan_linearized_witness(a).is_some())
                .map(|a| a.label().to_string())
                .collect();
            let v3 = jordan_linearized_witness(&vidinli(1)?);
            verdict(
                failing.is_empty() && v3.is_some(),
                json!({
                    "algebras_checked": jordan.len(),
                    "failing": failing,
                    "v3_witness": v3.map(|(q, val)| json!({"tuple": q.map(|i| i + 1), "value": json::sparse(&val)})),
                }),
            )
        },
    ));
    out.push(check(
        "core.13.json-round-trip",
        "every constructor survives write and read bit-exactly",
        || {
            let mut algs = vec![
                vidinli(1)?,
                vidinli(2)?,
                vidinli_jordan(3)?,
                heisenberg(2)?,
                jspin(2)?,
                complex_algebra(),
                quaternions(),
                rational_pair(),
                dual_numbers(),
                rationals(),
                twisted_v3(&int(1), &int(1), &int(0)),
                vidinli7_directional(2)?,
                vidinli_type(2, &omega_tilde())?,
                mixed_pushout_j()?,
                degenerate_example_u()?,
            ];
            algs.push(reconstruct_product(3, &vidinli_labeling(3)?)?);
            let mut failing = Vec::new();
            for a in &algs {
                let s = json::algebra_to_string(a);
                let b = json::algebra_from_str(&s)?;
                if !a.same_table(&b) || a.label() != b.label() || json::algebra_to_string(&b) != s {
                    failing.push(a.label().to_string());
                }
            }
            verdict(
                failing.is_empty(),
                json!({"constructors": algs.len(), "failing": failing}),
            )
        },
    ));
    out
}

// ---------------------------------------------------------------- spectral

fn spectral_checks(p: &SuiteParams) -> Vec<Check> {
    let mut out = Vec::new();
    out.push(check(
        "spectral.01.example",
        "for a = e1 + e2 in V3 the characteristic polynomial is x^3 - 3x^2 + 4x - 2 and det L_a = 2",
        || {
            let r = spectral_report(1, &Vector::from_ints(&[1, 1, 0]))?;
            let expected = Polynomial::new(vec![int(-2), int(4), int(-3), int(1)]);
            verdict(
                r.oracle == expected && r.passed() && r.determinant == int(2),
                json!({"oracle": json::polynomial(&r.oracle), "determinant": json::rational(&r.determinant)}),
            )
        },
    ));
    for n in 1..=p.max_n {
        out.push(check(
            format!("spectral.02.left-spectrum.n{n:02}"),
            format!(
                "on the probe family of V{}: char poly of L_a is (x-a1)^(2n-1)((x-a1)^2+|u|^2), det L_a = a1^(2n-1)|a|^2, eigenspaces of dims (2n-1, 2) sum directly",
                2 * n + 1
            ),
            move || spectral_family(n, Side::Left),
        ));
        out.push(check(
            format!("spectral.03.zero-divisors.n{n:02}"),
            format!(
                "on the probe family of V{}: a is a zero divisor iff a.e1 = 0 iff det L_a = 0",
                2 * n + 1
            ),
            move || {
                let probes = probe_family(2 * n + 1);
                let mut count = 0;
                for a in &probes {
                    if is_zero_divisor(n, a)? {
                        count += 1;
                    }
                }
                let expected = probes.iter().filter(|a| a[0].is_zero()).count();
                verdict(
                    count == expected,
                    json!({"probes": probes.len(), "zero_divisors": count}),
                )
            },
        ));
    }
    for n in 1..=p.max_n.min(2) {
        out.push(check(
            format!("spectral.04.right-spectrum.n{n:02}"),
            format!(
                "right multiplication in V{} has the same spectral description",
                2 * n + 1
            ),
            move || spectral_family(n, Side::Right),
        ));
    }
    for n in 1..=p.max_n {
        out.push(check(
            format!("spectral.05.zero-product-lemma.n{n:02}"),
            format!(
                "for a, b in the probe family of e1-perp in V{}: a*b = 0 iff omega(a,b) = a.b",
                2 * n + 1
            ),
            move || zero_product_pairs(n),
        ));
    }
    out
}

fn spectral_family(n: usize, side: Side) -> Outcome {
    let probes = probe_family(2 * n + 1);
    let (mut closed, mut det, mut decomp, mut fallback) = (0, 0, 0, 0);
    for a in &probes {
        let r = spectral_report_side(n, a, side)?;
        closed += usize::from(!r.closed_form_matches());
        det += usize::from(!r.determinant_matches());
        decomp += usize::from(!r.decomposition_holds());
        fallback += usize::from(matches!(
            r.explicit_basis,
            crate::spectral::ExplicitBasis::KernelFallback
        ));
    }
    verdict(
        closed + det + decomp == 0,
        json!({
            "probes": probes.len(),
            "closed_form_mismatches": closed,
            "determinant_mismatches": det,
            "decomposition_failures": decomp,
            "kernel_fallbacks": fallback,
        }),
    )
}

/// All ordered pairs of probes supported on `e1^perp`, using one copy of
/// the algebra and the form.
pub fn zero_product_pairs(n: usize) -> Outcome {
    let v = vidinli(n)?;
    let w = standard_symplectic(n)?;
    let probes: Vec<Vector> = probe_family(2 * n)
        .into_iter()
        .map(|x| {
            let mut e = vec![Rational::zero()];
            e.extend(x.into_entries());
            Vector::new(e)
        })
        .collect();
    let mut zero = 0usize;
    let mut disagreements = Vec::new();
    for a in &probes {
        let la = v.left_mult_matrix(a)?;
        for b in &probes {
            let is_zero = la.mul_vec(b)?.is_zero();
            let lemma = w.eval_on_full(a, b)? == a.dot(b);
            zero += usize::from(is_zero);
            if is_zero != lemma && disagreements.len() < 5 {
                disagreements.push(json!([json::vector(a), json::vector(b)]));
            }
        }
    }
    verdict(
        disagreements.is_empty(),
        json!({"pairs": probes.len() * probes.len(), "zero_products": zero, "disagreements": disagreements}),
    )
}

// ---------------------------------------------------------------- pushout

fn tower_check(
    name: &'static str,
    base: fn() -> Result<Algebra>,
    target: fn(usize) -> Result<Algebra>,
    n: usize,
) -> Outcome {
    let b = base()?;
    let spec = PushoutSpec::new(vec![b.clone(); n], vec![vec![0]; n])?;
    let p = iterated_pushout(&b, &[0], n)?;
    let t = target(n)?;
    let diff = p.table_diff(&t)?;
    verdict(
        diff.is_empty() && spec.pushout_dim() == p.dim() && p.unit() == t.unit(),
        json!({
            "family": name,
            "dim": p.dim(),
            "dimension_formula": spec.pushout_dim(),
            "differing_products": diff.len(),
        }),
    )
}

fn pushout_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for n in 2..=5 {
        out.push(check(
            format!("pushout.01.vidinli-tower.n{n:02}"),
            format!("{n}-fold gluing of V3 along e1 is V{}", 2 * n + 1),
            move || tower_check("vidinli", || vidinli(1), vidinli, n),
        ));
        out.push(check(
            format!("pushout.02.heisenberg-tower.n{n:02}"),
            format!("{n}-fold gluing of h1 along its center is h{n}"),
            move || tower_check("heisenberg", || heisenberg(1), heisenberg, n),
        ));
        out.push(check(
            format!("pushout.03.jspin-tower.n{n:02}"),
            format!("{n}-fold gluing of JSpin1 along the unit is JSpin{n}"),
            move || tower_check("jspin", || jspin(1), jspin, n),
        ));
    }
    for k in 2..=4 {
        out.push(check(
            format!("pushout.04.complex-tower.k{k:02}"),
            format!(
                "{k}-fold gluing of C has i_j i_j = -1, i_j i_l = 0 and dimension {}",
                k + 1
            ),
            move || {
                let c = iterated_pushout(&complex_algebra(), &[0], k)?;
                let d = k + 1;
                let m = first_table_mismatch(&c, |i, j| {
                    let mut v = Vector::zeros(d);
                    if i == 0 {
                        v[j] = one();
                    } else if j == 0 {
                        v[i] = one();
                    } else if i == j {
                        v[0] = -one();
                    }
                    v
                });
                verdict(
                    m.is_none() && c.dim() == d && commutativity_witness(&c).is_none(),
                    json!({"dim": c.dim(), "first_mismatch": mismatch_json(m)}),
                )
            },
        ));
    }
    out.push(check(
        "pushout.05.mixed-j",
        "C glued to JSpin1 is commutative with i^2 = -1, v^2 = 1, iv = 0 and is not associative",
        || {
            let j = mixed_pushout_j()?;
            let m = first_table_mismatch(&j, |a, b| {
                let mut v = Vector::zeros(3);
                match (a, b) {
                    (0, x) | (x, 0) => v[x] = one(),
                    (1, 1) => v[0] = -one(),
                    (2, 2) => v[0] = one(),
                    _ => {}
                }
                v
            });
            let assoc = associativity_witness(&j);
            verdict(
                m.is_none() && assoc.is_some() && commutativity_witness(&j).is_none(),
                json!({"first_mismatch": mismatch_json(m), "nonassociative_triple": assoc.map(|(a, b, c)| json!([a + 1, b + 1, c + 1]))}),
            )
        },
    ));
    out.push(check(
        "pushout.06.dimension-formula",
        "the glued algebra has dimension dim Z + sum of (dim A_i - dim Z)",
        || {
            let cases = vec![
                (
                    vec![vidinli(1)?, vidinli(2)?, complex_algebra()],
                    vec![vec![0]; 3],
                ),
                (vec![vidinli(2)?, vidinli(2)?], vec![vec![0, 1, 3]; 2]),
                (vec![heisenberg(1)?, heisenberg(2)?], vec![vec![0]; 2]),
                (vec![jspin(2)?, vidinli_jordan(3)?], vec![vec![0]; 2]),
            ];
            let mut rows = Vec::new();
            let mut ok = true;
            for (algs, z) in cases {
                let zd = z[0].len();
                let formula = zd + algs.iter().map(|a| a.dim() - zd).sum::<usize>();
                let spec = PushoutSpec::new(algs, z)?;
                let d = degenerate_pushout(&spec)?.algebra.dim();
                ok &= d == formula && spec.pushout_dim() == formula;
                rows.push(json!({"dim": d, "formula": formula}));
            }
            verdict(ok, Value::Array(rows))
        },
    ));
    out.push(check(
        "pushout.07.jordan-preserved",
        "gluing Jordan algebras gives a Jordan algebra",
        || {
            let cases = vec![
                vec![jspin(2)?, jspin(3)?],
                vec![vidinli_jordan(2)?, vidinli_jordan(3)?],
                vec![jspin(1)?, vidinli_jordan(4)?, jspin(2)?],
            ];
            let mut failing = Vec::new();
            for algs in cases {
                let z = vec![vec![0]; algs.len()];
                let p = degenerate_pushout(&PushoutSpec::new(algs, z)?)?.algebra;
                if jordan_linearized_witness(&p).is_some() {
                    failing.push(p.label().to_string());
                }
            }
            verdict(failing.is_empty(), json!({"failing": failing}))
        },
    ));
    out.push(check(
        "pushout.08.heisenberg-class-two",
        "gluing Heisenberg algebras along the center keeps nilpotency class 2",
        || {
            let mut classes = Vec::new();
            let mut ok = true;
            for (a, b) in [(1, 1), (1, 2), (2, 3)] {
                let spec =
                    PushoutSpec::new(vec![heisenberg(a)?, heisenberg(b)?], vec![vec![0], vec![0]])?;
                let c = nilpotency_class(&degenerate_pushout(&spec)?.algebra)?;
                ok &= c == Nilpotency::Class(2);
                classes.push(json!(format!("{c:?}")));
            }
            verdict(ok, json!({"classes": classes}))
        },
    ));
    out.push(check(
        "pushout.09.complex-nonassociative",
        "in C glued to C, (i1 i1) i2 = -i2 differs from i1 (i1 i2) = 0",
        || {
            let c = iterated_pushout(&complex_algebra(), &[0], 2)?;
            let (i1, i2) = (c.basis(1), c.basis(2));
            let lhs = c.multiply(&c.multiply(&i1, &i1)?, &i2)?;
            let rhs = c.multiply(&i1, &c.multiply(&i1, &i2)?)?;
            verdict(
                lhs != rhs && lhs == -&i2 && rhs.is_zero(),
                json!({"left": json::sparse(&lhs), "right": json::sparse(&rhs)}),
            )
        },
    ));
    out.push(check(
        "pushout.10.simplicity-criterion",
        "C glued to C is simple (i*i = -1); the dual numbers glued to themselves contain the ideal spanned by eps1",
        || {
            let c = complex_algebra();
            let cspec = PushoutSpec::new(vec![c.clone(), c], vec![vec![0], vec![0]])?;
            let cp = degenerate_pushout(&cspec)?.algebra;
            let pair = scalar_product_pair(&cspec, 0);
            let simple = is_simple_certified(&cp)?;
            let eps = dual_numbers();
            let espec = PushoutSpec::new(vec![eps.clone(), eps], vec![vec![0], vec![0]])?;
            let ep = degenerate_pushout(&espec)?.algebra;
            let ideal = ideal_closure(&ep, &[ep.basis(1)])?;
            let es = is_simple_certified(&ep)?;
            verdict(
                matches!(simple, Simplicity::Simple { .. })
                    && pair.is_some()
                    && scalar_product_pair(&espec, 0).is_none()
                    && ideal == Subspace::coordinate(3, &[1])
                    && matches!(es, Simplicity::NotSimple { .. }),
                json!({
                    "complex_pair": pair.map(json::pair),
                    "complex": format!("{simple:?}"),
                    "dual_ideal": json::subspace(&ideal),
                }),
            )
        },
    ));
    out.push(check(
        "pushout.11.universal-property",
        "maps from V3 and V3 agreeing on e1 factor uniquely through the glued algebra",
        || {
            let v3 = vidinli(1)?;
            let v5 = vidinli(2)?;
            let spec = PushoutSpec::new(vec![v3.clone(), v3.clone()], vec![vec![0], vec![0]])?;
            let maps = degenerate_pushout(&spec)?.embeddings;
            let phi = check_universal_property(&spec, &v5, &maps)?;
            let q = rationals();
            let collapse = Morphism::from_images(
                v3.clone(),
                q.clone(),
                &[Vector::from_ints(&[1]), Vector::zeros(1), Vector::zeros(1)],
            )?;
            let rejected =
                check_universal_property(&spec, &q, &[collapse.clone(), collapse]).is_err();
            verdict(
                *phi.matrix() == Matrix::identity(5) && rejected,
                json!({"mediating_map": json::morphism(&phi), "non_morphism_rejected": rejected}),
            )
        },
    ));
    out.push(check(
        "pushout.12.gluing-associative",
        "(A glued to B) glued to C equals A glued to (B glued to C)",
        || {
            let (a, b, c) = (vidinli(1)?, vidinli(2)?, complex_algebra());
            let glue = |x: Algebra, y: Algebra| -> Result<Algebra> {
                Ok(
                    degenerate_pushout(&PushoutSpec::new(vec![x, y], vec![vec![0], vec![0]])?)?
                        .algebra,
                )
            };
            let left = glue(glue(a.clone(), b.clone())?, c.clone())?;
            let right = glue(a.clone(), glue(b.clone(), c.clone())?)?;
            let flat =
                degenerate_pushout(&PushoutSpec::new(vec![a, b, c], vec![vec![0]; 3])?)?.algebra;
            verdict(
                left.same_table(&right) && left.same_table(&flat),
                json!({"dim": left.dim()}),
            )
        },
    ));
    out.push(check(
        "pushout.13.degenerate-example",
        "V5 glued to V5 over span{e1,e2,e4} is 7-dimensional with a rank-4 form whose radical has dimension 2",
        || {
            let u = degenerate_example_u()?;
            let (rank, radical) = match extract_omega(&u)? {
                Ok(w) => (w.rank(), w.radical().dim()),
                Err(f) => return verdict(false, json!({"unexpected": format!("{f:?}")})),
            };
            verdict(u.dim() == 7 && rank == 4 && radical == 2, json!({"dim": u.dim(), "rank": rank, "radical_dim": radical}))
        },
    ));
    out.push(check(
        "pushout.14.embeddings",
        "every component embedding of a three-fold gluing is a morphism",
        || {
            let v3 = vidinli(1)?;
            let spec = PushoutSpec::new(vec![v3.clone(); 3], vec![vec![0]; 3])?;
            let maps = degenerate_pushout(&spec)?.embeddings;
            let ok: Vec<bool> = maps
                .iter()
                .map(|m| check_morphism(m) && m.is_injective())
                .collect();
            verdict(ok.iter().all(|&b| b), json!({"embeddings": ok}))
        },
    ));
    out
}

// ---------------------------------------------------------------- geometry

fn count_claim(k: usize) -> String {
    match k {
        3 => "PG(2,2) has 7 points and 7 lines".to_string(),
        4 => "PG(3,2) has 15 points, 35 lines and 15 planes".to_string(),
        _ => format!("flat counts of PG({},2) are Gaussian binomials", k - 1),
    }
}

fn geometry_checks(p: &SuiteParams) -> Vec<Check> {
    let mut out = Vec::new();
    for k in 2..=p.k {
        out.push(check(
            format!("geometry.01.counts.k{k:02}"),
            count_claim(k),
            move || {
                let s = pg(k)?;
                let counts: Vec<usize> = s.flats.values().map(Vec::len).collect();
                let expected: Vec<usize> =
                    (1..=k).map(|d| gaussian_binomial(k, d) as usize).collect();
                let mut w = json!({
                    "points": s.points.len(),
                    "lines": s.lines.len(),
                    "flats_by_rank": counts,
                    "gaussian_binomials": expected,
                });
                if k >= 4 {
                    w["planes"] = json!(s.flats.get(&2).map_or(0, Vec::len));
                }
                verdict(counts == expected && s.points.len() == (1 << k) - 1, w)
            },
        ));
    }
    for k in 3..=p.k {
        out.push(check(
            format!("geometry.02.flat-classes.k{k:02}"),
            format!(
                "the hyperplanes of PG({},2) split into {} anti-chains and {} VJ-chains",
                k - 1,
                (1usize << (k - 1)) - 1,
                1usize << (k - 1)
            ),
            move || {
                let s = pg(k)?;
                let l = vidinli_labeling(k)?;
                let cs = classify_flats(&s, &l);
                let count = |kind| cs.iter().filter(|c| c.class == kind).count();
                let (anti, vj, neither) = (
                    count(FlatKind::AntiChain),
                    count(FlatKind::VjChain),
                    count(FlatKind::Neither),
                );
                verdict(
                    l.violation(&s).is_none()
                        && anti == (1 << (k - 1)) - 1
                        && vj == 1 << (k - 1)
                        && neither == 0,
                    json!({"anti_chains": anti, "vj_chains": vj, "neither": neither}),
                )
            },
        ));
        out.push(check(
            format!("geometry.03.reconstruct.k{k:02}"),
            format!(
                "local rules on the hyperplanes of PG({},2) assemble to V{}",
                k - 1,
                (1usize << k) - 1
            ),
            move || {
                let l = vidinli_labeling(k)?;
                let rules = local_rules(k, &l)?;
                let a = assemble((1 << k) - 1, &rules)?;
                let target = vidinli((1 << (k - 1)) - 1)?;
                verdict(
                    a.same_table(&target),
                    json!({"rules": rules.len(), "nontrivial_overlaps": nontrivial_overlaps(&rules)}),
                )
            },
        ));
    }
    out.push(check(
        "geometry.04.fano-audit",
        "in V7 the 3 lines through e1 span copies of V3 and the other 4 with e1 span copies of VJ4",
        || {
            let a = fano_subalgebra_audit(&vidinli(3)?)?;
            verdict(
                a.passed() && a.count(true) == 3 && a.count(false) == 4,
                serde_json::to_value(&a).expect("plain data"),
            )
        },
    ));
    out.push(check(
        "geometry.05.degenerate-audit",
        "the audit fails when the skew part is zero",
        || {
            let zero = SkewForm::new(Matrix::zeros(6, 6))?;
            let a = fano_subalgebra_audit(&vidinli_type(3, &zero)?)?;
            verdict(
                !a.passed(),
                json!({"failing_lines": a.lines.iter().filter(|l| !l.matches_model).count()}),
            )
        },
    ));
    out.push(check(
        "geometry.06.conflict-detected",
        "a sign flip in one anti-chain rule is reported as a conflict on e2 e3",
        || {
            let l = vidinli_labeling(4)?;
            let mut rules = local_rules(4, &l)?;
            let r = rules
                .iter_mut()
                .find(|r| {
                    r.kind == FlatKind::AntiChain && r.flat.contains(&2) && r.flat.contains(&3)
                })
                .ok_or_else(|| Error::CrossCheck("no anti-chain through 2 and 3".into()))?;
            let v = r
                .products
                .get_mut(&(1, 2))
                .ok_or_else(|| Error::CrossCheck("missing product".into()))?;
            *v = -&*v;
            let got = assemble(15, &rules);
            verdict(
                matches!(got, Err(Error::CompatibilityConflict { pair: (1, 2), .. })),
                json!({"result": got.err().map(|e| e.to_string())}),
            )
        },
    ));
    out.push(check(
        "geometry.07.coverage-gap",
        "dropping the VJ-chain rules of the Fano plane leaves e2 e4 uncovered",
        || {
            let mut rules = local_rules(3, &vidinli_labeling(3)?)?;
            rules.retain(|r| r.kind != FlatKind::VjChain);
            let got = assemble(7, &rules);
            verdict(
                matches!(got, Err(Error::CoverageGap { pair: (1, 3) })),
                json!({"result": got.err().map(|e| e.to_string())}),
            )
        },
    ));
    out
}

// ---------------------------------------------------------------- analysis

fn analysis_checks(p: &SuiteParams) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=p.max_n {
        let d = 2 * n + 1;
        out.push(check(
            format!("analysis.01.multiplication-algebra.n{n:02}"),
            format!("the multiplication algebra of V{d} has dimension {}", d * d),
            move || {
                let m = multiplication_algebra(&vidinli(n)?)?;
                verdict(m.dim() == d * d, json!({"dim": m.dim()}))
            },
        ));
        out.push(check(
            format!("analysis.03.centroid-derivations.n{n:02}"),
            format!(
                "V{d} has a 1-dimensional centroid, {}-dimensional derivations and is Azumaya",
                n * n
            ),
            move || {
                let v = vidinli(n)?;
                let c = centroid(&v)?.dim();
                let der = derivations(&v)?.dim();
                let az = is_azumaya(&v)?;
                verdict(
                    c == 1 && der == n * n && az,
                    json!({"centroid": c, "derivations": der, "azumaya": az}),
                )
            },
        ));
        out.push(check(
            format!("analysis.04.idempotents.n{n:02}"),
            format!("the only idempotents of V{d} are 0 and e1"),
            move || {
                let r = find_idempotents_vidinli(n)?;
                let v = vidinli(n)?;
                let x = &v.basis(0).scale(&frac(1, 2)) + &v.basis(1);
                let not_idem = v.multiply(&x, &x)? != x;
                verdict(
                    r.idempotents.len() == 2 && not_idem && r.forced_norm_sq < Rational::zero(),
                    json!({"idempotents": r.idempotents.iter().map(json::sparse).collect::<Vec<_>>(), "forced_norm_sq": json::rational(&r.forced_norm_sq)}),
                )
            },
        ));
        out.push(check(
            format!("analysis.05.automorphism-probes.n{n:02}"),
            format!("a probe map of V{d} is an automorphism exactly when it is orthogonal and symplectic on e1-perp"),
            move || {
                let probes = automorphism_probes(n)?;
                let bad: Vec<&str> = probes
                    .iter()
                    .filter(|p| p.is_morphism != (p.orthogonal && p.symplectic))
                    .map(|p| p.name.as_str())
                    .collect();
                verdict(bad.is_empty(), json!({"probes": probes.len(), "inconsistent": bad}))
            },
        ));
        out.push(check(
            format!("analysis.06.heisenberg.n{n:02}"),
            format!(
                "the commutator algebra of V{d} is Heisenberg: class 2, center Qe1, Jacobi holds"
            ),
            move || {
                let r = heisenberg_check(n)?;
                verdict(
                    r.passed(),
                    json!({
                        "axis_central": r.axis_central,
                        "bracket_relations": r.bracket_relations,
                        "class": format!("{:?}", r.class),
                        "center_dim": r.center.dim(),
                        "isomorphism_holds": r.isomorphism_holds,
                    }),
                )
            },
        ));
        out.push(check(
            format!("analysis.07.j-map.n{n:02}"),
            format!("on e1-perp of V{d}, J^2 = -I and omega(u,v) = (Ju).v, and J is the unique such map on probes"),
            move || {
                let mut ok = true;
                for i in 1..d {
                    let u = Vector::basis(d, i);
                    let ju = j_map(n, &u)?;
                    ok &= j_map(n, &ju)? == -&u;
                    for j in 1..d {
                        let v = Vector::basis(d, j);
                        ok &= omega(n, &u, &v)? == ju.dot(&v);
                    }
                }
                let unique = j_uniqueness_check(n, &Vector::basis(d, 1))?;
                verdict(ok && unique, json!({"identities": ok, "unique": unique}))
            },
        ));
        if n >= 2 {
            out.push(check(
                format!("analysis.09.embeddings.n{n:02}"),
                format!("orthonormal pairs with omega = 1 embed V3 and V5 injectively in V{d}"),
                move || {
                    let e = |i| Vector::basis(d, i);
                    let rotated = &e(1).scale(&frac(3, 5)) + &e(3).scale(&frac(4, 5));
                    let rotated_j = &e(2).scale(&frac(3, 5)) + &e(4).scale(&frac(4, 5));
                    let ms = [
                        embed_sub_vidinli(n, &[(e(1), e(2))])?,
                        embed_sub_vidinli(n, &[(rotated, rotated_j)])?,
                        embed_sub_vidinli(n, &[(e(1), e(2)), (e(3), e(4))])?,
                    ];
                    let ok: Vec<bool> = ms
                        .iter()
                        .map(|m| m.is_injective() && check_morphism(m))
                        .collect();
                    verdict(ok.iter().all(|&b| b), json!({"embeddings": ok}))
                },
            ));
        }
    }
    out.push(check(
        "analysis.02.matrix-units",
        "in V3, -(L_e3 - R_e3)/2, (L_e2 - R_e2)/2, L_e2 + E12 - E13 and L_e3 + E12 + E13 are the units E12, E13, E21, E31",
        || {
            let v = vidinli(1)?;
            let (l2, r2) = (v.left_mult_matrix(&v.basis(1))?, v.right_mult_matrix(&v.basis(1))?);
            let (l3, r3) = (v.left_mult_matrix(&v.basis(2))?, v.right_mult_matrix(&v.basis(2))?);
            let half = frac(1, 2);
            let e12 = l3.sub(&r3)?.scale(&-&half);
            let e13 = l2.sub(&r2)?.scale(&half);
            let e21 = l2.add(&e12)?.sub(&e13)?;
            let e31 = l3.add(&e12)?.add(&e13)?;
            let unit = |r: usize, c: usize| {
                let mut m = Matrix::zeros(3, 3);
                m.set(r, c, one());
                m
            };
            let ok = [(e12.clone(), unit(0, 1)), (e13.clone(), unit(0, 2)), (e21.clone(), unit(1, 0)), (e31.clone(), unit(2, 0))];
            verdict(
                ok.iter().all(|(a, b)| a == b),
                json!({"E12": json::matrix(&e12), "E13": json::matrix(&e13), "E21": json::matrix(&e21), "E31": json::matrix(&e31)}),
            )
        },
    ));
    for n in 1..=p.max_n.min(3) {
        out.push(check(
            format!("analysis.08.rho.n{n:02}"),
            format!(
                "the semidirect product u({n}) x h{n} acts on V{} by derivations compatible with brackets",
                2 * n + 1
            ),
            move || {
                let r = rho_report(n)?;
                verdict(
                    r.passed(),
                    json!({
                        "spanning_set": r.spanning_set_size,
                        "derivation_dim": r.derivation_dim,
                        "homomorphism_failures": r.homomorphism_failures.len(),
                        "operator_action": r.operator_action_holds,
                        "heisenberg_action": r.heisenberg_action_holds,
                        "mixed_bracket": r.mixed_bracket_holds,
                        "jacobi_triples": r.jacobi_triples_checked,
                    }),
                )
            },
        ));
    }
    out.push(check(
        "analysis.10.cross-product",
        "the 21 basis cross products follow the Fano lines, e1.(u x v) = omega(u,v) and a x b = half the sum of the axis commutators",
        || {
            let c = cross7();
            let lines = vidinli_labeling(3)?.labeled_lines(&pg(3)?);
            let mut off_line = Vec::new();
            for ((i, j), w) in c.upper_pairs() {
                let supp: Vec<(usize, Rational)> = w.support().map(|(k, x)| (k, x.clone())).collect();
                let ok = supp.len() == 1 && {
                    let (k, x) = &supp[0];
                    let mut t = [i + 1, j + 1, k + 1];
                    t.sort_unstable();
                    (x.is_one() || (-x).is_one()) && lines.contains(&t)
                };
                if !ok {
                    off_line.push(json::pair((i, j)));
                }
            }
            let r = cross7_checks()?;
            verdict(
                off_line.is_empty() && r.passed(),
                json!({
                    "pairs": 21,
                    "off_line": off_line,
                    "omega_failures": r.omega_failures.len(),
                    "decomposition_failures": r.decomposition_failures.len(),
                    "axis_planes": r.axis_planes.len(),
                }),
            )
        },
    ));
    out.push(check(
        "analysis.11.three-planes",
        "span{e1,u,v} for orthonormal u, v in e1-perp of V5 is a copy of V3 exactly when omega(u,v) = +-1 (20 probes)",
        || {
            let n = 2;
            let probes = unit_probes(n);
            let mut pairs = Vec::new();
            'outer: for (a, u) in probes.iter().enumerate() {
                for v in probes.iter().skip(a + 1) {
                    if u.dot(v).is_zero() && (u + v).norm_sq() != int(0) {
                        pairs.push((u.clone(), v.clone()));
                        if pairs.len() == 20 {
                            break 'outer;
                        }
                    }
                }
            }
            let mut yes = 0;
            let mut wrong = Vec::new();
            for (u, v) in &pairs {
                let w = omega(n, u, v)?;
                let expect = w.is_one() || (-&w).is_one();
                let got = matches!(classify_3plane(n, u, v)?, ThreePlane::IsV3 { .. });
                yes += usize::from(got);
                if got != expect {
                    wrong.push(json!([json::vector(u), json::vector(v)]));
                }
            }
            verdict(
                wrong.is_empty() && pairs.len() == 20 && yes > 0 && yes < 20,
                json!({"probes": pairs.len(), "copies_of_v3": yes, "disagreements": wrong}),
            )
        },
    ));
    for n in 2..=3 {
        out.push(check(
            format!("analysis.12.lagrangians.n{n:02}"),
            format!(
                "coordinate Lagrangians of V{} correspond bijectively to maximal Jordan subalgebras of dimension {}",
                2 * n + 1,
                n + 1
            ),
            move || {
                let r = lagrangian_correspondence(n)?;
                verdict(r.passed() && r.lagrangians == 1 << n, serde_json::json!(format!("{r:?}")))
            },
        ));
    }
    out.push(check(
        "analysis.13.principal-plane",
        "span{e1,u} for the unit u = (3/5)e1 + (4/5)e2 multiplies as a quadratic extension with discriminant 4(alpha^2 - 1) < 0",
        || {
            let u = Vector::new(vec![frac(3, 5), frac(4, 5), int(0), int(0), int(0)]);
            let (holds, disc) = principal_plane_law(2, &u)?;
            verdict(holds && disc < Rational::zero(), json!({"law_holds": holds, "discriminant": json::rational(&disc)}))
        },
    ));
    out
}

// ---------------------------------------------------------------- characterization

fn characterization_checks(p: &SuiteParams) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=p.max_n {
        out.push(check(
            format!("characterization.01.vidinli.n{n:02}"),
            format!("V{} is recognized with its standard form", 2 * n + 1),
            move || {
                let v = vidinli(n)?;
                let r = classify(&v)?;
                let ok = matches!(&r, Verdict::IsVidinli { n: m, to_standard: Some(_), .. } if *m == n) && r.reverify(&v);
                verdict(ok, json::verdict(&r))
            },
        ));
    }
    out.push(check(
        "characterization.02.twisted",
        "the twist (1,1,0) fails the skew-part condition at (e2,e3) with a re-verifiable witness",
        || {
            let a = twisted_v3(&int(1), &int(1), &int(0));
            let r = classify(&a)?;
            let ok = matches!(
                &r,
                Verdict::FailsVb(VbFailure::OffAxisSkew { pair: (1, 2), .. })
            ) && r.reverify(&a);
            verdict(ok, json::verdict(&r))
        },
    ));
    out.push(check(
        "characterization.03.degenerate-example",
        "the degenerate gluing fails because its form has a 2-dimensional radical",
        || {
            let a = degenerate_example_u()?;
            let r = classify(&a)?;
            let ok = matches!(&r, Verdict::FailsVb(VbFailure::Degenerate { radical, .. }) if radical.dim() == 2)
                && r.reverify(&a);
            verdict(ok, json::verdict(&r))
        },
    ));
    out.push(check(
        "characterization.04.round-trip",
        "the form is recovered exactly from the Vidinli-type algebra of each of ten nondegenerate forms",
        || {
            let forms = round_trip_forms();
            let mut failing = Vec::new();
            for (i, w) in forms.iter().enumerate() {
                let a = vidinli_type(w.n(), w)?;
                let r = classify(&a)?;
                let ok = matches!(&r, Verdict::IsVidinli { omega, .. } if omega == w) && r.reverify(&a);
                if !ok {
                    failing.push(i);
                }
            }
            verdict(failing.is_empty(), json!({"forms": forms.len(), "failing": failing}))
        },
    ));
    out.push(check(
        "characterization.05.omega-tilde",
        "the algebra of the coupled form omega-tilde differs from V5 only at e3*e4 (0 versus e1) and its mirror",
        || {
            let a = vidinli_type(2, &omega_tilde())?;
            let diff = a.table_diff(&vidinli(2)?)?;
            let pairs: Vec<(usize, usize)> = diff.iter().map(|(i, j, _, _)| (*i, *j)).collect();
            let e34 = diff.iter().find(|(i, j, _, _)| (*i, *j) == (2, 3));
            let ok = pairs == [(2, 3), (3, 2)]
                && e34.is_some_and(|(_, _, ours, theirs)| *ours == Vector::basis(5, 0) && theirs.is_zero());
            let r = classify(&a)?;
            let recovered = matches!(&r, Verdict::IsVidinli { omega, to_standard: None, .. } if *omega == omega_tilde());
            verdict(
                ok && recovered,
                json!({
                    "differing_pairs": pairs.iter().map(|&p| json::pair(p)).collect::<Vec<_>>(),
                    "e3e4": e34.map(|(_, _, ours, theirs)| json!({"omega_tilde": json::sparse(ours), "standard": json::sparse(theirs)})),
                    "recovered": recovered,
                }),
            )
        },
    ));
    out.push(check(
        "characterization.06.jordan-fails",
        "VJ5 has no skew part, so its form is zero and it is rejected",
        || {
            let a = vidinli_jordan(5)?;
            let r = classify(&a)?;
            let ok = matches!(&r, Verdict::FailsVb(VbFailure::Degenerate { rank: 0, .. }))
                && r.reverify(&a);
            verdict(ok, json::verdict(&r))
        },
    ));
    out.push(check(
        "characterization.07.not-applicable",
        "even-dimensional algebras are outside the recognizer",
        || {
            let a = quaternions();
            let r = classify(&a)?;
            verdict(
                matches!(r, Verdict::NotApplicable { .. }) && r.reverify(&a),
                json::verdict(&r),
            )
        },
    ));
    if let Some(input) = p.input.clone() {
        out.push(check(
            "characterization.08.input",
            "the supplied algebra receives a verdict whose witness re-verifies",
            move || {
                let r = classify(&input)?;
                let mut w = json::verdict(&r);
                w["label"] = json!(input.label());
                verdict(r.reverify(&input), w)
            },
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suite("nope", &SuiteParams::default()).is_err());
    }

    #[test]
    fn probe_pairs_are_deterministic() {
        assert_eq!(rational_probe_pairs(5, 50), rational_probe_pairs(5, 50));
        assert_eq!(rational_probe_pairs(5, 50).len(), 50);
    }

    #[test]
    fn geometry_report_mentions_planes() {
        let p = SuiteParams {
            max_n: 1,
            ..Default::default()
        };
        let r = run_suite("geometry", &p).unwrap();
        assert!(
            r.passed(),
            "{:#?}",
            r.checks
                .iter()
                .filter(|c| c.status != Status::Pass)
                .collect::<Vec<_>>()
        );
        let c = r.get("geometry.01.counts.k04").unwrap();
        assert!(c.claim.contains("15 planes"));
        assert_eq!(c.witness["planes"], 15);
    }

    #[test]
    fn thread_count_does_not_change_report() {
        let p = SuiteParams {
            max_n: 1,
            ..Default::default()
        };
        let serial = run_suite("pushout", &p).unwrap();
        let parallel = run_suite(
            "pushout",
            &SuiteParams {
                threads: Some(3),
                ..p
            },
        )
        .unwrap();
        assert_eq!(serial, parallel);
        assert!(
            serial.passed(),
            "{:#?}",
            serial
                .checks
                .iter()
                .filter(|c| c.status != Status::Pass)
                .collect::<Vec<_>>()
        );
    }
}
