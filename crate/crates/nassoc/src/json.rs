//! JSON structure-constant files and JSON renderings of library values.
//!
//! Files use 1-based basis indices and exact rationals written `p/q`:
//!
//! ```json
//! {"label": "V3", "dim": 3, "unit": 1,
//!  "constants": [{"i": 2, "j": 3, "k": 1, "value": "1/1"}]}
//! ```

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{Algebra, Morphism};
use crate::characterization::{VbFailure, Verdict};
use crate::error::{Error, Result};
use crate::linalg::rational::{parse_strict, to_canonical};
use crate::linalg::{Matrix, Polynomial, Rational, Subspace, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstantJson {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub label: String,
    pub dim: usize,
    pub unit: Option<usize>,
    pub constants: Vec<ConstantJson>,
}

impl From<&Algebra> for AlgebraJson {
    fn from(a: &Algebra) -> Self {
        let mut constants = Vec::new();
        for (&(i, j), v) in a.products() {
            for (k, x) in v.support() {
                constants.push(ConstantJson {
                    i: i + 1,
                    j: j + 1,
                    k: k + 1,
                    value: to_canonical(x),
                });
            }
        }
        AlgebraJson {
            label: a.label().to_string(),
            dim: a.dim(),
            unit: a.unit().map(|u| u + 1),
            constants,
        }
    }
}

impl AlgebraJson {
    pub fn to_algebra(&self) -> Result<Algebra> {
        let d = self.dim;
        if d == 0 {
            return Err(Error::Parse("`dim` must be positive".into()));
        }
        let one_based = |name: &str, x: usize| {
            if (1..=d).contains(&x) {
                Ok(x - 1)
            } else {
                Err(Error::Parse(format!("`{name}` = {x} is outside 1..={d}")))
            }
        };
        let unit = self.unit.map(|u| one_based("unit", u)).transpose()?;
        let mut a = Algebra::new(self.label.clone(), d, unit)?;
        let mut seen = BTreeSet::new();
        let mut rows: std::collections::BTreeMap<(usize, usize), Vector> = Default::default();
        for (n, c) in self.constants.iter().enumerate() {
            let (i, j, k) = (
                one_based("i", c.i)?,
                one_based("j", c.j)?,
                one_based("k", c.k)?,
            );
            if !seen.insert((i, j, k)) {
                return Err(Error::Parse(format!(
                    "constant {} repeats (i, j, k) = ({}, {}, {})",
                    n + 1,
                    c.i,
                    c.j,
                    c.k
                )));
            }
            let x = parse_strict(&c.value)
                .map_err(|e| Error::Parse(format!("constant {}: {e}", n + 1)))?;
            rows.entry((i, j)).or_insert_with(|| Vector::zeros(d))[k] = x;
        }
        for ((i, j), v) in rows {
            a.set_product(i, j, v)?;
        }
        if let Some(bad) = a.unit_law_failure() {
            return Err(Error::BadUnit(bad));
        }
        Ok(a)
    }
}

pub fn algebra_to_string(a: &Algebra) -> String {
    let mut s = serde_json::to_string_pretty(&AlgebraJson::from(a)).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn algebra_from_str(s: &str) -> Result<Algebra> {
    let parsed: AlgebraJson = serde_json::from_str(s).map_err(|e| {
        let msg = e.to_string();
        let suffix = format!(" at line {} column {}", e.line(), e.column());
        let msg = msg.strip_suffix(&suffix).unwrap_or(&msg);
        Error::Parse(format!("line {}, column {}: {msg}", e.line(), e.column()))
    })?;
    parsed.to_algebra()
}

pub fn rational(x: &Rational) -> Value {
    Value::String(to_canonical(x))
}

pub fn vector(v: &Vector) -> Value {
    Value::Array(v.entries().iter().map(rational).collect())
}

pub fn subspace(s: &Subspace) -> Value {
    json!({
        "dim": s.dim(),
        "basis": s.basis().iter().map(vector).collect::<Vec<_>>(),
    })
}

pub fn matrix(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|r| vector(&m.row_vector(r))).collect())
}

pub fn polynomial(p: &Polynomial) -> Value {
    json!({
        "coefficients_ascending": p.coeffs().iter().map(rational).collect::<Vec<_>>(),
        "text": p.to_string(),
    })
}

pub fn morphism(m: &Morphism) -> Value {
    json!({
        "source": m.source().label(),
        "target": m.target().label(),
        "matrix": matrix(m.matrix()),
    })
}

/// 1-based basis pair.
pub fn pair(p: (usize, usize)) -> Value {
    json!([p.0 + 1, p.1 + 1])
}

/// Nonzero entries of a vector as `{"e3": "1/2"}`.
pub fn sparse(v: &Vector) -> Value {
    let mut m = serde_json::Map::new();
    for (i, x) in v.support() {
        if !x.is_zero() {
            m.insert(format!("e{}", i + 1), rational(x));
        }
    }
    Value::Object(m)
}

/// Verdict with its witness; pairs are 1-based.
pub fn verdict(v: &Verdict) -> Value {
    match v {
        Verdict::IsVidinli {
            n,
            omega,
            to_type,
            to_standard,
        } => json!({
            "verdict": "IsVidinli",
            "n": n,
            "omega": matrix(omega.matrix()),
            "standard_form": to_standard.is_some(),
            "morphism": morphism(to_type),
        }),
        Verdict::FailsVa {
            pair: p,
            skew_part,
            expected,
            found,
        } => json!({
            "verdict": "FailsVa",
            "pair": pair(*p),
            "part": if *skew_part { "skew" } else { "symmetric" },
            "expected": sparse(expected),
            "found": sparse(found),
        }),
        Verdict::FailsVb(f) => {
            let mut w = match f {
                VbFailure::OffAxisSkew { pair: p, k_value } => json!({
                    "reason": "off-axis skew part",
                    "pair": pair(*p),
                    "k_value": sparse(k_value),
                }),
                VbFailure::Mismatch {
                    pair: p,
                    expected,
                    found,
                } => json!({
                    "reason": "skew part differs from the form",
                    "pair": pair(*p),
                    "expected": rational(expected),
                    "found": rational(found),
                }),
                VbFailure::Degenerate { rank, radical } => json!({
                    "reason": "degenerate form",
                    "rank": rank,
                    "radical_dim": radical.dim(),
                    "radical": subspace(radical),
                }),
                VbFailure::PlaneTest { pair: p } => json!({
                    "reason": "basis plane is not a copy of V3",
                    "pair": pair(*p),
                }),
            };
            w["verdict"] = json!("FailsVb");
            w
        }
        Verdict::NotApplicable { reason } => json!({"verdict": "NotApplicable", "reason": reason}),
    }
}
