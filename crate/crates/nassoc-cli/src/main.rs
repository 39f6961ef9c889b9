//! `nassoc` command-line tool. Basis indices on the command line and in
//! JSON files are 1-based (`e1` is the first basis vector).

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nassoc::algebra::{
    associativity_witness, center, commutativity_witness, is_simple_certified,
    jordan_linearized_witness, nilpotency_class, Algebra, Simplicity,
};
use nassoc::analysis::{centroid, derivations, multiplication_algebra};
use nassoc::characterization::classify;
use nassoc::constructors::{
    complex_algebra, dual_numbers, heisenberg, jspin, omega_tilde, quaternions, rational_pair,
    rationals, twisted_v3, vidinli, vidinli7_directional, vidinli_jordan, vidinli_type,
};
use nassoc::geometry::{classify_flats, pg, reconstruct_product, vidinli_labeling, FlatKind};
use nassoc::json;
use nassoc::linalg::rational::parse_loose;
use nassoc::linalg::vector::format_combination;
use nassoc::linalg::Vector;
use nassoc::pushout::{degenerate_example_u, degenerate_pushout, mixed_pushout_j, PushoutSpec};
use nassoc::spectral::{spectral_report_side, Side};
use nassoc::suite::{run_suite, threads_from_env, SuiteParams, SUITES};
use nassoc::Error;

#[derive(Parser)]
#[command(
    name = "nassoc",
    version,
    about = "Exact structure-constant toolkit for Vidinli-type algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Constructor {
    Vidinli,
    VidinliJordan,
    Heisenberg,
    Jspin,
    Complex,
    Quaternions,
    RationalPair,
    DualNumbers,
    Rationals,
    TwistedV3,
    DirectionalV7,
    OmegaTilde,
    MixedJ,
    DegenerateU,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Subcommand)]
enum Command {
    /// Write the structure constants of a named algebra as JSON.
    Construct {
        name: Constructor,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        u: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        v: Option<String>,
        /// Unit axis of the seven-dimensional cross-product algebra.
        #[arg(long)]
        axis: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the full multiplication table of a JSON algebra.
    Table { file: PathBuf },
    /// Multiply two coordinate vectors, given as comma-separated rationals.
    Multiply {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Spectral data of left or right multiplication by `a` in V_{2n+1}.
    Spectral {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
    },
    /// Structural properties of a JSON algebra.
    Analyze { file: PathBuf },
    /// Glue algebras along a common subalgebra.
    Pushout {
        /// Component files, in order.
        #[arg(long = "input", required = true)]
        inputs: Vec<PathBuf>,
        /// Shared indices per component, e.g. `1|1` or `1,2,4|1,2,4`.
        #[arg(long)]
        z_indices: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Incidence data and flat classes of PG(k-1, 2).
    Pg {
        #[arg(long)]
        k: usize,
    },
    /// Assemble V_{2^(k-1)-1} from local rules on PG(k-1, 2).
    Reconstruct {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Decide whether a JSON algebra is of Vidinli type.
    Classify { file: PathBuf },
    /// Run a verification suite.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        k: usize,
        /// Extra algebra for the characterization suite.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Add wall-clock time to the report.
        #[arg(long)]
        timing: bool,
    },
}

/// Why a command stopped: a check that ran and failed, or bad input.
enum Failure {
    Check(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_algebra(path: &Path) -> Result<Algebra, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    json::algebra_from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(text: &str, output: Option<&Path>) -> Outcome {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            // a closed pipe (`| head`) is not an error
            let _ = io::stdout().write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn print_json(v: &Value) {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    let _ = emit(&s, None);
}

fn need_n(n: Option<usize>) -> Result<usize, Failure> {
    n.ok_or_else(|| Failure::Usage("this constructor needs --n".into()))
}

fn rational_arg(name: &str, s: Option<String>) -> Result<nassoc::linalg::Rational, Failure> {
    let s = s.ok_or_else(|| Failure::Usage(format!("twisted-v3 needs --{name}")))?;
    Ok(parse_loose(&s)?)
}

fn construct(
    name: Constructor,
    n: Option<usize>,
    t: Option<String>,
    u: Option<String>,
    v: Option<String>,
    axis: Option<usize>,
) -> Result<Algebra, Failure> {
    Ok(match name {
        Constructor::Vidinli => vidinli(need_n(n)?)?,
        Constructor::VidinliJordan => vidinli_jordan(need_n(n)?)?,
        Constructor::Heisenberg => heisenberg(need_n(n)?)?,
        Constructor::Jspin => jspin(need_n(n)?)?,
        Constructor::Complex => complex_algebra(),
        Constructor::Quaternions => quaternions(),
        Constructor::RationalPair => rational_pair(),
        Constructor::DualNumbers => dual_numbers(),
        Constructor::Rationals => rationals(),
        Constructor::TwistedV3 => twisted_v3(
            &rational_arg("t", t)?,
            &rational_arg("u", u)?,
            &rational_arg("v", v)?,
        ),
        Constructor::DirectionalV7 => {
            let axis = axis.unwrap_or(1);
            if axis == 0 {
                return Err(Failure::Usage("--axis is 1-based".into()));
            }
            vidinli7_directional(axis - 1)?
        }
        Constructor::OmegaTilde => vidinli_type(2, &omega_tilde())?,
        Constructor::MixedJ => mixed_pushout_j()?,
        Constructor::DegenerateU => degenerate_example_u()?,
    })
}

/// One line per ordered basis pair, zero products included.
fn table_text(a: &Algebra) -> String {
    let names = a.basis_names();
    let unit = a.unit().map_or("none".to_string(), |u| names[u].clone());
    let mut out = format!("# {}: dim {}, unit {}\n", a.label(), a.dim(), unit);
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            out.push_str(&format!(
                "{} * {} = {}\n",
                names[i],
                names[j],
                format_combination(&a.product(i, j), &names)
            ));
        }
    }
    out
}

fn parse_z_indices(s: &str, components: usize) -> Result<Vec<Vec<usize>>, Failure> {
    let groups: Vec<&str> = s.split('|').collect();
    if groups.len() != components {
        return Err(Failure::Usage(format!(
            "--z-indices has {} groups for {components} inputs",
            groups.len()
        )));
    }
    groups
        .iter()
        .map(|g| {
            g.split(',')
                .map(|x| match x.trim().parse::<usize>() {
                    Ok(i) if i >= 1 => Ok(i - 1),
                    _ => Err(Failure::Usage(format!(
                        "bad index `{x}` in --z-indices (1-based)"
                    ))),
                })
                .collect()
        })
        .collect()
}

fn analyze(a: &Algebra) -> Result<Value, Failure> {
    let simplicity = match is_simple_certified(a)? {
        Simplicity::Simple {
            multiplication_algebra_dim,
        } => {
            json!({"result": "Simple", "multiplication_algebra_dim": multiplication_algebra_dim})
        }
        Simplicity::NotSimple { ideal, generator } => {
            json!({"result": "NotSimple", "ideal": json::subspace(&ideal), "generator": json::sparse(&generator)})
        }
        Simplicity::Inconclusive => json!({"result": "Inconclusive"}),
    };
    let jordan = commutativity_witness(a).is_none() && jordan_linearized_witness(a).is_none();
    Ok(json!({
        "label": a.label(),
        "dim": a.dim(),
        "unit": a.unit().map(|u| u + 1),
        "nonzero_constants": a.nonzero_constant_count(),
        "noncommuting_pair": commutativity_witness(a).map(json::pair),
        "nonassociative_triple": associativity_witness(a).map(|(x, y, z)| json!([x + 1, y + 1, z + 1])),
        "jordan": jordan,
        // only defined for anticommutative products
        "nilpotency": nilpotency_class(a).ok().map(|c| format!("{c:?}")),
        "center_dim": center(a)?.dim(),
        "multiplication_algebra_dim": multiplication_algebra(a)?.dim(),
        "centroid_dim": centroid(a)?.dim(),
        "derivation_dim": derivations(a)?.dim(),
        "simplicity": simplicity,
    }))
}

fn pg_report(k: usize) -> Result<Value, Failure> {
    let space = pg(k)?;
    let counts: Value = space
        .flats
        .iter()
        .map(|(r, fs)| (format!("rank_{r}"), json!(fs.len())))
        .collect::<serde_json::Map<_, _>>()
        .into();
    let mut out =
        json!({"k": k, "points": space.points.len(), "lines": space.lines.len(), "flats": counts});
    if k >= 3 {
        let labeling = vidinli_labeling(k)?;
        let classes = classify_flats(&space, &labeling);
        let of = |kind| {
            classes
                .iter()
                .filter(|c| c.class == kind)
                .map(|c| json!(c.flat))
                .collect::<Vec<_>>()
        };
        out["labeled_lines"] = json!(labeling.labeled_lines(&space));
        out["anti_chains"] = json!(of(FlatKind::AntiChain));
        out["vj_chains"] = json!(of(FlatKind::VjChain));
    }
    Ok(out)
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Construct {
            name,
            n,
            t,
            u,
            v,
            axis,
            output,
        } => {
            let a = construct(name, n, t, u, v, axis)?;
            emit(&json::algebra_to_string(&a), output.as_deref())
        }
        Command::Table { file } => emit(&table_text(&read_algebra(&file)?), None),
        Command::Multiply { file, a, b } => {
            let alg = read_algebra(&file)?;
            let (x, y) = (Vector::parse_csv(&a)?, Vector::parse_csv(&b)?);
            let p = alg.multiply(&x, &y)?;
            emit(
                &format!(
                    "{}\n{}\n",
                    p.to_csv(),
                    format_combination(&p, &alg.basis_names())
                ),
                None,
            )
        }
        Command::Spectral { n, a, side } => {
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            let r = spectral_report_side(n, &Vector::parse_csv(&a)?, side)?;
            print_json(&json!({
                "n": n,
                "side": format!("{side:?}"),
                "a": json::vector(&r.a),
                "branch": format!("{:?}", r.branch),
                "char_poly": json::polynomial(&r.oracle),
                "closed_form": json::polynomial(&r.closed_form),
                "closed_form_matches": r.closed_form_matches(),
                "determinant": json::rational(&r.determinant),
                "determinant_formula": json::rational(&r.determinant_formula),
                "principal_eigenspace": json::subspace(&r.e_principal),
                "explicit_basis": format!("{:?}", r.explicit_basis),
                "quadratic_eigenspace": json::subspace(&r.e_quadratic),
                "decomposition_holds": r.decomposition_holds(),
            }));
            if r.passed() {
                Ok(())
            } else {
                Err(Failure::Check(
                    "closed form and computed spectrum disagree".into(),
                ))
            }
        }
        Command::Analyze { file } => {
            print_json(&analyze(&read_algebra(&file)?)?);
            Ok(())
        }
        Command::Pushout {
            inputs,
            z_indices,
            output,
        } => {
            let algs = inputs
                .iter()
                .map(|p| read_algebra(p))
                .collect::<Result<Vec<_>, _>>()?;
            let z = parse_z_indices(&z_indices, algs.len())?;
            let p = degenerate_pushout(&PushoutSpec::new(algs, z)?)?;
            if let Some(bad) = p.embeddings.iter().position(|m| !m.check()) {
                return Err(Failure::Check(format!(
                    "embedding of component {} is not a morphism",
                    bad + 1
                )));
            }
            emit(&json::algebra_to_string(&p.algebra), output.as_deref())
        }
        Command::Pg { k } => {
            print_json(&pg_report(k)?);
            Ok(())
        }
        Command::Reconstruct { k, output } => {
            if k < 3 {
                return Err(Failure::Usage("reconstruction needs k >= 3".into()));
            }
            let a = reconstruct_product(k, &vidinli_labeling(k)?)?;
            emit(&json::algebra_to_string(&a), output.as_deref())?;
            if a.same_table(&vidinli((1 << (k - 1)) - 1)?) {
                Ok(())
            } else {
                Err(Failure::Check(
                    "assembled product differs from the Vidinli table".into(),
                ))
            }
        }
        Command::Classify { file } => {
            let a = read_algebra(&file)?;
            let v = classify(&a)?;
            let mut out = json::verdict(&v);
            let reverified = v.reverify(&a);
            out["reverified"] = json!(reverified);
            print_json(&out);
            if reverified {
                Ok(())
            } else {
                Err(Failure::Check("witness did not re-verify".into()))
            }
        }
        Command::Verify {
            suite,
            max_n,
            k,
            input,
            timing,
        } => {
            if !SUITES.contains(&suite.as_str()) {
                return Err(Failure::Usage(format!(
                    "unknown suite `{suite}`; expected one of {}",
                    SUITES.join(", ")
                )));
            }
            let input = input.as_deref().map(read_algebra).transpose()?;
            let params = SuiteParams {
                max_n,
                k,
                input,
                threads: threads_from_env()?,
                timing,
            };
            let report = run_suite(&suite, &params)?;
            print_json(&serde_json::to_value(&report).expect("report serializes"));
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Check(format!(
                    "{} of {} checks failed",
                    report.totals.fail,
                    report.checks.len()
                )))
            }
        }
    }
}
