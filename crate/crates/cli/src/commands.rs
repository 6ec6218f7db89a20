use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use leibniz_core::homology::{
    ce_chain, ce_cochain, ce_projection, conjecture_check, fg_subcomplex, loday_chain,
    loday_cochain, ChainComplex, Coefficients, HomologyError,
};
use leibniz_core::leibcore::{lie_quotient, LeibnizError};
use leibniz_core::LeibnizAlgebra;
use serde_json::{json, Value};
use thiserror::Error;

use crate::formats::{
    algebra_file, lie_entries, parse_algebra, parse_lie_module, parse_representation,
    scalar_strings, FormatError,
};
use crate::report::{input_hash, Report};

pub const VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), " (report format 1)");

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Format(#[from] FormatError),
    #[error("bad --coefficients value {0:?}: expected trivial, lie:<file> or rep:<file>")]
    CoefficientSpec(String),
    #[error(transparent)]
    Leibniz(#[from] LeibnizError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

impl CliError {
    /// 1 when an internal verification gate fired, 2 for bad input.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Homology(
                HomologyError::DifferentialSquareNonzero { .. }
                | HomologyError::NotAChainMap { .. }
                | HomologyError::NotInvariant { .. },
            ) => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "leibniz", version = VERSION, about = "Leibniz and Chevalley-Eilenberg (co)homology over the rationals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON report here (`-` for stdout).
    #[arg(long, global = true, value_name = "OUT")]
    pub json: Option<PathBuf>,
    /// Suppress the table on stdout.
    #[arg(long, global = true)]
    pub quiet: bool,
    /// Worker threads for block evaluation (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoefficientSpec {
    Trivial,
    Lie(PathBuf),
    Rep(PathBuf),
}

impl FromStr for CoefficientSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once(':') {
            None if s == "trivial" => Ok(CoefficientSpec::Trivial),
            Some(("lie", p)) if !p.is_empty() => Ok(CoefficientSpec::Lie(p.into())),
            Some(("rep", p)) if !p.is_empty() => Ok(CoefficientSpec::Rep(p.into())),
            _ => Err(CliError::CoefficientSpec(s.into())),
        }
    }
}

impl CoefficientSpec {
    fn echo(&self) -> String {
        match self {
            CoefficientSpec::Trivial => "trivial".into(),
            CoefficientSpec::Lie(p) => format!("lie:{}", p.display()),
            CoefficientSpec::Rep(p) => format!("rep:{}", p.display()),
        }
    }
}

#[derive(Debug, Args)]
pub struct ComplexArgs {
    /// Algebra file (JSON).
    pub algebra: PathBuf,
    #[arg(long, default_value_t = 3)]
    pub max_degree: usize,
    /// trivial, lie:<file> or rep:<file>
    #[arg(long, default_value = "trivial", value_parser = |s: &str| s.parse::<CoefficientSpec>().map_err(|e| e.to_string()))]
    pub coefficients: CoefficientSpec,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate an algebra and report the dimensions of g^ann and g_Lie.
    Check { algebra: PathBuf },
    /// The maximal Lie quotient.
    Quotient { algebra: PathBuf },
    /// Leibniz homology.
    Homology(ComplexArgs),
    /// Leibniz cohomology.
    Cohomology(ComplexArgs),
    /// Chevalley-Eilenberg homology via the minimal envelope.
    CeHomology(ComplexArgs),
    /// Chevalley-Eilenberg cohomology via the minimal envelope.
    CeCohomology(ComplexArgs),
    /// Compare Leibniz and Chevalley-Eilenberg (co)homology in low degrees.
    Compare(ComplexArgs),
    /// Homology of the graded commutator subcomplex.
    Fg {
        algebra: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Vanishing check for the free Leibniz algebra, weight by weight.
    FreeConjecture {
        #[arg(long)]
        generators: usize,
        #[arg(long)]
        max_weight: usize,
    },
}

fn read(path: &PathBuf) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|source| CliError::Read {
        path: path.clone(),
        source,
    })
}

fn text(bytes: &[u8]) -> Result<&str, CliError> {
    std::str::from_utf8(bytes).map_err(|e| FormatError::Parse(e.to_string()).into())
}

struct Loaded {
    g: LeibnizAlgebra,
    was_right: bool,
    notices: Vec<String>,
    files: Vec<Vec<u8>>,
}

fn load(path: &PathBuf) -> Result<Loaded, CliError> {
    let bytes = read(path)?;
    let p = parse_algebra(text(&bytes)?)?;
    let was_right = !p.notices.is_empty();
    Ok(Loaded {
        g: p.value,
        was_right,
        notices: p.notices,
        files: vec![bytes],
    })
}

fn coefficients(l: &mut Loaded, spec: &CoefficientSpec) -> Result<Coefficients, CliError> {
    Ok(match spec {
        CoefficientSpec::Trivial => Coefficients::Trivial,
        CoefficientSpec::Lie(p) => {
            let bytes = read(p)?;
            let q = lie_quotient(&l.g)?;
            let m = parse_lie_module(text(&bytes)?, &l.g, &q)?;
            l.files.push(bytes);
            l.notices.extend(m.notices);
            Coefficients::LieModule(m.value)
        }
        CoefficientSpec::Rep(p) => {
            let bytes = read(p)?;
            let m = parse_representation(text(&bytes)?, &l.g, l.was_right)?;
            l.files.push(bytes);
            l.notices.extend(m.notices);
            Coefficients::Representation(m.value)
        }
    })
}

fn table(c: &ChainComplex) -> (Value, Vec<String>) {
    let exact: Vec<(i32, usize)> = c.betti_table();
    let rows: Vec<Value> = exact
        .iter()
        .map(|&(n, b)| json!({ "degree": n, "dim": b, "chains": c.dim(n) }))
        .collect();
    let mut lines = vec![format!("{:>6}  {:>8}  {:>6}", "degree", "chains", "dim")];
    lines.extend(
        exact
            .iter()
            .map(|&(n, b)| format!("{n:>6}  {:>8}  {b:>6}", c.dim(n))),
    );
    (Value::Array(rows), lines)
}

struct Outcome {
    args: Value,
    files: Vec<Vec<u8>>,
    notices: Vec<String>,
    results: Value,
    verdicts: BTreeMap<String, bool>,
    lines: Vec<String>,
}

fn complex_command(name: &str, a: &ComplexArgs) -> Result<Outcome, CliError> {
    let mut l = load(&a.algebra)?;
    let coeffs = coefficients(&mut l, &a.coefficients)?;
    let args = json!({ "algebra": a.algebra.display().to_string(), "coefficients": a.coefficients.echo(), "max_degree": a.max_degree });
    let n = a.max_degree;
    let echo = serde_json::to_value(algebra_file(&l.g)).expect("algebra serializes");
    if name == "compare" {
        let (_, report) = ce_projection(&l.g, &coeffs, n)?;
        let mut lines = vec![format!(
            "{:>6}  {:>5}  {:>5}  {:>5}  {:>5}",
            "degree", "HL_n", "H_n", "H^n", "HL^n"
        )];
        let rows: Vec<Value> = report
            .degrees
            .iter()
            .map(|d| {
                lines.push(format!(
                    "{:>6}  {:>5}  {:>5}  {:>5}  {:>5}",
                    d.degree, d.loday_homology, d.ce_homology, d.ce_cohomology, d.loday_cohomology
                ));
                json!({
                    "degree": d.degree,
                    "loday_homology": d.loday_homology,
                    "ce_homology": d.ce_homology,
                    "loday_cohomology": d.loday_cohomology,
                    "ce_cohomology": d.ce_cohomology,
                    "homology_map_rank": d.homology_map.rank,
                    "cohomology_map_rank": d.cohomology_map.rank,
                })
            })
            .collect();
        return Ok(Outcome {
            args,
            files: l.files,
            notices: l.notices,
            results: json!({ "algebra": echo, "coefficients": coeffs.kind(), "degrees": rows }),
            verdicts: report.verdicts().into_iter().collect(),
            lines,
        });
    }
    let c = match name {
        "homology" => loday_chain(&l.g, &coeffs, n)?,
        "cohomology" => loday_cochain(&l.g, &coeffs, n)?,
        "ce-homology" => ce_chain(&l.g, &coeffs, n)?,
        _ => ce_cochain(&l.g, &coeffs, n)?,
    };
    let (rows, lines) = table(&c);
    Ok(Outcome {
        args,
        files: l.files,
        notices: l.notices,
        results: json!({ "algebra": echo, "coefficients": coeffs.kind(), "betti": rows }),
        verdicts: BTreeMap::new(),
        lines,
    })
}

fn dispatch(command: &Command) -> Result<(String, Outcome), CliError> {
    let name = match command {
        Command::Check { .. } => "check",
        Command::Quotient { .. } => "quotient",
        Command::Homology(_) => "homology",
        Command::Cohomology(_) => "cohomology",
        Command::CeHomology(_) => "ce-homology",
        Command::CeCohomology(_) => "ce-cohomology",
        Command::Compare(_) => "compare",
        Command::Fg { .. } => "fg",
        Command::FreeConjecture { .. } => "free-conjecture",
    };
    let outcome = match command {
        Command::Check { algebra } => {
            let l = load(algebra)?;
            let q = lie_quotient(&l.g)?;
            let (n, ann, lie) = (l.g.dim(), q.kernel.dim(), q.dim());
            Outcome {
                args: json!({ "algebra": algebra.display().to_string() }),
                results: json!({
                    "algebra": algebra_file(&l.g),
                    "dim": n,
                    "g_ann": ann,
                    "g_lie": lie,
                    "lie": ann == 0,
                }),
                verdicts: BTreeMap::from([("leibniz_identity".to_string(), true)]),
                lines: vec![format!(
                    "valid left Leibniz algebra, dim {n}, g_ann {ann}, g_Lie {lie}"
                )],
                files: l.files,
                notices: l.notices,
            }
        }
        Command::Quotient { algebra } => {
            let l = load(algebra)?;
            let q = lie_quotient(&l.g)?;
            let names = &q.quotient.basis_names;
            let mut lines = vec![format!(
                "g_Lie has dim {} with basis {}",
                q.dim(),
                names.join(", ")
            )];
            let brackets = lie_entries(names, &q.quotient.structure);
            for e in &brackets {
                let terms: Vec<String> = e.value.iter().map(|(k, v)| format!("{v}·{k}")).collect();
                lines.push(format!("[{}, {}] = {}", e.left, e.right, terms.join(" + ")));
            }
            Outcome {
                args: json!({ "algebra": algebra.display().to_string() }),
                results: json!({
                    "algebra": algebra_file(&l.g),
                    "basis": names,
                    "brackets": brackets,
                    "kernel_ideal": (0..q.kernel.dim()).map(|i| scalar_strings(&q.kernel.basis_vector(i))).collect::<Vec<_>>(),
                    "lift": q.lift.iter().map(|&i| l.g.basis_names[i].clone()).collect::<Vec<_>>(),
                    "projection": q.projection.to_strings(),
                }),
                verdicts: BTreeMap::new(),
                lines,
                files: l.files,
                notices: l.notices,
            }
        }
        Command::Homology(a)
        | Command::Cohomology(a)
        | Command::CeHomology(a)
        | Command::CeCohomology(a)
        | Command::Compare(a) => complex_command(name, a)?,
        Command::Fg {
            algebra,
            max_degree,
        } => {
            let l = load(algebra)?;
            let c = fg_subcomplex(&l.g, *max_degree)?;
            let (rows, lines) = table(&c);
            Outcome {
                args: json!({ "algebra": algebra.display().to_string(), "max_degree": max_degree }),
                results: json!({ "algebra": algebra_file(&l.g), "betti": rows }),
                verdicts: BTreeMap::new(),
                lines,
                files: l.files,
                notices: l.notices,
            }
        }
        Command::FreeConjecture {
            generators,
            max_weight,
        } => {
            let r = conjecture_check(*generators, *max_weight)?;
            let mut lines = vec![format!(
                "{:>6}  {:>4}  {:>4}  {}",
                "weight", "H_1", "witt", "H_n, n >= 2"
            )];
            let rows: Vec<Value> = r
                .rows
                .iter()
                .map(|row| {
                    let higher: Vec<String> = row.betti.iter().filter(|(n, _)| *n >= 2).map(|(_, b)| b.to_string()).collect();
                    lines.push(format!("{:>6}  {:>4}  {:>4}  {}", row.weight, row.h1, row.witt, higher.join(" ")));
                    json!({
                        "weight": row.weight,
                        "h1": row.h1,
                        "witt": row.witt,
                        "betti": row.betti.iter().map(|&(n, b)| json!({ "degree": n, "dim": b })).collect::<Vec<_>>(),
                        "nonvanishing": row.nonvanishing,
                    })
                })
                .collect();
            lines.push(format!("verdict: {}", r.verdict()));
            Outcome {
                args: json!({ "generators": generators, "max_weight": max_weight }),
                results: json!({ "generators": generators, "max_weight": max_weight, "rows": rows, "verdict": r.verdict() }),
                verdicts: BTreeMap::from([
                    ("higher_homology_vanishes".to_string(), r.vanishing()),
                    ("h1_matches_witt".to_string(), r.witt_agrees()),
                ]),
                lines,
                files: vec![],
                notices: vec![],
            }
        }
    };
    Ok((name.to_string(), outcome))
}

/// Runs one command and assembles its report. The input hash covers file
/// contents, not paths.
pub fn run(command: &Command) -> Result<Report, CliError> {
    let start = Instant::now();
    let (name, o) = dispatch(command)?;
    let files: Vec<&[u8]> = o.files.iter().map(Vec::as_slice).collect();
    let mut hashed = o.args.clone();
    if let Some(map) = hashed.as_object_mut() {
        map.remove("algebra");
        if let Some(Value::String(c)) = map.get_mut("coefficients") {
            c.truncate(c.find(':').unwrap_or(c.len()));
        }
    }
    Ok(Report {
        input_hash: input_hash(&name, &hashed, &files),
        command: name,
        args: o.args,
        notices: o.notices,
        results: o.results,
        verdicts: o.verdicts,
        lines: o.lines,
        seconds: start.elapsed().as_secs_f64(),
    })
}
