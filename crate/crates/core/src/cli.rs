//! The `cpn-cross` command line: one job per invocation, JSON in and out.
//!
//! Exit codes: 0 success, 1 `verify` found failing trials, 2 a degenerate
//! input or violated precondition, 3 unreadable or malformed input.

use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use serde_json::{json, Map, Value};

use crate::crossratio::{cross_ratio_1d, cross_ratio_hom, cross_ratio_tuple};
use crate::error::{Error, Result};
use crate::geometry1d::{circline_through, is_concyclic};
use crate::json::{self, InputPoint, JsonScalar};
use crate::lfm::LinearFractionalMap;
use crate::numeric::{Backend, Complex64, GaussianRational};
use crate::transitivity::{check_independence, solve_correspondence_projective};
use crate::verify::{run_verify, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Scalar cross ratio of N+3 points.
    Cross,
    /// Cross-ratio N-tuple of N+3 points.
    Tuple,
    /// Linear fractional map taking --src to --dst (N+2 points each).
    Solve,
    /// Images of --points under --map.
    Apply,
    /// Independence witness for N+2 points.
    Indep,
    /// Concyclicity of four points of the Riemann sphere.
    Concyclic,
    /// Seeded randomized property suites.
    Verify,
}

/// One invocation.
#[derive(Debug, Clone, Parser)]
#[command(
    name = "cpn-cross",
    version,
    about = "Cross ratios and linear fractional maps on CP^N"
)]
pub struct JobSpec {
    #[arg(value_enum)]
    pub command: Command,
    /// Expected dimension N of every input point.
    #[arg(long)]
    pub dim: Option<usize>,
    #[arg(long, default_value_t = Backend::Exact)]
    pub backend: Backend,
    #[arg(long)]
    pub points: Option<PathBuf>,
    #[arg(long)]
    pub src: Option<PathBuf>,
    #[arg(long)]
    pub dst: Option<PathBuf>,
    /// Map for `apply`, as {"A","B","C","D"} or {"m"}.
    #[arg(long)]
    pub map: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Instances per dimension for `verify`.
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    /// Write the JSON result here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Exit status and JSON document of a finished job.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub output: Value,
}

impl Outcome {
    fn failure(e: &Error) -> Self {
        Outcome {
            code: if e.is_parse() {
                EXIT_PARSE
            } else {
                EXIT_PRECONDITION
            },
            output: json!({"error": e.to_string()}),
        }
    }
}

fn read_json(path: &Option<PathBuf>, flag: &str) -> Result<Value> {
    let path = path
        .as_deref()
        .ok_or_else(|| Error::Parse(format!("--{flag} FILE is required for this command")))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

struct Inputs<'a> {
    job: &'a JobSpec,
}

impl Inputs<'_> {
    fn points<S: JsonScalar>(&self, flag: &str) -> Result<Vec<InputPoint<S>>> {
        let path = match flag {
            "src" => &self.job.src,
            "dst" => &self.job.dst,
            _ => &self.job.points,
        };
        let pts = json::decode_points(&read_json(path, flag)?)?;
        let expected = self.job.dim.or_else(|| pts.first().map(InputPoint::dim));
        if let Some(dim) = expected {
            if let Some(p) = pts.iter().find(|p| p.dim() != dim) {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
        }
        Ok(pts)
    }
}

fn lifts<S: JsonScalar>(pts: &[InputPoint<S>]) -> Vec<crate::projective::ProjectivePoint<S>> {
    pts.iter().map(InputPoint::lift).collect()
}

fn quadruple<S: JsonScalar>(
    pts: &[InputPoint<S>],
) -> Result<[crate::projective::ExtendedPoint<S>; 4]> {
    let zs: Vec<_> = pts.iter().map(InputPoint::project).collect();
    zs.try_into().map_err(|v: Vec<_>| Error::ArityMismatch {
        expected: 4,
        found: v.len(),
    })
}

fn dispatch<S: JsonScalar>(job: &JobSpec) -> Result<Value> {
    let inputs = Inputs { job };
    match job.command {
        Command::Cross => {
            let pts = inputs.points::<S>("points")?;
            let all_affine = pts.iter().all(|p| matches!(p, InputPoint::Ext(_)));
            let value = if all_affine && pts.len() == 4 && pts[0].dim() == 1 {
                let z = quadruple(&pts)?;
                cross_ratio_1d([&z[0], &z[1], &z[2], &z[3]])?
            } else {
                cross_ratio_hom(&lifts(&pts))?
            };
            Ok(json!({"value": json::encode_value(&value)}))
        }
        Command::Tuple => {
            let t = cross_ratio_tuple(&lifts(&inputs.points::<S>("points")?))?;
            Ok(json!({"components": json::encode_tuple(&t)}))
        }
        Command::Solve => {
            let src = lifts(&inputs.points::<S>("src")?);
            let dst = lifts(&inputs.points::<S>("dst")?);
            let m = solve_correspondence_projective(&src, &dst)?.canonicalize();
            let mut out = json::encode_map(&LinearFractionalMap::from_matrix(&m));
            out["m"] = json::encode_matrix(&m)["m"].take();
            Ok(out)
        }
        Command::Apply => {
            let f: LinearFractionalMap<S> = json::decode_map(&read_json(&job.map, "map")?)?;
            let m = f.associated_matrix();
            let images = inputs
                .points::<S>("points")?
                .iter()
                .map(|p| match p {
                    InputPoint::Ext(z) => f.evaluate(z).map(|w| json::encode_extended(&w)),
                    InputPoint::Hom(u) => m.apply(u).map(|w| json::encode_projective(&w)),
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(json!({"images": images}))
        }
        Command::Indep => {
            let w = check_independence(&lifts(&inputs.points::<S>("points")?))?;
            Ok(json!({"coefficients": json::encode_vec(w.coefficients())}))
        }
        Command::Concyclic => {
            let z = quadruple(&inputs.points::<S>("points")?)?;
            let concyclic = is_concyclic([&z[0], &z[1], &z[2], &z[3]])?;
            let value = cross_ratio_1d([&z[0], &z[1], &z[2], &z[3]])?;
            let circline = circline_through(&z[1], &z[2], &z[3])?;
            Ok(json!({
                "concyclic": concyclic,
                "cross_ratio": json::encode_value(&value),
                "circline": json::encode_circline(&circline),
            }))
        }
        Command::Verify => unreachable!("handled by run"),
    }
}

fn verify_json(report: &VerifyReport) -> Value {
    let suites: Vec<Value> = report
        .suites
        .iter()
        .map(|s| {
            let mut o = Map::new();
            o.insert("name".into(), s.name.into());
            o.insert("passed".into(), s.passed.into());
            o.insert("failed".into(), s.failed.into());
            if let Some(msg) = &s.first_failure {
                o.insert("first_failure".into(), msg.clone().into());
            }
            Value::Object(o)
        })
        .collect();
    json!({
        "seed": report.seed,
        "backend": report.backend.to_string(),
        "suites": suites,
        "passed": report.passed(),
        "failed": report.failed(),
    })
}

/// Run a job and return its exit status and output document.
pub fn run(job: &JobSpec) -> Outcome {
    if job.dim == Some(0) {
        return Outcome::failure(&Error::Parse("--dim must be at least 1".into()));
    }
    if job.command == Command::Verify {
        let report = match job.backend {
            Backend::Exact => run_verify::<GaussianRational>(job.seed, job.trials),
            Backend::Float => run_verify::<Complex64>(job.seed, job.trials),
        };
        return Outcome {
            code: if report.is_ok() {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            },
            output: verify_json(&report),
        };
    }
    let result = match job.backend {
        Backend::Exact => dispatch::<GaussianRational>(job),
        Backend::Float => dispatch::<Complex64>(job),
    };
    match result {
        Ok(output) => Outcome {
            code: EXIT_OK,
            output,
        },
        Err(e) => Outcome::failure(&e),
    }
}

fn write_output(out: Option<&Path>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(text.as_bytes())
        }
    }
}

/// Parse `args` (program name first), run the job, print the result and
/// return the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let job = match JobSpec::try_parse_from(args) {
        Ok(job) => job,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let outcome = run(&job);
    if let Some(msg) = outcome.output.get("error").and_then(Value::as_str) {
        eprintln!("cpn-cross: {msg}");
    }
    let text = format!("{}\n", outcome.output);
    if let Err(e) = write_output(job.out.as_deref(), &text) {
        eprintln!("cpn-cross: cannot write output: {e}");
        return EXIT_PARSE;
    }
    outcome.code
}
