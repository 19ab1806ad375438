//! The `sqk` command line.
//!
//! Exit status: `0` on success, `1` when a verification fails, `2` on bad
//! input. Output depends only on the arguments.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::expansion::{bilinear_expansion, dedupe_symmetric, sweep_with_jobs, verify_identity, ExpansionTerm};
use crate::fock::{vev, OperatorWord};
use crate::partitions::{frobenius_from_partition, partition_from_frobenius, FrobeniusCoords, Partition, StrictPartition};
use crate::polarization::{enumerate_polarizations, render_table, s_and_t};
use crate::polyring::{format_rational, rat, GradedPoly};
use crate::symfunc::{cache, hook_schur, schur, schur_q, schur_q_half};

/// Largest accepted weight cutoff.
pub const MAX_WEIGHT: u32 = 40;

pub const CACHE_ENV: &str = "SQK_CACHE_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "sqk", version, about = "Schur and Schur Q-function computations in exact arithmetic")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ShapeArgs {
    /// Partition, e.g. `3,2`.
    #[arg(short = 'p', long = "partition", conflicts_with = "frobenius")]
    pub partition: Option<String>,
    /// Frobenius coordinates, e.g. `2,0|1,0`.
    #[arg(short = 'f', long = "frobenius")]
    pub frobenius: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Schur function by Jacobi–Trudi.
    Schur {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(short = 'w', long = "weight")]
        weight: Option<u32>,
        /// Set the even flow variables to zero.
        #[arg(long)]
        odd: bool,
        /// Halve every variable.
        #[arg(long)]
        half: bool,
    },
    /// Schur Q-function of a strict partition.
    Qfun {
        #[arg(short = 's', long = "strict")]
        strict: String,
        #[arg(short = 'w', long = "weight")]
        weight: Option<u32>,
        /// Evaluate at half the odd variables.
        #[arg(long)]
        half: bool,
    },
    /// Hook Schur function `s_(a|b)`.
    Hook {
        /// Rank-one Frobenius coordinates `a|b`.
        #[arg(short = 'f', long = "frobenius")]
        frobenius: String,
        #[arg(short = 'w', long = "weight")]
        weight: Option<u32>,
        #[arg(long)]
        odd: bool,
    },
    /// Terms of the bilinear Q-function expansion.
    Expand {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Merge terms paired by swapping the two sides.
        #[arg(long)]
        dedupe: bool,
    },
    /// Polarizations and binary markings.
    Polarizations {
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// Check the expansion against the Schur function.
    Verify {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(short = 'w', long = "weight")]
        weight: Option<u32>,
    },
    /// Verify every partition up to a weight.
    Sweep {
        #[arg(short = 'w', long = "weight")]
        weight: u32,
        /// Worker threads; 0 picks automatically.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Vacuum expectation value of a fermion word.
    Vev {
        /// A word such as `psi(2) psidag(-2) | W=4`.
        word: String,
        #[arg(short = 'w', long = "weight")]
        weight: Option<u32>,
    },
}

/// What a command produced, before rendering.
struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

#[derive(Debug)]
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = std::result::Result<Outcome, InputError>;

fn shape(args: &ShapeArgs) -> std::result::Result<(Partition, FrobeniusCoords), InputError> {
    match (&args.partition, &args.frobenius) {
        (Some(p), None) => {
            let lambda: Partition = p.parse()?;
            let fc = frobenius_from_partition(&lambda);
            Ok((lambda, fc))
        }
        (None, Some(f)) => {
            let fc: FrobeniusCoords = f.parse()?;
            Ok((partition_from_frobenius(&fc), fc))
        }
        _ => Err(InputError("give exactly one of --partition or --frobenius".into())),
    }
}

fn cutoff(w: Option<u32>, default: u32) -> std::result::Result<u32, InputError> {
    let w = w.unwrap_or(default);
    if w > MAX_WEIGHT {
        return Err(InputError(format!("weight {w} exceeds the maximum {MAX_WEIGHT}")));
    }
    Ok(w)
}

fn poly_outcome(value: GradedPoly, extra: Value) -> Outcome {
    let mut json = extra;
    json["value"] = json!(value.to_string());
    Outcome { text: format!("{value}\n"), json, ok: true }
}

fn q_label(mu: &StrictPartition) -> String {
    let parts: Vec<String> = mu.parts().iter().map(u32::to_string).collect();
    format!("Q~({})", parts.join(","))
}

fn term_line(t: &ExpansionTerm) -> String {
    format!("{} * {} * {}", format_rational(&t.coeff), q_label(&t.q_plus), q_label(&t.q_minus))
}

fn cmd_schur(shape_args: &ShapeArgs, weight: Option<u32>, odd: bool, half: bool) -> CmdResult {
    let (lambda, _) = shape(shape_args)?;
    let w = cutoff(weight, lambda.weight())?;
    let mut value = schur(&lambda, w);
    if odd {
        value = value.restrict_to_odd();
    }
    if half {
        value = value.scale_vars(&rat(1, 2));
    }
    Ok(poly_outcome(value, json!({"lambda": lambda.parts(), "weight_cutoff": w})))
}

fn cmd_qfun(strict: &str, weight: Option<u32>, half: bool) -> CmdResult {
    let alpha: StrictPartition = strict.parse()?;
    let w = cutoff(weight, alpha.weight())?;
    let value = if half { schur_q_half(&alpha, w) } else { schur_q(&alpha, w) };
    Ok(poly_outcome(value, json!({"strict": alpha.parts(), "weight_cutoff": w})))
}

fn cmd_hook(frobenius: &str, weight: Option<u32>, odd: bool) -> CmdResult {
    let fc: FrobeniusCoords = frobenius.parse()?;
    if fc.rank() != 1 {
        return Err(InputError(format!("a hook has rank 1, got rank {}", fc.rank())));
    }
    let (a, b) = (fc.alpha.parts()[0], fc.beta.parts()[0]);
    let w = cutoff(weight, fc.weight())?;
    let mut value = hook_schur(a, b, w);
    if odd {
        value = value.restrict_to_odd();
    }
    Ok(poly_outcome(value, json!({"arm": a, "leg": b, "weight_cutoff": w})))
}

fn cmd_expand(shape_args: &ShapeArgs, dedupe: bool) -> CmdResult {
    let (lambda, fc) = shape(shape_args)?;
    let mut terms = bilinear_expansion(&fc);
    if dedupe {
        terms = dedupe_symmetric(&terms)?;
    }
    let (s, _) = s_and_t(&fc);
    let mut text = format!("({fc}) r={} s={} terms={}\n", fc.rank(), s.len(), terms.len());
    for t in &terms {
        text.push_str(&term_line(t));
        text.push('\n');
    }
    let json = json!({
        "lambda": lambda.parts(),
        "frobenius": {"alpha": fc.alpha.parts(), "beta": fc.beta.parts()},
        "terms": terms.iter().map(ExpansionTerm::to_json).collect::<Vec<_>>(),
    });
    Ok(Outcome { text, json, ok: true })
}

fn cmd_polarizations(shape_args: &ShapeArgs) -> CmdResult {
    let (_, fc) = shape(shape_args)?;
    let pols = enumerate_polarizations(&fc);
    let json = json!({
        "frobenius": {"alpha": fc.alpha.parts(), "beta": fc.beta.parts()},
        "polarizations": pols.iter().map(|p| json!({
            "j0": p.canonical_j.j,
            "mu_plus": p.mu_plus.parts(),
            "mu_minus": p.mu_minus.parts(),
            "sgn": p.sgn,
            "pi": p.pi,
            "pi_tilde": p.pi_tilde,
            "hat_mu_plus": p.hat_mu_plus.parts(),
            "hat_mu_minus": p.hat_mu_minus.parts(),
            "hat_m_minus": p.hat_m_minus,
        })).collect::<Vec<_>>(),
    });
    Ok(Outcome { text: render_table(&fc), json, ok: true })
}

fn cmd_verify(shape_args: &ShapeArgs, weight: Option<u32>) -> CmdResult {
    let (lambda, _) = shape(shape_args)?;
    let w = cutoff(weight, lambda.weight())?;
    let report = verify_identity(&lambda, w);
    Ok(Outcome {
        text: format!("{}\n", report.summary()),
        json: report.to_json(),
        ok: report.ok,
    })
}

fn cmd_sweep(weight: u32, jobs: usize) -> CmdResult {
    if weight == 0 {
        return Err(InputError("sweep needs a weight of at least 1".into()));
    }
    let weight = cutoff(Some(weight), weight)?;
    let reports = sweep_with_jobs(weight, jobs);
    let passed = reports.iter().filter(|r| r.ok).count();
    let mut text = String::new();
    for r in &reports {
        text.push_str(&format!("{}  {}\n", r.lambda, r.summary()));
    }
    text.push_str(&format!("{passed}/{} ok\n", reports.len()));
    let json = Value::Array(reports.iter().map(|r| r.to_json()).collect());
    Ok(Outcome { text, json, ok: passed == reports.len() })
}

fn cmd_vev(word: &str, weight: Option<u32>) -> CmdResult {
    let word: OperatorWord = word.parse()?;
    let w = cutoff(weight.or(word.weight), 0)?;
    let value = vev(&word, w)?;
    let json = json!({
        "word": word.to_string(),
        "weight_cutoff": w,
        "re": value.re.to_string(),
        "im": value.im.to_string(),
        "value": value.to_string(),
    });
    Ok(Outcome { text: format!("{value}\n"), json, ok: true })
}

fn dispatch(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Schur { shape, weight, odd, half } => cmd_schur(shape, *weight, *odd, *half),
        Command::Qfun { strict, weight, half } => cmd_qfun(strict, *weight, *half),
        Command::Hook { frobenius, weight, odd } => cmd_hook(frobenius, *weight, *odd),
        Command::Expand { shape, dedupe } => cmd_expand(shape, *dedupe),
        Command::Polarizations { shape } => cmd_polarizations(shape),
        Command::Verify { shape, weight } => cmd_verify(shape, *weight),
        Command::Sweep { weight, jobs } => cmd_sweep(*weight, *jobs),
        Command::Vev { word, weight } => cmd_vev(word, *weight),
    }
}

fn cache_dir() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from)
}

/// Parses `args` (program name first), runs the command and writes to
/// `out` / `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            let _ = writeln!(err, "{first}");
            return 2;
        }
    };
    let dir = cache_dir();
    if let Some(d) = &dir {
        if let Err(e) = cache::load(d) {
            let _ = writeln!(err, "warning: ignoring series cache: {e}");
        }
    }
    let status = match dispatch(&cli) {
        Ok(o) => {
            let rendered = match cli.format {
                Format::Text => o.text,
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&o.json).expect("json")),
            };
            let _ = out.write_all(rendered.as_bytes());
            if o.ok {
                0
            } else {
                1
            }
        }
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    };
    if let Some(d) = &dir {
        if let Err(e) = cache::save(d) {
            let _ = writeln!(err, "warning: could not save series cache: {e}");
        }
    }
    status
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("sqk").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn schur_odd() {
        let (code, out, _) = call(&["schur", "-p", "3,3", "-w", "6", "--odd"]);
        assert_eq!(code, 0);
        assert_eq!(out, "(1/144)*t1^6 - (1/6)*t1^3*t3 + t3^2\n");
    }

    #[test]
    fn verify_ok() {
        let (code, out, _) = call(&["verify", "-p", "3,2"]);
        assert_eq!((code, out.as_str()), (0, "OK (4 terms, residual 0)\n"));
    }

    #[test]
    fn bad_input() {
        let (code, out, err) = call(&["qfun", "-s", "2,2"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert_eq!(err.lines().count(), 1);
        assert_eq!(call(&["schur", "-p", "3,x"]).0, 2);
        assert_eq!(call(&["schur"]).0, 2);
        assert_eq!(call(&["schur", "-p", "1", "-w", "99"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
    }
}
