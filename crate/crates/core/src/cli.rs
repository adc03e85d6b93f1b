//! Command-line front end: `terms`, `eval`, `converge`, `zeros` and
//! `special`.
//!
//! Data goes to stdout (or `--out FILE`), diagnostics to stderr. Exit codes
//! are 0 on success, 2 for usage or parse errors and 3 for mathematical
//! domain errors (poles, singular prefactors, convergence disks).
//!
//! JSON output is wrapped in an [`OutputEnvelope`] carrying
//! `schema_version = "1"`, the command name and every parameter as given.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::admissible::admissible_up_to;
use crate::error::Error;
use crate::point::ComplexPoint;
use crate::representations::Family;
use crate::representations::{
    evaluate, reference_zeta, special_value, RepresentationKind, SpecialKind,
};
use crate::rootfind::{
    count_zeros_in_region, find_zeros, Preset, SearchRegion, Target, DEFAULT_GRID, DEFAULT_TOL,
};

pub const SCHEMA_VERSION: &str = "1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputEnvelope {
    pub schema_version: String,
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub payload: Value,
}

#[derive(Debug, Parser)]
#[command(
    name = "admzeta",
    version,
    about = "Admissible-base partial sums of the Riemann zeta function"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the admissible bases up to n.
    Terms {
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Evaluate one representation at a point.
    Eval {
        #[arg(long)]
        rep: String,
        /// Complex argument as re,im.
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long)]
        n: u64,
        /// Laurent order for the Bernoulli representation.
        #[arg(long, default_value_t = 40)]
        order: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// CSV of the partial sum against the truncation n.
    Converge {
        #[arg(long)]
        rep: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long = "n-max")]
        n_max: u64,
        #[arg(long)]
        step: u64,
        #[arg(long, default_value_t = 40)]
        order: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Locate and verify zeros of a truncated sum.
    Zeros(ZerosArgs),
    /// Partial sums at integer arguments m, 2m or 2m+1.
    Special {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Args)]
struct ZerosArgs {
    /// One of paper-direct-{2,3,5,6}, paper-alt-{2,3,5,6}.
    #[arg(long, conflicts_with_all = ["rep", "n", "constant"])]
    preset: Option<String>,
    /// direct or alt, with --n and optionally --constant.
    #[arg(long, requires = "n")]
    rep: Option<String>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    constant: Option<f64>,
    /// re_min,re_max,im_min,im_max
    #[arg(long, allow_hyphen_values = true)]
    region: String,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Newton seeds per axis.
    #[arg(long, default_value_t = DEFAULT_GRID)]
    grid: usize,
    /// Worker threads for the seed refinement (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Emit the JSON envelope instead of plain text.
    #[arg(long)]
    json: bool,
    /// Write to FILE instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

enum Failure {
    Usage(String),
    Domain(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_mathematical() {
            Failure::Domain(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

type CmdResult = std::result::Result<(String, Option<String>), Failure>;

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            if code == 0 {
                let _ = stdout.write_all(text.as_bytes());
                return EXIT_OK;
            }
            let _ = stderr.write_all(text.as_bytes());
            return EXIT_USAGE;
        }
    };
    let result = match cli.command {
        Command::Terms { n, out } => cmd_terms(n, &out),
        Command::Eval {
            rep,
            z,
            n,
            order,
            out,
        } => cmd_eval(&rep, &z, n, order, &out),
        Command::Converge {
            rep,
            z,
            n_max,
            step,
            order,
            out,
        } => cmd_converge(&rep, &z, n_max, step, order, &out),
        Command::Zeros(args) => cmd_zeros(&args),
        Command::Special { kind, m, n, out } => cmd_special(&kind, m, n, &out),
    };
    match result {
        Ok((text, None)) => match stdout.write_all(text.as_bytes()) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                EXIT_IO
            }
        },
        Ok((text, Some(path))) => match std::fs::write(&path, text) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(stderr, "error: cannot write {path}: {e}");
                EXIT_IO
            }
        },
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_DOMAIN
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_IO
        }
    }
}

/// Parses the `--rep` names accepted by `eval` and `converge`.
pub fn parse_representation(s: &str) -> crate::Result<RepresentationKind> {
    match s {
        "direct" => Ok(RepresentationKind::Direct),
        "coth" => Ok(RepresentationKind::Coth),
        "alt" | "alternating" => Ok(RepresentationKind::Alternating),
        "alt-coth" | "alternating-coth" => Ok(RepresentationKind::AlternatingCoth),
        "bernoulli" | "bernoulli-series" => Ok(RepresentationKind::BernoulliSeries),
        other => Err(Error::invalid(format!(
            "unknown representation '{other}' (expected direct, coth, alt, alt-coth or bernoulli)"
        ))),
    }
}

fn envelope(command: &str, parameters: BTreeMap<String, String>, payload: Value) -> String {
    let env = OutputEnvelope {
        schema_version: SCHEMA_VERSION.to_string(),
        command: command.to_string(),
        parameters,
        payload,
    };
    let mut s = serde_json::to_string_pretty(&env).expect("envelope serializes");
    s.push('\n');
    s
}

fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// 17 significant digits, scientific notation.
pub fn csv_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn opt_csv(x: Option<f64>) -> String {
    x.map(csv_float).unwrap_or_default()
}

fn cmd_terms(n: u64, out: &OutputArgs) -> CmdResult {
    let set = admissible_up_to(n)?;
    let text = if out.json {
        let p = params([("n", n.to_string()), ("json", "true".into())]);
        envelope(
            "terms",
            p,
            json!({ "members": set.members(), "term_count": set.term_count() }),
        )
    } else {
        let mut s = String::new();
        for r in set.iter() {
            let _ = writeln!(s, "{r}");
        }
        let _ = writeln!(s, "l={}", set.term_count());
        s
    };
    Ok((text, out.out.clone()))
}

fn reference_error(z: ComplexPoint, value: ComplexPoint) -> Option<f64> {
    reference_zeta(z)
        .ok()
        .map(|r| (r.value() - value.value()).norm())
}

fn cmd_eval(rep: &str, z_raw: &str, n: u64, order: usize, out: &OutputArgs) -> CmdResult {
    let kind = parse_representation(rep)?;
    let z: ComplexPoint = z_raw.parse()?;
    let result = evaluate(kind, z, n, Some(order))?;
    let err = reference_error(z, result.value);
    let text = if out.json {
        let p = params([
            ("rep", rep.to_string()),
            ("z", z_raw.to_string()),
            ("n", n.to_string()),
            ("order", order.to_string()),
            ("json", "true".into()),
        ]);
        envelope(
            "eval",
            p,
            json!({
                "representation": kind,
                "z": z,
                "value": result.value,
                "truncation": result.truncation,
                "term_count": result.term_count,
                "tail_bound": result.tail_bound,
                "reference_error": err,
            }),
        )
    } else {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "representation={}",
            serde_json::to_value(kind).unwrap().as_str().unwrap()
        );
        let _ = writeln!(s, "z={z}");
        let _ = writeln!(s, "n={n}");
        let _ = writeln!(s, "term_count={}", result.term_count);
        let _ = writeln!(s, "value_re={}", result.value.re());
        let _ = writeln!(s, "value_im={}", result.value.im());
        if let Some(b) = result.tail_bound {
            let _ = writeln!(s, "tail_bound={b}");
        }
        if let Some(e) = err {
            let _ = writeln!(s, "reference_error={e}");
        }
        s
    };
    Ok((text, out.out.clone()))
}

fn cmd_converge(
    rep: &str,
    z_raw: &str,
    n_max: u64,
    step: u64,
    order: usize,
    out: &OutputArgs,
) -> CmdResult {
    let kind = parse_representation(rep)?;
    let z: ComplexPoint = z_raw.parse()?;
    if step == 0 {
        return Err(Failure::Usage("step must be positive".into()));
    }
    let reference = reference_zeta(z).ok();
    let mut rows = Vec::new();
    let mut n = step.max(2);
    while n <= n_max {
        let r = evaluate(kind, z, n, Some(order))?;
        let abs_error = reference.map(|v| (v.value() - r.value.value()).norm());
        rows.push((n, r.value, abs_error, r.tail_bound));
        n += step;
    }
    if rows.is_empty() {
        return Err(Failure::Usage(format!(
            "no truncations in [max(step, 2), {n_max}]"
        )));
    }
    let text = if out.json {
        let p = params([
            ("rep", rep.to_string()),
            ("z", z_raw.to_string()),
            ("n-max", n_max.to_string()),
            ("step", step.to_string()),
            ("order", order.to_string()),
            ("json", "true".into()),
        ]);
        let rows: Vec<Value> = rows
            .iter()
            .map(|(n, v, e, b)| json!({"n": n, "value_re": v.re(), "value_im": v.im(), "abs_error": e, "tail_bound": b}))
            .collect();
        envelope(
            "converge",
            p,
            json!({ "representation": kind, "rows": rows }),
        )
    } else {
        let mut s = String::from("n,value_re,value_im,abs_error,tail_bound\n");
        for (n, v, e, b) in rows {
            let _ = writeln!(
                s,
                "{n},{},{},{},{}",
                csv_float(v.re()),
                csv_float(v.im()),
                opt_csv(e),
                opt_csv(b)
            );
        }
        s
    };
    Ok((text, out.out.clone()))
}

fn cmd_zeros(args: &ZerosArgs) -> CmdResult {
    let mut p = BTreeMap::new();
    let (target, label) = match (&args.preset, &args.rep) {
        (Some(name), _) => {
            p.insert("preset".into(), name.clone());
            let preset: Preset = name.parse()?;
            (preset.target(), Some(preset))
        }
        (None, Some(rep)) => {
            let family = match rep.as_str() {
                "direct" => Family::Direct,
                "alt" | "alternating" => Family::Alternating,
                other => {
                    return Err(Failure::Usage(format!(
                        "zeros --rep must be direct or alt, got '{other}'"
                    )))
                }
            };
            let n = args.n.expect("clap requires --n with --rep");
            let constant = args.constant.unwrap_or(1.0);
            p.insert("rep".into(), rep.clone());
            p.insert("n".into(), n.to_string());
            p.insert("constant".into(), constant.to_string());
            (Target::new(family, n, constant)?, None)
        }
        (None, None) => {
            return Err(Failure::Usage(
                "zeros needs --preset or --rep with --n".into(),
            ))
        }
    };
    let parsed: SearchRegion = args.region.parse()?;
    let region = SearchRegion::with_grid(
        parsed.re_min,
        parsed.re_max,
        parsed.im_min,
        parsed.im_max,
        args.grid,
        args.grid,
    )?;
    p.insert("region".into(), args.region.clone());
    p.insert("tol".into(), args.tol.to_string());
    p.insert("grid".into(), args.grid.to_string());
    if let Some(t) = args.threads {
        p.insert("threads".into(), t.to_string());
    }

    let search = || find_zeros(&target, &region, args.tol);
    let roots = match args.threads {
        Some(0) => return Err(Failure::Usage("--threads must be positive".into())),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Failure::Io(format!("cannot start thread pool: {e}")))?
            .install(search)?,
        None => search()?,
    };
    let count = count_zeros_in_region(&target, &region).ok();

    let roots_json: Vec<Value> = roots
        .iter()
        .map(|r| {
            json!({
                "re": r.location.re(),
                "im": r.location.im(),
                "residual": r.residual,
                "verified": r.verified,
                "winding": r.winding,
                "conjugate_of": r.conjugate_of,
            })
        })
        .collect();
    let payload = json!({
        "target": {
            "preset": label.map(|p| p.name()),
            "family": target.family(),
            "n": target.truncation(),
            "constant": target.constant(),
            "bases": target.bases(),
            "formula": target.formula(),
        },
        "region": region,
        "tol": args.tol,
        "roots": roots_json,
        "region_count": count,
    });
    Ok((envelope("zeros", p, payload), args.out.clone()))
}

fn cmd_special(kind_raw: &str, m: u32, n: u64, out: &OutputArgs) -> CmdResult {
    let kind: SpecialKind = kind_raw.parse()?;
    let v = special_value(kind, m, n)?;
    let text = if out.json {
        let p = params([
            ("kind", kind_raw.to_string()),
            ("m", m.to_string()),
            ("n", n.to_string()),
            ("json", "true".into()),
        ]);
        envelope(
            "special",
            p,
            json!({
                "kind": v.kind,
                "argument": v.argument,
                "value": v.result.value.re(),
                "term_count": v.result.term_count,
                "tail_bound": v.result.tail_bound,
                "euler": v.euler,
                "deviation": v.deviation,
            }),
        )
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "argument={}", v.argument);
        let _ = writeln!(s, "value={}", v.result.value.re());
        let _ = writeln!(s, "term_count={}", v.result.term_count);
        if let Some(b) = v.result.tail_bound {
            let _ = writeln!(s, "tail_bound={b}");
        }
        if let (Some(e), Some(d)) = (v.euler, v.deviation) {
            let _ = writeln!(s, "euler={e}");
            let _ = writeln!(s, "deviation={d}");
        }
        s
    };
    Ok((text, out.out.clone()))
}
