//! Command-line front end. [`run`] returns the process exit code so the
//! binary stays a one-liner and tests can drive it in-process.
//!
//! Exit codes: 0 success or `Member`, 1 failed identity or suite, 2 usage or
//! input error, 3 `NotMember`, 4 `BudgetExceeded`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::expr::{parse_expr, parse_family, parse_slice};
use crate::freealg::{parse, Polynomial};
use crate::gfp::Prime;
use crate::suite::{run_suite, Selection, SuiteConfig, DEFAULT_SEED};
use crate::tspace::{membership, span_dimension, Budget, Status};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_NOT_MEMBER: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "tspaces", version, about = "Free algebra and T-space computations over GF(p)")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Characteristic of the coefficient field
    #[arg(long = "p", global = true)]
    p: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, global = true)]
    max_generators: Option<u64>,
    #[arg(long = "max-dim", global = true)]
    max_dim: Option<u64>,
    /// Seconds
    #[arg(long, global = true)]
    time_limit: Option<u64>,
    /// Print membership certificates
    #[arg(long, global = true)]
    certificate: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand an expression to canonical form
    Expand {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Test whether two expressions are equal (exit 0) or not (exit 1)
    IdentityCheck {
        #[arg(allow_hyphen_values = true)]
        lhs: String,
        #[arg(allow_hyphen_values = true)]
        rhs: String,
    },
    /// Decide membership of a multihomogeneous target in a family's span
    Member {
        #[arg(allow_hyphen_values = true)]
        target: String,
        family: String,
    },
    /// Span dimension of a family inside a slice
    Dim { family: String, slice: String },
    /// Coefficient of a word in an expression
    Coeff {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        word: String,
    },
    /// Run the verification suite
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("selection").args(["all", "checks", "section"])))]
struct VerifyArgs {
    #[arg(long)]
    all: bool,
    /// Check ids, comma separated or repeated
    #[arg(long = "check", value_delimiter = ',')]
    checks: Vec<String>,
    #[arg(long)]
    section: Option<u8>,
    /// Write the JSON report here
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Include stretch variants
    #[arg(long)]
    stretch: bool,
}

impl Global {
    fn budget(&self) -> Budget {
        let d = Budget::default();
        Budget {
            max_generators: self.max_generators.unwrap_or(d.max_generators),
            max_dimension: self.max_dim.unwrap_or(d.max_dimension),
            time_limit: self.time_limit.map(Duration::from_secs).unwrap_or(d.time_limit),
        }
    }

    fn prime(&self) -> Result<Prime> {
        match self.p {
            Some(p) => Prime::new(p),
            None => Err(Error::Unsupported("--p is required for this subcommand".into())),
        }
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn emit(out: &mut dyn Write, format: Format, text: &str, value: serde_json::Value) -> Result<()> {
    let s = match format {
        Format::Text => text.to_string(),
        Format::Json => serde_json::to_string_pretty(&value).expect("json value serializes"),
    };
    writeln!(out, "{s}").map_err(|e| Error::Unsupported(format!("cannot write output: {e}")))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let g = &cli.global;
    match &cli.command {
        Command::Expand { expr } => {
            let p = g.prime()?;
            let f = parse_expr(expr, p)?;
            emit(out, g.format, &f.to_string(), json!({ "p": p.value(), "polynomial": f.to_string() }))?;
            Ok(EXIT_OK)
        }
        Command::IdentityCheck { lhs, rhs } => {
            let p = g.prime()?;
            let residue = parse_expr(lhs, p)? - parse_expr(rhs, p)?;
            let equal = residue.is_zero();
            let text = if equal { "equal".to_string() } else { format!("not equal; residue {residue}") };
            emit(
                out,
                g.format,
                &text,
                json!({ "p": p.value(), "equal": equal, "residue": residue.to_string() }),
            )?;
            Ok(if equal { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Member { target, family } => member(g, target, family, out),
        Command::Dim { family, slice } => {
            let p = g.prime()?;
            let fam = parse_family(family, p)?;
            let slice = parse_slice(slice)?;
            let dim = span_dimension(&fam, &slice, p, &g.budget());
            let dim = match dim {
                Err(Error::BudgetExceeded(msg)) => {
                    emit(out, g.format, &format!("BudgetExceeded: {msg}"), json!({ "status": "BudgetExceeded", "message": msg }))?;
                    return Ok(EXIT_BUDGET);
                }
                other => other?,
            };
            let ambient = slice.word_count();
            emit(
                out,
                g.format,
                &format!("{fam} at {slice}: dimension {dim} of {ambient}"),
                json!({
                    "p": p.value(),
                    "family": fam.to_string(),
                    "slice": slice.to_string(),
                    "dimension": dim,
                    "ambient_dimension": ambient,
                    "semantics": fam.semantics(),
                }),
            )?;
            Ok(EXIT_OK)
        }
        Command::Coeff { expr, word } => {
            let p = g.prime()?;
            let f = parse_expr(expr, p)?;
            let m = parse(word, p)?;
            let w = match m.raw_terms().iter().collect::<Vec<_>>().as_slice() {
                [(w, 1)] => (*w).clone(),
                _ => return Err(Error::Parse { pos: 0, message: format!("'{word}' is not a single word") }),
            };
            let c = f.coeff(&w);
            emit(
                out,
                g.format,
                &c.residue().to_string(),
                json!({ "p": p.value(), "word": w.to_string(), "coefficient": c.residue() }),
            )?;
            Ok(EXIT_OK)
        }
        Command::Verify(v) => verify(g, v, out),
    }
}

fn member(g: &Global, target: &str, family: &str, out: &mut dyn Write) -> Result<i32> {
    let p = g.prime()?;
    let t = parse_expr(target, p)?;
    let fam = parse_family(family, p)?;
    let comps = t.components();
    if comps.len() > 1 {
        let list: Vec<String> = comps.keys().map(|d| d.to_string()).collect();
        return Err(Error::Unsupported(format!(
            "target is not multihomogeneous; components at {}",
            list.join(", ")
        )));
    }
    let v = membership(&t, &fam, &g.budget(), g.certificate)?;
    let slice = v.slices.first().map(|d| d.to_string()).unwrap_or_else(|| "{}".into());
    let mut text = format!(
        "{}\nfamily {fam}\nslice {slice}\ndimension {} of {}\ngenerators {}\nsemantics {}",
        v.status_label(),
        v.dimension,
        v.ambient_dimension,
        v.generators_used,
        v.semantics.label()
    );
    let cert_json = v.certificate.as_ref().map(|c| {
        c.iter()
            .map(|t| json!({ "generator": t.generator.to_string(), "coefficient": t.coefficient.residue() }))
            .collect::<Vec<_>>()
    });
    if let Some(c) = &v.certificate {
        text.push_str(&format!("\ncertificate {} terms", c.len()));
        for term in c {
            text.push_str(&format!("\n  {} * {}", term.coefficient.residue(), term.generator));
        }
    }
    if let Some(r) = &v.remainder {
        text.push_str(&format!("\nremainder {r}"));
    }
    emit(
        out,
        g.format,
        &text,
        json!({
            "p": p.value(),
            "status": v.status,
            "status_label": v.status_label(),
            "family": fam.to_string(),
            "slice": slice,
            "dimension": v.dimension,
            "ambient_dimension": v.ambient_dimension,
            "generators_used": v.generators_used,
            "semantics": v.semantics,
            "certificate": cert_json,
            "remainder": v.remainder.as_ref().map(Polynomial::to_string),
        }),
    )?;
    Ok(match v.status {
        Status::Member => EXIT_OK,
        Status::NotMember => EXIT_NOT_MEMBER,
        Status::BudgetExceeded => EXIT_BUDGET,
    })
}

fn verify(g: &Global, v: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let selection = if !v.checks.is_empty() {
        Selection::Ids(v.checks.clone())
    } else if let Some(s) = v.section {
        Selection::Section(s)
    } else {
        Selection::All
    };
    let config = SuiteConfig {
        selection,
        budget: g.budget(),
        prime_override: g.p.map(Prime::new).transpose()?,
        seed: v.seed,
        stretch: v.stretch,
    };
    let report = run_suite(&config)?;
    if let Some(path) = &v.out {
        std::fs::write(path, report.to_json() + "\n")
            .map_err(|e| Error::Unsupported(format!("cannot write {}: {e}", path.display())))?;
    }
    let text = report.to_table();
    match g.format {
        Format::Text => write!(out, "{text}"),
        Format::Json => writeln!(out, "{}", report.to_json()),
    }
    .map_err(|e| Error::Unsupported(format!("cannot write output: {e}")))?;
    Ok(if report.all_passed() { EXIT_OK } else { EXIT_FALSE })
}
