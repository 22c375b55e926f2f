//! The `msf7` command-line front end.
//!
//! Exit codes: `0` when the command's check passes, `1` when it fails
//! (`classify` on a non-orbit, `topo-check` answering NO, `verify-paper` with
//! a failing check), `2` on usage or input errors, `3` when `topo-check`
//! answers UNKNOWN.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::Path;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::exterior::KForm;
use crate::forms7::{canonical, classify, invariant_vector, sample_orbit, Classification, Variant};
use crate::stabilizers::verify_paper;
use crate::topology::{bundled, check_type, load_model, CohomologyModel, VerdictStatus, DEFAULT_BOUND};
use crate::Result;

/// Environment variable overriding randomized iteration counts.
pub const FUZZ_ITERS_VAR: &str = "MSF7_FUZZ_ITERS";

/// Random draws per embedding in `verify-paper` when the variable is unset.
pub const DEFAULT_DRAWS: usize = 50;

pub fn fuzz_iters(default: usize) -> usize {
    std::env::var(FUZZ_ITERS_VAR).ok().and_then(|v| v.parse().ok()).unwrap_or(default)
}

#[derive(Debug, Parser)]
#[command(name = "msf7", version, about = "Multisymplectic 3-forms in dimension seven")]
pub struct Cli {
    /// Machine-readable JSON on stdout.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a canonical representative as KForm JSON.
    Canon {
        orbit: u8,
        #[arg(long, default_value = "standard")]
        variant: Variant,
    },
    /// Classify a 3-form read from a file (`-` for stdin).
    Classify { input: String },
    /// Print the invariant vector of a 3-form.
    Invariants { input: String },
    /// Pull a canonical form back along a seeded random integer map.
    Sample {
        #[arg(long)]
        orbit: u8,
        #[arg(long)]
        seed: u64,
    },
    /// Run the transformation catalog, identities, compact dimensions and
    /// embedding draws.
    VerifyPaper {
        /// Random draws per embedding; defaults to $MSF7_FUZZ_ITERS or 50.
        #[arg(long)]
        draws: Option<usize>,
    },
    /// Decide whether a manifold admits a global form of the given type.
    TopoCheck {
        /// Path to a model JSON file, or the name of a bundled model.
        model: String,
        #[arg(long = "type", value_parser = clap::value_parser!(u8).range(1..=8))]
        type_id: u8,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u32,
    },
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn read_input(input: &str) -> Result<String> {
    if input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(std::fs::read_to_string(input)?)
    }
}

fn resolve_model(arg: &str) -> Result<CohomologyModel> {
    if Path::new(arg).exists() {
        load_model(arg)
    } else {
        bundled(arg)
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Canon { orbit, variant } => {
            let form = canonical(*orbit, *variant)?.form;
            emit_form(out, cli.json, &form)?;
            Ok(0)
        }
        Command::Classify { input } => {
            let w = KForm::from_json(&read_input(input)?)?;
            let c = classify(&w)?;
            if cli.json {
                let orbit = match c {
                    Classification::Orbit(i) => Some(i),
                    _ => None,
                };
                writeln!(out, "{}", json!({ "classification": c.to_string(), "orbit": orbit }))?;
            } else {
                writeln!(out, "{c}")?;
            }
            Ok(if matches!(c, Classification::Orbit(_)) { 0 } else { 1 })
        }
        Command::Invariants { input } => {
            let w = KForm::from_json(&read_input(input)?)?;
            let v = invariant_vector(&w)?;
            if cli.json {
                writeln!(out, "{}", serde_json::to_string(&v)?)?;
            } else {
                writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
            }
            Ok(0)
        }
        Command::Sample { orbit, seed } => {
            let (form, map) = sample_orbit(*orbit, *seed)?;
            let value = json!({
                "orbit": orbit,
                "seed": seed,
                "form": serde_json::from_str::<serde_json::Value>(&form.to_json())?,
                "map": serde_json::from_str::<serde_json::Value>(&map.to_json())?,
            });
            if cli.json {
                writeln!(out, "{value}")?;
            } else {
                writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?;
            }
            Ok(0)
        }
        Command::VerifyPaper { draws } => {
            let report = verify_paper(draws.unwrap_or_else(|| fuzz_iters(DEFAULT_DRAWS)))?;
            if cli.json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                write!(out, "{report}")?;
            }
            Ok(if report.all_passed() { 0 } else { 1 })
        }
        Command::TopoCheck { model, type_id, bound } => {
            let m = resolve_model(model)?;
            let v = check_type(&m, *type_id, *bound)?;
            if cli.json {
                writeln!(out, "{}", v.to_json())?;
            } else {
                writeln!(out, "{}: type {type_id} {} (bound {}): {}", m.name, v.status, v.bound_used, v.reason)?;
                if let Some(w) = &v.witness {
                    writeln!(out, "witness: {w:?}")?;
                }
            }
            Ok(match v.status {
                VerdictStatus::Admits => 0,
                VerdictStatus::No => 1,
                VerdictStatus::Unknown => 3,
            })
        }
    }
}

fn emit_form(out: &mut dyn Write, compact: bool, form: &KForm) -> Result<()> {
    if compact {
        writeln!(out, "{}", form.to_json())?;
    } else {
        writeln!(out, "{}", form.to_json_pretty())?;
    }
    Ok(())
}
