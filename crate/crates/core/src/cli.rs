//! `fatpoints` command line.
//!
//! Exit codes: 0 success (and every requested check passed), 1 usage or
//! input error, 2 a verification check failed, 3 a resource limit was hit.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::hilbert::{Engine, DEFAULT_COLUMN_CAP};
use crate::scheme::{gen_random, FatPointScheme, PointConfig};
use crate::verify::{rnc_reg_formula, run_checks, CheckKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CHECK_FAILED: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Environment variable overriding [`DEFAULT_COLUMN_CAP`].
pub const COLUMN_CAP_VAR: &str = "FATPOINTS_COLUMN_CAP";

#[derive(Debug, Parser)]
#[command(
    name = "fatpoints",
    version,
    about = "Hilbert functions and regularity indices of fat points"
)]
pub struct CliConfig {
    /// Largest matrix width to build; defaults to $FATPOINTS_COLUMN_CAP, then
    /// to the library default.
    #[arg(long, global = true)]
    pub column_cap: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert function in one degree or over a range of degrees.
    Hilbert {
        #[arg(long)]
        scheme: PathBuf,
        /// Single degree.
        #[arg(long = "t", conflicts_with = "tmax", required_unless_present = "tmax")]
        t: Option<usize>,
        /// All degrees 0..=TMAX.
        #[arg(long)]
        tmax: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Regularity index.
    Reg {
        #[arg(long)]
        scheme: PathBuf,
    },
    /// Multiplicity (degree) of the scheme.
    Multiplicity {
        #[arg(long)]
        scheme: PathBuf,
    },
    /// Pad every point with zeros to land in P^M.
    Embed {
        #[arg(long)]
        scheme: PathBuf,
        #[arg(long)]
        target_dim: usize,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Random scheme with the given multiplicities.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        mults: Vec<u32>,
        #[arg(long)]
        config: PointConfig,
        #[arg(long)]
        seed: u64,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Check the embedding identities on one scheme.
    Verify {
        #[arg(long)]
        scheme: PathBuf,
        #[arg(long)]
        target_dim: usize,
        /// Comma list from reg, stable, transfer, cor46, prop44, restriction,
        /// lemma23, rnc, all (plus the diagnostic prop44-shifted).
        #[arg(long, default_value = "all")]
        checks: String,
        /// `json` writes one report per line.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Closed-form regularity index for points on a rational normal curve.
    RncFormula {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        mults: Vec<u32>,
    },
}

enum Failure {
    Input(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit { .. } => Failure::Resource(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

#[derive(Serialize)]
struct HilbertValue {
    t: usize,
    h: u64,
}

#[derive(Serialize)]
struct HilbertOutput {
    ambient_dim: usize,
    multiplicity: u64,
    values: Vec<HilbertValue>,
}

/// Runs one invocation against the process's standard streams.
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
    let config = match CliConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_INPUT
                }
            };
        }
    };
    match execute(config.command, config.column_cap, out, err) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Resource(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_RESOURCE
        }
    }
}

fn engine(column_cap: Option<usize>) -> Result<Engine, Failure> {
    if let Some(cap) = column_cap {
        return Ok(Engine::new(cap));
    }
    match std::env::var(COLUMN_CAP_VAR) {
        Ok(v) => {
            v.trim().parse::<usize>().map(Engine::new).map_err(|_| {
                Failure::Input(format!("{COLUMN_CAP_VAR}={v:?} is not a column count"))
            })
        }
        Err(_) => Ok(Engine::new(DEFAULT_COLUMN_CAP)),
    }
}

fn load(path: &Path) -> Result<FatPointScheme, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    FatPointScheme::from_json(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit(text: &str, output: Option<&Path>, out: &mut dyn Write) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, format!("{text}\n"))?,
        None => writeln!(out, "{text}")?,
    }
    Ok(())
}

fn execute(
    command: Command,
    column_cap: Option<usize>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let engine = engine(column_cap)?;
    match command {
        Command::Hilbert {
            scheme,
            t,
            tmax,
            format,
        } => {
            let z = load(&scheme)?;
            let degrees: Vec<usize> = match (t, tmax) {
                (Some(t), _) => vec![t],
                (None, Some(tmax)) => (0..=tmax).collect(),
                (None, None) => unreachable!("clap requires --t or --tmax"),
            };
            let values = degrees
                .iter()
                .map(|&t| {
                    Ok(HilbertValue {
                        t,
                        h: engine.hilbert_function(&z, t)?,
                    })
                })
                .collect::<Result<Vec<_>, Error>>()?;
            match format {
                Format::Text => {
                    let width = degrees.last().map_or(1, |t| t.to_string().len());
                    for v in &values {
                        writeln!(out, "t:{:<width$} H:{}", v.t, v.h)?;
                    }
                }
                Format::Json => {
                    let doc = HilbertOutput {
                        ambient_dim: z.ambient_dim(),
                        multiplicity: z.multiplicity(),
                        values,
                    };
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string_pretty(&doc).map_err(Error::from)?
                    )?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Reg { scheme } => {
            let z = load(&scheme)?;
            writeln!(out, "reg = {}", engine.regularity_index(&z)?)?;
            Ok(EXIT_OK)
        }
        Command::Multiplicity { scheme } => {
            let z = load(&scheme)?;
            writeln!(out, "e = {}", z.multiplicity())?;
            Ok(EXIT_OK)
        }
        Command::Embed {
            scheme,
            target_dim,
            output,
        } => {
            let z = load(&scheme)?.embed(target_dim)?;
            emit(&z.to_json_pretty(), output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Gen {
            n,
            mults,
            config,
            seed,
            output,
        } => {
            let z = gen_random(n, &mults, config, seed)?;
            emit(&z.to_json_pretty(), output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            scheme,
            target_dim,
            checks,
            format,
        } => {
            let z = load(&scheme)?;
            let kinds = CheckKind::parse_list(&checks).map_err(Failure::Input)?;
            let reports = run_checks(&engine, &z, target_dim, &kinds)?;
            match format {
                Format::Text => {
                    for r in &reports {
                        write!(out, "{r}")?;
                    }
                }
                Format::Json => {
                    for r in &reports {
                        writeln!(out, "{}", serde_json::to_string(r).map_err(Error::from)?)?;
                    }
                }
            }
            let mut failed = false;
            for r in &reports {
                if let Some(c) = r.counterexample() {
                    failed = true;
                    let t = c.t.map_or_else(|| "-".to_string(), |t| t.to_string());
                    writeln!(
                        err,
                        "check {} failed at t={t}: {} {} {} ({})",
                        r.check,
                        c.lhs,
                        c.relation.symbol(),
                        c.rhs,
                        c.label.as_deref().unwrap_or("")
                    )?;
                }
            }
            Ok(if failed { EXIT_CHECK_FAILED } else { EXIT_OK })
        }
        Command::RncFormula { n, mults } => {
            writeln!(out, "reg = {}", rnc_reg_formula(&mults, n)?)?;
            Ok(EXIT_OK)
        }
    }
}
