//! Command-line front end.
//!
//! Exit codes: 0 success, 1 input or validation error, 2 a verification
//! counterexample, 3 an internal assertion (for instance a non-integral
//! Conway–Coxeter entry).

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bijection::{associated_triangulation, quad_to_tree, BijectionError, Triangulation};
use crate::frieze::{cc_frieze, lambda_frieze, Frieze, FriezeError};
use crate::polygon::{enumerate_p_angulations, fuss_catalan, Dissection};
use crate::verify::{sweep_with, verify_dissection, SweepOptions, VerifyError};

/// Polygons up to this size get the exhaustive uniqueness comparison.
const DEEP_UNIQUENESS_MAX_N: usize = 10;

#[derive(Debug, Parser)]
#[command(
    name = "lambda-friezes",
    version,
    about = "Exact Λ_4 / Λ_6 friezes and their Conway-Coxeter partners"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Input file, or `-` for stdin
    #[arg(long, default_value = "-")]
    input: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Frieze of type Λ_p of a p-angulation
    Gen {
        #[arg(long, value_parser = p_lambda)]
        p: usize,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Conway-Coxeter frieze of a triangulation (or of T_D when --p is given)
    Cc {
        #[arg(long, value_parser = p_lambda)]
        p: Option<usize>,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Noncrossing tree of a quadrangulation
    Tree {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Associated triangulation T_D of a p-angulation
    Associate {
        #[arg(long, value_parser = p_lambda)]
        p: usize,
        #[command(flatten)]
        input: InputArgs,
    },
    /// All p-angulations with s faces, one JSON object per line
    Enumerate {
        #[arg(long, value_parser = p_enumerable)]
        p: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Check the incidence identity and the odd/even row claims
    Verify {
        #[arg(long, value_parser = p_lambda)]
        p: usize,
        /// Sweep every p-angulation with at most this many faces
        #[arg(long)]
        max_s: Option<usize>,
        /// Verify a single dissection instead of sweeping
        #[arg(long)]
        input: Option<String>,
        /// Compare against every triangulation of polygons with at most 10 vertices
        #[arg(long)]
        deep_uniqueness: bool,
    },
    /// Check a frieze JSON file against the frieze rules
    Validate {
        #[command(flatten)]
        input: InputArgs,
    },
}

fn p_lambda(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(p @ (4 | 6)) => Ok(p),
        _ => Err(format!("p must be 4 or 6, got {s:?}")),
    }
}

fn p_enumerable(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(p @ (3 | 4 | 6)) => Ok(p),
        _ => Err(format!("p must be 3, 4 or 6, got {s:?}")),
    }
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Counterexample,
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Counterexample => 2,
            Failure::Internal(_) => 3,
        }
    }
}

impl From<FriezeError> for Failure {
    fn from(e: FriezeError) -> Self {
        match e {
            FriezeError::NonIntegral { .. } | FriezeError::NotPositive { .. } | FriezeError::ClosureFailure { .. } => {
                Failure::Internal(e.to_string())
            }
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<BijectionError> for Failure {
    fn from(e: BijectionError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Frieze(f) => f.into(),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Runs one invocation; returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    1
                }
            };
        }
    };
    match execute(cli.command, stdin, stdout) {
        Ok(()) => 0,
        Err(failure) => {
            match &failure {
                Failure::Input(msg) => {
                    let _ = writeln!(stderr, "error: {msg}");
                }
                Failure::Internal(msg) => {
                    let _ = writeln!(stderr, "internal error: {msg}");
                }
                Failure::Counterexample => {
                    let _ = writeln!(stderr, "verification found a counterexample");
                }
            }
            failure.code()
        }
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        stdin.read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))
    }
}

fn parse<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Input(format!("malformed input: {e}")))
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string(value).map_err(|e| Failure::Internal(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn write_frieze(out: &mut dyn Write, f: &Frieze, format: Format) -> Result<(), Failure> {
    match format {
        Format::Ascii => write!(out, "{}", f.to_ascii())?,
        Format::Csv => write!(out, "{}", f.to_csv())?,
        Format::Json => write_json(out, f)?,
    }
    Ok(())
}

fn execute(command: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Gen { p, input, format } => {
            let d: Dissection = parse(&read_input(&input.input, stdin)?)?;
            let f = lambda_frieze(&d, p)?;
            write_frieze(out, &f, format)
        }
        Command::Cc { p, input, format } => {
            let text = read_input(&input.input, stdin)?;
            let t = match p {
                Some(p) => associated_triangulation(&parse::<Dissection>(&text)?, p)?,
                None => Triangulation::new(parse::<Dissection>(&text)?)?,
            };
            let f = cc_frieze(&t)?;
            write_frieze(out, &f, format)
        }
        Command::Tree { input } => {
            let d: Dissection = parse(&read_input(&input.input, stdin)?)?;
            write_json(out, &quad_to_tree(&d)?)
        }
        Command::Associate { p, input } => {
            let d: Dissection = parse(&read_input(&input.input, stdin)?)?;
            write_json(out, &associated_triangulation(&d, p)?)
        }
        Command::Enumerate { p, s, count_only } => {
            if s == 0 {
                return Err(Failure::Input("--s must be at least 1".into()));
            }
            if count_only {
                let all = enumerate_p_angulations(s, p).map_err(|e| Failure::Input(e.to_string()))?;
                if all.len() as u128 != fuss_catalan(s, p) {
                    return Err(Failure::Internal(
                        "enumeration count disagrees with Fuss-Catalan".into(),
                    ));
                }
                writeln!(out, "{}", all.len())?;
            } else {
                for d in enumerate_p_angulations(s, p).map_err(|e| Failure::Input(e.to_string()))? {
                    write_json(out, &d)?;
                }
            }
            Ok(())
        }
        Command::Verify {
            p,
            max_s,
            input,
            deep_uniqueness,
        } => {
            if let Some(path) = input {
                let d: Dissection = parse(&read_input(&path, stdin)?)?;
                let report = verify_dissection(&d, p)?;
                write_json(out, &report)?;
                return if report.all_ok() {
                    Ok(())
                } else {
                    Err(Failure::Counterexample)
                };
            }
            let s_max = max_s.unwrap_or(if p == 4 { 5 } else { 3 });
            let options = SweepOptions {
                deep_uniqueness_max_n: deep_uniqueness.then_some(DEEP_UNIQUENESS_MAX_N),
            };
            let summary = sweep_with(p, s_max, options)?;
            write_json(out, &summary)?;
            if summary.all_ok {
                Ok(())
            } else {
                Err(Failure::Counterexample)
            }
        }
        Command::Validate { input } => {
            let f: Frieze = parse(&read_input(&input.input, stdin)?)?;
            let report = f.validate();
            write_json(out, &report)?;
            if report.is_valid() {
                Ok(())
            } else {
                Err(Failure::Input(format!(
                    "{} frieze rule violations",
                    report.violations.len()
                )))
            }
        }
    }
}
