//! Command-line front end: point checks, grid sweeps, threshold search and
//! scheme comparison.
//!
//! Exit codes: 0 success, 2 usage error (including out-of-range parameters),
//! 3 I/O error, 1 anything else.

mod sweep;
mod threshold;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::schemes::{compare_schemes, disentangle, Scheme, SchemeComparison, SchemeReport};

pub use sweep::{
    analytic_window, row_window_says_entangled, run_sweep, write_csv, write_json, Grid, GridAxis,
    OutputFormat, SweepConfig, SweepRow, CSV_HEADER,
};
pub use threshold::{
    find_threshold, find_threshold_in, ThresholdQuantity, ThresholdResult, BRACKET_WIDTH,
    DEFAULT_BRACKET, WORST_CASE_ALPHA2,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SchemeArg {
    /// Clone one qubit.
    #[value(alias = "single_clone")]
    Split,
    /// Clone both qubits.
    #[value(alias = "double_clone")]
    Broadcast,
}

impl From<SchemeArg> for Scheme {
    fn from(arg: SchemeArg) -> Self {
        match arg {
            SchemeArg::Split => Scheme::SingleClone,
            SchemeArg::Broadcast => Scheme::DoubleClone,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "disentangle",
    version,
    about = "Disentangle two-qubit states by local cloning"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run one scheme at a single (alpha^2, eta) point.
    Check {
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        #[arg(long, allow_negative_numbers = true)]
        alpha2: f64,
        #[arg(long, allow_negative_numbers = true)]
        eta: f64,
        /// Print JSON or a one-row CSV instead of text.
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Evaluate a scheme on an (alpha^2, eta) grid.
    Sweep {
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        /// a2min:a2max:steps,emin:emax:steps
        #[arg(long)]
        grid: Grid,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bisect for the largest eta that disentangles every input.
    Threshold {
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
    /// Compare both schemes and the 1->3 cloner for one input.
    Compare {
        #[arg(long, allow_negative_numbers = true)]
        alpha2: f64,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Model(#[from] Error),
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Model(Error::OutOfRange { .. }) => EXIT_USAGE,
            CliError::Model(_) => EXIT_FAILURE,
            CliError::Io(_) => EXIT_IO,
            CliError::Json(e) if e.is_io() => EXIT_IO,
            CliError::Json(_) => EXIT_FAILURE,
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Check {
            scheme,
            alpha2,
            eta,
            format,
        } => {
            let report = disentangle(scheme.into(), alpha2, eta)?;
            match format {
                None => write_report_text(&report, out)?,
                Some(OutputFormat::Json) => write_pretty_json(&report, out)?,
                Some(OutputFormat::Csv) => write_csv(&[SweepRow::from_report(&report)?], out)?,
            }
        }
        Command::Sweep {
            scheme,
            grid,
            format,
            out: path,
        } => {
            let config = SweepConfig {
                grid,
                scheme: scheme.into(),
                output_format: format,
                output_path: path,
            };
            execute_sweep(&config, out)?;
        }
        Command::Threshold { scheme, format } => {
            let result = find_threshold(scheme.into())?;
            match format {
                Some(OutputFormat::Json) => write_pretty_json(&result, out)?,
                _ => write_threshold_text(&result, out)?,
            }
        }
        Command::Compare { alpha2, format } => {
            let cmp = compare_schemes(alpha2)?;
            match format {
                Some(OutputFormat::Json) => write_pretty_json(&cmp, out)?,
                _ => write_comparison_text(&cmp, out)?,
            }
        }
    }
    Ok(())
}

fn execute_sweep(config: &SweepConfig, stdout: &mut dyn Write) -> Result<(), CliError> {
    let rows = run_sweep(&config.grid, config.scheme)?;
    let emit = |w: &mut dyn Write| match config.output_format {
        OutputFormat::Csv => write_csv(&rows, w),
        OutputFormat::Json => write_json(&rows, w),
    };
    match &config.output_path {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            emit(&mut file)?;
            file.flush()?;
        }
        None => emit(stdout)?,
    }
    Ok(())
}

fn write_pretty_json<T: serde::Serialize>(value: &T, out: &mut dyn Write) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn write_report_text(r: &SchemeReport, out: &mut dyn Write) -> io::Result<()> {
    writeln!(
        out,
        "scheme={} alpha2={} eta={}",
        r.scheme, r.input_alpha2, r.eta
    )?;
    for o in &r.output_states {
        writeln!(
            out,
            "  {:<14} {:?}: min_pt_eigenvalue={:.3e} negativity={:.3e} separable={}",
            o.name, o.kind, o.verdict.min_pt_eigenvalue, o.verdict.negativity, o.verdict.separable
        )?;
    }
    for rec in &r.recovered_eta {
        match rec.eta {
            Some(eta) => writeln!(out, "  recovered eta[{}]={eta:.12}", rec.subsystem)?,
            None => writeln!(
                out,
                "  recovered eta[{}]=undefined (maximally mixed)",
                rec.subsystem
            )?,
        }
    }
    writeln!(out, "disentangled={}", r.disentangled)
}

fn write_threshold_text(t: &ThresholdResult, out: &mut dyn Write) -> io::Result<()> {
    writeln!(
        out,
        "scheme={} eta={:.12} bracket=[{:.12}, {:.12}] iterations={} fidelity={:.12}",
        t.scheme, t.value, t.bracket.0, t.bracket.1, t.iterations, t.fidelity
    )
}

fn write_comparison_text(c: &SchemeComparison, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "alpha2={}", c.alpha2)?;
    for s in [&c.single, &c.double] {
        writeln!(
            out,
            "  {:<13} all inputs: eta={:.9} F={:.9}   this input: eta={:.9} F={:.9} optimal_cloner_ok={}",
            s.scheme.to_string(),
            s.eta_all_alpha,
            s.fidelity_all_alpha,
            s.eta_for_input,
            s.fidelity_for_input,
            s.optimal_cloner_disentangles
        )?;
    }
    writeln!(out, "  one_to_three  F={:.9}", c.one_to_three_fidelity)?;
    writeln!(out, "ranking: {}", c.fidelity_ranking.join(" > "))
}
