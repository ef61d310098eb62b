use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::cloning::ClonerSpec;
use crate::error::Result;
use crate::schemes::{disentangle, Scheme, SchemeReport};
use crate::separability::{broadcast_nonlocal_window, split_window, Alpha2Window};

/// `min:max:steps`, `steps` evenly spaced points including both ends.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GridAxis {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl GridAxis {
    pub fn new(min: f64, max: f64, steps: usize) -> std::result::Result<Self, String> {
        if !(min.is_finite() && max.is_finite()) || min > max {
            return Err(format!("invalid range {min}:{max}"));
        }
        if steps == 0 {
            return Err("steps must be at least 1".into());
        }
        Ok(Self { min, max, steps })
    }

    pub fn points(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.min];
        }
        let span = self.max - self.min;
        let last = self.steps - 1;
        (0..self.steps)
            .map(|i| {
                if i == last {
                    self.max
                } else {
                    self.min + span * i as f64 / last as f64
                }
            })
            .collect()
    }
}

impl FromStr for GridAxis {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [min, max, steps] = parts.as_slice() else {
            return Err(format!("expected min:max:steps, got {s:?}"));
        };
        let num = |x: &str| x.trim().parse::<f64>().map_err(|e| format!("{x:?}: {e}"));
        let steps = steps
            .trim()
            .parse::<usize>()
            .map_err(|e| format!("{steps:?}: {e}"))?;
        Self::new(num(min)?, num(max)?, steps)
    }
}

/// `a2min:a2max:steps,emin:emax:steps`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Grid {
    pub alpha2: GridAxis,
    pub eta: GridAxis,
}

impl Grid {
    pub fn validate(&self) -> Result<()> {
        for a2 in [self.alpha2.min, self.alpha2.max] {
            crate::error::check_range("alpha2", a2, 0.0, 1.0, "[0, 1]")?;
        }
        for eta in [self.eta.min, self.eta.max] {
            ClonerSpec::new(eta)?;
        }
        Ok(())
    }
}

impl FromStr for Grid {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (a, e) = s
            .split_once(',')
            .ok_or_else(|| format!("expected two comma-separated axes, got {s:?}"))?;
        Ok(Self {
            alpha2: a.parse()?,
            eta: e.parse()?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub grid: Grid,
    pub scheme: Scheme,
    pub output_format: OutputFormat,
    /// `None` writes to stdout.
    pub output_path: Option<PathBuf>,
}

pub const CSV_HEADER: [&str; 8] = [
    "alpha2",
    "eta",
    "min_pt_eigenvalue",
    "negativity",
    "separable",
    "disentangled",
    "window_lower",
    "window_upper",
];

/// One grid point. `separable` refers to the cross-party output that gates
/// success; the window is the analytic region whose interior is entangled.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub alpha2: f64,
    pub eta: f64,
    pub min_pt_eigenvalue: f64,
    pub negativity: f64,
    pub separable: bool,
    pub disentangled: bool,
    pub window_lower: Option<f64>,
    pub window_upper: Option<f64>,
}

/// Analytic entangled-region window used in sweep output.
pub fn analytic_window(scheme: Scheme, eta: f64) -> Result<Alpha2Window> {
    match scheme {
        Scheme::SingleClone => split_window(eta),
        Scheme::DoubleClone => broadcast_nonlocal_window(eta),
    }
}

impl SweepRow {
    pub fn from_report(report: &SchemeReport) -> Result<Self> {
        let verdict = report.primary_output().verdict;
        let window = analytic_window(report.scheme, report.eta)?;
        Ok(Self {
            alpha2: report.input_alpha2,
            eta: report.eta,
            min_pt_eigenvalue: verdict.min_pt_eigenvalue,
            negativity: verdict.negativity,
            separable: verdict.separable,
            disentangled: report.disentangled,
            window_lower: window.bounds().map(|b| b.0),
            window_upper: window.bounds().map(|b| b.1),
        })
    }

    fn csv_fields(&self) -> [String; 8] {
        let opt = |x: Option<f64>| x.map(|v| v.to_string()).unwrap_or_default();
        [
            self.alpha2.to_string(),
            self.eta.to_string(),
            self.min_pt_eigenvalue.to_string(),
            self.negativity.to_string(),
            self.separable.to_string(),
            self.disentangled.to_string(),
            opt(self.window_lower),
            opt(self.window_upper),
        ]
    }
}

/// Evaluates every grid point, alpha2-major. Points are computed in parallel
/// but returned in grid order.
pub fn run_sweep(grid: &Grid, scheme: Scheme) -> Result<Vec<SweepRow>> {
    grid.validate()?;
    let points: Vec<(f64, f64)> = grid
        .alpha2
        .points()
        .into_iter()
        .flat_map(|a2| grid.eta.points().into_iter().map(move |eta| (a2, eta)))
        .collect();
    points
        .par_iter()
        .map(|&(a2, eta)| SweepRow::from_report(&disentangle(scheme, a2, eta)?))
        .collect()
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> std::io::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        w.write_record(row.csv_fields())?;
    }
    w.flush()
}

pub fn write_json<W: Write>(rows: &[SweepRow], mut out: W) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut out, rows)?;
    out.write_all(b"\n")
}

/// Strict-interior membership check used to re-derive the `separable`
/// column from the window columns alone.
pub fn row_window_says_entangled(row: &SweepRow) -> bool {
    match (row.window_lower, row.window_upper) {
        (Some(lo), Some(hi)) => lo < row.alpha2 && row.alpha2 < hi,
        _ => false,
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        })
    }
}
