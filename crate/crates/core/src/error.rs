use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid subsystem dimensions {0:?}")]
    InvalidDims(Vec<usize>),

    #[error("subsystem index {index} out of range for {count} subsystems")]
    SubsystemIndex { index: usize, count: usize },

    #[error("subsystem {index} has dimension {found}, expected {expected}")]
    SubsystemDim {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("matrix contains a non-finite entry")]
    NonFinite,

    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("{name} = {value} is outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("reference state is maximally mixed; reduction factor is undefined")]
    DegenerateReference,

    #[error("PPT test requires a 2x2 bipartition, got {0:?}")]
    NotTwoQubit(Vec<usize>),

    #[error("predicate does not change sign over [{lo}, {hi}]")]
    NonBracketing { lo: f64, hi: f64 },
}

/// Checks `value` lies in `[lo, hi]`, rejecting NaN.
pub(crate) fn check_range(
    name: &'static str,
    value: f64,
    lo: f64,
    hi: f64,
    range: &'static str,
) -> Result<()> {
    if value.is_finite() && value >= lo && value <= hi {
        Ok(())
    } else {
        Err(Error::OutOfRange { name, value, range })
    }
}
