use serde::Serialize;

use crate::cloning::{fidelity_from_eta, ETA_OPTIMAL};
use crate::error::{Error, Result};
use crate::schemes::{disentangle, Scheme};

/// `alpha^2` at which `alpha * beta` peaks; every PT-negativity condition
/// here is hardest to satisfy there.
pub const WORST_CASE_ALPHA2: f64 = 0.5;

pub const DEFAULT_BRACKET: (f64, f64) = (1e-3, ETA_OPTIMAL);

pub const BRACKET_WIDTH: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdQuantity {
    /// Largest reduction factor that disentangles every input state.
    EtaAllAlpha,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ThresholdResult {
    pub scheme: Scheme,
    pub quantity: ThresholdQuantity,
    pub value: f64,
    pub bracket: (f64, f64),
    pub iterations: usize,
    pub fidelity: f64,
}

pub fn find_threshold(scheme: Scheme) -> Result<ThresholdResult> {
    find_threshold_in(scheme, DEFAULT_BRACKET)
}

/// Bisects on `eta` for the edge of "disentangles the worst-case input",
/// judged by the full dilation + PPT pipeline.
pub fn find_threshold_in(scheme: Scheme, (lo, hi): (f64, f64)) -> Result<ThresholdResult> {
    let disentangles = |eta: f64| -> Result<bool> {
        Ok(disentangle(scheme, WORST_CASE_ALPHA2, eta)?.disentangled)
    };
    let (mut lo, mut hi) = (lo, hi);
    let (lo_ok, hi_ok) = (disentangles(lo)?, disentangles(hi)?);
    if lo_ok == hi_ok || !lo_ok {
        return Err(Error::NonBracketing { lo, hi });
    }
    let mut iterations = 0;
    while hi - lo > BRACKET_WIDTH {
        let mid = 0.5 * (lo + hi);
        if disentangles(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    let value = 0.5 * (lo + hi);
    Ok(ThresholdResult {
        scheme,
        quantity: ThresholdQuantity::EtaAllAlpha,
        value,
        bracket: (lo, hi),
        iterations,
        fidelity: fidelity_from_eta(value)?,
    })
}
