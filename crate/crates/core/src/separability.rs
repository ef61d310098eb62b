//! Separability of two-qubit states.
//!
//! For a `2 ⊗ 2` system a state is separable exactly when its partial
//! transpose is positive semidefinite, so the numerical verdict here is
//! exact up to the eigenvalue tolerance. The analytic predicates describe
//! the same boundaries in closed form for the cloner outputs.

use serde::Serialize;

use crate::error::{check_range, Error, Result};
use crate::linalg::{hermitian_eigenvalues, partial_transpose, ComplexMatrix, SubsystemDims};

/// A PT eigenvalue at or above `-PPT_TOL` counts as non-negative.
pub const PPT_TOL: f64 = 1e-10;

/// Reduction factor at or below which splitting disentangles every input.
pub const SPLIT_ETA_THRESHOLD: f64 = 1.0 / 3.0;

/// `1/sqrt(3)`: below this, broadcasting disentangles every input.
pub const BROADCAST_ETA_THRESHOLD: f64 = 0.577_350_269_189_625_8;

// Radicands this close to zero from below are treated as a degenerate window.
const RADICAND_SLACK: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SeparabilityVerdict {
    pub min_pt_eigenvalue: f64,
    /// Sum of `|lambda|` over negative PT eigenvalues.
    pub negativity: f64,
    pub separable: bool,
}

impl SeparabilityVerdict {
    /// Eigenvalue within `PPT_TOL` of zero: the state sits on the
    /// separable/entangled boundary.
    pub fn is_boundary(&self) -> bool {
        self.min_pt_eigenvalue.abs() <= PPT_TOL
    }
}

/// Peres-Horodecki test on a two-qubit state, transposing the second qubit.
pub fn ppt_test(rho: &ComplexMatrix, dims: &SubsystemDims) -> Result<SeparabilityVerdict> {
    if dims.as_slice() != [2, 2] {
        return Err(Error::NotTwoQubit(dims.as_slice().to_vec()));
    }
    let pt = partial_transpose(rho, dims, 1)?;
    let spectrum = hermitian_eigenvalues(&pt, PPT_TOL)?;
    let min_pt_eigenvalue = spectrum[0];
    let separable = min_pt_eigenvalue >= -PPT_TOL;
    let negativity = if separable {
        0.0
    } else {
        spectrum.iter().filter(|&&l| l < 0.0).map(|l| -l).sum()
    };
    Ok(SeparabilityVerdict {
        min_pt_eigenvalue,
        negativity,
        separable,
    })
}

/// Convenience wrapper for `ppt_test` on `C^2 ⊗ C^2`.
pub fn ppt_test_two_qubit(rho: &ComplexMatrix) -> Result<SeparabilityVerdict> {
    ppt_test(rho, &SubsystemDims::qubits(2))
}

/// A closed interval of `alpha^2` values symmetric about `1/2`, or nothing.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Alpha2Window {
    pub lower: f64,
    pub upper: f64,
    pub empty: bool,
}

impl Alpha2Window {
    pub fn empty() -> Self {
        Self {
            lower: f64::NAN,
            upper: f64::NAN,
            empty: true,
        }
    }

    pub fn new(lower: f64, upper: f64) -> Self {
        Self {
            lower,
            upper,
            empty: false,
        }
    }

    /// `[1/2 - sqrt(q), 1/2 + sqrt(q)]`, empty for negative `q`.
    fn centered(radicand: f64) -> Self {
        if radicand < -RADICAND_SLACK {
            return Self::empty();
        }
        let r = radicand.max(0.0).sqrt().min(0.5);
        Self::new(0.5 - r, 0.5 + r)
    }

    pub fn bounds(&self) -> Option<(f64, f64)> {
        (!self.empty).then_some((self.lower, self.upper))
    }

    pub fn contains(&self, x: f64) -> bool {
        !self.empty && self.lower <= x && x <= self.upper
    }

    pub fn contains_interior(&self, x: f64) -> bool {
        !self.empty && self.lower < x && x < self.upper
    }

    /// Set inclusion, allowing `slack` at each endpoint.
    pub fn is_within(&self, other: &Self, slack: f64) -> bool {
        match (self.bounds(), other.bounds()) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some((l, u)), Some((ol, ou))) => ol <= l + slack && u <= ou + slack,
        }
    }
}

fn check_eta(eta: f64) -> Result<()> {
    if eta.is_finite() && eta > 0.0 && eta <= 1.0 {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            name: "eta",
            value: eta,
            range: "(0, 1]",
        })
    }
}

/// Whether the splitting output is entangled: `eta > 1/3` and the input is
/// entangled.
pub fn split_inseparability_predicate(alpha2: f64, eta: f64) -> Result<bool> {
    check_range("alpha2", alpha2, 0.0, 1.0, "[0, 1]")?;
    check_eta(eta)?;
    Ok(eta > SPLIT_ETA_THRESHOLD && alpha2 > 0.0 && alpha2 < 1.0)
}

/// `alpha^2` values for which the splitting output is entangled, expressed
/// as a window whose interior is the entangled region: `[0, 1]` when
/// `eta > 1/3`, empty otherwise.
pub fn split_window(eta: f64) -> Result<Alpha2Window> {
    check_eta(eta)?;
    Ok(if eta > SPLIT_ETA_THRESHOLD {
        Alpha2Window::new(0.0, 1.0)
    } else {
        Alpha2Window::empty()
    })
}

/// `alpha^2` window in whose interior the cross-party output of broadcasting
/// stays entangled. Empty when `eta < 1/sqrt(3)`.
pub fn broadcast_nonlocal_window(eta: f64) -> Result<Alpha2Window> {
    check_eta(eta)?;
    let eta2 = eta * eta;
    let radicand = 0.25 - (1.0 - eta2).powi(2) / (16.0 * eta2 * eta2);
    Ok(Alpha2Window::centered(radicand))
}

/// `alpha^2` window on which the same-party output of broadcasting is
/// separable. Empty when `eta < 1/2`.
pub fn broadcast_local_separable_window(eta: f64) -> Result<Alpha2Window> {
    check_eta(eta)?;
    let radicand = 0.25 - (1.0 - eta).powi(2) / (4.0 * eta * eta);
    Ok(Alpha2Window::centered(radicand))
}

/// Whether the cross-party broadcasting output is entangled.
pub fn broadcast_inseparability_predicate(alpha2: f64, eta: f64) -> Result<bool> {
    check_range("alpha2", alpha2, 0.0, 1.0, "[0, 1]")?;
    Ok(broadcast_nonlocal_window(eta)?.contains_interior(alpha2))
}
