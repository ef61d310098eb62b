//! Schmidt-form input states, their marginals, and the isotropic-scaling fit
//! used to measure how close a post-processing marginal stays to the
//! original one.

use serde::Serialize;

use crate::error::{check_range, Error, Result};
use crate::linalg::{partial_trace, ComplexMatrix, SubsystemDims, DEFAULT_TOL};

/// `alpha|00> + beta|11>` with real `alpha` in `[0, 1]` and
/// `beta = sqrt(1 - alpha^2)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PureBipartiteState {
    alpha: f64,
}

impl PureBipartiteState {
    /// Parameterized by `alpha^2`, the weight of `|00>`.
    pub fn from_alpha2(alpha2: f64) -> Result<Self> {
        check_range("alpha2", alpha2, 0.0, 1.0, "[0, 1]")?;
        Ok(Self {
            alpha: alpha2.sqrt(),
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        (1.0 - self.alpha * self.alpha).max(0.0).sqrt()
    }

    pub fn alpha2(&self) -> f64 {
        self.alpha * self.alpha
    }

    pub fn beta2(&self) -> f64 {
        1.0 - self.alpha2()
    }

    pub fn is_entangled(&self) -> bool {
        self.alpha > 0.0 && self.alpha < 1.0
    }

    /// `|psi><psi|` on `C^2 ⊗ C^2`.
    pub fn density_matrix(&self) -> ComplexMatrix {
        let (a, b) = (self.alpha, self.beta());
        let mut rho = ComplexMatrix::diag(&[a * a, 0.0, 0.0, b * b]);
        rho[(0, 3)] = (a * b).into();
        rho[(3, 0)] = (a * b).into();
        rho
    }
}

/// Both one-qubit marginals of a two-qubit state.
#[derive(Clone, Debug, Serialize)]
pub struct ReducedPair {
    pub rho_1: ComplexMatrix,
    pub rho_2: ComplexMatrix,
}

pub fn reduced_pair(rho: &ComplexMatrix) -> Result<ReducedPair> {
    let dims = SubsystemDims::qubits(2);
    Ok(ReducedPair {
        rho_1: partial_trace(rho, &dims, 1)?,
        rho_2: partial_trace(rho, &dims, 0)?,
    })
}

/// The qubit depolarizing map `eta * rho + (1 - eta) * I / 2`.
pub fn scale_isotropically(rho: &ComplexMatrix, eta: f64) -> ComplexMatrix {
    let mixed = ComplexMatrix::identity(rho.dim()).scale((1.0 - eta) / rho.dim() as f64);
    &rho.scale(eta) + &mixed
}

/// Result of fitting `rho_ad ≈ eta * rho_bd + (1 - eta) I/2`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct IsotropyFit {
    pub eta: f64,
    /// Frobenius norm of `rho_ad - eta * rho_bd - (1 - eta) I/2`.
    pub residual: f64,
    pub isotropic: bool,
}

const ISOTROPY_RESIDUAL_TOL: f64 = 1e-8;
const DEGENERATE_TOL: f64 = 1e-12;

/// Least-squares reduction factor relating two qubit states.
///
/// With `X = rho_ad - I/2` and `Y = rho_bd - I/2` the optimum under the
/// Hilbert-Schmidt inner product is `eta = tr(XY) / tr(Y^2)`. Fails when
/// `rho_bd` is maximally mixed, since then every `eta` fits.
pub fn isotropy_fit(rho_ad: &ComplexMatrix, rho_bd: &ComplexMatrix) -> Result<IsotropyFit> {
    for m in [rho_ad, rho_bd] {
        if m.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: m.dim(),
            });
        }
        let deviation = m.hermiticity_defect();
        if deviation > DEFAULT_TOL {
            return Err(Error::NotHermitian { deviation });
        }
    }
    let half = ComplexMatrix::identity(2).scale(0.5);
    let x = rho_ad - &half;
    let y = rho_bd - &half;
    let y_norm2 = y.frobenius_norm().powi(2);
    if y_norm2.sqrt() <= DEGENERATE_TOL {
        return Err(Error::DegenerateReference);
    }
    // tr(XY) for Hermitian X, Y is the real Hilbert-Schmidt product.
    let overlap: f64 = x
        .as_slice()
        .iter()
        .zip(y.as_slice())
        .map(|(a, b)| (a * b.conj()).re)
        .sum();
    let eta = overlap / y_norm2;
    let residual = (rho_ad - &scale_isotropically(rho_bd, eta)).frobenius_norm();
    Ok(IsotropyFit {
        eta,
        residual,
        isotropic: residual <= ISOTROPY_RESIDUAL_TOL,
    })
}
