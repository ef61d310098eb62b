//! End-to-end disentanglement by local cloning.
//!
//! * Splitting ([`Scheme::SingleClone`]): one party clones its qubit; the
//!   pair (kept copy, untouched partner) should end up separable.
//! * Broadcasting ([`Scheme::DoubleClone`]): both parties clone with the same
//!   cloner; every cross-party pair should end up separable.
//!
//! Output states are produced by the explicit dilation, traced down, then
//! judged with the PPT test.

use std::fmt;

use serde::Serialize;

use crate::cloning::{
    broadcast_via_dilation, fidelity_from_eta, optimal_cloning_fidelity, split_output_via_dilation,
    BroadcastOutputs, ClonerSpec, ETA_OPTIMAL,
};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::separability::{
    ppt_test_two_qubit, SeparabilityVerdict, BROADCAST_ETA_THRESHOLD, SPLIT_ETA_THRESHOLD,
};
use crate::states::{isotropy_fit, reduced_pair, PureBipartiteState};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scheme {
    /// Clone one qubit (entanglement splitting).
    SingleClone,
    /// Clone both qubits (entanglement broadcasting).
    DoubleClone,
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::SingleClone => "single_clone",
            Scheme::DoubleClone => "double_clone",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairKind {
    /// Qubits held by different parties; these gate success.
    Nonlocal,
    /// Both copies held by one party.
    Local,
}

#[derive(Clone, Debug, Serialize)]
pub struct OutputState {
    pub name: &'static str,
    pub kind: PairKind,
    pub state: ComplexMatrix,
    pub verdict: SeparabilityVerdict,
}

/// Fitted reduction factor of one party's marginal. `eta` is `None` when the
/// original marginal is maximally mixed (any factor fits).
#[derive(Clone, Copy, Debug, Serialize)]
pub struct RecoveredEta {
    pub subsystem: &'static str,
    pub eta: Option<f64>,
    pub residual: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SchemeReport {
    pub scheme: Scheme,
    pub input_alpha2: f64,
    pub eta: f64,
    pub output_states: Vec<OutputState>,
    pub recovered_eta: Vec<RecoveredEta>,
    /// Largest entry difference between outputs that should coincide by
    /// copy symmetry.
    pub copy_symmetry_defect: f64,
    pub disentangled: bool,
}

impl SchemeReport {
    pub fn output(&self, name: &str) -> Option<&OutputState> {
        self.output_states.iter().find(|o| o.name == name)
    }

    pub fn recovered(&self, subsystem: &str) -> Option<&RecoveredEta> {
        self.recovered_eta.iter().find(|r| r.subsystem == subsystem)
    }

    /// The cross-party output reported in sweeps.
    pub fn primary_output(&self) -> &OutputState {
        self.output_states
            .iter()
            .find(|o| o.kind == PairKind::Nonlocal)
            .expect("every report has a nonlocal output")
    }

    fn from_outputs(
        scheme: Scheme,
        input_alpha2: f64,
        eta: f64,
        output_states: Vec<OutputState>,
        recovered_eta: Vec<RecoveredEta>,
        copy_symmetry_defect: f64,
    ) -> Self {
        let disentangled = output_states
            .iter()
            .filter(|o| o.kind == PairKind::Nonlocal)
            .all(|o| o.verdict.separable);
        Self {
            scheme,
            input_alpha2,
            eta,
            output_states,
            recovered_eta,
            copy_symmetry_defect,
            disentangled,
        }
    }
}

fn output(name: &'static str, kind: PairKind, state: ComplexMatrix) -> Result<OutputState> {
    let verdict = ppt_test_two_qubit(&state)?;
    Ok(OutputState {
        name,
        kind,
        state,
        verdict,
    })
}

fn recover(
    subsystem: &'static str,
    after: &ComplexMatrix,
    before: &ComplexMatrix,
) -> Result<RecoveredEta> {
    match isotropy_fit(after, before) {
        Ok(fit) => Ok(RecoveredEta {
            subsystem,
            eta: Some(fit.eta),
            residual: Some(fit.residual),
        }),
        Err(Error::DegenerateReference) => Ok(RecoveredEta {
            subsystem,
            eta: None,
            residual: None,
        }),
        Err(e) => Err(e),
    }
}

pub fn disentangle(scheme: Scheme, alpha2: f64, eta: f64) -> Result<SchemeReport> {
    match scheme {
        Scheme::SingleClone => disentangle_by_single_cloning(alpha2, eta),
        Scheme::DoubleClone => disentangle_by_double_cloning(alpha2, eta),
    }
}

/// Clones party `x`'s qubit and keeps one copy together with partner `y`.
pub fn disentangle_by_single_cloning(alpha2: f64, eta: f64) -> Result<SchemeReport> {
    let psi = PureBipartiteState::from_alpha2(alpha2)?;
    let spec = ClonerSpec::new(eta)?;
    let kept = split_output_via_dilation(&psi, &spec, 0)?;
    let other = split_output_via_dilation(&psi, &spec, 1)?;
    let symmetry = kept.max_abs_diff(&other);

    let before = reduced_pair(&psi.density_matrix())?;
    let after = reduced_pair(&kept)?;
    let recovered = vec![
        recover("x", &after.rho_1, &before.rho_1)?,
        recover("y", &after.rho_2, &before.rho_2)?,
    ];
    let outputs = vec![output("clone_partner", PairKind::Nonlocal, kept)?];
    Ok(SchemeReport::from_outputs(
        Scheme::SingleClone,
        alpha2,
        spec.eta(),
        outputs,
        recovered,
        symmetry,
    ))
}

/// Both parties clone with the same cloner.
pub fn disentangle_by_double_cloning(alpha2: f64, eta: f64) -> Result<SchemeReport> {
    let psi = PureBipartiteState::from_alpha2(alpha2)?;
    let spec = ClonerSpec::new(eta)?;
    let out = broadcast_via_dilation(&psi, &spec)?;

    let a1_b2 = out.pair(BroadcastOutputs::A1, BroadcastOutputs::B2)?;
    let b1_a2 = out.pair(BroadcastOutputs::B1, BroadcastOutputs::A2)?;
    let a1_b1 = out.local()?;
    let a2_b2 = out.pair(BroadcastOutputs::A2, BroadcastOutputs::B2)?;
    let symmetry = a1_b2.max_abs_diff(&b1_a2).max(a1_b1.max_abs_diff(&a2_b2));

    let before = reduced_pair(&psi.density_matrix())?;
    let recovered = vec![
        recover("a1", &out.marginal(BroadcastOutputs::A1)?, &before.rho_1)?,
        recover("a2", &out.marginal(BroadcastOutputs::A2)?, &before.rho_2)?,
    ];
    let outputs = vec![
        output("a1_b2", PairKind::Nonlocal, a1_b2)?,
        output("b1_a2", PairKind::Nonlocal, b1_a2)?,
        output("a1_b1", PairKind::Local, a1_b1)?,
        output("a2_b2", PairKind::Local, a2_b2)?,
    ];
    Ok(SchemeReport::from_outputs(
        Scheme::DoubleClone,
        alpha2,
        spec.eta(),
        outputs,
        recovered,
        symmetry,
    ))
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct SchemeThreshold {
    pub scheme: Scheme,
    /// Largest `eta` that disentangles every input.
    pub eta_all_alpha: f64,
    pub fidelity_all_alpha: f64,
    /// Largest admissible `eta` (at most 2/3) that disentangles this input.
    pub eta_for_input: f64,
    pub fidelity_for_input: f64,
    pub optimal_cloner_disentangles: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SchemeComparison {
    pub alpha2: f64,
    pub single: SchemeThreshold,
    pub double: SchemeThreshold,
    /// Single-copy fidelity of the optimal 1→3 cloner.
    pub one_to_three_fidelity: f64,
    /// Labels of the three options ordered by worst-case fidelity, best first.
    pub fidelity_ranking: Vec<&'static str>,
}

/// Largest `eta <= 2/3` for which broadcasting disentangles `alpha^2`.
///
/// The cross pair is entangled iff `alpha beta eta^2 > (1 - eta^2)/4`, i.e.
/// `eta^2 > 1 / (1 + 4 alpha beta)`.
fn double_clone_eta_for(psi: &PureBipartiteState) -> f64 {
    let ab = psi.alpha() * psi.beta();
    (1.0 / (1.0 + 4.0 * ab)).sqrt().min(ETA_OPTIMAL)
}

pub fn compare_schemes(alpha2: f64) -> Result<SchemeComparison> {
    let psi = PureBipartiteState::from_alpha2(alpha2)?;
    let threshold = |scheme, eta_all: f64, eta_input: f64| -> Result<SchemeThreshold> {
        Ok(SchemeThreshold {
            scheme,
            eta_all_alpha: eta_all,
            fidelity_all_alpha: fidelity_from_eta(eta_all)?,
            eta_for_input: eta_input,
            fidelity_for_input: fidelity_from_eta(eta_input)?,
            optimal_cloner_disentangles: eta_input >= ETA_OPTIMAL,
        })
    };
    let single_eta = if psi.is_entangled() {
        SPLIT_ETA_THRESHOLD
    } else {
        ETA_OPTIMAL
    };
    let single = threshold(Scheme::SingleClone, SPLIT_ETA_THRESHOLD, single_eta)?;
    let double = threshold(
        Scheme::DoubleClone,
        BROADCAST_ETA_THRESHOLD,
        double_clone_eta_for(&psi),
    )?;
    let one_to_three = optimal_cloning_fidelity(3)?;

    let mut ranking = [
        ("double_clone", double.fidelity_all_alpha),
        ("one_to_three", one_to_three),
        ("single_clone", single.fidelity_all_alpha),
    ];
    ranking.sort_by(|a, b| b.1.total_cmp(&a.1));

    Ok(SchemeComparison {
        alpha2,
        single,
        double,
        one_to_three_fidelity: one_to_three,
        fidelity_ranking: ranking.iter().map(|r| r.0).collect(),
    })
}
