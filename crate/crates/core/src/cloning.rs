//! Universal isotropic 1→2 qubit cloners.
//!
//! A cloner with reduction factor `eta` acts as
//!
//! ```text
//! |0>|blank>|Q> -> a|00>|A>  + b(|01> + |10>)|B>
//! |1>|blank>|Q> -> a|11>|A'> + b(|01> + |10>)|B'>
//! ```
//!
//! with `a^2 + 2b^2 = 1`, `<B|B'> = <A|B> = <A'|B'> = 0` and
//! `<B'|A> = <A'|B> = s`. Each copy then sees the depolarizing map
//! `rho -> eta rho + (1 - eta) I/2` with `eta = a^2 = 2abs`.
//!
//! The ancilla lives in `C^4` with basis `e0..e3`:
//! `A = e0`, `B = e1`, `B' = s e0 + sqrt(1-s^2) e2`, `A' = s e1 + sqrt(1-s^2) e3`.
//! The copies-plus-ancilla register is ordered `(copy 1, copy 2, ancilla)`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{check_range, Error, Result};
use crate::linalg::{
    conjugate_subsystem, reduce_to_many, ComplexMatrix, RectMatrix, SubsystemDims,
};
use crate::states::PureBipartiteState;

/// Reduction factor of the optimal universal 1→2 cloner.
pub const ETA_OPTIMAL: f64 = 2.0 / 3.0;

/// Dimension of the cloner's ancilla register.
pub const ANCILLA_DIM: usize = 4;

/// Output register layout replacing a cloned qubit.
pub const CLONE_OUTPUT_DIMS: [usize; 3] = [2, 2, ANCILLA_DIM];

// Values of eta that exceed 2/3 by less than this are treated as 2/3, so that
// decimal inputs like 0.6666666667 select the optimal cloner.
const ETA_OPTIMAL_SLACK: f64 = 1e-9;

/// Parameters of an isotropic 1→2 cloner.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ClonerSpec {
    eta: f64,
    a: f64,
    b: f64,
    s: f64,
}

impl ClonerSpec {
    /// Accepts `0 < eta <= 2/3`.
    pub fn new(eta: f64) -> Result<Self> {
        if !(eta.is_finite() && eta > 0.0 && eta <= ETA_OPTIMAL + ETA_OPTIMAL_SLACK) {
            return Err(Error::OutOfRange {
                name: "eta",
                value: eta,
                range: "(0, 2/3]",
            });
        }
        let eta = eta.min(ETA_OPTIMAL);
        let s = if eta == ETA_OPTIMAL {
            1.0
        } else {
            (eta / (2.0 * (1.0 - eta))).sqrt().min(1.0)
        };
        Ok(Self {
            eta,
            a: eta.sqrt(),
            b: ((1.0 - eta) / 2.0).sqrt(),
            s,
        })
    }

    /// The optimal (Buzek-Hillery) cloner.
    pub fn optimal() -> Self {
        Self::new(ETA_OPTIMAL).expect("2/3 is a valid reduction factor")
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Common value of the ancilla overlaps `<B'|A> = <A'|B>`.
    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn fidelity(&self) -> f64 {
        (1.0 + self.eta) / 2.0
    }

    pub fn ancilla_states(&self) -> AncillaStates {
        let c = (1.0 - self.s * self.s).max(0.0).sqrt();
        let e = |k: usize, x: f64, y: f64| {
            let mut v = [0.0; ANCILLA_DIM];
            v[k] += x;
            v[k + 2] += y;
            v
        };
        AncillaStates {
            a: e(0, 1.0, 0.0),
            b: e(1, 1.0, 0.0),
            a_tilde: e(1, self.s, c),
            b_tilde: e(0, self.s, c),
        }
    }
}

/// Concrete real ancilla output vectors `A, B, A', B'`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AncillaStates {
    pub a: [f64; ANCILLA_DIM],
    pub b: [f64; ANCILLA_DIM],
    pub a_tilde: [f64; ANCILLA_DIM],
    pub b_tilde: [f64; ANCILLA_DIM],
}

/// `F = (1 + eta) / 2`.
pub fn fidelity_from_eta(eta: f64) -> Result<f64> {
    check_range("eta", eta, 0.0, 1.0, "[0, 1]")?;
    Ok((1.0 + eta) / 2.0)
}

/// Optimal universal 1→M single-copy fidelity `(2M + 1) / 3M` as a reduced
/// fraction.
pub fn optimal_cloning_fidelity_fraction(copies: u64) -> Result<(u64, u64)> {
    if copies < 2 {
        return Err(Error::OutOfRange {
            name: "copies",
            value: copies as f64,
            range: "[2, inf)",
        });
    }
    let (num, den) = (2 * copies + 1, 3 * copies);
    let g = gcd(num, den);
    Ok((num / g, den / g))
}

pub fn optimal_cloning_fidelity(copies: u64) -> Result<f64> {
    optimal_cloning_fidelity_fraction(copies).map(|(n, d)| n as f64 / d as f64)
}

fn gcd(mut x: u64, mut y: u64) -> u64 {
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

/// The cloner as an isometry `C^2 -> C^2 ⊗ C^2 ⊗ C^4`.
#[derive(Clone, Debug)]
pub struct DilationIsometry {
    matrix: RectMatrix,
}

impl DilationIsometry {
    pub fn matrix(&self) -> &RectMatrix {
        &self.matrix
    }

    /// Image of basis input `|k>`.
    pub fn column(&self, k: usize) -> Vec<Complex64> {
        self.matrix.column(k)
    }

    /// Largest entry of `V^dagger V - I`.
    pub fn isometry_defect(&self) -> f64 {
        self.matrix.gram().max_abs_diff(&ComplexMatrix::identity(2))
    }
}

fn register_index(copy1: usize, copy2: usize, ancilla: usize) -> usize {
    (copy1 * 2 + copy2) * ANCILLA_DIM + ancilla
}

pub fn build_dilation(spec: &ClonerSpec) -> DilationIsometry {
    let anc = spec.ancilla_states();
    let out_dim = 4 * ANCILLA_DIM;
    let mut v0 = vec![Complex64::new(0.0, 0.0); out_dim];
    let mut v1 = vec![Complex64::new(0.0, 0.0); out_dim];
    for k in 0..ANCILLA_DIM {
        v0[register_index(0, 0, k)] += spec.a * anc.a[k];
        v0[register_index(0, 1, k)] += spec.b * anc.b[k];
        v0[register_index(1, 0, k)] += spec.b * anc.b[k];

        v1[register_index(1, 1, k)] += spec.a * anc.a_tilde[k];
        v1[register_index(0, 1, k)] += spec.b * anc.b_tilde[k];
        v1[register_index(1, 0, k)] += spec.b * anc.b_tilde[k];
    }
    DilationIsometry {
        matrix: RectMatrix::from_columns(&[v0, v1]).expect("columns share a length"),
    }
}

/// Clones qubit `target_index` of `rho`.
///
/// The returned global state keeps both copies and the ancilla: subsystem
/// `target_index` becomes `(copy 1, copy 2, ancilla)` with dims `(2, 2, 4)`.
pub fn clone_qubit_via_dilation(
    rho_in: &ComplexMatrix,
    dims: &SubsystemDims,
    target_index: usize,
    spec: &ClonerSpec,
) -> Result<(ComplexMatrix, SubsystemDims)> {
    let out_dims = dims.splice(target_index, &CLONE_OUTPUT_DIMS)?;
    let v = build_dilation(spec);
    let rho_out = conjugate_subsystem(rho_in, dims, target_index, v.matrix())?;
    Ok((rho_out, out_dims))
}

/// Two-qubit `(clone, partner)` state after cloning the first qubit of
/// `alpha|00> + beta|11>` and discarding the other copy and the ancilla.
///
/// `keep_copy` selects which copy (0 or 1) is kept.
pub fn split_output_via_dilation(
    psi: &PureBipartiteState,
    spec: &ClonerSpec,
    keep_copy: usize,
) -> Result<ComplexMatrix> {
    check_range("keep_copy", keep_copy as f64, 0.0, 1.0, "{0, 1}")?;
    let (global, dims) =
        clone_qubit_via_dilation(&psi.density_matrix(), &SubsystemDims::qubits(2), 0, spec)?;
    // dims: (x1, x2, ancilla, y)
    reduce_to_many(&global, &dims, &[keep_copy, 3])
}

/// Outputs of cloning both halves of a Schmidt state with the same cloner.
#[derive(Clone, Debug)]
pub struct BroadcastOutputs {
    /// Global state on `(a1, b1, anc1, a2, b2, anc2)`.
    pub global: ComplexMatrix,
    pub dims: SubsystemDims,
}

impl BroadcastOutputs {
    pub const A1: usize = 0;
    pub const B1: usize = 1;
    pub const A2: usize = 3;
    pub const B2: usize = 4;

    /// Two-qubit marginal on the listed subsystems, in ascending index order.
    pub fn pair(&self, first: usize, second: usize) -> Result<ComplexMatrix> {
        let mut kept = [first, second];
        kept.sort_unstable();
        reduce_to_many(&self.global, &self.dims, &kept)
    }

    /// Copies held by the same party, `(a1, b1)`.
    pub fn local(&self) -> Result<ComplexMatrix> {
        self.pair(Self::A1, Self::B1)
    }

    /// Copies held by different parties, `(a1, b2)`.
    pub fn nonlocal(&self) -> Result<ComplexMatrix> {
        self.pair(Self::A1, Self::B2)
    }

    pub fn marginal(&self, index: usize) -> Result<ComplexMatrix> {
        crate::linalg::reduce_to(&self.global, &self.dims, index)
    }
}

pub fn broadcast_via_dilation(
    psi: &PureBipartiteState,
    spec: &ClonerSpec,
) -> Result<BroadcastOutputs> {
    let (first, dims) =
        clone_qubit_via_dilation(&psi.density_matrix(), &SubsystemDims::qubits(2), 0, spec)?;
    let (global, dims) = clone_qubit_via_dilation(&first, &dims, 3, spec)?;
    Ok(BroadcastOutputs { global, dims })
}

fn closed_form_params(alpha2: f64, eta: f64) -> Result<(f64, f64, f64)> {
    let psi = PureBipartiteState::from_alpha2(alpha2)?;
    check_range("eta", eta, 0.0, 1.0, "[0, 1]")?;
    Ok((psi.alpha2(), psi.beta2(), psi.alpha() * psi.beta()))
}

fn with_corners(diag: [f64; 4], corner: f64) -> ComplexMatrix {
    let mut m = ComplexMatrix::diag(&diag);
    m[(0, 3)] = corner.into();
    m[(3, 0)] = corner.into();
    m
}

/// Closed-form `(clone, partner)` state of the splitting scheme.
///
/// Ordered `(clone, partner)`, the `|01>` weight is `beta^2 (1-eta)/2` and the
/// `|10>` weight is `alpha^2 (1-eta)/2`.
pub fn split_output_closed_form(alpha2: f64, eta: f64) -> Result<ComplexMatrix> {
    let (a2, b2, ab) = closed_form_params(alpha2, eta)?;
    let hi = (1.0 + eta) / 2.0;
    let lo = (1.0 - eta) / 2.0;
    Ok(with_corners([hi * a2, lo * b2, lo * a2, hi * b2], ab * eta))
}

/// Closed-form state of the two copies held by one party.
pub fn broadcast_local_closed_form(alpha2: f64, eta: f64) -> Result<ComplexMatrix> {
    let (a2, b2, _) = closed_form_params(alpha2, eta)?;
    let plus = (1.0 - eta) / 2.0;
    let mut m = ComplexMatrix::diag(&[a2 * eta, plus, plus, b2 * eta]);
    m[(1, 2)] = plus.into();
    m[(2, 1)] = plus.into();
    Ok(m)
}

/// Closed-form state of one copy from each party.
pub fn broadcast_nonlocal_closed_form(alpha2: f64, eta: f64) -> Result<ComplexMatrix> {
    let (a2, b2, ab) = closed_form_params(alpha2, eta)?;
    let noise = ((1.0 - eta) / 2.0).powi(2);
    let cross = (1.0 - eta * eta) / 4.0;
    Ok(with_corners(
        [a2 * eta + noise, cross, cross, b2 * eta + noise],
        ab * eta * eta,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{reduce_to, DEFAULT_TOL};

    #[test]
    fn fidelity_values() {
        assert!((fidelity_from_eta(1.0 / 3.0).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        let f = fidelity_from_eta(1.0 / 3f64.sqrt()).unwrap();
        assert!((f - (3f64.sqrt() + 1.0) / (2.0 * 3f64.sqrt())).abs() < 1e-15);
        assert!((f - 0.788_675_1).abs() < 1e-7);
        assert_eq!(fidelity_from_eta(0.0).unwrap(), 0.5);
        assert!(fidelity_from_eta(1.5).is_err());
        assert!(fidelity_from_eta(-0.1).is_err());
    }

    #[test]
    fn optimal_fidelities() {
        assert_eq!(optimal_cloning_fidelity_fraction(3).unwrap(), (7, 9));
        assert_eq!(optimal_cloning_fidelity_fraction(2).unwrap(), (5, 6));
        assert!(
            (optimal_cloning_fidelity(2).unwrap() - fidelity_from_eta(ETA_OPTIMAL).unwrap()).abs()
                < 1e-15
        );
        assert!((optimal_cloning_fidelity(1000).unwrap() - 2001.0 / 3000.0).abs() < 1e-15);
        assert!((optimal_cloning_fidelity(1000).unwrap() - 0.667).abs() < 1e-3);
        assert!(optimal_cloning_fidelity(1).is_err());
    }

    #[test]
    fn spec_parameter_algebra() {
        for &eta in &[0.01, 0.2, 1.0 / 3.0, 0.5, 0.6, ETA_OPTIMAL] {
            let c = ClonerSpec::new(eta).unwrap();
            assert!((c.a() * c.a() + 2.0 * c.b() * c.b() - 1.0).abs() < 1e-12);
            assert!((2.0 * c.a() * c.b() * c.s() - eta).abs() < 1e-12);
        }
        assert_eq!(ClonerSpec::optimal().s(), 1.0);
    }

    #[test]
    fn spec_rejects_invalid_eta() {
        for eta in [0.0, -0.1, 0.7, f64::NAN, f64::INFINITY] {
            assert!(ClonerSpec::new(eta).is_err(), "eta = {eta}");
        }
        // Rounded decimal of 2/3 selects the optimal cloner.
        assert_eq!(ClonerSpec::new(0.666_666_666_7).unwrap().eta(), ETA_OPTIMAL);
    }

    #[test]
    fn ancilla_overlaps() {
        let dot = |x: &[f64; 4], y: &[f64; 4]| x.iter().zip(y).map(|(a, b)| a * b).sum::<f64>();
        let c = ClonerSpec::new(0.4).unwrap();
        let s = c.ancilla_states();
        assert_eq!(dot(&s.b, &s.b_tilde), 0.0);
        assert_eq!(dot(&s.a, &s.b), 0.0);
        assert_eq!(dot(&s.a_tilde, &s.b_tilde), 0.0);
        assert!((dot(&s.b_tilde, &s.a) - c.s()).abs() < 1e-15);
        assert!((dot(&s.a_tilde, &s.b) - c.s()).abs() < 1e-15);
        for v in [s.a, s.b, s.a_tilde, s.b_tilde] {
            assert!((dot(&v, &v) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn optimal_ancilla_collapses() {
        let s = ClonerSpec::optimal().ancilla_states();
        assert_eq!(s.b_tilde, s.a);
        assert_eq!(s.a_tilde, s.b);
    }

    #[test]
    fn dilation_columns_orthonormal() {
        for &eta in &[0.05, 0.3, 0.5, ETA_OPTIMAL] {
            let v = build_dilation(&ClonerSpec::new(eta).unwrap());
            let norm0: f64 = v.column(0).iter().map(|z| z.norm_sqr()).sum();
            assert!((norm0 - 1.0).abs() < 1e-12);
            let overlap: Complex64 = v
                .column(1)
                .iter()
                .zip(v.column(0))
                .map(|(x, y)| x.conj() * y)
                .sum();
            assert!(overlap.norm() < 1e-12);
            assert!(v.isometry_defect() < 1e-12);
        }
    }

    #[test]
    fn cloning_basis_state_gives_plus_mixture() {
        let eta = 0.45;
        let spec = ClonerSpec::new(eta).unwrap();
        let dims = SubsystemDims::qubits(1);
        let zero = ComplexMatrix::diag(&[1.0, 0.0]);
        let (global, out_dims) = clone_qubit_via_dilation(&zero, &dims, 0, &spec).unwrap();
        assert_eq!(out_dims.as_slice(), &[2, 2, 4]);
        let copies = reduce_to_many(&global, &out_dims, &[0, 1]).unwrap();

        let h = std::f64::consts::FRAC_1_SQRT_2;
        let plus: Vec<Complex64> = [0.0, h, h, 0.0]
            .iter()
            .map(|&x| Complex64::new(x, 0.0))
            .collect();
        let expected = &ComplexMatrix::diag(&[eta, 0.0, 0.0, 0.0])
            + &ComplexMatrix::projector(&plus).scale(1.0 - eta);
        assert!(copies.max_abs_diff(&expected) < 1e-15);

        let single = reduce_to(&global, &out_dims, 0).unwrap();
        let marginal = ComplexMatrix::diag(&[eta + (1.0 - eta) / 2.0, (1.0 - eta) / 2.0]);
        assert!(single.max_abs_diff(&marginal) < 1e-15);
    }

    #[test]
    fn cloning_maximally_mixed_qubit() {
        let spec = ClonerSpec::new(0.3).unwrap();
        let mixed = ComplexMatrix::identity(2).scale(0.5);
        let (global, dims) =
            clone_qubit_via_dilation(&mixed, &SubsystemDims::qubits(1), 0, &spec).unwrap();
        assert!(global.is_unit_trace(DEFAULT_TOL));
        for k in 0..2 {
            assert!(reduce_to(&global, &dims, k).unwrap().max_abs_diff(&mixed) < 1e-15);
        }
    }

    #[test]
    fn split_closed_form_values() {
        let m = split_output_closed_form(0.5, ETA_OPTIMAL).unwrap();
        let expected = with_corners([5.0 / 12.0, 1.0 / 12.0, 1.0 / 12.0, 5.0 / 12.0], 1.0 / 3.0);
        assert!(m.max_abs_diff(&expected) < 1e-15);

        let prod = split_output_closed_form(1.0, 0.4).unwrap();
        assert!(prod.max_abs_diff(&ComplexMatrix::diag(&[0.7, 0.0, 0.3, 0.0])) < 1e-15);

        for &(a2, eta) in &[(0.1, 0.2), (0.9, 0.6), (0.5, 0.01)] {
            assert!(split_output_closed_form(a2, eta)
                .unwrap()
                .is_unit_trace(1e-15));
        }
    }

    #[test]
    fn broadcast_closed_form_values() {
        let local = broadcast_local_closed_form(0.5, ETA_OPTIMAL).unwrap();
        let mut expected = ComplexMatrix::diag(&[1.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 3.0]);
        expected[(1, 2)] = (1.0 / 6.0).into();
        expected[(2, 1)] = (1.0 / 6.0).into();
        assert!(local.max_abs_diff(&expected) < 1e-15);

        let perfect = broadcast_local_closed_form(0.3, 1.0).unwrap();
        assert!(perfect.max_abs_diff(&ComplexMatrix::diag(&[0.3, 0.0, 0.0, 0.7])) < 1e-15);

        let nonlocal = broadcast_nonlocal_closed_form(0.5, ETA_OPTIMAL).unwrap();
        let expected = with_corners(
            [13.0 / 36.0, 5.0 / 36.0, 5.0 / 36.0, 13.0 / 36.0],
            2.0 / 9.0,
        );
        assert!(nonlocal.max_abs_diff(&expected) < 1e-15);

        let identity_channel = broadcast_nonlocal_closed_form(0.3, 1.0).unwrap();
        let psi = PureBipartiteState::from_alpha2(0.3)
            .unwrap()
            .density_matrix();
        assert!(identity_channel.max_abs_diff(&psi) < 1e-15);
    }

    #[test]
    fn closed_forms_reject_bad_ranges() {
        assert!(split_output_closed_form(1.1, 0.5).is_err());
        assert!(broadcast_local_closed_form(0.5, 1.5).is_err());
        assert!(broadcast_nonlocal_closed_form(-0.5, 0.5).is_err());
    }

    #[test]
    fn split_copies_are_symmetric() {
        let psi = PureBipartiteState::from_alpha2(0.27).unwrap();
        let spec = ClonerSpec::new(0.55).unwrap();
        let x1 = split_output_via_dilation(&psi, &spec, 0).unwrap();
        let x2 = split_output_via_dilation(&psi, &spec, 1).unwrap();
        assert!(x1.max_abs_diff(&x2) < 1e-15);
        assert!(split_output_via_dilation(&psi, &spec, 2).is_err());
    }
}
