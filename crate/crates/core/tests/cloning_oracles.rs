mod common;

use common::*;
use disentangle::cloning::{
    broadcast_local_closed_form, broadcast_nonlocal_closed_form, broadcast_via_dilation,
    build_dilation, clone_qubit_via_dilation, split_output_closed_form, split_output_via_dilation,
    ClonerSpec, ETA_OPTIMAL,
};
use disentangle::linalg::{
    reduce_to, reduce_to_many, tensor_product, Complex64, ComplexMatrix, SubsystemDims, DEFAULT_TOL,
};
use disentangle::states::PureBipartiteState;
use proptest::prelude::*;

fn pauli() -> [ComplexMatrix; 3] {
    let i = Complex64::new(0.0, 1.0);
    let o = Complex64::new(0.0, 0.0);
    let l = Complex64::new(1.0, 0.0);
    [
        ComplexMatrix::from_vec(2, vec![o, l, l, o]).unwrap(),
        ComplexMatrix::from_vec(2, vec![o, -i, i, o]).unwrap(),
        ComplexMatrix::from_vec(2, vec![l, o, o, -l]).unwrap(),
    ]
}

/// Depolarizing map on one qubit of a two-qubit state written as a Pauli
/// mixture: `(1+3 eta)/4 rho + (1-eta)/4 sum_k P_k rho P_k`.
fn depolarize_qubit(rho: &ComplexMatrix, eta: f64, qubit: usize) -> ComplexMatrix {
    let id = ComplexMatrix::identity(2);
    let mut out = rho.scale((1.0 + 3.0 * eta) / 4.0);
    for p in pauli() {
        let k = if qubit == 0 {
            tensor_product(&p, &id)
        } else {
            tensor_product(&id, &p)
        };
        let term = &(&k * rho) * &k.adjoint();
        out = &out + &term.scale((1.0 - eta) / 4.0);
    }
    out
}

fn swap_copies(rho: &ComplexMatrix) -> ComplexMatrix {
    let swap = |k: usize| [0, 2, 1, 3][k];
    ComplexMatrix::from_fn(4, |i, j| rho[(swap(i), swap(j))])
}

#[test]
fn split_dilation_matches_closed_form_on_grid() {
    let mut worst: f64 = 0.0;
    for a2 in linspace(0.0, 1.0, 21) {
        for eta in eta_grid(13) {
            let psi = PureBipartiteState::from_alpha2(a2).unwrap();
            let spec = ClonerSpec::new(eta).unwrap();
            let sim = split_output_via_dilation(&psi, &spec, 0).unwrap();
            worst = worst.max(sim.max_abs_diff(&split_output_closed_form(a2, eta).unwrap()));
        }
    }
    assert!(worst <= 1e-12, "worst deviation {worst:e}");
}

#[test]
fn broadcast_dilation_matches_closed_forms_on_grid() {
    let mut worst: f64 = 0.0;
    for a2 in linspace(0.0, 1.0, 21) {
        for eta in eta_grid(13) {
            let psi = PureBipartiteState::from_alpha2(a2).unwrap();
            let out = broadcast_via_dilation(&psi, &ClonerSpec::new(eta).unwrap()).unwrap();
            let local = broadcast_local_closed_form(a2, eta).unwrap();
            let nonlocal = broadcast_nonlocal_closed_form(a2, eta).unwrap();
            worst = worst
                .max(out.local().unwrap().max_abs_diff(&local))
                .max(out.nonlocal().unwrap().max_abs_diff(&nonlocal));
        }
    }
    assert!(worst <= 1e-12, "worst deviation {worst:e}");
}

#[test]
fn nonlocal_closed_form_is_product_channel() {
    for a2 in linspace(0.0, 1.0, 21) {
        for eta in eta_grid(13) {
            let rho = PureBipartiteState::from_alpha2(a2)
                .unwrap()
                .density_matrix();
            let composed = depolarize_qubit(&depolarize_qubit(&rho, eta, 0), eta, 1);
            let closed = broadcast_nonlocal_closed_form(a2, eta).unwrap();
            assert!(composed.max_abs_diff(&closed) <= 1e-12, "({a2}, {eta})");
        }
    }
}

#[test]
fn all_grid_outputs_are_states() {
    for a2 in linspace(0.0, 1.0, 21) {
        for eta in eta_grid(13) {
            for m in [
                split_output_closed_form(a2, eta).unwrap(),
                broadcast_local_closed_form(a2, eta).unwrap(),
                broadcast_nonlocal_closed_form(a2, eta).unwrap(),
            ] {
                assert!(m.is_density_matrix(DEFAULT_TOL), "({a2}, {eta})\n{m:?}");
            }
        }
    }
}

#[test]
fn isometries_on_grid() {
    for eta in eta_grid(67) {
        let v = build_dilation(&ClonerSpec::new(eta).unwrap());
        assert!(v.isometry_defect() <= 1e-12, "eta = {eta}");
    }
}

#[test]
fn global_state_keeps_unit_trace() {
    let psi = PureBipartiteState::from_alpha2(0.37).unwrap();
    let out = broadcast_via_dilation(&psi, &ClonerSpec::new(0.61).unwrap()).unwrap();
    assert_eq!(out.dims.as_slice(), &[2, 2, 4, 2, 2, 4]);
    assert!(out.global.is_unit_trace(1e-12));
    assert!(out.global.is_hermitian(1e-12));
}

proptest! {
    #[test]
    fn single_copy_marginal_is_depolarized(p in parts(2), eta in 0.01..ETA_OPTIMAL) {
        let rho = density_from_parts(2, &p);
        let spec = ClonerSpec::new(eta).unwrap();
        let (global, dims) = clone_qubit_via_dilation(&rho, &SubsystemDims::qubits(1), 0, &spec).unwrap();
        let expected = &rho.scale(eta) + &ComplexMatrix::identity(2).scale((1.0 - eta) / 2.0);
        for copy in 0..2 {
            prop_assert!(reduce_to(&global, &dims, copy).unwrap().max_abs_diff(&expected) < 1e-12);
        }
    }

    #[test]
    fn copies_are_exchange_symmetric(p in parts(2), eta in 0.01..ETA_OPTIMAL) {
        let rho = density_from_parts(2, &p);
        let spec = ClonerSpec::new(eta).unwrap();
        let (global, dims) = clone_qubit_via_dilation(&rho, &SubsystemDims::qubits(1), 0, &spec).unwrap();
        let copies = reduce_to_many(&global, &dims, &[0, 1]).unwrap();
        prop_assert!(copies.max_abs_diff(&swap_copies(&copies)) < 1e-12);
        prop_assert!(copies.is_density_matrix(DEFAULT_TOL));
    }

    #[test]
    fn cloning_inside_larger_system(p in parts(4), eta in 0.01..ETA_OPTIMAL, target in 0usize..2) {
        // Cloning one half of a random two-qubit state depolarizes that half
        // and leaves the other marginal alone.
        let rho = density_from_parts(4, &p);
        let dims = SubsystemDims::qubits(2);
        let (global, out_dims) =
            clone_qubit_via_dilation(&rho, &dims, target, &ClonerSpec::new(eta).unwrap()).unwrap();
        let other = 1 - target;
        let other_out = if target == 0 { 3 } else { 0 };
        let before_other = reduce_to(&rho, &dims, other).unwrap();
        prop_assert!(reduce_to(&global, &out_dims, other_out).unwrap().max_abs_diff(&before_other) < 1e-12);
        let before_target = reduce_to(&rho, &dims, target).unwrap();
        let expected = &before_target.scale(eta) + &ComplexMatrix::identity(2).scale((1.0 - eta) / 2.0);
        prop_assert!(reduce_to(&global, &out_dims, target).unwrap().max_abs_diff(&expected) < 1e-12);
    }
}
