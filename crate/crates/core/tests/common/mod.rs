#![allow(dead_code)]

use disentangle::linalg::{Complex64, ComplexMatrix};
use proptest::prelude::*;

/// Matrix from interleaved (re, im) pairs.
pub fn matrix_from_parts(dim: usize, parts: &[f64]) -> ComplexMatrix {
    let data = parts
        .chunks(2)
        .take(dim * dim)
        .map(|p| Complex64::new(p[0], p[1]))
        .collect();
    ComplexMatrix::from_vec(dim, data).unwrap()
}

/// `G G^dagger / tr(G G^dagger)`.
pub fn density_from_parts(dim: usize, parts: &[f64]) -> ComplexMatrix {
    let g = matrix_from_parts(dim, parts);
    let rho = &g * &g.adjoint();
    let tr = rho.trace().re;
    rho.scale(1.0 / tr)
}

pub fn hermitian_from_parts(dim: usize, parts: &[f64]) -> ComplexMatrix {
    let g = matrix_from_parts(dim, parts);
    (&g + &g.adjoint()).scale(0.5)
}

pub fn parts(dim: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-1.0..1.0f64, 2 * dim * dim)
}

/// Deterministic pseudo-random parts for non-proptest loops.
pub fn lcg_parts(seed: u64, len: usize) -> Vec<f64> {
    let mut state = seed
        .wrapping_mul(6364136223846793005)
        .wrapping_add(1442695040888963407);
    (0..len)
        .map(|_| {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        })
        .collect()
}

/// `n` evenly spaced points on `[lo, hi]`.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| {
            if i + 1 == n {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            }
        })
        .collect()
}

/// Reduction-factor grid over `(0, 2/3]` with `n` points, first point `2/3 / n`.
pub fn eta_grid(n: usize) -> Vec<f64> {
    (1..=n)
        .map(|k| {
            if k == n {
                2.0 / 3.0
            } else {
                (2.0 / 3.0) * k as f64 / n as f64
            }
        })
        .collect()
}
