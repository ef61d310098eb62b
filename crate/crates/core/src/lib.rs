//! Disentangling pure two-qubit states by local universal cloning.
//!
//! The input is the Schmidt-form state `alpha|00> + beta|11>`. Cloning one
//! qubit ("splitting") or both ("broadcasting") with an isotropic cloner of
//! reduction factor `eta` leaves each party's marginal shrunk to
//! `eta * rho + (1 - eta) I/2` and, for small enough `eta`, destroys the
//! entanglement between the parties.
//!
//! Every output state can be produced two ways: from a closed form, and by
//! explicitly running the cloner as an isometry on `C^2 -> C^2 ⊗ C^2 ⊗ C^4`
//! and tracing out what is discarded. Separability is decided with the
//! partial-transpose test, which is exact for two qubits.
//!
//! ```
//! use disentangle::schemes::{disentangle_by_double_cloning, disentangle_by_single_cloning};
//!
//! // Splitting disentangles every input once eta <= 1/3.
//! assert!(disentangle_by_single_cloning(0.5, 1.0 / 3.0)?.disentangled);
//! assert!(!disentangle_by_single_cloning(0.5, 0.4)?.disentangled);
//!
//! // Broadcasting with the optimal cloner only works for lopsided inputs.
//! assert!(disentangle_by_double_cloning(0.05, 2.0 / 3.0)?.disentangled);
//! assert!(!disentangle_by_double_cloning(0.5, 2.0 / 3.0)?.disentangled);
//! # Ok::<(), disentangle::Error>(())
//! ```
//!
//! The `book/` directory at the repository root walks through the model in
//! more detail; its code blocks are compiled and run as doc-tests of this
//! crate.

pub mod cli;
pub mod cloning;
mod error;
pub mod linalg;
pub mod schemes;
pub mod separability;
pub mod states;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/linear-algebra.md")]
    mod linear_algebra {}
    #[doc = include_str!("../../../book/src/cloner.md")]
    mod cloner {}
    #[doc = include_str!("../../../book/src/separability.md")]
    mod separability {}
    #[doc = include_str!("../../../book/src/schemes.md")]
    mod schemes {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
