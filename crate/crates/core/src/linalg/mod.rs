//! Dense complex linear algebra for small composite quantum systems.

mod eigen;
mod matrix;
mod structure;

pub use eigen::{hermitian_eigen, hermitian_eigenvalues, HermitianEigen};
pub use matrix::{ComplexMatrix, RectMatrix, DEFAULT_TOL};
pub use num_complex::Complex64;
pub use structure::{
    conjugate_subsystem, partial_trace, partial_transpose, reduce_to, reduce_to_many,
    tensor_product, SubsystemDims,
};
