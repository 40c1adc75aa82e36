//! Thin wrappers over the dense LAPACK routines used throughout the crate.

use ndarray::Array2;
use ndarray_linalg::{Eigh, UPLO};

/// Eigenvalues of a symmetric matrix, ascending.
pub fn sym_eigenvalues(a: &Array2<f64>) -> Vec<f64> {
    let (vals, _) = a.eigh(UPLO::Lower).expect("eigh");
    vals.to_vec()
}
