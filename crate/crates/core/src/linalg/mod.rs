//! Small dense complex linear algebra.
//!
//! Everything here targets `d ≤ ~64`; there is no blocking, no sparsity and no
//! external BLAS.

mod construct;
mod eig;
mod matrix;
mod svd;

pub use construct::{fourier_matrix, permutation_matrix, Permutation};
pub use eig::{cluster_eigenvalues, hermitian_eig, hermitian_eig_with, EigenDecomposition, JacobiConfig};
pub use matrix::ComplexMatrix;
pub use num_complex::Complex64 as C64;
pub use svd::{largest_singular_value, largest_singular_value_with, PowerConfig};

use crate::error::Result;

/// Entrywise ℓ1 norm `Σ|M_ij|`.
pub fn norm_entrywise_l1(m: &ComplexMatrix) -> f64 {
    m.entries().iter().map(|z| z.norm()).sum()
}

/// Frobenius norm `sqrt(Σ|M_ij|²)`.
pub fn norm_frobenius(m: &ComplexMatrix) -> f64 {
    m.entries().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// `‖MM† − M†M‖₂ ≤ tol·(1 + ‖M‖₂²)`.
pub fn is_normal(m: &ComplexMatrix, tol: f64) -> Result<bool> {
    m.require_square()?;
    let mh = m.adjoint();
    let comm = &(m * &mh) - &(&mh * m);
    let f = norm_frobenius(m);
    Ok(norm_frobenius(&comm) <= tol * (1.0 + f * f))
}

/// Spectral radius of a normal matrix.
///
/// For normal `M` the eigenvalue moduli are the singular values, so this is
/// `sqrt(λ_max(M†M))` computed through the Hermitian eigensolver.
pub fn spectral_radius_normal(m: &ComplexMatrix) -> Result<f64> {
    m.require_square()?;
    let g = &m.adjoint() * m;
    let eig = hermitian_eig(&g)?;
    Ok(eig.eigenvalues.first().copied().unwrap_or(0.0).max(0.0).sqrt())
}

/// Inner product `(x, y) = Σ conj(x_i) y_i`.
pub fn inner(x: &[C64], y: &[C64]) -> C64 {
    x.iter().zip(y).map(|(a, b)| a.conj() * b).sum()
}

pub fn vec_norm(x: &[C64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}
