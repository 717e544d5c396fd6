use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use super::{ExpansionCoefficients, StateFamily};
use crate::error::{Error, Result};
use crate::linalg::{cluster_eigenvalues, hermitian_eig, ComplexMatrix};

/// Multiplicity clustering tolerance for projector spectra.
pub const SPECTRUM_CLUSTER_TOL: f64 = 1e-8;

/// `Π_ij = (1/(d−1))·⟨a_i|a_j⟩` on the `d(d−1)`-dimensional space.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OverlapProjector {
    pub dim_big: usize,
    pub matrix: ComplexMatrix,
    pub rank: usize,
}

impl OverlapProjector {
    /// `‖Π² − Π‖` entrywise max.
    pub fn idempotency_defect(&self) -> f64 {
        (&self.matrix * &self.matrix).max_abs_diff(&self.matrix)
    }

    /// `(eigenvalue, multiplicity)` clusters, descending.
    pub fn spectrum(&self) -> Result<Vec<(f64, usize)>> {
        let e = hermitian_eig(&self.matrix)?;
        Ok(cluster_eigenvalues(&e.eigenvalues, SPECTRUM_CLUSTER_TOL))
    }

    /// `Σ_j Π_ij 𝔣_j`; equals `𝔣` for coefficients produced by `expand_state`.
    pub fn apply(&self, f: &ExpansionCoefficients) -> Result<Vec<C64>> {
        if f.coefficients.len() != self.dim_big {
            return Err(Error::Dimension(format!(
                "{} coefficients for a {}-dimensional projector",
                f.coefficients.len(),
                self.dim_big
            )));
        }
        Ok(self.matrix.mul_vec(&f.coefficients))
    }
}

pub fn build_projector(family: &StateFamily) -> Result<OverlapProjector> {
    let n = family.len();
    if n == 0 {
        return Err(Error::invalid("empty state family"));
    }
    let w = family.weight();
    let matrix = ComplexMatrix::from_fn(n, n, |i, j| family.overlap(i, j) * w);
    // Tr Π = Σ ⟨a_i|a_i⟩/(d−1) = d, and Π is a projector, so the rank is the trace.
    let rank = matrix.trace().re.round() as usize;
    Ok(OverlapProjector {
        dim_big: n,
        matrix,
        rank,
    })
}
