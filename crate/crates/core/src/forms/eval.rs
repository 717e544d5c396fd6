use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use super::{PolydiscTuple, VectorTuple};
use crate::error::{Error, Result};
use crate::linalg::{inner, largest_singular_value, norm_entrywise_l1, ComplexMatrix};

/// Best known upper bound on the complex Grothendieck constant.
pub const K_G_UPPER: f64 = 1.4049;
/// Boundary slack for region labels.
pub const REGION_TOL: f64 = 1e-9;

/// `C = |Σ θ_ij s_i t_j|`
pub fn eval_c(theta: &ComplexMatrix, s: &PolydiscTuple, t: &PolydiscTuple) -> Result<f64> {
    if s.len() != theta.rows() || t.len() != theta.cols() {
        return Err(Error::Dimension(format!(
            "θ is {}x{}, tuples have lengths {} and {}",
            theta.rows(),
            theta.cols(),
            s.len(),
            t.len()
        )));
    }
    s.validate()?;
    t.validate()?;
    let theta_t = theta.mul_vec(&t.values);
    Ok(s.values.iter().zip(&theta_t).map(|(a, b)| a * b).sum::<C64>().norm())
}

/// `Q = |Tr(θ V W†)|`
pub fn eval_q_trace(theta: &ComplexMatrix, v: &ComplexMatrix, w: &ComplexMatrix) -> Result<f64> {
    theta.require_square()?;
    theta.require_same_shape(v)?;
    theta.require_same_shape(w)?;
    let vw = v.matmul(&w.adjoint())?;
    Ok(theta.matmul(&vw)?.trace().norm())
}

/// `Q = |Σ θ_ij λ_i μ_j ⟨u_i|v_j⟩|`
pub fn eval_q_vectors(theta: &ComplexMatrix, u: &VectorTuple, v: &VectorTuple) -> Result<f64> {
    if u.len() != theta.rows() || v.len() != theta.cols() {
        return Err(Error::Dimension("vector tuple count does not match θ".into()));
    }
    u.validate()?;
    v.validate()?;
    let us: Vec<Vec<C64>> = (0..u.len()).map(|i| u.scaled(i)).collect();
    let vs: Vec<Vec<C64>> = (0..v.len()).map(|j| v.scaled(j)).collect();
    let mut acc = C64::new(0.0, 0.0);
    for (i, ui) in us.iter().enumerate() {
        for (j, vj) in vs.iter().enumerate() {
            acc += theta[(i, j)] * inner(ui, vj);
        }
    }
    Ok(acc.norm())
}

/// `g′(θ) = d·𝔰_max`, exact.
pub fn g_prime(theta: &ComplexMatrix) -> Result<f64> {
    let d = theta.require_square()?;
    Ok(d as f64 * largest_singular_value(theta)?)
}

/// `min(‖θ‖₁, d·𝔰_max)`
pub fn g_upper(theta: &ComplexMatrix) -> Result<f64> {
    Ok(norm_entrywise_l1(theta).min(g_prime(theta)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    /// `[0, 1]`
    Classical,
    /// `(1, 1.4049]`
    Grothendieck,
    /// Above the k_G bound: a bug or an uncertified θ.
    Exceeds,
}

pub fn kg_region_check(q: f64) -> Result<Region> {
    if q.is_nan() || q < 0.0 || q.is_infinite() {
        return Err(Error::invalid(format!("region check needs a finite q >= 0, got {q}")));
    }
    Ok(if q <= 1.0 + REGION_TOL {
        Region::Classical
    } else if q <= K_G_UPPER + REGION_TOL {
        Region::Grothendieck
    } else {
        Region::Exceeds
    })
}
