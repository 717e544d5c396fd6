use itertools::Itertools;
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use super::StateFamily;
use crate::error::{Error, Result};
use crate::linalg::{inner, norm_frobenius, vec_norm, ComplexMatrix, Permutation};

pub const ISOTROPY_TOL: f64 = 1e-10;
pub const PHASE_MATCH_TOL: f64 = 1e-10;
/// Largest `d` for which all `d!` permutations are enumerated.
pub const MAX_PERMUTATION_DIM: usize = 6;

/// `‖(1/(d−1))·Σ|a_i⟩⟨a_i| − 1‖₂`
pub fn resolution_check(family: &StateFamily) -> f64 {
    let d = family.dim;
    let w = family.weight();
    let sum = ComplexMatrix::from_fn(d, d, |r, c| {
        family.states.iter().map(|a| a[r] * a[c].conj()).sum::<C64>() * w
    });
    norm_frobenius(&(&sum - &ComplexMatrix::identity(d)))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IsotropyReport {
    pub isotropic: bool,
    /// Sorted `{|⟨a_i|a_j⟩|²}_j` for every `i`.
    pub overlap_multisets: Vec<Vec<f64>>,
}

pub fn isotropy_check(family: &StateFamily) -> IsotropyReport {
    let n = family.len();
    let overlap_multisets: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut row: Vec<f64> = (0..n).map(|j| family.overlap(i, j).norm_sqr()).collect();
            row.sort_by(f64::total_cmp);
            row
        })
        .collect();
    let isotropic = overlap_multisets.iter().all(|row| {
        row.iter()
            .zip(&overlap_multisets[0])
            .all(|(a, b)| (a - b).abs() <= ISOTROPY_TOL)
    });
    IsotropyReport {
        isotropic,
        overlap_multisets,
    }
}

/// `τ_π|a_i⟩ = phase·|a_j⟩`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PermutationImage {
    pub permutation: Permutation,
    pub state: usize,
    pub image: Option<usize>,
    pub phase: Option<C64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PermutationReport {
    pub invariant: bool,
    pub permutations_checked: usize,
    pub mapping: Vec<PermutationImage>,
}

pub fn permutation_invariance_check(family: &StateFamily) -> Result<PermutationReport> {
    let d = family.dim;
    if d > MAX_PERMUTATION_DIM {
        return Err(Error::invalid(format!(
            "permutation enumeration limited to d <= {MAX_PERMUTATION_DIM}, got {d}"
        )));
    }
    let mut mapping = Vec::new();
    let mut invariant = true;
    let mut count = 0;
    for images in (0..d).permutations(d) {
        let pi = Permutation::new(images)?;
        count += 1;
        for (i, a) in family.states.iter().enumerate() {
            // (τ_π x)_r = x_{π(r)}
            let moved: Vec<C64> = (0..d).map(|r| a[pi.apply(r)]).collect();
            let hit = family
                .states
                .iter()
                .enumerate()
                .find_map(|(j, b)| phase_match(&moved, b).map(|c| (j, c)));
            if hit.is_none() {
                invariant = false;
            }
            mapping.push(PermutationImage {
                permutation: pi.clone(),
                state: i,
                image: hit.map(|h| h.0),
                phase: hit.map(|h| h.1),
            });
        }
    }
    Ok(PermutationReport {
        invariant,
        permutations_checked: count,
        mapping,
    })
}

/// Unit `c` with `x = c·y`, fixed from the first nonzero component of `y`.
fn phase_match(x: &[C64], y: &[C64]) -> Option<C64> {
    let k = y.iter().position(|z| z.norm() > PHASE_MATCH_TOL)?;
    if x[k].norm() <= PHASE_MATCH_TOL {
        return None;
    }
    let c = x[k] / y[k];
    if (c.norm() - 1.0).abs() > PHASE_MATCH_TOL {
        return None;
    }
    x.iter()
        .zip(y)
        .all(|(a, b)| (a - c * b).norm() <= PHASE_MATCH_TOL)
        .then_some(c)
}

/// `Σ_j |⟨a_i|a_j⟩|^r`
pub fn overlap_power_sum(family: &StateFamily, i: usize, r: u32) -> Result<f64> {
    if i >= family.len() {
        return Err(Error::invalid(format!("state index {i} out of range 0..{}", family.len())));
    }
    if r == 0 {
        return Err(Error::invalid("power must be a positive integer"));
    }
    Ok((0..family.len())
        .map(|j| family.overlap(i, j).norm().powi(r as i32))
        .sum())
}

/// `𝔣_i = (1/(d−1))·⟨a_i|f⟩`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExpansionCoefficients {
    pub coefficients: Vec<C64>,
}

impl ExpansionCoefficients {
    /// `Σ 𝔣_i |a_i⟩`
    pub fn reconstruct(&self, family: &StateFamily) -> Vec<C64> {
        let mut out = vec![C64::new(0.0, 0.0); family.dim];
        for (c, a) in self.coefficients.iter().zip(&family.states) {
            for (o, x) in out.iter_mut().zip(a) {
                *o += c * x;
            }
        }
        out
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coefficients.iter().map(|z| z.norm_sqr()).sum()
    }
}

pub fn expand_state(family: &StateFamily, f: &[C64]) -> Result<ExpansionCoefficients> {
    if f.len() != family.dim {
        return Err(Error::Dimension(format!(
            "state has length {}, family lives in H({})",
            f.len(),
            family.dim
        )));
    }
    if (vec_norm(f) - 1.0).abs() > 1e-10 {
        return Err(Error::invalid("expansion requires a unit vector"));
    }
    let w = family.weight();
    Ok(ExpansionCoefficients {
        coefficients: family.states.iter().map(|a| inner(a, f) * w).collect(),
    })
}
