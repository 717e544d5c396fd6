use serde::{Deserialize, Serialize};

use super::{g_lower, g_prime, OptimizerConfig, ScalarWitness};
use crate::error::Result;
use crate::linalg::{norm_entrywise_l1, norm_frobenius, ComplexMatrix};

/// `θ ∈ G_d′ ⇔ g′(θ) ≤ 1` up to this slack.
pub const G_PRIME_TOL: f64 = 1e-10;
/// `certified_no` needs `g_lower > 1 + CERTIFY_NO_MARGIN`.
pub const CERTIFY_NO_MARGIN: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Membership {
    CertifiedYes,
    CertifiedNo,
    Unknown,
}

/// Entry, ℓ1 and Frobenius ceilings implied by membership.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct NecessaryConditions {
    pub max_entry_ok: bool,
    pub l1_ok: bool,
    pub frobenius_ok: bool,
}

impl NecessaryConditions {
    pub fn all(&self) -> bool {
        self.max_entry_ok && self.l1_ok && self.frobenius_ok
    }

    fn check(theta: &ComplexMatrix, entry: f64, l1: f64, frob: f64) -> Self {
        let slack = 1e-12;
        Self {
            max_entry_ok: theta.entries().iter().all(|z| z.norm() <= entry + slack),
            l1_ok: norm_entrywise_l1(theta) <= l1 + slack,
            frobenius_ok: norm_frobenius(theta) <= frob + slack,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GClassification {
    pub g_lower: f64,
    pub g_upper: f64,
    pub g_prime: f64,
    #[serde(rename = "in_G_prime")]
    pub in_g_prime: bool,
    #[serde(rename = "in_G")]
    pub in_g: Membership,
    pub l1_norm: f64,
    /// `g(θ) ≤ 1 < ‖θ‖₁`, needed for `Q` to enter `(1, k_G)`.
    #[serde(rename = "necessary_condition_GRO10")]
    pub necessary_condition_gro10: bool,
    /// `|θ_ij| ≤ 1/d`, `‖θ‖₁ ≤ d`, `‖θ‖₂ ≤ 1`.
    pub necessary_for_g_prime: NecessaryConditions,
    /// `|θ_ij| ≤ 1`, `‖θ‖₁ ≤ d²`, `‖θ‖₂ ≤ d`.
    pub necessary_for_g: NecessaryConditions,
    pub witnesses: Option<ScalarWitness>,
    pub starts: usize,
    pub seed: u64,
}

pub fn classify(theta: &ComplexMatrix, cfg: &OptimizerConfig) -> Result<GClassification> {
    let d = theta.require_square()? as f64;
    let run = g_lower(theta, cfg)?;
    let gp = g_prime(theta)?;
    let l1 = norm_entrywise_l1(theta);
    let g_upper = l1.min(gp);

    let in_g = if g_upper <= 1.0 + G_PRIME_TOL {
        Membership::CertifiedYes
    } else if run.best_value > 1.0 + CERTIFY_NO_MARGIN {
        Membership::CertifiedNo
    } else {
        Membership::Unknown
    };
    let necessary = (g_upper <= 1.0 || in_g != Membership::CertifiedNo) && l1 > 1.0;

    Ok(GClassification {
        g_lower: run.best_value,
        g_upper,
        g_prime: gp,
        in_g_prime: gp <= 1.0 + G_PRIME_TOL,
        in_g,
        l1_norm: l1,
        necessary_condition_gro10: necessary,
        necessary_for_g_prime: NecessaryConditions::check(theta, 1.0 / d, d, 1.0),
        necessary_for_g: NecessaryConditions::check(theta, 1.0, d * d, d),
        witnesses: Some(run.best_witness),
        starts: run.starts,
        seed: run.seed,
    })
}
