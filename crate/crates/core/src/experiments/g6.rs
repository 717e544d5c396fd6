//! Two independent routes to `g(Π₆)`.
//!
//! `Σ Π_ij s_i t_j` with `s = conj(t)` equals `½‖Σ t_j|a_j⟩‖²`, and
//! Cauchy–Schwarz shows this choice is optimal, so
//! `g(Π₆) = ½·max (A² + B² + C²)/2` over the polydisc, where
//! `A = |t₀+t₁+t₃+t₄|`, `B = |t₀+t₂−t₃+t₅|`, `C = |t₁+t₂−t₄−t₅|`.
//! The specialised route maximises that over the 12 variables
//! `t_j = R_j e^{iχ_j}` by projected gradient ascent; the general route is
//! [`g_lower`] on the projector itself.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coherent::{build_family, build_projector};
use crate::error::{Error, Result};
use crate::forms::{g_lower, OptimizerConfig, OptimizerRun, ScalarWitness};
use crate::sampling::rng_from_seed;

/// Signs of `t_j` in `A`, `B`, `C`.
const ABC: [[f64; 6]; 3] = [
    [1.0, 1.0, 0.0, 1.0, 1.0, 0.0],
    [1.0, 0.0, 1.0, -1.0, 0.0, 1.0],
    [0.0, 1.0, 1.0, 0.0, -1.0, -1.0],
];

/// Tolerance for agreement between the two routes.
pub const ROUTE_AGREEMENT_TOL: f64 = 1e-6;
/// The value obtained from real, equal-phase searches.
pub const CLAIMED_G_PI6: f64 = 5.0;

/// `(A, B, C)`
pub fn g6_abc(t: &[C64; 6]) -> [f64; 3] {
    let f = |row: &[f64; 6]| row.iter().zip(t).map(|(c, z)| z * *c).sum::<C64>().norm();
    [f(&ABC[0]), f(&ABC[1]), f(&ABC[2])]
}

/// `(A² + B² + C²)/2 = ‖Σ t_j|a_j⟩‖²`
pub fn g6_objective(t: &[C64; 6]) -> f64 {
    g6_abc(t).iter().map(|x| x * x).sum::<f64>() / 2.0
}

fn to_t(r: &[f64; 6], chi: &[f64; 6]) -> [C64; 6] {
    std::array::from_fn(|j| C64::from_polar(r[j], chi[j]))
}

/// Projected gradient ascent on `(R, χ)` with `R ∈ [0, 1]`, `χ ∈ [−π, π]`.
fn ascend(mut r: [f64; 6], mut chi: [f64; 6], max_iterations: usize) -> (f64, [f64; 6], [f64; 6]) {
    let mut value = g6_objective(&to_t(&r, &chi));
    let mut step = 0.5;
    for _ in 0..max_iterations {
        let t = to_t(&r, &chi);
        // f = ½t†MᵀMt, so df = Re(Σ conj(h_j) dt_j) with h = MᵀMt
        let m_t: Vec<C64> = ABC.iter().map(|row| row.iter().zip(&t).map(|(c, z)| z * *c).sum()).collect();
        let h: Vec<C64> = (0..6).map(|j| (0..3).map(|k| m_t[k] * ABC[k][j]).sum()).collect();
        let mut grad_r = [0.0; 6];
        let mut grad_chi = [0.0; 6];
        for j in 0..6 {
            let e = C64::from_polar(1.0, chi[j]);
            grad_r[j] = (h[j].conj() * e).re;
            grad_chi[j] = -(h[j].conj() * t[j]).im;
        }
        let mut improved = false;
        while step > 1e-15 {
            let nr: [f64; 6] = std::array::from_fn(|j| (r[j] + step * grad_r[j]).clamp(0.0, 1.0));
            let nc: [f64; 6] = std::array::from_fn(|j| (chi[j] + step * grad_chi[j]).clamp(-PI, PI));
            let nv = g6_objective(&to_t(&nr, &nc));
            if nv > value {
                let gain = nv - value;
                r = nr;
                chi = nc;
                value = nv;
                step *= 2.0;
                improved = gain > 1e-15;
                break;
            }
            step *= 0.5;
        }
        if !improved {
            break;
        }
    }
    (value, r, chi)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WitnessCheck {
    pub t: Vec<C64>,
    /// `{A, B, C}` sorted descending.
    pub abc: [f64; 3],
    pub objective: f64,
    /// `½·objective`, the classical form at `s = conj(t)`.
    pub classical_value: f64,
}

fn witness_check(t: [C64; 6]) -> WitnessCheck {
    let mut abc = g6_abc(&t);
    abc.sort_by(|a, b| b.total_cmp(a));
    let objective = g6_objective(&t);
    WitnessCheck {
        t: t.to_vec(),
        abc,
        objective,
        classical_value: objective / 2.0,
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct G6Certificate {
    pub starts: usize,
    pub seed: u64,
    /// Largest `(A²+B²+C²)/2` found by the 12-variable route.
    pub specialized_objective: f64,
    /// `specialized_objective / 2`
    pub specialized_g: f64,
    pub specialized_best_t: Vec<C64>,
    /// From `R_j = 0.5`, `χ_j = 0.5`, an equal-phase start that never leaves the real slice.
    pub equal_phase_start_objective: f64,
    pub specialized_start_values: Vec<f64>,
    pub general: OptimizerRun<ScalarWitness>,
    pub all_ones: WitnessCheck,
    pub t5_flipped: WitnessCheck,
    pub routes_agree: bool,
    pub agrees_with_claimed_value: bool,
    pub claimed_value: f64,
}

/// Runs both routes; disagreement between them is a [`Error::Consistency`].
pub fn certify_g_pi6(starts: usize, seed: u64) -> Result<G6Certificate> {
    if starts == 0 {
        return Err(Error::invalid("certify_g_pi6 needs at least one start"));
    }
    let cfg = OptimizerConfig::with_starts(starts, seed);
    let max_iterations = 20_000;

    let (equal_phase_start_objective, ..) = ascend([0.5; 6], [0.5; 6], max_iterations);
    let runs: Vec<(f64, [f64; 6], [f64; 6])> = (0..starts)
        .into_par_iter()
        .map(|k| {
            let mut rng = rng_from_seed(seed ^ k as u64);
            let r: [f64; 6] = std::array::from_fn(|_| rng.random_range(0.0..=1.0));
            let chi: [f64; 6] = std::array::from_fn(|_| rng.random_range(-PI..PI));
            ascend(r, chi, max_iterations)
        })
        .collect();
    let mut best = 0;
    for (k, run) in runs.iter().enumerate() {
        if run.0 > runs[best].0 {
            best = k;
        }
    }
    let (specialized_objective, br, bchi) = runs[best];
    let specialized_start_values: Vec<f64> = runs.iter().map(|r| r.0).collect();
    let specialized_g = specialized_objective / 2.0;

    let pi6 = build_projector(&build_family(3)?)?.matrix;
    let general = g_lower(&pi6, &cfg)?;

    let routes_agree = (specialized_g - general.best_value).abs() <= ROUTE_AGREEMENT_TOL;
    if !routes_agree {
        return Err(Error::Consistency(format!(
            "specialised route gives g = {specialized_g}, general route gives {}",
            general.best_value
        )));
    }
    let one = C64::new(1.0, 0.0);
    let mut flipped = [one; 6];
    flipped[5] = -one;

    Ok(G6Certificate {
        starts,
        seed,
        specialized_objective,
        specialized_g,
        specialized_best_t: to_t(&br, &bchi).to_vec(),
        equal_phase_start_objective,
        specialized_start_values,
        agrees_with_claimed_value: (general.best_value - CLAIMED_G_PI6).abs() <= ROUTE_AGREEMENT_TOL,
        general,
        all_ones: witness_check([one; 6]),
        t5_flipped: witness_check(flipped),
        routes_agree,
        claimed_value: CLAIMED_G_PI6,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{eval_c, PolydiscTuple};

    #[test]
    fn real_witnesses() {
        let one = C64::new(1.0, 0.0);
        let w = witness_check([one; 6]);
        assert_eq!(w.abc, [4.0, 2.0, 0.0]);
        assert!((w.objective - 10.0).abs() < 1e-12);
        let mut t = [one; 6];
        t[5] = -one;
        let w = witness_check(t);
        assert_eq!(w.abc, [4.0, 2.0, 0.0]);
        assert!((w.objective - 10.0).abs() < 1e-12);
    }

    #[test]
    fn objective_is_twice_classical_form() {
        let pi6 = build_projector(&build_family(3).unwrap()).unwrap().matrix;
        let mut rng = rng_from_seed(2);
        for _ in 0..20 {
            let t: [C64; 6] = std::array::from_fn(|_| C64::from_polar(rng.random_range(0.0..1.0), rng.random_range(-PI..PI)));
            let s: Vec<C64> = t.iter().map(|z| z.conj()).collect();
            let c = eval_c(
                &pi6,
                &PolydiscTuple::unit_disc(s).unwrap(),
                &PolydiscTuple::unit_disc(t.to_vec()).unwrap(),
            )
            .unwrap();
            assert!((2.0 * c - g6_objective(&t)).abs() < 1e-12);
        }
    }

    #[test]
    fn equal_phase_start_stays_real() {
        let (v, _, chi) = ascend([0.5; 6], [0.5; 6], 20_000);
        assert!((v - 10.0).abs() < 1e-9);
        assert!(chi.iter().all(|c| (c - chi[0]).abs() < 1e-9));
    }

    #[test]
    fn routes_agree_above_five() {
        let c = certify_g_pi6(16, 0).unwrap();
        assert!(c.routes_agree);
        let exact = 3.0 + 2.0 * 2f64.sqrt();
        assert!((c.specialized_g - exact).abs() < 1e-7);
        assert!(!c.agrees_with_claimed_value);
    }
}
