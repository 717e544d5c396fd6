//! Multistart lower bounds on `g(θ)` and on the supremum of `Q`.
//!
//! Both searches are monotone ascents from explicit feasible points, so every
//! reported value is attained by the returned witness and is a true lower
//! bound. Starts run in parallel; each start owns an RNG seeded with
//! `seed ^ start` and the winner is the first start (lowest index) with the
//! largest value, so results do not depend on scheduling.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{eval_c, eval_q_vectors, PolydiscTuple, VectorTuple};
use crate::error::Result;
use crate::linalg::{vec_norm, ComplexMatrix};
use crate::sampling::{random_unit_vector, rng_from_seed};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OptimizerConfig {
    pub starts: usize,
    pub seed: u64,
    /// Cap on coordinate sweeps (or alternation rounds) per start.
    pub max_iterations: usize,
    /// A start stops once a full sweep improves the objective by less than this.
    pub phase_tolerance: f64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self {
            starts: 64,
            seed: 0,
            max_iterations: 1000,
            phase_tolerance: 1e-10,
        }
    }
}

impl OptimizerConfig {
    pub fn with_starts(starts: usize, seed: u64) -> Self {
        Self {
            starts,
            seed,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OptimizerRun<W> {
    pub starts: usize,
    pub seed: u64,
    pub max_iterations: usize,
    pub phase_tolerance: f64,
    pub best_value: f64,
    pub best_witness: W,
    pub best_start: usize,
    /// Fraction of starts that met the tolerance before the iteration cap.
    pub converged_fraction: f64,
    /// Final objective of every start, in start order.
    pub start_values: Vec<f64>,
}

pub type ScalarWitness = (PolydiscTuple, PolydiscTuple);
pub type VectorWitness = (VectorTuple, VectorTuple);

struct StartResult<W> {
    value: f64,
    witness: W,
    converged: bool,
}

fn collect<W>(cfg: &OptimizerConfig, results: Vec<StartResult<W>>) -> OptimizerRun<W> {
    let n = results.len();
    let mut best = 0;
    for (k, r) in results.iter().enumerate() {
        if r.value > results[best].value {
            best = k;
        }
    }
    let converged = results.iter().filter(|r| r.converged).count();
    let start_values = results.iter().map(|r| r.value).collect();
    let winner = results.into_iter().nth(best).expect("at least one start");
    OptimizerRun {
        starts: cfg.starts,
        seed: cfg.seed,
        max_iterations: cfg.max_iterations,
        phase_tolerance: cfg.phase_tolerance,
        best_value: winner.value,
        best_witness: winner.witness,
        best_start: best,
        converged_fraction: converged as f64 / n as f64,
        start_values,
    }
}

/// `F(t) = Σ_i |(θt)_i|`, the classical form with `s` chosen optimally.
pub fn reduced_objective(theta: &ComplexMatrix, phases: &[f64]) -> f64 {
    let t: Vec<C64> = phases.iter().map(|&p| C64::from_polar(1.0, p)).collect();
    theta.mul_vec(&t).iter().map(|z| z.norm()).sum()
}

/// The optimal `s` for a fixed `t`: `s_i = conj((θt)_i)/|(θt)_i|`.
pub fn best_s(theta: &ComplexMatrix, t: &PolydiscTuple) -> PolydiscTuple {
    let values = theta
        .mul_vec(&t.values)
        .into_iter()
        .map(|z| if z.norm() > 0.0 { z.conj() / z.norm() } else { C64::new(1.0, 0.0) })
        .collect();
    PolydiscTuple {
        values,
        constraint_kind: super::ConstraintKind::UnitDisc,
    }
}

const GRID: usize = 12;
const GOLDEN: f64 = 0.618_033_988_749_894_8;
const LINE_TOL: f64 = 1e-12;

/// Best phase for coordinate `j` given the rest of `θt` in `rest`.
///
/// `h(φ) = Σ_i |rest_i + θ_ij e^{iφ}|` is scanned on a coarse grid anchored at
/// the current phase, then refined by golden-section search around the best
/// grid point. The current phase is returned unless strictly beaten.
fn line_search(col: &[C64], rest: &[C64], current: f64) -> (f64, f64) {
    let h = |phi: f64| {
        let e = C64::from_polar(1.0, phi);
        rest.iter().zip(col).map(|(r, c)| (r + c * e).norm()).sum::<f64>()
    };
    let h0 = h(current);
    let step = 2.0 * PI / GRID as f64;
    let (mut b, mut hb) = (current, h0);
    for k in 1..GRID {
        let phi = current + k as f64 * step;
        let v = h(phi);
        if v > hb {
            b = phi;
            hb = v;
        }
    }
    let (mut lo, mut hi) = (b - step, b + step);
    let mut x1 = hi - GOLDEN * (hi - lo);
    let mut x2 = lo + GOLDEN * (hi - lo);
    let (mut f1, mut f2) = (h(x1), h(x2));
    while hi - lo > LINE_TOL {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + GOLDEN * (hi - lo);
            f2 = h(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - GOLDEN * (hi - lo);
            f1 = h(x1);
        }
    }
    let (xm, fm) = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
    let (phi, val) = if fm > hb { (xm, fm) } else { (b, hb) };
    if val > h0 {
        (wrap(phi), val)
    } else {
        (current, h0)
    }
}

fn wrap(phi: f64) -> f64 {
    let x = (phi + PI).rem_euclid(2.0 * PI) - PI;
    if x < -PI { x + 2.0 * PI } else { x }
}

/// Coordinate ascent of `F` over the torus from `phases`.
pub fn ascend_phases(theta: &ComplexMatrix, mut phases: Vec<f64>, cfg: &OptimizerConfig) -> (Vec<f64>, bool) {
    let d = theta.cols();
    let cols: Vec<Vec<C64>> = (0..d).map(|j| theta.column(j)).collect();
    let mut value = reduced_objective(theta, &phases);
    for _ in 0..cfg.max_iterations {
        let start_value = value;
        let t: Vec<C64> = phases.iter().map(|&p| C64::from_polar(1.0, p)).collect();
        let mut acc = theta.mul_vec(&t);
        for j in 0..d {
            let tj = C64::from_polar(1.0, phases[j]);
            let rest: Vec<C64> = acc.iter().zip(&cols[j]).map(|(a, c)| a - c * tj).collect();
            let (phi, _) = line_search(&cols[j], &rest, phases[j]);
            phases[j] = phi;
            let tj = C64::from_polar(1.0, phi);
            for (a, (r, c)) in acc.iter_mut().zip(rest.iter().zip(&cols[j])) {
                *a = r + c * tj;
            }
        }
        value = reduced_objective(theta, &phases);
        if value - start_value < cfg.phase_tolerance {
            return (phases, true);
        }
    }
    (phases, false)
}

/// Lower bound on `g(θ) = sup |Σ θ_ij s_i t_j|` over the polydisc.
///
/// `s` is eliminated analytically, leaving `F(t) = Σ_i |(θt)_i|` on the torus.
/// The reported value is `eval_c` on the returned witness.
pub fn g_lower(theta: &ComplexMatrix, cfg: &OptimizerConfig) -> Result<OptimizerRun<ScalarWitness>> {
    let d = theta.require_square()?;
    let starts = cfg.starts.max(1);
    let results: Vec<Result<StartResult<ScalarWitness>>> = (0..starts)
        .into_par_iter()
        .map(|k| {
            let mut rng = rng_from_seed(cfg.seed ^ k as u64);
            let init: Vec<f64> = (0..d).map(|_| rng.random_range(-PI..PI)).collect();
            let (phases, converged) = ascend_phases(theta, init, cfg);
            let t = PolydiscTuple::from_phases(&phases);
            let s = best_s(theta, &t);
            let value = eval_c(theta, &s, &t)?;
            Ok(StartResult {
                value,
                witness: (s, t),
                converged,
            })
        })
        .collect();
    let results = results.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(collect(cfg, results))
}

/// `(value, u, v, converged)` after alternating maximization from `u`.
///
/// With `u` fixed the best `v_j` is `w_j/‖w_j‖` for `w_j = Σ_i conj(θ_ij)u_i`,
/// and symmetrically `u_i ∝ Σ_j θ_ij v_j`. Each half-step can only increase
/// `|Σ θ_ij ⟨u_i|v_j⟩|`.
pub fn alternate(
    theta: &ComplexMatrix,
    mut u: Vec<Vec<C64>>,
    cfg: &OptimizerConfig,
) -> (f64, Vec<Vec<C64>>, Vec<Vec<C64>>, bool) {
    let d = theta.rows();
    let dim = u.first().map_or(0, |x| x.len());
    let normalized = |x: Vec<C64>| {
        let n = vec_norm(&x);
        if n > 0.0 {
            x.into_iter().map(|z| z / n).collect()
        } else {
            x
        }
    };
    let v_from_u = |u: &[Vec<C64>]| -> (Vec<Vec<C64>>, f64) {
        let mut total = 0.0;
        let v = (0..theta.cols())
            .map(|j| {
                let w: Vec<C64> = (0..dim)
                    .map(|k| (0..d).map(|i| theta[(i, j)].conj() * u[i][k]).sum())
                    .collect();
                total += vec_norm(&w);
                normalized(w)
            })
            .collect();
        (v, total)
    };
    let u_from_v = |v: &[Vec<C64>]| -> Vec<Vec<C64>> {
        (0..d)
            .map(|i| {
                let z: Vec<C64> = (0..dim)
                    .map(|k| (0..theta.cols()).map(|j| theta[(i, j)] * v[j][k]).sum())
                    .collect();
                normalized(z)
            })
            .collect()
    };

    let (mut v, mut value) = v_from_u(&u);
    for _ in 0..cfg.max_iterations {
        let next_u = u_from_v(&v);
        let (next_v, next_value) = v_from_u(&next_u);
        if next_value <= value {
            return (value, u, v, true);
        }
        let gain = next_value - value;
        u = next_u;
        v = next_v;
        value = next_value;
        if gain < cfg.phase_tolerance {
            return (value, u, v, true);
        }
    }
    (value, u, v, false)
}

/// Lower bound on `sup Q` over unit-ball vector tuples in `C^d`.
///
/// Start 0 embeds the scalar witness of [`g_lower`] (`u_i = conj(s_i)e₀`,
/// `v_j = t_j e₀`), so the result is never below the classical bound.
pub fn max_q_lower(theta: &ComplexMatrix, cfg: &OptimizerConfig) -> Result<OptimizerRun<VectorWitness>> {
    let classical = g_lower(theta, cfg)?;
    max_q_lower_from(theta, cfg, Some(&classical.best_witness))
}

/// [`max_q_lower`] with an optional precomputed scalar witness for start 0.
pub fn max_q_lower_from(
    theta: &ComplexMatrix,
    cfg: &OptimizerConfig,
    scalar: Option<&ScalarWitness>,
) -> Result<OptimizerRun<VectorWitness>> {
    let d = theta.require_square()?;
    let starts = cfg.starts.max(1);
    let results: Vec<Result<StartResult<VectorWitness>>> = (0..starts)
        .into_par_iter()
        .map(|k| {
            let u0: Vec<Vec<C64>> = match (k, scalar) {
                (0, Some((s, _))) => s
                    .values
                    .iter()
                    .map(|z| {
                        let mut e = vec![C64::new(0.0, 0.0); d];
                        e[0] = z.conj();
                        e
                    })
                    .collect(),
                _ => {
                    let mut rng = rng_from_seed(cfg.seed ^ k as u64);
                    (0..d).map(|_| random_unit_vector(&mut rng, d)).collect()
                }
            };
            let (_, u, v, converged) = alternate(theta, u0, cfg);
            let u = VectorTuple::unit(u);
            let v = VectorTuple::unit(v);
            let value = eval_q_vectors(theta, &u, &v)?;
            Ok(StartResult {
                value,
                witness: (u, v),
                converged,
            })
        })
        .collect();
    let results = results.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(collect(cfg, results))
}
