use num_complex::Complex64 as C64;
use rand::Rng;
use rand_distr::StandardNormal;

use super::{inner, vec_norm, ComplexMatrix};
use crate::error::{Error, Result};
use crate::sampling::rng_from_seed;

#[derive(Clone, Copy, Debug)]
pub struct PowerConfig {
    /// Relative change in successive Rayleigh quotients that counts as converged.
    pub rel_tol: f64,
    pub max_iterations: usize,
    pub restarts: usize,
    pub seed: u64,
}

impl Default for PowerConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-14,
            max_iterations: 200_000,
            restarts: 10,
            seed: 0x5eed,
        }
    }
}

/// `𝔰_max(M)`, the largest singular value.
pub fn largest_singular_value(m: &ComplexMatrix) -> Result<f64> {
    largest_singular_value_with(m, PowerConfig::default())
}

/// Power iteration on `M†M` from seeded random complex starts.
///
/// The best converged Rayleigh quotient over all restarts wins. If no restart
/// converges the error carries the last estimate.
pub fn largest_singular_value_with(m: &ComplexMatrix, cfg: PowerConfig) -> Result<f64> {
    let d = m.require_square()?;
    let g = &m.adjoint() * m;
    if g.is_zero() {
        return Ok(0.0);
    }

    let mut rng = rng_from_seed(cfg.seed);
    let mut best: Option<f64> = None;
    let mut last = 0.0;

    for _ in 0..cfg.restarts.max(1) {
        let mut x: Vec<C64> = (0..d)
            .map(|_| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        normalize(&mut x);
        let mut rq = inner(&x, &g.mul_vec(&x)).re;
        let mut converged = false;
        for _ in 0..cfg.max_iterations {
            let mut y = g.mul_vec(&x);
            if vec_norm(&y) == 0.0 {
                // start orthogonal to the range; this restart is useless
                break;
            }
            normalize(&mut y);
            let next = inner(&y, &g.mul_vec(&y)).re;
            x = y;
            let delta = (next - rq).abs();
            rq = next;
            if delta <= cfg.rel_tol * rq.abs() {
                converged = true;
                break;
            }
        }
        last = rq;
        if converged {
            best = Some(best.map_or(rq, |b: f64| b.max(rq)));
        }
    }

    match best {
        Some(lambda) => Ok(lambda.max(0.0).sqrt()),
        None => Err(Error::NoConvergence {
            what: "power iteration",
            iterations: cfg.max_iterations,
            last: last.max(0.0).sqrt(),
        }),
    }
}

fn normalize(x: &mut [C64]) {
    let n = vec_norm(x);
    for z in x.iter_mut() {
        *z /= n;
    }
}
