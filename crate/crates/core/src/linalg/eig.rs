use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use super::{norm_frobenius, ComplexMatrix};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug)]
pub struct JacobiConfig {
    /// Entrywise Hermiticity tolerance on the input.
    pub hermitian_tol: f64,
    /// Stop once the off-diagonal Frobenius mass is below `off_tol·‖H‖₂`.
    pub off_tol: f64,
    pub max_sweeps: usize,
}

impl Default for JacobiConfig {
    fn default() -> Self {
        Self {
            hermitian_tol: 1e-12,
            off_tol: 1e-12,
            max_sweeps: 100,
        }
    }
}

/// Eigenvalues sorted descending; `eigenvectors` holds the matching columns.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
    /// `‖H·V − V·diag(λ)‖₂`
    pub residual: f64,
    pub sweeps: usize,
}

impl EigenDecomposition {
    /// `V·diag(λ)·V†`
    pub fn reconstruct(&self) -> ComplexMatrix {
        let d = self.eigenvalues.len();
        let v = &self.eigenvectors;
        ComplexMatrix::from_fn(d, d, |i, j| {
            (0..d)
                .map(|k| v[(i, k)] * self.eigenvalues[k] * v[(j, k)].conj())
                .sum()
        })
    }
}

pub fn hermitian_eig(h: &ComplexMatrix) -> Result<EigenDecomposition> {
    hermitian_eig_with(h, JacobiConfig::default())
}

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
pub fn hermitian_eig_with(h: &ComplexMatrix, cfg: JacobiConfig) -> Result<EigenDecomposition> {
    let d = h.require_square()?;
    let deviation = h.hermitian_deviation();
    if deviation > cfg.hermitian_tol {
        return Err(Error::NotHermitian { deviation });
    }

    // Work on the exactly Hermitian part so rounding in the input cannot
    // leave an imaginary diagonal.
    let mut a = ComplexMatrix::from_fn(d, d, |i, j| 0.5 * (h[(i, j)] + h[(j, i)].conj()));
    let mut v = ComplexMatrix::identity(d);
    let scale = norm_frobenius(&a);
    let target = cfg.off_tol * scale;

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_mass(&a);
        if off <= target || scale == 0.0 {
            break;
        }
        if sweeps >= cfg.max_sweeps {
            return Err(Error::NoConvergence {
                what: "Jacobi eigensolver",
                iterations: sweeps,
                last: off,
            });
        }
        for p in 0..d {
            for q in p + 1..d {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..d).collect();
    let diag: Vec<f64> = (0..d).map(|i| a[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[j].total_cmp(&diag[i]));
    let eigenvalues: Vec<f64> = order.iter().map(|&k| diag[k]).collect();
    let eigenvectors = ComplexMatrix::from_fn(d, d, |i, j| v[(i, order[j])]);

    let hv = h * &eigenvectors;
    let residual = ComplexMatrix::from_fn(d, d, |i, j| hv[(i, j)] - eigenvectors[(i, j)] * eigenvalues[j]);
    let residual = norm_frobenius(&residual);

    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
        residual,
        sweeps,
    })
}

fn off_diagonal_mass(a: &ComplexMatrix) -> f64 {
    let d = a.rows();
    let mut s = 0.0;
    for i in 0..d {
        for j in 0..d {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// One two-sided rotation `A ← J†AJ`, `V ← VJ` that annihilates `A_pq`.
///
/// `J = diag(1, e^{-iφ})·R(c, s)` on the (p, q) plane, where `φ = arg A_pq`
/// makes the pivot real and `R` is the real symmetric Jacobi rotation.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let phase = apq / mag;

    let theta = (aqq - app) / (2.0 * mag);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let t = if theta == 0.0 { 1.0 } else { t };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    // J entries
    let jpp = C64::new(c, 0.0);
    let jpq = C64::new(s, 0.0);
    let jqp = -phase.conj() * s;
    let jqq = phase.conj() * c;

    let d = a.rows();
    for k in 0..d {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * jpp + akq * jqp;
        a[(k, q)] = akp * jpq + akq * jqq;
    }
    for k in 0..d {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = jpp.conj() * apk + jqp.conj() * aqk;
        a[(q, k)] = jpq.conj() * apk + jqq.conj() * aqk;
    }
    a[(p, q)] = C64::new(0.0, 0.0);
    a[(q, p)] = C64::new(0.0, 0.0);
    a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = C64::new(a[(q, q)].re, 0.0);

    for k in 0..d {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * jpp + vkq * jqp;
        v[(k, q)] = vkp * jpq + vkq * jqq;
    }
}

/// Group sorted-descending eigenvalues into `(value, multiplicity)` clusters.
///
/// Consecutive values closer than `tol` share a cluster; the reported value
/// is the cluster mean.
pub fn cluster_eigenvalues(values: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize, f64)> = Vec::new();
    for &x in values {
        match out.last_mut() {
            Some((sum, n, last)) if (*last - x).abs() <= tol => {
                *sum += x;
                *n += 1;
                *last = x;
            }
            _ => out.push((x, 1, x)),
        }
    }
    out.into_iter().map(|(sum, n, _)| (sum / n as f64, n)).collect()
}
