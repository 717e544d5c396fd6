//! Solvability of `φ_ij − χ_i − ψ_j = 0` over the nonzero entries of θ.
//!
//! If the system has a solution then `s_i = e^{−iχ_i}`, `t_j = e^{−iψ_j}` make
//! every term of the classical form real and positive, so `g(θ) = ‖θ‖₁`.
//! Rows are `[e_i | e_j]` with right-hand side `arg θ_ij ∈ (−π, π]`.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use super::{PolydiscTuple, ScalarWitness};
use crate::error::Result;
use crate::linalg::ComplexMatrix;

/// Pivots below this fraction of the largest entry count as zero.
pub const RANK_TOL: f64 = 1e-10;
/// Above this many equations the `±2π` shift enumeration is skipped.
pub const MAX_SHIFT_EQUATIONS: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PhaseVerdict {
    Solvable,
    Unsolvable,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PhaseSystemReport {
    pub verdict: PhaseVerdict,
    /// `N`, the number of nonzero entries.
    pub equations: usize,
    /// `2d`
    pub unknowns: usize,
    pub rank_a: usize,
    /// Rank of the augmented matrix with principal-value right-hand sides.
    pub rank_d: usize,
    /// True when solvability needed some right-hand sides shifted by `±2π`.
    pub shifted: bool,
    pub shifts_enumerated: bool,
    pub chi: Option<Vec<f64>>,
    pub psi: Option<Vec<f64>>,
    pub witness: Option<ScalarWitness>,
}

/// Row reduction of `A` that also records the transform `L` with `L·A = R`.
struct Echelon {
    /// Pivot rows come first in `r`; rows `rank..` of `R` vanish.
    r: Vec<Vec<f64>>,
    l: Vec<Vec<f64>>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce(a: &[Vec<f64>], cols: usize) -> Self {
        let n = a.len();
        let mut r: Vec<Vec<f64>> = a.to_vec();
        let mut l: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| f64::from(i == j)).collect()).collect();
        let scale = r.iter().flatten().fold(0.0f64, |m, x| m.max(x.abs())).max(f64::MIN_POSITIVE);
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            if row == n {
                break;
            }
            let (best, mag) = (row..n)
                .map(|i| (i, r[i][col].abs()))
                .fold((row, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if mag <= RANK_TOL * scale {
                continue;
            }
            r.swap(row, best);
            l.swap(row, best);
            let p = r[row][col];
            for x in r[row].iter_mut() {
                *x /= p;
            }
            for x in l[row].iter_mut() {
                *x /= p;
            }
            for i in 0..n {
                if i != row && r[i][col] != 0.0 {
                    let f = r[i][col];
                    let (ri, rr) = two(&mut r, i, row);
                    for (x, y) in ri.iter_mut().zip(rr.iter()) {
                        *x -= f * y;
                    }
                    let (li, lr) = two(&mut l, i, row);
                    for (x, y) in li.iter_mut().zip(lr.iter()) {
                        *x -= f * y;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        Self { r, l, pivots }
    }

    /// `L·c`
    fn transform(&self, c: &[f64]) -> Vec<f64> {
        self.l.iter().map(|row| row.iter().zip(c).map(|(a, b)| a * b).sum()).collect()
    }

    /// Particular solution with free variables at zero.
    fn solve(&self, lc: &[f64], unknowns: usize) -> Vec<f64> {
        let mut x = vec![0.0; unknowns];
        for (k, &col) in self.pivots.iter().enumerate() {
            debug_assert!((self.r[k][col] - 1.0).abs() < 1e-12);
            x[col] = lc[k];
        }
        x
    }
}

fn two<T>(v: &mut [T], i: usize, j: usize) -> (&mut T, &T) {
    if i < j {
        let (a, b) = v.split_at_mut(j);
        (&mut a[i], &b[0])
    } else {
        let (a, b) = v.split_at_mut(i);
        (&mut b[0], &a[j])
    }
}

fn consistent(lc: &[f64], rank: usize, scale: f64) -> bool {
    lc[rank..].iter().all(|x| x.abs() <= RANK_TOL * scale.max(1.0))
}

/// Rouché–Capelli test on the phase system of `θ`.
pub fn phase_system_solvable(theta: &ComplexMatrix) -> Result<PhaseSystemReport> {
    let d = theta.require_square()?;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let z = theta[(i, j)];
            if z.norm() > 0.0 {
                let mut row = vec![0.0; 2 * d];
                row[i] = 1.0;
                row[d + j] = 1.0;
                rows.push(row);
                rhs.push(z.arg());
            }
        }
    }
    let n = rows.len();
    let ech = Echelon::reduce(&rows, 2 * d);
    let rank_a = ech.rank();
    let scale = rhs.iter().fold(PI, |m: f64, x| m.max(x.abs()));

    let lc = ech.transform(&rhs);
    let base_ok = consistent(&lc, rank_a, scale);
    let rank_d = if base_ok { rank_a } else { rank_a + 1 };

    let mut solution: Option<(Vec<f64>, bool)> = base_ok.then(|| (ech.solve(&lc, 2 * d), false));
    let enumerate = !base_ok && n <= MAX_SHIFT_EQUATIONS;
    if enumerate {
        solution = enumerate_shifts(&ech, &lc, n, rank_a, scale).map(|lc| (ech.solve(&lc, 2 * d), true));
    }

    let (chi, psi, witness, shifted) = match solution {
        Some((x, shifted)) => {
            let chi = x[..d].to_vec();
            let psi = x[d..].to_vec();
            let s = PolydiscTuple::from_phases(&chi.iter().map(|c| -c).collect::<Vec<_>>());
            let t = PolydiscTuple::from_phases(&psi.iter().map(|c| -c).collect::<Vec<_>>());
            (Some(chi), Some(psi), Some((s, t)), shifted)
        }
        None => (None, None, None, false),
    };

    Ok(PhaseSystemReport {
        verdict: if witness.is_some() {
            PhaseVerdict::Solvable
        } else {
            PhaseVerdict::Unsolvable
        },
        equations: n,
        unknowns: 2 * d,
        rank_a,
        rank_d,
        shifted,
        shifts_enumerated: enumerate,
        chi,
        psi,
        witness,
    })
}

/// Search `n ∈ {−1, 0, 1}^N` for `L·(c + 2πn)` consistent.
///
/// Only the rows of `L` past the rank matter, so each candidate costs
/// `O(N·(N − rank))` via an odometer update of the residual.
fn enumerate_shifts(ech: &Echelon, lc: &[f64], n: usize, rank: usize, scale: f64) -> Option<Vec<f64>> {
    let tail: Vec<&Vec<f64>> = ech.l[rank..].iter().collect();
    let mut residual: Vec<f64> = lc[rank..].to_vec();
    let mut digits = vec![0i8; n];
    let step = 2.0 * PI;
    // digit cycle 0 → 1 → −1 → 0
    loop {
        let mut k = 0;
        loop {
            if k == n {
                return None;
            }
            let (next, delta) = match digits[k] {
                0 => (1, 1.0),
                1 => (-1, -2.0),
                _ => (0, 1.0),
            };
            digits[k] = next;
            for (r, row) in residual.iter_mut().zip(&tail) {
                *r += delta * step * row[k];
            }
            if next != 0 {
                break;
            }
            k += 1;
        }
        if residual.iter().all(|x| x.abs() <= RANK_TOL * (scale + step).max(1.0) * n as f64) {
            let shifted: Vec<f64> = digits.iter().map(|&g| f64::from(g) * step).collect();
            let full = ech.transform(&shifted);
            return Some(lc.iter().zip(full).map(|(a, b)| a + b).collect());
        }
    }
}

/// Phases of θ's nonzero entries as `(i, j, arg)`.
pub fn nonzero_phases(theta: &ComplexMatrix) -> Vec<(usize, usize, f64)> {
    let mut out = Vec::new();
    for i in 0..theta.rows() {
        for j in 0..theta.cols() {
            let z: C64 = theta[(i, j)];
            if z.norm() > 0.0 {
                out.push((i, j, z.arg()));
            }
        }
    }
    out
}
