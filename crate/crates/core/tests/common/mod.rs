//! Independent oracles shared by the integration tests and the acceptance run.
#![allow(dead_code)]

use std::collections::VecDeque;
use std::f64::consts::PI;

use grothendieck::{ComplexMatrix, C64};

/// `max_t Σ_i |(θt)_i|` over `points` equally spaced phases per coordinate.
/// The optimal `s` is `s_i = conj(sign((θt)_i))`, so only `t` is searched.
pub fn grid_g(theta: &ComplexMatrix, points: usize) -> f64 {
    let d = theta.cols();
    let phases: Vec<C64> = (0..points)
        .map(|k| C64::from_polar(1.0, -PI + 2.0 * PI * k as f64 / points as f64))
        .collect();
    let mut idx = vec![0usize; d];
    let mut best = 0.0f64;
    loop {
        let t: Vec<C64> = idx.iter().map(|&k| phases[k]).collect();
        let value: f64 = theta.mul_vec(&t).iter().map(|z| z.norm()).sum();
        best = best.max(value);
        let mut j = 0;
        while j < d {
            idx[j] += 1;
            if idx[j] < points {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
        if j == d {
            return best;
        }
    }
}

/// Every `t` on the torus is within `π/points` per phase of a grid point, and
/// `|e^{iδ} − 1| ≤ |δ|`, so the grid is within `‖θ‖₁·π/points` of the maximum.
pub fn grid_resolution_bound(theta: &ComplexMatrix, points: usize) -> f64 {
    theta.entries().iter().map(|z| z.norm()).sum::<f64>() * PI / points as f64
}

/// Feasibility of `χ_i + ψ_j ≡ −arg θ_ij (mod 2π)` on the nonzero entries,
/// by fixing potentials along a spanning forest of the bipartite support graph
/// and checking every remaining edge.
pub fn phases_feasible(theta: &ComplexMatrix) -> bool {
    let (r, c) = (theta.rows(), theta.cols());
    let nz = |i: usize, j: usize| theta[(i, j)].norm() > 1e-12;
    // nodes 0..r are rows, r..r+c are columns
    let mut pot: Vec<Option<f64>> = vec![None; r + c];
    for root in 0..r + c {
        if pot[root].is_some() {
            continue;
        }
        pot[root] = Some(0.0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let pu = pot[u].unwrap();
            let neighbours: Vec<(usize, f64)> = if u < r {
                (0..c).filter(|&j| nz(u, j)).map(|j| (r + j, theta[(u, j)].arg())).collect()
            } else {
                (0..r).filter(|&i| nz(i, u - r)).map(|i| (i, theta[(i, u - r)].arg())).collect()
            };
            for (v, phi) in neighbours {
                let want = -phi - pu;
                match pot[v] {
                    None => {
                        pot[v] = Some(want);
                        queue.push_back(v);
                    }
                    Some(pv) => {
                        let gap = (pv - want).rem_euclid(2.0 * PI);
                        if gap.min(2.0 * PI - gap) > 1e-9 {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// `max ‖Mx‖/‖x‖` by random search over unit vectors, polished by a
/// shrinking random-perturbation search from the best sample.
pub fn brute_force_singular_value(m: &ComplexMatrix, samples: usize, seed: u64) -> f64 {
    use grothendieck::linalg::vec_norm;
    use grothendieck::sampling::{random_unit_vector, rng_from_seed};

    let mut rng = rng_from_seed(seed);
    let ratio = |x: &[C64]| vec_norm(&m.mul_vec(x)) / vec_norm(x);
    let mut best = random_unit_vector(&mut rng, m.cols());
    let mut best_val = ratio(&best);
    for _ in 1..samples {
        let x = random_unit_vector(&mut rng, m.cols());
        let v = ratio(&x);
        if v > best_val {
            best = x;
            best_val = v;
        }
    }
    let mut step = 0.1;
    while step > 1e-9 {
        let mut improved = false;
        for _ in 0..200 {
            let dir = random_unit_vector(&mut rng, m.cols());
            let cand: Vec<C64> = best.iter().zip(&dir).map(|(a, b)| a + b * step).collect();
            let v = ratio(&cand);
            if v > best_val {
                best = cand;
                best_val = v;
                improved = true;
            }
        }
        if !improved {
            step *= 0.5;
        }
    }
    best_val
}
