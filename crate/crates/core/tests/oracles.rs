mod common;

use std::f64::consts::PI;

use common::{brute_force_singular_value, grid_g, grid_resolution_bound, phases_feasible};
use grothendieck::forms::{g_lower, g_upper, phase_system_solvable, OptimizerConfig, PhaseVerdict};
use grothendieck::linalg::{largest_singular_value, norm_entrywise_l1, permutation_matrix, Permutation};
use grothendieck::sampling::{random_gaussian_matrix, rng_from_seed};
use grothendieck::{ComplexMatrix, C64};
use itertools::Itertools;
use rand::Rng;

#[test]
fn g_lower_matches_torus_grid() {
    let mut rng = rng_from_seed(101);
    let cfg = OptimizerConfig::with_starts(32, 0);
    for (d, count) in [(2, 25), (3, 6)] {
        for _ in 0..count {
            let m = random_gaussian_matrix(&mut rng, d);
            let theta = m.scale_real(1.0 / g_upper(&m).unwrap());
            let gl = g_lower(&theta, &cfg).unwrap().best_value;
            let grid = grid_g(&theta, 48);
            assert!((gl - grid).abs() <= 2e-3, "d={d}: g_lower {gl} grid {grid}");
            assert!(grid <= gl + 1e-9, "grid {grid} beats g_lower {gl}");
            assert!(gl - grid <= grid_resolution_bound(&theta, 48));
        }
    }
}

#[test]
fn grid_oracle_on_known_values() {
    // ±1 Hadamard: g = 2√2
    let h = ComplexMatrix::from_real_rows(&[vec![1.0, 1.0], vec![1.0, -1.0]]).unwrap();
    let grid = grid_g(&h, 48);
    assert!(grid <= 8f64.sqrt() + 1e-12 && 8f64.sqrt() - grid < 1e-2);
    let p = permutation_matrix(&Permutation::new(vec![2, 0, 1]).unwrap());
    assert!((grid_g(&p, 48) - 3.0).abs() < 1e-12);
}

fn with_phases(support: &ComplexMatrix, rng: &mut impl Rng) -> ComplexMatrix {
    ComplexMatrix::from_fn(support.rows(), support.cols(), |i, j| {
        if support[(i, j)].norm() > 0.0 {
            C64::from_polar(rng.random_range(0.1..2.0), rng.random_range(-PI..PI))
        } else {
            C64::new(0.0, 0.0)
        }
    })
}

fn verdict(theta: &ComplexMatrix) -> bool {
    phase_system_solvable(theta).unwrap().verdict == PhaseVerdict::Solvable
}

#[test]
fn permutation_type_verdicts() {
    let mut rng = rng_from_seed(5);
    for d in 1..=4 {
        for images in (0..d).permutations(d) {
            let p = permutation_matrix(&Permutation::new(images).unwrap());
            let theta = with_phases(&p, &mut rng);
            assert!(phases_feasible(&theta));
            assert!(verdict(&theta));
        }
    }
}

#[test]
fn two_by_two_verdicts() {
    let mut rng = rng_from_seed(6);
    let full = ComplexMatrix::from_fn(2, 2, |_, _| C64::new(1.0, 0.0));
    for _ in 0..300 {
        let theta = with_phases(&full, &mut rng);
        assert_eq!(verdict(&theta), phases_feasible(&theta));
    }
    // consistent phases, many of which need a 2π shift after wrapping
    for _ in 0..300 {
        let chi: [f64; 2] = [rng.random_range(-PI..PI), rng.random_range(-PI..PI)];
        let psi: [f64; 2] = [rng.random_range(-PI..PI), rng.random_range(-PI..PI)];
        let theta = ComplexMatrix::from_fn(2, 2, |i, j| C64::from_polar(rng.random_range(0.1..2.0), -(chi[i] + psi[j])));
        assert!(phases_feasible(&theta));
        assert!(verdict(&theta));
        let r = phase_system_solvable(&theta).unwrap();
        let (s, t) = r.witness.unwrap();
        let c = grothendieck::forms::eval_c(&theta, &s, &t).unwrap();
        assert!((c - norm_entrywise_l1(&theta)).abs() < 1e-9);
    }
    let ex = ComplexMatrix::from_real_rows(&[vec![1.0, 1.0], vec![1.0, -1.0]]).unwrap();
    assert!(!phases_feasible(&ex));
    assert!(!verdict(&ex));
}

#[test]
fn sparse_supports_agree_with_cycle_oracle() {
    let mut rng = rng_from_seed(8);
    for _ in 0..300 {
        let d = rng.random_range(2..=4);
        let support = ComplexMatrix::from_fn(d, d, |_, _| C64::new(f64::from(u8::from(rng.random_bool(0.6))), 0.0));
        if support.is_zero() || support.entries().iter().filter(|z| z.norm() > 0.0).count() > 12 {
            continue;
        }
        let theta = with_phases(&support, &mut rng);
        assert_eq!(verdict(&theta), phases_feasible(&theta));
    }
}

#[test]
fn singular_value_matches_brute_force() {
    let mut rng = rng_from_seed(9);
    for d in 1..=4 {
        for k in 0..3 {
            let m = random_gaussian_matrix(&mut rng, d);
            let s = largest_singular_value(&m).unwrap();
            let b = brute_force_singular_value(&m, 10_000, 100 + k);
            assert!((s - b).abs() <= 1e-8 * s.max(1.0), "d={d}: {s} vs {b}");
        }
    }
}
