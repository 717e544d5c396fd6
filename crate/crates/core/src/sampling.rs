//! Seeded random ensembles used by tests, the rarity study and the bounded
//! demo. Every generator is a deterministic function of the RNG state.

use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::linalg::{inner, vec_norm, ComplexMatrix};

pub type SeededRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// SplitMix64 finaliser over `(seed, stream, index)`.
pub fn derive_seed(seed: u64, stream: u64, index: u64) -> u64 {
    let mut z = seed
        .wrapping_add(stream.wrapping_mul(0x9E37_79B9_7F4A_7C15))
        .wrapping_add(index.wrapping_mul(0xBF58_476D_1CE4_E5B9));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Uniform phase `e^{iα}`, `α ∈ [−π, π)`.
pub fn random_phase<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.random_range(-std::f64::consts::PI..std::f64::consts::PI)
}

/// Independent standard complex Gaussian entries.
pub fn random_gaussian_matrix<R: Rng + ?Sized>(rng: &mut R, d: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(d, d, |_, _| complex_gaussian(rng))
}

pub fn random_unit_vector<R: Rng + ?Sized>(rng: &mut R, d: usize) -> Vec<C64> {
    loop {
        let v: Vec<C64> = (0..d).map(|_| complex_gaussian(rng)).collect();
        let n = vec_norm(&v);
        if n > 1e-12 {
            return v.into_iter().map(|z| z / n).collect();
        }
    }
}

/// Haar-distributed unitary: Gram–Schmidt QR of a Gaussian matrix with the
/// diagonal of R made positive.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, d: usize) -> ComplexMatrix {
    loop {
        let g = random_gaussian_matrix(rng, d);
        let mut cols: Vec<Vec<C64>> = Vec::with_capacity(d);
        let mut ok = true;
        for j in 0..d {
            let mut v = g.column(j);
            // two passes of modified Gram–Schmidt for orthogonality at ~1e-15
            for _ in 0..2 {
                for q in &cols {
                    let proj = inner(q, &v);
                    for (vi, qi) in v.iter_mut().zip(q) {
                        *vi -= proj * qi;
                    }
                }
            }
            let n = vec_norm(&v);
            if n < 1e-10 {
                ok = false;
                break;
            }
            cols.push(v.into_iter().map(|z| z / n).collect());
        }
        if ok {
            return ComplexMatrix::from_columns(&cols).expect("square by construction");
        }
    }
}

/// `U·diag(values)·U†`.
pub fn conjugate_diagonal(u: &ComplexMatrix, values: &[C64]) -> ComplexMatrix {
    let d = values.len();
    ComplexMatrix::from_fn(d, d, |i, j| {
        (0..d).map(|k| u[(i, k)] * values[k] * u[(j, k)].conj()).sum()
    })
}

/// Normal matrix `U·diag(e)·U†` with complex Gaussian eigenvalues.
pub fn random_normal<R: Rng + ?Sized>(rng: &mut R, d: usize) -> ComplexMatrix {
    let e: Vec<C64> = (0..d).map(|_| complex_gaussian(rng)).collect();
    let u = random_unitary(rng, d);
    conjugate_diagonal(&u, &e)
}

pub fn random_hermitian<R: Rng + ?Sized>(rng: &mut R, d: usize) -> ComplexMatrix {
    let g = random_gaussian_matrix(rng, d);
    (&g + &g.adjoint()).scale_real(0.5)
}

/// Full-rank density matrix with spectrum from normalised squared Gaussians.
pub fn random_density<R: Rng + ?Sized>(rng: &mut R, d: usize) -> ComplexMatrix {
    let w: Vec<f64> = (0..d)
        .map(|_| {
            let x: f64 = rng.sample(StandardNormal);
            x * x + 1e-300
        })
        .collect();
    let total: f64 = w.iter().sum();
    let e: Vec<C64> = w.iter().map(|x| C64::new(x / total, 0.0)).collect();
    let u = random_unitary(rng, d);
    let rho = conjugate_diagonal(&u, &e);
    // symmetrise away rounding so downstream Hermitian checks see exact symmetry
    (&rho + &rho.adjoint()).scale_real(0.5)
}

/// Rank-`rank` orthogonal projector onto random columns of a Haar unitary.
pub fn random_projector<R: Rng + ?Sized>(rng: &mut R, d: usize, rank: usize) -> ComplexMatrix {
    let u = random_unitary(rng, d);
    let mut e = vec![C64::new(0.0, 0.0); d];
    for z in e.iter_mut().take(rank) {
        *z = C64::new(1.0, 0.0);
    }
    let p = conjugate_diagonal(&u, &e);
    (&p + &p.adjoint()).scale_real(0.5)
}
