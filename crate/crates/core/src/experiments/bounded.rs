//! `|Tr(ρU)| ≤ 1` for density matrices and unitaries, compared with the bound
//! `min(d·e_max·k_G, ‖ρ‖₁)` obtained through the Grothendieck route.
//!
//! For odd `d` the demo also samples displacement operators
//! `D(a, b) = ω^{−2⁻¹ab} X^a Z^b` and displaced parities `D P D†`, the
//! unitaries behind the Weyl and Wigner functions on `Z_d × Z_d`.

use num_complex::Complex64 as C64;
use rand::Rng;

use super::ExperimentRecord;
use crate::error::{Error, Result};
use crate::forms::{kg_region_check, K_G_UPPER};
use crate::linalg::{hermitian_eig, norm_entrywise_l1, ComplexMatrix};
use crate::sampling::{random_density, random_unitary, rng_from_seed};

/// `D(a, b)` for odd `d`; `X|j⟩ = |j+1⟩`, `Z|j⟩ = ω^j|j⟩`.
pub fn displacement_operator(d: usize, a: usize, b: usize) -> Result<ComplexMatrix> {
    if d.is_multiple_of(2) || d < 3 {
        return Err(Error::invalid(format!("displacement operators need odd d >= 3, got {d}")));
    }
    let half = d.div_ceil(2); // 2⁻¹ mod d
    let omega = |k: usize| C64::from_polar(1.0, 2.0 * std::f64::consts::PI * (k % d) as f64 / d as f64);
    let phase = omega(d - (half * a % d * b % d) % d);
    // (X^a Z^b)_{ij} = δ(i, j+a) ω^{bj}
    Ok(ComplexMatrix::from_fn(d, d, |i, j| {
        if i == (j + a) % d {
            phase * omega(b * j)
        } else {
            C64::new(0.0, 0.0)
        }
    }))
}

fn parity(d: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(d, d, |i, j| C64::new(f64::from(u8::from((i + j) % d == 0)), 0.0))
}

pub fn run_bounded_demo(d: usize, samples: usize, seed: u64) -> Result<ExperimentRecord> {
    if d < 2 {
        return Err(Error::invalid("bounded demo needs d >= 2"));
    }
    if samples == 0 {
        return Err(Error::invalid("bounded demo needs at least one sample"));
    }
    let mut rng = rng_from_seed(seed);
    let mut max_trace: f64 = 0.0;
    let mut min_grothendieck_bound = f64::INFINITY;
    let mut bound_one_tighter = true;
    let mut max_weyl: f64 = 0.0;
    let mut max_wigner: f64 = 0.0;
    let odd = d % 2 == 1 && d >= 3;
    let p = parity(d);

    for _ in 0..samples {
        let rho = random_density(&mut rng, d);
        let u = random_unitary(&mut rng, d);
        let q = (&rho * &u).trace().norm();
        max_trace = max_trace.max(q);

        let e_max = hermitian_eig(&rho)?.eigenvalues[0];
        let bound = (d as f64 * e_max * K_G_UPPER).min(norm_entrywise_l1(&rho));
        min_grothendieck_bound = min_grothendieck_bound.min(bound);
        bound_one_tighter &= bound >= 1.0 - 1e-12;

        if odd {
            let a = rng.random_range(0..d);
            let b = rng.random_range(0..d);
            let disp = displacement_operator(d, a, b)?;
            max_weyl = max_weyl.max((&rho * &disp).trace().norm());
            let displaced_parity = &(&disp * &p) * &disp.adjoint();
            max_wigner = max_wigner.max((&rho * &displaced_parity).trace().norm());
        }
    }

    let mut rec = ExperimentRecord::new("bounded", max_trace, kg_region_check(max_trace)?)
        .param("d", d)
        .param("samples", samples)
        .param("seed", seed)
        .diag("max_abs_trace_rho_u", max_trace)
        .diag("never_exceeds_one", max_trace <= 1.0 + 1e-12)
        .diag("min_grothendieck_side_bound", min_grothendieck_bound)
        .diag("bound_one_is_tighter", bound_one_tighter);
    if odd {
        rec = rec
            .diag("max_abs_weyl", max_weyl)
            .diag("max_abs_displaced_parity", max_wigner)
            .diag("displacement_demo", "standard finite phase-space convention, not a reproduction");
    }
    Ok(rec)
}
