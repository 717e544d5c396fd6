//! Can the classical form reach ‖θ‖₁? Only if the phase system
//! χ_i + ψ_j ≡ −φ_ij (mod 2π) is solvable on the nonzero entries.

use std::f64::consts::PI;

use grothendieck::forms::{eval_c, phase_system_solvable, PolydiscTuple};
use grothendieck::linalg::norm_entrywise_l1;
use grothendieck::{ComplexMatrix, Result, C64};

fn report(name: &str, theta: &ComplexMatrix) -> Result<()> {
    let r = phase_system_solvable(theta)?;
    print!(
        "{name:<18} {:?}  rank A = {}, rank [A|b] = {}, shifted = {}",
        r.verdict, r.rank_a, r.rank_d, r.shifted
    );
    if let Some((s, t)) = &r.witness {
        let c = eval_c(theta, s, t)?;
        print!("  C(witness) = {c:.6}, ‖θ‖₁ = {:.6}", norm_entrywise_l1(theta));
    }
    println!();
    Ok(())
}

fn main() -> Result<()> {
    let e = |phi: f64| C64::from_polar(1.0, phi);
    let separable = ComplexMatrix::from_fn(3, 3, |i, j| e(0.3 * i as f64 - 1.1 * j as f64));
    report("separable phases", &separable)?;

    let hadamard = ComplexMatrix::from_rows(&[vec![e(0.0), e(0.0)], vec![e(0.0), e(PI)]])?;
    report("[[1,1],[1,-1]]", &hadamard)?;

    let witness = PolydiscTuple::ones(2);
    println!("C(1, 1) on [[1,1],[1,-1]] = {:.6}", eval_c(&hadamard, &witness, &witness)?);
    Ok(())
}
