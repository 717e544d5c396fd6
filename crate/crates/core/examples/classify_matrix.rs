//! Bracket g(θ) and decide G_d′ and G_d for a few matrices.

use grothendieck::forms::{classify, OptimizerConfig};
use grothendieck::linalg::{permutation_matrix, Permutation};
use grothendieck::{ComplexMatrix, Result, C64};

fn show(name: &str, theta: &ComplexMatrix, cfg: &OptimizerConfig) -> Result<()> {
    let c = classify(theta, cfg)?;
    println!(
        "{name:<14} g in [{:.6}, {:.6}]  g' = {:.6}  G' {:<5}  G {:?}",
        c.g_lower, c.g_upper, c.g_prime, c.in_g_prime, c.in_g
    );
    Ok(())
}

fn main() -> Result<()> {
    let cfg = OptimizerConfig::with_starts(32, 0);
    let one = C64::new(1.0, 0.0);

    let mut single = ComplexMatrix::zeros(3, 3);
    single[(0, 2)] = one;
    show("single entry", &single, &cfg)?;

    show("perm / 3", &permutation_matrix(&Permutation::new(vec![1, 2, 0])?).scale_real(1.0 / 3.0), &cfg)?;

    let h = ComplexMatrix::from_rows(&[vec![one, one], vec![one, -one]])?;
    show("[[1,1],[1,-1]]", &h, &cfg)?;
    show("  / 2√2", &h.scale_real(1.0 / 8f64.sqrt()), &cfg)?;
    Ok(())
}
