//! θ = λΠ on H(6): Q grows linearly as 6λ and passes 1 once λ > 1/6.

use grothendieck::experiments::run_h6;
use grothendieck::forms::OptimizerConfig;
use grothendieck::Result;

fn main() -> Result<()> {
    let cfg = OptimizerConfig::with_starts(32, 0);
    for lambda in [1.0 / 12.0, 1.0 / 6.0, 0.18, 0.2] {
        let r = run_h6(lambda, &cfg)?;
        println!(
            "λ = {lambda:.4}  Q = {:.6}  {:?}  θ ∈ G' {}  θ ∈ G {}",
            r.q_value, r.region, r.diagnostics["theta_in_G_prime"], r.diagnostics["theta_in_G"]
        );
    }
    let r = run_h6(0.2, &cfg)?;
    println!("g(Π) bracket [{}, {}]", r.diagnostics["g_lower"], r.diagnostics["g_upper"]);
    println!("purity {}  entropy {}", r.diagnostics["purity"], r.diagnostics["entropy"]);
    Ok(())
}
