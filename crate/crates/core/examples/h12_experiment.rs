//! θ = λΠ on H(12). The admissible range of λ ends at 1/g_lower(Π).

use grothendieck::experiments::run_h12;
use grothendieck::forms::OptimizerConfig;
use grothendieck::Result;

fn main() -> Result<()> {
    let cfg = OptimizerConfig::with_starts(32, 0);
    let r = run_h12(1.0 / 24.0, &cfg)?;
    let gl = r.diagnostics["g_lower"].as_f64().unwrap_or(f64::NAN);
    println!("g(Π) bracket [{gl:.6}, {}]  g' = {}", r.diagnostics["g_upper"], r.diagnostics["g_prime"]);
    for lambda in [1.0 / 24.0, 1.0 / 12.0, 1.0 / gl] {
        let r = run_h12(lambda, &cfg)?;
        println!("λ = {lambda:.6}  Q = {:.6}  {:?}", r.q_value, r.region);
    }
    println!("strict bound certified: {}", r.diagnostics["strict_bound_certified"]);
    println!("purity {}  entropy {}", r.diagnostics["purity"], r.diagnostics["entropy"]);
    Ok(())
}
