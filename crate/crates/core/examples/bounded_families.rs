//! |Tr(ρU)| never exceeds 1, and the Grothendieck-side bound is never tighter.

use grothendieck::experiments::run_bounded_demo;
use grothendieck::Result;

fn main() -> Result<()> {
    for d in [2, 3, 4, 5] {
        let r = run_bounded_demo(d, 2000, 0)?;
        print!(
            "d = {d}: max |Tr ρU| = {:.6}, min Grothendieck-side bound = {:.4}",
            r.q_value, r.diagnostics["min_grothendieck_side_bound"]
        );
        if let Some(w) = r.diagnostics.get("max_abs_weyl") {
            print!(", max |Tr ρD| = {w:.4}, max |Tr ρDPD†| = {:.4}", r.diagnostics["max_abs_displaced_parity"]);
        }
        println!();
    }
    Ok(())
}
