//! g(Π₆) by two routes: the 12-variable (R, χ) ascent on (A²+B²+C²)/2 and the
//! general multistart maximiser on the projector.

use grothendieck::experiments::certify_g_pi6;
use grothendieck::Result;

fn main() -> Result<()> {
    let c = certify_g_pi6(32, 0)?;
    println!("all ones      {{A,B,C}} = {:?}, objective {}", c.all_ones.abc, c.all_ones.objective);
    println!("t5 flipped    {{A,B,C}} = {:?}, objective {}", c.t5_flipped.abc, c.t5_flipped.objective);
    println!("from R = χ = 0.5: objective {:.9}", c.equal_phase_start_objective);
    println!("specialised route  g = {:.12}", c.specialized_g);
    println!("general route      g = {:.12}", c.general.best_value);
    println!("3 + 2√2              = {:.12}", 3.0 + 2.0 * 2f64.sqrt());
    println!("routes agree {}, equals {}: {}", c.routes_agree, c.claimed_value, c.agrees_with_claimed_value);
    Ok(())
}
