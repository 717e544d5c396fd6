//! The d(d−1) zero-diluted Fourier states: resolution of the identity,
//! isotropy, permutation invariance and expansion of an arbitrary state.

use grothendieck::coherent::{
    build_family, expand_state, isotropy_check, overlap_power_sum, permutation_invariance_check, resolution_check,
};
use grothendieck::{Result, C64};

fn main() -> Result<()> {
    for d in 2..=6 {
        let fam = build_family(d)?;
        let perm = permutation_invariance_check(&fam)?.invariant;
        println!(
            "d = {d}: {} states, resolution residual {:.1e}, isotropic {}, permutation invariant {perm}{}",
            fam.len(),
            resolution_check(&fam),
            isotropy_check(&fam).isotropic,
            if fam.is_conjectural_extension() { " (conjectural extension)" } else { "" },
        );
    }

    let fam = build_family(3)?;
    for r in 1..=4 {
        println!("Σ_j |⟨a_0|a_j⟩|^{r} = {:.6}", overlap_power_sum(&fam, 0, r)?);
    }

    let f = vec![C64::new(0.6, 0.0), C64::new(0.0, 0.8), C64::new(0.0, 0.0)];
    let c = expand_state(&fam, &f)?;
    let back = c.reconstruct(&fam);
    let err: f64 = back.iter().zip(&f).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    println!("expansion of f: Σ|f_j|² = {:.6}, reconstruction error {err:.1e}", c.norm_sqr());
    Ok(())
}
