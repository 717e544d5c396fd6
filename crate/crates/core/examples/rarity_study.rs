//! How often does Q land in (1, k_G] for sampled θ?

use grothendieck::experiments::{run_rarity, Ensemble, RarityConfig, Scaling};
use grothendieck::Result;

fn main() -> Result<()> {
    for scaling in [Scaling::Certified, Scaling::Estimated] {
        for ensemble in [Ensemble::ScaledProjector, Ensemble::RandomNormal, Ensemble::RandomGeneral] {
            let mut cfg = RarityConfig::new(ensemble, 50, 0, 8);
            cfg.scaling = scaling;
            let s = run_rarity(&cfg)?;
            println!(
                "{scaling:?} {ensemble:?}: {}/{} in region, max Q {:.6} (sample {})",
                s.count_in_region, s.samples, s.max_q_seen, s.max_q_index
            );
        }
    }
    Ok(())
}
