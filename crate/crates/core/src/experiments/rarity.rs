//! How often does a sampled `θ` push `Q` into `(1, k_G]`?
//!
//! With the certified scaling `θ = M/g_upper(M)` the answer is provably never:
//! if the ℓ1 bound binds then `Q ≤ ‖θ‖₁ = 1`, otherwise `θ ∈ G_d′` and
//! `Q ≤ d·𝔰_max(θ) = 1`. The estimated scaling `θ = M/g_lower(M)` places `θ`
//! at the optimizer's estimate of the `G_d` boundary; it is not certified.

use std::fs::OpenOptions;
use std::io::Write;
use std::path::PathBuf;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ExperimentRecord;
use crate::coherent::{build_family, build_projector};
use crate::error::{Error, Result};
use crate::forms::{g_lower, g_prime, g_upper, kg_region_check, max_q_lower_from, OptimizerConfig, Region, G_PRIME_TOL};
use crate::linalg::{norm_entrywise_l1, ComplexMatrix};
use crate::sampling::{derive_seed, random_gaussian_matrix, random_normal, random_projector, rng_from_seed};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Ensemble {
    /// Sample 0 is the H(6) projector; the rest are random projectors.
    ScaledProjector,
    RandomNormal,
    RandomGeneral,
}

impl Ensemble {
    fn stream(self) -> u64 {
        match self {
            Ensemble::ScaledProjector => 1,
            Ensemble::RandomNormal => 2,
            Ensemble::RandomGeneral => 3,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Ensemble::ScaledProjector => "scaled_projector",
            Ensemble::RandomNormal => "random_normal",
            Ensemble::RandomGeneral => "random_general",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Scaling {
    /// `θ = M/g_upper(M)`, certified in `G_d`.
    Certified,
    /// `θ = M/g_lower(M)`, the optimizer's boundary estimate.
    Estimated,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RarityConfig {
    pub ensemble: Ensemble,
    pub samples: usize,
    pub seed: u64,
    pub starts: usize,
    pub dim: usize,
    pub scaling: Scaling,
    /// JSONL file that receives one record per sample (appended).
    pub out: Option<PathBuf>,
}

impl RarityConfig {
    pub fn new(ensemble: Ensemble, samples: usize, seed: u64, starts: usize) -> Self {
        Self {
            ensemble,
            samples,
            seed,
            starts,
            dim: 4,
            scaling: Scaling::Certified,
            out: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RarityStats {
    pub ensemble: Ensemble,
    pub samples: usize,
    pub count_in_region: usize,
    pub fraction: f64,
    pub max_q_seen: f64,
    /// First sample attaining `max_q_seen`.
    pub max_q_index: usize,
    pub seed: u64,
    pub starts: usize,
    pub dim: usize,
    pub scaling: Scaling,
    pub certified: bool,
}

fn draw(ensemble: Ensemble, index: usize, dim: usize, seed: u64) -> Result<ComplexMatrix> {
    let mut rng = rng_from_seed(seed);
    Ok(match ensemble {
        Ensemble::ScaledProjector if index == 0 => build_projector(&build_family(3)?)?.matrix,
        Ensemble::ScaledProjector => {
            let rank = rng.random_range(1..=dim);
            random_projector(&mut rng, dim, rank)
        }
        Ensemble::RandomNormal => random_normal(&mut rng, dim),
        Ensemble::RandomGeneral => random_gaussian_matrix(&mut rng, dim),
    })
}

fn sample(cfg: &RarityConfig, index: usize) -> Result<ExperimentRecord> {
    let seed = derive_seed(cfg.seed, cfg.ensemble.stream(), index as u64);
    let m = draw(cfg.ensemble, index, cfg.dim, seed)?;
    let d = m.rows();
    let opt = OptimizerConfig::with_starts(cfg.starts, seed);
    let classical = g_lower(&m, &opt)?;
    let gu = g_upper(&m)?;
    let gp = g_prime(&m)?;
    let scale = match cfg.scaling {
        Scaling::Certified => gu,
        Scaling::Estimated => classical.best_value,
    };
    if scale <= 0.0 {
        return Err(Error::invalid(format!("sample {index} is the zero matrix")));
    }
    let theta = m.scale_real(1.0 / scale);
    // the scalar witness is scale invariant
    let quantum = max_q_lower_from(&theta, &opt, Some(&classical.best_witness))?;
    let q = quantum.best_value;
    let region = kg_region_check(q)?;

    Ok(ExperimentRecord::new("rarity_sample", q, region)
        .param("ensemble", cfg.ensemble.name())
        .param("index", index)
        .param("seed", seed)
        .param("starts", cfg.starts)
        .param("d", d)
        .param("scaling", cfg.scaling)
        .diag("g_lower_m", classical.best_value)
        .diag("g_upper_m", gu)
        .diag("g_prime_m", gp)
        .diag("theta_l1", norm_entrywise_l1(&theta))
        .diag("theta_g_lower", classical.best_value / scale)
        .diag("theta_in_G_prime", gp / scale <= 1.0 + G_PRIME_TOL)
        .diag("theta_certified_in_G", gu / scale <= 1.0 + G_PRIME_TOL))
}

pub fn run_rarity(cfg: &RarityConfig) -> Result<RarityStats> {
    if cfg.samples == 0 {
        return Err(Error::invalid("rarity study needs at least one sample"));
    }
    if cfg.starts == 0 {
        return Err(Error::invalid("rarity study needs at least one start"));
    }
    if cfg.dim < 1 {
        return Err(Error::invalid("rarity study needs dim >= 1"));
    }
    let records: Vec<ExperimentRecord> = (0..cfg.samples)
        .into_par_iter()
        .map(|k| sample(cfg, k))
        .collect::<Result<Vec<_>>>()?;

    if let Some(path) = &cfg.out {
        let mut file = OpenOptions::new().create(true).append(true).open(path)?;
        let mut buf = String::new();
        for r in &records {
            buf.push_str(&serde_json::to_string(r)?);
            buf.push('\n');
        }
        file.write_all(buf.as_bytes())?;
    }

    let count = records.iter().filter(|r| r.region == Region::Grothendieck).count();
    let mut best = 0;
    for (k, r) in records.iter().enumerate() {
        if r.q_value > records[best].q_value {
            best = k;
        }
    }
    Ok(RarityStats {
        ensemble: cfg.ensemble,
        samples: cfg.samples,
        count_in_region: count,
        fraction: count as f64 / cfg.samples as f64,
        max_q_seen: records[best].q_value,
        max_q_index: best,
        seed: cfg.seed,
        starts: cfg.starts,
        dim: cfg.dim,
        scaling: cfg.scaling,
        certified: cfg.scaling == Scaling::Certified,
    })
}
