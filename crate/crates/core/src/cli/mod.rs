//! The `groth` command line.
//!
//! Every subcommand prints one JSON document on stdout. Exit codes: 0 on
//! success, 2 for bad input (including usage errors), 3 when a numerical
//! procedure fails to converge or a consistency check fails.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::coherent::{
    build_family, build_projector, isotropy_check, permutation_invariance_check, resolution_check,
    MAX_PERMUTATION_DIM,
};
use crate::error::{Error, Result};
use crate::experiments::{
    certify_g_pi6, run_bounded_demo, run_h12, run_h6, run_rarity, Ensemble, RarityConfig, Scaling,
};
use crate::forms::{classify, g_lower, g_prime, g_upper, phase_system_solvable, OptimizerConfig};
use crate::linalg::{norm_entrywise_l1, ComplexMatrix};
use crate::norms::norm_report;

/// Settings shared by every subcommand; `--config FILE` mirrors this shape.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct CliConfig {
    pub seed: u64,
    pub starts: usize,
    /// Recognised key: `phase_tolerance`.
    pub tolerances: BTreeMap<String, f64>,
    pub output_path: Option<String>,
}

impl Default for CliConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            starts: 64,
            tolerances: BTreeMap::new(),
            output_path: None,
        }
    }
}

impl CliConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = read(path)?;
        let cfg: Self = serde_json::from_str(&text)
            .map_err(|e| Error::invalid(format!("malformed config {}: {e}", path.display())))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.starts == 0 {
            return Err(Error::invalid("starts must be >= 1"));
        }
        for (k, &v) in &self.tolerances {
            if k != "phase_tolerance" {
                return Err(Error::invalid(format!("unknown tolerance override '{k}'")));
            }
            if v.is_nan() || v <= 0.0 || v.is_infinite() {
                return Err(Error::invalid(format!("tolerance '{k}' must be positive, got {v}")));
            }
        }
        Ok(())
    }

    pub fn optimizer(&self) -> OptimizerConfig {
        let mut cfg = OptimizerConfig::with_starts(self.starts, self.seed);
        if let Some(&t) = self.tolerances.get("phase_tolerance") {
            cfg.phase_tolerance = t;
        }
        cfg
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))
}

#[derive(Deserialize)]
struct LooseMatrix {
    entries: Vec<[Option<f64>; 2]>,
    cols: usize,
}

/// Reads the `{"rows", "cols", "entries": [[re, im], ...]}` schema.
///
/// `NaN`/`Infinity` literals are not JSON, so a failed parse is retried with
/// them mapped to `null` to report which entry is non-finite.
pub fn parse_matrix_file(path: &Path) -> Result<ComplexMatrix> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::invalid(format!("missing or unreadable matrix file {}: {e}", path.display())))?;
    match serde_json::from_str::<ComplexMatrix>(&text) {
        Ok(m) => Ok(m),
        Err(e) => {
            let loose = text
                .replace("-Infinity", "null")
                .replace("Infinity", "null")
                .replace("NaN", "null");
            if loose != text {
                if let Ok(m) = serde_json::from_str::<LooseMatrix>(&loose) {
                    if let Some(k) = m.entries.iter().position(|e| e[0].is_none() || e[1].is_none()) {
                        let cols = m.cols.max(1);
                        return Err(Error::NonFinite {
                            row: k / cols,
                            col: k % cols,
                        });
                    }
                }
            }
            if e.is_data() {
                let msg = e.to_string();
                if msg.contains("dimension") {
                    return Err(Error::Dimension(msg));
                }
                if msg.contains("non-finite") {
                    return Err(Error::invalid(msg));
                }
                return Err(Error::invalid(format!("matrix file {} does not match the schema: {msg}", path.display())));
            }
            Err(Error::invalid(format!("malformed JSON in {}: {e}", path.display())))
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "groth", version, about = "Matrix-form Grothendieck bounds and coherent-state experiments")]
struct Cli {
    /// JSON file mirroring CliConfig (seed, starts, tolerances, output_path).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// RNG seed; overrides the config file.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Optimizer starts; overrides the config file.
    #[arg(long, global = true)]
    starts: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Row norms, N(M), bound chain and S_d membership.
    Norms {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Bracket g(θ), decide G_d′ exactly and G_d when certifiable.
    Classify {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// g_lower, g_upper and g′ only.
    Gbound {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Rouché–Capelli test on the phase system.
    Phases {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Build the d(d−1) coherent states and run property checks.
    States {
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum, default_value_t = Check::All)]
        check: Check,
    },
    /// Write the overlap projector as matrix JSON.
    Projector {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// H(6)/H(12), g(Π₆), bounded-family and sampling experiments.
    Experiment {
        #[command(subcommand)]
        which: ExperimentCommand,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Check {
    All,
    Resolution,
    Isotropy,
    Permutation,
}

#[derive(Subcommand, Debug)]
enum ExperimentCommand {
    /// θ = λΠ on H(6).
    H6 {
        #[arg(long)]
        lambda: f64,
    },
    /// θ = λΠ on H(12).
    H12 {
        #[arg(long)]
        lambda: f64,
    },
    /// Both routes to g(Π₆).
    G6,
    /// |Tr(ρU)| ≤ 1 sampling demo.
    Bounded {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Random-sampling study of Q in (1, k_G].
    Rarity {
        #[arg(long, value_enum)]
        ensemble: Ensemble,
        #[arg(long)]
        samples: usize,
        /// JSONL file; one record per sample is appended.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        dim: usize,
        #[arg(long, value_enum, default_value_t = Scaling::Certified)]
        scaling: Scaling,
    },
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn dispatch<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match run(cli) {
        Ok(doc) => {
            let text = serde_json::to_string_pretty(&doc).expect("JSON values always serialize");
            let _ = writeln!(out, "{text}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_numerical() {
                3
            } else {
                2
            }
        }
    }
}

fn settings(cli: &Cli) -> Result<CliConfig> {
    let mut cfg = match &cli.config {
        Some(p) => CliConfig::load(p)?,
        None => CliConfig::default(),
    };
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if let Some(n) = cli.starts {
        cfg.starts = n;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn value(v: impl Serialize) -> Result<Value> {
    Ok(serde_json::to_value(v)?)
}

fn with(mut doc: Value, extra: &[(&str, Value)]) -> Value {
    if let Value::Object(map) = &mut doc {
        for (k, v) in extra {
            map.insert((*k).to_string(), v.clone());
        }
    }
    doc
}

fn run(cli: Cli) -> Result<Value> {
    let cfg = settings(&cli)?;
    let opt = cfg.optimizer();
    let seeds = |doc: Value| with(doc, &[("seed", json!(cfg.seed)), ("starts", json!(cfg.starts))]);

    match cli.command {
        Command::Norms { matrix } => value(norm_report(&parse_matrix_file(&matrix)?)?),
        Command::Classify { matrix } => {
            let m = parse_matrix_file(&matrix)?;
            let c = classify(&m, &opt)?;
            let guidance = json!({
                "lambda_for_G_prime": 1.0 / c.g_prime,
                "lambda_certified_in_G": 1.0 / c.g_upper,
                "lambda_estimated_G_boundary": 1.0 / c.g_lower,
            });
            Ok(with(value(&c)?, &[("scaling_guidance", guidance)]))
        }
        Command::Gbound { matrix } => {
            let m = parse_matrix_file(&matrix)?;
            let run = g_lower(&m, &opt)?;
            Ok(seeds(json!({
                "g_lower": run.best_value,
                "g_upper": g_upper(&m)?,
                "g_prime": g_prime(&m)?,
                "l1_norm": norm_entrywise_l1(&m),
                "converged_fraction": run.converged_fraction,
                "best_start": run.best_start,
                "witness": value(&run.best_witness)?,
            })))
        }
        Command::Phases { matrix } => {
            let m = parse_matrix_file(&matrix)?;
            let r = phase_system_solvable(&m)?;
            Ok(with(value(&r)?, &[("l1_norm", json!(norm_entrywise_l1(&m)))]))
        }
        Command::States { dim, check } => states(dim, check),
        Command::Projector { dim, out } => {
            let fam = build_family(dim)?;
            let p = build_projector(&fam)?;
            std::fs::write(&out, serde_json::to_string(&p.matrix)?)?;
            Ok(json!({
                "dim": dim,
                "dim_big": p.dim_big,
                "rank": p.rank,
                "idempotency_defect": p.idempotency_defect(),
                "spectrum": value(p.spectrum()?)?,
                "out": out.display().to_string(),
                "conjectural_extension": fam.is_conjectural_extension(),
            }))
        }
        Command::Experiment { which } => match which {
            ExperimentCommand::H6 { lambda } => value(run_h6(lambda, &opt)?),
            ExperimentCommand::H12 { lambda } => value(run_h12(lambda, &opt)?),
            ExperimentCommand::G6 => value(certify_g_pi6(cfg.starts, cfg.seed)?),
            ExperimentCommand::Bounded { dim, samples } => value(run_bounded_demo(dim, samples, cfg.seed)?),
            ExperimentCommand::Rarity {
                ensemble,
                samples,
                out,
                dim,
                scaling,
            } => {
                let rc = RarityConfig {
                    ensemble,
                    samples,
                    seed: cfg.seed,
                    starts: cfg.starts,
                    dim,
                    scaling,
                    out: out.or_else(|| cfg.output_path.clone().map(PathBuf::from)),
                };
                value(run_rarity(&rc)?)
            }
        },
    }
}

fn states(dim: usize, check: Check) -> Result<Value> {
    let fam = build_family(dim)?;
    let mut checks = serde_json::Map::new();
    if matches!(check, Check::All | Check::Resolution) {
        let r = resolution_check(&fam);
        checks.insert("resolution_residual".into(), json!(r));
        checks.insert("resolution_ok".into(), json!(r <= 1e-12));
    }
    if matches!(check, Check::All | Check::Isotropy) {
        checks.insert("isotropy".into(), value(isotropy_check(&fam))?);
    }
    match check {
        Check::Permutation => {
            checks.insert("permutation".into(), value(permutation_invariance_check(&fam)?)?);
        }
        Check::All if dim <= MAX_PERMUTATION_DIM => {
            let r = permutation_invariance_check(&fam)?;
            checks.insert(
                "permutation".into(),
                json!({ "invariant": r.invariant, "permutations_checked": r.permutations_checked }),
            );
        }
        Check::All => {
            checks.insert(
                "permutation".into(),
                json!({ "skipped": format!("enumeration limited to d <= {MAX_PERMUTATION_DIM}") }),
            );
        }
        _ => {}
    }
    Ok(json!({
        "dim": dim,
        "count": fam.len(),
        "layout": value(fam.layout)?,
        "conjectural_extension": fam.is_conjectural_extension(),
        "states": value(&fam.states)?,
        "recipe": value(&fam.recipe)?,
        "checks": Value::Object(checks),
    }))
}
