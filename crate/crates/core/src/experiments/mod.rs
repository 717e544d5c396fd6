//! Reproducible experiments built on the library.
//!
//! Every experiment returns an [`ExperimentRecord`] (or a richer report) that
//! embeds the parameters needed to rerun it, including the seed.

mod bounded;
mod g6;
mod projector_series;
mod rarity;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::forms::Region;

pub use bounded::{displacement_operator, run_bounded_demo};
pub use g6::{certify_g_pi6, g6_abc, g6_objective, G6Certificate, WitnessCheck};
pub use projector_series::{run_h12, run_h6, run_projector_series, von_neumann_entropy};
pub use rarity::{run_rarity, Ensemble, RarityConfig, RarityStats, Scaling};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub name: String,
    pub parameters: BTreeMap<String, Value>,
    pub q_value: f64,
    pub region: Region,
    pub diagnostics: BTreeMap<String, Value>,
}

impl ExperimentRecord {
    pub(crate) fn new(name: &str, q_value: f64, region: Region) -> Self {
        Self {
            name: name.to_string(),
            parameters: BTreeMap::new(),
            q_value,
            region,
            diagnostics: BTreeMap::new(),
        }
    }

    pub(crate) fn param(mut self, key: &str, v: impl Serialize) -> Self {
        self.parameters.insert(key.to_string(), to_value(v));
        self
    }

    pub(crate) fn diag(mut self, key: &str, v: impl Serialize) -> Self {
        self.diagnostics.insert(key.to_string(), to_value(v));
        self
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).unwrap_or(Value::Null)
}
