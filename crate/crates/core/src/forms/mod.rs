//! Classical and quantum bilinear forms and the sets `G_d ⊃ G_d′`.
//!
//! `g′(θ) = d·𝔰_max` is exact. `g(θ)` is only bracketed:
//! `g_lower ≤ g(θ) ≤ g_upper = min(‖θ‖₁, g′(θ))`. The dimension-dependent
//! constant `k(d) ≤ k_G` has no computable definition and is not represented.

mod classify;
mod eval;
mod optimize;
mod phases;
mod tuples;

pub use classify::{classify, GClassification, Membership, NecessaryConditions, CERTIFY_NO_MARGIN, G_PRIME_TOL};
pub use eval::{eval_c, eval_q_trace, eval_q_vectors, g_prime, g_upper, kg_region_check, Region, K_G_UPPER, REGION_TOL};
pub use optimize::{
    alternate, ascend_phases, best_s, g_lower, max_q_lower, max_q_lower_from, reduced_objective, OptimizerConfig,
    OptimizerRun, ScalarWitness, VectorWitness,
};
pub use phases::{
    nonzero_phases, phase_system_solvable, PhaseSystemReport, PhaseVerdict, MAX_SHIFT_EQUATIONS, RANK_TOL,
};
pub use tuples::{ConstraintKind, PolydiscTuple, VectorTuple, CONSTRAINT_TOL};
