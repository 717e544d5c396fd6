//! Generalised coherent states with discrete isotropy.
//!
//! The family in `H(d)` has `d(d−1)` members: every column of the
//! `(d−1)`-point Fourier matrix, diluted with one zero at each of the `d`
//! positions. For `d = 3, 4` the layout matches the golden tables exactly;
//! for `d ≥ 5` the same recipe is used and all properties are checked
//! empirically only.

mod checks;
mod family;
mod projector;

pub use checks::{
    expand_state, isotropy_check, overlap_power_sum, permutation_invariance_check, resolution_check,
    ExpansionCoefficients, IsotropyReport, PermutationImage, PermutationReport, ISOTROPY_TOL,
    MAX_PERMUTATION_DIM, PHASE_MATCH_TOL,
};
pub use family::{build_family, build_family_with_layout, FamilyLayout, Recipe, StateFamily};
pub use projector::{build_projector, OverlapProjector, SPECTRUM_CLUSTER_TOL};
