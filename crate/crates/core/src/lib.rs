//! Matrix-form Grothendieck machinery for a single finite-dimensional quantum
//! system.
//!
//! The crate is organised bottom-up:
//!
//! - [`linalg`]: dense complex matrices, norms, Hermitian eigensolver,
//!   largest singular value, Fourier and permutation constructors.
//! - [`norms`]: the row-norm normalisation factor `N(M)` and the set `S_d`.
//! - [`forms`]: the classical form `C`, the quantum form `Q`, bounds on
//!   `g(θ)`/`g′(θ)`, membership in `G_d`/`G_d′`, and the phase-system test.
//! - [`coherent`]: the `d(d−1)` zero-diluted Fourier states and their overlap
//!   projector.
//! - [`experiments`]: the H(6)/H(12) constructions, the bounded-family demo and
//!   the random-sampling rarity study.
//! - [`cli`]: the `groth` command-line front end.
//!
//! Runnable walkthroughs live in `examples/`, one per capability.

pub mod cli;
pub mod coherent;
pub mod error;
pub mod experiments;
pub mod forms;
pub mod linalg;
pub mod norms;
pub mod sampling;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, C64};
