use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{fourier_matrix, inner, vec_norm};

/// How the `d(d−1)` diluted Fourier columns are ordered and placed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyLayout {
    /// Outer loop over zero positions `p = d−1, 0, 1, …, d−2`, inner loop over
    /// Fourier columns; the column fills positions `p+1, p+2, …` cyclically.
    /// This is the H(4) table layout and the default for every `d ≠ 3`.
    ZeroMajorCyclic,
    /// Outer loop over Fourier columns, inner loop over zero positions
    /// `p = d−1, …, 0`; the column fills the remaining positions in ascending
    /// order. This is the H(3) layout.
    ColumnMajorAscending,
}

impl FamilyLayout {
    pub fn default_for(d: usize) -> Self {
        if d == 3 {
            FamilyLayout::ColumnMajorAscending
        } else {
            FamilyLayout::ZeroMajorCyclic
        }
    }
}

/// How state `i` was built.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Recipe {
    pub zero_position: usize,
    pub fourier_column: usize,
}

/// `d(d−1)` unit vectors in `H(d)` resolving the identity with weight `1/(d−1)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StateFamily {
    pub dim: usize,
    pub layout: FamilyLayout,
    pub states: Vec<Vec<C64>>,
    pub recipe: Vec<Recipe>,
}

impl StateFamily {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// `1/(d−1)`, the resolution weight.
    pub fn weight(&self) -> f64 {
        1.0 / (self.dim - 1) as f64
    }

    /// `⟨a_i|a_j⟩`
    pub fn overlap(&self, i: usize, j: usize) -> C64 {
        inner(&self.states[i], &self.states[j])
    }

    /// True for `d ≥ 5`, where the constructions are checked only empirically.
    pub fn is_conjectural_extension(&self) -> bool {
        self.dim >= 5
    }
}

pub fn build_family(d: usize) -> Result<StateFamily> {
    build_family_with_layout(d, FamilyLayout::default_for(d))
}

pub fn build_family_with_layout(d: usize, layout: FamilyLayout) -> Result<StateFamily> {
    if d < 2 {
        return Err(Error::invalid(format!("coherent family needs d >= 2, got {d}")));
    }
    let f = fourier_matrix(d - 1);
    let mut states = Vec::with_capacity(d * (d - 1));
    let mut recipe = Vec::with_capacity(d * (d - 1));

    let mut push = |p: usize, k: usize, positions: Vec<usize>| {
        let mut v = vec![C64::new(0.0, 0.0); d];
        for (m, &q) in positions.iter().enumerate() {
            v[q] = f[(m, k)];
        }
        debug_assert!((vec_norm(&v) - 1.0).abs() < 1e-12);
        states.push(v);
        recipe.push(Recipe {
            zero_position: p,
            fourier_column: k,
        });
    };

    match layout {
        FamilyLayout::ZeroMajorCyclic => {
            for m in 0..d {
                let p = (d - 1 + m) % d;
                for k in 0..d - 1 {
                    let positions = (1..d).map(|off| (p + off) % d).collect();
                    push(p, k, positions);
                }
            }
        }
        FamilyLayout::ColumnMajorAscending => {
            for k in 0..d - 1 {
                for p in (0..d).rev() {
                    let positions = (0..d).filter(|&q| q != p).collect();
                    push(p, k, positions);
                }
            }
        }
    }

    Ok(StateFamily {
        dim: d,
        layout,
        states,
        recipe,
    })
}
