use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use super::ComplexMatrix;
use crate::error::{Error, Result};

/// `F_ij = ω^{ij}/√d` with `ω = exp(2πi/d)`.
pub fn fourier_matrix(d: usize) -> ComplexMatrix {
    assert!(d >= 1, "Fourier matrix needs d >= 1");
    let norm = 1.0 / (d as f64).sqrt();
    ComplexMatrix::from_fn(d, d, |i, j| {
        // reduce the exponent first so large d keeps full phase accuracy
        let k = (i * j) % d;
        C64::from_polar(norm, 2.0 * PI * k as f64 / d as f64)
    })
}

/// A validated bijection of `{0, …, ν−1}`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::invalid("empty permutation"));
        }
        let mut seen = vec![false; n];
        for &p in &images {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::invalid(format!("{images:?} is not a bijection of 0..{n}")));
            }
        }
        Ok(Self(images))
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self ∘ inner`, i.e. `i ↦ self(inner(i))`.
    pub fn compose(&self, inner: &Self) -> Self {
        assert_eq!(self.len(), inner.len());
        Self(inner.0.iter().map(|&i| self.0[i]).collect())
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

/// `τ_π(i, j) = δ(π(i), j)`.
pub fn permutation_matrix(pi: &Permutation) -> ComplexMatrix {
    let n = pi.len();
    ComplexMatrix::from_fn(n, n, |i, j| {
        if pi.apply(i) == j {
            C64::new(1.0, 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    })
}
