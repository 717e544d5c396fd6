use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{vec_norm, ComplexMatrix};

/// Slack on every tuple constraint.
pub const CONSTRAINT_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstraintKind {
    /// `|s_i| ≤ 1` for every `i`.
    UnitDisc,
    /// `Σ|s_i|² ≤ d`.
    BallD,
}

/// Scalars `s_i` (or `t_j`) for the classical form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolydiscTuple {
    pub values: Vec<C64>,
    pub constraint_kind: ConstraintKind,
}

impl PolydiscTuple {
    pub fn new(values: Vec<C64>, constraint_kind: ConstraintKind) -> Result<Self> {
        let t = Self {
            values,
            constraint_kind,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn unit_disc(values: Vec<C64>) -> Result<Self> {
        Self::new(values, ConstraintKind::UnitDisc)
    }

    /// `e^{iφ_j}` on the torus.
    pub fn from_phases(phases: &[f64]) -> Self {
        Self {
            values: phases.iter().map(|&p| C64::from_polar(1.0, p)).collect(),
            constraint_kind: ConstraintKind::UnitDisc,
        }
    }

    pub fn ones(d: usize) -> Self {
        Self::from_phases(&vec![0.0; d])
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(k) = self.values.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::invalid(format!("tuple entry {k} is not finite")));
        }
        match self.constraint_kind {
            ConstraintKind::UnitDisc => {
                if let Some((k, z)) = self.values.iter().enumerate().find(|(_, z)| z.norm() > 1.0 + CONSTRAINT_TOL) {
                    return Err(Error::invalid(format!("|s_{k}| = {} exceeds 1", z.norm())));
                }
            }
            ConstraintKind::BallD => {
                let d = self.values.len() as f64;
                let s: f64 = self.values.iter().map(|z| z.norm_sqr()).sum();
                if s > d * (1.0 + CONSTRAINT_TOL) {
                    return Err(Error::invalid(format!("Σ|s_i|² = {s} exceeds d = {d}")));
                }
            }
        }
        Ok(())
    }
}

/// Vectors `λ_i|u_i⟩` in the unit ball of `C^d`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VectorTuple {
    pub vectors: Vec<Vec<C64>>,
    pub scales: Vec<f64>,
}

impl VectorTuple {
    pub fn new(vectors: Vec<Vec<C64>>, scales: Vec<f64>) -> Result<Self> {
        let t = Self { vectors, scales };
        t.validate()?;
        Ok(t)
    }

    /// Unit vectors with all scales 1. Zero vectors are kept as zero.
    pub fn unit(vectors: Vec<Vec<C64>>) -> Self {
        let n = vectors.len();
        Self {
            vectors,
            scales: vec![1.0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        if self.vectors.len() != self.scales.len() {
            return Err(Error::Dimension(format!(
                "{} vectors but {} scales",
                self.vectors.len(),
                self.scales.len()
            )));
        }
        for (k, (v, &s)) in self.vectors.iter().zip(&self.scales).enumerate() {
            if !(0.0..=1.0).contains(&s) {
                return Err(Error::invalid(format!("scale {k} = {s} outside [0, 1]")));
            }
            let n = s * vec_norm(v);
            if !n.is_finite() || n > 1.0 + CONSTRAINT_TOL {
                return Err(Error::invalid(format!("vector {k} has norm {n} > 1")));
            }
        }
        Ok(())
    }

    pub fn scaled(&self, k: usize) -> Vec<C64> {
        self.vectors[k].iter().map(|z| z * self.scales[k]).collect()
    }

    /// Matrix whose rows are the scaled vectors; it lies in `S_d`.
    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        let rows: Vec<Vec<C64>> = (0..self.len()).map(|k| self.scaled(k)).collect();
        ComplexMatrix::from_rows(&rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constraint_checks() {
        assert!(PolydiscTuple::unit_disc(vec![C64::new(0.6, 0.8)]).is_ok());
        assert!(PolydiscTuple::unit_disc(vec![C64::new(1.0, 0.1)]).is_err());
        let b = vec![C64::new(2f64.sqrt(), 0.0), C64::new(0.0, 0.0)];
        assert!(PolydiscTuple::new(b.clone(), ConstraintKind::BallD).is_ok());
        assert!(PolydiscTuple::unit_disc(b).is_err());
        assert!(PolydiscTuple::unit_disc(vec![C64::new(f64::NAN, 0.0)]).is_err());
    }

    #[test]
    fn vector_tuple_checks() {
        let v = vec![vec![C64::new(0.6, 0.0), C64::new(0.0, 0.8)]];
        assert!(VectorTuple::new(v.clone(), vec![0.5]).is_ok());
        assert!(VectorTuple::new(v.clone(), vec![1.5]).is_err());
        assert!(VectorTuple::new(vec![vec![C64::new(1.1, 0.0)]], vec![1.0]).is_err());
        assert!(VectorTuple::new(v, vec![]).is_err());
    }
}
