//! Row-norm normalisation `N(M) = max_i ‖row_i(M)‖` and the set `S_d`.
//!
//! `N` is basis dependent: `N(UMU†) ≠ N(M)` in general, so a report is always
//! about the matrix as given in its current basis.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{is_normal, norm_frobenius, spectral_radius_normal, ComplexMatrix};

/// Slack for `S_d` membership so boundary matrices such as `√2·Π₆` pass.
pub const S_MEMBERSHIP_TOL: f64 = 1e-12;
/// Tolerance used when deciding normality inside a report.
pub const NORMALITY_TOL: f64 = 1e-10;

pub fn row_norms(m: &ComplexMatrix) -> Vec<f64> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .collect()
}

/// `N(M)`
pub fn normalization_factor(m: &ComplexMatrix) -> f64 {
    row_norms(m).into_iter().fold(0.0, f64::max)
}

pub fn in_s_d(m: &ComplexMatrix) -> bool {
    normalization_factor(m) <= 1.0 + S_MEMBERSHIP_TOL
}

/// `M / N(M)`, whose largest row has unit norm.
pub fn to_unit_s(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = normalization_factor(m);
    if n == 0.0 {
        return Err(Error::invalid("zero matrix has no S_d normalisation"));
    }
    Ok(m.scale_real(1.0 / n))
}

/// Which side of `‖M‖₂/√d ≤ N(M) ≤ upper` is attained by construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tightness {
    /// All row norms equal.
    Lower,
    /// At most one nonzero row (general) or diagonal (normal).
    Upper,
    Both,
    Neither,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NormReport {
    pub row_norms: Vec<f64>,
    pub n_factor: f64,
    pub frobenius: f64,
    pub lower_bound: f64,
    /// `‖M‖₂` in general, the spectral radius when `M` is normal.
    pub upper_bound: f64,
    pub is_normal: bool,
    #[serde(rename = "in_S_d")]
    pub in_s_d: bool,
    pub tightness: Tightness,
}

pub fn norm_report(m: &ComplexMatrix) -> Result<NormReport> {
    let d = m.require_square()?;
    let rows = row_norms(m);
    let n_factor = rows.iter().copied().fold(0.0, f64::max);
    let frobenius = norm_frobenius(m);
    let lower_bound = frobenius / (d as f64).sqrt();
    let normal = is_normal(m, NORMALITY_TOL)?;
    let upper_bound = if normal {
        spectral_radius_normal(m)?
    } else {
        frobenius
    };

    let scale = n_factor.max(f64::MIN_POSITIVE);
    let rows_equal = rows.iter().all(|r| (r - n_factor).abs() <= 1e-12 * scale);
    let upper_tight = if normal {
        is_diagonal(m)
    } else {
        rows.iter().filter(|&&r| r > 1e-12 * scale).count() <= 1
    };
    let tightness = match (rows_equal, upper_tight) {
        (true, true) => Tightness::Both,
        (true, false) => Tightness::Lower,
        (false, true) => Tightness::Upper,
        (false, false) => Tightness::Neither,
    };

    Ok(NormReport {
        row_norms: rows,
        n_factor,
        frobenius,
        lower_bound,
        upper_bound,
        is_normal: normal,
        in_s_d: n_factor <= 1.0 + S_MEMBERSHIP_TOL,
        tightness,
    })
}

fn is_diagonal(m: &ComplexMatrix) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| i == j || m[(i, j)].norm() == 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coherent::{build_family, build_projector};
    use crate::linalg::{fourier_matrix, C64};

    fn pi6() -> ComplexMatrix {
        build_projector(&build_family(3).unwrap()).unwrap().matrix
    }

    #[test]
    fn row_norm_examples() {
        assert_eq!(row_norms(&ComplexMatrix::identity(3)), vec![1.0; 3]);
        let m = ComplexMatrix::from_real_rows(&[vec![1.0, 2.0], vec![0.0, 0.0]]).unwrap();
        let r = row_norms(&m);
        assert!((r[0] - 5f64.sqrt()).abs() < 1e-15);
        assert_eq!(r[1], 0.0);
        for r in row_norms(&pi6()) {
            assert!((r - 0.5f64.sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn factor_examples() {
        assert!((normalization_factor(&fourier_matrix(4)) - 1.0).abs() < 1e-12);
        assert_eq!(normalization_factor(&ComplexMatrix::zeros(3, 3)), 0.0);
        let pi12 = build_projector(&build_family(4).unwrap()).unwrap().matrix;
        assert!((normalization_factor(&pi12) - 1.0 / 3f64.sqrt()).abs() < 1e-12);
        let z = C64::new(0.6, -0.8) * 2.5;
        let m = fourier_matrix(3);
        assert!((normalization_factor(&m.scale(z)) - z.norm() * normalization_factor(&m)).abs() < 1e-12);
    }

    #[test]
    fn unit_s_examples() {
        let p = pi6();
        let v = to_unit_s(&p).unwrap();
        assert!(v.max_abs_diff(&p.scale_real(2f64.sqrt())) < 1e-12);
        assert!((normalization_factor(&v) - 1.0).abs() < 1e-12);
        assert!(in_s_d(&v));

        let f = fourier_matrix(3);
        assert!(to_unit_s(&f).unwrap().max_abs_diff(&f) < 1e-12);

        let m = ComplexMatrix::from_real_rows(&[vec![2.0, 0.0], vec![0.0, 0.0]]).unwrap();
        let e = ComplexMatrix::from_real_rows(&[vec![1.0, 0.0], vec![0.0, 0.0]]).unwrap();
        assert_eq!(to_unit_s(&m).unwrap(), e);
        assert!(to_unit_s(&ComplexMatrix::zeros(2, 2)).is_err());
    }

    #[test]
    fn report_examples() {
        let rho = ComplexMatrix::diagonal(&[C64::new(0.5, 0.0), C64::new(0.3, 0.0), C64::new(0.2, 0.0)]);
        let r = norm_report(&rho).unwrap();
        assert!(r.is_normal);
        assert!((r.n_factor - 0.5).abs() < 1e-15);
        assert!((r.upper_bound - 0.5).abs() < 1e-12);
        assert_eq!(r.tightness, Tightness::Upper);

        let r = norm_report(&pi6()).unwrap();
        assert!((r.n_factor - 0.5f64.sqrt()).abs() < 1e-12);
        assert!((r.lower_bound - 3f64.sqrt() / 6f64.sqrt()).abs() < 1e-12);
        assert!((r.frobenius - 3f64.sqrt()).abs() < 1e-12);
        assert_eq!(r.tightness, Tightness::Lower);

        let h = 0.5f64.sqrt();
        let single = ComplexMatrix::from_real_rows(&[vec![h, h], vec![0.0, 0.0]]).unwrap();
        let r = norm_report(&single).unwrap();
        assert!(!r.is_normal);
        assert!((r.n_factor - 1.0).abs() < 1e-15);
        assert!((r.upper_bound - 1.0).abs() < 1e-15);
        assert_eq!(r.tightness, Tightness::Upper);
    }
}
