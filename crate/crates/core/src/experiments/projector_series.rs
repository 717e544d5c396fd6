use super::ExperimentRecord;
use crate::coherent::{build_family, build_projector};
use crate::error::{Error, Result};
use crate::forms::{
    eval_q_trace, g_lower, g_prime, g_upper, kg_region_check, Membership, OptimizerConfig, CERTIFY_NO_MARGIN,
    G_PRIME_TOL,
};
use crate::linalg::{hermitian_eig, ComplexMatrix};
use crate::norms::{in_s_d, to_unit_s};

/// `−Tr ρ ln ρ`, dropping eigenvalues below `1e−12`.
pub fn von_neumann_entropy(rho: &ComplexMatrix) -> Result<f64> {
    let e = hermitian_eig(rho)?;
    Ok(e.eigenvalues.iter().filter(|&&x| x > 1e-12).map(|&x| -x * x.ln()).sum())
}

/// `θ = λΠ`, `V = W = Π/N(Π)` for the overlap projector of `H(d)`.
///
/// `Q = |Tr(θVW†)|` is evaluated in closed form; the optimizer only supplies
/// the bracket on `g(Π)` used to place `θ` relative to `G_D` and `G_D′`.
/// `lambda_max` is the admissible upper end of `λ`; `None` means `1/g_lower(Π)`.
pub fn run_projector_series(
    d: usize,
    lambda: f64,
    lambda_max: Option<f64>,
    cfg: &OptimizerConfig,
) -> Result<ExperimentRecord> {
    let family = build_family(d)?;
    let pi = build_projector(&family)?.matrix;
    let big = pi.rows();
    let bracket = g_lower(&pi, cfg)?;
    let gl = bracket.best_value;
    let gu = g_upper(&pi)?;
    let gp = g_prime(&pi)?;

    let limit = lambda_max.unwrap_or(1.0 / gl);
    if lambda.is_nan() || lambda <= 0.0 || lambda > limit * (1.0 + 1e-12) {
        return Err(Error::invalid(format!(
            "lambda must lie in (0, {limit}]; certified bracket g(Π) ∈ [{gl}, {gu}]"
        )));
    }

    let v = to_unit_s(&pi)?;
    let theta = pi.scale_real(lambda);
    let q = eval_q_trace(&theta, &v, &v)?;
    let region = kg_region_check(q)?;

    let in_g_prime = lambda * gp <= 1.0 + G_PRIME_TOL;
    let in_g = if lambda * gu <= 1.0 + G_PRIME_TOL {
        Membership::CertifiedYes
    } else if lambda * gl > 1.0 + CERTIFY_NO_MARGIN {
        Membership::CertifiedNo
    } else {
        Membership::Unknown
    };

    // ρ = VW†/D = Π/Tr Π
    let rho = pi.scale_real(1.0 / pi.trace().re);
    let purity = (&rho * &rho).trace().re;
    let entropy = von_neumann_entropy(&rho)?;

    let name = format!("h{big}");
    Ok(ExperimentRecord::new(&name, q, region)
        .param("lambda", lambda)
        .param("d", big)
        .param("seed", cfg.seed)
        .param("starts", cfg.starts)
        .diag("q_closed_form", big as f64 * lambda)
        .diag("normalization_factor_inverse", 1.0 / crate::norms::normalization_factor(&pi))
        .diag("v_in_S_d", in_s_d(&v))
        .diag("g_lower", gl)
        .diag("g_upper", gu)
        .diag("g_prime", gp)
        .diag("theta_in_G_prime", in_g_prime)
        .diag("theta_in_G", in_g)
        .diag("epsilon_certified", 1.0 / gu - 1.0 / gp)
        .diag("epsilon_estimated", 1.0 / gl - 1.0 / gp)
        .diag("strict_bound_certified", gl < big as f64 - 1e-3 && gu < big as f64)
        .diag("purity", purity)
        .diag("entropy", entropy)
        .diag("conjectural_extension", family.is_conjectural_extension()))
}

/// H(6): `θ = λΠ`, `V = W = √2Π`, accepted for `0 < λ ≤ 1/5`.
pub fn run_h6(lambda: f64, cfg: &OptimizerConfig) -> Result<ExperimentRecord> {
    run_projector_series(3, lambda, Some(0.2), cfg)
}

/// H(12): `θ = λΠ`, `V = W = √3Π`, accepted for `0 < λ ≤ 1/g_lower(Π)`.
pub fn run_h12(lambda: f64, cfg: &OptimizerConfig) -> Result<ExperimentRecord> {
    run_projector_series(4, lambda, None, cfg)
}
