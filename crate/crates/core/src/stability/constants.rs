//! Resolution of the criterion constants from a problem, with provenance.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problem::ProblemSpec;
use crate::spectral::{
    estimate_exponential_bounds, estimate_family_bounds, estimate_smoothing_constant,
    frac_power_norm, ExponentialBounds, FamilyBounds,
};

use super::criteria::burkholder_constant;

/// Every constant entering the existence and stability criteria.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriterionConstants {
    pub p: f64,
    pub alpha: f64,
    pub t_eval: f64,
    pub a_hat: [f64; 5],
    pub bounds: FamilyBounds,
    pub c_p: f64,
    pub k_p: f64,
    /// Read `(2 a2 (p-1)/(p-2))^{1-p/2}` as 1 when `p = 2`.
    pub p2_limit_convention: bool,
}

impl CriterionConstants {
    pub fn validate(&self) -> Result<()> {
        if !(self.p >= 2.0) {
            return Err(Error::Domain(format!("p must be >= 2, got {}", self.p)));
        }
        if !(self.t_eval > 0.0) {
            return Err(Error::Domain(format!("evaluation time must be > 0, got {}", self.t_eval)));
        }
        if !(self.alpha > 0.0) {
            return Err(Error::Domain(format!("alpha must be > 0, got {}", self.alpha)));
        }
        if self.a_hat.iter().any(|a| !(*a >= 0.0)) || !(self.c_p >= 0.0) || !(self.k_p >= 0.0) {
            return Err(Error::Domain("a_hat, C_p and k(p) must be nonnegative".into()));
        }
        self.bounds.validate()
    }
}

/// Where one constant came from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantSource {
    pub name: String,
    pub value: f64,
    /// `override`, `estimated` or `default`.
    pub source: String,
    /// Grid estimate, also given when the value was overridden.
    pub estimate: Option<f64>,
}

/// Constants plus their provenance and the fitted exponential bounds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResolvedConstants {
    pub constants: CriterionConstants,
    pub sources: Vec<ConstantSource>,
    pub exponential_bounds: ExponentialBounds,
    pub exponential_bounds_note: String,
    pub conventions: Vec<String>,
}

fn pick(sources: &mut Vec<ConstantSource>, name: &str, over: Option<f64>, estimate: f64) -> f64 {
    let (value, source) = match over {
        Some(v) => (v, "override"),
        None => (estimate, "estimated"),
    };
    sources.push(ConstantSource { name: name.into(), value, source: source.into(), estimate: Some(estimate) });
    value
}

/// Resolves every constant: configured values win, the rest are estimated
/// on a grid of `criterion.bound_grid_density` intervals over the horizon.
pub fn resolve_constants(spec: &ProblemSpec) -> Result<ResolvedConstants> {
    spec.validate()?;
    let cfg = &spec.criterion;
    let gen = &spec.generator;
    let density = cfg.bound_grid_density;
    let mut sources = Vec::new();

    let growth = estimate_family_bounds(gen, spec.alpha, spec.horizon, density)?;
    let m_c = pick(&mut sources, "M_c", cfg.m_c, growth.m_c);
    let m = pick(&mut sources, "M", cfg.m, growth.m);
    let c_mu_est =
        estimate_smoothing_constant(gen, spec.alpha, cfg.gamma, cfg.mu_smoothing, spec.horizon, density)?;
    let c_mu = pick(&mut sources, "c_mu", cfg.c_mu, c_mu_est);
    let norm = pick(&mut sources, "|A^-gamma|", cfg.inv_power_norm, frac_power_norm(gen, cfg.gamma)?);
    let exp = estimate_exponential_bounds(gen, spec.alpha, spec.horizon, density)?;
    let d1 = pick(&mut sources, "D1", cfg.d1, exp.cosine.d);
    let a1 = pick(&mut sources, "a1", cfg.a1, exp.cosine.a);
    let d2 = pick(&mut sources, "D2", cfg.d2, exp.sine.d);
    let a2 = pick(&mut sources, "a2", cfg.a2, exp.sine.a);

    let burk = burkholder_constant(spec.p)?;
    let c_p = match cfg.c_p {
        Some(v) => {
            sources.push(ConstantSource { name: "C_p".into(), value: v, source: "override".into(), estimate: Some(burk) });
            v
        }
        None => {
            sources.push(ConstantSource { name: "C_p".into(), value: burk, source: "default".into(), estimate: None });
            burk
        }
    };
    sources.push(ConstantSource { name: "k(p)".into(), value: cfg.k_p, source: "override".into(), estimate: None });

    let mut conventions = vec![
        format!("k(p) = {} (configured; no closed form exists)", cfg.k_p),
        match cfg.inv_power_norm {
            Some(v) => format!("|A^-gamma| overridden to {v}"),
            None => format!("|A^-gamma| = sup_n |lambda_n|^(-{}) = {norm}", cfg.gamma),
        },
    ];
    if spec.p == 2.0 && cfg.p2_limit_convention {
        conventions.push("p = 2 limit convention: (2 a2 (p-1)/(p-2))^(1-p/2) read as 1".into());
    }

    let constants = CriterionConstants {
        p: spec.p,
        alpha: spec.alpha,
        t_eval: spec.t_eval(),
        a_hat: spec.coefficients.a_hat,
        bounds: FamilyBounds {
            m_c,
            m,
            c_mu,
            mu_smoothing: cfg.mu_smoothing,
            gamma: cfg.gamma,
            inv_power_norm: norm,
            d1,
            a1,
            d2,
            a2,
        },
        c_p,
        k_p: cfg.k_p,
        p2_limit_convention: cfg.p2_limit_convention,
    };
    constants.validate()?;
    Ok(ResolvedConstants {
        constants,
        sources,
        exponential_bounds_note: exp.report(),
        exponential_bounds: exp,
        conventions,
    })
}
