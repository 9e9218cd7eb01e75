//! Monte Carlo check of p-th moment exponential stability against the
//! theoretical envelope.

use serde::{Deserialize, Serialize};

use super::constants::{resolve_constants, ResolvedConstants};
use super::criteria::{stability_criterion, CriterionReport};
use super::lemma::{decay_root, n_epsilon, InequalityParams};
use super::moments::{estimate_moment, fit_decay, DecayFit, MomentCurve};
use crate::ensemble::{run_ensemble, trajectories, EnsembleConfig};
use crate::error::Result;
use crate::grid::norm;
use crate::problem::ProblemSpec;
use crate::solver::MildSolver;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloConfig {
    #[serde(flatten)]
    pub ensemble: EnsembleConfig,
    /// Fit window `[t0, t1]`; the whole curve when absent.
    #[serde(default)]
    pub fit_window: Option<(f64, f64)>,
}

/// Constants of the decay estimate `E|x(t)|^p <= N e^{-mu t}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    /// Neutral part of the criterion.
    pub a_hat_1: f64,
    /// Integral part of the criterion.
    pub a_hat_2: f64,
    /// `max(a_hat_1, a_hat_2)`.
    pub oplus_hat: f64,
    pub params: InequalityParams,
    pub mu: f64,
    pub n_epsilon: f64,
}

impl Envelope {
    pub fn at(&self, t: f64) -> f64 {
        self.n_epsilon * (-self.mu * t).exp()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub constants: ResolvedConstants,
    pub criterion: Option<CriterionReport>,
    pub criterion_error: Option<String>,
    /// True when the criterion does not pass, so the verdicts below carry no
    /// theoretical guarantee.
    pub advisory: bool,
    pub exponential_bounds_note: String,
    pub envelope: Option<Envelope>,
    pub envelope_note: Option<String>,
    pub curve: MomentCurve,
    pub fit: Option<DecayFit>,
    pub fit_error: Option<String>,
    /// `None` when no envelope could be formed.
    pub envelope_respected: Option<bool>,
    /// First node whose lower confidence bound lies above the envelope.
    pub first_violation: Option<f64>,
    pub decay_significant: bool,
}

/// Builds the integral inequality for `Psi(t) = E|x(t)|^p`.
///
/// Splitting the mild form into its initial-data part and the rest costs a
/// factor `2^{p-1}`; the two initial terms cost another. Hence
/// `xi_1 = 4^{p-1} D1^p |phi(0) + g(0, phi)|^p` (at least `sup |phi|^p`),
/// `xi_2 = 4^{p-1} D2^p |eta|^p`, `xi_3 = 2^{p-1} A1`, `xi_4 = 2^{p-1} A2`
/// with `eta_1 = min(p a1, a2)` and `eta_2 = p a2`.
fn envelope(spec: &ProblemSpec, resolved: &ResolvedConstants, crit: &CriterionReport) -> std::result::Result<Envelope, String> {
    let c = &resolved.constants;
    let b = &c.bounds;
    let p = c.p;
    let v: Vec<f64> = crit.items.iter().map(|i| i.value).collect();
    let a_hat_1 = v[0] + v[1];
    let a_hat_2 = v[2] + v[3] + v[4];
    let oplus_hat = a_hat_1.max(a_hat_2);
    let eta1 = (p * b.a1).min(b.a2);
    let eta2 = p * b.a2;
    if !(eta1 > 0.0) {
        return Err(format!("no exponential decay rate available (a1 = {}, a2 = {})", b.a1, b.a2));
    }
    let grid = spec.grid(spec.horizon).map_err(|e| e.to_string())?;
    let start = MildSolver::new(spec, grid).map_err(|e| e.to_string())?.initial().state(0).to_vec();
    let mut phi_sup = 0.0f64;
    let samples = 64;
    for k in 0..=samples {
        let theta = -spec.delay * k as f64 / samples as f64;
        phi_sup = phi_sup.max(norm(&spec.phi.eval(theta)).powf(p));
    }
    let split = 2f64.powf(p - 1.0);
    let xi1 = (split * split * b.d1.powf(p) * norm(&start).powf(p)).max(phi_sup);
    let xi2 = split * split * b.d2.powf(p) * norm(&spec.eta).powf(p);
    let params = InequalityParams {
        xi: [xi1, xi2, split * a_hat_1, split * a_hat_2, 0.0, 0.0, 0.0],
        eta1,
        eta2,
        theta: spec.delay,
    };
    if a_hat_2 == 0.0 {
        // Without the integral term the inequality reads Psi <= (xi_1 + xi_2) e^{-eta_1 t}
        // once the neutral share is absorbed.
        let xi3 = params.xi[2];
        if xi3 >= 1.0 {
            return Err(format!("neutral share {xi3} is not below one"));
        }
        let n = (xi1 + xi2) / (1.0 - xi3);
        return Ok(Envelope { a_hat_1, a_hat_2, oplus_hat, params, mu: eta1, n_epsilon: n });
    }
    let mu = decay_root(&params).map_err(|e| e.to_string())?;
    let n = n_epsilon(&params, mu).map_err(|e| e.to_string())?;
    Ok(Envelope { a_hat_1, a_hat_2, oplus_hat, params, mu, n_epsilon: n })
}

/// Simulates the ensemble, estimates the moment curve, fits its decay and
/// compares it with the envelope. Findings go in the report; only failures
/// to simulate are errors.
pub fn verify_stability(spec: &ProblemSpec, mc: &MonteCarloConfig) -> Result<StabilityReport> {
    let resolved = resolve_constants(spec)?;
    let published = spec.criterion.published.map(|v| v[1]);
    let (criterion, criterion_error) = match stability_criterion(&resolved.constants) {
        Ok(r) => (Some(r.with_published(published)), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let advisory = !criterion.as_ref().map(|c| c.pass).unwrap_or(false);
    let (envelope, envelope_note) = match &criterion {
        Some(c) if resolved.exponential_bounds.decay_detected() || spec.criterion.a1.is_some() => {
            match envelope(spec, &resolved, c) {
                Ok(e) => (Some(e), None),
                Err(msg) => (None, Some(msg)),
            }
        }
        Some(_) => (None, Some(resolved.exponential_bounds.report())),
        None => (None, criterion_error.clone()),
    };

    let paths = trajectories(run_ensemble(spec, &mc.ensemble)?);
    let curve = estimate_moment(&paths, spec.p)?;
    let (fit, fit_error) = match fit_decay(&curve.times, &curve.mean, mc.fit_window) {
        Ok(f) => (Some(f), None),
        Err(e) => (None, Some(e.to_string())),
    };

    let mut first_violation = None;
    if let Some(env) = &envelope {
        for (t, lo) in curve.times.iter().zip(&curve.ci_low) {
            if *lo > env.at(*t) {
                first_violation = Some(*t);
                break;
            }
        }
    }
    let envelope_respected = envelope.as_ref().map(|_| first_violation.is_none());
    let decay_significant = fit.as_ref().map(|f| f.decay_significant()).unwrap_or(false);
    Ok(StabilityReport {
        exponential_bounds_note: resolved.exponential_bounds_note.clone(),
        constants: resolved,
        criterion,
        criterion_error,
        advisory,
        envelope,
        envelope_note,
        curve,
        fit,
        fit_error,
        envelope_respected,
        first_violation,
        decay_significant,
    })
}
