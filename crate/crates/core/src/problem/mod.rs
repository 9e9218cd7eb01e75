//! One instance of the neutral fractional stochastic equation: order,
//! generator, coefficients, contractors, noise and initial data.

mod check;
mod coefficients;
mod history;
mod presets;

use serde::{Deserialize, Serialize};

pub use check::{check_contractor_conditions, check_lipschitz_conditions, ContractorReport, InequalityCheck};
pub use coefficients::{
    Coefficient, CoefficientSet, ContractorMap, ContractorSet, ForcingProfile, JumpCoefficient,
    JumpContractorMeasure,
};
pub use history::{history_lookup, HistorySegment, InitialHistory};
pub use presets::{damped_problem, example_problem, zero_problem};

use crate::error::{Error, Result};
use crate::grid::TimeGrid;
use crate::noise::{JumpSpec, QWienerSpec};
use crate::spectral::SpectralGenerator;

fn default_k_p() -> f64 {
    1.0
}

fn half() -> f64 {
    0.5
}

fn yes() -> bool {
    true
}

fn default_density() -> usize {
    400
}

/// Inputs to the closed-form criteria. `None` means "estimate from the
/// generator"; a value overrides the estimate and is reported as such.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriterionConfig {
    /// Evaluation time; defaults to the horizon.
    #[serde(default)]
    pub t_eval: Option<f64>,
    #[serde(default = "default_k_p")]
    pub k_p: f64,
    /// Defaults to the Burkholder constant of `p`.
    #[serde(default)]
    pub c_p: Option<f64>,
    #[serde(default)]
    pub m: Option<f64>,
    #[serde(default)]
    pub m_c: Option<f64>,
    #[serde(default)]
    pub c_mu: Option<f64>,
    #[serde(default = "half")]
    pub mu_smoothing: f64,
    #[serde(default = "half")]
    pub gamma: f64,
    #[serde(default)]
    pub inv_power_norm: Option<f64>,
    #[serde(default)]
    pub d1: Option<f64>,
    #[serde(default)]
    pub a1: Option<f64>,
    #[serde(default)]
    pub d2: Option<f64>,
    #[serde(default)]
    pub a2: Option<f64>,
    /// Read `(.)^{1 - p/2}` as 1 at `p = 2`.
    #[serde(default = "yes")]
    pub p2_limit_convention: bool,
    /// Sample intervals used when estimating family bounds.
    #[serde(default = "default_density")]
    pub bound_grid_density: usize,
    /// Previously published `(existence, stability)` values to compare against.
    #[serde(default)]
    pub published: Option<[f64; 2]>,
}

impl Default for CriterionConfig {
    fn default() -> Self {
        Self {
            t_eval: None,
            k_p: 1.0,
            c_p: None,
            m: None,
            m_c: None,
            c_mu: None,
            mu_smoothing: 0.5,
            gamma: 0.5,
            inv_power_norm: None,
            d1: None,
            a1: None,
            d2: None,
            a2: None,
            p2_limit_convention: true,
            bound_grid_density: 400,
            published: None,
        }
    }
}

impl CriterionConfig {
    pub fn validate(&self, horizon: f64) -> Result<()> {
        let nonneg = |name: &str, v: Option<f64>| -> Result<()> {
            match v {
                Some(x) if !(x >= 0.0) || !x.is_finite() => {
                    Err(Error::Config(format!("criterion.{name} must be finite and >= 0, got {x}")))
                }
                _ => Ok(()),
            }
        };
        if let Some(t) = self.t_eval {
            if !(t > 0.0) || t > horizon {
                return Err(Error::Config(format!("criterion.t_eval must lie in (0, horizon], got {t}")));
            }
        }
        nonneg("k_p", Some(self.k_p))?;
        nonneg("c_p", self.c_p)?;
        nonneg("m", self.m)?;
        nonneg("m_c", self.m_c)?;
        nonneg("c_mu", self.c_mu)?;
        nonneg("inv_power_norm", self.inv_power_norm)?;
        nonneg("d1", self.d1)?;
        nonneg("a1", self.a1)?;
        nonneg("d2", self.d2)?;
        nonneg("a2", self.a2)?;
        if !(self.mu_smoothing > 0.0 && self.mu_smoothing <= 1.0) {
            return Err(Error::Config("criterion.mu_smoothing must lie in (0, 1]".into()));
        }
        if !(self.gamma > 0.0 && self.gamma < 1.0) {
            return Err(Error::Config("criterion.gamma must lie in (0, 1)".into()));
        }
        if self.bound_grid_density == 0 {
            return Err(Error::Config("criterion.bound_grid_density must be >= 1".into()));
        }
        Ok(())
    }
}

/// Full description of one problem instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemSpec {
    pub alpha: f64,
    pub p: f64,
    pub horizon: f64,
    #[serde(default)]
    pub delay: f64,
    pub generator: SpectralGenerator,
    pub coefficients: CoefficientSet,
    #[serde(default)]
    pub contractors: ContractorSet,
    #[serde(default)]
    pub wiener: QWienerSpec,
    #[serde(default)]
    pub jumps: JumpSpec,
    pub phi: InitialHistory,
    pub eta: Vec<f64>,
    #[serde(default)]
    pub criterion: CriterionConfig,
}

impl ProblemSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 1.0 && self.alpha < 2.0) {
            return Err(Error::Config(format!("alpha must lie in (1, 2), got {}", self.alpha)));
        }
        if !(self.p >= 2.0) || !self.p.is_finite() {
            return Err(Error::Config(format!("p must be >= 2, got {}", self.p)));
        }
        if !(self.horizon > 0.0) || !self.horizon.is_finite() {
            return Err(Error::Config(format!("horizon must be > 0, got {}", self.horizon)));
        }
        if !(self.delay >= 0.0) || !self.delay.is_finite() {
            return Err(Error::Config(format!("delay must be >= 0, got {}", self.delay)));
        }
        self.generator.validate().map_err(|e| Error::Config(format!("generator: {e}")))?;
        let n = self.generator.modes();
        self.phi.validate(n)?;
        if self.eta.len() != n {
            return Err(Error::Config(format!("eta must have {n} mode coefficients")));
        }
        if self.wiener.modes() > n {
            return Err(Error::Config(format!(
                "wiener has {} modes but the state has only {n}",
                self.wiener.modes()
            )));
        }
        self.wiener.validate()?;
        self.jumps.validate()?;
        self.coefficients.validate(self.delay)?;
        self.contractors.validate()?;
        self.criterion.validate(self.horizon)?;
        Ok(())
    }

    pub fn modes(&self) -> usize {
        self.generator.modes()
    }

    pub fn t_eval(&self) -> f64 {
        self.criterion.t_eval.unwrap_or(self.horizon)
    }

    pub fn grid(&self, dt: f64) -> Result<TimeGrid> {
        TimeGrid::covering(self.horizon, dt)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: Self = serde_json::from_str(text)?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Format(e.to_string()))
    }
}
