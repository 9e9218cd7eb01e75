//! Named coefficient and contractor families referenced from config files.
//!
//! Every entry serializes as `{"name": ..., "parameters": {...}}`.

use serde::{Deserialize, Serialize};

use super::history::HistorySegment;
use crate::error::{Error, Result};
use crate::grid::norm;

fn zero() -> f64 {
    0.0
}

fn one() -> f64 {
    1.0
}

/// Fixed spatial shape used by [`Coefficient::Forcing`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ForcingProfile {
    /// Sine coefficients of the constant function 1 on `(0, pi)`:
    /// `sqrt(2/pi) * 2/n` for odd `n`, zero for even `n`.
    UnitConstant,
    /// Unit vector on mode `index` (1-based).
    Mode { index: usize },
    /// Explicit coefficients; missing trailing modes are zero.
    Coefficients { values: Vec<f64> },
}

impl ForcingProfile {
    fn value(&self, n: usize) -> f64 {
        match self {
            Self::UnitConstant => {
                if n % 2 == 1 {
                    (2.0 / std::f64::consts::PI).sqrt() * 2.0 / n as f64
                } else {
                    0.0
                }
            }
            Self::Mode { index } => {
                if *index == n {
                    1.0
                } else {
                    0.0
                }
            }
            Self::Coefficients { values } => values.get(n - 1).copied().unwrap_or(0.0),
        }
    }
}

/// State-valued coefficient `(t, x_t) -> H`, also used for the per-mode
/// diffusion multipliers of `G`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", content = "parameters", rename_all = "snake_case")]
pub enum Coefficient {
    Zero,
    /// `scale e^{rate t} |lambda_n|^{-smoothing} x_n(t - lag)`.
    Linear {
        scale: f64,
        #[serde(default = "zero")]
        rate: f64,
        #[serde(default = "zero")]
        lag: f64,
        #[serde(default = "zero")]
        smoothing: f64,
    },
    /// `scale e^{rate t} x(t) / (offset + |x(t)|)`.
    Saturating {
        scale: f64,
        #[serde(default = "zero")]
        rate: f64,
        offset: f64,
    },
    /// `scale e^{rate t} / (offset + |x(t)|)` on every mode.
    NormSaturating {
        scale: f64,
        #[serde(default = "zero")]
        rate: f64,
        offset: f64,
    },
    /// `scale int_0^t e^{rate (t-s)} x(s) / (offset + |x(s)|) ds`, left-endpoint
    /// rule on the grid.
    MemorySaturating {
        scale: f64,
        #[serde(default = "zero")]
        rate: f64,
        offset: f64,
    },
    /// State-independent `scale e^{rate t} profile`.
    Forcing {
        scale: f64,
        #[serde(default = "zero")]
        rate: f64,
        profile: ForcingProfile,
    },
}

impl Default for Coefficient {
    fn default() -> Self {
        Self::Zero
    }
}

impl Coefficient {
    pub fn is_zero(&self) -> bool {
        match self {
            Self::Zero => true,
            Self::Linear { scale, .. }
            | Self::Saturating { scale, .. }
            | Self::NormSaturating { scale, .. }
            | Self::MemorySaturating { scale, .. }
            | Self::Forcing { scale, .. } => *scale == 0.0,
        }
    }

    /// Largest `s` with `|coefficient_n| = O(|lambda_n|^{-s})` guaranteed by
    /// the family; infinite for zero or finitely supported outputs.
    pub fn smoothing(&self) -> f64 {
        if self.is_zero() {
            return f64::INFINITY;
        }
        match self {
            Self::Linear { smoothing, .. } => *smoothing,
            Self::Forcing { profile: ForcingProfile::UnitConstant, .. } => 0.5,
            Self::Forcing { .. } => f64::INFINITY,
            _ => 0.0,
        }
    }

    /// Largest history offset the coefficient reads.
    pub fn lag(&self) -> f64 {
        match self {
            Self::Linear { lag, .. } => *lag,
            _ => 0.0,
        }
    }

    pub fn validate(&self, field: &str, delay: f64) -> Result<()> {
        let bad = |what: &str| Err(Error::Config(format!("{field}: {what}")));
        match self {
            Self::Zero => Ok(()),
            Self::Linear { scale, rate, lag, smoothing } => {
                if ![*scale, *rate, *lag, *smoothing].iter().all(|v| v.is_finite()) {
                    return bad("parameters must be finite");
                }
                if *lag < 0.0 || *lag > delay {
                    return bad(&format!("lag {lag} must lie in [0, delay = {delay}]"));
                }
                if *smoothing < 0.0 {
                    return bad("smoothing must be >= 0");
                }
                Ok(())
            }
            Self::Saturating { scale, rate, offset }
            | Self::NormSaturating { scale, rate, offset }
            | Self::MemorySaturating { scale, rate, offset } => {
                if ![*scale, *rate, *offset].iter().all(|v| v.is_finite()) {
                    return bad("parameters must be finite");
                }
                if !(*offset > 0.0) {
                    return bad("offset must be > 0");
                }
                Ok(())
            }
            Self::Forcing { scale, rate, profile } => {
                if !scale.is_finite() || !rate.is_finite() {
                    return bad("parameters must be finite");
                }
                if let ForcingProfile::Mode { index } = profile {
                    if *index == 0 {
                        return bad("mode index is 1-based");
                    }
                }
                Ok(())
            }
        }
    }

    /// Writes the coefficient at `(seg.time(), seg)` into `out`.
    pub fn eval_into(&self, seg: &HistorySegment<'_>, lambdas: &[f64], out: &mut [f64]) -> Result<()> {
        let t = seg.time();
        match self {
            Self::Zero => out.iter_mut().for_each(|o| *o = 0.0),
            Self::Linear { scale, rate, lag, smoothing } => {
                seg.lookup_into(-lag, out)?;
                let c = scale * (rate * t).exp();
                for (k, o) in out.iter_mut().enumerate() {
                    let w = if *smoothing == 0.0 { 1.0 } else { lambdas[k].abs().powf(-smoothing) };
                    *o *= c * w;
                }
            }
            Self::Saturating { scale, rate, offset } => {
                let x = seg.current();
                let c = scale * (rate * t).exp() / (offset + norm(x));
                for (o, v) in out.iter_mut().zip(x) {
                    *o = c * v;
                }
            }
            Self::NormSaturating { scale, rate, offset } => {
                let c = scale * (rate * t).exp() / (offset + norm(seg.current()));
                out.iter_mut().for_each(|o| *o = c);
            }
            Self::MemorySaturating { scale, rate, offset } => {
                out.iter_mut().for_each(|o| *o = 0.0);
                let dt = seg.dt();
                for j in 0..seg.index() {
                    let x = seg.node(j);
                    let s = dt * j as f64;
                    let c = scale * dt * (rate * (t - s)).exp() / (offset + norm(x));
                    for (o, v) in out.iter_mut().zip(x) {
                        *o += c * v;
                    }
                }
            }
            Self::Forcing { scale, rate, profile } => {
                let c = scale * (rate * t).exp();
                for (k, o) in out.iter_mut().enumerate() {
                    *o = c * profile.value(k + 1);
                }
            }
        }
        Ok(())
    }
}

/// Jump coefficient `sigma(t, x_t, u) = base(t, x_t) * u^{mark_power}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct JumpCoefficient {
    #[serde(flatten)]
    pub base: Coefficient,
    #[serde(default = "zero")]
    pub mark_power: f64,
}

impl JumpCoefficient {
    pub fn new(base: Coefficient, mark_power: f64) -> Self {
        Self { base, mark_power }
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero()
    }

    pub fn mark_factor(&self, u: f64) -> f64 {
        if self.mark_power == 0.0 {
            1.0
        } else {
            u.powf(self.mark_power)
        }
    }
}

/// Scalar multiple of the identity, `Gamma(t, x) y = value(t) y`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", content = "parameters", rename_all = "snake_case")]
pub enum ContractorMap {
    Zero,
    Constant { value: f64 },
    /// `value e^{rate t}`.
    Exponential {
        value: f64,
        #[serde(default = "one")]
        rate: f64,
    },
}

impl Default for ContractorMap {
    fn default() -> Self {
        Self::Zero
    }
}

impl ContractorMap {
    pub fn is_zero(&self) -> bool {
        match self {
            Self::Zero => true,
            Self::Constant { value } | Self::Exponential { value, .. } => *value == 0.0,
        }
    }

    pub fn value(&self, t: f64) -> f64 {
        match self {
            Self::Zero => 0.0,
            Self::Constant { value } => *value,
            Self::Exponential { value, rate } => value * (rate * t).exp(),
        }
    }

    pub fn validate(&self, field: &str) -> Result<()> {
        let ok = match self {
            Self::Zero => true,
            Self::Constant { value } => value.is_finite(),
            Self::Exponential { value, rate } => value.is_finite() && rate.is_finite(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Config(format!("{field}: parameters must be finite")))
        }
    }
}

/// Which measure integrates the `Gamma_4` term in the update and regularity
/// equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum JumpContractorMeasure {
    /// `lambda(du) ds`.
    #[default]
    Intensity,
    /// The compensated random measure.
    Compensated,
}

/// Contractors `Gamma_1..Gamma_4` for `f, g, G, sigma` and their bounds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct ContractorSet {
    #[serde(default)]
    pub gamma1: ContractorMap,
    #[serde(default)]
    pub gamma2: ContractorMap,
    #[serde(default)]
    pub gamma3: ContractorMap,
    #[serde(default)]
    pub gamma4: ContractorMap,
    #[serde(default)]
    pub c1: f64,
    #[serde(default)]
    pub c2: f64,
    #[serde(default)]
    pub c3: f64,
    #[serde(default)]
    pub c4: f64,
    #[serde(default)]
    pub c4_hat: f64,
    #[serde(default)]
    pub gamma4_measure: JumpContractorMeasure,
}

impl ContractorSet {
    pub fn is_zero(&self) -> bool {
        [&self.gamma1, &self.gamma2, &self.gamma3, &self.gamma4].iter().all(|g| g.is_zero())
    }

    pub fn validate(&self) -> Result<()> {
        self.gamma1.validate("contractors.gamma1")?;
        self.gamma2.validate("contractors.gamma2")?;
        self.gamma3.validate("contractors.gamma3")?;
        self.gamma4.validate("contractors.gamma4")?;
        for (name, c) in [("c1", self.c1), ("c2", self.c2), ("c3", self.c3), ("c4", self.c4), ("c4_hat", self.c4_hat)] {
            if !(c >= 0.0) || !c.is_finite() {
                return Err(Error::Config(format!("contractors.{name} must be finite and >= 0")));
            }
        }
        Ok(())
    }
}

/// `f, g, G, sigma` with the contractor-inequality constants `a_hat_1..5`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct CoefficientSet {
    #[serde(default)]
    pub f: Coefficient,
    #[serde(default)]
    pub g: Coefficient,
    /// Per-mode multipliers: noise mode `k` drives state mode `k`.
    #[serde(default)]
    pub diffusion: Coefficient,
    #[serde(default)]
    pub jump: JumpCoefficient,
    pub a_hat: [f64; 5],
}

impl CoefficientSet {
    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.g.is_zero() && self.diffusion.is_zero() && self.jump.is_zero()
    }

    pub fn validate(&self, delay: f64) -> Result<()> {
        self.f.validate("coefficients.f", delay)?;
        self.g.validate("coefficients.g", delay)?;
        self.diffusion.validate("coefficients.diffusion", delay)?;
        self.jump.base.validate("coefficients.jump", delay)?;
        if !self.jump.mark_power.is_finite() {
            return Err(Error::Config("coefficients.jump.mark_power must be finite".into()));
        }
        for (i, a) in self.a_hat.iter().enumerate() {
            if !(*a >= 0.0) || !a.is_finite() {
                return Err(Error::Config(format!("coefficients.a_hat[{i}] must be finite and >= 0")));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{TimeGrid, Trajectory};
    use crate::problem::history::InitialHistory;

    #[test]
    fn registry_round_trip() {
        let c = Coefficient::Linear { scale: 0.5, rate: -2.0, lag: 0.0, smoothing: 0.5 };
        let s = serde_json::to_string(&c).unwrap();
        assert!(s.contains("\"name\":\"linear\""));
        assert_eq!(serde_json::from_str::<Coefficient>(&s).unwrap(), c);
        let z: Coefficient = serde_json::from_str(r#"{"name":"zero"}"#).unwrap();
        assert!(z.is_zero());
        let j: JumpCoefficient =
            serde_json::from_str(r#"{"name":"linear","parameters":{"scale":1},"mark_power":1}"#).unwrap();
        assert_eq!(j.mark_power, 1.0);
        assert_eq!(serde_json::from_str::<JumpCoefficient>(&serde_json::to_string(&j).unwrap()).unwrap(), j);
    }

    #[test]
    fn unknown_name_is_rejected() {
        let e = serde_json::from_str::<Coefficient>(r#"{"name":"cubic","parameters":{}}"#);
        assert!(e.is_err());
    }

    #[test]
    fn linear_applies_weights() {
        let g = TimeGrid::new(0.1, 4).unwrap();
        let tr = Trajectory::zeros(g, 2);
        let phi = InitialHistory::constant(vec![0.0, 0.0]);
        let x = [2.0, 3.0];
        let seg = HistorySegment::new(&tr, 0, &x, 0.0, &phi);
        let c = Coefficient::Linear { scale: 1.0, rate: 0.0, lag: 0.0, smoothing: 0.5 };
        let mut out = [0.0; 2];
        c.eval_into(&seg, &[-1.0, -4.0], &mut out).unwrap();
        assert_eq!(out, [2.0, 1.5]);
    }

    #[test]
    fn unit_constant_profile() {
        let p = ForcingProfile::UnitConstant;
        assert_eq!(p.value(2), 0.0);
        assert!((p.value(3) - (2.0 / std::f64::consts::PI).sqrt() * 2.0 / 3.0).abs() < 1e-15);
    }
}
