//! Decay root and prefactor of the impulsive integral inequality.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `xi_1..xi_7`, `eta_1`, `eta_2` and the delay `theta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InequalityParams {
    pub xi: [f64; 7],
    pub eta1: f64,
    pub eta2: f64,
    pub theta: f64,
}

impl InequalityParams {
    pub fn validate(&self) -> Result<()> {
        if self.xi.iter().any(|x| !(*x >= 0.0) || !x.is_finite()) {
            return Err(Error::Domain("xi_i must be finite and >= 0".into()));
        }
        if !(self.eta1 > 0.0 && self.eta2 > 0.0) || !self.eta1.is_finite() || !self.eta2.is_finite() {
            return Err(Error::Domain("eta_1 and eta_2 must be positive".into()));
        }
        if !(self.theta >= 0.0) || !self.theta.is_finite() {
            return Err(Error::Domain("theta must be >= 0".into()));
        }
        Ok(())
    }

    /// `xi_3 + xi_4/eta_1 + xi_5/eta_2`; a root exists when this is below one.
    pub fn feasibility(&self) -> f64 {
        self.xi[2] + self.xi[3] / self.eta1 + self.xi[4] / self.eta2
    }

    /// `xi_3 e^{-mu theta} + xi_4 e^{-mu theta}/(eta_1 - mu) + xi_5 e^{-mu theta}/(eta_2 - mu)`.
    pub fn root_lhs(&self, mu: f64) -> f64 {
        let e = (-mu * self.theta).exp();
        let mut s = self.xi[2] * e;
        if self.xi[3] > 0.0 {
            s += self.xi[3] * e / (self.eta1 - mu);
        }
        if self.xi[4] > 0.0 {
            s += self.xi[4] * e / (self.eta2 - mu);
        }
        s
    }

    /// Upper end of the root bracket: the smallest `eta` whose term is active.
    fn upper(&self) -> f64 {
        match (self.xi[3] > 0.0, self.xi[4] > 0.0) {
            (true, true) => self.eta1.min(self.eta2),
            (true, false) => self.eta1,
            _ => self.eta2,
        }
    }
}

/// The root `mu` in `(0, min eta)` of `root_lhs(mu) = 1`, by bisection.
///
/// A zero `xi_4` (or `xi_5`) switches its term off, and the bracket then
/// ends at the other `eta`.
pub fn decay_root(q: &InequalityParams) -> Result<f64> {
    q.validate()?;
    if q.xi[3] == 0.0 && q.xi[4] == 0.0 {
        return Err(Error::NoRoot(format!(
            "with xi_4 = xi_5 = 0 the left side is xi_3 e^(-mu theta) = {} at mu = 0 and never crosses 1 from below",
            q.xi[2]
        )));
    }
    let f = q.feasibility();
    if !(f < 1.0) {
        return Err(Error::NoRoot(format!("infeasible: xi_3 + xi_4/eta_1 + xi_5/eta_2 = {f} >= 1")));
    }
    let h = |mu: f64| q.root_lhs(mu) - 1.0;
    let mut lo = 0.0f64;
    let mut hi = q.upper();
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if h(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let best = if h(lo).abs() <= h(hi).abs() || hi >= q.upper() { lo } else { hi };
    if !(best > 0.0) {
        return Err(Error::NoRoot("root collapsed to zero".into()));
    }
    Ok(best)
}

/// `max{xi_1 + xi_2, (eta_1 - mu)/(xi_4 e^{mu theta} - xi_6), (eta_2 - mu)/(xi_5 e^{mu theta} - xi_7)}`.
///
/// A channel whose numerator constants `xi_4, xi_6` (or `xi_5, xi_7`) are both
/// zero is inactive and left out of the maximum.
pub fn n_epsilon(q: &InequalityParams, mu: f64) -> Result<f64> {
    q.validate()?;
    let e = (mu * q.theta).exp();
    let mut n = q.xi[0] + q.xi[1];
    for (xi, xi_sub, eta, name) in [(q.xi[3], q.xi[5], q.eta1, "xi_4"), (q.xi[4], q.xi[6], q.eta2, "xi_5")] {
        if xi == 0.0 && xi_sub == 0.0 {
            continue;
        }
        let den = xi * e - xi_sub;
        if den == 0.0 {
            return Err(Error::DegenerateDenominator(format!("{name} e^(mu theta) equals its offset")));
        }
        n = n.max((eta - mu) / den);
    }
    Ok(n)
}
