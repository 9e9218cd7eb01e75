//! Diagonal model of the generator and its fractional cosine, sine and
//! Riemann-Liouville families.
//!
//! For an eigenvalue `lambda` the families act on the matching mode as
//! `C(t) = E_{a,1}(lambda t^a)`, `S(t) = t E_{a,2}(lambda t^a)` and
//! `P(t) = t^{a-1} E_{a,a}(lambda t^a)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::{mittag_leffler, MLParams};

/// Diagonal generator: one strictly negative eigenvalue per retained mode.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralGenerator {
    eigenvalues: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mode_labels: Option<String>,
}

impl SpectralGenerator {
    pub fn new(eigenvalues: Vec<f64>) -> Result<Self> {
        let g = Self { eigenvalues, mode_labels: None };
        g.validate()?;
        Ok(g)
    }

    /// Dirichlet Laplacian on `[0, pi]`: `lambda_n = -n^2`, `n = 1..=modes`.
    pub fn dirichlet_laplacian(modes: usize) -> Result<Self> {
        let mut g = Self::new((1..=modes).map(|n| -((n * n) as f64)).collect())?;
        g.mode_labels = Some("sqrt(2/pi) sin(n x) on [0, pi]".to_string());
        Ok(g)
    }

    pub fn with_labels(mut self, labels: impl Into<String>) -> Self {
        self.mode_labels = Some(labels.into());
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.eigenvalues.is_empty() {
            return Err(Error::Domain("generator needs at least one mode".into()));
        }
        if let Some(l) = self.eigenvalues.iter().find(|l| !(**l < 0.0) || !l.is_finite()) {
            return Err(Error::Domain(format!("eigenvalues must be strictly negative, got {l}")));
        }
        Ok(())
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn modes(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn mode_labels(&self) -> Option<&str> {
        self.mode_labels.as_deref()
    }
}

/// Bound constants of the resolvent families consumed by the criteria.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FamilyBounds {
    pub m_c: f64,
    pub m: f64,
    pub c_mu: f64,
    pub mu_smoothing: f64,
    pub gamma: f64,
    pub inv_power_norm: f64,
    pub d1: f64,
    pub a1: f64,
    pub d2: f64,
    pub a2: f64,
}

impl FamilyBounds {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("m", self.m),
            ("c_mu", self.c_mu),
            ("inv_power_norm", self.inv_power_norm),
            ("d1", self.d1),
            ("d2", self.d2),
        ];
        for (name, v) in positive {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::Domain(format!("{name} must be positive, got {v}")));
            }
        }
        if !(self.m_c >= 1.0) {
            return Err(Error::Domain(format!("m_c must be at least 1, got {}", self.m_c)));
        }
        if !(self.mu_smoothing > 0.0 && self.mu_smoothing <= 1.0) {
            return Err(Error::Domain(format!("mu must lie in (0, 1], got {}", self.mu_smoothing)));
        }
        if !(self.gamma > 0.0 && self.gamma < 1.0) {
            return Err(Error::Domain(format!("gamma must lie in (0, 1), got {}", self.gamma)));
        }
        if !(self.a1 >= 0.0 && self.a2 >= 0.0) {
            return Err(Error::Domain("a1 and a2 must be nonnegative".into()));
        }
        Ok(())
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 1.0 && alpha <= 2.0) {
        return Err(Error::Domain(format!("family order must lie in (1, 2], got {alpha}")));
    }
    Ok(())
}

fn check_time(t: f64) -> Result<()> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!("time must be nonnegative, got {t}")));
    }
    Ok(())
}

fn ml(alpha: f64, beta: f64, z: f64) -> Result<f64> {
    mittag_leffler(MLParams::new(alpha, beta)?, z)
}

/// `C_a(t)` on an eigenvalue: `E_{a,1}(lambda t^a)`.
pub fn cosine_scalar(alpha: f64, t: f64, lambda: f64) -> Result<f64> {
    check_alpha(alpha)?;
    check_time(t)?;
    if t == 0.0 {
        return Ok(1.0);
    }
    ml(alpha, 1.0, lambda * t.powf(alpha))
}

/// `S_a(t) = int_0^t C_a`: `t E_{a,2}(lambda t^a)`.
pub fn sine_scalar(alpha: f64, t: f64, lambda: f64) -> Result<f64> {
    check_alpha(alpha)?;
    check_time(t)?;
    if t == 0.0 {
        return Ok(0.0);
    }
    Ok(t * ml(alpha, 2.0, lambda * t.powf(alpha))?)
}

/// `int_0^t S_a`: `t^2 E_{a,3}(lambda t^a)`. Used for product-rule weights.
pub fn sine_primitive_scalar(alpha: f64, t: f64, lambda: f64) -> Result<f64> {
    check_alpha(alpha)?;
    check_time(t)?;
    if t == 0.0 {
        return Ok(0.0);
    }
    Ok(t * t * ml(alpha, 3.0, lambda * t.powf(alpha))?)
}

/// `P_a(t) = J^{a-1} C_a(t)`: `t^{a-1} E_{a,a}(lambda t^a)`.
pub fn rl_family_scalar(alpha: f64, t: f64, lambda: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!("R-L family needs t > 0, got {t}")));
    }
    Ok(t.powf(alpha - 1.0) * ml(alpha, alpha, lambda * t.powf(alpha))?)
}

/// `sup_n |lambda_n|^{-gamma}`, the norm of `A^{-gamma}` in the diagonal model.
pub fn frac_power_norm(gen: &SpectralGenerator, gamma: f64) -> Result<f64> {
    if !(gamma > 0.0 && gamma < 1.0) {
        return Err(Error::Domain(format!("gamma must lie in (0, 1), got {gamma}")));
    }
    let mut sup = 0.0f64;
    for &l in gen.eigenvalues() {
        if l == 0.0 {
            return Err(Error::Domain("zero eigenvalue: A^{-gamma} is unbounded".into()));
        }
        sup = sup.max(l.abs().powf(-gamma));
    }
    Ok(sup)
}

fn sample_times(horizon: f64, grid_density: usize) -> Result<Vec<f64>> {
    if !(horizon > 0.0) || !horizon.is_finite() {
        return Err(Error::Domain(format!("horizon must be positive, got {horizon}")));
    }
    let n = grid_density.max(1);
    Ok((0..=n).map(|i| horizon * i as f64 / n as f64).collect())
}

/// Uniform bounds `|C(t)| <= M_c` and `|S(t)| <= M t` sampled on a grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GrowthBounds {
    pub m_c: f64,
    pub m: f64,
}

/// Grid maximisation of `|C|` and `|S|/t` over all modes; `grid_density` is
/// the number of sample intervals on `[0, horizon]`. The `t -> 0` limit of
/// `|S(t)|/t`, which is one, is included.
pub fn estimate_family_bounds(
    gen: &SpectralGenerator,
    alpha: f64,
    horizon: f64,
    grid_density: usize,
) -> Result<GrowthBounds> {
    check_alpha(alpha)?;
    let times = sample_times(horizon, grid_density)?;
    let mut m_c = 1.0f64;
    let mut m = 1.0f64;
    for &l in gen.eigenvalues() {
        for &t in &times[1..] {
            m_c = m_c.max(cosine_scalar(alpha, t, l)?.abs());
            m = m.max(sine_scalar(alpha, t, l)?.abs() / t);
        }
    }
    Ok(GrowthBounds { m_c, m })
}

/// Grid estimate of `c_mu` in `|A^{1-gamma} S(t)| <= alpha c_mu / t^{alpha mu}`.
pub fn estimate_smoothing_constant(
    gen: &SpectralGenerator,
    alpha: f64,
    gamma: f64,
    mu: f64,
    horizon: f64,
    grid_density: usize,
) -> Result<f64> {
    check_alpha(alpha)?;
    let times = sample_times(horizon, grid_density)?;
    let mut c = 0.0f64;
    for &l in gen.eigenvalues() {
        let w = l.abs().powf(1.0 - gamma);
        for &t in &times[1..] {
            let v = w * sine_scalar(alpha, t, l)?.abs() * t.powf(alpha * mu) / alpha;
            c = c.max(v);
        }
    }
    Ok(c)
}

/// Result of fitting `|F(t)| <= D e^{-a t}` to sampled family norms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnvelopeFit {
    pub d: f64,
    pub a: f64,
    /// False when no uniform exponential decay was detected; `a` is then 0.
    pub decay_detected: bool,
}

/// Fitted exponential bounds for the cosine and sine families.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExponentialBounds {
    pub cosine: EnvelopeFit,
    pub sine: EnvelopeFit,
}

impl ExponentialBounds {
    pub fn decay_detected(&self) -> bool {
        self.cosine.decay_detected && self.sine.decay_detected
    }

    pub fn report(&self) -> String {
        if self.decay_detected() {
            "exponential bounds fitted".to_string()
        } else {
            "H2 not satisfied (no uniform exponential decay detected)".to_string()
        }
    }
}

/// Decay below this fraction over the sampled window is treated as none.
pub const MIN_DECAY_OVER_WINDOW: f64 = 1e-2;

/// Tightest exponential envelope `D e^{-a t}` (`D >= 1`, `a >= 0`) lying on or
/// above every sample, chosen to minimise the mean log-gap to the samples.
///
/// The admissible lines in `(t, log|F|)` are those above the upper convex
/// hull; the objective is convex and piecewise linear in `a`, so its minimum
/// sits at a hull slope or at the point where `log D` reaches zero.
pub fn fit_exponential_envelope(times: &[f64], values: &[f64]) -> Result<EnvelopeFit> {
    if times.len() != values.len() || times.is_empty() {
        return Err(Error::Domain("envelope fit needs matching nonempty samples".into()));
    }
    let pts: Vec<(f64, f64)> = times
        .iter()
        .zip(values)
        .filter(|(_, v)| v.abs() > 0.0)
        .map(|(t, v)| (*t, v.abs().ln()))
        .collect();
    let horizon = times.iter().cloned().fold(0.0, f64::max);
    if pts.is_empty() {
        return Ok(EnvelopeFit { d: 1.0, a: 0.0, decay_detected: true });
    }
    let t_mean = pts.iter().map(|p| p.0).sum::<f64>() / pts.len() as f64;
    let log_d = |a: f64| -> f64 { pts.iter().map(|(t, l)| l + a * t).fold(0.0, f64::max) };
    let objective = |a: f64| log_d(a) - a * t_mean;

    let mut sorted = pts.clone();
    sorted.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut hull: Vec<(f64, f64)> = Vec::new();
    for p in sorted {
        while hull.len() >= 2 {
            let (o, a) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (a.0 - o.0) * (p.1 - o.1) - (a.1 - o.1) * (p.0 - o.0);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let mut candidates = vec![0.0];
    for w in hull.windows(2) {
        let dt = w[1].0 - w[0].0;
        if dt > 0.0 {
            let a = -(w[1].1 - w[0].1) / dt;
            if a > 0.0 {
                candidates.push(a);
            }
        }
    }
    for &(t, l) in &hull {
        if t > 0.0 && l < 0.0 {
            candidates.push(-l / t);
        }
    }
    let mut best = (f64::INFINITY, 0.0);
    for a in candidates {
        let v = objective(a);
        if v < best.0 - 1e-15 || (v <= best.0 + 1e-15 && a > best.1) {
            best = (v, a);
        }
    }
    let a = best.1;
    if a * horizon < MIN_DECAY_OVER_WINDOW {
        let sup = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        return Ok(EnvelopeFit { d: sup.max(1.0), a: 0.0, decay_detected: false });
    }
    Ok(EnvelopeFit { d: log_d(a).exp().max(1.0), a, decay_detected: true })
}

/// Fits `sup_n |C_n(t)| <= D1 e^{-a1 t}` and `sup_n |S_n(t)| <= D2 e^{-a2 t}`.
///
/// When no decay is found the fit carries `decay_detected = false` and the
/// caller reports the violation instead of failing.
pub fn estimate_exponential_bounds(
    gen: &SpectralGenerator,
    alpha: f64,
    horizon: f64,
    grid_density: usize,
) -> Result<ExponentialBounds> {
    check_alpha(alpha)?;
    let times = sample_times(horizon, grid_density)?;
    let mut c_norm = vec![0.0f64; times.len()];
    let mut s_norm = vec![0.0f64; times.len()];
    for &l in gen.eigenvalues() {
        for (i, &t) in times.iter().enumerate() {
            c_norm[i] = c_norm[i].max(cosine_scalar(alpha, t, l)?.abs());
            s_norm[i] = s_norm[i].max(sine_scalar(alpha, t, l)?.abs());
        }
    }
    Ok(ExponentialBounds {
        cosine: fit_exponential_envelope(&times, &c_norm)?,
        sine: fit_exponential_envelope(&times, &s_norm)?,
    })
}
