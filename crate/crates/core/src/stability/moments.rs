//! Ensemble moment curves and log-linear decay fits.

use std::io::Write;

use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, StudentsT};

use crate::error::{Error, Result};
use crate::grid::Trajectory;

/// Two-sided 95% normal quantile.
const Z95: f64 = 1.959963984540054;

/// Shifted mean `x_0 + mean(x - x_0)`: exact for constant data.
fn shifted_mean(xs: &[f64]) -> f64 {
    let x0 = xs[0];
    x0 + neumaier(xs.iter().map(|x| x - x0)) / xs.len() as f64
}

/// Compensated sum, independent of how the data were produced.
pub fn neumaier(xs: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for x in xs {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// Per-node sample mean of `|x(t)|^p` with a normal-approximation 95% band.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomentCurve {
    pub p: f64,
    pub paths: usize,
    pub times: Vec<f64>,
    pub mean: Vec<f64>,
    pub std_err: Vec<f64>,
    pub ci_low: Vec<f64>,
    pub ci_high: Vec<f64>,
}

impl MomentCurve {
    /// `t,mean,ci_low,ci_high`.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "t,mean,ci_low,ci_high")?;
        for i in 0..self.times.len() {
            writeln!(w, "{},{},{},{}", self.times[i], self.mean[i], self.ci_low[i], self.ci_high[i])?;
        }
        Ok(())
    }
}

pub fn estimate_moment(ensemble: &[Trajectory], p: f64) -> Result<MomentCurve> {
    let first = ensemble.first().ok_or_else(|| Error::Domain("empty ensemble".into()))?;
    let grid = first.grid();
    if ensemble.iter().any(|t| t.grid() != grid || t.modes() != first.modes()) {
        return Err(Error::Domain("ensemble members must share grid and mode count".into()));
    }
    let n = ensemble.len();
    let mut curve = MomentCurve {
        p,
        paths: n,
        times: grid.times(),
        mean: Vec::with_capacity(grid.nodes()),
        std_err: Vec::with_capacity(grid.nodes()),
        ci_low: Vec::with_capacity(grid.nodes()),
        ci_high: Vec::with_capacity(grid.nodes()),
    };
    let mut vals = vec![0.0; n];
    for i in 0..grid.nodes() {
        for (v, tr) in vals.iter_mut().zip(ensemble) {
            *v = tr.norm_pow(i, p);
        }
        let m = shifted_mean(&vals);
        let se = if n > 1 {
            let ss = neumaier(vals.iter().map(|v| (v - m) * (v - m)));
            (ss / (n - 1) as f64 / n as f64).sqrt()
        } else {
            0.0
        };
        curve.mean.push(m);
        curve.std_err.push(se);
        curve.ci_low.push(m - Z95 * se);
        curve.ci_high.push(m + Z95 * se);
    }
    Ok(curve)
}

/// Least-squares fit of `log v = log N - mu t`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecayFit {
    /// Fitted decay rate, floored at zero; see `rate` for the signed value.
    pub mu_hat: f64,
    pub n_hat: f64,
    pub r_squared: f64,
    /// 95% t-interval on the signed rate.
    pub ci: (f64, f64),
    pub rate: f64,
    pub points: usize,
    pub window: (f64, f64),
}

impl DecayFit {
    /// Decay is significant when the interval lies strictly above zero.
    pub fn decay_significant(&self) -> bool {
        self.ci.0 > 0.0
    }
}

/// Fits on the samples with `t` in `window` (inclusive), or on all of them.
pub fn fit_decay(times: &[f64], values: &[f64], window: Option<(f64, f64)>) -> Result<DecayFit> {
    if times.len() != values.len() {
        return Err(Error::FitDomain("times and values differ in length".into()));
    }
    let (lo, hi) = window.unwrap_or((f64::NEG_INFINITY, f64::INFINITY));
    let mut ts = Vec::new();
    let mut ys = Vec::new();
    for (t, v) in times.iter().zip(values) {
        if *t >= lo && *t <= hi {
            if !(*v > 0.0) || !v.is_finite() {
                return Err(Error::FitDomain(format!("curve value {v} at t = {t} is not positive")));
            }
            ts.push(*t);
            ys.push(v.ln());
        }
    }
    let n = ts.len();
    if n < 3 {
        return Err(Error::FitDomain(format!("need at least 3 points in the window, got {n}")));
    }
    let tm = shifted_mean(&ts);
    let ym = shifted_mean(&ys);
    let sxx = neumaier(ts.iter().map(|t| (t - tm) * (t - tm)));
    if !(sxx > 0.0) {
        return Err(Error::FitDomain("window holds a single time".into()));
    }
    let sxy = neumaier(ts.iter().zip(&ys).map(|(t, y)| (t - tm) * (y - ym)));
    let slope = sxy / sxx;
    let intercept = ym - slope * tm;
    let sse = neumaier(ts.iter().zip(&ys).map(|(t, y)| {
        let r = y - intercept - slope * t;
        r * r
    }));
    let sst = neumaier(ys.iter().map(|y| (y - ym) * (y - ym)));
    let r2 = if sst > 0.0 { (1.0 - sse / sst).clamp(0.0, 1.0) } else { 1.0 };
    let se = (sse / (n - 2) as f64 / sxx).sqrt();
    let tq = StudentsT::new(0.0, 1.0, (n - 2) as f64)
        .map_err(|e| Error::FitDomain(e.to_string()))?
        .inverse_cdf(0.975);
    let rate = -slope;
    Ok(DecayFit {
        mu_hat: if rate > 0.0 { rate } else { 0.0 },
        n_hat: intercept.exp(),
        r_squared: r2,
        ci: (rate - tq * se, rate + tq * se),
        rate,
        points: n,
        window: (ts[0], ts[n - 1]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::TimeGrid;

    #[test]
    fn exact_exponential() {
        let t: Vec<f64> = (0..50).map(|i| i as f64 * 0.05).collect();
        let v: Vec<f64> = t.iter().map(|t| 3.0 * (-2.0 * t).exp()).collect();
        let f = fit_decay(&t, &v, None).unwrap();
        assert!((f.mu_hat - 2.0).abs() < 1e-10);
        assert!((f.n_hat - 3.0).abs() < 1e-10);
        assert!((f.r_squared - 1.0).abs() < 1e-12);
        let w = fit_decay(&t, &v, Some((0.7, 1.9))).unwrap();
        assert!((w.mu_hat - 2.0).abs() < 1e-10 && (w.n_hat - 3.0).abs() < 1e-10);
    }

    #[test]
    fn constant_curve() {
        let t: Vec<f64> = (0..10).map(|i| i as f64 * 0.1).collect();
        let f = fit_decay(&t, &[0.7; 10], None).unwrap();
        assert_eq!(f.mu_hat, 0.0);
        assert_eq!(f.r_squared, 1.0);
    }

    #[test]
    fn nonpositive_value_is_rejected() {
        let t = [0.0, 1.0, 2.0];
        assert!(matches!(fit_decay(&t, &[1.0, 0.0, 1.0], None), Err(Error::FitDomain(_))));
        assert!(fit_decay(&t, &[1.0, 0.0, 1.0], Some((1.5, 3.0))).is_err());
    }

    #[test]
    fn identical_paths_have_zero_width() {
        let g = TimeGrid::new(0.1, 5).unwrap();
        let states: Vec<Vec<f64>> = (0..6).map(|i| vec![0.1 * i as f64, 0.3]).collect();
        let tr = Trajectory::from_states(g, states).unwrap();
        let c = estimate_moment(&vec![tr.clone(); 7], 2.0).unwrap();
        for i in 0..6 {
            assert_eq!(c.mean[i], tr.norm_pow(i, 2.0));
            assert_eq!(c.ci_low[i], c.ci_high[i]);
        }
        let z = estimate_moment(&[Trajectory::zeros(g, 2)], 2.0).unwrap();
        assert!(z.mean.iter().all(|v| *v == 0.0));
    }
}
