//! Gamma and two-parameter Mittag-Leffler functions on the real line.
//!
//! `E_{a,b}(z) = sum_k z^k / Gamma(a k + b)` is summed directly for
//! `z >= -SERIES_LIMIT`. Below that the Laplace-inversion representation is
//! used: the two conjugate poles `s^a = z` contribute `(2/a) Re(s^{1-b} e^s)`
//! and the branch cut on the negative axis contributes a real integral,
//! evaluated with double-exponential quadrature. Parameters with
//! `b > a + 1/2` are first lowered with `E_{a,b} = (E_{a,b-a} - 1/Gamma(b-a)) / z`
//! so the cut integrand stays integrable at the origin.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quad::{exp_sinh, tanh_sinh};

/// Arguments at or above `-SERIES_LIMIT` are summed as a power series.
pub const SERIES_LIMIT: f64 = 10.0;

/// Supported `alpha` range (inclusive).
pub const ALPHA_RANGE: (f64, f64) = (1.0, 2.0);
/// Largest supported `beta`.
pub const BETA_MAX: f64 = 8.0;
/// Largest supported positive argument.
pub const Z_MAX: f64 = 50.0;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// The gamma function for positive arguments.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("gamma requires a positive finite argument, got {x}")));
    }
    Ok(gamma_unchecked(x))
}

/// Natural log of the gamma function for positive arguments.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("ln_gamma requires a positive finite argument, got {x}")));
    }
    Ok(ln_gamma_unchecked(x))
}

fn lanczos_sum(x: f64) -> f64 {
    // x is the shifted argument (original minus one)
    let mut a = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    a
}

pub(crate) fn gamma_unchecked(x: f64) -> f64 {
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma_unchecked(1.0 - x));
    }
    if x == x.floor() && x <= 23.0 {
        // exact factorials
        let mut acc = 1.0;
        let mut k = 2.0;
        while k < x {
            acc *= k;
            k += 1.0;
        }
        return acc;
    }
    if x > 171.7 {
        return f64::INFINITY;
    }
    let y = x - 1.0;
    let t = y + LANCZOS_G + 0.5;
    // split the power to avoid overflow near the top of the range
    let half = t.powf(0.5 * (y + 0.5));
    (2.0 * PI).sqrt() * half * (lanczos_sum(y) * (-t).exp()) * half
}

pub(crate) fn ln_gamma_unchecked(x: f64) -> f64 {
    if x < 0.5 {
        return (PI / (PI * x).sin().abs()).ln() - ln_gamma_unchecked(1.0 - x);
    }
    let y = x - 1.0;
    let t = y + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (y + 0.5) * t.ln() - t + lanczos_sum(y).ln()
}

/// `1/Gamma(x)` for any real `x`, zero at the poles.
pub(crate) fn rgamma(x: f64) -> f64 {
    if x <= 0.0 && x == x.floor() {
        return 0.0;
    }
    1.0 / gamma_unchecked(x)
}

/// Parameters `(alpha, beta)` of `E_{alpha,beta}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MLParams {
    alpha: f64,
    beta: f64,
}

impl MLParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::Domain(format!("alpha must be positive, got {alpha}")));
        }
        if !(beta > 0.0) || !beta.is_finite() {
            return Err(Error::Domain(format!("beta must be positive, got {beta}")));
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

/// Evaluates `E_{alpha,beta}(z)` for real `z`.
///
/// Supported region: `alpha` in `[1, 2]`, `beta` in `(0, 8]`, `z <= 50`.
/// Anything else is rejected rather than extrapolated.
pub fn mittag_leffler(p: MLParams, z: f64) -> Result<f64> {
    let (alpha, beta) = (p.alpha, p.beta);
    if alpha < ALPHA_RANGE.0 || alpha > ALPHA_RANGE.1 {
        return Err(Error::UnsupportedRange(format!(
            "alpha = {alpha} outside [{}, {}]",
            ALPHA_RANGE.0, ALPHA_RANGE.1
        )));
    }
    if beta > BETA_MAX {
        return Err(Error::UnsupportedRange(format!("beta = {beta} exceeds {BETA_MAX}")));
    }
    if !z.is_finite() {
        return Err(Error::Domain(format!("argument must be finite, got {z}")));
    }
    if z > Z_MAX {
        return Err(Error::UnsupportedRange(format!("argument {z} exceeds {Z_MAX}")));
    }
    Ok(ml_eval(alpha, beta, z))
}

pub(crate) fn ml_eval(alpha: f64, beta: f64, z: f64) -> f64 {
    if z == 0.0 {
        return rgamma(beta);
    }
    if z >= -SERIES_LIMIT {
        ml_series(alpha, beta, z)
    } else {
        ml_negative(alpha, beta, -z)
    }
}

/// Direct power-series summation.
pub(crate) fn ml_series(alpha: f64, beta: f64, z: f64) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut zk: f64 = 1.0;
    let mut peak = 0.0f64;
    let ln_abs = z.abs().ln();
    for k in 0..2000usize {
        let arg = alpha * k as f64 + beta;
        let term = if arg < 170.0 && zk.is_finite() {
            zk * rgamma(arg)
        } else {
            let mag = (k as f64 * ln_abs - ln_gamma_unchecked(arg)).exp();
            if z < 0.0 && k % 2 == 1 {
                -mag
            } else {
                mag
            }
        };
        // Kahan summation
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        peak = peak.max(term.abs());
        if k > 4 && term.abs() <= 1e-20 * peak.max(1.0) && term.abs() <= 1e-20 * sum.abs().max(1e-300) + 1e-300 {
            break;
        }
        if k > 4 && term.abs() < 1e-22 * peak.max(1.0) {
            break;
        }
        zk *= z;
    }
    sum
}

/// `E_{alpha,beta}(-x)` for `x > SERIES_LIMIT`.
fn ml_negative(alpha: f64, beta: f64, x: f64) -> f64 {
    if (alpha - 1.0).abs() < 1e-10 {
        return ml_alpha_one_negative(beta, x);
    }
    if beta > alpha + 0.5 {
        let lower = ml_negative(alpha, beta - alpha, x);
        return (lower - rgamma(beta - alpha)) / (-x);
    }
    ml_pole_part(alpha, beta, x) + ml_cut_integral(alpha, beta, x)
}

/// Residue contribution of the poles `s = x^{1/a} e^{+-i pi/a}`.
pub(crate) fn ml_pole_part(alpha: f64, beta: f64, x: f64) -> f64 {
    let rho = x.powf(1.0 / alpha);
    let s = Complex64::from_polar(rho, PI / alpha);
    let v = s.powf(1.0 - beta) * s.exp();
    2.0 / alpha * v.re
}

/// Branch-cut integral of the Laplace inversion for `E_{a,b}(-x)`.
pub(crate) fn ml_cut_integral(alpha: f64, beta: f64, x: f64) -> f64 {
    let (s_pa, c_pa) = (PI * alpha).sin_cos();
    let s_pb = (PI * beta).sin();
    let s_pab = (PI * (alpha - beta)).sin();
    let integrand = move |r: f64| -> f64 {
        let v = r.powf(alpha);
        let num = v * s_pb - x * s_pab;
        let den = (v + x * c_pa).powi(2) + (x * s_pa).powi(2);
        (-r).exp() * r.powf(alpha - beta) * num / den
    };
    let tol = 1e-15;
    let total = if c_pa < 0.0 {
        let r_b = (-x * c_pa).powf(1.0 / alpha);
        tanh_sinh(integrand, 0.0, r_b, tol) + exp_sinh(integrand, r_b, tol)
    } else {
        exp_sinh(integrand, 0.0, tol)
    };
    total / PI
}

/// `E_{1,b}(-x)` via `(1/Gamma(b-1)) int_0^1 e^{-x t} (1-t)^{b-2} dt`.
fn ml_alpha_one_negative(beta: f64, x: f64) -> f64 {
    if beta < 1.0 {
        return rgamma(beta) - x * ml_alpha_one_negative(beta + 1.0, x);
    }
    if beta == 1.0 {
        return (-x).exp();
    }
    let e = beta - 2.0;
    // the kernel concentrates within a few multiples of 1/x of the origin
    let split = (40.0 / x).min(1.0);
    let f = move |t: f64| (-x * t).exp() * (1.0 - t).powf(e);
    let head = tanh_sinh(f, 0.0, split, 1e-17);
    let tail = if split < 1.0 { tanh_sinh(f, split, 1.0, 1e-17) } else { 0.0 };
    (head + tail) * rgamma(beta - 1.0)
}
