//! Reproducible Q-Wiener increments and marked Poisson events.
//!
//! Every path draws from its own ChaCha stream whose key is the SHA-256 of
//! `(master_seed, path_index, stream tag)`, so an ensemble gives the same
//! realizations regardless of evaluation order or thread count.

use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution, Exp, StandardNormal};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::grid::TimeGrid;
use crate::quad::gauss_legendre;

const WIENER_TAG: &[u8] = b"wiener";
const JUMP_TAG: &[u8] = b"poisson";

/// Derives the stream generator for one `(seed, path, tag)` triple.
pub fn path_rng(master_seed: u64, path_index: u64, tag: &[u8]) -> ChaCha20Rng {
    let mut h = Sha256::new();
    h.update(master_seed.to_le_bytes());
    h.update(path_index.to_le_bytes());
    h.update(tag);
    let key: [u8; 32] = h.finalize().into();
    ChaCha20Rng::from_seed(key)
}

/// Trace-class covariance given by its eigenvalues `lambda^Q_k >= 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct QWienerSpec {
    pub q_eigenvalues: Vec<f64>,
}

impl QWienerSpec {
    pub fn new(q_eigenvalues: Vec<f64>) -> Result<Self> {
        let s = Self { q_eigenvalues };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(v) = self.q_eigenvalues.iter().find(|v| !(**v >= 0.0) || !v.is_finite()) {
            return Err(Error::Config(format!("Q eigenvalues must be finite and >= 0, got {v}")));
        }
        Ok(())
    }

    pub fn modes(&self) -> usize {
        self.q_eigenvalues.len()
    }

    pub fn trace(&self) -> f64 {
        self.q_eigenvalues.iter().sum()
    }
}

/// Intensity measure `lambda(du)` on the mark interval.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IntensityDensity {
    /// Constant density `total_rate / (hi - lo)` on the mark interval.
    Uniform { total_rate: f64 },
    /// All events carry the same mark.
    PointMass { mark: f64, total_rate: f64 },
    /// Piecewise-constant density over equal-width bins of the mark interval.
    Piecewise { densities: Vec<f64> },
}

/// Finite-activity Poisson random measure on `[0, T] x [lo, hi]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JumpSpec {
    pub mark_space: (f64, f64),
    pub density: IntensityDensity,
}

impl Default for JumpSpec {
    fn default() -> Self {
        Self { mark_space: (0.0, 1.0), density: IntensityDensity::Uniform { total_rate: 0.0 } }
    }
}

impl JumpSpec {
    pub fn uniform(lo: f64, hi: f64, total_rate: f64) -> Result<Self> {
        let s = Self { mark_space: (lo, hi), density: IntensityDensity::Uniform { total_rate } };
        s.validate()?;
        Ok(s)
    }

    pub fn point_mass(mark: f64, total_rate: f64) -> Result<Self> {
        let s = Self {
            mark_space: (mark, mark),
            density: IntensityDensity::PointMass { mark, total_rate },
        };
        s.validate()?;
        Ok(s)
    }

    pub fn none() -> Self {
        Self::default()
    }

    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = self.mark_space;
        if !(lo <= hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::Config(format!("invalid mark interval [{lo}, {hi}]")));
        }
        let rate = self.total_rate();
        if !rate.is_finite() {
            return Err(Error::Config(
                "total jump rate must be finite (infinite-activity measures are unsupported)".into(),
            ));
        }
        if rate < 0.0 {
            return Err(Error::Config(format!("total jump rate must be >= 0, got {rate}")));
        }
        match &self.density {
            IntensityDensity::Uniform { .. } => {}
            IntensityDensity::PointMass { mark, .. } => {
                if *mark < lo || *mark > hi {
                    return Err(Error::Config(format!("point mass {mark} outside mark space")));
                }
            }
            IntensityDensity::Piecewise { densities } => {
                if densities.is_empty() || densities.iter().any(|d| *d < 0.0) {
                    return Err(Error::Config("piecewise densities must be nonempty and >= 0".into()));
                }
                if hi <= lo {
                    return Err(Error::Config("piecewise density needs a nondegenerate interval".into()));
                }
            }
        }
        Ok(())
    }

    /// `Lambda = int_Z lambda(du)`.
    pub fn total_rate(&self) -> f64 {
        let (lo, hi) = self.mark_space;
        match &self.density {
            IntensityDensity::Uniform { total_rate } => *total_rate,
            IntensityDensity::PointMass { total_rate, .. } => *total_rate,
            IntensityDensity::Piecewise { densities } => {
                let w = (hi - lo) / densities.len() as f64;
                densities.iter().sum::<f64>() * w
            }
        }
    }

    /// Quadrature `(u_q, w_q)` with `sum_q w_q h(u_q) ~ int_Z h(u) lambda(du)`.
    pub fn mark_quadrature(&self) -> Vec<(f64, f64)> {
        let (lo, hi) = self.mark_space;
        match &self.density {
            IntensityDensity::PointMass { mark, total_rate } => vec![(*mark, *total_rate)],
            IntensityDensity::Uniform { total_rate } => {
                if *total_rate == 0.0 {
                    return Vec::new();
                }
                if hi == lo {
                    return vec![(lo, *total_rate)];
                }
                let half = 0.5 * (hi - lo);
                let mid = 0.5 * (hi + lo);
                gauss_legendre(8)
                    .into_iter()
                    .map(|(x, w)| (mid + half * x, w * 0.5 * total_rate))
                    .collect()
            }
            IntensityDensity::Piecewise { densities } => {
                let bw = (hi - lo) / densities.len() as f64;
                let rule = gauss_legendre(4);
                let mut out = Vec::new();
                for (b, d) in densities.iter().enumerate() {
                    if *d == 0.0 {
                        continue;
                    }
                    let mid = lo + bw * (b as f64 + 0.5);
                    for (x, w) in &rule {
                        out.push((mid + 0.5 * bw * x, w * 0.5 * bw * d));
                    }
                }
                out
            }
        }
    }

    fn sample_mark<R: Rng>(&self, rng: &mut R) -> f64 {
        let (lo, hi) = self.mark_space;
        match &self.density {
            IntensityDensity::PointMass { mark, .. } => *mark,
            IntensityDensity::Uniform { .. } => {
                if hi == lo {
                    lo
                } else {
                    rng.gen_range(lo..hi)
                }
            }
            IntensityDensity::Piecewise { densities } => {
                let total: f64 = densities.iter().sum();
                let mut pick = rng.gen::<f64>() * total;
                let mut bin = densities.len() - 1;
                for (b, d) in densities.iter().enumerate() {
                    if pick < *d {
                        bin = b;
                        break;
                    }
                    pick -= d;
                }
                let bw = (hi - lo) / densities.len() as f64;
                lo + bw * (bin as f64 + rng.gen::<f64>())
            }
        }
    }
}

/// One Poisson event.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JumpEvent {
    pub time: f64,
    pub mark: f64,
}

/// One path's noise: Wiener increments per step and mode, plus jump events.
#[derive(Debug, Clone, PartialEq)]
pub struct NoiseRealization {
    pub grid: TimeGrid,
    pub wiener_modes: usize,
    /// Row-major `steps x wiener_modes`; increment over `[t_j, t_{j+1})`.
    pub wiener_increments: Vec<f64>,
    /// Sorted, strictly inside `(0, horizon)`.
    pub jump_events: Vec<JumpEvent>,
    pub master_seed: u64,
    pub path_index: u64,
}

impl NoiseRealization {
    /// Noise-free realization on `grid`.
    pub fn silent(grid: TimeGrid, wiener_modes: usize) -> Self {
        Self {
            grid,
            wiener_modes,
            wiener_increments: vec![0.0; grid.steps() * wiener_modes],
            jump_events: Vec::new(),
            master_seed: 0,
            path_index: 0,
        }
    }

    pub fn increment(&self, step: usize, mode: usize) -> f64 {
        if mode >= self.wiener_modes {
            return 0.0;
        }
        self.wiener_increments[step * self.wiener_modes + mode]
    }

    /// Events grouped by the grid step `[t_j, t_{j+1})` containing them.
    pub fn events_by_step(&self) -> Vec<Vec<JumpEvent>> {
        let mut out = vec![Vec::new(); self.grid.steps()];
        for e in &self.jump_events {
            let j = ((e.time / self.grid.dt()).floor() as usize).min(self.grid.steps() - 1);
            out[j].push(*e);
        }
        out
    }

    /// Audit CSV: `path,step_or_event,mode_or_mark,value`. Wiener rows carry
    /// the step, the mode and the increment; jump rows carry `event:<k>`,
    /// the mark and the event time.
    pub fn write_csv<W: Write>(&self, mut w: W, header: bool) -> Result<()> {
        if header {
            writeln!(w, "path,step_or_event,mode_or_mark,value")?;
        }
        for s in 0..self.grid.steps() {
            for k in 0..self.wiener_modes {
                writeln!(w, "{},{},{},{}", self.path_index, s, k, self.increment(s, k))?;
            }
        }
        for (k, e) in self.jump_events.iter().enumerate() {
            writeln!(w, "{},event:{},{},{}", self.path_index, k, e.mark, e.time)?;
        }
        Ok(())
    }
}

/// Q-Wiener increments `sqrt(lambda^Q_k dt) * N(0,1)` for every step and mode.
pub fn sample_wiener(
    spec: &QWienerSpec,
    grid: TimeGrid,
    master_seed: u64,
    path_index: u64,
) -> NoiseRealization {
    let k = spec.modes();
    let mut rng = path_rng(master_seed, path_index, WIENER_TAG);
    let scales: Vec<f64> = spec.q_eigenvalues.iter().map(|l| (l * grid.dt()).sqrt()).collect();
    let mut inc = Vec::with_capacity(grid.steps() * k);
    for _ in 0..grid.steps() {
        for s in &scales {
            let z: f64 = StandardNormal.sample(&mut rng);
            inc.push(if *s == 0.0 { 0.0 } else { s * z });
        }
    }
    NoiseRealization {
        grid,
        wiener_modes: k,
        wiener_increments: inc,
        jump_events: Vec::new(),
        master_seed,
        path_index,
    }
}

/// Poisson events with rate `Lambda` on `(0, horizon)` and marks drawn from
/// `lambda(du)/Lambda`.
pub fn sample_poisson(
    spec: &JumpSpec,
    grid: TimeGrid,
    master_seed: u64,
    path_index: u64,
) -> Result<NoiseRealization> {
    spec.validate()?;
    let rate = spec.total_rate();
    let mut events = Vec::new();
    if rate > 0.0 {
        let mut rng = path_rng(master_seed, path_index, JUMP_TAG);
        let exp = Exp::new(rate).map_err(|e| Error::Config(e.to_string()))?;
        let horizon = grid.horizon();
        let mut t = 0.0;
        loop {
            t += exp.sample(&mut rng);
            if t >= horizon {
                break;
            }
            if t > 0.0 {
                let mark = spec.sample_mark(&mut rng);
                events.push(JumpEvent { time: t, mark });
            }
        }
    }
    Ok(NoiseRealization {
        grid,
        wiener_modes: 0,
        wiener_increments: Vec::new(),
        jump_events: events,
        master_seed,
        path_index,
    })
}

/// Both noise sources for one path.
pub fn sample_noise(
    wiener: &QWienerSpec,
    jumps: &JumpSpec,
    grid: TimeGrid,
    master_seed: u64,
    path_index: u64,
) -> Result<NoiseRealization> {
    let mut w = sample_wiener(wiener, grid, master_seed, path_index);
    w.jump_events = sample_poisson(jumps, grid, master_seed, path_index)?.jump_events;
    Ok(w)
}

/// `int_0^t int_Z h(s,u) (N - lambda du ds)` at every grid node.
///
/// The jump sum includes events with `time <= t_i`; the compensator uses the
/// left-endpoint rule in time and the mark quadrature of `spec`.
pub fn compensated_integral<F: Fn(f64, f64) -> f64>(
    events: &[JumpEvent],
    integrand: F,
    spec: &JumpSpec,
    grid: TimeGrid,
) -> Vec<f64> {
    let rule = spec.mark_quadrature();
    let mut out = vec![0.0; grid.nodes()];
    let mut jumps = 0.0;
    let mut comp = 0.0;
    let mut next = 0usize;
    for i in 0..grid.nodes() {
        let t = grid.time(i);
        if i > 0 {
            let s = grid.time(i - 1);
            comp += grid.dt() * rule.iter().map(|(u, w)| w * integrand(s, *u)).sum::<f64>();
        }
        while next < events.len() && events[next].time <= t {
            jumps += integrand(events[next].time, events[next].mark);
            next += 1;
        }
        out[i] = jumps - comp;
    }
    out
}
