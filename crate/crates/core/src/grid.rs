//! Uniform time grids and grid-sampled trajectories of spectral coefficients.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Uniform grid `t_i = i * dt`, `i = 0..=steps`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TimeGrid {
    dt: f64,
    steps: usize,
}

impl TimeGrid {
    pub fn new(dt: f64, steps: usize) -> Result<Self> {
        if !(dt > 0.0) || !dt.is_finite() {
            return Err(Error::Domain(format!("time step must be positive, got {dt}")));
        }
        if steps == 0 {
            return Err(Error::Domain("grid needs at least one step".into()));
        }
        Ok(Self { dt, steps })
    }

    /// Grid covering `[0, horizon]` with step close to `dt` (rounded so the
    /// horizon is hit exactly).
    pub fn covering(horizon: f64, dt: f64) -> Result<Self> {
        if !(horizon > 0.0) || !(dt > 0.0) {
            return Err(Error::Domain(format!("invalid horizon {horizon} or step {dt}")));
        }
        let steps = (horizon / dt).round().max(1.0) as usize;
        Self::new(horizon / steps as f64, steps)
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn nodes(&self) -> usize {
        self.steps + 1
    }

    pub fn horizon(&self) -> f64 {
        self.dt * self.steps as f64
    }

    pub fn time(&self, i: usize) -> f64 {
        self.dt * i as f64
    }

    pub fn times(&self) -> Vec<f64> {
        (0..=self.steps).map(|i| self.time(i)).collect()
    }
}

/// Per-node spectral coefficient vectors on a grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trajectory {
    grid: TimeGrid,
    modes: usize,
    data: Vec<f64>,
}

impl Trajectory {
    pub fn zeros(grid: TimeGrid, modes: usize) -> Self {
        Self { grid, modes, data: vec![0.0; grid.nodes() * modes] }
    }

    pub fn from_states(grid: TimeGrid, states: Vec<Vec<f64>>) -> Result<Self> {
        if states.len() != grid.nodes() {
            return Err(Error::Domain(format!(
                "expected {} states, got {}",
                grid.nodes(),
                states.len()
            )));
        }
        let modes = states.first().map(|s| s.len()).unwrap_or(0);
        if states.iter().any(|s| s.len() != modes) {
            return Err(Error::Domain("states must share one dimension".into()));
        }
        Ok(Self { grid, modes, data: states.concat() })
    }

    pub fn grid(&self) -> TimeGrid {
        self.grid
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn state(&self, i: usize) -> &[f64] {
        &self.data[i * self.modes..(i + 1) * self.modes]
    }

    pub fn state_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.data[i * self.modes..(i + 1) * self.modes]
    }

    pub fn set_state(&mut self, i: usize, v: &[f64]) {
        self.state_mut(i).copy_from_slice(v);
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// `self - other`, node by node.
    pub fn sub(&self, other: &Trajectory) -> Trajectory {
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Trajectory { grid: self.grid, modes: self.modes, data }
    }

    pub fn add(&self, other: &Trajectory) -> Trajectory {
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Trajectory { grid: self.grid, modes: self.modes, data }
    }

    /// `|x(t_i)|^p` with the Euclidean norm of the coefficient vector.
    pub fn norm_pow(&self, i: usize, p: f64) -> f64 {
        norm(self.state(i)).powf(p)
    }

    /// `sup_i |x(t_i)|^p`.
    pub fn sup_norm_pow(&self, p: f64) -> f64 {
        (0..self.grid.nodes()).map(|i| self.norm_pow(i, p)).fold(0.0, f64::max)
    }

    /// CSV with columns `t, mode_1, ..., mode_N`.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        let mut header = String::from("t");
        for k in 1..=self.modes {
            header.push_str(&format!(",mode_{k}"));
        }
        writeln!(w, "{header}")?;
        for i in 0..self.grid.nodes() {
            let mut line = format!("{}", self.grid.time(i));
            for v in self.state(i) {
                line.push_str(&format!(",{v}"));
            }
            writeln!(w, "{line}")?;
        }
        Ok(())
    }
}

pub fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}
