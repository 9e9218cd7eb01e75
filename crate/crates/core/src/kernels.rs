//! Tabulated family kernels on a uniform grid.
//!
//! Convolutions use the left-endpoint product rule: the integrand is frozen
//! at `t_j` on `[t_j, t_{j+1})` and the kernel is integrated exactly, so
//! `int_0^{t_i} S(t_i - s) v(s) ds ~ sum_{j<i} W_{i-j} v_j` with
//! `W_m = int_{(m-1)dt}^{m dt} S`.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::grid::{TimeGrid, Trajectory};
use crate::spectral::{cosine_scalar, sine_primitive_scalar, sine_scalar};

/// Which family is convolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Cosine,
    Sine,
}

/// Per-mode family values and product-rule weights at every lag.
#[derive(Debug, Clone)]
pub struct KernelTable {
    alpha: f64,
    grid: TimeGrid,
    lambdas: Vec<f64>,
    cos: Vec<f64>,
    sin: Vec<f64>,
    cos_w: Vec<f64>,
    sin_w: Vec<f64>,
}

impl KernelTable {
    pub fn new(alpha: f64, lambdas: &[f64], grid: TimeGrid) -> Result<Self> {
        let n = grid.nodes();
        let m = lambdas.len();
        let mut cos = vec![0.0; m * n];
        let mut sin = vec![0.0; m * n];
        let mut prim = vec![0.0; m * n];
        for (k, &l) in lambdas.iter().enumerate() {
            for i in 0..n {
                let t = grid.time(i);
                cos[k * n + i] = cosine_scalar(alpha, t, l)?;
                sin[k * n + i] = sine_scalar(alpha, t, l)?;
                prim[k * n + i] = sine_primitive_scalar(alpha, t, l)?;
            }
        }
        let mut cos_w = vec![0.0; m * n];
        let mut sin_w = vec![0.0; m * n];
        for k in 0..m {
            for i in 1..n {
                cos_w[k * n + i] = sin[k * n + i] - sin[k * n + i - 1];
                sin_w[k * n + i] = prim[k * n + i] - prim[k * n + i - 1];
            }
        }
        Ok(Self { alpha, grid, lambdas: lambdas.to_vec(), cos, sin, cos_w, sin_w })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn grid(&self) -> TimeGrid {
        self.grid
    }

    pub fn modes(&self) -> usize {
        self.lambdas.len()
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    /// `C(lag * dt)` on mode `k`.
    #[inline]
    pub fn cos(&self, k: usize, lag: usize) -> f64 {
        self.cos[k * self.grid.nodes() + lag]
    }

    /// `S(lag * dt)` on mode `k`.
    #[inline]
    pub fn sin(&self, k: usize, lag: usize) -> f64 {
        self.sin[k * self.grid.nodes() + lag]
    }

    /// Product-rule weight for lag `m >= 1`.
    #[inline]
    pub fn weight(&self, kind: FamilyKind, k: usize, lag: usize) -> f64 {
        match kind {
            FamilyKind::Cosine => self.cos_w[k * self.grid.nodes() + lag],
            FamilyKind::Sine => self.sin_w[k * self.grid.nodes() + lag],
        }
    }

    /// `S(t)` on mode `k` at an arbitrary `t >= 0` (used for off-grid jumps).
    pub fn sin_at(&self, k: usize, t: f64) -> Result<f64> {
        sine_scalar(self.alpha, t, self.lambdas[k])
    }

    /// `sum_{j<i} W_{i-j} v_j` for node `i`, written into `out`.
    pub fn convolve_at(&self, kind: FamilyKind, values: &Trajectory, i: usize, out: &mut [f64]) {
        out.iter_mut().for_each(|o| *o = 0.0);
        for j in 0..i {
            let v = values.state(j);
            for k in 0..self.modes() {
                out[k] += self.weight(kind, k, i - j) * v[k];
            }
        }
    }
}

/// Mode-wise discrete convolution of a family kernel with per-node values.
pub fn convolve_family(
    kind: FamilyKind,
    alpha: f64,
    eigenvalues: &[f64],
    values: &Trajectory,
    grid: TimeGrid,
) -> Result<Trajectory> {
    let table = KernelTable::new(alpha, eigenvalues, grid)?;
    let mut out = Trajectory::zeros(grid, eigenvalues.len());
    let mut buf = vec![0.0; eigenvalues.len()];
    for i in 0..grid.nodes() {
        table.convolve_at(kind, values, i, &mut buf);
        out.set_state(i, &buf);
    }
    Ok(out)
}
