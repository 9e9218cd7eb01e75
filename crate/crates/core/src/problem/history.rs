//! Initial history and delayed segments `x_t(theta) = x(t + theta)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::Trajectory;

/// State-valued history `phi` on `[-r, 0]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InitialHistory {
    /// `phi(theta) = state` for every `theta`.
    Constant { state: Vec<f64> },
    /// `phi(theta) = at_zero + theta * slope`.
    Affine { at_zero: Vec<f64>, slope: Vec<f64> },
}

impl InitialHistory {
    pub fn constant(state: Vec<f64>) -> Self {
        Self::Constant { state }
    }

    pub fn modes(&self) -> usize {
        match self {
            Self::Constant { state } => state.len(),
            Self::Affine { at_zero, .. } => at_zero.len(),
        }
    }

    pub fn validate(&self, modes: usize) -> Result<()> {
        let ok = match self {
            Self::Constant { state } => state.len() == modes,
            Self::Affine { at_zero, slope } => at_zero.len() == modes && slope.len() == modes,
        };
        if !ok {
            return Err(Error::Config(format!("phi must have {modes} mode coefficients")));
        }
        Ok(())
    }

    pub fn eval_into(&self, theta: f64, out: &mut [f64]) {
        match self {
            Self::Constant { state } => out.copy_from_slice(state),
            Self::Affine { at_zero, slope } => {
                for k in 0..out.len() {
                    out[k] = at_zero[k] + theta * slope[k];
                }
            }
        }
    }

    pub fn eval(&self, theta: f64) -> Vec<f64> {
        let mut v = vec![0.0; self.modes()];
        self.eval_into(theta, &mut v);
        v
    }
}

/// Window of a trajectory ending at node `index`.
///
/// Nodes before `index` come from `nodes`; the state at `index` is
/// `current`, which lets a caller substitute a perturbed or frozen value.
/// Times `t + theta <= 0` read the initial history.
#[derive(Debug, Clone, Copy)]
pub struct HistorySegment<'a> {
    index: usize,
    dt: f64,
    delay: f64,
    nodes: &'a Trajectory,
    current: &'a [f64],
    phi: &'a InitialHistory,
}

impl<'a> HistorySegment<'a> {
    pub fn new(
        nodes: &'a Trajectory,
        index: usize,
        current: &'a [f64],
        delay: f64,
        phi: &'a InitialHistory,
    ) -> Self {
        Self { index, dt: nodes.grid().dt(), delay, nodes, current, phi }
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn time(&self) -> f64 {
        self.dt * self.index as f64
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn delay(&self) -> f64 {
        self.delay
    }

    pub fn current(&self) -> &'a [f64] {
        self.current
    }

    pub fn modes(&self) -> usize {
        self.current.len()
    }

    /// State at node `j <= index`.
    pub fn node(&self, j: usize) -> &'a [f64] {
        if j == self.index {
            self.current
        } else {
            self.nodes.state(j)
        }
    }

    /// `x(t + theta)` for `theta` in `[-r, 0]`.
    pub fn lookup_into(&self, theta: f64, out: &mut [f64]) -> Result<()> {
        if !(theta <= 0.0 && theta >= -self.delay) {
            return Err(Error::Domain(format!(
                "history offset {theta} outside [-{}, 0]",
                self.delay
            )));
        }
        if theta == 0.0 {
            out.copy_from_slice(self.current);
            return Ok(());
        }
        let s = self.time() + theta;
        if s <= 0.0 {
            self.phi.eval_into(s, out);
            return Ok(());
        }
        let pos = s / self.dt;
        let j = (pos.floor() as usize).min(self.index.saturating_sub(1));
        let w = pos - j as f64;
        let (a, b) = (self.node(j), self.node(j + 1));
        for k in 0..out.len() {
            out[k] = (1.0 - w) * a[k] + w * b[k];
        }
        Ok(())
    }

    pub fn lookup(&self, theta: f64) -> Result<Vec<f64>> {
        let mut v = vec![0.0; self.modes()];
        self.lookup_into(theta, &mut v)?;
        Ok(v)
    }
}

/// `x(t + theta)` read from a stored trajectory, with `phi` for `t + theta <= 0`.
///
/// `t` need not be a grid node; values between nodes are linearly
/// interpolated.
pub fn history_lookup(
    traj: &Trajectory,
    phi: &InitialHistory,
    delay: f64,
    t: f64,
    theta: f64,
) -> Result<Vec<f64>> {
    if !(theta <= 0.0 && theta >= -delay) {
        return Err(Error::Domain(format!("history offset {theta} outside [-{delay}, 0]")));
    }
    let grid = traj.grid();
    let s = t + theta;
    if s > grid.horizon() * (1.0 + 1e-12) {
        return Err(Error::Domain(format!("time {s} beyond the trajectory horizon")));
    }
    if s <= 0.0 {
        return Ok(phi.eval(s));
    }
    let pos = s / grid.dt();
    let j = (pos.floor() as usize).min(grid.steps() - 1);
    let w = pos - j as f64;
    let (a, b) = (traj.state(j), traj.state(j + 1));
    Ok(a.iter().zip(b).map(|(x, y)| (1.0 - w) * x + w * y).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::TimeGrid;

    fn setup() -> (Trajectory, InitialHistory) {
        let g = TimeGrid::new(0.1, 10).unwrap();
        let states = (0..=10).map(|i| vec![i as f64, -(i as f64)]).collect();
        let phi = InitialHistory::Affine { at_zero: vec![0.0, 0.0], slope: vec![2.0, 3.0] };
        (Trajectory::from_states(g, states).unwrap(), phi)
    }

    #[test]
    fn zero_offset_is_current_state() {
        let (tr, phi) = setup();
        assert_eq!(history_lookup(&tr, &phi, 0.5, 0.4, 0.0).unwrap(), vec![4.0, -4.0]);
        let seg = HistorySegment::new(&tr, 4, tr.state(4), 0.5, &phi);
        assert_eq!(seg.lookup(0.0).unwrap(), vec![4.0, -4.0]);
    }

    #[test]
    fn initial_time_reads_history() {
        let (tr, phi) = setup();
        assert_eq!(history_lookup(&tr, &phi, 0.5, 0.0, -0.25).unwrap(), vec![-0.5, -0.75]);
    }

    #[test]
    fn off_node_interpolates() {
        let (tr, phi) = setup();
        let v = history_lookup(&tr, &phi, 0.5, 0.5, -0.27).unwrap();
        assert!((v[0] - 2.3).abs() < 1e-12 && (v[1] + 2.3).abs() < 1e-12);
        let seg = HistorySegment::new(&tr, 5, tr.state(5), 0.5, &phi);
        let w = seg.lookup(-0.27).unwrap();
        assert!((w[0] - 2.3).abs() < 1e-12);
    }

    #[test]
    fn offset_outside_window_is_rejected() {
        let (tr, phi) = setup();
        assert!(matches!(history_lookup(&tr, &phi, 0.5, 0.5, -0.6), Err(Error::Domain(_))));
        assert!(matches!(history_lookup(&tr, &phi, 0.5, 0.5, 0.1), Err(Error::Domain(_))));
    }
}
