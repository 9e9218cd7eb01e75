//! Mild solutions on a uniform grid.
//!
//! Every integral uses the left-endpoint product rule of [`KernelTable`]:
//! integrands are frozen at `t_j` on `[t_j, t_{j+1})`, deterministic kernels
//! are integrated exactly, stochastic integrals take `S(t_i - t_j)` against
//! the increment on that step, and jumps use `S(t_i - tau)` at the exact
//! event time with the coefficient read at the left node.

mod gap;
mod regularity;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use gap::{ensemble_gap, uniqueness_gap, UniquenessGap};
pub use regularity::{regularity_solve, RegularitySolution};

use crate::error::{Error, Result};
use crate::grid::{TimeGrid, Trajectory};
use crate::kernels::{FamilyKind, KernelTable};
use crate::noise::NoiseRealization;
use crate::problem::{Coefficient, HistorySegment, JumpContractorMeasure, ProblemSpec};
use crate::stability::{existence_criterion, resolve_constants};

/// Residual norms above this are treated as blow-up.
const BLOWUP: f64 = 1e200;

/// One iterate of the successive approximation.
#[derive(Debug, Clone, PartialEq)]
pub struct PicardState {
    pub n: usize,
    pub x: Trajectory,
    pub y: Trajectory,
    pub residual_norm: f64,
}

/// Converged iterate with its residual history.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PicardOutcome {
    pub trajectory: Trajectory,
    /// Number of residual evaluations, the last one below tolerance.
    pub iterations: usize,
    pub residual_history: Vec<f64>,
}

/// Ensemble iteration result; residual norms are path averages.
#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleOutcome {
    pub trajectories: Vec<Trajectory>,
    pub iterations: usize,
    pub residual_history: Vec<f64>,
}

/// Family values `S(t_i - tau)` for every jump event of one path.
#[derive(Debug, Clone)]
struct EventKernel {
    step: usize,
    mark: f64,
    /// `nodes x modes`, zero for `t_i <= tau`.
    values: Vec<f64>,
}

/// Noise plus event kernels, built once per path.
#[derive(Debug, Clone)]
pub struct PathNoise<'n> {
    noise: &'n NoiseRealization,
    events: Vec<EventKernel>,
}

impl<'n> PathNoise<'n> {
    pub fn noise(&self) -> &'n NoiseRealization {
        self.noise
    }
}

/// Coefficient values at every node, row-major `nodes x modes`.
struct NodeValues {
    g: Vec<f64>,
    f: Vec<f64>,
    d: Vec<f64>,
    s: Vec<f64>,
}

impl NodeValues {
    fn new(len: usize) -> Self {
        Self { g: vec![0.0; len], f: vec![0.0; len], d: vec![0.0; len], s: vec![0.0; len] }
    }
}

/// Shared, immutable solver state for one problem on one grid.
#[derive(Debug, Clone)]
pub struct MildSolver<'a> {
    spec: &'a ProblemSpec,
    table: KernelTable,
    /// `sum_q w_q m(u_q)`: the intensity integral of the mark factor.
    mark_mass: f64,
    /// `sum_q w_q`.
    total_rate: f64,
    phi0: Vec<f64>,
    init: Trajectory,
}

impl<'a> MildSolver<'a> {
    pub fn new(spec: &'a ProblemSpec, grid: TimeGrid) -> Result<Self> {
        spec.validate()?;
        let g = &spec.coefficients.g;
        if !g.is_zero() && g.smoothing() < spec.criterion.gamma {
            return Err(Error::IllPosedNeutral(format!(
                "neutral coefficient decays like |lambda_n|^-{} but the domain of A^{} needs at least that exponent",
                g.smoothing(),
                spec.criterion.gamma
            )));
        }
        let table = KernelTable::new(spec.alpha, spec.generator.eigenvalues(), grid)?;
        let rule = spec.jumps.mark_quadrature();
        let jump = &spec.coefficients.jump;
        let mark_mass = rule.iter().map(|(u, w)| w * jump.mark_factor(*u)).sum();
        let total_rate = rule.iter().map(|(_, w)| w).sum();
        let phi0 = spec.phi.eval(0.0);
        let mut solver = Self {
            spec,
            table,
            mark_mass,
            total_rate,
            phi0,
            init: Trajectory::zeros(grid, spec.modes()),
        };
        solver.init = solver.build_initial()?;
        Ok(solver)
    }

    pub fn spec(&self) -> &'a ProblemSpec {
        self.spec
    }

    pub fn grid(&self) -> TimeGrid {
        self.table.grid()
    }

    pub fn table(&self) -> &KernelTable {
        &self.table
    }

    fn modes(&self) -> usize {
        self.spec.modes()
    }

    fn lambdas(&self) -> &[f64] {
        self.spec.generator.eigenvalues()
    }

    fn check_grid(&self, x: &Trajectory) -> Result<()> {
        if x.grid() != self.grid() || x.modes() != self.modes() {
            return Err(Error::Domain("trajectory does not match the solver grid".into()));
        }
        Ok(())
    }

    /// `g(0, phi)`.
    fn g_at_zero(&self) -> Result<Vec<f64>> {
        let n = self.modes();
        let dummy = Trajectory::zeros(self.grid(), n);
        let seg = HistorySegment::new(&dummy, 0, &self.phi0, self.spec.delay, &self.spec.phi);
        let mut out = vec![0.0; n];
        self.spec.coefficients.g.eval_into(&seg, self.lambdas(), &mut out)?;
        Ok(out)
    }

    fn build_initial(&self) -> Result<Trajectory> {
        let n = self.modes();
        let g0 = self.g_at_zero()?;
        let mut out = Trajectory::zeros(self.grid(), n);
        for i in 0..self.grid().nodes() {
            let s = out.state_mut(i);
            for k in 0..n {
                s[k] = self.table.cos(k, i) * (self.phi0[k] + g0[k]) + self.table.sin(k, i) * self.spec.eta[k];
            }
        }
        Ok(out)
    }

    /// `C(t)[phi(0) + g(0, phi)] + S(t) eta`.
    pub fn initial(&self) -> &Trajectory {
        &self.init
    }

    /// Tabulates `S(t_i - tau)` for the events of `noise`.
    pub fn attach<'n>(&self, noise: &'n NoiseRealization) -> Result<PathNoise<'n>> {
        if noise.grid != self.grid() {
            return Err(Error::Domain("noise realization lives on a different grid".into()));
        }
        let grid = self.grid();
        let n = self.modes();
        let mut events = Vec::with_capacity(noise.jump_events.len());
        for e in &noise.jump_events {
            let step = ((e.time / grid.dt()).floor() as usize).min(grid.steps() - 1);
            let mut values = vec![0.0; grid.nodes() * n];
            for i in step + 1..grid.nodes() {
                let lag = grid.time(i) - e.time;
                if lag <= 0.0 {
                    continue;
                }
                for k in 0..n {
                    values[i * n + k] = self.table.sin_at(k, lag)?;
                }
            }
            events.push(EventKernel { step, mark: e.mark, values });
        }
        Ok(PathNoise { noise, events })
    }

    /// Segment of `x` at node `j`; node 0 always reads `phi(0)`.
    fn segment<'s>(&'s self, x: &'s Trajectory, j: usize, current: &'s [f64]) -> HistorySegment<'s> {
        let cur = if j == 0 { &self.phi0[..] } else { current };
        HistorySegment::new(x, j, cur, self.spec.delay, &self.spec.phi)
    }

    fn eval_node(&self, seg: &HistorySegment<'_>, vals: &mut NodeValues, j: usize) -> Result<()> {
        let n = self.modes();
        let r = j * n..(j + 1) * n;
        let c = &self.spec.coefficients;
        let l = self.lambdas();
        c.g.eval_into(seg, l, &mut vals.g[r.clone()])?;
        c.f.eval_into(seg, l, &mut vals.f[r.clone()])?;
        c.diffusion.eval_into(seg, l, &mut vals.d[r.clone()])?;
        c.jump.base.eval_into(seg, l, &mut vals.s[r])?;
        Ok(())
    }

    /// `Phi(x)` at node `i` from node values `0..i` and `g_i`.
    fn assemble(&self, i: usize, vals: &NodeValues, g_i: &[f64], path: &PathNoise<'_>, out: &mut [f64]) {
        let n = self.modes();
        let t = &self.table;
        let l = self.lambdas();
        let noise = path.noise;
        let init = self.init.state(i);
        for k in 0..n {
            let mut neutral = 0.0;
            let mut drift = 0.0;
            let mut stoch = 0.0;
            let mut comp = 0.0;
            for j in 0..i {
                let w = t.weight(FamilyKind::Sine, k, i - j);
                let idx = j * n + k;
                neutral += w * vals.g[idx];
                drift += w * vals.f[idx];
                comp += w * vals.s[idx];
                stoch += t.sin(k, i - j) * vals.d[idx] * noise.increment(j, k);
            }
            let mut jumps = 0.0;
            for e in &path.events {
                if e.step < i {
                    jumps += e.values[i * n + k] * vals.s[e.step * n + k] * self.spec.coefficients.jump.mark_factor(e.mark);
                }
            }
            out[k] = init[k] - g_i[k] - l[k] * neutral + drift + stoch + jumps - self.mark_mass * comp;
        }
    }

    /// The mild-solution map.
    pub fn mild_map(&self, x: &Trajectory, path: &PathNoise<'_>) -> Result<Trajectory> {
        self.check_grid(x)?;
        let grid = self.grid();
        let n = self.modes();
        let mut vals = NodeValues::new(grid.nodes() * n);
        for j in 0..grid.nodes() {
            let seg = self.segment(x, j, x.state(j));
            self.eval_node(&seg, &mut vals, j)?;
        }
        let mut out = Trajectory::zeros(grid, n);
        for i in 0..grid.nodes() {
            let g_i = vals.g[i * n..(i + 1) * n].to_vec();
            self.assemble(i, &vals, &g_i, path, out.state_mut(i));
        }
        Ok(out)
    }

    /// `y = x - Phi(x)`.
    pub fn residual(&self, x: &Trajectory, path: &PathNoise<'_>) -> Result<Trajectory> {
        Ok(x.sub(&self.mild_map(x, path)?))
    }

    /// Applies the contractor operator
    /// `y + int S Gamma_1 y + int S Gamma_2 y + int S Gamma_3 y dw + int int S Gamma_4 y`
    /// to `y`, the contractors evaluated along `x`.
    pub fn contractor_operator(&self, y: &Trajectory, path: &PathNoise<'_>) -> Trajectory {
        let mut out = y.clone();
        let c = &self.spec.contractors;
        if c.is_zero() {
            return out;
        }
        let grid = self.grid();
        let n = self.modes();
        for i in 1..grid.nodes() {
            let mut acc = vec![0.0; n];
            self.contractor_sum(i, y, path, &mut acc);
            for (o, a) in out.state_mut(i).iter_mut().zip(&acc) {
                *o += a;
            }
        }
        out
    }

    /// Sum of the contractor integrals at node `i` using `y_0..y_{i-1}`.
    pub(crate) fn contractor_sum(&self, i: usize, y: &Trajectory, path: &PathNoise<'_>, acc: &mut [f64]) {
        let c = &self.spec.contractors;
        let grid = self.grid();
        let n = self.modes();
        let t = &self.table;
        let noise = path.noise;
        let compensated = c.gamma4_measure == JumpContractorMeasure::Compensated;
        for j in 0..i {
            let s = grid.time(j);
            let g4 = c.gamma4.value(s);
            let mut drift = c.gamma1.value(s) + c.gamma2.value(s);
            drift += if compensated { -self.total_rate * g4 } else { self.total_rate * g4 };
            let g3 = c.gamma3.value(s);
            let yj = y.state(j);
            for k in 0..n {
                acc[k] += t.weight(FamilyKind::Sine, k, i - j) * drift * yj[k]
                    + t.sin(k, i - j) * g3 * yj[k] * noise.increment(j, k);
            }
        }
        if compensated && !c.gamma4.is_zero() {
            for e in &path.events {
                if e.step < i {
                    let g4 = c.gamma4.value(grid.time(e.step));
                    let yj = y.state(e.step);
                    for k in 0..n {
                        acc[k] += e.values[i * n + k] * g4 * yj[k];
                    }
                }
            }
        }
    }

    /// `x_{n+1} = x_n - [y_n + contractor integrals of y_n]`.
    pub fn update(&self, x: &Trajectory, y: &Trajectory, path: &PathNoise<'_>) -> Result<Trajectory> {
        self.check_grid(x)?;
        self.check_grid(y)?;
        Ok(x.sub(&self.contractor_operator(y, path)))
    }

    fn residual_norm(&self, y: &Trajectory) -> f64 {
        y.sup_norm_pow(self.spec.p)
    }

    fn divergence(&self, iterations: usize, residual_history: Vec<f64>) -> Error {
        let theta_exist = resolve_constants(self.spec)
            .map(|r| existence_criterion(&r.constants).theta)
            .unwrap_or(f64::NAN);
        Error::Divergence { iterations, residual_history, theta_exist }
    }

    /// Iterates until `sup_t |y_n(t)|^p < tol` on this path.
    pub fn solve(&self, path: &PathNoise<'_>, tol: f64, max_iter: usize) -> Result<PicardOutcome> {
        let mut history = Vec::new();
        match self.iterate(path, tol, max_iter, |st| history.push(st.residual_norm)) {
            Ok(x) => Ok(PicardOutcome { trajectory: x, iterations: history.len(), residual_history: history }),
            Err(Error::Divergence { .. }) => Err(self.divergence(history.len(), history)),
            Err(e) => Err(e),
        }
    }

    /// Runs the iteration, reporting each state to `observe`.
    pub fn iterate<F: FnMut(&PicardState)>(
        &self,
        path: &PathNoise<'_>,
        tol: f64,
        max_iter: usize,
        mut observe: F,
    ) -> Result<Trajectory> {
        if !(tol > 0.0) {
            return Err(Error::Domain(format!("tolerance must be > 0, got {tol}")));
        }
        let mut x = self.init.clone();
        for n in 0..max_iter.max(1) {
            let y = self.residual(&x, path)?;
            let r = self.residual_norm(&y);
            let state = PicardState { n, x, y, residual_norm: r };
            observe(&state);
            if !r.is_finite() || r > BLOWUP {
                break;
            }
            if r < tol {
                return Ok(state.x);
            }
            x = self.update(&state.x, &state.y, path)?;
        }
        Err(Error::Divergence { iterations: 0, residual_history: Vec::new(), theta_exist: f64::NAN })
    }

    /// One pass over the grid with the state at `t_i` frozen to `x(t_{i-1})`
    /// inside the neutral term.
    pub fn direct(&self, path: &PathNoise<'_>) -> Result<Trajectory> {
        if !self.spec.contractors.is_zero() {
            return Err(Error::UnsupportedRegime(
                "the direct scheme covers the Lipschitz regime only (all contractors zero)".into(),
            ));
        }
        let grid = self.grid();
        let n = self.modes();
        let mut x = Trajectory::zeros(grid, n);
        x.set_state(0, &self.phi0);
        let mut vals = NodeValues::new(grid.nodes() * n);
        let mut g_i = vec![0.0; n];
        let mut out = vec![0.0; n];
        for i in 1..grid.nodes() {
            let prev = x.state(i - 1).to_vec();
            let seg = self.segment(&x, i - 1, &prev);
            self.eval_node(&seg, &mut vals, i - 1)?;
            let frozen = HistorySegment::new(&x, i, &prev, self.spec.delay, &self.spec.phi);
            self.spec.coefficients.g.eval_into(&frozen, self.lambdas(), &mut g_i)?;
            self.assemble(i, &vals, &g_i, path, &mut out);
            x.set_state(i, &out);
        }
        Ok(x)
    }
}

/// `C(t)[phi(0) + g(0, phi)] + S(t) eta` on `grid`.
pub fn picard_initial(spec: &ProblemSpec, grid: TimeGrid) -> Result<Trajectory> {
    Ok(MildSolver::new(spec, grid)?.initial().clone())
}

pub fn mild_map(spec: &ProblemSpec, traj: &Trajectory, noise: &NoiseRealization) -> Result<Trajectory> {
    let s = MildSolver::new(spec, traj.grid())?;
    let path = s.attach(noise)?;
    s.mild_map(traj, &path)
}

pub fn picard_residual(spec: &ProblemSpec, x: &Trajectory, noise: &NoiseRealization) -> Result<Trajectory> {
    let s = MildSolver::new(spec, x.grid())?;
    let path = s.attach(noise)?;
    s.residual(x, &path)
}

pub fn picard_update(
    spec: &ProblemSpec,
    x: &Trajectory,
    y: &Trajectory,
    noise: &NoiseRealization,
) -> Result<Trajectory> {
    let s = MildSolver::new(spec, x.grid())?;
    let path = s.attach(noise)?;
    s.update(x, y, &path)
}

pub fn picard_solve(spec: &ProblemSpec, noise: &NoiseRealization, tol: f64, max_iter: usize) -> Result<PicardOutcome> {
    let s = MildSolver::new(spec, noise.grid)?;
    let path = s.attach(noise)?;
    s.solve(&path, tol, max_iter)
}

pub fn direct_scheme(spec: &ProblemSpec, noise: &NoiseRealization) -> Result<Trajectory> {
    let s = MildSolver::new(spec, noise.grid)?;
    let path = s.attach(noise)?;
    s.direct(&path)
}

/// Iterates all paths together; the stopping norm is
/// `sup_t mean_paths |y_n(t)|^p`.
pub fn picard_solve_ensemble(
    spec: &ProblemSpec,
    noises: &[NoiseRealization],
    tol: f64,
    max_iter: usize,
) -> Result<EnsembleOutcome> {
    let first = noises.first().ok_or_else(|| Error::Domain("empty ensemble".into()))?;
    let solver = MildSolver::new(spec, first.grid)?;
    let paths: Vec<PathNoise<'_>> = noises.iter().map(|n| solver.attach(n)).collect::<Result<_>>()?;
    let mut xs: Vec<Trajectory> = vec![solver.initial().clone(); paths.len()];
    let mut history = Vec::new();
    let grid = solver.grid();
    for _ in 0..max_iter.max(1) {
        let ys: Vec<Trajectory> = paths
            .par_iter()
            .zip(xs.par_iter())
            .map(|(p, x)| solver.residual(x, p))
            .collect::<Result<_>>()?;
        let r = (0..grid.nodes())
            .map(|i| {
                crate::stability::neumaier(ys.iter().map(|y| y.norm_pow(i, spec.p))) / ys.len() as f64
            })
            .fold(0.0, f64::max);
        history.push(r);
        if !r.is_finite() || r > BLOWUP {
            break;
        }
        if r < tol {
            return Ok(EnsembleOutcome { trajectories: xs, iterations: history.len(), residual_history: history });
        }
        xs = paths
            .par_iter()
            .zip(xs.par_iter().zip(ys.par_iter()))
            .map(|(p, (x, y))| solver.update(x, y, p))
            .collect::<Result<_>>()?;
    }
    Err(solver.divergence(history.len(), history))
}

/// Returns the coefficient with its scale multiplied by `factor`.
pub fn scaled(c: &Coefficient, factor: f64) -> Coefficient {
    let mut c = c.clone();
    match &mut c {
        Coefficient::Zero => {}
        Coefficient::Linear { scale, .. }
        | Coefficient::Saturating { scale, .. }
        | Coefficient::NormSaturating { scale, .. }
        | Coefficient::MemorySaturating { scale, .. }
        | Coefficient::Forcing { scale, .. } => *scale *= factor,
    }
    c
}
