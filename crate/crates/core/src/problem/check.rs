//! Monte Carlo check of the contractor inequalities for `f, g, G, sigma`.

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use super::history::HistorySegment;
use super::ProblemSpec;
use crate::error::{Error, Result};
use crate::grid::{norm, TimeGrid, Trajectory};
use crate::kernels::{FamilyKind, KernelTable};
use crate::noise::{path_rng, sample_noise, NoiseRealization};

const CHECK_STEPS: usize = 16;
const RATIO_TOLERANCE: f64 = 1e-9;

/// Worst observed ratio for one inequality or contractor bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityCheck {
    pub label: String,
    pub constant: f64,
    /// `None` when the left side was positive against a zero constant.
    pub max_ratio: Option<f64>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContractorReport {
    pub samples: usize,
    pub tolerance: f64,
    /// Inequalities (i)-(v) in order f, g, G, sigma (quadratic), sigma (power 2p).
    pub inequalities: Vec<InequalityCheck>,
    /// `|Gamma_i|^p <= c_i` and the two `Gamma_4` bounds.
    pub contractor_bounds: Vec<InequalityCheck>,
    pub pass: bool,
}

struct Tracker {
    label: &'static str,
    constant: f64,
    max: f64,
    infinite: bool,
}

impl Tracker {
    fn new(label: &'static str, constant: f64) -> Self {
        Self { label, constant, max: 0.0, infinite: false }
    }

    /// Records `lhs <= constant * scale`.
    fn record(&mut self, lhs: f64, scale: f64) {
        if self.constant == 0.0 || scale == 0.0 {
            if lhs > 0.0 {
                self.infinite = true;
            }
        } else {
            self.max = self.max.max(lhs / (self.constant * scale));
        }
    }

    fn finish(self) -> InequalityCheck {
        let pass = !self.infinite && self.max <= 1.0 + RATIO_TOLERANCE;
        InequalityCheck {
            label: self.label.into(),
            constant: self.constant,
            max_ratio: if self.infinite { None } else { Some(self.max) },
            pass,
        }
    }
}

fn random_path(grid: TimeGrid, modes: usize, rng: &mut impl Rng) -> Trajectory {
    let scale = 10f64.powf(rng.gen_range(-1.0..1.0));
    let mut t = Trajectory::zeros(grid, modes);
    for i in 0..grid.nodes() {
        for v in t.state_mut(i) {
            let z: f64 = rng.sample(StandardNormal);
            *v = scale * z;
        }
    }
    t
}

/// `x + y + int S Gamma_1 y + int S Gamma_2 y + int S Gamma_3 y dw + int int S Gamma_4 y lambda du`.
fn perturbed(
    spec: &ProblemSpec,
    table: &KernelTable,
    x: &Trajectory,
    y: &Trajectory,
    noise: &NoiseRealization,
    total_rate: f64,
) -> Trajectory {
    let grid = x.grid();
    let c = &spec.contractors;
    let mut z = x.add(y);
    if c.is_zero() {
        return z;
    }
    let n = spec.modes();
    for i in 1..grid.nodes() {
        let zi = z.state_mut(i);
        for j in 0..i {
            let s = grid.time(j);
            let drift = c.gamma1.value(s) + c.gamma2.value(s) + total_rate * c.gamma4.value(s);
            let g3 = c.gamma3.value(s);
            let yj = y.state(j);
            for k in 0..n {
                zi[k] += table.weight(FamilyKind::Sine, k, i - j) * drift * yj[k]
                    + table.sin(k, i - j) * g3 * yj[k] * noise.increment(j, k);
            }
        }
    }
    z
}

fn check(spec: &ProblemSpec, sample_count: usize, seed: u64, lipschitz: bool) -> Result<ContractorReport> {
    if sample_count == 0 {
        return Err(Error::Domain("sample_count must be >= 1".into()));
    }
    spec.validate()?;
    let p = spec.p;
    let n = spec.modes();
    let lambdas = spec.generator.eigenvalues();
    let grid = TimeGrid::covering(spec.horizon, spec.horizon / CHECK_STEPS as f64)?;
    let table = KernelTable::new(spec.alpha, lambdas, grid)?;
    let rule = spec.jumps.mark_quadrature();
    let total_rate: f64 = rule.iter().map(|(_, w)| w).sum();
    let q: Vec<f64> = (0..n).map(|k| spec.wiener.q_eigenvalues.get(k).copied().unwrap_or(0.0)).collect();
    let gamma_w: Vec<f64> = lambdas.iter().map(|l| l.abs().powf(spec.criterion.gamma)).collect();
    let co = &spec.coefficients;
    let ct = &spec.contractors;
    let a = co.a_hat;

    let mut ineq = [
        Tracker::new("(i) f", a[1]),
        Tracker::new("(ii) g", a[0]),
        Tracker::new("(iii) G", a[2]),
        Tracker::new("(iv) sigma, quadratic", a[3]),
        Tracker::new("(v) sigma, power 2p", a[4]),
    ];
    let mut bounds = [
        Tracker::new("|Gamma_1|^p <= c1", ct.c1),
        Tracker::new("|Gamma_2|^p <= c2", ct.c2),
        Tracker::new("|Gamma_3|^p <= c3", ct.c3),
        Tracker::new("|Gamma_4|^(p/2) <= c4", ct.c4),
        Tracker::new("|Gamma_4|^p <= c4_hat", ct.c4_hat),
    ];

    let (mut fx, mut fz) = (vec![0.0; n], vec![0.0; n]);
    let mut d = vec![0.0; n];
    for s in 0..sample_count as u64 {
        let mut rng = path_rng(seed, s, b"contractor-check");
        let x = random_path(grid, n, &mut rng);
        let y = random_path(grid, n, &mut rng);
        let noise = sample_noise(&spec.wiener, &spec.jumps, grid, seed, s)?;
        let z = if lipschitz { x.add(&y) } else { perturbed(spec, &table, &x, &y, &noise, total_rate) };
        for i in 0..grid.nodes() {
            let t = grid.time(i);
            let sx = HistorySegment::new(&x, i, x.state(i), spec.delay, &spec.phi);
            let sz = HistorySegment::new(&z, i, z.state(i), spec.delay, &spec.phi);
            let yi = y.state(i);
            let ynorm = norm(yi).powf(p);
            let (g1, g2, g3, g4) = if lipschitz {
                (0.0, 0.0, 0.0, 0.0)
            } else {
                (ct.gamma1.value(t), ct.gamma2.value(t), ct.gamma3.value(t), ct.gamma4.value(t))
            };

            co.f.eval_into(&sx, lambdas, &mut fx)?;
            co.f.eval_into(&sz, lambdas, &mut fz)?;
            for k in 0..n {
                d[k] = fz[k] - fx[k] - g1 * yi[k];
            }
            ineq[0].record(norm(&d).powf(p), ynorm);

            co.g.eval_into(&sx, lambdas, &mut fx)?;
            co.g.eval_into(&sz, lambdas, &mut fz)?;
            for k in 0..n {
                d[k] = gamma_w[k] * (fz[k] - fx[k]) - g2 * yi[k];
            }
            ineq[1].record(norm(&d).powf(p), ynorm);

            co.diffusion.eval_into(&sx, lambdas, &mut fx)?;
            co.diffusion.eval_into(&sz, lambdas, &mut fz)?;
            let hs: f64 = (0..n).map(|k| q[k] * (fz[k] - fx[k] - g3 * yi[k]).powi(2)).sum();
            ineq[2].record(hs.sqrt().powf(p), ynorm);

            co.jump.base.eval_into(&sx, lambdas, &mut fx)?;
            co.jump.base.eval_into(&sz, lambdas, &mut fz)?;
            let (mut quad, mut high) = (0.0, 0.0);
            for (u, w) in &rule {
                let m = co.jump.mark_factor(*u);
                for k in 0..n {
                    d[k] = m * (fz[k] - fx[k]) - g4 * yi[k];
                }
                let r = norm(&d);
                quad += w * r * r;
                high += w * r.powf(2.0 * p);
            }
            ineq[3].record(quad.powf(p / 2.0), ynorm);
            ineq[4].record(high.sqrt(), ynorm);

            if !lipschitz {
                bounds[0].record(g1.abs().powf(p), 1.0);
                bounds[1].record(g2.abs().powf(p), 1.0);
                bounds[2].record(g3.abs().powf(p), 1.0);
                bounds[3].record(g4.abs().powf(p / 2.0), 1.0);
                bounds[4].record(g4.abs().powf(p), 1.0);
            }
        }
    }
    let inequalities: Vec<InequalityCheck> = ineq.into_iter().map(Tracker::finish).collect();
    let contractor_bounds: Vec<InequalityCheck> = bounds.into_iter().map(Tracker::finish).collect();
    let pass = inequalities.iter().chain(&contractor_bounds).all(|c| c.pass);
    Ok(ContractorReport { samples: sample_count, tolerance: RATIO_TOLERANCE, inequalities, contractor_bounds, pass })
}

/// Draws `sample_count` random pairs `(x, y)` of grid functions and reports,
/// per inequality, the largest ratio of left side to `a_hat_i |y|^p` seen at
/// any node. Ratios are taken pathwise, which implies the bound in mean.
pub fn check_contractor_conditions(spec: &ProblemSpec, sample_count: usize, seed: u64) -> Result<ContractorReport> {
    check(spec, sample_count, seed, false)
}

/// The same sampling with the perturbation replaced by `x + y` and all
/// contractors ignored: the plain Lipschitz conditions.
pub fn check_lipschitz_conditions(spec: &ProblemSpec, sample_count: usize, seed: u64) -> Result<ContractorReport> {
    check(spec, sample_count, seed, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::{example_problem, zero_problem, Coefficient, ContractorMap};

    #[test]
    fn zero_coefficients_pass_with_zero_ratios() {
        let spec = zero_problem(3);
        let r = check_contractor_conditions(&spec, 20, 1).unwrap();
        assert!(r.pass);
        assert!(r.inequalities.iter().all(|c| c.max_ratio == Some(0.0)));
    }

    #[test]
    fn linear_drift_needs_lipschitz_constant() {
        let mut spec = zero_problem(3);
        spec.coefficients.f = Coefficient::Linear { scale: 0.5, rate: 0.0, lag: 0.0, smoothing: 0.0 };
        spec.coefficients.a_hat[1] = 0.25;
        let r = check_contractor_conditions(&spec, 20, 2).unwrap();
        assert!(r.pass);
        assert!((r.inequalities[0].max_ratio.unwrap() - 1.0).abs() < 1e-12);
        spec.coefficients.a_hat[1] = 0.24;
        assert!(!check_contractor_conditions(&spec, 20, 2).unwrap().pass);
        spec.coefficients.a_hat[1] = 0.0;
        let r = check_contractor_conditions(&spec, 5, 2).unwrap();
        assert_eq!(r.inequalities[0].max_ratio, None);
        assert!(!r.pass);
    }

    #[test]
    fn zero_contractors_match_lipschitz_path() {
        let spec = example_problem();
        let a = check_contractor_conditions(&spec, 50, 9).unwrap();
        let b = check_lipschitz_conditions(&spec, 50, 9).unwrap();
        assert_eq!(a.inequalities, b.inequalities);
    }

    #[test]
    fn contractor_bounds_are_checked() {
        let mut spec = zero_problem(2);
        spec.contractors.gamma1 = ContractorMap::Constant { value: 0.5 };
        spec.contractors.c1 = 0.25;
        let r = check_contractor_conditions(&spec, 5, 4).unwrap();
        assert!(r.contractor_bounds[0].pass);
        assert!((r.contractor_bounds[0].max_ratio.unwrap() - 1.0).abs() < 1e-12);
        spec.contractors.c1 = 0.2;
        let r = check_contractor_conditions(&spec, 5, 4).unwrap();
        assert!(!r.contractor_bounds[0].pass && !r.pass);
    }
}
