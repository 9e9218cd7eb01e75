//! Built-in problem instances.

use super::coefficients::{Coefficient, CoefficientSet, ContractorSet, JumpCoefficient};
use super::history::InitialHistory;
use super::{CriterionConfig, ProblemSpec};
use crate::noise::{JumpSpec, QWienerSpec};
use crate::spectral::SpectralGenerator;

/// The worked example: order 5/3 on the Dirichlet Laplacian of `(0, pi)`
/// truncated to 8 modes, zero contractors, and the published constants
/// `M = 0.002`, `p = 2`, evaluation time 1/2, `C_p = k(p) = 1`,
/// `a_hat_1..4 = 1/3`, `a_hat_5 = 0.02`, `|A^{-gamma}| = pi^{-3/2}`.
///
/// Coefficients, with `t` the running time:
/// * `g = (1/3) e^{-2t} A^{-1/2} x`
/// * `f = e^{t/2} x / (49 + |x|)`
/// * `G = e^t / (25 + |x|)` on every noise mode
/// * `sigma = 0.2 e^{-6t} u x`, marks uniform on `[0, 1]` at unit rate
pub fn example_problem() -> ProblemSpec {
    let modes = 8;
    let generator = SpectralGenerator::dirichlet_laplacian(modes)
        .expect("laplacian spectrum")
        .with_labels("sqrt(2/pi) sin(n x) on (0, pi)");
    let third = 1.0 / 3.0;
    ProblemSpec {
        alpha: 5.0 / 3.0,
        p: 2.0,
        horizon: 1.0,
        delay: 0.0,
        generator,
        coefficients: CoefficientSet {
            g: Coefficient::Linear { scale: third, rate: -2.0, lag: 0.0, smoothing: 0.5 },
            f: Coefficient::Saturating { scale: 1.0, rate: 0.5, offset: 49.0 },
            diffusion: Coefficient::NormSaturating { scale: 1.0, rate: 1.0, offset: 25.0 },
            jump: JumpCoefficient::new(
                Coefficient::Linear { scale: 0.2, rate: -6.0, lag: 0.0, smoothing: 0.0 },
                1.0,
            ),
            a_hat: [third, third, third, third, 0.02],
        },
        contractors: ContractorSet::default(),
        wiener: QWienerSpec {
            q_eigenvalues: (1..=modes).map(|k| 1.0 / (k * k) as f64).collect(),
        },
        jumps: JumpSpec::uniform(0.0, 1.0, 1.0).expect("unit-rate marks"),
        phi: InitialHistory::constant((1..=modes).map(|k| 1.0 / (k * k) as f64).collect()),
        eta: vec![0.0; modes],
        criterion: CriterionConfig {
            t_eval: Some(0.5),
            k_p: 1.0,
            c_p: Some(1.0),
            m: Some(0.002),
            c_mu: Some(1.0),
            mu_smoothing: 0.5,
            gamma: 0.5,
            inv_power_norm: Some(std::f64::consts::PI.powf(-1.5)),
            d2: Some(0.002),
            a2: Some(1.0),
            published: Some([0.007436, 0.00874]),
            ..CriterionConfig::default()
        },
    }
}

/// Strongly damped instance with small multiplicative noise, used for the
/// moment-decay pipeline: order 1.2, `lambda_n = -4 n^2` on 4 modes,
/// horizon 3.
pub fn damped_problem() -> ProblemSpec {
    let modes = 4;
    let lambdas = (1..=modes).map(|n| -4.0 * (n * n) as f64).collect();
    let weights: Vec<f64> = (0..modes).map(|k| 0.5f64.powi(k as i32)).collect();
    ProblemSpec {
        alpha: 1.2,
        p: 2.0,
        horizon: 3.0,
        delay: 0.0,
        generator: SpectralGenerator::new(lambdas).expect("negative spectrum"),
        coefficients: CoefficientSet {
            g: Coefficient::Zero,
            f: Coefficient::Linear { scale: -0.1, rate: 0.0, lag: 0.0, smoothing: 0.0 },
            diffusion: Coefficient::Linear { scale: 0.1, rate: 0.0, lag: 0.0, smoothing: 0.0 },
            jump: JumpCoefficient::new(
                Coefficient::Linear { scale: 0.1, rate: 0.0, lag: 0.0, smoothing: 0.0 },
                0.0,
            ),
            a_hat: [0.0, 0.01, 0.01, 0.01, 0.01],
        },
        contractors: ContractorSet::default(),
        wiener: QWienerSpec { q_eigenvalues: weights.clone() },
        jumps: JumpSpec::point_mass(1.0, 1.0).expect("unit-rate point mass"),
        phi: InitialHistory::constant(weights),
        eta: vec![0.0; modes],
        criterion: CriterionConfig { t_eval: Some(1.0), ..CriterionConfig::default() },
    }
}

/// All coefficients zero; `phi(0) = e_1`.
pub fn zero_problem(modes: usize) -> ProblemSpec {
    let mut phi = vec![0.0; modes];
    phi[0] = 1.0;
    ProblemSpec {
        alpha: 1.5,
        p: 2.0,
        horizon: 1.0,
        delay: 0.0,
        generator: SpectralGenerator::dirichlet_laplacian(modes).expect("laplacian spectrum"),
        coefficients: CoefficientSet { a_hat: [0.0; 5], ..CoefficientSet::default() },
        contractors: ContractorSet::default(),
        wiener: QWienerSpec::default(),
        jumps: JumpSpec::none(),
        phi: InitialHistory::constant(phi),
        eta: vec![0.0; modes],
        criterion: CriterionConfig::default(),
    }
}
