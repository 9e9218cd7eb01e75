use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::Trajectory;
use crate::problem::ProblemSpec;
use crate::stability::{gronwall_constants, neumaier, resolve_constants};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UniquenessGap {
    /// `sup_t |x2(t) - x1(t)|^p`.
    pub gap: f64,
    pub oplus1: f64,
    pub oplus2: f64,
    /// `oplus_2 / (1 - oplus_1)`, the Gronwall rate.
    pub gronwall_rate: f64,
}

/// Gap between two solutions of the same problem on the same noise.
/// Fails when `oplus_1 >= 1`, where the Gronwall argument does not apply.
pub fn uniqueness_gap(spec: &ProblemSpec, x1: &Trajectory, x2: &Trajectory) -> Result<UniquenessGap> {
    let c = resolve_constants(spec)?.constants;
    let (oplus1, oplus2) = gronwall_constants(&c);
    if !(oplus1 < 1.0) {
        return Err(Error::InapplicableCriterion(format!("oplus_1 = {oplus1} >= 1")));
    }
    let gap = ensemble_gap(std::slice::from_ref(x1), std::slice::from_ref(x2), spec.p)?;
    Ok(UniquenessGap { gap, oplus1, oplus2, gronwall_rate: oplus2 / (1.0 - oplus1) })
}

/// `sup_t mean_paths |x2(t) - x1(t)|^p`.
pub fn ensemble_gap(x1: &[Trajectory], x2: &[Trajectory], p: f64) -> Result<f64> {
    if x1.len() != x2.len() || x1.is_empty() {
        return Err(Error::Domain("ensembles must be nonempty and of equal size".into()));
    }
    let grid = x1[0].grid();
    if x1.iter().chain(x2).any(|t| t.grid() != grid || t.modes() != x1[0].modes()) {
        return Err(Error::Domain("trajectories must share grid and modes".into()));
    }
    let diffs: Vec<Trajectory> = x1.iter().zip(x2).map(|(a, b)| b.sub(a)).collect();
    Ok((0..grid.nodes())
        .map(|i| neumaier(diffs.iter().map(|d| d.norm_pow(i, p))) / diffs.len() as f64)
        .fold(0.0, f64::max))
}
