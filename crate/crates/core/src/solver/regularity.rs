use serde::{Deserialize, Serialize};

use super::MildSolver;
use crate::error::{Error, Result};
use crate::grid::{norm, Trajectory};
use crate::noise::NoiseRealization;
use crate::problem::ProblemSpec;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegularitySolution {
    pub y: Trajectory,
    /// `max_t |L y - A| / max_t |A|`, with `L` re-applied to the solution.
    pub relative_residual: f64,
}

/// Solves `y + int S Gamma_1 y + int S Gamma_2 y + int S Gamma_3 y dw
/// + int int S Gamma_4 y lambda du ds = A` by forward substitution; the
/// discretized operator is the identity plus a strictly lower-triangular
/// part in time.
pub fn regularity_solve(
    spec: &ProblemSpec,
    x_field: &Trajectory,
    a_field: &Trajectory,
    noise: &NoiseRealization,
) -> Result<RegularitySolution> {
    if x_field.grid() != a_field.grid() || x_field.modes() != a_field.modes() {
        return Err(Error::Domain("x and A must share grid and modes".into()));
    }
    let solver = MildSolver::new(spec, a_field.grid())?;
    let path = solver.attach(noise)?;
    if spec.contractors.is_zero() {
        return Ok(RegularitySolution { y: a_field.clone(), relative_residual: 0.0 });
    }
    let grid = a_field.grid();
    let n = a_field.modes();
    let mut y = Trajectory::zeros(grid, n);
    y.set_state(0, a_field.state(0));
    let mut acc = vec![0.0; n];
    for i in 1..grid.nodes() {
        acc.iter_mut().for_each(|a| *a = 0.0);
        solver.contractor_sum(i, &y, &path, &mut acc);
        let a = a_field.state(i);
        let yi: Vec<f64> = a.iter().zip(&acc).map(|(a, c)| a - c).collect();
        y.set_state(i, &yi);
    }
    let back = solver.contractor_operator(&y, &path);
    let scale = (0..grid.nodes()).map(|i| norm(a_field.state(i))).fold(0.0, f64::max);
    let err = (0..grid.nodes())
        .map(|i| {
            let d: Vec<f64> = back.state(i).iter().zip(a_field.state(i)).map(|(b, a)| b - a).collect();
            norm(&d)
        })
        .fold(0.0, f64::max);
    let relative_residual = if scale > 0.0 { err / scale } else { err };
    Ok(RegularitySolution { y, relative_residual })
}
