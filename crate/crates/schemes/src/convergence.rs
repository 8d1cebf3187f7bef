use ffml_core::{FFOrder, GridSpec};

use crate::rhs::SystemRhs;
use crate::stepper::simulate;
use crate::trajectory::Scheme;
use crate::SchemeError;

/// Observed self-convergence order of the selected scheme.
///
/// Runs the problem at steps `h`, `h/2` and `h/4` over the same
/// horizon, takes the sup-norm difference of consecutive refinements
/// over the nodes of the base grid, and returns
/// `log2(|T_h - T_h/2| / |T_h/2 - T_h/4|)`.
///
/// Fails with [`SchemeError::Degenerate`] when either difference is
/// exactly zero (e.g. a vanishing right-hand side), since no order
/// can be read off.
pub fn self_convergence_order(
    rhs: &SystemRhs,
    init: &[f64],
    order: FFOrder,
    base_grid: GridSpec,
    scheme: Scheme,
) -> Result<f64, SchemeError> {
    let mid_grid = GridSpec::new(base_grid.step / 2.0, base_grid.horizon)?;
    let fine_grid = GridSpec::new(base_grid.step / 4.0, base_grid.horizon)?;
    let coarse = simulate(rhs, init, order, base_grid, scheme)?;
    let mid = simulate(rhs, init, order, mid_grid, scheme)?;
    let fine = simulate(rhs, init, order, fine_grid, scheme)?;

    let mut d_coarse_mid = 0.0_f64;
    let mut d_mid_fine = 0.0_f64;
    for k in 0..=base_grid.node_count {
        for i in 0..rhs.dimension() {
            d_coarse_mid = d_coarse_mid.max((coarse.states[k][i] - mid.states[2 * k][i]).abs());
            d_mid_fine = d_mid_fine.max((mid.states[2 * k][i] - fine.states[4 * k][i]).abs());
        }
    }
    if d_coarse_mid == 0.0 || d_mid_fine == 0.0 {
        return Err(SchemeError::Degenerate);
    }
    Ok((d_coarse_mid / d_mid_fine).log2())
}
