//! Time-stepping schemes for fractal-fractional initial value
//! problems with a Mittag-Leffler kernel.
//!
//! Both schemes advance the Volterra form of the problem directly:
//! the state at node `k+1` is the initial state plus a local term and
//! a weighted sum over the full sample history, so the cost of a run
//! is quadratic in the node count. `simulate_abm` uses a two-point
//! product-trapezoidal history rule, `simulate_npm` a three-point
//! (quadratic) one. At `theta = sigma = 1` they reduce to the
//! classical second- and third-order Adams-Bashforth methods with
//! frozen starting values.

mod convergence;
mod rhs;
mod stepper;
mod trajectory;

pub use convergence::self_convergence_order;
pub use rhs::SystemRhs;
pub use stepper::{simulate, simulate_abm, simulate_npm};
pub use trajectory::{Scheme, Trajectory};

use thiserror::Error;

/// Errors raised while integrating.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SchemeError {
    #[error(transparent)]
    Core(#[from] ffml_core::CoreError),
    /// Initial state length does not match the system dimension.
    #[error("dimension mismatch: rhs has dimension {rhs}, initial state {init}")]
    Dimension { rhs: usize, init: usize },
    /// A state entry became non-finite; `node` is the first bad node.
    #[error("state overflow at node {node} (s = {s})")]
    Overflow { node: usize, s: f64 },
    /// Grid refinement produced identical trajectories, so no
    /// convergence order can be estimated.
    #[error("degenerate refinement: trajectory differences vanish")]
    Degenerate,
}
