//! Numerical kernel for fractal-fractional integration with a
//! Mittag-Leffler memory kernel.
//!
//! The operator acting on a function `f` has two pieces: a local part
//! proportional to `s^(sigma-1) f(s)` and a memory integral of
//! `w^(sigma-1) (s-w)^(theta-1) f(w)`. Everything downstream (the
//! time-steppers, the lake model analysis) is built from the small set
//! of primitives exported here: the gamma function, the kernel
//! normalisation coefficient, the two families of product-integration
//! weights and a direct quadrature rule used as a test oracle.

mod error;
mod gamma;
mod grid;
mod quad;
mod weights;

pub use error::CoreError;
pub use gamma::{ab_coefficient, gamma};
pub use grid::{FFOrder, GridSpec};
pub use quad::ff_integral_reference;
pub use weights::{abm_weights, npm_weights};
