//! Pollution transport between three connected lakes.
//!
//! Lake 1 receives the contaminant input `c(s)` and drains into lakes
//! 2 and 3; lake 2 drains into lake 3; lake 3 feeds back into lake 1.
//! State components are the pollutant loads `L1, L2, L3`. Internal
//! fluxes cancel pairwise, so the total load only changes through the
//! input: `Q1 + Q2 + Q3 = c(s)`.
//!
//! Besides the right-hand side itself the crate carries the analytic
//! checkers used to certify a run: per-lake Lipschitz constants, the
//! contraction bracket of the fixed-point argument, and the stability
//! constants that exist whenever the bracket times a Lipschitz
//! constant stays below one.

mod analysis;
mod input;
mod params;
mod system;

pub use analysis::{
    analyze, lipschitz_constants, ulam_hyers_constants, uniqueness_bracket, AnalysisReport,
};
pub use input::InputModel;
pub use params::LakeParams;
pub use system::lake_rhs;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LakeError {
    #[error(transparent)]
    Core(#[from] ffml_core::CoreError),
    /// Parameter set violates a hard invariant.
    #[error("invalid parameters: {0}")]
    Params(String),
}
