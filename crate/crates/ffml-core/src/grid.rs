use crate::error::CoreError;

/// Order pair of the fractal-fractional operator.
///
/// `theta` is the order of the memory kernel, `sigma` the fractal
/// order of the time variable. Both are restricted to `(0, 1]`;
/// `theta = sigma = 1` recovers the classical first-order derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FFOrder {
    pub theta: f64,
    pub sigma: f64,
}

impl FFOrder {
    pub fn new(theta: f64, sigma: f64) -> Result<Self, CoreError> {
        for (name, v) in [("theta", theta), ("sigma", sigma)] {
            if !v.is_finite() || v <= 0.0 || v > 1.0 {
                return Err(CoreError::Domain(format!("{name} = {v} outside (0, 1]")));
            }
        }
        Ok(Self { theta, sigma })
    }

    /// The classical case `theta = sigma = 1`.
    pub fn classical() -> Self {
        Self { theta: 1.0, sigma: 1.0 }
    }
}

/// Uniform grid `s_k = k * step` for `k = 0 ..= node_count`, where
/// `node_count = floor(horizon / step)` (with a small tolerance so
/// that e.g. `horizon = 10`, `step = 0.1` lands on 100 exactly).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub step: f64,
    pub horizon: f64,
    pub node_count: usize,
}

impl GridSpec {
    pub fn new(step: f64, horizon: f64) -> Result<Self, CoreError> {
        if !step.is_finite() || step <= 0.0 {
            return Err(CoreError::Grid(format!("step = {step} must be positive")));
        }
        if !horizon.is_finite() || horizon <= 0.0 {
            return Err(CoreError::Grid(format!(
                "horizon = {horizon} must be positive"
            )));
        }
        let ratio = horizon / step;
        if ratio > 50_000_000.0 {
            return Err(CoreError::Grid(format!(
                "horizon / step = {ratio:.0} nodes is too many"
            )));
        }
        let node_count = if (ratio - ratio.round()).abs() <= 1e-9 * ratio.max(1.0) {
            ratio.round() as usize
        } else {
            ratio.floor() as usize
        };
        Ok(Self { step, horizon, node_count })
    }

    /// Abscissa of node `k`.
    pub fn node(&self, k: usize) -> f64 {
        k as f64 * self.step
    }

    /// Index of the node at time `s`, if `s` lies on the grid
    /// (within a 1e-9 relative tolerance).
    pub fn node_at(&self, s: f64) -> Option<usize> {
        if s < 0.0 {
            return None;
        }
        let ratio = s / self.step;
        let k = ratio.round();
        if (ratio - k).abs() <= 1e-9 * ratio.max(1.0) && (k as usize) <= self.node_count {
            Some(k as usize)
        } else {
            None
        }
    }
}
