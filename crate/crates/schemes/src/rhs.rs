use std::fmt;
use std::sync::Arc;

/// Right-hand side of a first-order system, `Q(s, state)`.
///
/// The closure must be deterministic and total: the same `(s, state)`
/// always yields the same output, and every finite input produces
/// some output (non-finite values are caught by the steppers, not
/// here). Cloning is cheap; the closure is shared.
#[derive(Clone)]
pub struct SystemRhs {
    dimension: usize,
    eval: Arc<dyn Fn(f64, &[f64], &mut [f64]) + Send + Sync>,
}

impl SystemRhs {
    /// Panics if `dimension` is zero.
    pub fn new<F>(dimension: usize, eval: F) -> Self
    where
        F: Fn(f64, &[f64], &mut [f64]) + Send + Sync + 'static,
    {
        assert!(dimension >= 1, "system dimension must be at least 1");
        Self { dimension, eval: Arc::new(eval) }
    }

    /// Convenience constructor for scalar problems.
    pub fn scalar<F>(eval: F) -> Self
    where
        F: Fn(f64, f64) -> f64 + Send + Sync + 'static,
    {
        Self::new(1, move |s, state, out| out[0] = eval(s, state[0]))
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Evaluate into a caller-provided buffer of length `dimension`.
    pub fn eval_into(&self, s: f64, state: &[f64], out: &mut [f64]) {
        debug_assert_eq!(state.len(), self.dimension);
        debug_assert_eq!(out.len(), self.dimension);
        (self.eval)(s, state, out);
    }

    pub fn eval(&self, s: f64, state: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.dimension];
        self.eval_into(s, state, &mut out);
        out
    }
}

impl fmt::Debug for SystemRhs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SystemRhs")
            .field("dimension", &self.dimension)
            .finish_non_exhaustive()
    }
}
