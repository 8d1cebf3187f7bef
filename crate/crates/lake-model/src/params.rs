use crate::LakeError;

/// Flow rates (mi^3/year), volumes (mi^3) and initial loads of the
/// three-lake system. `fJI` is the flow from lake I into lake J.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LakeParams {
    pub f21: f64,
    pub f31: f64,
    pub f32: f64,
    pub f13: f64,
    pub v1: f64,
    pub v2: f64,
    pub v3: f64,
    pub l10: f64,
    pub l20: f64,
    pub l30: f64,
}

impl Default for LakeParams {
    /// The reference parameter set used throughout the bundled data:
    /// clean lakes at the start, volumes of the three basins, and
    /// balanced channel flows.
    fn default() -> Self {
        Self {
            f21: 18.0,
            f31: 20.0,
            f32: 18.0,
            f13: 38.0,
            v1: 2900.0,
            v2: 850.0,
            v3: 1180.0,
            l10: 0.0,
            l20: 0.0,
            l30: 0.0,
        }
    }
}

impl LakeParams {
    /// Check hard invariants and return soft warnings.
    ///
    /// Non-finite or negative flows/loads and non-positive volumes are
    /// errors. An unbalanced channel network (water volume not
    /// conserved: `f13 != f31 + f21` or `f21 != f32`) keeps the system
    /// well-defined, so it is only reported as a warning.
    pub fn validate(&self) -> Result<Vec<String>, LakeError> {
        let flows = [("f21", self.f21), ("f31", self.f31), ("f32", self.f32), ("f13", self.f13)];
        for (name, v) in flows {
            if !v.is_finite() || v < 0.0 {
                return Err(LakeError::Params(format!("{name} = {v} must be >= 0")));
            }
        }
        for (name, v) in [("v1", self.v1), ("v2", self.v2), ("v3", self.v3)] {
            if !v.is_finite() || v <= 0.0 {
                return Err(LakeError::Params(format!("{name} = {v} must be > 0")));
            }
        }
        for (name, v) in [("l10", self.l10), ("l20", self.l20), ("l30", self.l30)] {
            if !v.is_finite() || v < 0.0 {
                return Err(LakeError::Params(format!("{name} = {v} must be >= 0")));
            }
        }

        let mut warnings = Vec::new();
        let tol = 1e-12 * self.f13.abs().max(1.0);
        if (self.f13 - (self.f31 + self.f21)).abs() > tol {
            warnings.push(format!(
                "flow imbalance: f13 = {} but f31 + f21 = {}",
                self.f13,
                self.f31 + self.f21
            ));
        }
        if (self.f21 - self.f32).abs() > 1e-12 * self.f21.abs().max(1.0) {
            warnings.push(format!(
                "flow imbalance: f21 = {} but f32 = {}",
                self.f21, self.f32
            ));
        }
        Ok(warnings)
    }

    pub fn initial_state(&self) -> [f64; 3] {
        [self.l10, self.l20, self.l30]
    }
}
