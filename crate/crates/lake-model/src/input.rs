use crate::LakeError;

/// Contaminant inflow `c(s)` entering lake 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InputModel {
    /// `c(s) = mu * s`
    Linear { mu: f64 },
    /// `c(s) = r * exp(-p * s)`, `p > 0`
    ExponentialDecay { r: f64, p: f64 },
    /// `c(s) = a + tau * sin(b * s)`
    Periodic { a: f64, tau: f64, b: f64 },
    Zero,
}

impl InputModel {
    pub fn eval(&self, s: f64) -> f64 {
        match *self {
            InputModel::Linear { mu } => mu * s,
            InputModel::ExponentialDecay { r, p } => r * (-p * s).exp(),
            InputModel::Periodic { a, tau, b } => a + tau * (b * s).sin(),
            InputModel::Zero => 0.0,
        }
    }

    pub fn validate(&self) -> Result<(), LakeError> {
        let fields: &[f64] = match self {
            InputModel::Linear { mu } => &[*mu],
            InputModel::ExponentialDecay { r, p } => {
                if !(*p > 0.0) {
                    return Err(LakeError::Params(format!(
                        "exponential decay rate p = {p} must be > 0"
                    )));
                }
                &[*r, *p]
            }
            InputModel::Periodic { a, tau, b } => &[*a, *tau, *b],
            InputModel::Zero => &[],
        };
        for v in fields {
            if !v.is_finite() {
                return Err(LakeError::Params(format!("non-finite input parameter {v}")));
            }
        }
        Ok(())
    }

    /// Tag used in file names and config files.
    pub fn tag(&self) -> &'static str {
        match self {
            InputModel::Linear { .. } => "linear",
            InputModel::ExponentialDecay { .. } => "exp",
            InputModel::Periodic { .. } => "periodic",
            InputModel::Zero => "zero",
        }
    }
}

impl Default for InputModel {
    /// Linear ramp with the reference slope.
    fn default() -> Self {
        InputModel::Linear { mu: 100.0 }
    }
}
