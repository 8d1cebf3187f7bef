use std::fmt;

use ffml_core::{ab_coefficient, gamma, FFOrder};

use crate::params::LakeParams;
use crate::LakeError;

/// Per-lake Lipschitz constants of the right-hand side in its own
/// state component: the outflow rate of each lake.
pub fn lipschitz_constants(params: &LakeParams) -> [f64; 3] {
    [
        (params.f31 + params.f21) / params.v1,
        params.f32 / params.v2,
        params.f13 / params.v3,
    ]
}

/// Contraction bracket of the fixed-point argument on `[0, S]`:
///
/// ```text
/// B = (1-theta) sigma S^(sigma-1) / AB(theta)
///   + theta sigma S^(theta+sigma-1) Gamma(sigma) / (AB(theta) Gamma(theta+sigma))
/// ```
///
/// A solution is certified unique for lake `j` when `B * alpha_j < 1`.
/// At `theta = sigma = 1` the bracket equals `S`.
pub fn uniqueness_bracket(order: FFOrder, horizon: f64) -> Result<f64, LakeError> {
    if !horizon.is_finite() || horizon <= 0.0 {
        return Err(LakeError::Params(format!("horizon = {horizon} must be > 0")));
    }
    let FFOrder { theta, sigma } = order;
    let ab = ab_coefficient(theta)?;
    // Guard the theta = 1 case: the local coefficient is zero and must
    // not turn a diverging power into 0 * inf = NaN.
    let local_coef = (1.0 - theta) * sigma / ab;
    let local = if local_coef == 0.0 {
        0.0
    } else {
        local_coef * horizon.powf(sigma - 1.0)
    };
    let memory = theta * sigma * horizon.powf(theta + sigma - 1.0) * gamma(sigma)?
        / (ab * gamma(theta + sigma)?);
    let bracket = local + memory;
    if !bracket.is_finite() {
        return Err(LakeError::Params("bracket diverges near 0".into()));
    }
    Ok(bracket)
}

/// Stability constants `a_Q_j = B / (1 - B * alpha_j)`, present only
/// where the contraction condition `B * alpha_j < 1` holds.
pub fn ulam_hyers_constants(
    order: FFOrder,
    horizon: f64,
    alphas: [f64; 3],
) -> Result<[Option<f64>; 3], LakeError> {
    assert!(
        alphas.iter().all(|a| *a >= 0.0),
        "lipschitz constants must be nonnegative"
    );
    let bracket = uniqueness_bracket(order, horizon)?;
    Ok(alphas.map(|alpha| {
        if bracket * alpha < 1.0 {
            Some(bracket / (1.0 - bracket * alpha))
        } else {
            None
        }
    }))
}

/// Everything the analytic checkers can say about a configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisReport {
    pub horizon: f64,
    pub alphas: [f64; 3],
    pub bracket: f64,
    pub uniqueness_ok: [bool; 3],
    pub uh_constants: [Option<f64>; 3],
}

/// Run all checkers for one parameter set, order and horizon.
pub fn analyze(
    params: &LakeParams,
    order: FFOrder,
    horizon: f64,
) -> Result<AnalysisReport, LakeError> {
    let alphas = lipschitz_constants(params);
    let bracket = uniqueness_bracket(order, horizon)?;
    let uh_constants = ulam_hyers_constants(order, horizon, alphas)?;
    Ok(AnalysisReport {
        horizon,
        alphas,
        bracket,
        uniqueness_ok: alphas.map(|a| bracket * a < 1.0),
        uh_constants,
    })
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "contraction bracket on [0, {}]: B = {:.6}",
            self.horizon, self.bracket
        )?;
        for j in 0..3 {
            let product = self.bracket * self.alphas[j];
            write!(
                f,
                "lake {}: alpha = {:.6}, B*alpha = {:.6} -> ",
                j + 1,
                self.alphas[j],
                product
            )?;
            match self.uh_constants[j] {
                Some(a) => writeln!(f, "unique solution, stability constant {a:.6}")?,
                None => writeln!(f, "no contraction certificate")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn reference_lipschitz_constants() {
        let a = lipschitz_constants(&LakeParams::default());
        assert_eq!(a, [38.0 / 2900.0, 18.0 / 850.0, 38.0 / 1180.0]);
    }

    #[test]
    fn unit_volume_lipschitz_constants() {
        let p = LakeParams {
            f21: 1.0,
            f31: 1.0,
            f32: 1.0,
            f13: 2.0,
            v1: 1.0,
            v2: 1.0,
            v3: 1.0,
            ..LakeParams::default()
        };
        assert_eq!(lipschitz_constants(&p), [2.0, 1.0, 2.0]);
    }

    #[test]
    fn half_order_bracket_value() {
        // theta = sigma = 0.5, S = 1:
        // B = 0.25/AB(0.5) + 0.25*Gamma(0.5)/(AB(0.5)*Gamma(1)),
        // which collapses to sqrt(pi)/2 like the unit integral does.
        let order = FFOrder::new(0.5, 0.5).unwrap();
        let b = uniqueness_bracket(order, 1.0).unwrap();
        assert_relative_eq!(b, 0.88622692545275801365, max_relative = 1e-13);
    }

    #[test]
    fn bracket_diverges_for_tiny_horizon() {
        // S^(sigma-1) only overflows when sigma is close to zero and
        // the horizon is down in the subnormals.
        let order = FFOrder::new(0.5, 0.01).unwrap();
        let err = uniqueness_bracket(order, 1e-323).unwrap_err();
        assert!(err.to_string().contains("diverges near 0"));
    }

    #[test]
    fn stability_constants_reference_values() {
        let order = FFOrder::classical();
        let alphas = lipschitz_constants(&LakeParams::default());
        let uh = ulam_hyers_constants(order, 10.0, alphas).unwrap();
        assert_relative_eq!(uh[0].unwrap(), 29000.0 / 2520.0, max_relative = 1e-12);
        assert_relative_eq!(uh[1].unwrap(), 8500.0 / 670.0, max_relative = 1e-12);
        assert_relative_eq!(uh[2].unwrap(), 14.75, max_relative = 1e-12);
    }

    #[test]
    fn no_certificate_on_long_horizon() {
        // At S = 60 the second and third products exceed one.
        let order = FFOrder::classical();
        let report = analyze(&LakeParams::default(), order, 60.0).unwrap();
        assert_eq!(report.uniqueness_ok, [true, false, false]);
        assert!(report.uh_constants[1].is_none());
        assert!(report.uh_constants[2].is_none());
        assert_relative_eq!(
            report.bracket * report.alphas[2],
            1.9322033898305084,
            max_relative = 1e-12
        );
    }

    #[test]
    fn zero_lipschitz_keeps_bracket() {
        let order = FFOrder::new(0.5, 0.5).unwrap();
        let uh = ulam_hyers_constants(order, 1.0, [0.0, 0.0, 0.0]).unwrap();
        let b = uniqueness_bracket(order, 1.0).unwrap();
        for v in uh {
            assert_eq!(v.unwrap(), b);
        }
    }
}
