use crate::error::CoreError;
use crate::gamma::{ab_coefficient, gamma};
use crate::grid::{FFOrder, GridSpec};

/// Direct evaluation of the fractal-fractional integral of a sampled
/// function at grid node `k`:
///
/// ```text
/// (1-theta) sigma s_k^(sigma-1) f(s_k) / AB(theta)
///   + theta sigma / (AB(theta) Gamma(theta))
///     * integral_0^{s_k} w^(sigma-1) (s_k - w)^(theta-1) f(w) dw
/// ```
///
/// The integral is computed by product integration: on each panel the
/// kernel factor that is singular nearby is kept exactly (its power
/// moments are elementary) while the rest of the integrand is
/// interpolated linearly between the panel endpoints. Panels left of
/// `s_k / 2` keep `w^(sigma-1)` exact, panels right of it keep
/// `(s_k - w)^(theta-1)` exact. The rule is second order in the step
/// and exact for linear `f` when `theta = sigma = 1`.
///
/// This is deliberately independent of the time-stepping schemes and
/// serves as their oracle in tests. `samples[j]` must hold
/// `f(grid.node(j))` for `j = 0 ..= k`, and `k >= 1`.
pub fn ff_integral_reference(
    samples: &[f64],
    grid: &GridSpec,
    order: FFOrder,
    k: usize,
) -> Result<f64, CoreError> {
    if k < 1 {
        return Err(CoreError::Grid("node index k must be >= 1".into()));
    }
    if samples.len() <= k {
        return Err(CoreError::Grid(format!(
            "need {} samples for node {k}, got {}",
            k + 1,
            samples.len()
        )));
    }
    let FFOrder { theta, sigma } = order;
    let ab = ab_coefficient(theta)?;
    if !(sigma > 0.0 && sigma <= 1.0) {
        return Err(CoreError::Domain(format!("sigma = {sigma} outside (0, 1]")));
    }
    let h = grid.step;
    let sk = grid.node(k);
    let mid = 0.5 * sk;

    let mut total = 0.0;
    for j in 0..k {
        let a = grid.node(j);
        let b = grid.node(j + 1);
        let (fa, fb) = (samples[j], samples[j + 1]);
        if 0.5 * (a + b) <= mid {
            // Keep w^(sigma-1) exact; linearise (s_k - w)^(theta-1) f.
            let ga = (sk - a).powf(theta - 1.0) * fa;
            let gb = (sk - b).powf(theta - 1.0) * fb;
            let slope = (gb - ga) / h;
            let intercept = ga - slope * a;
            total += intercept * (b.powf(sigma) - a.powf(sigma)) / sigma
                + slope * (b.powf(sigma + 1.0) - a.powf(sigma + 1.0)) / (sigma + 1.0);
        } else {
            // Substitute u = s_k - w and keep u^(theta-1) exact.
            let ua = sk - a;
            let ub = sk - b;
            let ga = if a > 0.0 { a.powf(sigma - 1.0) * fa } else { 0.0 };
            let gb = b.powf(sigma - 1.0) * fb;
            let slope = (ga - gb) / h;
            let intercept = gb - slope * ub;
            total += intercept * (ua.powf(theta) - ub.powf(theta)) / theta
                + slope * (ua.powf(theta + 1.0) - ub.powf(theta + 1.0)) / (theta + 1.0);
        }
    }

    let local = (1.0 - theta) * sigma * sk.powf(sigma - 1.0) * samples[k] / ab;
    Ok(local + theta * sigma / (ab * gamma(theta)?) * total)
}
