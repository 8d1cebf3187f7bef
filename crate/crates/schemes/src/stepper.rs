use ffml_core::{ab_coefficient, abm_weights, gamma, npm_weights, FFOrder, GridSpec};

use crate::rhs::SystemRhs;
use crate::trajectory::{Scheme, Trajectory};
use crate::SchemeError;

/// Integrate with the two-point (trapezoidal) history rule.
///
/// Node update, with `F_j = s_j^(sigma-1) Q(s_j, state_j)` and
/// `h` the step:
///
/// ```text
/// state_{k+1} = init
///   + (1-theta) sigma / AB(theta) * F_k
///   + theta sigma h^theta / (AB(theta) Gamma(theta+2))
///     * sum_{l=1..k} [ F_l * y1(k,l) - F_{l-1} * y2(k,l) ]
/// ```
///
/// The history sum is empty at `k = 0`. The factor `s_0^(sigma-1)`
/// is taken as zero for `sigma < 1` (the product vanishes in the
/// limit) and one for `sigma = 1`.
pub fn simulate_abm(
    rhs: &SystemRhs,
    init: &[f64],
    order: FFOrder,
    grid: GridSpec,
) -> Result<Trajectory, SchemeError> {
    run(rhs, init, order, grid, Scheme::Abm)
}

/// Integrate with the three-point (quadratic) history rule.
///
/// Node update, in Newton forward-difference form over each history
/// triple (sums empty for `k < 2`):
///
/// ```text
/// state_{k+1} = init + (1-theta) sigma / AB(theta) * F_k
///   + sum_{l=2..k} [ c1 * F_{l-2} * psi1(k,l)
///                  + c2 * (F_{l-1} - F_{l-2}) * psi2(k,l)
///                  + c3 * (F_l - 2 F_{l-1} + F_{l-2}) * psi3(k,l) ]
/// c1 = theta sigma h^theta / (AB Gamma(theta+1))
/// c2 = theta sigma h^theta / (AB Gamma(theta+2))
/// c3 = theta sigma h^theta / (2 AB Gamma(theta+3))
/// ```
pub fn simulate_npm(
    rhs: &SystemRhs,
    init: &[f64],
    order: FFOrder,
    grid: GridSpec,
) -> Result<Trajectory, SchemeError> {
    run(rhs, init, order, grid, Scheme::Npm)
}

/// Dispatch on the scheme tag.
pub fn simulate(
    rhs: &SystemRhs,
    init: &[f64],
    order: FFOrder,
    grid: GridSpec,
    scheme: Scheme,
) -> Result<Trajectory, SchemeError> {
    run(rhs, init, order, grid, scheme)
}

fn run(
    rhs: &SystemRhs,
    init: &[f64],
    order: FFOrder,
    grid: GridSpec,
    scheme: Scheme,
) -> Result<Trajectory, SchemeError> {
    let dim = rhs.dimension();
    if init.len() != dim {
        return Err(SchemeError::Dimension { rhs: dim, init: init.len() });
    }
    // Revalidate in case the order was built from raw fields.
    let order = FFOrder::new(order.theta, order.sigma)?;
    let FFOrder { theta, sigma } = order;
    let ab = ab_coefficient(theta)?;
    let h = grid.step;
    let h_theta = h.powf(theta);
    let local_coef = (1.0 - theta) * sigma / ab;
    // Prefactors of the history sums.
    let trap = theta * sigma * h_theta / (ab * gamma(theta + 2.0)?);
    let c1 = theta * sigma * h_theta / (ab * gamma(theta + 1.0)?);
    let c2 = theta * sigma * h_theta / (ab * gamma(theta + 2.0)?);
    let c3 = theta * sigma * h_theta / (2.0 * ab * gamma(theta + 3.0)?);

    let n = grid.node_count;
    let mut states: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    states.push(init.to_vec());
    // Cached weighted samples F_j = s_j^(sigma-1) Q(s_j, state_j).
    let mut hist: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    hist.push(weighted_sample(rhs, 0.0, init, sigma));

    for k in 0..n {
        let mut next = init.to_vec();
        for i in 0..dim {
            next[i] += local_coef * hist[k][i];
        }
        match scheme {
            Scheme::Abm => {
                let mut acc = vec![0.0; dim];
                for ell in 1..=k {
                    let (y1, y2) = abm_weights(k, ell, theta);
                    let (cur, prev) = (&hist[ell], &hist[ell - 1]);
                    for i in 0..dim {
                        acc[i] += cur[i] * y1 - prev[i] * y2;
                    }
                }
                for i in 0..dim {
                    next[i] += trap * acc[i];
                }
            }
            Scheme::Npm => {
                let mut acc = vec![0.0; dim];
                for ell in 2..=k {
                    let (p1, p2, p3) = npm_weights(k, ell, theta);
                    let (f2, f1, f0) = (&hist[ell], &hist[ell - 1], &hist[ell - 2]);
                    for i in 0..dim {
                        acc[i] += c1 * f0[i] * p1
                            + c2 * (f1[i] - f0[i]) * p2
                            + c3 * (f2[i] - 2.0 * f1[i] + f0[i]) * p3;
                    }
                }
                for i in 0..dim {
                    next[i] += acc[i];
                }
            }
        }
        if next.iter().any(|v| !v.is_finite()) {
            return Err(SchemeError::Overflow { node: k + 1, s: grid.node(k + 1) });
        }
        hist.push(weighted_sample(rhs, grid.node(k + 1), &next, sigma));
        states.push(next);
    }

    Ok(Trajectory { grid, order, scheme, states })
}

fn weighted_sample(rhs: &SystemRhs, s: f64, state: &[f64], sigma: f64) -> Vec<f64> {
    let mut out = rhs.eval(s, state);
    let w = if s == 0.0 {
        if sigma < 1.0 {
            0.0
        } else {
            1.0
        }
    } else {
        s.powf(sigma - 1.0)
    };
    for v in &mut out {
        *v *= w;
    }
    out
}
