/// Product-integration weights of the two-point (trapezoidal) history
/// rule. For lag `m = k - ell` the pair is
///
/// ```text
/// y1 = (m+1)^theta (m+2+theta)   - m^theta (m+2+2 theta)
/// y2 = (m+1)^(theta+1)           - m^theta (m+1+theta)
/// ```
///
/// At `theta = 1` they collapse to the constants `(3, 1)`, the
/// classical two-step Adams-Bashforth stencil `(3F_l - F_{l-1}) / 2`
/// once the common `1/Gamma(theta+2)` prefactor is folded in.
///
/// Panics if `ell` is outside `1..=k`.
pub fn abm_weights(k: usize, ell: usize, theta: f64) -> (f64, f64) {
    assert!(
        (1..=k).contains(&ell),
        "abm_weights: ell = {ell} outside 1..={k}"
    );
    let m = (k - ell) as f64;
    let p1 = (m + 1.0).powf(theta);
    let p0 = m.powf(theta);
    let y1 = p1 * (m + 2.0 + theta) - p0 * (m + 2.0 + 2.0 * theta);
    let y2 = p1 * (m + 1.0) - p0 * (m + 1.0 + theta);
    (y1, y2)
}

/// Weights of the three-point (quadratic) history rule. With
/// `m = k - ell`,
///
/// ```text
/// psi1 = (m+1)^theta - m^theta
/// psi2 = (m+1)^theta (m+3+2 theta) - m^theta (m+3+3 theta)
/// psi3 = (m+1)^theta [2m^2 + (3 theta+10) m + 2 theta^2 +  9 theta + 12]
///      - m^theta     [2m^2 + (5 theta+10) m + 6 theta^2 + 18 theta + 12]
/// ```
///
/// At `theta = 1` these collapse to `(1, 5, 23)`; combined with their
/// `1/Gamma(theta+1)`, `1/Gamma(theta+2)`, `1/(2 Gamma(theta+3))`
/// prefactors that is the third-order Adams-Bashforth stencil
/// `(23F_l - 16F_{l-1} + 5F_{l-2}) / 12` in Newton forward-difference
/// form.
///
/// Panics if `ell` is outside `2..=k`.
pub fn npm_weights(k: usize, ell: usize, theta: f64) -> (f64, f64, f64) {
    assert!(
        (2..=k).contains(&ell),
        "npm_weights: ell = {ell} outside 2..={k}"
    );
    let m = (k - ell) as f64;
    let p1 = (m + 1.0).powf(theta);
    let p0 = m.powf(theta);
    let psi1 = p1 - p0;
    let psi2 = p1 * (m + 3.0 + 2.0 * theta) - p0 * (m + 3.0 + 3.0 * theta);
    let psi3 = p1 * (2.0 * m * m + (3.0 * theta + 10.0) * m + 2.0 * theta * theta + 9.0 * theta + 12.0)
        - p0 * (2.0 * m * m + (5.0 * theta + 10.0) * m + 6.0 * theta * theta + 18.0 * theta + 12.0);
    (psi1, psi2, psi3)
}
