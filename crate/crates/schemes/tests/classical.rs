//! At `theta = sigma = 1` the schemes must reproduce the classical
//! Adams-Bashforth recursions with frozen starting values, up to
//! floating-point reassociation of the history sum.

use ffml_core::{FFOrder, GridSpec};
use schemes::{simulate_abm, simulate_npm, SystemRhs};

fn test_rhs() -> SystemRhs {
    // Mildly stiff 2x2 system with a time-dependent source.
    SystemRhs::new(2, |s, x, out| {
        out[0] = -0.8 * x[0] + 0.3 * x[1] + (1.3 * s).sin();
        out[1] = 0.2 * x[0] - 0.5 * x[1] + 0.1 * s;
    })
}

#[test]
fn abm_is_two_step_adams_bashforth() {
    let rhs = test_rhs();
    let init = [1.0, -0.5];
    let h = 0.05;
    let grid = GridSpec::new(h, 3.0).unwrap();
    let t = simulate_abm(&rhs, &init, FFOrder::classical(), grid).unwrap();

    // Hand-rolled AB2 with the first step frozen (y_1 = y_0).
    let n = grid.node_count;
    let mut y = vec![init.to_vec()];
    y.push(init.to_vec());
    let mut f_prev = rhs.eval(0.0, &y[0]);
    let mut f_cur = rhs.eval(h, &y[1]);
    for k in 1..n {
        let mut next = y[k].clone();
        for i in 0..2 {
            next[i] += h * (1.5 * f_cur[i] - 0.5 * f_prev[i]);
        }
        f_prev = f_cur;
        f_cur = rhs.eval((k + 1) as f64 * h, &next);
        y.push(next);
    }

    for k in 0..=n {
        for i in 0..2 {
            let (a, b) = (t.states[k][i], y[k][i]);
            assert!(
                (a - b).abs() <= 1e-12 * b.abs().max(1.0),
                "node {k} component {i}: {a} vs {b}"
            );
        }
    }
}

#[test]
fn npm_is_three_step_adams_bashforth() {
    let rhs = test_rhs();
    let init = [0.3, 0.7];
    let h = 0.05;
    let grid = GridSpec::new(h, 3.0).unwrap();
    let t = simulate_npm(&rhs, &init, FFOrder::classical(), grid).unwrap();

    // Hand-rolled AB3 with the first two steps frozen.
    let n = grid.node_count;
    let mut y = vec![init.to_vec(), init.to_vec(), init.to_vec()];
    let mut f: Vec<Vec<f64>> = (0..=2).map(|k| rhs.eval(k as f64 * h, &y[k])).collect();
    for k in 2..n {
        let mut next = y[k].clone();
        for i in 0..2 {
            next[i] += h / 12.0 * (23.0 * f[k][i] - 16.0 * f[k - 1][i] + 5.0 * f[k - 2][i]);
        }
        f.push(rhs.eval((k + 1) as f64 * h, &next));
        y.push(next);
    }

    for k in 0..=n {
        for i in 0..2 {
            let (a, b) = (t.states[k][i], y[k][i]);
            assert!(
                (a - b).abs() <= 1e-12 * b.abs().max(1.0),
                "node {k} component {i}: {a} vs {b}"
            );
        }
    }
}

#[test]
fn frozen_start_nodes_equal_init() {
    let rhs = test_rhs();
    let init = [0.25, -1.5];
    let grid = GridSpec::new(0.1, 1.0).unwrap();
    let abm = simulate_abm(&rhs, &init, FFOrder::classical(), grid).unwrap();
    assert_eq!(abm.states[1], init.to_vec());
    let npm = simulate_npm(&rhs, &init, FFOrder::classical(), grid).unwrap();
    assert_eq!(npm.states[1], init.to_vec());
    assert_eq!(npm.states[2], init.to_vec());
}
