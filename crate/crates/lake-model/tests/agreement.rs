//! The two history rules integrate the same problem, so away from
//! their startup transient they must agree. The gap is dominated by
//! the frozen starting nodes (the three-point rule skips the first
//! two panels entirely), which injects an O(h^2) mass difference that
//! then decays through the flux matrix; agreement therefore tightens
//! as the step shrinks.

use ffml_core::{FFOrder, GridSpec};
use lake_model::{lake_rhs, InputModel, LakeParams};
use schemes::{simulate_abm, simulate_npm};

fn max_rel_gap(input: InputModel, step: f64) -> f64 {
    let params = LakeParams::default();
    let rhs = lake_rhs(&params, input);
    let grid = GridSpec::new(step, 10.0).unwrap();
    let order = FFOrder::classical();
    let a = simulate_abm(&rhs, &params.initial_state(), order, grid).unwrap();
    let n = simulate_npm(&rhs, &params.initial_state(), order, grid).unwrap();
    let mut worst = 0.0f64;
    for s in 1..=10 {
        let (xa, xn) = (
            a.state_at(s as f64).unwrap(),
            n.state_at(s as f64).unwrap(),
        );
        for i in 0..3 {
            if xa[i].abs() > 1e-9 {
                worst = worst.max((xa[i] - xn[i]).abs() / xa[i].abs());
            }
        }
    }
    worst
}

#[test]
fn schemes_agree_at_tabulated_times() {
    // Bounds frozen from measured gaps (worst cell is always the
    // first tabulated time, closest to the startup transient) with a
    // 1.5x margin.
    let cases = [
        (InputModel::Linear { mu: 100.0 }, 0.1, 0.09),
        (InputModel::ExponentialDecay { r: 200.0, p: 10.0 }, 0.01, 0.16),
        (InputModel::Periodic { a: 1.0, tau: 1.0, b: 1.0 }, 0.1, 0.25),
    ];
    for (input, step, bound) in cases {
        let gap = max_rel_gap(input, step);
        assert!(gap <= bound, "{}: gap {gap} above {bound}", input.tag());
    }
}

#[test]
fn agreement_tightens_under_refinement() {
    let cases = [
        (InputModel::Linear { mu: 100.0 }, 0.1),
        (InputModel::ExponentialDecay { r: 200.0, p: 10.0 }, 0.01),
        (InputModel::Periodic { a: 1.0, tau: 1.0, b: 1.0 }, 0.1),
    ];
    for (input, step) in cases {
        let coarse = max_rel_gap(input, step);
        let fine = max_rel_gap(input, step / 4.0);
        assert!(
            fine < coarse,
            "{}: gap grew from {coarse} to {fine}",
            input.tag()
        );
    }
}
