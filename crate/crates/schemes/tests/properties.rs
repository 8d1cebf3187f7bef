use ffml_core::{FFOrder, GridSpec};
use proptest::prelude::*;
use schemes::{simulate, Scheme, SystemRhs};

fn linear_rhs(a: [[f64; 2]; 2]) -> SystemRhs {
    SystemRhs::new(2, move |_, x, out| {
        out[0] = a[0][0] * x[0] + a[0][1] * x[1];
        out[1] = a[1][0] * x[0] + a[1][1] * x[1];
    })
}

fn bits(t: &schemes::Trajectory) -> Vec<u64> {
    t.states.iter().flatten().map(|v| v.to_bits()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // Same inputs, same bits.
    #[test]
    fn runs_are_deterministic(
        theta in 0.5f64..=1.0,
        sigma in 0.5f64..=1.0,
        x0 in -2.0f64..=2.0,
        x1 in -2.0f64..=2.0,
    ) {
        let rhs = linear_rhs([[-0.4, 0.2], [0.1, -0.3]]);
        let order = FFOrder::new(theta, sigma).unwrap();
        let grid = GridSpec::new(0.1, 2.0).unwrap();
        for scheme in Scheme::ALL {
            let a = simulate(&rhs, &[x0, x1], order, grid, scheme).unwrap();
            let b = simulate(&rhs, &[x0, x1], order, grid, scheme).unwrap();
            prop_assert_eq!(bits(&a), bits(&b));
        }
    }

    // Extending the horizon must not change the already-computed
    // prefix: node k+1 depends only on samples 0..=k.
    #[test]
    fn longer_horizon_preserves_prefix(
        theta in 0.5f64..=1.0,
        sigma in 0.5f64..=1.0,
    ) {
        let rhs = linear_rhs([[-0.5, 0.25], [0.3, -0.6]]);
        let order = FFOrder::new(theta, sigma).unwrap();
        let short = GridSpec::new(0.1, 2.0).unwrap();
        let long = GridSpec::new(0.1, 4.0).unwrap();
        for scheme in Scheme::ALL {
            let a = simulate(&rhs, &[1.0, -1.0], order, short, scheme).unwrap();
            let b = simulate(&rhs, &[1.0, -1.0], order, long, scheme).unwrap();
            for k in 0..=short.node_count {
                prop_assert_eq!(&a.states[k], &b.states[k], "node {}", k);
            }
        }
    }

    // For a linear source-free system the solution map is linear in
    // the initial state.
    #[test]
    fn scaling_init_scales_trajectory(
        c in 0.1f64..=10.0,
        theta in 0.5f64..=1.0,
        sigma in 0.5f64..=1.0,
    ) {
        let rhs = linear_rhs([[-0.4, 0.2], [0.1, -0.3]]);
        let order = FFOrder::new(theta, sigma).unwrap();
        let grid = GridSpec::new(0.1, 2.0).unwrap();
        let init = [1.0, 0.5];
        let scaled = [c * init[0], c * init[1]];
        for scheme in Scheme::ALL {
            let base = simulate(&rhs, &init, order, grid, scheme).unwrap();
            let big = simulate(&rhs, &scaled, order, grid, scheme).unwrap();
            for k in 0..=grid.node_count {
                for i in 0..2 {
                    let want = c * base.states[k][i];
                    let got = big.states[k][i];
                    prop_assert!(
                        (got - want).abs() <= 1e-12 * want.abs().max(1e-3),
                        "node {} comp {}: {} vs {}", k, i, got, want
                    );
                }
            }
        }
    }
}
