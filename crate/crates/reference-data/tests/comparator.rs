use ffml_core::{FFOrder, GridSpec};
use reference_data::{compare, export_csv, load_reference, ReferenceError, TableId};
use schemes::{Scheme, Trajectory};

/// Build a trajectory whose integer-time nodes carry the given table
/// column scaled by `factor`; off-table nodes are linearly filled and
/// never read by the comparator.
fn synthetic(table: TableId, scheme: Scheme, factor: f64) -> Trajectory {
    let table = load_reference(table);
    let grid = GridSpec::new(0.1, 10.0).unwrap();
    let mut states = Vec::with_capacity(grid.node_count + 1);
    for k in 0..=grid.node_count {
        let lo = (k / 10).min(10);
        let hi = (lo + 1).min(10);
        let w = (k % 10) as f64 / 10.0;
        let (a, b) = (table.rows[lo].column(scheme), table.rows[hi].column(scheme));
        states.push((0..3).map(|i| factor * ((1.0 - w) * a[i] + w * b[i])).collect());
    }
    Trajectory { grid, order: FFOrder::classical(), scheme, states }
}

#[test]
fn identical_trajectory_passes_with_zero_deviation() {
    let table = load_reference(TableId::Linear);
    let traj = synthetic(TableId::Linear, Scheme::Abm, 1.0);
    let report = compare(&traj, &table, Scheme::Abm, 1e-12).unwrap();
    assert_eq!(report.max_rel_dev, 0.0);
    assert!(report.pass);
    assert_eq!(report.cells.len(), 33);
}

#[test]
fn uniform_perturbation_is_measured() {
    let table = load_reference(TableId::Linear);
    let traj = synthetic(TableId::Linear, Scheme::Abm, 1.001);
    let report = compare(&traj, &table, Scheme::Abm, 1e-4).unwrap();
    assert!(!report.pass);
    assert!(
        (report.max_rel_dev - 1e-3).abs() < 2e-5,
        "max_rel_dev = {}",
        report.max_rel_dev
    );
}

#[test]
fn zero_row_and_tiny_references_have_no_relative_deviation() {
    let table = load_reference(TableId::Periodic);
    let traj = synthetic(TableId::Periodic, Scheme::Npm, 1.0);
    let report = compare(&traj, &table, Scheme::Npm, 1e-6).unwrap();
    for cell in &report.cells {
        assert_eq!(cell.rel_dev.is_none(), cell.s == 0, "cell at s = {}", cell.s);
    }
}

#[test]
fn incompatible_step_is_a_grid_mismatch() {
    let table = load_reference(TableId::Linear);
    let mut traj = synthetic(TableId::Linear, Scheme::Abm, 1.0);
    traj.grid = GridSpec::new(0.3, 10.0).unwrap();
    let err = compare(&traj, &table, Scheme::Abm, 1e-3).unwrap_err();
    assert!(matches!(err, ReferenceError::GridMismatch(_)));
}

#[test]
fn short_horizon_is_a_grid_mismatch() {
    let table = load_reference(TableId::Linear);
    let traj = synthetic(TableId::Linear, Scheme::Abm, 1.0);
    let mut short = traj.clone();
    short.grid = GridSpec::new(0.1, 5.0).unwrap();
    short.states.truncate(short.grid.node_count + 1);
    let err = compare(&short, &table, Scheme::Abm, 1e-3).unwrap_err();
    assert!(err.to_string().contains("ends at"));
}

#[test]
fn absolute_deviations_flip_sign_when_roles_swap() {
    // Scoring column A's values against column B and vice versa
    // yields the same absolute deviations with opposite sign.
    let table = load_reference(TableId::Exponential);
    let as_abm = synthetic(TableId::Exponential, Scheme::Abm, 1.0);
    let as_npm = synthetic(TableId::Exponential, Scheme::Npm, 1.0);
    let ab = compare(&as_abm, &table, Scheme::Npm, 1.0).unwrap();
    let ba = compare(&as_npm, &table, Scheme::Abm, 1.0).unwrap();
    for (x, y) in ab.cells.iter().zip(ba.cells.iter()) {
        assert!((x.abs_dev + y.abs_dev).abs() < 1e-12);
    }
}

#[test]
fn csv_export_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let paths = export_csv(dir.path()).unwrap();
    assert_eq!(paths.len(), 6);

    let linear_abm = std::fs::read_to_string(dir.path().join("linear_abm.csv")).unwrap();
    assert!(!linear_abm.contains('\r'));
    let lines: Vec<&str> = linear_abm.lines().collect();
    assert_eq!(lines.len(), 12);
    assert_eq!(lines[0], "s,L1,L2,L3");
    assert_eq!(lines[1], "0,0.000000,0.000000,0.000000");
    assert_eq!(lines[6], "5,1270.753481,13.074750,14.671769");

    // Round-trip: parsing the file reproduces the embedded values.
    let table = load_reference(TableId::Linear);
    for (line, row) in lines[1..].iter().zip(table.rows.iter()) {
        let fields: Vec<f64> = line.split(',').map(|v| v.parse().unwrap()).collect();
        assert_eq!(fields[0] as u32, row.s);
        for i in 0..3 {
            assert_eq!(fields[i + 1], row.abm[i]);
        }
    }
}
