//! The four subcommands. Each returns the process exit code on the
//! happy path; failures map to codes through [`CliError::exit_code`].

use std::fs;
use std::path::Path;

use ffml_core::FFOrder;
use lake_model::{analyze, lake_rhs};
use rayon::prelude::*;
use reference_data::{compare, export_csv, load_reference, TableId};
use schemes::{simulate, Trajectory};

use crate::config::RunConfig;
use crate::csvio::{self, SummaryRow};
use crate::CliError;

fn run_schemes(cfg: &RunConfig) -> Result<Vec<Trajectory>, CliError> {
    let rhs = lake_rhs(&cfg.params, cfg.input);
    let init = cfg.params.initial_state();
    cfg.scheme
        .schemes()
        .iter()
        .map(|&scheme| simulate(&rhs, &init, cfg.order, cfg.grid, scheme).map_err(CliError::from))
        .collect()
}

fn emit_artifacts(cfg: &RunConfig, trajectories: &[Trajectory]) -> Result<(), CliError> {
    let dir = &cfg.output_dir;
    for traj in trajectories {
        let tag = traj.scheme.tag();
        if cfg.emit.trajectory {
            let path = dir.join(format!("trajectory_{tag}.csv"));
            csvio::write_trajectory(&path, traj)?;
            println!("wrote {}", path.display());
        }
        if cfg.emit.phase {
            for path in csvio::write_phase(dir, traj)? {
                println!("wrote {}", path.display());
            }
        }
        if cfg.emit.plotdata {
            let path = dir.join(format!("trajectory_{tag}.dat"));
            csvio::write_plotdata(&path, traj)?;
            println!("wrote {}", path.display());
        }
    }
    if cfg.emit.trajectory {
        if let [abm, npm] = trajectories {
            let path = dir.join("delta.csv");
            csvio::write_delta(&path, abm, npm)?;
            println!("wrote {}", path.display());
        }
    }
    Ok(())
}

fn print_analysis(cfg: &RunConfig) {
    match analyze(&cfg.params, cfg.order, cfg.grid.horizon) {
        Ok(report) => print!("{report}"),
        Err(err) => println!("analysis unavailable: {err}"),
    }
}

/// Simulate and write trajectory artifacts.
pub fn cmd_run(cfg: &RunConfig) -> Result<i32, CliError> {
    fs::create_dir_all(&cfg.output_dir)?;
    let trajectories = run_schemes(cfg)?;
    emit_artifacts(cfg, &trajectories)?;
    print_analysis(cfg);
    Ok(0)
}

/// Simulate and score against one embedded reference table. Exit 0
/// only when every requested scheme stays within `cfg.tol`.
pub fn cmd_compare(cfg: &RunConfig, table_id: TableId) -> Result<i32, CliError> {
    fs::create_dir_all(&cfg.output_dir)?;
    let table = load_reference(table_id);
    let trajectories = run_schemes(cfg)?;
    let mut reports = Vec::new();
    let mut all_pass = true;
    for traj in &trajectories {
        let report = compare(traj, &table, traj.scheme, cfg.tol)?;
        println!(
            "{} vs {} table: max rel dev {:.3e} (tol {:.1e}) -> {}",
            traj.scheme,
            table.id,
            report.max_rel_dev,
            report.tol_rel,
            if report.pass { "pass" } else { "fail" },
        );
        all_pass &= report.pass;
        reports.push(report);
    }
    let path = cfg.output_dir.join(format!("report_{}.csv", table_id.tag()));
    csvio::write_report(&path, &reports)?;
    println!("wrote {}", path.display());
    Ok(if all_pass { 0 } else { 1 })
}

/// Run one simulation per order (theta = sigma), in parallel, and
/// summarize the loads at s = 10, 20, ... up to the horizon.
pub fn cmd_sweep(cfg: &RunConfig, orders: &[f64]) -> Result<i32, CliError> {
    if orders.is_empty() {
        return Err(CliError::Config("empty order list: pass --orders".into()));
    }
    let specs = orders
        .iter()
        .map(|&o| FFOrder::new(o, o).map_err(|err| CliError::Config(err.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    fs::create_dir_all(&cfg.output_dir)?;

    let rhs = lake_rhs(&cfg.params, cfg.input);
    let init = cfg.params.initial_state();
    let per_order = specs
        .par_iter()
        .map(|&order| {
            let mut rows = Vec::new();
            for &scheme in cfg.scheme.schemes() {
                let traj = simulate(&rhs, &init, order, cfg.grid, scheme)?;
                let path = cfg
                    .output_dir
                    .join(format!("trajectory_{}_{}.csv", scheme.tag(), order.theta));
                csvio::write_trajectory(&path, &traj)?;
                let mut s = 10.0;
                while s <= cfg.grid.horizon * (1.0 + 1e-12) {
                    if let Some(state) = traj.state_at(s) {
                        rows.push(SummaryRow {
                            scheme,
                            theta: order.theta,
                            sigma: order.sigma,
                            s,
                            state: state.to_vec(),
                        });
                    }
                    s += 10.0;
                }
            }
            Ok(rows)
        })
        .collect::<Result<Vec<_>, CliError>>()?;

    let mut rows: Vec<SummaryRow> = per_order.into_iter().flatten().collect();
    rows.sort_by(|a, b| {
        a.theta
            .total_cmp(&b.theta)
            .then_with(|| a.scheme.tag().cmp(b.scheme.tag()))
            .then(a.s.total_cmp(&b.s))
    });
    let path = cfg.output_dir.join("sweep_summary.csv");
    csvio::write_sweep_summary(&path, &rows)?;
    println!("wrote {}", path.display());
    Ok(0)
}

/// Dump the embedded reference tables as CSV files.
pub fn cmd_tables(out_dir: &Path) -> Result<i32, CliError> {
    for path in export_csv(out_dir)? {
        println!("wrote {}", path.display());
    }
    Ok(0)
}
