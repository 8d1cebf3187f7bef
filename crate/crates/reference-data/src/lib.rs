//! Embedded comparison tables for the three-lake system and a
//! comparator that scores a computed trajectory against them.
//!
//! Each table tabulates both schemes at integer times s = 0..=10 for
//! one input model. The values are carried verbatim at their printed
//! 6-decimal precision; `export_csv` writes them back out for
//! external tooling.

mod tables;

use std::io::Write;
use std::path::{Path, PathBuf};

use ffml_core::FFOrder;
use lake_model::InputModel;
use schemes::{Scheme, Trajectory};
use thiserror::Error;

/// Which bundled table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableId {
    Linear,
    Exponential,
    Periodic,
}

impl TableId {
    pub const ALL: [TableId; 3] = [TableId::Linear, TableId::Exponential, TableId::Periodic];

    pub fn tag(self) -> &'static str {
        match self {
            TableId::Linear => "linear",
            TableId::Exponential => "exponential",
            TableId::Periodic => "periodic",
        }
    }
}

impl std::fmt::Display for TableId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

/// One tabulated time: loads for both schemes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceRow {
    pub s: u32,
    pub abm: [f64; 3],
    pub npm: [f64; 3],
}

impl ReferenceRow {
    pub fn column(&self, scheme: Scheme) -> &[f64; 3] {
        match scheme {
            Scheme::Abm => &self.abm,
            Scheme::Npm => &self.npm,
        }
    }
}

/// An embedded table plus the configuration it was tabulated under.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceTable {
    pub id: TableId,
    pub step: f64,
    pub order: FFOrder,
    pub input: InputModel,
    pub rows: [ReferenceRow; 11],
}

/// Fetch an embedded table.
pub fn load_reference(id: TableId) -> ReferenceTable {
    let (abm, npm, step, input) = match id {
        TableId::Linear => (
            &tables::LINEAR_ABM,
            &tables::LINEAR_NPM,
            0.1,
            InputModel::Linear { mu: 100.0 },
        ),
        TableId::Exponential => (
            &tables::EXPONENTIAL_ABM,
            &tables::EXPONENTIAL_NPM,
            0.01,
            InputModel::ExponentialDecay { r: 200.0, p: 10.0 },
        ),
        TableId::Periodic => (
            &tables::PERIODIC_ABM,
            &tables::PERIODIC_NPM,
            0.1,
            InputModel::Periodic { a: 1.0, tau: 1.0, b: 1.0 },
        ),
    };
    let rows = std::array::from_fn(|s| ReferenceRow { s: s as u32, abm: abm[s], npm: npm[s] });
    ReferenceTable { id, step, order: FFOrder::classical(), input, rows }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ReferenceError {
    /// The trajectory grid does not contain the tabulated times.
    #[error("grid mismatch: {0}")]
    GridMismatch(String),
}

/// Deviation of one trajectory cell from its tabulated value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellDeviation {
    pub s: u32,
    pub component: usize,
    pub computed: f64,
    pub reference: f64,
    pub abs_dev: f64,
    /// Absent at s = 0 and wherever |reference| <= 1e-9.
    pub rel_dev: Option<f64>,
}

/// Outcome of scoring a trajectory against one table column.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub table: TableId,
    pub scheme: Scheme,
    pub tol_rel: f64,
    pub cells: Vec<CellDeviation>,
    pub max_rel_dev: f64,
    pub pass: bool,
}

/// Score `traj` against the `column` side of `table`.
///
/// Every integer time 0..=10 must be a node of the trajectory grid
/// (the step must divide 1 within 1e-12 and the horizon must reach
/// 10), otherwise a grid-mismatch error is returned. `pass` is
/// `max_rel_dev <= tol_rel`, where the maximum runs over cells with
/// `|reference| > 1e-9`, excluding the all-zero row at s = 0.
pub fn compare(
    traj: &Trajectory,
    table: &ReferenceTable,
    column: Scheme,
    tol_rel: f64,
) -> Result<ComparisonReport, ReferenceError> {
    let h = traj.grid.step;
    let per_unit = 1.0 / h;
    if (per_unit - per_unit.round()).abs() > 1e-12 * per_unit.max(1.0) {
        return Err(ReferenceError::GridMismatch(format!(
            "step {h} does not divide the tabulated spacing of 1"
        )));
    }
    let per_unit = per_unit.round() as usize;

    let mut cells = Vec::with_capacity(33);
    let mut max_rel_dev = 0.0f64;
    for row in &table.rows {
        let node = row.s as usize * per_unit;
        if node > traj.grid.node_count {
            return Err(ReferenceError::GridMismatch(format!(
                "trajectory ends at s = {} but the table needs s = {}",
                traj.grid.horizon, row.s
            )));
        }
        let state = traj.state(node);
        let reference = row.column(column);
        for (component, (&computed, &reference)) in
            state.iter().zip(reference.iter()).enumerate()
        {
            let abs_dev = computed - reference;
            let rel_dev = if row.s > 0 && reference.abs() > 1e-9 {
                let r = abs_dev / reference;
                max_rel_dev = max_rel_dev.max(r.abs());
                Some(r)
            } else {
                None
            };
            cells.push(CellDeviation {
                s: row.s,
                component,
                computed,
                reference,
                abs_dev,
                rel_dev,
            });
        }
    }

    Ok(ComparisonReport {
        table: table.id,
        scheme: column,
        tol_rel,
        cells,
        max_rel_dev,
        pass: max_rel_dev <= tol_rel,
    })
}

/// Write all six table columns as CSV files into `dir`, named
/// `<table>_<scheme>.csv`. Returns the paths written.
pub fn export_csv(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut paths = Vec::with_capacity(6);
    for id in TableId::ALL {
        let table = load_reference(id);
        for scheme in Scheme::ALL {
            let path = dir.join(format!("{}_{}.csv", id.tag(), scheme.tag()));
            let mut out = Vec::with_capacity(512);
            writeln!(out, "s,L1,L2,L3")?;
            for row in &table.rows {
                let v = row.column(scheme);
                writeln!(out, "{},{:.6},{:.6},{:.6}", row.s, v[0], v[1], v[2])?;
            }
            std::fs::write(&path, out)?;
            paths.push(path);
        }
    }
    Ok(paths)
}
