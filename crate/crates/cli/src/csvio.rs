//! CSV and plot-data writers. Trajectory-class files carry 12
//! significant digits so that parsing a file reproduces the run to far
//! below any tolerance used downstream; the reference tables keep
//! their native 6-decimal precision.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use reference_data::ComparisonReport;
use schemes::{Scheme, Trajectory};

fn sig(x: f64) -> String {
    format!("{x:.11e}")
}

fn header<W: Write>(w: &mut W, dimension: usize) -> io::Result<()> {
    write!(w, "s")?;
    for j in 1..=dimension {
        write!(w, ",L{j}")?;
    }
    writeln!(w)
}

pub fn write_trajectory(path: &Path, traj: &Trajectory) -> io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    header(&mut w, traj.dimension())?;
    for k in 0..traj.states.len() {
        write!(w, "{}", sig(traj.grid.node(k)))?;
        for value in traj.state(k) {
            write!(w, ",{}", sig(*value))?;
        }
        writeln!(w)?;
    }
    w.flush()
}

/// Componentwise difference `a - b` of two runs on the same grid.
pub fn write_delta(path: &Path, a: &Trajectory, b: &Trajectory) -> io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write!(w, "s")?;
    for j in 1..=a.dimension() {
        write!(w, ",dL{j}")?;
    }
    writeln!(w)?;
    for k in 0..a.states.len() {
        write!(w, "{}", sig(a.grid.node(k)))?;
        for (x, y) in a.state(k).iter().zip(b.state(k)) {
            write!(w, ",{}", sig(x - y))?;
        }
        writeln!(w)?;
    }
    w.flush()
}

/// Paired-column portraits: (L1,L2), (L1,L3), (L2,L3) and the full
/// (L1,L2,L3) curve, one file each.
pub fn write_phase(dir: &Path, traj: &Trajectory) -> io::Result<Vec<PathBuf>> {
    let tag = traj.scheme.tag();
    let groups: [&[usize]; 4] = [&[0, 1], &[0, 2], &[1, 2], &[0, 1, 2]];
    let mut paths = Vec::new();
    for group in groups {
        let name = group.iter().map(|j| format!("l{}", j + 1)).collect::<Vec<_>>().join("_");
        let path = dir.join(format!("phase_{tag}_{name}.csv"));
        let mut w = BufWriter::new(File::create(&path)?);
        let labels = group.iter().map(|j| format!("L{}", j + 1)).collect::<Vec<_>>().join(",");
        writeln!(w, "{labels}")?;
        for k in 0..traj.states.len() {
            let state = traj.state(k);
            let row = group.iter().map(|&j| sig(state[j])).collect::<Vec<_>>().join(",");
            writeln!(w, "{row}")?;
        }
        w.flush()?;
        paths.push(path);
    }
    Ok(paths)
}

/// Whitespace-separated dump for gnuplot.
pub fn write_plotdata(path: &Path, traj: &Trajectory) -> io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write!(w, "# s")?;
    for j in 1..=traj.dimension() {
        write!(w, " L{j}")?;
    }
    writeln!(w)?;
    for k in 0..traj.states.len() {
        write!(w, "{}", sig(traj.grid.node(k)))?;
        for value in traj.state(k) {
            write!(w, " {}", sig(*value))?;
        }
        writeln!(w)?;
    }
    w.flush()
}

/// One sampled state in a sweep summary.
#[derive(Debug, Clone)]
pub struct SummaryRow {
    pub scheme: Scheme,
    pub theta: f64,
    pub sigma: f64,
    pub s: f64,
    pub state: Vec<f64>,
}

pub fn write_sweep_summary(path: &Path, rows: &[SummaryRow]) -> io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "scheme,theta,sigma,s,L1,L2,L3")?;
    for row in rows {
        write!(w, "{},{},{},{}", row.scheme.tag(), row.theta, row.sigma, row.s)?;
        for value in &row.state {
            write!(w, ",{}", sig(*value))?;
        }
        writeln!(w)?;
    }
    w.flush()
}

/// Per-cell deviations from one or more comparison runs.
pub fn write_report(path: &Path, reports: &[ComparisonReport]) -> io::Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "scheme,s,component,computed,reference,abs_dev,rel_dev")?;
    for report in reports {
        let tag = report.scheme.tag();
        for cell in &report.cells {
            let rel = cell.rel_dev.map(|r| format!("{r:.6e}")).unwrap_or_default();
            writeln!(
                w,
                "{tag},{},L{},{},{:.6},{:.6e},{rel}",
                cell.s,
                cell.component + 1,
                sig(cell.computed),
                cell.reference,
                cell.abs_dev,
            )?;
        }
    }
    w.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use ffml_core::{FFOrder, GridSpec};

    fn toy() -> Trajectory {
        Trajectory {
            grid: GridSpec::new(0.5, 1.0).unwrap(),
            order: FFOrder::classical(),
            scheme: Scheme::Abm,
            states: vec![vec![0.0, 1.0], vec![0.25, 1.5], vec![1.0 / 3.0, 2.0]],
        }
    }

    #[test]
    fn trajectory_rows_round_trip_through_parse() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.csv");
        write_trajectory(&path, &toy()).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "s,L1,L2");
        assert_eq!(lines.len(), 4);
        let traj = toy();
        for (line, k) in lines[1..].iter().zip(0..) {
            let fields: Vec<f64> = line.split(',').map(|f| f.parse().unwrap()).collect();
            assert!((fields[0] - traj.grid.node(k)).abs() <= 1e-11 * traj.grid.node(k).abs());
            for (got, want) in fields[1..].iter().zip(traj.state(k)) {
                let tol = 1e-11 * want.abs().max(1e-300);
                assert!((got - want).abs() <= tol, "{got} vs {want}");
            }
        }
    }

    #[test]
    fn phase_files_drop_the_time_column() {
        let dir = tempfile::tempdir().unwrap();
        let mut traj = toy();
        traj.states = traj.states.iter().map(|s| vec![s[0], s[1], 0.5]).collect();
        let paths = write_phase(dir.path(), &traj).unwrap();
        assert_eq!(paths.len(), 4);
        let pair = std::fs::read_to_string(&paths[0]).unwrap();
        assert!(pair.starts_with("L1,L2\n"));
        assert_eq!(pair.lines().count(), 4);
        let triple = std::fs::read_to_string(&paths[3]).unwrap();
        assert!(triple.starts_with("L1,L2,L3\n"));
        assert!(paths[3].file_name().unwrap().to_str().unwrap().contains("l1_l2_l3"));
    }
}
