use ffml_core::{FFOrder, GridSpec};

/// Which history rule produced a trajectory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    /// Two-point product-trapezoidal rule.
    Abm,
    /// Three-point quadratic rule.
    Npm,
}

impl Scheme {
    pub const ALL: [Scheme; 2] = [Scheme::Abm, Scheme::Npm];

    /// Lowercase tag used in file names and CSV columns.
    pub fn tag(self) -> &'static str {
        match self {
            Scheme::Abm => "abm",
            Scheme::Npm => "npm",
        }
    }
}

impl std::fmt::Display for Scheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Scheme::Abm => "ABM",
            Scheme::Npm => "NPM",
        })
    }
}

/// A computed solution: one state row per grid node, `node_count + 1`
/// rows in total. Row 0 is the initial state exactly as given; every
/// entry is finite (the steppers fail instead of storing a non-finite
/// value).
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub grid: GridSpec,
    pub order: FFOrder,
    pub scheme: Scheme,
    pub states: Vec<Vec<f64>>,
}

impl Trajectory {
    pub fn dimension(&self) -> usize {
        self.states[0].len()
    }

    pub fn state(&self, node: usize) -> &[f64] {
        &self.states[node]
    }

    pub fn last(&self) -> &[f64] {
        self.states.last().expect("trajectory has at least one row")
    }

    /// State at time `s`, if `s` is a grid node.
    pub fn state_at(&self, s: f64) -> Option<&[f64]> {
        self.grid.node_at(s).map(|k| self.state(k))
    }
}
