//! Run configuration: defaults, an INI-style config file and
//! command-line flags, layered in that order (flags win).

use std::env;
use std::path::{Path, PathBuf};

use ffml_core::{FFOrder, GridSpec};
use lake_model::{InputModel, LakeParams};
use schemes::Scheme;

use crate::CliError;

/// Which discretization(s) a command drives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchemeChoice {
    Abm,
    Npm,
    Both,
}

impl SchemeChoice {
    pub fn schemes(self) -> &'static [Scheme] {
        match self {
            SchemeChoice::Abm => &[Scheme::Abm],
            SchemeChoice::Npm => &[Scheme::Npm],
            SchemeChoice::Both => &[Scheme::Abm, Scheme::Npm],
        }
    }
}

/// Artifact classes `run` may write.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmitSet {
    pub trajectory: bool,
    pub phase: bool,
    pub plotdata: bool,
}

impl EmitSet {
    pub const NONE: EmitSet = EmitSet { trajectory: false, phase: false, plotdata: false };
}

impl Default for EmitSet {
    fn default() -> Self {
        EmitSet { trajectory: true, ..EmitSet::NONE }
    }
}

/// Inflow model selector; the numeric fields are resolved separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    Linear,
    Exp,
    Periodic,
    Zero,
}

impl InputKind {
    fn parse(value: &str) -> Option<InputKind> {
        match value {
            "linear" => Some(InputKind::Linear),
            "exp" => Some(InputKind::Exp),
            "periodic" => Some(InputKind::Periodic),
            "zero" => Some(InputKind::Zero),
            _ => None,
        }
    }
}

/// A fully resolved invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub scheme: SchemeChoice,
    pub order: FFOrder,
    pub grid: GridSpec,
    pub params: LakeParams,
    pub input: InputModel,
    pub output_dir: PathBuf,
    pub emit: EmitSet,
    pub tol: f64,
}

/// Command-line values layered on top of the config file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub scheme: Option<SchemeChoice>,
    pub theta: Option<f64>,
    pub sigma: Option<f64>,
    pub step: Option<f64>,
    pub horizon: Option<f64>,
    pub input: Option<InputKind>,
    pub out: Option<PathBuf>,
    pub tol: Option<f64>,
    pub emit: Option<EmitSet>,
}

/// Raw values read from a config file. Sections: `[order]` (theta,
/// sigma), `[grid]` (step, horizon), `[params]` (the ten lake fields)
/// and `[input]` (kind plus mu/r/p/a/tau/b). Input fields that the
/// active kind does not use are ignored.
#[derive(Debug)]
struct FileValues {
    theta: Option<f64>,
    sigma: Option<f64>,
    step: Option<f64>,
    horizon: Option<f64>,
    params: LakeParams,
    kind: Option<InputKind>,
    mu: Option<f64>,
    r: Option<f64>,
    p: Option<f64>,
    a: Option<f64>,
    tau: Option<f64>,
    b: Option<f64>,
}

impl Default for FileValues {
    fn default() -> Self {
        FileValues {
            theta: None,
            sigma: None,
            step: None,
            horizon: None,
            params: LakeParams::default(),
            kind: None,
            mu: None,
            r: None,
            p: None,
            a: None,
            tau: None,
            b: None,
        }
    }
}

/// Build a [`RunConfig`] from an optional config file and flag
/// overrides. Returns soft parameter warnings alongside.
///
/// Defaults reproduce the reference setup: classical order, h = 0.1,
/// S = 10, the bundled lake parameters, linear inflow with mu = 100,
/// both schemes, tolerance 2e-3.
pub fn load(
    config_path: Option<&Path>,
    flags: Overrides,
) -> Result<(RunConfig, Vec<String>), CliError> {
    let file = match config_path {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|err| {
                CliError::Config(format!("cannot read config file {}: {err}", path.display()))
            })?;
            parse_file(&text)?
        }
        None => FileValues::default(),
    };
    resolve(file, flags)
}

fn resolve(file: FileValues, flags: Overrides) -> Result<(RunConfig, Vec<String>), CliError> {
    let config_err = |err: ffml_core::CoreError| CliError::Config(err.to_string());

    let theta = flags.theta.or(file.theta).unwrap_or(1.0);
    let sigma = flags.sigma.or(file.sigma).unwrap_or(1.0);
    let order = FFOrder::new(theta, sigma).map_err(config_err)?;

    let step = flags.step.or(file.step).unwrap_or(0.1);
    let horizon = flags.horizon.or(file.horizon).unwrap_or(10.0);
    let grid = GridSpec::new(step, horizon).map_err(config_err)?;

    let params = file.params;
    let warnings = params.validate().map_err(|err| CliError::Config(err.to_string()))?;

    let kind = flags.input.or(file.kind).unwrap_or(InputKind::Linear);
    let input = match kind {
        InputKind::Linear => InputModel::Linear { mu: file.mu.unwrap_or(100.0) },
        InputKind::Exp => InputModel::ExponentialDecay {
            r: file.r.unwrap_or(200.0),
            p: file.p.unwrap_or(10.0),
        },
        InputKind::Periodic => InputModel::Periodic {
            a: file.a.unwrap_or(1.0),
            tau: file.tau.unwrap_or(1.0),
            b: file.b.unwrap_or(1.0),
        },
        InputKind::Zero => InputModel::Zero,
    };
    input.validate().map_err(|err| CliError::Config(err.to_string()))?;

    let tol = flags.tol.unwrap_or(2e-3);
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(CliError::Config(format!("tolerance must be positive, got {tol}")));
    }

    let config = RunConfig {
        scheme: flags.scheme.unwrap_or(SchemeChoice::Both),
        order,
        grid,
        params,
        input,
        output_dir: flags.out.unwrap_or_else(default_output_dir),
        emit: flags.emit.unwrap_or_default(),
        tol,
    };
    Ok((config, warnings))
}

/// `$FFML_OUT` when set, else the working directory.
pub fn default_output_dir() -> PathBuf {
    env::var_os("FFML_OUT").map(PathBuf::from).unwrap_or_else(|| PathBuf::from("."))
}

fn parse_file(text: &str) -> Result<FileValues, CliError> {
    let mut out = FileValues::default();
    let mut section: Option<&str> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = idx + 1;
        if line.is_empty() || line.starts_with('#') || line.starts_with(';') {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|rest| rest.strip_suffix(']')) {
            section = match name.trim() {
                "order" => Some("order"),
                "grid" => Some("grid"),
                "params" => Some("params"),
                "input" => Some("input"),
                other => {
                    return Err(CliError::Config(format!(
                        "line {lineno}: unknown config section [{other}]"
                    )))
                }
            };
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(CliError::Config(format!(
                "line {lineno}: expected `key = value`, got `{line}`"
            )));
        };
        let (key, value) = (key.trim(), value.trim());
        let Some(section) = section else {
            return Err(CliError::Config(format!(
                "line {lineno}: key `{key}` appears before any [section]"
            )));
        };
        apply_key(&mut out, section, key, value, lineno)?;
    }
    Ok(out)
}

fn apply_key(
    out: &mut FileValues,
    section: &str,
    key: &str,
    value: &str,
    lineno: usize,
) -> Result<(), CliError> {
    let unknown = || {
        CliError::Config(format!("line {lineno}: unknown config key `{key}` in [{section}]"))
    };
    let num = || {
        value.parse::<f64>().map_err(|_| {
            CliError::Config(format!(
                "line {lineno}: [{section}] {key}: `{value}` is not a number"
            ))
        })
    };
    match section {
        "order" => match key {
            "theta" => out.theta = Some(num()?),
            "sigma" => out.sigma = Some(num()?),
            _ => return Err(unknown()),
        },
        "grid" => match key {
            "step" => out.step = Some(num()?),
            "horizon" => out.horizon = Some(num()?),
            _ => return Err(unknown()),
        },
        "params" => {
            let p = &mut out.params;
            let slot = match key {
                "f21" => &mut p.f21,
                "f31" => &mut p.f31,
                "f32" => &mut p.f32,
                "f13" => &mut p.f13,
                "v1" => &mut p.v1,
                "v2" => &mut p.v2,
                "v3" => &mut p.v3,
                "l10" => &mut p.l10,
                "l20" => &mut p.l20,
                "l30" => &mut p.l30,
                _ => return Err(unknown()),
            };
            *slot = num()?;
        }
        "input" => match key {
            "kind" => {
                out.kind = Some(InputKind::parse(value).ok_or_else(|| {
                    CliError::Config(format!(
                        "line {lineno}: [input] kind: `{value}` is not one of \
                         linear, exp, periodic, zero"
                    ))
                })?)
            }
            "mu" => out.mu = Some(num()?),
            "r" => out.r = Some(num()?),
            "p" => out.p = Some(num()?),
            "a" => out.a = Some(num()?),
            "tau" => out.tau = Some(num()?),
            "b" => out.b = Some(num()?),
            _ => return Err(unknown()),
        },
        _ => unreachable!("sections are validated before keys are applied"),
    }
    Ok(())
}
