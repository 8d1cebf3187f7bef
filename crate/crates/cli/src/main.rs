use std::path::PathBuf;
use std::process;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ffml_cli::{commands, config, CliError, EmitSet, InputKind, Overrides, RunConfig, SchemeChoice};
use reference_data::TableId;

#[derive(Parser)]
#[command(name = "ffml", version, about = "Three-lake pollution model under fractal-fractional dynamics")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Simulate and write trajectory artifacts.
    Run(CommonArgs),
    /// Simulate and score the result against an embedded reference table.
    Compare {
        /// Which embedded table to score against.
        #[arg(value_enum)]
        table: TableArg,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run several orders (theta = sigma) in parallel and summarize.
    Sweep {
        /// Comma-separated orders, e.g. 0.85,0.9,0.95,0.99.
        #[arg(long, value_delimiter = ',')]
        orders: Vec<f64>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Write the embedded reference tables as CSV files.
    Tables {
        /// Output directory (falls back to $FFML_OUT, then `.`).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct CommonArgs {
    /// INI-style config file with [order], [grid], [params], [input].
    #[arg(long)]
    config: Option<PathBuf>,
    /// Discretization to run.
    #[arg(long, value_enum)]
    scheme: Option<SchemeArg>,
    /// Fractional order, in (0, 1].
    #[arg(long)]
    theta: Option<f64>,
    /// Fractal dimension, in (0, 1].
    #[arg(long)]
    sigma: Option<f64>,
    /// Grid step h.
    #[arg(long)]
    step: Option<f64>,
    /// Final time S.
    #[arg(long)]
    horizon: Option<f64>,
    /// Inflow model for lake 1.
    #[arg(long, value_enum)]
    input: Option<InputArg>,
    /// Output directory (falls back to $FFML_OUT, then `.`).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Relative tolerance for `compare`.
    #[arg(long)]
    tol: Option<f64>,
    /// Artifact classes to write (replaces the default set).
    #[arg(long, value_enum, value_delimiter = ',')]
    emit: Option<Vec<EmitArg>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Abm,
    Npm,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputArg {
    Linear,
    Exp,
    Periodic,
    Zero,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitArg {
    Trajectory,
    Phase,
    Plotdata,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableArg {
    Linear,
    Exponential,
    Periodic,
}

impl From<SchemeArg> for SchemeChoice {
    fn from(arg: SchemeArg) -> Self {
        match arg {
            SchemeArg::Abm => SchemeChoice::Abm,
            SchemeArg::Npm => SchemeChoice::Npm,
            SchemeArg::Both => SchemeChoice::Both,
        }
    }
}

impl From<InputArg> for InputKind {
    fn from(arg: InputArg) -> Self {
        match arg {
            InputArg::Linear => InputKind::Linear,
            InputArg::Exp => InputKind::Exp,
            InputArg::Periodic => InputKind::Periodic,
            InputArg::Zero => InputKind::Zero,
        }
    }
}

impl From<TableArg> for TableId {
    fn from(arg: TableArg) -> Self {
        match arg {
            TableArg::Linear => TableId::Linear,
            TableArg::Exponential => TableId::Exponential,
            TableArg::Periodic => TableId::Periodic,
        }
    }
}

fn build(args: CommonArgs) -> Result<RunConfig, CliError> {
    let emit = args.emit.map(|kinds| {
        let mut set = EmitSet::NONE;
        for kind in kinds {
            match kind {
                EmitArg::Trajectory => set.trajectory = true,
                EmitArg::Phase => set.phase = true,
                EmitArg::Plotdata => set.plotdata = true,
            }
        }
        set
    });
    let flags = Overrides {
        scheme: args.scheme.map(Into::into),
        theta: args.theta,
        sigma: args.sigma,
        step: args.step,
        horizon: args.horizon,
        input: args.input.map(Into::into),
        out: args.out,
        tol: args.tol,
        emit,
    };
    let (config, warnings) = config::load(args.config.as_deref(), flags)?;
    for warning in warnings {
        eprintln!("warning: {warning}");
    }
    Ok(config)
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    match cli.cmd {
        Cmd::Run(common) => commands::cmd_run(&build(common)?),
        Cmd::Compare { table, common } => commands::cmd_compare(&build(common)?, table.into()),
        Cmd::Sweep { orders, common } => commands::cmd_sweep(&build(common)?, &orders),
        Cmd::Tables { out } => {
            let dir = out.unwrap_or_else(config::default_output_dir);
            commands::cmd_tables(&dir)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            process::exit(err.exit_code());
        }
    }
}
