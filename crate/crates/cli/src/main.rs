use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lab_cli::{run_command, Format, LabConfig, Overrides};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Csv => Format::Csv,
        }
    }
}

/// Numerical laboratory for bounded holomorphic functions on the unit
/// ball: automorphism orbits, certified infinite products, cluster sets,
/// outer functions, and the Harnack part metric.
#[derive(Debug, Parser)]
#[command(name = "lab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// TOML configuration file; flags override file values.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Ambient complex dimension.
    #[arg(long, global = true, value_name = "INT")]
    n: Option<usize>,

    /// Number of retained product factors.
    #[arg(long, global = true, value_name = "INT")]
    trunc: Option<u32>,

    /// Certified working radius in (0, 0.99].
    #[arg(long, global = true, value_name = "FLOAT")]
    radius: Option<f64>,

    /// Circle-grid size.
    #[arg(long, global = true, value_name = "INT")]
    grid: Option<usize>,

    /// Random seed; identical seeds give byte-identical reports.
    #[arg(long, global = true, value_name = "INT")]
    seed: Option<u64>,

    /// Report encoding.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: OutputFormat,

    /// Write the report here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Orbit of the origin toward the boundary fixed point.
    Orbit,
    /// Convergence table of the embedded-disc identity.
    Product,
    /// Cluster-set estimates at boundary points.
    Cluster,
    /// Harnack brackets and the part-metric matrix.
    Harnack,
    /// Outer-function modulus recovery.
    Outer,
    /// Run the full verification suite.
    Verify,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Orbit => "orbit",
            Command::Product => "product",
            Command::Cluster => "cluster",
            Command::Harnack => "harnack",
            Command::Outer => "outer",
            Command::Verify => "verify",
        }
    }
}

fn configure_threads() {
    if let Ok(raw) = std::env::var("LAB_THREADS") {
        if let Ok(threads) = raw.parse::<usize>() {
            if threads >= 1 {
                // ignored when a global pool already exists
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }
}

fn main() -> ExitCode {
    // clap exits with code 2 on usage errors
    let cli = Cli::parse();
    configure_threads();

    let overrides = Overrides {
        dimension: cli.n,
        truncation: cli.trunc,
        working_radius: cli.radius,
        circle_grid: cli.grid,
        seed: cli.seed,
    };
    let cfg = match LabConfig::load(cli.config.as_deref(), &overrides) {
        Ok(cfg) => cfg,
        Err(err) => {
            eprintln!("lab: {err}");
            return ExitCode::from(2);
        }
    };

    let report = match run_command(cli.command.name(), &cfg) {
        Ok(report) => report,
        Err(err) => {
            eprintln!("lab: {err}");
            return ExitCode::from(2);
        }
    };

    if matches!(cli.command, Command::Verify) {
        for row in &report.rows {
            if let [lab_cli::Value::Int(idx), lab_cli::Value::Text(name), lab_cli::Value::Bool(passed)] =
                row.as_slice()
            {
                eprintln!(
                    "criterion {idx:>2} ({name}): {}",
                    if *passed { "PASS" } else { "FAIL" }
                );
            }
        }
    }

    let rendered = report.render(cli.format.into());
    if let Some(path) = &cli.out {
        if let Err(err) = std::fs::write(path, &rendered) {
            eprintln!("lab: cannot write {}: {err}", path.display());
            return ExitCode::from(2);
        }
    } else {
        print!("{rendered}");
    }

    ExitCode::from(report.exit_code() as u8)
}
