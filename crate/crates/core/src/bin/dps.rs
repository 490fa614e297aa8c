use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use dirac_wigner::experiments::{run, RunConfig};
use dirac_wigner::Error;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Experiment {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    Diagnostics,
}

impl Experiment {
    fn name(self) -> &'static str {
        match self {
            Experiment::Fig1 => "fig1",
            Experiment::Fig2 => "fig2",
            Experiment::Fig3 => "fig3",
            Experiment::Fig4 => "fig4",
            Experiment::Fig5 => "fig5",
            Experiment::Diagnostics => "diagnostics",
        }
    }
}

/// Dirac Wigner phase-space experiments.
///
/// Set DPS_THREADS to cap worker threads (0 = one per core).
#[derive(Debug, Parser)]
#[command(name = "dps", version)]
struct Cli {
    #[arg(value_enum)]
    experiment: Experiment,
    /// TOML run configuration; missing keys take the figure defaults.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Lattice points, overriding the configuration.
    #[arg(long)]
    n: Option<usize>,
    /// Also write CSV tables next to the archives.
    #[arg(long)]
    csv: bool,
}

fn threads() -> Result<usize, String> {
    match std::env::var("DPS_THREADS") {
        Ok(v) => v.trim().parse().map_err(|_| format!("DPS_THREADS must be a non-negative integer, got {v:?}")),
        Err(_) => Ok(0),
    }
}

fn configure(cli: &Cli) -> Result<RunConfig, Error> {
    let mut cfg = match &cli.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    if let Some(out) = &cli.out {
        cfg.out_dir = out.clone();
    }
    if let Some(n) = cli.n {
        cfg.n = n;
    }
    cfg.csv |= cli.csv;
    cfg.validate()?;
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let n_threads = match threads() {
        Ok(n) => n,
        Err(msg) => {
            eprintln!("dps: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n_threads).build_global() {
        eprintln!("dps: thread pool: {e}");
        return ExitCode::from(2);
    }
    let cfg = match configure(&cli) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("dps: {e}");
            return ExitCode::from(2);
        }
    };
    match run(cli.experiment.name(), &cfg) {
        Ok(report) => {
            print!("{}", report.to_text());
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Error::Config(msg)) => {
            eprintln!("dps: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("dps: {e}");
            ExitCode::from(1)
        }
    }
}
