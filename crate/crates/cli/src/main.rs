use clap::{Parser, Subcommand, ValueEnum};
use hazcell_cli::report::ReportKind;
use hazcell_cli::{assess, report, validate, CliError};
use std::path::PathBuf;
use std::process::ExitCode;

/// Assess cellular network assets against coastal-flood, riverine-flood, and
/// tropical-cyclone hazard layers, producing per-region damage-cost CSVs,
/// ensemble summaries, and GeoJSON for mapping.
#[derive(Parser)]
#[command(name = "hazcell", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse the manifest and every referenced input, reporting problems
    Validate {
        /// Assessment manifest (JSON)
        #[arg(long)]
        manifest: PathBuf,
    },
    /// Run all manifest jobs and write exposure, region, and summary CSVs
    Assess {
        /// Assessment manifest (JSON)
        #[arg(long)]
        manifest: PathBuf,
        /// Output directory (default: the manifest's output_dir)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads; 0 picks automatically
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// Build tidy report tables from assessment outputs
    Report {
        /// Directory written by `assess`
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Export per-region aggregates for one scenario as GeoJSON
    ExportGeojson {
        /// Directory written by `assess`
        #[arg(long)]
        out: PathBuf,
        /// Scenario key, e.g. coastal__historical__1980__rp100__p95_sub
        #[arg(long)]
        scenario: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Counts,
    Costs,
    #[value(name = "pct_change")]
    PctChange,
    Zonal,
}

impl From<KindArg> for ReportKind {
    fn from(kind: KindArg) -> ReportKind {
        match kind {
            KindArg::Counts => ReportKind::Counts,
            KindArg::Costs => ReportKind::Costs,
            KindArg::PctChange => ReportKind::PctChange,
            KindArg::Zonal => ReportKind::Zonal,
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Validate { manifest } => validate::cmd_validate(&manifest),
        Command::Assess {
            manifest,
            out,
            workers,
        } => assess::cmd_assess(&manifest, out.as_deref(), workers).map(|_| ()),
        Command::Report { out, kind } => report::cmd_report(&out, kind.into()).map(|_| ()),
        Command::ExportGeojson { out, scenario } => {
            report::cmd_export_geojson(&out, &scenario).map(|_| ())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("HAZCELL_LOG", "warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
