use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use quartix::config::{parse_config, Config};
use quartix::report::to_json;
use quartix::{count_gibbs_measures, AnalysisOptions, AnalysisReport64, OracleMode};

#[derive(Parser)]
#[command(
    version,
    about = "Positive fixed points of quartic operators and Gibbs measure counts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze an operator config.
    Analyze(Common),
    /// Count Gibbs measures for a potential config.
    Gibbs(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Common {
    config: PathBuf,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Relative zero band used when classifying signs of P5 at its extrema.
    #[arg(long)]
    tol: Option<f64>,
    /// Skip the closed form.
    #[arg(long, conflicts_with = "no_oracle")]
    oracle_only: bool,
    /// Closed form only; refuses when the oracle is required.
    #[arg(long)]
    no_oracle: bool,
}

enum Failure {
    Input(String),
    Io(String),
}

fn run(cmd: &Command) -> Result<AnalysisReport64, Failure> {
    let (common, want_gibbs) = match cmd {
        Command::Analyze(c) => (c, false),
        Command::Gibbs(c) => (c, true),
    };
    let mut opts = AnalysisOptions::<f64>::default();
    if let Some(tol) = common.tol {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Failure::Input(format!("--tol must be positive, got {tol}")));
        }
        opts.band_factor = tol;
    }
    opts.mode = match (common.oracle_only, common.no_oracle) {
        (true, _) => OracleMode::OracleOnly,
        (_, true) => OracleMode::ClosedFormOnly,
        _ => OracleMode::Both,
    };
    let text = std::fs::read_to_string(&common.config)
        .map_err(|e| Failure::Io(format!("{}: {e}", common.config.display())))?;
    let input = |e: quartix::Error| Failure::Input(e.to_string());
    match (parse_config(&text).map_err(input)?, want_gibbs) {
        (Config::Operator(cfg), false) => cfg.operator().and_then(|op| op.analyze(&opts)).map_err(input),
        (Config::Gibbs(cfg), true) => {
            count_gibbs_measures(&cfg.potentials, &cfg.quadrature, &opts).map_err(input)
        }
        (Config::Operator(_), true) => Err(Failure::Input(
            "config has mode \"operator\"; use `analyze`".into(),
        )),
        (Config::Gibbs(_), false) => Err(Failure::Input("config has mode \"gibbs\"; use `gibbs`".into())),
    }
}

fn emit(report: &AnalysisReport64, format: Format, out: Option<&Path>) -> std::io::Result<()> {
    let body = match format {
        Format::Json => to_json(report),
        Format::Text => report.to_text(),
    };
    match out {
        Some(path) => std::fs::write(path, body),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors, which we reserve for inconsistent reports.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let common = match &cli.command {
        Command::Analyze(c) | Command::Gibbs(c) => c,
    };
    let report = match run(&cli.command) {
        Ok(r) => r,
        Err(Failure::Input(msg)) | Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    if let Err(e) = emit(&report, common.format, common.out.as_deref()) {
        eprintln!("error: writing report: {e}");
        return ExitCode::from(1);
    }
    if report.consistent {
        ExitCode::SUCCESS
    } else {
        eprintln!("closed form and oracle disagree; see classification notes");
        ExitCode::from(2)
    }
}
