use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use etamu::metrics::CurveKind;
use etamu::ApproxKind;
use etamu_cli::sweep::{self, meta_path, write_file};
use etamu_cli::validate::{self, Suite};
use etamu_cli::{fit, CliError, CliResult, Scenario, SnrGrid};

/// Error rates and ergodic capacity of η–μ fading with MRC under generalized
/// Gaussian noise.
#[derive(Parser)]
#[command(name = "etamu", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Average error rate: closed form vs quadrature over an SNR grid.
    Aber(SweepArgs),
    /// Ergodic capacity: closed form vs quadrature over an SNR grid.
    Acc(SweepArgs),
    /// Run invariant checks and print a pass/fail table.
    Validate {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Also write the report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fit a four-term exponential sum and store the record.
    Fit {
        /// `log2` or `qa<a>` (e.g. `qa2`, `qa0.5`).
        target: String,
        /// `decaying` or `saturating`.
        kind: String,
        /// Fit window `lo:hi` (default 1e-3:1e3 for log2, 0.1:40 for qa).
        domain: Option<String>,
        /// Record path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    scenario: PathBuf,
    /// CSV path; overrides the scenario's output entry. stdout when neither is set.
    #[arg(long)]
    out: Option<PathBuf>,
    /// `start:stop:step` in dB; overrides the scenario grid.
    #[arg(long)]
    grid: Option<String>,
    /// Overrides the scenario seed (recorded in the metadata).
    #[arg(long)]
    seed: Option<u64>,
    /// Relative-difference budget above which rows are flagged.
    #[arg(long)]
    budget: Option<f64>,
}

fn sweep_cmd(kind: CurveKind, args: SweepArgs) -> CliResult<()> {
    let mut scenario = Scenario::load(&args.scenario)?;
    if let Some(g) = &args.grid {
        scenario.grid = g.parse::<SnrGrid>()?;
    }
    if let Some(s) = args.seed {
        scenario.seed = s;
    }
    if let Some(b) = args.budget {
        scenario.budget = Some(b);
    }
    scenario.validate()?;
    let result = sweep::run(kind, &scenario, None)?;
    let out = args.out.or(match kind {
        CurveKind::Aber => scenario.output_aber.clone(),
        CurveKind::Acc => scenario.output_acc.clone(),
    });
    let csv = result.to_csv();
    match &out {
        Some(path) => {
            write_file(path, &csv)?;
            write_file(&meta_path(path), &result.metadata(&scenario))?;
        }
        None => print!("{csv}"),
    }
    for r in result.flagged() {
        eprintln!(
            "flagged: {} dB rel_diff {:.3e} exceeds budget {}",
            r.snr_db, r.rel_diff, result.budget
        );
    }
    let line = result.summary(&scenario, out.as_deref());
    if out.is_some() {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
    Ok(())
}

fn validate_cmd(suite: Suite, seed: u64, out: Option<PathBuf>) -> CliResult<()> {
    let report = validate::run(suite, seed)?;
    let text = report.render();
    print!("{text}");
    if let Some(p) = out {
        write_file(&p, &text)?;
    }
    match report.failures() {
        0 => Ok(()),
        n => Err(CliError::Validation(format!(
            "{n} check(s) in suite {} failed",
            suite.name()
        ))),
    }
}

fn fit_cmd(target: &str, kind: &str, domain: Option<&str>, out: Option<PathBuf>) -> CliResult<()> {
    let kind: ApproxKind = kind.parse().map_err(CliError::config)?;
    let outcome = fit::run(target, kind, domain)?;
    let record = outcome.approx.to_record();
    let mut line = format!("max_abs_err {:e}", outcome.approx.max_abs_err);
    if let Some(p) = outcome.preset_err {
        line.push_str(&format!(" (tabulated fit on the same grid: {p:e})"));
    }
    match out {
        Some(p) => {
            write_file(&p, &record)?;
            println!("{line}");
        }
        None => {
            print!("{record}");
            eprintln!("{line}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Aber(a) => sweep_cmd(CurveKind::Aber, a),
        Command::Acc(a) => sweep_cmd(CurveKind::Acc, a),
        Command::Validate { suite, seed, out } => validate_cmd(suite, seed, out),
        Command::Fit {
            target,
            kind,
            domain,
            out,
        } => fit_cmd(&target, &kind, domain.as_deref(), out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("etamu: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
