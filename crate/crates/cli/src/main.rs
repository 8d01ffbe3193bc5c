//! `semiring-lab`: classify finite commutative semirings from the command
//! line, replay the golden example suite, and emit structured reports.
//!
//! Exit codes: 0 on success, 1 when `verify-paper` finds a mismatch, 2 when
//! the input fails to parse or validate.

mod golden;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use semiring_lab::catalog::{build_arc, CatalogSpec};
use semiring_lab::{classify, validate_semiring, Config, FiniteSemiring, RawSemiring};

#[derive(Parser)]
#[command(
    name = "semiring-lab",
    version,
    about = "Content-ideal classification of finite commutative semirings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the classification pipeline and print the verdicts.
    Classify(InputArgs),
    /// Replay the golden example suite; exits 1 if any row fails.
    VerifyPaper(VerifyArgs),
    /// Emit the full serialized report (JSON by default).
    Report(InputArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Catalog family: boolean, chain_c, lagrassa, nil_chain, b_n_i,
    /// truncation, chain_lattice, power_set_lattice.
    #[arg(long, conflicts_with = "input")]
    catalog: Option<String>,

    /// Numeric family parameter, repeatable: --param n=4 --param i=2.
    #[arg(long = "param", value_parser = parse_param)]
    params: Vec<(String, usize)>,

    /// JSON file holding raw operation tables
    /// ({"elements", "add", "mul", "zero", "one"}) or a catalog spec
    /// ({"family", "params"}).
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Maximum total degree for polynomial sweeps.
    #[arg(long, default_value_t = 3)]
    degree_bound: u32,

    /// Maximum carrier size for ideal-lattice enumeration.
    #[arg(long, default_value_t = 12)]
    lattice_cap: usize,

    /// Fan exhaustive sweeps across threads (verdicts are unchanged).
    #[arg(long)]
    parallel: bool,

    /// Seed for sampled sweeps; the finite pipeline is exhaustive and
    /// records the seed without consuming it.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Fan exhaustive sweeps across threads.
    #[arg(long)]
    parallel: bool,

    /// Seed for the sampled tropical sweep; all other rows are exhaustive.
    #[arg(long, default_value_t = 42)]
    seed: u64,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_param(raw: &str) -> Result<(String, usize), String> {
    let (key, value) = raw
        .split_once('=')
        .ok_or_else(|| format!("expected key=value, got \"{raw}\""))?;
    let value: usize = value
        .parse()
        .map_err(|_| format!("parameter {key} needs an unsigned integer, got \"{value}\""))?;
    Ok((key.to_string(), value))
}

/// Turn the input flags into a named, validated semiring.
fn resolve_input(args: &InputArgs) -> Result<(String, Arc<FiniteSemiring>), String> {
    match (&args.catalog, &args.input) {
        (Some(name), None) => {
            let spec = CatalogSpec::from_name(name, &args.params).map_err(|e| e.to_string())?;
            let ring = build_arc(&spec).map_err(|e| e.to_string())?;
            Ok((spec.name(), ring))
        }
        (None, Some(path)) => load_file(path),
        (None, None) => Err("provide --catalog NAME or --input FILE".into()),
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    }
}

fn load_file(path: &Path) -> Result<(String, Arc<FiniteSemiring>), String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| format!("{}: invalid JSON: {e}", path.display()))?;
    if value.get("mul").is_some() {
        let raw: RawSemiring = serde_json::from_value(value)
            .map_err(|e| format!("{}: bad operation tables: {e}", path.display()))?;
        let ring = validate_semiring(raw).map_err(|e| e.to_string())?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "input".into());
        Ok((name, Arc::new(ring)))
    } else {
        let spec = CatalogSpec::from_json(&value).map_err(|e| e.to_string())?;
        let ring = build_arc(&spec).map_err(|e| e.to_string())?;
        Ok((spec.name(), ring))
    }
}

fn run_pipeline(args: &InputArgs, default_format: Format) -> Result<(), String> {
    let (name, ring) = resolve_input(args)?;
    let config = Config {
        degree_bound: args.degree_bound,
        lattice_cap: args.lattice_cap,
        parallel: args.parallel,
        seed: args.seed,
    };
    let report = classify(&ring, &name, &config);
    match args.format.unwrap_or(default_format) {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("reports serialize")
            );
        }
    }
    Ok(())
}

fn run_verify(args: &VerifyArgs) -> ExitCode {
    let rows = golden::run_all(args.parallel, args.seed);
    let failed = rows.iter().filter(|r| !r.passed()).count();
    match args.format {
        Format::Text => {
            for row in &rows {
                match &row.outcome {
                    Ok(()) => println!("[PASS] {}", row.name),
                    Err(detail) => println!("[FAIL] {} — {detail}", row.name),
                }
            }
            println!("{} passed, {} failed", rows.len() - failed, failed);
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "name": r.name,
                        "pass": r.passed(),
                        "detail": r.outcome.as_ref().err(),
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::json!({
                    "rows": rows,
                    "failed": failed,
                }))
                .expect("rows serialize")
            );
        }
    }
    if failed > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let input_error = |e: String| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    };
    match &cli.command {
        Command::Classify(args) => match run_pipeline(args, Format::Text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => input_error(e),
        },
        Command::Report(args) => match run_pipeline(args, Format::Json) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => input_error(e),
        },
        Command::VerifyPaper(args) => run_verify(args),
    }
}
