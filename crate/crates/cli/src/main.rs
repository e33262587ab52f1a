use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use freepairs_core::arith::parse::parse_ext;
use freepairs_core::arith::{Gf3, Scalar, SqMatrix, Q};
use freepairs_core::freeness::{certify, recheck, CertVerdict, Strength};
use freepairs_core::heisenberg::{classify_order2, lift_automorphism, IntMatrix2, InvolutionType};
use freepairs_core::places::PlaceSpec;
use freepairs_core::scenarios::{
    emit_report, run_heisenberg, run_scenario, run_weyl, scenario_table, Mode, ReportFormat, ScenarioReport,
    DEFAULT_SEED,
};

#[derive(Parser)]
#[command(name = "freepairs", version, about = "Exact checks of free symmetric and unitary pairs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a scenario and print its report.
    Run {
        #[command(subcommand)]
        target: RunTarget,
    },
    /// Classify an integer matrix of order two up to conjugacy in GL(2, Z).
    Classify {
        /// Entries a,b,c,d of [[a, b], [c, d]].
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        matrix: Vec<i64>,
    },
    /// Certify a pair {A, B^-1 A B} at a place given in JSON.
    Certify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        place: PathBuf,
    },
    /// Print the scenario table.
    List,
}

#[derive(Subcommand)]
enum RunTarget {
    /// Heisenberg group ring involution of type I-IV.
    Heis {
        #[arg(long = "type")]
        ty: InvolutionType,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        n: i64,
        #[arg(long)]
        mode: Mode,
        #[command(flatten)]
        out: Output,
    },
    /// Weyl algebra involution, case 1 or 2.
    Weyl {
        #[arg(long)]
        case: u8,
        #[command(flatten)]
        out: Output,
    },
    /// Any scenario by id, as printed by `list`.
    Id {
        id: String,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Output {
    /// Also write the JSON report to this file.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Seed for the random word sample.
    #[arg(long, value_parser = parse_seed, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value = "text")]
    format: ReportFormat,
}

fn parse_seed(s: &str) -> std::result::Result<u64, String> {
    let r = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(h) => u64::from_str_radix(h, 16),
        None => s.parse(),
    };
    r.map_err(|e| format!("bad seed {s:?}: {e}"))
}

#[derive(Deserialize)]
struct PairInput {
    #[serde(rename = "A")]
    a: Vec<Vec<String>>,
    #[serde(rename = "B")]
    b: Vec<Vec<String>>,
    #[serde(default)]
    strength: Option<Strength>,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::Run { target } => {
            let (report, out) = match target {
                RunTarget::Heis { ty, m, n, mode, out } => (run_heisenberg(ty, m, n, mode, out.seed)?, out),
                RunTarget::Weyl { case, out } => (run_weyl(case)?, out),
                RunTarget::Id { id, out } => (run_scenario(&id, out.seed)?, out),
            };
            emit(&report, &out)?;
            if !report.as_expected() {
                eprintln!(
                    "verdict {} differs from the expected {}",
                    report.verdict, report.expected_verdict
                );
            }
            Ok(report.as_expected())
        }
        Cmd::Classify { matrix } => {
            let [a, b, c, d] = matrix[..] else {
                bail!("--matrix takes exactly four entries");
            };
            let m = IntMatrix2::new(a, b, c, d)?;
            let (class, t) = classify_order2(&m)?;
            let aut = lift_automorphism(&m);
            println!("class: {class}");
            println!("conjugator: {t}");
            println!("automorphism: x -> {}, y -> {}", aut.x, aut.y);
            Ok(true)
        }
        Cmd::Certify { input, place } => {
            let pair: PairInput = serde_json::from_str(&read(&input)?).context("reading the pair")?;
            let spec: PlaceSpec = serde_json::from_str(&read(&place)?).context("reading the place")?;
            match spec.field.as_str() {
                "Q" => certify_with::<Q>(&pair, &spec),
                "GF(3)" => certify_with::<Gf3>(&pair, &spec),
                f => bail!("unsupported field {f:?}; use \"Q\" or \"GF(3)\""),
            }
        }
        Cmd::List => {
            for e in scenario_table() {
                println!("{:<26} {:<10} {}", e.id, e.expected.to_string(), e.description);
            }
            Ok(true)
        }
    }
}

fn read(p: &PathBuf) -> Result<String> {
    fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
}

fn emit(report: &ScenarioReport, out: &Output) -> Result<()> {
    print!("{}", emit_report(report, out.format));
    if let Some(path) = &out.json {
        fs::write(path, emit_report(report, ReportFormat::Json))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn certify_with<F: Scalar>(pair: &PairInput, spec: &PlaceSpec) -> Result<bool> {
    let place = spec.build::<F>()?;
    let desc = place.descriptor().clone();
    let matrix = |rows: &[Vec<String>]| -> Result<_> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_ext(s, &desc)).collect::<std::result::Result<Vec<_>, _>>())
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(SqMatrix::new(parsed)?)
    };
    let a = matrix(&pair.a)?;
    let b = matrix(&pair.b)?;
    let cert = certify(&a, &b, &place, pair.strength.unwrap_or(Strength::ExactPair))?;
    let issues = recheck(&cert, &a, &b, &place)?;
    println!("{}", serde_json::to_string_pretty(&cert)?);
    for i in &issues {
        eprintln!("independent check: {i}");
    }
    Ok(cert.verdict == CertVerdict::Certified && issues.is_empty())
}
