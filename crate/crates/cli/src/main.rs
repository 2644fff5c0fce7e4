use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use isotriv::ordinarity::{CurveId, Supplied};
use isotriv::{Error, SpecDocument};

mod commands;
mod render;

#[derive(Parser)]
#[command(name = "isotriv", version, about = "Invariants and ordinarity of isotrivial elliptic surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Tsv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Line-bundle degrees, chi, Euler number, Hodge numbers and singular fibers.
    Invariants {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Ordinarity verdict, with the Hasse divisor when E is ordinary.
    Decide {
        file: PathBuf,
        /// Ordinarity of a curve without a model: `Dp=ordinary`,
        /// `E=supersingular`, `Dpp=1`. Curves: E, C, Dp, Dpp, Dppp.
        #[arg(long = "set", value_name = "CURVE=VALUE", value_parser = parse_override)]
        overrides: Vec<(CurveId, Supplied)>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Runs the built-in suite of published example values.
    VerifyExamples {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Reduces the document at every prime 5 <= p <= N.
    Scan {
        file: PathBuf,
        #[arg(long)]
        pmax: u64,
        #[arg(long, value_enum, default_value = "tsv")]
        format: TableFormat,
    },
}

fn parse_override(s: &str) -> Result<(CurveId, Supplied), String> {
    let (curve, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected CURVE=VALUE, got `{s}`"))?;
    let id = CurveId::from_name(curve.trim())
        .ok_or_else(|| format!("unknown curve `{curve}` (expected E, C, Dp, Dpp or Dppp)"))?;
    let v = Supplied::parse(value.trim()).ok_or_else(|| {
        format!("unknown value `{value}` (expected ordinary, supersingular or a p-rank)")
    })?;
    Ok((id, v))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 2,
        Error::BoundExceeded(_) => 3,
        _ => 1,
    }
}

fn load(path: &Path) -> Result<SpecDocument, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    SpecDocument::parse(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn run(cli: Cli) -> Result<(String, bool), Error> {
    match cli.command {
        Command::Invariants { file, format } => {
            let doc = load(&file)?;
            let out = commands::invariants(&doc)?;
            Ok((
                match format {
                    Format::Text => render::invariants_text(&out),
                    Format::Json => render::json(&out),
                },
                true,
            ))
        }
        Command::Decide {
            file,
            overrides,
            format,
        } => {
            let doc = load(&file)?;
            let supplied: BTreeMap<_, _> = overrides.into_iter().collect();
            let out = commands::decide(&doc, &supplied)?;
            Ok((
                match format {
                    Format::Text => render::decision_text(&out),
                    Format::Json => render::json(&out),
                },
                true,
            ))
        }
        Command::VerifyExamples { format } => {
            let results = isotriv::golden::run_golden();
            let ok = results.iter().all(|r| r.passed);
            Ok((
                match format {
                    Format::Text => render::golden_text(&results),
                    Format::Json => render::json(&results),
                },
                ok,
            ))
        }
        Command::Scan { file, pmax, format } => {
            let doc = load(&file)?;
            let report = isotriv::scan::scan(&doc, pmax)?;
            Ok((
                match format {
                    TableFormat::Tsv => render::scan_tsv(&report),
                    TableFormat::Json => render::scan_json(&report),
                },
                true,
            ))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::Invalid(violations) = &e {
                for v in violations {
                    eprintln!("  {v}");
                }
            }
            ExitCode::from(exit_code(&e))
        }
    }
}
