//! Thin command-line front end over the library: run sweeps, verify against
//! the golden tables, explain a single case, export, and audit the ledger.

use almost_fano::{
    audit, catalog, config_path, default_data_dir, enumerate, explain::explain, export,
    golden_dir, ledger_path, Family, Ledger, SweepConfig, TableId,
};
use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "almost-fano", version, about = "Exact enumeration of rank-2 almost Fano threefolds with divisorial anticanonical morphism")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Family selector: dp, cb, bc, bp or all.
    #[arg(long, default_value = "all")]
    family: String,
    /// Sweep configuration file (defaults to data/config/default).
    #[arg(long)]
    config: Option<PathBuf>,
    /// Golden-table directory (defaults to data/golden).
    #[arg(long)]
    golden: Option<PathBuf>,
    /// Output file (defaults to stdout).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format.
    #[arg(long, default_value = "csv")]
    format: String,
    /// Disable the geometric-exclusion ledger.
    #[arg(long)]
    no_ledger: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run a family sweep and write the surviving rows.
    Enumerate(Common),
    /// Run all requested sweeps and diff against the golden tables.
    Verify(Common),
    /// Print the full derivation chain of one table row, e.g. A4-5.
    Explain {
        case: String,
        #[command(flatten)]
        common: Common,
    },
    /// Export candidates or golden rows in the requested format.
    Export {
        /// Export source: candidates or golden.
        #[arg(long, default_value = "candidates")]
        source: String,
        #[command(flatten)]
        common: Common,
    },
    /// Ledger-off coverage check: every extra survivor must match an entry.
    Audit(Common),
}

struct Env {
    cfg: SweepConfig,
    ledger: Ledger,
    golden: Vec<catalog::GoldenRow>,
}

fn families(selector: &str) -> Result<Vec<Family>, String> {
    if selector == "all" {
        return Ok(Family::ALL.to_vec());
    }
    Family::parse(selector).map(|f| vec![f]).ok_or(format!(
        "unknown family {selector:?}; expected dp, cb, bc, bp or all"
    ))
}

fn load_env(common: &Common) -> Result<Env, String> {
    let data = default_data_dir();
    let config_file = common.config.clone().unwrap_or_else(|| config_path(&data));
    let mut cfg = if config_file.exists() {
        SweepConfig::load(&config_file).map_err(|e| e.to_string())?
    } else if common.config.is_some() {
        return Err(format!("config file {} not found", config_file.display()));
    } else {
        SweepConfig::default()
    };
    cfg.use_ledger = !common.no_ledger;
    let ledger_file = ledger_path(&data);
    let ledger = if ledger_file.exists() {
        Ledger::load(&ledger_file).map_err(|e| e.to_string())?
    } else {
        Ledger::empty()
    };
    let golden_directory = common.golden.clone().unwrap_or_else(|| golden_dir(&data));
    let golden = catalog::load_golden(&golden_directory).map_err(|e| e.to_string())?;
    Ok(Env { cfg, ledger, golden })
}

fn write_out(common: &Common, text: &str) -> Result<(), String> {
    match &common.out {
        Some(path) => std::fs::write(path, text).map_err(|e| e.to_string()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Enumerate(common) => {
            let env = load_env(&common)?;
            let format = export::ExportFormat::parse(&common.format)
                .ok_or(format!("unknown format {:?}", common.format))?;
            let mut text = String::new();
            for family in families(&common.family)? {
                let cands = enumerate(family, &env.cfg, &env.ledger);
                text.push_str(
                    &export::export_candidates(&cands, family, format).map_err(|e| e.to_string())?,
                );
            }
            write_out(&common, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(common) => {
            let env = load_env(&common)?;
            let mut all_clean = true;
            let mut summary = Vec::new();
            for family in families(&common.family)? {
                let cands = enumerate(family, &env.cfg, &env.ledger);
                let report = catalog::diff(&cands, &env.golden, family, &env.cfg);
                let table = TableId::of_family(family);
                let total = report.matched.len() + report.missing.len();
                let status = if report.is_clean() { "PASS" } else { "FAIL" };
                println!("{table} {}/{} {status}", report.matched.len(), total);
                for m in &report.missing {
                    println!("  missing: {m}");
                }
                for e in &report.extra {
                    println!("  extra: {e}");
                }
                for f in &report.field_mismatches {
                    println!("  mismatch: {f}");
                }
                summary.push(format!("{table} {}/{}", report.matched.len(), total));
                all_clean &= report.is_clean();
            }
            println!("{}", summary.join(" "));
            Ok(if all_clean { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Explain { case, common } => {
            let env = load_env(&common)?;
            let text =
                explain(&case, &env.golden, &env.cfg, &env.ledger).map_err(|e| e.to_string())?;
            write_out(&common, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Export { source, common } => {
            let env = load_env(&common)?;
            let format = export::ExportFormat::parse(&common.format)
                .ok_or(format!("unknown format {:?}", common.format))?;
            let mut text = String::new();
            match source.as_str() {
                "candidates" => {
                    for family in families(&common.family)? {
                        let cands = enumerate(family, &env.cfg, &env.ledger);
                        text.push_str(
                            &export::export_candidates(&cands, family, format)
                                .map_err(|e| e.to_string())?,
                        );
                    }
                }
                "golden" => {
                    let tables: Vec<TableId> = if common.family == "all" {
                        vec![TableId::A1, TableId::A2, TableId::A3, TableId::A4, TableId::A5]
                    } else {
                        families(&common.family)?
                            .into_iter()
                            .map(TableId::of_family)
                            .collect()
                    };
                    for table in tables {
                        text.push_str(
                            &export::export_golden(&env.golden, table, format, &env.cfg)
                                .map_err(|e| e.to_string())?,
                        );
                    }
                }
                other => return Err(format!("unknown source {other:?}")),
            }
            write_out(&common, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Audit(common) => {
            let env = load_env(&common)?;
            let mut complete = true;
            for family in families(&common.family)? {
                let report = audit(family, &env.cfg, &env.ledger);
                println!(
                    "{} ghosts: {} ({} unexplained)",
                    family.code(),
                    report.ghosts.len(),
                    report.unexplained().len()
                );
                for (id, matched) in &report.ghosts {
                    match matched {
                        Some(entry) => println!("  {id} -> {entry}"),
                        None => println!("  {id} -> UNEXPLAINED"),
                    }
                }
                complete &= report.is_complete();
            }
            Ok(if complete { ExitCode::SUCCESS } else { ExitCode::from(3) })
        }
    }
}
