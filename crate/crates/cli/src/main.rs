//! Batch front door: suite runner, star-product calculator, fixture listing.

use clap::{Parser, Subcommand};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use twistlab_core::suites::{self, RunReport, SuiteConfig};

#[derive(Parser)]
#[command(
    name = "twistlab",
    about = "Exact verification suites and star-product calculator for twist deformations on the ax+b double",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and emit a machine-readable report.
    Verify {
        /// Suite name, `appendix-a`, or `all`; repeatable.
        #[arg(long = "suite", required = true)]
        suites: Vec<String>,
        /// hbar truncation order (0..=4).
        #[arg(long, default_value_t = 3)]
        order: usize,
        /// Seed for sampled identities.
        #[arg(long, default_value_t = 0x7157_1ab)]
        seed: u64,
        /// Sample count for point-checked identities.
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// Report file path (defaults to TWISTLAB_REPORT_DIR/report.json
        /// when the variable is set).
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Compute a star product of two expressions, printed as an exact series.
    Star {
        /// One of: gstar, gdual-coadjoint, group.
        #[arg(long)]
        space: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long, default_value_t = 2)]
        order: usize,
    },
    /// Fixture registry operations.
    Fixtures {
        #[command(subcommand)]
        command: FixturesCommand,
    },
}

#[derive(Subcommand)]
enum FixturesCommand {
    /// List the shipped fixtures.
    List,
}

fn report_json(report: &RunReport) -> serde_json::Value {
    use serde_json::{json, Map, Value};
    let mut root = Map::new();
    root.insert(
        "config".into(),
        json!({
            "order": report.order,
            "seed": report.seed,
            "samples": report.samples,
        }),
    );
    let ledger: Map<String, Value> = report
        .ledger
        .iter()
        .map(|(k, v)| (k.to_string(), Value::String(v.to_string())))
        .collect();
    root.insert("ledger".into(), Value::Object(ledger));
    let suites: Vec<Value> = report
        .suites
        .iter()
        .map(|s| {
            json!({
                "name": s.name,
                "passed": s.all_passed(),
                "checks": s.checks.iter().map(|c| json!({
                    "label": c.label,
                    "passed": c.passed,
                    "details": c.details,
                })).collect::<Vec<_>>(),
                "derived": s.derived.iter().map(|(k, v)| json!({
                    "key": k,
                    "value": v,
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    root.insert("suites".into(), Value::Array(suites));
    root.insert(
        "summary".into(),
        json!({
            "total_checks": report.suites.iter().map(|s| s.checks.len()).sum::<usize>(),
            "passed": report.all_passed(),
        }),
    );
    serde_json::Value::Object(root)
}

fn run_verify(
    suite_names: Vec<String>,
    order: usize,
    seed: u64,
    samples: usize,
    report_path: Option<PathBuf>,
) -> ExitCode {
    if order > 4 {
        eprintln!("error: --order must lie in 0..=4");
        return ExitCode::from(2);
    }
    let config = SuiteConfig {
        order,
        seed,
        samples,
    };
    let started = std::time::Instant::now();
    let report = match suites::run(&suite_names, &config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    // human summary table; timings stay out of the machine report so that
    // replays are byte-identical
    eprintln!("{:<22} {:>7} {:>7}  status", "suite", "checks", "failed");
    for s in &report.suites {
        eprintln!(
            "{:<22} {:>7} {:>7}  {}",
            s.name,
            s.checks.len(),
            s.failures().len(),
            if s.all_passed() { "PASS" } else { "FAIL" }
        );
        for c in s.failures() {
            eprintln!(
                "    FAIL {} ({})",
                c.label,
                c.details.clone().unwrap_or_default()
            );
        }
    }
    eprintln!("elapsed: {:?}", started.elapsed());

    let path = report_path.or_else(|| {
        std::env::var_os("TWISTLAB_REPORT_DIR").map(|d| PathBuf::from(d).join("report.json"))
    });
    if let Some(path) = path {
        let json = report_json(&report);
        let text = format!(
            "{}\n",
            serde_json::to_string_pretty(&json).expect("serializable")
        );
        if let Some(parent) = path.parent() {
            let _ = std::fs::create_dir_all(parent);
        }
        match std::fs::File::create(&path).and_then(|mut f| f.write_all(text.as_bytes())) {
            Ok(()) => eprintln!("report written to {}", path.display()),
            Err(e) => {
                eprintln!("error: cannot write report {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
    } else {
        // no file requested: emit the canonical text form on stdout
        print!("{}", report.render_text());
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            suites: suite_names,
            order,
            seed,
            samples,
            report,
        } => run_verify(suite_names, order, seed, samples, report),
        Command::Star { space, f, g, order } => match suites::star_calc(&space, &f, &g, order) {
            Ok(out) => {
                println!("{out}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Command::Fixtures { command } => match command {
            FixturesCommand::List => {
                for (name, kind) in suites::fixtures_list() {
                    println!("{name:<20} {kind}");
                }
                ExitCode::SUCCESS
            }
        },
    }
}
