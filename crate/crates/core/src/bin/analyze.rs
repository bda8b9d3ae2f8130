use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use regloc::groebner::set_default_spair_budget;
use regloc::scenario::{list_builtins, run_scenario, Scenario};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Checks {
    All,
    Fast,
}

/// Classify points of algebras over valuation rings and report weak
/// dimensions, cotangent spaces and regular sequences.
#[derive(Debug, Parser)]
#[command(name = "analyze", version)]
struct Args {
    /// Scenario JSON file or builtin name.
    #[arg(required_unless_present = "list_builtins")]
    scenario: Option<String>,
    /// Also write the JSON report here.
    #[arg(long, value_name = "FILE")]
    json: Option<PathBuf>,
    /// `fast` skips the quotient consistency check.
    #[arg(long, value_enum, default_value = "all")]
    checks: Checks,
    /// S-pair reductions allowed per Gröbner basis.
    #[arg(long, value_name = "N")]
    spair_budget: Option<usize>,
    /// Print the builtin scenarios and exit.
    #[arg(long)]
    list_builtins: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    if args.list_builtins {
        for (name, description) in list_builtins() {
            println!("{name:20} {description}");
        }
        return ExitCode::SUCCESS;
    }
    if let Some(n) = args.spair_budget {
        set_default_spair_budget(n);
    }
    let name = args.scenario.expect("required by clap");
    let report =
        Scenario::load(&name).and_then(|sc| run_scenario(&sc, matches!(args.checks, Checks::All)));
    let report = match report {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    print!("{}", report.to_text());
    if let Some(path) = &args.json {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(1);
        }
    }
    if report.has_unknown() {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}
