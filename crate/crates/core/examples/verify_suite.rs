//! Runs the full check battery and prints the table; pass `--json` for the
//! report.

use tspaces::suite::{run_suite, SuiteConfig};

fn main() -> tspaces::Result<()> {
    let report = run_suite(&SuiteConfig::default())?;
    if std::env::args().any(|a| a == "--json") {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_table());
    }
    if !report.all_passed() {
        std::process::exit(1);
    }
    Ok(())
}
