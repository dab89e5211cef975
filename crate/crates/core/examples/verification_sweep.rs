//! Runs a verification suite and prints its summary, or JSON with `--json`.
//!
//! ```text
//! cargo run --example verification_sweep -- cycle 7 3
//! ```

use std::env;

use edgereg::verify::{run_suite, RecordLevel};
use edgereg::{Suite, SuiteConfig};

fn main() -> Result<(), edgereg::Error> {
    let args: Vec<String> = env::args().skip(1).collect();
    let json = args.iter().any(|a| a == "--json");
    let positional: Vec<&String> = args.iter().filter(|a| !a.starts_with("--")).collect();
    let suite: Suite = positional.first().map_or("forest", |s| s.as_str()).parse().map_err(edgereg::VerifyError::Usage)?;
    let max_n = positional.get(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let max_s = positional.get(2).and_then(|s| s.parse().ok()).unwrap_or(2);

    let config = SuiteConfig { max_n, max_s, records: RecordLevel::Failures, ..SuiteConfig::default() };
    let report = run_suite(suite, &config)?;
    if json {
        println!("{}", report.to_json());
    } else {
        println!("{}", report.summary());
        for g in &report.groups {
            println!("  {:<20} n={} s={} {:>7} instances {:>3} failures", g.check, g.n, g.s, g.instances, g.failures);
        }
    }
    std::process::exit(report.exit_code());
}
