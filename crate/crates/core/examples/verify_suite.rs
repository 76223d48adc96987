//! Runs every named check exhaustively and prints a summary per check.
//!
//! ```bash
//! cargo run --release -p permbij --example verify_suite -- 9
//! ```

use permbij::harness::{run_suite, Check, SuiteConfig};

fn main() -> Result<(), permbij::Error> {
    let n_max: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(7);
    let reports = run_suite(1, n_max, Check::ALL, &SuiteConfig::default())?;

    let mut all_passed = true;
    for check in Check::ALL {
        let mine: Vec<_> = reports.iter().filter(|r| r.check == *check).collect();
        let cases: usize = mine.iter().map(|r| r.cases).sum();
        let failures: usize = mine.iter().map(|r| r.failure_count).sum();
        let ms: u64 = mine.iter().filter_map(|r| r.elapsed_ms).sum();
        all_passed &= failures == 0;
        let status = if failures == 0 { "ok" } else { "FAILED" };
        println!(
            "{:<24} n=1..{n_max}  cases={cases:<6} failures={failures:<3} {ms:>5} ms  {status}",
            check.name()
        );
    }
    if !all_passed {
        std::process::exit(1);
    }
    Ok(())
}
