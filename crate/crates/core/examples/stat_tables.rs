//! Prints the joint (fixed points, excedances) distribution of both classes side by side.
//!
//! ```bash
//! cargo run -p permbij --example stat_tables -- 6
//! ```

use permbij::harness::stats_table;
use permbij::Pattern;

fn main() -> Result<(), permbij::Error> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);
    let a = stats_table(n, Pattern::P321)?;
    let b = stats_table(n, Pattern::P132)?;

    println!("n={n}  fix exc   321   132");
    let mut keys: Vec<(usize, usize)> = a
        .rows
        .iter()
        .chain(&b.rows)
        .map(|r| (r.fixed_points, r.excedances))
        .collect();
    keys.sort();
    keys.dedup();
    for (fix, exc) in keys {
        println!(
            "      {fix:>3} {exc:>3} {:>5} {:>5}",
            a.get(fix, exc),
            b.get(fix, exc)
        );
    }
    println!(
        "totals {} / {}; identical: {}",
        a.total(),
        b.total(),
        a.same_distribution(&b)
    );
    Ok(())
}
