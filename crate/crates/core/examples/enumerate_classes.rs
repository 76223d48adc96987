//! Enumerates both avoidance classes and compares their sizes with the Catalan numbers.
//!
//! ```bash
//! cargo run -p permbij --example enumerate_classes -- 4
//! ```

use permbij::perm::{catalan, enumerate_avoiders};
use permbij::Pattern;

fn main() -> Result<(), permbij::Error> {
    let show: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(4);

    for pattern in [Pattern::P321, Pattern::P132] {
        let words: Vec<String> = enumerate_avoiders(show, pattern)?
            .map(|p| p.compact().unwrap_or_else(|| p.to_string()))
            .collect();
        println!("S_{show}({pattern}): {}", words.join(" "));
    }

    println!("\n n  |S_n(321)|  |S_n(132)|  C_n");
    for n in 1..=10 {
        let a = enumerate_avoiders(n, Pattern::P321)?.count();
        let b = enumerate_avoiders(n, Pattern::P132)?.count();
        println!("{n:>2}  {a:>10}  {b:>10}  {:>5}", catalan(n));
    }
    Ok(())
}
