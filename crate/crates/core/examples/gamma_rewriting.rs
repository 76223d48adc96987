//! Traces the 132-rewriting definition of gamma one step at a time.
//!
//! ```bash
//! cargo run -p permbij --example gamma_rewriting -- 14237586
//! ```

use permbij::bijection::{gamma_step, gamma_template};
use permbij::{Pattern, Permutation};

fn main() -> Result<(), permbij::Error> {
    let input = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "14237586".to_string());
    let sigma = Permutation::parse(&input)?;
    if !sigma.avoids(Pattern::P321) {
        eprintln!("{sigma} contains 321; gamma is only defined on 321-avoiders");
        std::process::exit(2);
    }

    let mut current = sigma.clone();
    let mut steps = 0;
    println!("{current}");
    while let Some(t) = current.smallest_132() {
        let next = gamma_step(&current).expect("a 132 occurrence exists");
        println!("  rewrite positions ({},{},{}) -> {next}", t.i, t.j, t.k);
        current = next;
        steps += 1;
    }
    println!(
        "{steps} rewrites; result avoids 132: {}",
        current.avoids(Pattern::P132)
    );
    println!(
        "template route agrees: {}",
        gamma_template(&sigma)? == current
    );
    Ok(())
}
