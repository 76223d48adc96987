//! Walks one 321-avoider through every construction in the crate.
//!
//! ```bash
//! cargo run -p permbij --example golden_example
//! cargo run -p permbij --example golden_example -- "2 1 4 3"
//! ```

use permbij::bijection::{gamma_iterative, theta_rsk};
use permbij::rsk::{dyck_from_tableaux, rsk_tableaux, word};
use permbij::template::{
    build_t_hat, build_t_sigma, l_corners, rcl_corners, realize, render_ascii,
};
use permbij::Permutation;

fn main() -> Result<(), permbij::Error> {
    let input = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "14237586".to_string());
    let sigma = Permutation::parse(&input)?;

    println!("sigma        {sigma}");
    println!("rc(sigma)    {}", sigma.rc());
    println!("irc(sigma)   {}", sigma.irc());
    println!("L-corners    {}", l_corners(&sigma)?);
    println!("rcL-corners  {}", rcl_corners(&sigma)?);

    let t = build_t_sigma(&sigma)?;
    println!(
        "\nT_sigma (realizes to {}):\n{}",
        realize(&t)?,
        render_ascii(&t, Some(&sigma))?
    );

    let hat = build_t_hat(&sigma)?;
    let gamma = realize(&hat)?;
    println!(
        "\ndiagonal template for gamma:\n{}",
        render_ascii(&hat, Some(&gamma))?
    );
    println!(
        "gamma        {gamma} (rewriting gives {})",
        gamma_iterative(&sigma)?
    );

    let pair = rsk_tableaux(&sigma)?;
    println!(
        "\ninsertion\n{}\nrecording\n{}",
        pair.insertion, pair.recording
    );
    let path = dyck_from_tableaux(&pair.insertion, &pair.recording)?;
    println!(
        "Dyck path    {} | {}",
        word(path.first_half()),
        word(path.second_half())
    );
    println!("theta        {}", theta_rsk(&sigma)?);
    println!("gamma(irc)   {}", gamma_iterative(&sigma.irc())?);
    Ok(())
}
