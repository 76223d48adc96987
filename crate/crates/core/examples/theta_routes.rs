//! Computes theta by all four routes and shows the shared template.
//!
//! ```bash
//! cargo run -p permbij --example theta_routes -- "2 4 1 3"
//! ```

use permbij::bijection::{
    theta_corners, theta_corners_template, theta_rsk, theta_rsk_template, theta_slide_flip,
    theta_slide_flip_template, theta_via_gamma,
};
use permbij::template::{build_t_rc_bar, rc_realize, render_ascii};
use permbij::Permutation;

fn main() -> Result<(), permbij::Error> {
    let input = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "14237586".to_string());
    let sigma = Permutation::parse(&input)?;

    let rc_bar = build_t_rc_bar(&sigma)?;
    println!(
        "rc-template (dots placed bottom-up):\n{}",
        render_ascii(&rc_bar, Some(&rc_realize(&rc_bar)?))?
    );

    let routes = [
        ("lattice path", theta_rsk(&sigma)?),
        ("rcL-corners", theta_corners(&sigma)?),
        ("slide and flip", theta_slide_flip(&sigma)?),
        ("gamma after irc", theta_via_gamma(&sigma)?),
    ];
    for (name, image) in &routes {
        println!("{name:>16}: {image}");
    }

    let t = theta_rsk_template(&sigma)?;
    let same = t == theta_corners_template(&sigma)? && t == theta_slide_flip_template(&sigma)?;
    println!("\ntheta template (identical across routes: {same}):");
    println!("{}", render_ascii(&t, Some(&routes[0].1))?);
    Ok(())
}
