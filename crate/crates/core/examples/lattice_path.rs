//! RSK tableaux, the Dyck path they encode, and the region left of the path.
//!
//! ```bash
//! cargo run -p permbij --example lattice_path -- 31426758
//! ```

use permbij::rsk::{
    dyck_from_tableaux, retrace, rsk_tableaux, second_half_from_top_right, template_from_dyck, Step,
};
use permbij::template::{realize, render_ascii};
use permbij::Permutation;

fn main() -> Result<(), permbij::Error> {
    let input = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "14237586".to_string());
    let sigma = Permutation::parse(&input)?;
    let n = sigma.n();

    let pair = rsk_tableaux(&sigma)?;
    println!(
        "insertion\n{}\n\nrecording\n{}\n",
        pair.insertion, pair.recording
    );

    let path = dyck_from_tableaux(&pair.insertion, &pair.recording)?;
    println!("path {path}");
    let mut height = 0i32;
    let profile: Vec<i32> = path
        .steps()
        .iter()
        .map(|s| {
            height += if *s == Step::Up { 1 } else { -1 };
            height
        })
        .collect();
    println!("heights {profile:?}");
    println!(
        "second half read from the top-right corner matches: {}",
        second_half_from_top_right(&pair.recording, n) == retrace(path.second_half())
    );

    let region = template_from_dyck(&path, n)?;
    let image = realize(&region)?;
    println!("\nregion left of the path, with the dots of {image}:");
    println!("{}", render_ascii(&region, Some(&image))?);
    Ok(())
}
