//! Lens (circle-circle intersection) areas across the three regimes.
//!
//!     cargo run --example lens -- 1.0 0.6

use coverage_holes::geom::{equal_lens_area, lens_area};

fn main() -> coverage_holes::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<f64>().expect("radius must be a number"));
    let big = args.next().unwrap_or(1.0);
    let small = args.next().unwrap_or(big);

    println!(
        "{:>8} {:>12} {:>12} {:>12} {:>12}",
        "d", "regime", "area", "chord", "x"
    );
    let far = big + small;
    for i in 0..=12 {
        let d = far * i as f64 / 10.0;
        let lens = lens_area(big, small, d)?;
        println!(
            "{d:>8.4} {:>12} {:>12.7} {:>12.7} {:>12.7}",
            format!("{:?}", lens.regime),
            lens.area,
            lens.chord_length,
            lens.chord_offset
        );
    }
    if big == small {
        println!("closed form at d = R: {:.7}", equal_lens_area(big, big));
    }
    Ok(())
}
