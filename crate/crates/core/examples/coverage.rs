//! Monte-Carlo coverage before and after healing, with 99% intervals.
//!
//!     cargo run --release --example coverage -- 1000000

use coverage_holes::hole::DetectOptions;
use coverage_holes::pipeline::{
    generate_scenario, run_detect, run_plan, run_verify, GenerateParams,
};

fn main() -> coverage_holes::Result<()> {
    let samples = std::env::args()
        .nth(1)
        .map_or(200_000, |a| a.parse().expect("sample count"));
    let scenario = generate_scenario(&GenerateParams {
        width: 100.0,
        height: 100.0,
        n_stationary: 50,
        n_mobile: 5,
        radius: 10.0,
        mobile_radius: 10.0,
        seed: 42,
    })?;
    let report = run_detect(&scenario, &DetectOptions::default())?;
    let planned = run_plan(&report, &scenario, 10.0)?;
    let (before, after) = run_verify(&scenario, Some(&planned), samples, 1)?;

    let area = scenario.field.area();
    println!("samples {samples}");
    println!(
        "before {:.5} ± {:.5}  (uncovered {:.1})",
        before.covered_fraction, before.half_width, before.uncovered_area
    );
    println!(
        "after  {:.5} ± {:.5}  (uncovered {:.1})",
        after.covered_fraction, after.half_width, after.uncovered_area
    );
    let gain = after.covered_fraction - before.covered_fraction;
    println!(
        "gain   {:.5} of {area} = {:.1} area units; {:.1} combined half-widths",
        gain,
        gain * area,
        gain / before.combined_half_width(&after)
    );
    Ok(())
}
