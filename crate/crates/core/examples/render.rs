//! Writes an SVG of a healed random field.
//!
//!     cargo run --example render -- field.svg

use coverage_holes::hole::DetectOptions;
use coverage_holes::io::write_text;
use coverage_holes::pipeline::{generate_scenario, run_detect, run_plan, GenerateParams};
use coverage_holes::svg::render_svg;

fn main() -> coverage_holes::Result<()> {
    let out = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "field.svg".into());
    let scenario = generate_scenario(&GenerateParams {
        width: 100.0,
        height: 100.0,
        n_stationary: 40,
        n_mobile: 6,
        radius: 10.0,
        mobile_radius: 10.0,
        seed: 3,
    })?;
    let report = run_plan(
        &run_detect(&scenario, &DetectOptions::default())?,
        &scenario,
        10.0,
    )?;
    let svg = render_svg(&scenario, Some(&report))?;
    write_text(out.as_ref(), &svg)?;
    println!("wrote {out} ({} bytes)", svg.len());
    Ok(())
}
