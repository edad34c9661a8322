//! The full file-based pipeline in a temporary directory: scenario and
//! report JSON, then the SVG. Mirrors the `coverage-holes` subcommands.

use coverage_holes::hole::{DetectOptions, MethodChoice};
use coverage_holes::io::{write_text, ReportFile, ScenarioFile};
use coverage_holes::pipeline::{
    generate_scenario, run_detect, run_plan, verify_report, GenerateParams,
};
use coverage_holes::svg::render_svg;

fn main() -> coverage_holes::Result<()> {
    let dir = std::env::temp_dir().join(format!("coverage-holes-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|source| coverage_holes::Error::Io {
        path: dir.clone(),
        source,
    })?;

    let scenario_path = dir.join("scenario.json");
    generate_scenario(&GenerateParams {
        width: 100.0,
        height: 100.0,
        n_stationary: 50,
        n_mobile: 5,
        radius: 10.0,
        mobile_radius: 10.0,
        seed: 42,
    })?
    .write(&scenario_path)?;

    let scenario = ScenarioFile::read(&scenario_path)?;
    let options = DetectOptions {
        method: MethodChoice::Auto,
        min_hole_area: None,
    };
    let report_path = dir.join("report.json");
    run_detect(&scenario, &options)?.write(&report_path)?;

    let plan_path = dir.join("plan.json");
    run_plan(&ReportFile::read(&report_path)?, &scenario, 10.0)?.write(&plan_path)?;

    let verify_path = dir.join("verify.json");
    let verified = verify_report(&scenario, Some(&ReportFile::read(&plan_path)?), 100_000, 1)?;
    verified.write(&verify_path)?;

    let svg_path = dir.join("field.svg");
    write_text(&svg_path, &render_svg(&scenario, Some(&verified))?)?;

    let mesh = verified
        .mesh
        .as_ref()
        .expect("detect writes a mesh summary");
    let v = verified.verify.as_ref().expect("verify record");
    println!("scenario {}", scenario.content_hash());
    println!(
        "{} triangles, {} holes, total hole area {:.3}",
        mesh.triangles, mesh.holes, mesh.total_hole_area
    );
    println!(
        "coverage {:.4} -> {:.4} (±{:.4})",
        v.before, v.after, v.half_width
    );
    println!("files in {}", dir.display());
    Ok(())
}
