//! Detect holes in a random field, pick a target per hole and assign the
//! mobile sensors with minimum total movement.
//!
//!     cargo run --example heal -- 42 5

use coverage_holes::heal::{plan_relocation, select_targets};
use coverage_holes::hole::detect_holes;
use coverage_holes::pipeline::{generate_scenario, GenerateParams};
use coverage_holes::triangulation::triangulate;

fn main() -> coverage_holes::Result<()> {
    let mut args = std::env::args().skip(1);
    let seed = args.next().map_or(42, |a| a.parse().expect("seed"));
    let n_mobile = args.next().map_or(5, |a| a.parse().expect("mobile count"));
    let mobile_radius = 10.0;
    let field = generate_scenario(&GenerateParams {
        width: 100.0,
        height: 100.0,
        n_stationary: 50,
        n_mobile,
        radius: 10.0,
        mobile_radius,
        seed,
    })?
    .field;

    let mesh = triangulate(&field)?;
    let reports = detect_holes(&field, &mesh)?;
    let holes = reports.iter().filter(|r| r.is_hole).count();
    let targets = select_targets(&reports, &mesh, mobile_radius)?;
    let plan = plan_relocation(&targets, &field);

    println!(
        "{} triangles, {holes} holes, {} mobiles",
        mesh.len(),
        field.mobile.len()
    );
    for a in &plan.assignments {
        println!(
            "mobile {:>3} -> cell {:>3} {:<12} at {}  (hole {:.3}, move {:.3})",
            a.mobile_id,
            a.target.cell_id,
            a.target.kind,
            a.target.point,
            a.target.hole_area,
            a.distance
        );
    }
    println!(
        "total movement {:.3}; {} holes unserved",
        plan.total_movement,
        plan.unserved.len()
    );
    Ok(())
}
