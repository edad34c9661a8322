//! Delaunay mesh of a random field and the adjacency of its first cells.
//!
//!     cargo run --example triangulate -- 200 7

use coverage_holes::pipeline::{generate_scenario, GenerateParams};
use coverage_holes::triangulation::triangulate;

fn main() -> coverage_holes::Result<()> {
    let mut args = std::env::args().skip(1);
    let n = args.next().map_or(200, |a| a.parse().expect("site count"));
    let seed = args.next().map_or(7, |a| a.parse().expect("seed"));
    let scenario = generate_scenario(&GenerateParams {
        width: 100.0,
        height: 100.0,
        n_stationary: n,
        n_mobile: 0,
        radius: 5.0,
        mobile_radius: 5.0,
        seed,
    })?;
    let mesh = triangulate(&scenario.field)?;

    println!(
        "{n} sites -> {} triangles, hull area {:.4}",
        mesh.len(),
        mesh.total_area()
    );
    for cell in mesh.triangles.iter().take(8) {
        println!(
            "cell {:>4}: sensors {:?}  area {:>8.3}  neighbours {:?}",
            cell.id,
            cell.sensors,
            cell.geom.area,
            mesh.neighbors(cell.id)?
        );
    }
    Ok(())
}
