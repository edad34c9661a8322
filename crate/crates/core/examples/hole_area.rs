//! Hole area inside single triangles: the closed form, the exact region
//! integral, and a grid estimate side by side.

use coverage_holes::geom::{triangle_from_vertices, Point};
use coverage_holes::hole::{classify, hole_area_with, MethodChoice};
use coverage_holes::oracle::grid_vertex_uncovered;

fn main() -> coverage_holes::Result<()> {
    let h = 3f64.sqrt() / 2.0;
    let cases = [
        ("equilateral 2", [(0.0, 0.0), (2.0, 0.0), (1.0, 2.0 * h)]),
        ("right 3-4-5", [(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)]),
        ("one overlap", [(0.0, 0.0), (1.5, 0.0), (0.75, 2.0)]),
        ("equilateral 1.9", [(0.0, 0.0), (1.9, 0.0), (0.95, 1.9 * h)]),
        ("covered", [(0.0, 0.0), (1.0, 0.0), (0.5, h)]),
    ];
    let radius = 1.0;

    println!(
        "{:<16} {:>4} {:>12} {:>12} {:>12}  method",
        "triangle", "case", "s_h", "exact", "grid"
    );
    for (name, v) in cases {
        let [p, q, r] = v.map(|(x, y)| Point::new(x, y));
        let tri = triangle_from_vertices(p, q, r);
        let auto = hole_area_with(&tri, radius, MethodChoice::Auto)?;
        let exact = hole_area_with(&tri, radius, MethodChoice::ExactOnly)?;
        let grid = grid_vertex_uncovered(&tri, radius, 1024)?;
        println!(
            "{name:<16} {:>4} {:>12.7} {:>12.7} {:>12.7}  {}",
            classify(&tri, radius)?.as_str(),
            auto.s_h,
            exact.s_h,
            grid,
            auto.method.as_str()
        );
        for lens in &auto.lens_corrections {
            println!(
                "{:>21} edge {:?} d={:.4} half-lens {:.7}",
                "", lens.edge, lens.distance, lens.half_area
            );
        }
    }
    Ok(())
}
