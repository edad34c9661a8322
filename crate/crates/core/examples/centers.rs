//! Circumcenter and incenter of a triangle, with the distances that define them.
//!
//!     cargo run --example centers -- 0 0 4 0 0 3

use coverage_holes::geom::{circumcenter, incenter, triangle_from_vertices, Point};

fn main() -> coverage_holes::Result<()> {
    let v: Vec<f64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("coordinates must be numbers"))
        .collect();
    let v = if v.len() == 6 {
        v
    } else {
        vec![0.0, 0.0, 4.0, 0.0, 0.0, 3.0]
    };
    let tri = triangle_from_vertices(
        Point::new(v[0], v[1]),
        Point::new(v[2], v[3]),
        Point::new(v[4], v[5]),
    );

    println!("sides  a={:.6} b={:.6} c={:.6}", tri.a, tri.b, tri.c);
    println!(
        "angles {:.6} {:.6} {:.6} (rad)",
        tri.alpha, tri.beta, tri.zeta
    );
    println!("area   {:.6}", tri.area);

    let (o, r) = circumcenter(&tri)?;
    println!("circumcenter {o}  R={r:.9}");
    for p in tri.vertices {
        println!("  |{p} - O| = {:.9}", p.distance(o));
    }
    let (i, r) = incenter(&tri)?;
    println!("incenter     {i}  r={r:.9}");
    Ok(())
}
