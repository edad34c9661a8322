//! Independent oracles shared by the integration and acceptance tests.
#![allow(dead_code)]

use coverage_holes::geom::{orient, Point};
use coverage_holes::heal::TargetLocation;
use coverage_holes::triangulation::{MobileNode, SensorField, StationaryNode};

pub fn field(
    width: f64,
    height: f64,
    radius: f64,
    sites: &[Point],
    mobiles: &[Point],
    mobile_radius: f64,
) -> SensorField {
    let n = sites.len() as u32;
    SensorField::new(
        width,
        height,
        radius,
        sites
            .iter()
            .enumerate()
            .map(|(i, &position)| StationaryNode {
                id: i as u32,
                position,
            })
            .collect(),
        mobiles
            .iter()
            .enumerate()
            .map(|(i, &position)| MobileNode {
                id: n + i as u32,
                position,
                sensing_radius: mobile_radius,
            })
            .collect(),
    )
    .expect("valid field")
}

/// Number of convex-hull vertices by gift wrapping, counting only strict
/// corners (collinear boundary points are not hull vertices).
pub fn hull_vertex_count(points: &[Point]) -> usize {
    let start = (0..points.len())
        .min_by(|&a, &b| {
            points[a]
                .x
                .total_cmp(&points[b].x)
                .then(points[a].y.total_cmp(&points[b].y))
        })
        .expect("non-empty");
    let mut count = 0;
    let mut current = start;
    loop {
        count += 1;
        let mut next = if current == 0 { 1 } else { 0 };
        for k in 0..points.len() {
            if k == current {
                continue;
            }
            let o = robust_orient(points[current], points[next], points[k]);
            // Take the most clockwise candidate; on ties, the farthest one.
            if o < 0.0
                || (o == 0.0
                    && points[current].distance_sq(points[k])
                        > points[current].distance_sq(points[next]))
            {
                next = k;
            }
        }
        current = next;
        if current == start || count > points.len() {
            return count;
        }
    }
}

pub fn robust_orient(p: Point, q: Point, r: Point) -> f64 {
    robust::orient2d(
        robust::Coord { x: p.x, y: p.y },
        robust::Coord { x: q.x, y: q.y },
        robust::Coord { x: r.x, y: r.y },
    )
}

/// Positive when `d` is strictly inside the circle through `a, b, c` (any
/// orientation).
pub fn strictly_in_circumcircle(a: Point, b: Point, c: Point, d: Point) -> bool {
    let coord = |p: Point| robust::Coord { x: p.x, y: p.y };
    let det = robust::incircle(coord(a), coord(b), coord(c), coord(d));
    let sign = if orient(a, b, c) > 0.0 { 1.0 } else { -1.0 };
    det * sign > 0.0
}

/// Minimum total distance over every injective assignment of the priority
/// targets to mobiles, by exhaustive permutation.
///
/// Targets are served largest hole first (ties by cell id); with `k` mobiles
/// only the top `min(k, targets)` are assigned.
pub fn brute_force_movement(targets: &[TargetLocation], mobiles: &[Point]) -> f64 {
    let mut ranked: Vec<&TargetLocation> = targets.iter().collect();
    ranked.sort_by(|a, b| {
        b.hole_area
            .total_cmp(&a.hole_area)
            .then(a.cell_id.cmp(&b.cell_id))
    });
    ranked.truncate(mobiles.len());
    let mut best = f64::INFINITY;
    let mut used = vec![false; mobiles.len()];
    fn search(
        t: usize,
        ranked: &[&TargetLocation],
        mobiles: &[Point],
        used: &mut [bool],
        total: f64,
        best: &mut f64,
    ) {
        if t == ranked.len() {
            *best = best.min(total);
            return;
        }
        for m in 0..mobiles.len() {
            if !used[m] {
                used[m] = true;
                search(
                    t + 1,
                    ranked,
                    mobiles,
                    used,
                    total + mobiles[m].distance(ranked[t].point),
                    best,
                );
                used[m] = false;
            }
        }
    }
    search(0, &ranked, mobiles, &mut used, 0.0, &mut best);
    best
}
