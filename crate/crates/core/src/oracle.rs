//! Brute-force coverage estimates used to check the closed-form results.
//!
//! Monte-Carlo sampling draws from `ChaCha8Rng::seed_from_u64(seed)`, one
//! `f64` for x then one for y per sample, so a seed fully determines the
//! estimate. The grid estimate is deterministic and samples cell centers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{orient, Disk, Point, TriangleGeom};
use crate::triangulation::SensorField;

/// Two-sided 99% normal quantile.
pub const Z_99: f64 = 2.575_829_303_548_901;

pub const MIN_GRID_RESOLUTION: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoverageEstimate {
    pub covered_fraction: f64,
    pub uncovered_area: f64,
    pub samples: u64,
    /// 99% binomial half-width on `covered_fraction`.
    pub half_width: f64,
    pub seed: u64,
}

impl CoverageEstimate {
    /// Root-sum-square of two half-widths, for comparing two estimates.
    pub fn combined_half_width(&self, other: &CoverageEstimate) -> f64 {
        self.half_width.hypot(other.half_width)
    }
}

/// Binomial 99% half-width of a fraction estimated from `samples` draws.
pub fn binomial_half_width(fraction: f64, samples: u64) -> f64 {
    if samples == 0 {
        return 0.0;
    }
    Z_99 * (fraction * (1.0 - fraction) / samples as f64)
        .max(0.0)
        .sqrt()
}

/// All sensing disks in the field, stationary first.
pub fn field_disks(field: &SensorField) -> Vec<Disk> {
    field
        .stationary
        .iter()
        .map(|n| Disk::new(n.position, field.sensing_radius))
        .chain(
            field
                .mobile
                .iter()
                .map(|m| Disk::new(m.position, m.sensing_radius)),
        )
        .collect()
}

fn covered(disks: &[Disk], p: Point) -> bool {
    disks.iter().any(|d| d.contains(p))
}

/// Fraction of the field rectangle within range of at least one sensor.
pub fn mc_coverage_fraction(
    field: &SensorField,
    samples: u64,
    seed: u64,
) -> Result<CoverageEstimate> {
    if !(field.width > 0.0 && field.height > 0.0) {
        return Err(Error::InvalidInput(format!(
            "field has zero area ({} x {})",
            field.width, field.height
        )));
    }
    if samples == 0 {
        return Err(Error::InvalidInput(
            "sample count must be at least 1".into(),
        ));
    }
    let disks = field_disks(field);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits: u64 = 0;
    for _ in 0..samples {
        let x = rng.random::<f64>() * field.width;
        let y = rng.random::<f64>() * field.height;
        if covered(&disks, Point::new(x, y)) {
            hits += 1;
        }
    }
    let fraction = hits as f64 / samples as f64;
    Ok(CoverageEstimate {
        covered_fraction: fraction,
        uncovered_area: (1.0 - fraction) * field.area(),
        samples,
        half_width: binomial_half_width(fraction, samples),
        seed,
    })
}

/// Uncovered area of a triangle, by Monte-Carlo sampling of its bounding box.
///
/// `half_width` and `covered_fraction` refer to the triangle, i.e. the
/// fraction of in-triangle samples that hit a disk.
pub fn mc_region_uncovered(
    tri: &TriangleGeom,
    disks: &[Disk],
    samples: u64,
    seed: u64,
) -> Result<CoverageEstimate> {
    if samples == 0 {
        return Err(Error::InvalidInput(
            "sample count must be at least 1".into(),
        ));
    }
    if tri.degenerate {
        return Ok(CoverageEstimate {
            covered_fraction: 1.0,
            uncovered_area: 0.0,
            samples,
            half_width: 0.0,
            seed,
        });
    }
    let [v0, v1, v2] = tri.ccw_vertices();
    let (x0, x1) = bounds([v0.x, v1.x, v2.x]);
    let (y0, y1) = bounds([v0.y, v1.y, v2.y]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut inside, mut uncovered) = (0u64, 0u64);
    for _ in 0..samples {
        let p = Point::new(
            x0 + rng.random::<f64>() * (x1 - x0),
            y0 + rng.random::<f64>() * (y1 - y0),
        );
        if orient(v0, v1, p) >= 0.0 && orient(v1, v2, p) >= 0.0 && orient(v2, v0, p) >= 0.0 {
            inside += 1;
            if !covered(disks, p) {
                uncovered += 1;
            }
        }
    }
    let box_area = (x1 - x0) * (y1 - y0);
    let p_uncovered = uncovered as f64 / samples as f64;
    let fraction = if inside == 0 {
        1.0
    } else {
        1.0 - uncovered as f64 / inside as f64
    };
    Ok(CoverageEstimate {
        covered_fraction: fraction,
        uncovered_area: p_uncovered * box_area,
        samples,
        // Half-width on the uncovered area itself, scaled back to a fraction
        // of the triangle so callers can multiply by its area.
        half_width: binomial_half_width(p_uncovered, samples) * box_area / tri.area,
        seed,
    })
}

fn bounds(values: [f64; 3]) -> (f64, f64) {
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    (lo, hi)
}

/// Uncovered area of a triangle on a `resolution x resolution` raster of its
/// bounding box: cell centers inside the triangle and outside every disk,
/// times the cell area.
pub fn grid_region_uncovered(tri: &TriangleGeom, disks: &[Disk], resolution: usize) -> Result<f64> {
    if resolution < MIN_GRID_RESOLUTION {
        return Err(Error::InvalidInput(format!(
            "grid resolution must be at least {MIN_GRID_RESOLUTION}, got {resolution}"
        )));
    }
    if tri.degenerate {
        return Ok(0.0);
    }
    let [v0, v1, v2] = tri.ccw_vertices();
    let (x0, x1) = bounds([v0.x, v1.x, v2.x]);
    let (y0, y1) = bounds([v0.y, v1.y, v2.y]);
    let dx = (x1 - x0) / resolution as f64;
    let dy = (y1 - y0) / resolution as f64;
    let mut count: u64 = 0;
    for j in 0..resolution {
        let y = y0 + (j as f64 + 0.5) * dy;
        for i in 0..resolution {
            let p = Point::new(x0 + (i as f64 + 0.5) * dx, y);
            if orient(v0, v1, p) >= 0.0
                && orient(v1, v2, p) >= 0.0
                && orient(v2, v0, p) >= 0.0
                && !covered(disks, p)
            {
                count += 1;
            }
        }
    }
    Ok(count as f64 * dx * dy)
}

/// Grid estimate of the triangle's uncovered area under its three vertex disks.
pub fn grid_vertex_uncovered(tri: &TriangleGeom, radius: f64, resolution: usize) -> Result<f64> {
    let disks = tri.vertices.map(|v| Disk::new(v, radius));
    grid_region_uncovered(tri, &disks, resolution)
}
