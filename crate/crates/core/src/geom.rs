//! Closed-form planar geometry: triangles, their centers, circular sectors
//! and segments, two-disk lens areas, and exact areas of convex polygons
//! clipped by disks.
//!
//! Everything here is a pure function of its arguments.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};

/// Relative slack under which a negative radicand is treated as rounding noise.
const RADICAND_SLACK: f64 = 1e-12;

/// A triangle is degenerate when `area < DEGENERATE_RATIO * max_side^2`.
pub const DEGENERATE_RATIO: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn distance(self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn distance_sq(self, other: Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }

    fn sub(self, other: Point) -> Point {
        Point::new(self.x - other.x, self.y - other.y)
    }

    fn lerp(self, other: Point, t: f64) -> Point {
        Point::new(
            self.x + (other.x - self.x) * t,
            self.y + (other.y - self.y) * t,
        )
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

fn cross(u: Point, v: Point) -> f64 {
    u.x * v.y - u.y * v.x
}

fn dot(u: Point, v: Point) -> f64 {
    u.x * v.x + u.y * v.y
}

/// Twice the signed area of `(p, q, r)`; positive when counter-clockwise.
pub fn orient(p: Point, q: Point, r: Point) -> f64 {
    cross(q.sub(p), r.sub(p))
}

fn clamp_radicand(value: f64, scale: f64) -> f64 {
    if value < 0.0 && value >= -RADICAND_SLACK * scale {
        0.0
    } else {
        value
    }
}

/// A closed disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disk {
    pub center: Point,
    pub radius: f64,
}

impl Disk {
    pub const fn new(center: Point, radius: f64) -> Self {
        Disk { center, radius }
    }

    pub fn contains(&self, p: Point) -> bool {
        p.distance_sq(self.center) <= self.radius * self.radius
    }
}

/// A triangle with its vertices, side lengths, angles, semiperimeter and area.
///
/// Side `a` is opposite `vertices[0]`, `b` opposite `vertices[1]` and `c`
/// opposite `vertices[2]`. `alpha`, `beta`, `zeta` are the interior angles at
/// `vertices[0]`, `vertices[1]`, `vertices[2]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleGeom {
    pub vertices: [Point; 3],
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub alpha: f64,
    pub beta: f64,
    pub zeta: f64,
    pub s: f64,
    pub area: f64,
    pub degenerate: bool,
}

impl TriangleGeom {
    pub fn sides(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn angles(&self) -> [f64; 3] {
        [self.alpha, self.beta, self.zeta]
    }

    pub fn max_side(&self) -> f64 {
        self.a.max(self.b).max(self.c)
    }

    /// Vertices in counter-clockwise order.
    pub fn ccw_vertices(&self) -> [Point; 3] {
        let [p, q, r] = self.vertices;
        if orient(p, q, r) < 0.0 {
            [p, r, q]
        } else {
            [p, q, r]
        }
    }

    /// Length of side joining vertex `i` and vertex `j`.
    pub fn edge_length(&self, i: usize, j: usize) -> f64 {
        debug_assert!(i != j && i < 3 && j < 3);
        self.sides()[3 - i - j]
    }

    /// Perpendicular distance from vertex `i` to the line through the other two.
    pub fn altitude(&self, i: usize) -> f64 {
        let opposite = self.sides()[i];
        if opposite == 0.0 {
            0.0
        } else {
            2.0 * self.area / opposite
        }
    }

    /// Whether `p` lies in the closed triangle, with a scale-relative slack.
    pub fn contains(&self, p: Point) -> bool {
        let [v0, v1, v2] = self.ccw_vertices();
        let slack = -1e-12 * self.max_side() * self.max_side();
        orient(v0, v1, p) >= slack && orient(v1, v2, p) >= slack && orient(v2, v0, p) >= slack
    }

    pub fn ensure_non_degenerate(&self) -> Result<()> {
        if self.degenerate {
            Err(Error::DegenerateGeometry(format!(
                "triangle {} {} {} has (near-)zero area",
                self.vertices[0], self.vertices[1], self.vertices[2]
            )))
        } else {
            Ok(())
        }
    }
}

/// Heron's area from three side lengths.
///
/// Uses the cancellation-free ordering of the four factors, so the result
/// stays accurate for needle-shaped triangles. Collinear triples give zero.
pub fn heron_area(a: f64, b: f64, c: f64) -> Result<f64> {
    if !(a >= 0.0 && b >= 0.0 && c >= 0.0) || !(a.is_finite() && b.is_finite() && c.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "side lengths must be finite and non-negative, got ({a}, {b}, {c})"
        )));
    }
    let mut sides = [a, b, c];
    sides.sort_by(|x, y| y.total_cmp(x));
    let [a, b, c] = sides;
    let radicand = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
    let scale = (a + b + c).powi(4);
    let radicand = clamp_radicand(radicand, scale);
    if radicand < 0.0 {
        return Err(Error::InvalidInput(format!(
            "sides ({a}, {b}, {c}) violate the triangle inequality"
        )));
    }
    Ok(0.25 * radicand.sqrt())
}

fn vertex_angle(at: Point, p: Point, q: Point) -> f64 {
    let u = p.sub(at);
    let v = q.sub(at);
    cross(u, v).abs().atan2(dot(u, v))
}

pub fn triangle_from_vertices(p1: Point, p2: Point, p3: Point) -> TriangleGeom {
    let a = p2.distance(p3);
    let b = p1.distance(p3);
    let c = p1.distance(p2);
    let area = 0.5 * orient(p1, p2, p3).abs();
    let max_side = a.max(b).max(c);
    let degenerate = !(area >= DEGENERATE_RATIO * max_side * max_side) || max_side == 0.0;
    let (alpha, beta, zeta) = if degenerate {
        (0.0, 0.0, 0.0)
    } else {
        (
            vertex_angle(p1, p2, p3),
            vertex_angle(p2, p1, p3),
            vertex_angle(p3, p1, p2),
        )
    };
    TriangleGeom {
        vertices: [p1, p2, p3],
        a,
        b,
        c,
        alpha,
        beta,
        zeta,
        s: (a + b + c) / 2.0,
        area: if degenerate { 0.0 } else { area },
        degenerate,
    }
}

/// Area of a circular sector with the given opening angle.
pub fn sector_area(angle: f64, radius: f64) -> Result<f64> {
    if !(0.0..=2.0 * PI).contains(&angle) {
        return Err(Error::InvalidInput(format!(
            "sector angle {angle} outside [0, 2pi]"
        )));
    }
    if !(radius >= 0.0) {
        return Err(Error::InvalidInput(format!("negative radius {radius}")));
    }
    Ok(0.5 * angle * radius * radius)
}

/// Circular-segment area for a chord at signed distance `height` from the
/// center. Negative heights give the major segment.
fn signed_segment_area(radius: f64, height: f64) -> f64 {
    let r2 = radius * radius;
    let ratio = (height / radius).clamp(-1.0, 1.0);
    let radicand = clamp_radicand(r2 - height * height, r2).max(0.0);
    r2 * ratio.acos() - height * radicand.sqrt()
}

/// Area of the circular segment cut from a disk of radius `radius` by a chord
/// at distance `height` from the center.
pub fn segment_area(radius: f64, height: f64) -> Result<f64> {
    if !(radius >= 0.0 && height >= 0.0) {
        return Err(Error::InvalidInput(format!(
            "segment radius and height must be non-negative, got ({radius}, {height})"
        )));
    }
    if height > radius * (1.0 + RADICAND_SLACK) {
        return Err(Error::InvalidInput(format!(
            "segment height {height} exceeds radius {radius}"
        )));
    }
    if radius == 0.0 {
        return Ok(0.0);
    }
    Ok(signed_segment_area(radius, height.min(radius)))
}

/// How two disks relate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LensRegime {
    Disjoint,
    Contained,
    Overlapping,
}

/// Intersection of two disks, with the radical-chord construction.
///
/// The first disk sits at the origin and the second at `(distance, 0)`.
/// Chord fields are zero unless `regime` is [`LensRegime::Overlapping`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LensGeom {
    pub first_radius: f64,
    pub second_radius: f64,
    pub distance: f64,
    pub regime: LensRegime,
    /// Abscissa of the radical chord.
    pub chord_offset: f64,
    pub half_chord: f64,
    pub chord_length: f64,
    /// Signed distance from the first center to the chord.
    pub first_height: f64,
    /// Signed distance from the second center to the chord.
    pub second_height: f64,
    pub area: f64,
}

pub fn lens_area(first_radius: f64, second_radius: f64, distance: f64) -> Result<LensGeom> {
    let (big, small, d) = (first_radius, second_radius, distance);
    if !(big >= 0.0 && small >= 0.0 && d >= 0.0)
        || !(big.is_finite() && small.is_finite() && d.is_finite())
    {
        return Err(Error::InvalidInput(format!(
            "lens inputs must be finite and non-negative, got ({big}, {small}, {d})"
        )));
    }
    let mut lens = LensGeom {
        first_radius: big,
        second_radius: small,
        distance: d,
        regime: LensRegime::Disjoint,
        chord_offset: 0.0,
        half_chord: 0.0,
        chord_length: 0.0,
        first_height: 0.0,
        second_height: 0.0,
        area: 0.0,
    };
    if d >= big + small {
        return Ok(lens);
    }
    if d <= (big - small).abs() {
        let r = big.min(small);
        lens.regime = LensRegime::Contained;
        lens.area = PI * r * r;
        return Ok(lens);
    }
    let x = (d * d - small * small + big * big) / (2.0 * d);
    let y2 = clamp_radicand(big * big - x * x, big * big).max(0.0);
    let y = y2.sqrt();
    lens.regime = LensRegime::Overlapping;
    lens.chord_offset = x;
    lens.half_chord = y;
    lens.chord_length = 2.0 * y;
    lens.first_height = x;
    lens.second_height = d - x;
    let area = signed_segment_area(big, x) + signed_segment_area(small, d - x);
    lens.area = area.clamp(0.0, PI * big.min(small).powi(2));
    Ok(lens)
}

/// Area of the lens of two equal disks whose centers are `distance` apart.
pub fn equal_lens_area(radius: f64, distance: f64) -> f64 {
    if distance >= 2.0 * radius {
        return 0.0;
    }
    let r2 = radius * radius;
    let radicand = clamp_radicand(4.0 * r2 - distance * distance, 4.0 * r2).max(0.0);
    2.0 * r2 * (distance / (2.0 * radius)).clamp(-1.0, 1.0).acos()
        - 0.5 * distance * radicand.sqrt()
}

/// Circumcenter and circumradius.
pub fn circumcenter(tri: &TriangleGeom) -> Result<(Point, f64)> {
    tri.ensure_non_degenerate()?;
    let [p, q, r] = tri.vertices;
    let b = q.sub(p);
    let c = r.sub(p);
    let d = 2.0 * cross(b, c);
    let b2 = dot(b, b);
    let c2 = dot(c, c);
    let ux = (c.y * b2 - b.y * c2) / d;
    let uy = (b.x * c2 - c.x * b2) / d;
    let center = Point::new(p.x + ux, p.y + uy);
    Ok((center, ux.hypot(uy)))
}

/// Incenter and inradius.
pub fn incenter(tri: &TriangleGeom) -> Result<(Point, f64)> {
    tri.ensure_non_degenerate()?;
    let [pa, pb, pc] = tri.vertices;
    let perimeter = tri.a + tri.b + tri.c;
    let center = Point::new(
        (tri.a * pa.x + tri.b * pb.x + tri.c * pc.x) / perimeter,
        (tri.a * pa.y + tri.b * pb.y + tri.c * pc.y) / perimeter,
    );
    Ok((center, tri.area / tri.s))
}

/// Exact area of `triangle ∩ disk`.
pub fn triangle_disk_intersection_area(tri: &TriangleGeom, center: Point, radius: f64) -> f64 {
    if tri.degenerate || !(radius > 0.0) {
        return 0.0;
    }
    let area = convex_polygon_disks_area(&tri.ccw_vertices(), &[Disk::new(center, radius)]);
    area.clamp(0.0, tri.area.min(PI * radius * radius))
}

/// Parameter interval of the line `p + t (q - p)` inside `disk`.
fn line_disk_interval(p: Point, q: Point, disk: &Disk) -> Option<(f64, f64)> {
    let e = q.sub(p);
    let f = p.sub(disk.center);
    let a = dot(e, e);
    let b = 2.0 * dot(f, e);
    let c = dot(f, f) - disk.radius * disk.radius;
    let disc = b * b - 4.0 * a * c;
    if a == 0.0 || disc < 0.0 {
        return None;
    }
    let root = disc.sqrt();
    // Avoid cancellation between -b and the root.
    let qq = -0.5 * (b + b.signum() * root);
    let (t1, t2) = if qq == 0.0 {
        (0.0, 0.0)
    } else {
        let u = qq / a;
        let v = c / qq;
        (u.min(v), u.max(v))
    };
    Some((t1, t2))
}

fn arc_term(disk: &Disk, from: f64, to: f64) -> f64 {
    let Disk { center, radius } = *disk;
    0.5 * (radius * radius * (to - from) + center.x * radius * (to.sin() - from.sin())
        - center.y * radius * (to.cos() - from.cos()))
}

/// Exact area of the intersection of a convex counter-clockwise polygon with
/// every disk in `disks`.
///
/// The boundary of the region is split into straight pieces (polygon edges
/// clipped to all disks) and circular arcs (each circle cut at its crossings
/// with the polygon and the other circles, keeping arcs whose midpoints lie in
/// every other set). The enclosed area then follows from Green's theorem.
pub fn convex_polygon_disks_area(polygon: &[Point], disks: &[Disk]) -> f64 {
    let n = polygon.len();
    if n < 3 {
        return 0.0;
    }
    let mut unique: Vec<Disk> = Vec::with_capacity(disks.len());
    for disk in disks {
        if !(disk.radius > 0.0) {
            return 0.0;
        }
        if !unique.contains(disk) {
            unique.push(*disk);
        }
    }
    let disks = unique;
    let scale = polygon
        .iter()
        .flat_map(|p| [p.x.abs(), p.y.abs()])
        .chain(disks.iter().map(|d| d.radius))
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    let edges: Vec<(Point, Point)> = (0..n).map(|i| (polygon[i], polygon[(i + 1) % n])).collect();

    let inside_polygon = |p: Point| {
        edges.iter().all(|&(u, v)| {
            let len = u.distance(v);
            orient(u, v, p) >= -1e-12 * len * scale
        })
    };
    let inside_disk = |disk: &Disk, p: Point| {
        p.distance(disk.center) <= disk.radius * (1.0 + 1e-12) + 1e-15 * scale
    };

    let mut twice_area = 0.0;

    for &(u, v) in &edges {
        let mut lo: f64 = 0.0;
        let mut hi: f64 = 1.0;
        let mut empty = false;
        for disk in &disks {
            match line_disk_interval(u, v, disk) {
                Some((t1, t2)) => {
                    lo = lo.max(t1);
                    hi = hi.min(t2);
                }
                None => empty = true,
            }
            if empty || hi <= lo {
                empty = true;
                break;
            }
        }
        if !empty {
            twice_area += cross(u.lerp(v, lo), u.lerp(v, hi));
        }
    }

    let tau = 2.0 * PI;
    let mut area = 0.5 * twice_area;
    for (i, disk) in disks.iter().enumerate() {
        let mut cuts: Vec<f64> = Vec::new();
        let angle_of = |p: Point| {
            let a = (p.y - disk.center.y).atan2(p.x - disk.center.x);
            if a < 0.0 {
                a + tau
            } else {
                a
            }
        };
        for &(u, v) in &edges {
            if let Some((t1, t2)) = line_disk_interval(u, v, disk) {
                // Crossings at a polygon corner can land a rounding step
                // outside [0, 1]; extra cuts only subdivide arcs, so be generous.
                for t in [t1, t2] {
                    if (-1e-9..=1.0 + 1e-9).contains(&t) {
                        cuts.push(angle_of(u.lerp(v, t.clamp(0.0, 1.0))));
                    }
                }
            }
        }
        for (j, other) in disks.iter().enumerate() {
            if i == j {
                continue;
            }
            let d = disk.center.distance(other.center);
            if d == 0.0 || d > disk.radius + other.radius || d < (disk.radius - other.radius).abs()
            {
                continue;
            }
            let x = (d * d - other.radius * other.radius + disk.radius * disk.radius) / (2.0 * d);
            let h = clamp_radicand(disk.radius * disk.radius - x * x, disk.radius * disk.radius)
                .max(0.0)
                .sqrt();
            let ex = Point::new(
                (other.center.x - disk.center.x) / d,
                (other.center.y - disk.center.y) / d,
            );
            let base = Point::new(disk.center.x + ex.x * x, disk.center.y + ex.y * x);
            cuts.push(angle_of(Point::new(base.x - ex.y * h, base.y + ex.x * h)));
            cuts.push(angle_of(Point::new(base.x + ex.y * h, base.y - ex.x * h)));
        }
        let on_circle = |theta: f64| {
            Point::new(
                disk.center.x + disk.radius * theta.cos(),
                disk.center.y + disk.radius * theta.sin(),
            )
        };
        let keep = |p: Point| {
            inside_polygon(p)
                && disks
                    .iter()
                    .enumerate()
                    .all(|(j, other)| j == i || inside_disk(other, p))
        };
        if cuts.is_empty() {
            if keep(on_circle(0.0)) {
                area += arc_term(disk, 0.0, tau);
            }
            continue;
        }
        cuts.sort_by(f64::total_cmp);
        for k in 0..cuts.len() {
            let from = cuts[k];
            let to = if k + 1 < cuts.len() {
                cuts[k + 1]
            } else {
                cuts[0] + tau
            };
            if to - from <= 0.0 {
                continue;
            }
            if keep(on_circle(0.5 * (from + to))) {
                area += arc_term(disk, from, to);
            }
        }
    }
    area.max(0.0)
}

#[cfg(test)]
#[allow(clippy::approx_constant)] // golden values are quoted to 7 digits
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn tri(p: [(f64, f64); 3]) -> TriangleGeom {
        triangle_from_vertices(
            Point::new(p[0].0, p[0].1),
            Point::new(p[1].0, p[1].1),
            Point::new(p[2].0, p[2].1),
        )
    }

    #[test]
    fn heron_examples() {
        assert_relative_eq!(heron_area(3.0, 4.0, 5.0).unwrap(), 6.0, epsilon = 1e-12);
        assert_eq!(heron_area(1.0, 2.0, 3.0).unwrap(), 0.0);
        assert_relative_eq!(
            heron_area(2.0, 2.0, 2.0).unwrap(),
            1.7320508,
            epsilon = 1e-7
        );
    }

    #[test]
    fn heron_rejects_bad_sides() {
        assert!(matches!(
            heron_area(-1.0, 2.0, 2.0),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            heron_area(1.0, 1.0, 5.0),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn triangle_examples() {
        let t = tri([(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)]);
        assert_eq!((t.a, t.b, t.c), (5.0, 3.0, 4.0));
        assert_eq!(t.area, 6.0);
        assert_eq!(t.s, 6.0);
        assert_relative_eq!(t.alpha, PI / 2.0, epsilon = 1e-15);
        assert_relative_eq!(t.alpha + t.beta + t.zeta, PI, epsilon = 1e-12);

        let flat = tri([(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]);
        assert!(flat.degenerate);
        assert_eq!(flat.area, 0.0);

        assert_eq!(tri([(0.0, 0.0), (2.0, 0.0), (0.0, 2.0)]).area, 2.0);
    }

    #[test]
    fn sector_and_segment() {
        assert_relative_eq!(
            sector_area(PI / 3.0, 1.0).unwrap(),
            0.5235988,
            epsilon = 1e-7
        );
        assert_eq!(sector_area(0.0, 5.0).unwrap(), 0.0);
        assert_relative_eq!(sector_area(PI, 1.0).unwrap(), 1.5707963, epsilon = 1e-7);
        assert!(sector_area(7.0, 1.0).is_err());
        assert!(sector_area(-0.1, 1.0).is_err());

        assert_relative_eq!(segment_area(1.0, 0.0).unwrap(), 1.5707963, epsilon = 1e-7);
        assert_eq!(segment_area(1.0, 1.0).unwrap(), 0.0);
        assert_relative_eq!(segment_area(1.0, 0.5).unwrap(), 0.6141849, epsilon = 1e-7);
        assert!(segment_area(1.0, 1.5).is_err());
        assert!(segment_area(-1.0, 0.0).is_err());
    }

    #[test]
    fn lens_examples() {
        let unit = lens_area(1.0, 1.0, 1.0).unwrap();
        assert_relative_eq!(unit.area, 1.2283697, epsilon = 1e-7);
        assert_relative_eq!(unit.first_height + unit.second_height, 1.0, epsilon = 1e-12);
        assert_relative_eq!(unit.chord_length, 3f64.sqrt(), epsilon = 1e-12);
        assert_eq!(unit.regime, LensRegime::Overlapping);

        let contained = lens_area(1.0, 0.5, 0.0).unwrap();
        assert_eq!(contained.regime, LensRegime::Contained);
        assert_relative_eq!(contained.area, PI / 4.0, epsilon = 1e-15);

        let tangent = lens_area(1.0, 1.0, 2.0).unwrap();
        assert_eq!(tangent.area, 0.0);
        assert!(lens_area(1.0, -1.0, 0.5).is_err());
    }

    #[test]
    fn lens_chord_matches_product_form() {
        // 2y against the four-factor chord expression.
        let (big, small, d): (f64, f64, f64) = (1.3, 0.9, 1.7);
        let lens = lens_area(big, small, d).unwrap();
        let product =
            (-d + small - big) * (-d - small + big) * (-d + small + big) * (d + small + big);
        assert_relative_eq!(lens.chord_length, product.sqrt() / d, epsilon = 1e-12);
    }

    #[test]
    fn lens_matches_twelve_term_closed_form() {
        let (big, r, d): (f64, f64, f64) = (1.2, 0.7, 1.1);
        let expected = r * r * ((d * d + r * r - big * big) / (2.0 * d * r)).acos()
            + big * big * ((d * d - r * r + big * big) / (2.0 * d * big)).acos()
            - 0.5 * ((-d + r + big) * (d + r - big) * (d - r + big) * (d + r + big)).sqrt();
        assert_relative_eq!(
            lens_area(big, r, d).unwrap().area,
            expected,
            epsilon = 1e-12
        );
    }

    #[test]
    fn equal_lens_agrees_with_general_lens() {
        for d in [0.1, 0.5, 1.0, 1.5, 1.9, 1.999] {
            assert_relative_eq!(
                equal_lens_area(1.0, d),
                lens_area(1.0, 1.0, d).unwrap().area,
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn centers() {
        let (cc, r) = circumcenter(&tri([(0.0, 0.0), (2.0, 0.0), (0.0, 2.0)])).unwrap();
        assert_relative_eq!(cc.x, 1.0, epsilon = 1e-12);
        assert_relative_eq!(cc.y, 1.0, epsilon = 1e-12);
        assert_relative_eq!(r, 1.4142136, epsilon = 1e-7);

        let eq = tri([(0.0, 0.0), (1.0, 0.0), (0.5, 0.8660254)]);
        let (cc, r) = circumcenter(&eq).unwrap();
        assert_relative_eq!(cc.x, 0.5, epsilon = 1e-7);
        assert_relative_eq!(cc.y, 0.2886751, epsilon = 1e-7);
        assert_relative_eq!(r, 0.5773503, epsilon = 1e-7);
        let (ic, ir) = incenter(&eq).unwrap();
        assert_relative_eq!(ic.x, 0.5, epsilon = 1e-7);
        assert_relative_eq!(ic.y, 0.2886751, epsilon = 1e-7);
        assert_relative_eq!(ir, 0.2886751, epsilon = 1e-7);

        let (ic, ir) = incenter(&tri([(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)])).unwrap();
        assert_relative_eq!(ic.x, 1.0, epsilon = 1e-12);
        assert_relative_eq!(ic.y, 1.0, epsilon = 1e-12);
        assert_relative_eq!(ir, 1.0, epsilon = 1e-12);

        let flat = tri([(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]);
        assert!(matches!(
            circumcenter(&flat),
            Err(Error::DegenerateGeometry(_))
        ));
        assert!(matches!(incenter(&flat), Err(Error::DegenerateGeometry(_))));
    }

    #[test]
    fn triangle_disk_cases() {
        let t = tri([(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)]);
        assert_relative_eq!(
            triangle_disk_intersection_area(&t, Point::new(0.0, 0.0), 1.0),
            PI / 4.0,
            epsilon = 1e-12
        );
        // Sector at the vertex (4, 0).
        let sector = sector_area(t.beta, 0.5).unwrap();
        assert_relative_eq!(
            triangle_disk_intersection_area(&t, Point::new(4.0, 0.0), 0.5),
            sector,
            epsilon = 1e-12
        );
        assert_relative_eq!(
            triangle_disk_intersection_area(&t, Point::new(1.0, 1.0), 10.0),
            6.0,
            epsilon = 1e-12
        );
        // Disk inside the triangle.
        assert_relative_eq!(
            triangle_disk_intersection_area(&t, Point::new(1.0, 1.0), 0.5),
            PI * 0.25,
            epsilon = 1e-12
        );
        assert_eq!(
            triangle_disk_intersection_area(&t, Point::new(10.0, 10.0), 1.0),
            0.0
        );
        let flat = tri([(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]);
        assert_eq!(
            triangle_disk_intersection_area(&flat, Point::new(0.0, 0.0), 1.0),
            0.0
        );
    }

    #[test]
    fn polygon_two_disks_is_lens_when_polygon_is_large() {
        let square = [
            Point::new(-10.0, -10.0),
            Point::new(10.0, -10.0),
            Point::new(10.0, 10.0),
            Point::new(-10.0, 10.0),
        ];
        let disks = [
            Disk::new(Point::new(0.0, 0.0), 1.0),
            Disk::new(Point::new(1.3, 0.2), 0.8),
        ];
        let d = Point::new(0.0, 0.0).distance(Point::new(1.3, 0.2));
        assert_relative_eq!(
            convex_polygon_disks_area(&square, &disks),
            lens_area(1.0, 0.8, d).unwrap().area,
            epsilon = 1e-12
        );
    }

    #[test]
    fn circles_through_a_corner() {
        // Unit equilateral with unit disks: every circle passes through the
        // other two corners, and each clipped region is the whole triangle.
        let h = 3f64.sqrt() / 2.0;
        let t = tri([(0.0, 0.0), (1.0, 0.0), (0.5, h)]);
        let poly = t.ccw_vertices();
        let d = t.vertices.map(|c| Disk::new(c, 1.0));
        for subset in [&[d[0], d[2]][..], &[d[1], d[2]], &[d[0], d[1]], &d[..]] {
            assert_relative_eq!(
                convex_polygon_disks_area(&poly, subset),
                t.area,
                epsilon = 1e-12
            );
        }
    }
}
