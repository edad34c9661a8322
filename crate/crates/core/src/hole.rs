//! Per-triangle coverage-hole classification and exact hole area.
//!
//! Each mesh triangle carries a sensing disk of radius `R` at every vertex.
//! The uncovered part of the triangle is
//!
//! ```text
//! s_h = s_delta - (s1 + s2 + s3) + sum over overlapping edges of lens(R, R, d_k) / 2
//! ```
//!
//! where `s1..s3` are the vertex sectors (their opening angles sum to pi, so
//! the sector sum is `pi R^2 / 2`). That closed form only holds when every
//! vertex sector and every half-lens lies inside the triangle and the three
//! disks share no common point. When any of those fail the area comes from
//! the exact route instead: inclusion-exclusion over the triangle clipped by
//! each subset of the three disks.

use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geom::{convex_polygon_disks_area, equal_lens_area, sector_area, Disk, TriangleGeom};
use crate::triangulation::{CellId, SensorField, SensorId, TriMesh};

/// Relative tolerance for treating a side as exactly `2R`.
pub const TANGENCY_TOLERANCE: f64 = 1e-9;

/// Default hole threshold, as a multiple of `R^2`.
pub const DEFAULT_HOLE_EPSILON: f64 = 1e-9;

const PREDICATE_SLACK: f64 = 1e-12;

/// The nine three-sensor configurations.
///
/// `G` and `H` are computed exactly like `D` and `A` respectively and are
/// never produced by [`classify`]; they exist so report files can carry them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseLabel {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 9] = [
        CaseLabel::A,
        CaseLabel::B,
        CaseLabel::C,
        CaseLabel::D,
        CaseLabel::E,
        CaseLabel::F,
        CaseLabel::G,
        CaseLabel::H,
        CaseLabel::I,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::A => "A",
            CaseLabel::B => "B",
            CaseLabel::C => "C",
            CaseLabel::D => "D",
            CaseLabel::E => "E",
            CaseLabel::F => "F",
            CaseLabel::G => "G",
            CaseLabel::H => "H",
            CaseLabel::I => "I",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CaseLabel::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown case label {s:?}")))
    }
}

/// How `s_h` was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Closed-form sector/half-lens formula, all preconditions verified.
    CaseFormula,
    /// Exact clipped-disk inclusion-exclusion.
    ExactFallback,
    /// Closed-form formula forced although a precondition failed.
    CaseFormulaUnchecked,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::CaseFormula => "case-formula",
            Method::ExactFallback => "exact-fallback",
            Method::CaseFormulaUnchecked => "case-formula-unchecked",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Method::CaseFormula,
            Method::ExactFallback,
            Method::CaseFormulaUnchecked,
        ]
        .into_iter()
        .find(|m| m.as_str() == s)
        .ok_or_else(|| Error::InvalidInput(format!("unknown hole method {s:?}")))
    }
}

/// Which route `hole_area_with` may take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MethodChoice {
    /// Case formula when valid, exact otherwise.
    #[default]
    Auto,
    /// Case formula everywhere, even where a precondition fails.
    CaseOnly,
    ExactOnly,
}

impl FromStr for MethodChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(MethodChoice::Auto),
            "case" => Ok(MethodChoice::CaseOnly),
            "exact" => Ok(MethodChoice::ExactOnly),
            other => Err(Error::InvalidInput(format!(
                "unknown method {other:?} (expected auto, case or exact)"
            ))),
        }
    }
}

/// Preconditions of the closed-form hole formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Validity {
    pub sectors_contained: bool,
    pub half_lenses_contained: bool,
    pub no_triple_overlap: bool,
}

impl Validity {
    pub fn all(&self) -> bool {
        self.sectors_contained && self.half_lenses_contained && self.no_triple_overlap
    }
}

/// Half of the lens shared by the disks at two vertices of one edge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LensCorrection {
    /// Vertex indices (into the triangle) of the edge endpoints.
    pub edge: (usize, usize),
    pub distance: f64,
    pub half_area: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HoleComputation {
    pub s_delta: f64,
    pub sector_sum: f64,
    pub lens_corrections: Vec<LensCorrection>,
    pub s_h: f64,
    pub method: Method,
    pub validity: Validity,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HoleReport {
    pub cell_id: CellId,
    pub sensors: [SensorId; 3],
    pub case: CaseLabel,
    pub computation: HoleComputation,
    pub is_hole: bool,
}

impl HoleReport {
    pub fn hole_area(&self) -> f64 {
        self.computation.s_h
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DetectOptions {
    pub method: MethodChoice,
    /// Absolute hole threshold; defaults to `DEFAULT_HOLE_EPSILON * R^2`.
    pub min_hole_area: Option<f64>,
}

impl DetectOptions {
    pub fn hole_epsilon(&self, radius: f64) -> f64 {
        self.min_hole_area
            .unwrap_or(DEFAULT_HOLE_EPSILON * radius * radius)
    }
}

const EDGES: [(usize, usize); 3] = [(0, 1), (1, 2), (2, 0)];

fn check_inputs(tri: &TriangleGeom, radius: f64) -> Result<()> {
    tri.ensure_non_degenerate()?;
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "sensing radius must be positive, got {radius}"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum PairState {
    Overlapping,
    Tangent,
    Separate,
}

fn pair_state(distance: f64, radius: f64) -> PairState {
    let gap = distance - 2.0 * radius;
    if gap.abs() <= TANGENCY_TOLERANCE * radius {
        PairState::Tangent
    } else if gap < 0.0 {
        PairState::Overlapping
    } else {
        PairState::Separate
    }
}

/// Area of the triangle left uncovered by the three vertex disks, computed
/// exactly by inclusion-exclusion over clipped-disk regions.
pub fn exact_uncovered_area(tri: &TriangleGeom, radius: f64) -> f64 {
    if tri.degenerate {
        return 0.0;
    }
    let disks = tri.vertices.map(|v| Disk::new(v, radius));
    exact_uncovered_area_by(tri, &disks)
}

/// Uncovered area of `tri` under an arbitrary small set of disks.
pub fn exact_uncovered_area_by(tri: &TriangleGeom, disks: &[Disk]) -> f64 {
    if tri.degenerate {
        return 0.0;
    }
    assert!(
        disks.len() <= 16,
        "inclusion-exclusion over {} disks",
        disks.len()
    );
    let polygon = tri.ccw_vertices();
    let mut covered = 0.0;
    let mut subset = Vec::with_capacity(disks.len());
    for mask in 1u32..(1 << disks.len()) {
        subset.clear();
        subset.extend(
            disks
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, d)| *d),
        );
        let area = convex_polygon_disks_area(&polygon, &subset);
        if subset.len() % 2 == 1 {
            covered += area;
        } else {
            covered -= area;
        }
    }
    (tri.area - covered).clamp(0.0, tri.area)
}

/// Whether the three vertex disks leave no hole (below the default threshold).
pub fn full_coverage(tri: &TriangleGeom, radius: f64) -> bool {
    full_coverage_within(tri, radius, DEFAULT_HOLE_EPSILON * radius * radius)
}

fn full_coverage_within(tri: &TriangleGeom, radius: f64, epsilon: f64) -> bool {
    exact_uncovered_area(tri, radius) <= epsilon
}

fn sides_equal(x: f64, y: f64, scale: f64) -> bool {
    (x - y).abs() <= TANGENCY_TOLERANCE * scale
}

pub fn classify(tri: &TriangleGeom, radius: f64) -> Result<CaseLabel> {
    check_inputs(tri, radius)?;
    Ok(classify_unchecked(
        tri,
        radius,
        DEFAULT_HOLE_EPSILON * radius * radius,
    ))
}

fn classify_unchecked(tri: &TriangleGeom, radius: f64, epsilon: f64) -> CaseLabel {
    if full_coverage_within(tri, radius, epsilon) {
        CaseLabel::F
    } else {
        label_from_sides(tri, radius)
    }
}

/// Label for a triangle already known not to be fully covered.
fn label_from_sides(tri: &TriangleGeom, radius: f64) -> CaseLabel {
    let states = tri.sides().map(|d| pair_state(d, radius));
    let overlapping = states
        .iter()
        .filter(|s| **s == PairState::Overlapping)
        .count();
    match overlapping {
        0 => {
            let [a, b, c] = tri.sides();
            let scale = tri.max_side();
            let equal_pairs = [
                sides_equal(a, b, scale),
                sides_equal(b, c, scale),
                sides_equal(a, c, scale),
            ]
            .iter()
            .filter(|e| **e)
            .count();
            if states.iter().all(|s| *s == PairState::Tangent) {
                CaseLabel::B
            } else if equal_pairs == 1 {
                CaseLabel::C
            } else {
                CaseLabel::A
            }
        }
        1 => CaseLabel::D,
        2 => CaseLabel::E,
        _ => CaseLabel::I,
    }
}

/// Largest angle, seen from either edge endpoint and measured from the edge,
/// reached by the inner half of the lens of two radius-`R` disks `d` apart.
fn half_lens_angular_extent(distance: f64, radius: f64) -> f64 {
    if distance <= SQRT_2 * radius {
        // The tangent point from one center to the other circle lies on the arc.
        (radius / distance).min(1.0).asin()
    } else {
        (distance / (2.0 * radius)).min(1.0).acos()
    }
}

/// Radius of the smallest circle enclosing the three vertices.
fn min_enclosing_radius(tri: &TriangleGeom) -> f64 {
    let [a, b, c] = tri.sides();
    let longest = tri.max_side();
    let (p, q) = match longest {
        x if x == a => (b, c),
        x if x == b => (a, c),
        _ => (a, b),
    };
    if longest * longest >= p * p + q * q {
        longest / 2.0
    } else {
        a * b * c / (4.0 * tri.area)
    }
}

/// Preconditions of the closed-form formula for this triangle and radius.
pub fn validity(tri: &TriangleGeom, radius: f64) -> Validity {
    let slack = 1.0 + PREDICATE_SLACK;
    let angles = tri.angles();
    let sectors_contained = (0..3).all(|i| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        radius <= tri.edge_length(i, j) * slack
            && radius <= tri.edge_length(i, k) * slack
            && radius <= tri.altitude(i) * slack
    });
    let half_lenses_contained = EDGES.iter().all(|&(i, j)| {
        let d = tri.edge_length(i, j);
        if pair_state(d, radius) != PairState::Overlapping {
            return true;
        }
        let extent = half_lens_angular_extent(d, radius);
        radius <= d * slack && extent <= angles[i] * slack && extent <= angles[j] * slack
    });
    let no_triple_overlap = min_enclosing_radius(tri) >= radius * (1.0 - PREDICATE_SLACK);
    Validity {
        sectors_contained,
        half_lenses_contained,
        no_triple_overlap,
    }
}

struct CaseTerms {
    sector_sum: f64,
    lens_corrections: Vec<LensCorrection>,
    value: f64,
}

fn case_terms(tri: &TriangleGeom, radius: f64) -> CaseTerms {
    let sector_sum: f64 = tri
        .angles()
        .iter()
        .map(|&angle| sector_area(angle, radius).unwrap_or(0.0))
        .sum();
    let lens_corrections: Vec<LensCorrection> = EDGES
        .iter()
        .filter_map(|&(i, j)| {
            let d = tri.edge_length(i, j);
            (pair_state(d, radius) == PairState::Overlapping).then(|| LensCorrection {
                edge: (i, j),
                distance: d,
                half_area: 0.5 * equal_lens_area(radius, d),
            })
        })
        .collect();
    let value = tri.area - sector_sum + lens_corrections.iter().map(|l| l.half_area).sum::<f64>();
    CaseTerms {
        sector_sum,
        lens_corrections,
        value,
    }
}

/// Hole area with automatic method selection.
pub fn hole_area(tri: &TriangleGeom, radius: f64) -> Result<HoleComputation> {
    hole_area_with(tri, radius, MethodChoice::Auto)
}

pub fn hole_area_with(
    tri: &TriangleGeom,
    radius: f64,
    choice: MethodChoice,
) -> Result<HoleComputation> {
    check_inputs(tri, radius)?;
    let validity = validity(tri, radius);
    let terms = case_terms(tri, radius);
    let (raw, method) = match (choice, validity.all()) {
        (MethodChoice::Auto, true) => (terms.value, Method::CaseFormula),
        (MethodChoice::CaseOnly, true) => (terms.value, Method::CaseFormula),
        (MethodChoice::CaseOnly, false) => (terms.value, Method::CaseFormulaUnchecked),
        (MethodChoice::Auto, false) | (MethodChoice::ExactOnly, _) => {
            (exact_uncovered_area(tri, radius), Method::ExactFallback)
        }
    };
    Ok(HoleComputation {
        s_delta: tri.area,
        sector_sum: terms.sector_sum,
        lens_corrections: terms.lens_corrections,
        s_h: raw.clamp(0.0, tri.area),
        method,
        validity,
    })
}

/// One report per mesh triangle, sorted by descending hole area then cell id.
pub fn detect_holes(field: &SensorField, mesh: &TriMesh) -> Result<Vec<HoleReport>> {
    detect_holes_with(field, mesh, &DetectOptions::default())
}

pub fn detect_holes_with(
    field: &SensorField,
    mesh: &TriMesh,
    options: &DetectOptions,
) -> Result<Vec<HoleReport>> {
    let radius = field.sensing_radius;
    let epsilon = options.hole_epsilon(radius);
    if !(epsilon >= 0.0) {
        return Err(Error::InvalidInput(format!(
            "hole threshold must be non-negative, got {epsilon}"
        )));
    }
    let mut reports = Vec::with_capacity(mesh.len());
    for cell in &mesh.triangles {
        for (k, id) in cell.sensors.iter().enumerate() {
            match field.stationary_position(*id) {
                Some(p) if p == cell.geom.vertices[k] => {}
                Some(p) => {
                    return Err(Error::InconsistentInput(format!(
                        "cell {} places sensor {id} at {}, field has it at {p}",
                        cell.id, cell.geom.vertices[k]
                    )))
                }
                None => {
                    return Err(Error::InconsistentInput(format!(
                        "cell {} references unknown stationary sensor {id}",
                        cell.id
                    )))
                }
            }
        }
        let computation = hole_area_with(&cell.geom, radius, options.method)?;
        let is_hole = computation.s_h > epsilon;
        let case = if is_hole {
            label_from_sides(&cell.geom, radius)
        } else {
            CaseLabel::F
        };
        reports.push(HoleReport {
            cell_id: cell.id,
            sensors: cell.sensors,
            case,
            computation,
            is_hole,
        });
    }
    sort_reports(&mut reports);
    Ok(reports)
}

pub(crate) fn sort_reports(reports: &mut [HoleReport]) {
    reports.sort_by(|x, y| {
        y.computation
            .s_h
            .total_cmp(&x.computation.s_h)
            .then(x.cell_id.cmp(&y.cell_id))
    });
}

/// Sector sum for a triangle with every vertex sector inside it.
pub fn contained_sector_sum(radius: f64) -> f64 {
    0.5 * PI * radius * radius
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{triangle_from_vertices, Point};
    use crate::triangulation::{triangulate, StationaryNode};
    use approx::assert_relative_eq;

    fn tri(p: [(f64, f64); 3]) -> TriangleGeom {
        triangle_from_vertices(
            Point::new(p[0].0, p[0].1),
            Point::new(p[1].0, p[1].1),
            Point::new(p[2].0, p[2].1),
        )
    }

    fn equilateral(side: f64) -> TriangleGeom {
        tri([
            (0.0, 0.0),
            (side, 0.0),
            (side / 2.0, side * 3f64.sqrt() / 2.0),
        ])
    }

    /// Triangle with the given side lengths, built by the law of cosines.
    fn from_sides(a: f64, b: f64, c: f64) -> TriangleGeom {
        // c along the x axis, third vertex at distance b from the origin.
        let x = (b * b + c * c - a * a) / (2.0 * c);
        let y = (b * b - x * x).sqrt();
        tri([(0.0, 0.0), (c, 0.0), (x, y)])
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&equilateral(2.5), 1.0).unwrap(), CaseLabel::A);
        assert_eq!(
            classify(&from_sides(1.5, 2.2, 2.2), 1.0).unwrap(),
            CaseLabel::D
        );
        assert_eq!(classify(&equilateral(1.5), 1.0).unwrap(), CaseLabel::F);
        assert_eq!(classify(&equilateral(2.0), 1.0).unwrap(), CaseLabel::B);
        assert_eq!(
            classify(&from_sides(2.5, 2.5, 3.0), 1.0).unwrap(),
            CaseLabel::C
        );
        assert_eq!(
            classify(&from_sides(1.8, 1.9, 2.5), 1.0).unwrap(),
            CaseLabel::E
        );
        assert_eq!(classify(&equilateral(1.9), 1.0).unwrap(), CaseLabel::I);
        let flat = tri([(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]);
        assert!(matches!(
            classify(&flat, 1.0),
            Err(Error::DegenerateGeometry(_))
        ));
    }

    #[test]
    fn full_coverage_examples() {
        assert!(full_coverage(&equilateral(1.5), 1.0));
        assert!(!full_coverage(&equilateral(1.9), 1.0));
        // Obtuse: R equal to the circumradius still covers.
        let t = tri([(0.0, 0.0), (4.0, 0.0), (1.0, 1.0)]);
        let (_, circ) = crate::geom::circumcenter(&t).unwrap();
        assert!(full_coverage(&t, circ));
    }

    #[test]
    fn hole_area_examples() {
        let eq2 = hole_area(&equilateral(2.0), 1.0).unwrap();
        assert_eq!(eq2.method, Method::CaseFormula);
        assert_relative_eq!(eq2.s_h, 3f64.sqrt() - PI / 2.0, epsilon = 1e-12);
        assert_relative_eq!(eq2.s_h, 0.1612545, epsilon = 1e-7);

        let right = hole_area(&tri([(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)]), 1.0).unwrap();
        assert_eq!(right.method, Method::CaseFormula);
        assert_relative_eq!(right.s_h, 4.4292037, epsilon = 1e-7);
        assert_relative_eq!(right.sector_sum, contained_sector_sum(1.0), epsilon = 1e-12);

        let one = hole_area(&tri([(0.0, 0.0), (1.5, 0.0), (0.75, 2.0)]), 1.0).unwrap();
        assert_eq!(one.method, Method::CaseFormula);
        assert_eq!(one.lens_corrections.len(), 1);
        assert_relative_eq!(one.s_h, 0.1558596, epsilon = 1e-7);

        let case_i = hole_area(&equilateral(1.9), 1.0).unwrap();
        assert_eq!(case_i.method, Method::CaseFormula);
        assert_eq!(case_i.lens_corrections.len(), 3);
        assert_relative_eq!(case_i.s_h, 0.0551486, epsilon = 1e-7);
    }

    #[test]
    fn case_formula_matches_exact_where_valid() {
        for t in [
            equilateral(2.0),
            equilateral(1.9),
            tri([(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)]),
            tri([(0.0, 0.0), (1.5, 0.0), (0.75, 2.0)]),
        ] {
            let case = hole_area_with(&t, 1.0, MethodChoice::CaseOnly).unwrap();
            let exact = hole_area_with(&t, 1.0, MethodChoice::ExactOnly).unwrap();
            assert_eq!(case.method, Method::CaseFormula);
            assert!(
                (case.s_h - exact.s_h).abs() < 1e-9 * t.area,
                "{} vs {}",
                case.s_h,
                exact.s_h
            );
        }
    }

    #[test]
    fn invalid_preconditions_route_to_exact() {
        // Radius beyond the altitude: sectors spill out of the triangle.
        let t = tri([(0.0, 0.0), (6.0, 0.0), (3.0, 0.8)]);
        let auto = hole_area(&t, 1.0).unwrap();
        assert!(!auto.validity.sectors_contained);
        assert_eq!(auto.method, Method::ExactFallback);
        let forced = hole_area_with(&t, 1.0, MethodChoice::CaseOnly).unwrap();
        assert_eq!(forced.method, Method::CaseFormulaUnchecked);
        assert!(auto.s_h >= 0.0 && auto.s_h <= t.area);
    }

    #[test]
    fn half_lens_extent_is_continuous() {
        let below = half_lens_angular_extent(SQRT_2 * (1.0 - 1e-12), 1.0);
        let above = half_lens_angular_extent(SQRT_2 * (1.0 + 1e-12), 1.0);
        assert!((below - above).abs() < 1e-9);
        assert_relative_eq!(below, PI / 4.0, epsilon = 1e-9);
    }

    #[test]
    fn labels_and_methods_parse() {
        for c in CaseLabel::ALL {
            assert_eq!(c.as_str().parse::<CaseLabel>().unwrap(), c);
        }
        assert!("Z".parse::<CaseLabel>().is_err());
        for m in [
            Method::CaseFormula,
            Method::ExactFallback,
            Method::CaseFormulaUnchecked,
        ] {
            assert_eq!(m.as_str().parse::<Method>().unwrap(), m);
        }
        assert_eq!(
            "exact".parse::<MethodChoice>().unwrap(),
            MethodChoice::ExactOnly
        );
        assert!("fast".parse::<MethodChoice>().is_err());
    }

    fn field(points: &[(f64, f64)], radius: f64) -> SensorField {
        let stationary = points
            .iter()
            .enumerate()
            .map(|(i, &(x, y))| StationaryNode {
                id: i as SensorId,
                position: Point::new(x, y),
            })
            .collect();
        SensorField::new(10.0, 10.0, radius, stationary, Vec::new()).unwrap()
    }

    #[test]
    fn detect_examples() {
        let h = 3f64.sqrt() / 2.0;
        let f = field(&[(1.0, 1.0), (2.5, 1.0), (1.75, 1.0 + 1.5 * h)], 1.0);
        let reports = detect_holes(&f, &triangulate(&f).unwrap()).unwrap();
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].case, CaseLabel::F);
        assert!(!reports[0].is_hole);

        let f = field(&[(1.0, 1.0), (4.0, 1.0), (2.5, 1.0 + 3.0 * h)], 1.0);
        let reports = detect_holes(&f, &triangulate(&f).unwrap()).unwrap();
        assert_eq!(reports[0].case, CaseLabel::A);
        assert!(reports[0].is_hole);
        assert_relative_eq!(
            reports[0].hole_area(),
            9.0 * 3f64.sqrt() / 4.0 - PI / 2.0,
            epsilon = 1e-9
        );

        let f = field(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)], 1.0);
        let reports = detect_holes(&f, &triangulate(&f).unwrap()).unwrap();
        assert_eq!(reports.len(), 2);
        assert!(reports.iter().all(|r| !r.is_hole));
    }

    #[test]
    fn detect_sorts_by_area_then_id() {
        let f = field(
            &[
                (0.0, 0.0),
                (4.0, 0.0),
                (4.0, 3.0),
                (0.0, 3.0),
                (2.0, 1.5),
                (9.0, 9.0),
            ],
            1.0,
        );
        let reports = detect_holes(&f, &triangulate(&f).unwrap()).unwrap();
        for w in reports.windows(2) {
            let (x, y) = (&w[0], &w[1]);
            assert!(
                x.hole_area() > y.hole_area()
                    || (x.hole_area() == y.hole_area() && x.cell_id < y.cell_id)
            );
        }
    }

    #[test]
    fn detect_rejects_foreign_mesh() {
        let f = field(&[(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)], 1.0);
        let mesh = triangulate(&f).unwrap();
        let other = field(&[(0.0, 0.0), (4.0, 0.0), (0.0, 3.5)], 1.0);
        assert!(matches!(
            detect_holes(&other, &mesh),
            Err(Error::InconsistentInput(_))
        ));
        let fewer = field(&[(0.0, 0.0), (4.0, 0.0)], 1.0);
        assert!(matches!(
            detect_holes(&fewer, &mesh),
            Err(Error::InconsistentInput(_))
        ));
    }

    #[test]
    fn threshold_override() {
        let f = field(&[(0.0, 0.0), (2.0, 0.0), (1.0, 3f64.sqrt())], 1.0);
        let mesh = triangulate(&f).unwrap();
        let opts = DetectOptions {
            min_hole_area: Some(0.2),
            ..DetectOptions::default()
        };
        let reports = detect_holes_with(&f, &mesh, &opts).unwrap();
        assert!(!reports[0].is_hole);
        assert!(reports[0].hole_area() > 0.16);
    }
}
