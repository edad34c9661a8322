//! Scenario and report files.
//!
//! Both are pretty-printed JSON documents with a `schema_version`. Floats are
//! written rounded to 9 significant digits, which makes the written form
//! canonical: parsing a file and writing it back reproduces it byte for byte.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::geom::Point;
use crate::heal::{Assignment, HealingPlan, TargetLocation};
use crate::hole::{HoleComputation, HoleReport, LensCorrection, Validity};
use crate::triangulation::{CellId, MobileNode, SensorField, SensorId, StationaryNode};

pub const SCENARIO_SCHEMA_VERSION: u32 = 1;
pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Rounds to 9 significant digits, the precision every file stores.
pub fn canonical(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.8e}").parse().unwrap_or(x)
}

fn canonical_point(p: Point) -> Point {
    Point::new(canonical(p.x), canonical(p.y))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioMeta {
    pub seed: u64,
    pub generator: String,
    pub n_stationary: usize,
    pub n_mobile: usize,
    pub mobile_radius: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioFile {
    pub field: SensorField,
    pub meta: Option<ScenarioMeta>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct XY {
    pub x: f64,
    pub y: f64,
}

impl From<Point> for XY {
    fn from(p: Point) -> Self {
        let p = canonical_point(p);
        XY { x: p.x, y: p.y }
    }
}

impl From<XY> for Point {
    fn from(p: XY) -> Self {
        Point::new(p.x, p.y)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StationaryDoc {
    id: SensorId,
    x: f64,
    y: f64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MobileDoc {
    id: SensorId,
    x: f64,
    y: f64,
    sensing_radius: f64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FieldDoc {
    width: f64,
    height: f64,
    sensing_radius: f64,
    stationary: Vec<StationaryDoc>,
    mobile: Vec<MobileDoc>,
}

impl From<&SensorField> for FieldDoc {
    fn from(f: &SensorField) -> Self {
        FieldDoc {
            width: canonical(f.width),
            height: canonical(f.height),
            sensing_radius: canonical(f.sensing_radius),
            stationary: f
                .stationary
                .iter()
                .map(|n| StationaryDoc {
                    id: n.id,
                    x: canonical(n.position.x),
                    y: canonical(n.position.y),
                })
                .collect(),
            mobile: f
                .mobile
                .iter()
                .map(|m| MobileDoc {
                    id: m.id,
                    x: canonical(m.position.x),
                    y: canonical(m.position.y),
                    sensing_radius: canonical(m.sensing_radius),
                })
                .collect(),
        }
    }
}

impl FieldDoc {
    fn into_field(self) -> Result<SensorField> {
        SensorField::new(
            self.width,
            self.height,
            self.sensing_radius,
            self.stationary
                .into_iter()
                .map(|n| StationaryNode {
                    id: n.id,
                    position: Point::new(n.x, n.y),
                })
                .collect(),
            self.mobile
                .into_iter()
                .map(|m| MobileNode {
                    id: m.id,
                    position: Point::new(m.x, m.y),
                    sensing_radius: m.sensing_radius,
                })
                .collect(),
        )
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioDoc {
    schema_version: u32,
    field: FieldDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    meta: Option<ScenarioMeta>,
}

#[derive(Deserialize)]
struct VersionProbe {
    schema_version: u32,
}

fn parse_error(path: &str, err: serde_json::Error) -> Error {
    Error::Parse {
        path: path.to_string(),
        line: err.line(),
        column: err.column(),
        message: err.to_string(),
    }
}

fn check_version(text: &str, path: &str, expected: u32) -> Result<()> {
    let probe: VersionProbe = serde_json::from_str(text).map_err(|e| parse_error(path, e))?;
    if probe.schema_version != expected {
        return Err(Error::UnsupportedSchema {
            path: path.to_string(),
            found: probe.schema_version,
            expected,
        });
    }
    Ok(())
}

fn to_pretty<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("documents serialize");
    text.push('\n');
    text
}

impl ScenarioFile {
    /// Copy with every number rounded the way it is stored on disk.
    pub fn canonicalized(&self) -> ScenarioFile {
        let mut field = self.field.clone();
        field.width = canonical(field.width);
        field.height = canonical(field.height);
        field.sensing_radius = canonical(field.sensing_radius);
        for n in &mut field.stationary {
            n.position = canonical_point(n.position);
        }
        for m in &mut field.mobile {
            m.position = canonical_point(m.position);
            m.sensing_radius = canonical(m.sensing_radius);
        }
        ScenarioFile {
            field,
            meta: self.meta.clone().map(|mut m| {
                m.mobile_radius = canonical(m.mobile_radius);
                m
            }),
        }
    }

    pub fn to_json(&self) -> String {
        to_pretty(&ScenarioDoc {
            schema_version: SCENARIO_SCHEMA_VERSION,
            field: FieldDoc::from(&self.field),
            meta: self.meta.clone().map(|mut m| {
                m.mobile_radius = canonical(m.mobile_radius);
                m
            }),
        })
    }

    /// Parses a scenario document; `origin` names the source in errors.
    pub fn from_json(text: &str, origin: &str) -> Result<ScenarioFile> {
        check_version(text, origin, SCENARIO_SCHEMA_VERSION)?;
        let doc: ScenarioDoc = serde_json::from_str(text).map_err(|e| parse_error(origin, e))?;
        let field = doc.field.into_field().map_err(|e| match e {
            Error::InvalidInput(msg) => Error::InvalidInput(format!("{origin}: {msg}")),
            other => other,
        })?;
        Ok(ScenarioFile {
            field,
            meta: doc.meta,
        })
    }

    /// SHA-256 over the canonical compact JSON of the field (metadata excluded).
    pub fn content_hash(&self) -> String {
        let compact =
            serde_json::to_string(&FieldDoc::from(&self.field)).expect("field serializes");
        hex::encode(Sha256::digest(compact.as_bytes()))
    }

    pub fn read(path: &Path) -> Result<ScenarioFile> {
        let text = read_text(path)?;
        ScenarioFile::from_json(&text, &path.display().to_string())
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        write_text(path, &self.to_json())
    }
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Mesh-level facts recorded by `detect`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeshSummary {
    pub sites: usize,
    pub triangles: usize,
    pub hull_area: f64,
    pub sensing_radius: f64,
    pub method: String,
    pub hole_epsilon: f64,
    pub holes: usize,
    pub total_hole_area: f64,
}

/// The planning radius travels with the plan it was used for.
#[derive(Debug, Clone, PartialEq)]
pub struct PlanRecord {
    pub mobile_radius: f64,
    pub plan: HealingPlan,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyRecord {
    pub before: f64,
    pub after: f64,
    pub samples: u64,
    pub seed: u64,
    /// Larger of the two 99% half-widths.
    pub half_width: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportFile {
    pub scenario_hash: String,
    pub mesh: Option<MeshSummary>,
    /// Sorted by descending hole area, then cell id.
    pub triangles: Vec<HoleReport>,
    pub plan: Option<PlanRecord>,
    pub verify: Option<VerifyRecord>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LensDoc {
    edge: [usize; 2],
    distance: f64,
    half_area: f64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ValidityDoc {
    sectors_contained: bool,
    half_lenses_contained: bool,
    no_triple_overlap: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TriangleDoc {
    id: CellId,
    vertices: [SensorId; 3],
    case: String,
    s_delta: f64,
    sector_sum: f64,
    lens_corrections: Vec<LensDoc>,
    s_h: f64,
    method: String,
    validity: ValidityDoc,
    is_hole: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AssignmentDoc {
    mobile_id: SensorId,
    cell_id: CellId,
    kind: String,
    target: XY,
    hole_area: f64,
    distance: f64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct UnservedDoc {
    cell_id: CellId,
    kind: String,
    target: XY,
    hole_area: f64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PlanDoc {
    mobile_radius: f64,
    assignments: Vec<AssignmentDoc>,
    total_movement: f64,
    unserved: Vec<UnservedDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ReportDoc {
    schema_version: u32,
    scenario_hash: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mesh: Option<MeshSummary>,
    triangles: Vec<TriangleDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    plan: Option<PlanDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    verify: Option<VerifyRecord>,
}

fn triangle_doc(r: &HoleReport) -> TriangleDoc {
    let c = &r.computation;
    TriangleDoc {
        id: r.cell_id,
        vertices: r.sensors,
        case: r.case.to_string(),
        s_delta: canonical(c.s_delta),
        sector_sum: canonical(c.sector_sum),
        lens_corrections: c
            .lens_corrections
            .iter()
            .map(|l| LensDoc {
                edge: [l.edge.0, l.edge.1],
                distance: canonical(l.distance),
                half_area: canonical(l.half_area),
            })
            .collect(),
        s_h: canonical(c.s_h),
        method: c.method.to_string(),
        validity: ValidityDoc {
            sectors_contained: c.validity.sectors_contained,
            half_lenses_contained: c.validity.half_lenses_contained,
            no_triple_overlap: c.validity.no_triple_overlap,
        },
        is_hole: r.is_hole,
    }
}

fn hole_report(doc: TriangleDoc) -> Result<HoleReport> {
    if doc.s_h < 0.0 || doc.s_delta < 0.0 || doc.s_h > doc.s_delta {
        return Err(Error::InvalidInput(format!(
            "triangle {} has inconsistent areas s_h={} s_delta={}",
            doc.id, doc.s_h, doc.s_delta
        )));
    }
    Ok(HoleReport {
        cell_id: doc.id,
        sensors: doc.vertices,
        case: doc.case.parse()?,
        computation: HoleComputation {
            s_delta: doc.s_delta,
            sector_sum: doc.sector_sum,
            lens_corrections: doc
                .lens_corrections
                .into_iter()
                .map(|l| LensCorrection {
                    edge: (l.edge[0], l.edge[1]),
                    distance: l.distance,
                    half_area: l.half_area,
                })
                .collect(),
            s_h: doc.s_h,
            method: doc.method.parse()?,
            validity: Validity {
                sectors_contained: doc.validity.sectors_contained,
                half_lenses_contained: doc.validity.half_lenses_contained,
                no_triple_overlap: doc.validity.no_triple_overlap,
            },
        },
        is_hole: doc.is_hole,
    })
}

fn plan_doc(record: &PlanRecord) -> PlanDoc {
    PlanDoc {
        mobile_radius: canonical(record.mobile_radius),
        assignments: record
            .plan
            .assignments
            .iter()
            .map(|a| AssignmentDoc {
                mobile_id: a.mobile_id,
                cell_id: a.target.cell_id,
                kind: a.target.kind.to_string(),
                target: a.target.point.into(),
                hole_area: canonical(a.target.hole_area),
                distance: canonical(a.distance),
            })
            .collect(),
        total_movement: canonical(record.plan.total_movement),
        unserved: record
            .plan
            .unserved
            .iter()
            .map(|t| UnservedDoc {
                cell_id: t.cell_id,
                kind: t.kind.to_string(),
                target: t.point.into(),
                hole_area: canonical(t.hole_area),
            })
            .collect(),
    }
}

fn plan_record(doc: PlanDoc) -> Result<PlanRecord> {
    let assignments = doc
        .assignments
        .into_iter()
        .map(|a| {
            Ok(Assignment {
                mobile_id: a.mobile_id,
                target: TargetLocation {
                    cell_id: a.cell_id,
                    point: a.target.into(),
                    kind: a.kind.parse()?,
                    hole_area: a.hole_area,
                },
                distance: a.distance,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let unserved = doc
        .unserved
        .into_iter()
        .map(|t| {
            Ok(TargetLocation {
                cell_id: t.cell_id,
                point: t.target.into(),
                kind: t.kind.parse()?,
                hole_area: t.hole_area,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PlanRecord {
        mobile_radius: doc.mobile_radius,
        plan: HealingPlan {
            assignments,
            total_movement: doc.total_movement,
            unserved,
        },
    })
}

impl ReportFile {
    pub fn to_json(&self) -> String {
        to_pretty(&ReportDoc {
            schema_version: REPORT_SCHEMA_VERSION,
            scenario_hash: self.scenario_hash.clone(),
            mesh: self.mesh.clone().map(|mut m| {
                m.hull_area = canonical(m.hull_area);
                m.sensing_radius = canonical(m.sensing_radius);
                m.hole_epsilon = canonical(m.hole_epsilon);
                m.total_hole_area = canonical(m.total_hole_area);
                m
            }),
            triangles: self.triangles.iter().map(triangle_doc).collect(),
            plan: self.plan.as_ref().map(plan_doc),
            verify: self.verify.map(|v| VerifyRecord {
                before: canonical(v.before),
                after: canonical(v.after),
                half_width: canonical(v.half_width),
                ..v
            }),
        })
    }

    pub fn from_json(text: &str, origin: &str) -> Result<ReportFile> {
        check_version(text, origin, REPORT_SCHEMA_VERSION)?;
        let doc: ReportDoc = serde_json::from_str(text).map_err(|e| parse_error(origin, e))?;
        let wrap = |e: Error| match e {
            Error::InvalidInput(msg) => Error::InvalidInput(format!("{origin}: {msg}")),
            other => other,
        };
        let triangles = doc
            .triangles
            .into_iter()
            .map(hole_report)
            .collect::<Result<Vec<_>>>()
            .map_err(wrap)?;
        let plan = doc.plan.map(plan_record).transpose().map_err(wrap)?;
        let report = ReportFile {
            scenario_hash: doc.scenario_hash,
            mesh: doc.mesh,
            triangles,
            plan,
            verify: doc.verify,
        };
        report.check_references().map_err(wrap)?;
        Ok(report)
    }

    /// Every plan target must name a reported triangle.
    fn check_references(&self) -> Result<()> {
        if let Some(record) = &self.plan {
            let targets = record
                .plan
                .assignments
                .iter()
                .map(|a| &a.target)
                .chain(&record.plan.unserved);
            for t in targets {
                if !self.triangles.iter().any(|r| r.cell_id == t.cell_id) {
                    return Err(Error::InconsistentInput(format!(
                        "plan targets unknown cell {}",
                        t.cell_id
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn read(path: &Path) -> Result<ReportFile> {
        let text = read_text(path)?;
        ReportFile::from_json(&text, &path.display().to_string())
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        write_text(path, &self.to_json())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scenario() -> ScenarioFile {
        ScenarioFile {
            field: SensorField::new(
                10.0,
                10.0,
                1.5,
                vec![
                    StationaryNode {
                        id: 0,
                        position: Point::new(1.0 / 3.0, 2.0),
                    },
                    StationaryNode {
                        id: 1,
                        position: Point::new(5.0, 0.1),
                    },
                ],
                vec![MobileNode {
                    id: 2,
                    position: Point::new(9.0, 9.0),
                    sensing_radius: 2.0,
                }],
            )
            .unwrap(),
            meta: None,
        }
    }

    #[test]
    fn canonical_rounding() {
        assert_eq!(canonical(1.0 / 3.0), 0.333333333);
        assert_eq!(canonical(123456789.4), 123456789.0);
        assert_eq!(canonical(0.0), 0.0);
        assert_eq!(canonical(-0.0).to_bits(), 0.0f64.to_bits());
        let x = canonical(std::f64::consts::PI);
        assert_eq!(canonical(x), x);
    }

    #[test]
    fn scenario_round_trip_is_canonical() {
        let text = scenario().to_json();
        let parsed = ScenarioFile::from_json(&text, "mem").unwrap();
        assert_eq!(parsed.to_json(), text);
        assert_eq!(parsed, scenario().canonicalized());
        assert!(text.contains("\"schema_version\": 1"));
        assert!(text.contains("0.333333333"));
    }

    #[test]
    fn hash_ignores_meta_and_tracks_field() {
        let mut s = scenario();
        let h = s.content_hash();
        assert_eq!(h.len(), 64);
        s.meta = Some(ScenarioMeta {
            seed: 1,
            generator: "uniform".into(),
            n_stationary: 2,
            n_mobile: 1,
            mobile_radius: 2.0,
        });
        assert_eq!(s.content_hash(), h);
        s.field.stationary[0].position.x = 0.5;
        assert_ne!(s.content_hash(), h);
    }

    #[test]
    fn rejects_unknown_schema_and_bad_json() {
        let text = scenario()
            .to_json()
            .replace("\"schema_version\": 1", "\"schema_version\": 7");
        assert!(matches!(
            ScenarioFile::from_json(&text, "x.json"),
            Err(Error::UnsupportedSchema { found: 7, .. })
        ));
        match ScenarioFile::from_json("{\n  \"schema_version\": 1,\n  \"field\": [\n}", "bad.json")
        {
            Err(Error::Parse { path, line, .. }) => {
                assert_eq!(path, "bad.json");
                assert!(line >= 3);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        let bad_field = scenario()
            .to_json()
            .replace("\"width\": 10.0", "\"width\": -1.0");
        assert!(matches!(
            ScenarioFile::from_json(&bad_field, "neg.json"),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn report_rejects_dangling_plan_target() {
        let report = ReportFile {
            scenario_hash: "abc".into(),
            mesh: None,
            triangles: Vec::new(),
            plan: Some(PlanRecord {
                mobile_radius: 1.0,
                plan: HealingPlan {
                    assignments: Vec::new(),
                    total_movement: 0.0,
                    unserved: vec![TargetLocation {
                        cell_id: 4,
                        point: Point::new(1.0, 1.0),
                        kind: crate::heal::TargetKind::Incenter,
                        hole_area: 2.0,
                    }],
                },
            }),
            verify: None,
        };
        assert!(matches!(
            ReportFile::from_json(&report.to_json(), "r.json"),
            Err(Error::InconsistentInput(_))
        ));
    }
}
