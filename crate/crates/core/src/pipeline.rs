//! The generate → detect → plan → verify pipeline over scenario and report
//! files. The CLI is a thin wrapper around these functions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{triangle_from_vertices, Point};
use crate::heal::{apply_plan, plan_relocation, select_targets};
use crate::hole::{detect_holes_with, DetectOptions, HoleReport, MethodChoice};
use crate::io::{MeshSummary, PlanRecord, ReportFile, ScenarioFile, ScenarioMeta, VerifyRecord};
use crate::oracle::{mc_coverage_fraction, CoverageEstimate};
use crate::triangulation::{
    triangulate, MobileNode, SensorField, StationaryNode, TriMesh, TriangleCell,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenerateParams {
    pub width: f64,
    pub height: f64,
    pub n_stationary: usize,
    pub n_mobile: usize,
    pub radius: f64,
    pub mobile_radius: f64,
    pub seed: u64,
}

/// Uniform random deployment. Stationary sensors get ids `0..n_stationary`,
/// mobiles follow. Each position draws x then y from `ChaCha8Rng`.
pub fn generate_scenario(params: &GenerateParams) -> Result<ScenarioFile> {
    let GenerateParams {
        width,
        height,
        n_stationary,
        n_mobile,
        radius,
        mobile_radius,
        seed,
    } = *params;
    if n_stationary < 3 {
        return Err(Error::InvalidInput(format!(
            "n_stationary must be at least 3, got {n_stationary}"
        )));
    }
    for (name, value) in [
        ("width", width),
        ("height", height),
        ("radius", radius),
        ("mobile_radius", mobile_radius),
    ] {
        if !(value > 0.0 && value.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "{name} must be positive, got {value}"
            )));
        }
    }
    let total = n_stationary + n_mobile;
    if total > u32::MAX as usize {
        return Err(Error::InvalidInput(format!("too many sensors ({total})")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || Point::new(rng.random::<f64>() * width, rng.random::<f64>() * height);
    let stationary = (0..n_stationary)
        .map(|i| StationaryNode {
            id: i as u32,
            position: draw(),
        })
        .collect();
    let mobile = (0..n_mobile)
        .map(|i| MobileNode {
            id: (n_stationary + i) as u32,
            position: draw(),
            sensing_radius: mobile_radius,
        })
        .collect();
    let scenario = ScenarioFile {
        field: SensorField::new(width, height, radius, stationary, mobile)?,
        meta: Some(ScenarioMeta {
            seed,
            generator: "uniform".into(),
            n_stationary,
            n_mobile,
            mobile_radius,
        }),
    };
    Ok(scenario.canonicalized())
}

/// Triangulates the scenario and reports every triangle's hole.
pub fn run_detect(scenario: &ScenarioFile, options: &DetectOptions) -> Result<ReportFile> {
    let field = &scenario.field;
    let mesh = triangulate(field)?;
    let triangles = detect_holes_with(field, &mesh, options)?;
    let holes: Vec<&HoleReport> = triangles.iter().filter(|r| r.is_hole).collect();
    let method = match options.method {
        MethodChoice::Auto => "auto",
        MethodChoice::CaseOnly => "case",
        MethodChoice::ExactOnly => "exact",
    };
    Ok(ReportFile {
        scenario_hash: scenario.content_hash(),
        mesh: Some(MeshSummary {
            sites: field.stationary.len(),
            triangles: mesh.len(),
            hull_area: mesh.total_area(),
            sensing_radius: field.sensing_radius,
            method: method.into(),
            hole_epsilon: options.hole_epsilon(field.sensing_radius),
            holes: holes.len(),
            total_hole_area: holes.iter().map(|r| r.hole_area()).sum(),
        }),
        triangles,
        plan: None,
        verify: None,
    })
}

fn check_hash(report: &ReportFile, scenario: &ScenarioFile) -> Result<()> {
    let hash = scenario.content_hash();
    if report.scenario_hash != hash {
        return Err(Error::InconsistentInput(format!(
            "report was produced for scenario {}, not {}",
            report.scenario_hash, hash
        )));
    }
    Ok(())
}

/// Rebuilds the reported triangles from the scenario's sensor positions.
pub fn mesh_from_report(report: &ReportFile, field: &SensorField) -> Result<TriMesh> {
    let triangles = report
        .triangles
        .iter()
        .map(|r| {
            let [p, q, s] = r.sensors.map(|id| {
                field.stationary_position(id).ok_or_else(|| {
                    Error::InconsistentInput(format!(
                        "triangle {} references unknown stationary sensor {id}",
                        r.cell_id
                    ))
                })
            });
            Ok(TriangleCell {
                id: r.cell_id,
                sensors: r.sensors,
                geom: triangle_from_vertices(p?, q?, s?),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TriMesh { triangles })
}

/// Selects a target per hole and assigns mobiles; the plan is embedded in a
/// copy of `report`.
pub fn run_plan(
    report: &ReportFile,
    scenario: &ScenarioFile,
    mobile_radius: f64,
) -> Result<ReportFile> {
    check_hash(report, scenario)?;
    let mesh = mesh_from_report(report, &scenario.field)?;
    let targets = select_targets(&report.triangles, &mesh, mobile_radius)?;
    let plan = plan_relocation(&targets, &scenario.field);
    Ok(ReportFile {
        plan: Some(PlanRecord {
            mobile_radius,
            plan,
        }),
        verify: None,
        ..report.clone()
    })
}

/// Monte-Carlo coverage before and after applying the report's plan (if any).
/// Both estimates use the same seed, so they share sample points.
pub fn run_verify(
    scenario: &ScenarioFile,
    report: Option<&ReportFile>,
    samples: u64,
    seed: u64,
) -> Result<(CoverageEstimate, CoverageEstimate)> {
    let before = mc_coverage_fraction(&scenario.field, samples, seed)?;
    let plan = match report {
        Some(r) => {
            check_hash(r, scenario)?;
            r.plan.as_ref()
        }
        None => None,
    };
    let after = match plan {
        Some(record) => {
            let healed = apply_plan(&scenario.field, &record.plan)?;
            mc_coverage_fraction(&healed, samples, seed)?
        }
        None => before,
    };
    Ok((before, after))
}

/// `run_verify` with its result written into a report: the given one, or an
/// otherwise empty report for the scenario.
pub fn verify_report(
    scenario: &ScenarioFile,
    report: Option<&ReportFile>,
    samples: u64,
    seed: u64,
) -> Result<ReportFile> {
    let (before, after) = run_verify(scenario, report, samples, seed)?;
    let mut out = report.cloned().unwrap_or_else(|| ReportFile {
        scenario_hash: scenario.content_hash(),
        mesh: None,
        triangles: Vec::new(),
        plan: None,
        verify: None,
    });
    out.verify = Some(VerifyRecord {
        before: before.covered_fraction,
        after: after.covered_fraction,
        samples,
        seed,
        half_width: before.half_width.max(after.half_width),
    });
    Ok(out)
}
