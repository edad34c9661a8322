//! Target selection for coverage holes and mobile-node relocation.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geom::{circumcenter, incenter, Point, TriangleGeom};
use crate::hole::HoleReport;
use crate::triangulation::{CellId, SensorField, SensorId, TriMesh};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TargetKind {
    Circumcenter,
    Incenter,
}

impl TargetKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TargetKind::Circumcenter => "circumcenter",
            TargetKind::Incenter => "incenter",
        }
    }
}

impl fmt::Display for TargetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TargetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "circumcenter" => Ok(TargetKind::Circumcenter),
            "incenter" => Ok(TargetKind::Incenter),
            other => Err(Error::InvalidInput(format!(
                "unknown target kind {other:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TargetLocation {
    pub cell_id: CellId,
    pub point: Point,
    pub kind: TargetKind,
    pub hole_area: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Assignment {
    pub mobile_id: SensorId,
    pub target: TargetLocation,
    pub distance: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct HealingPlan {
    /// Sorted by mobile id.
    pub assignments: Vec<Assignment>,
    pub total_movement: f64,
    /// Targets left without a mobile, largest hole first.
    pub unserved: Vec<TargetLocation>,
}

impl HealingPlan {
    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty() && self.unserved.is_empty()
    }
}

/// Picks the relocation point for one hole: the circumcenter when the hole
/// fits inside one mobile sensing disk (`s_h <= pi R_m^2`), the incenter
/// otherwise.
pub fn select_target(
    report: &HoleReport,
    tri: &TriangleGeom,
    mobile_radius: f64,
) -> Result<TargetLocation> {
    if !report.is_hole {
        return Err(Error::InvalidInput(format!(
            "cell {} has no hole to heal",
            report.cell_id
        )));
    }
    if !(mobile_radius > 0.0 && mobile_radius.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "mobile sensing radius must be positive, got {mobile_radius}"
        )));
    }
    let hole_area = report.hole_area();
    let (point, kind) = if hole_area <= PI * mobile_radius * mobile_radius {
        (circumcenter(tri)?.0, TargetKind::Circumcenter)
    } else {
        (incenter(tri)?.0, TargetKind::Incenter)
    };
    Ok(TargetLocation {
        cell_id: report.cell_id,
        point,
        kind,
        hole_area,
    })
}

/// Targets for every hole report, in the order given.
pub fn select_targets(
    reports: &[HoleReport],
    mesh: &TriMesh,
    mobile_radius: f64,
) -> Result<Vec<TargetLocation>> {
    reports
        .iter()
        .filter(|r| r.is_hole)
        .map(|r| {
            let cell = mesh.cell(r.cell_id)?;
            if cell.sensors != r.sensors {
                return Err(Error::InconsistentInput(format!(
                    "report for cell {} names sensors {:?}, mesh has {:?}",
                    r.cell_id, r.sensors, cell.sensors
                )));
            }
            select_target(r, &cell.geom, mobile_radius)
        })
        .collect()
}

/// Minimum-cost assignment of every row to a distinct column.
///
/// Requires `rows <= columns`; returns the column chosen for each row. This
/// is the shortest-augmenting-path form of the Hungarian method with row and
/// column potentials, `O(rows^2 * columns)`.
pub fn min_cost_assignment(costs: &[Vec<f64>]) -> Vec<usize> {
    let n = costs.len();
    if n == 0 {
        return Vec::new();
    }
    let m = costs[0].len();
    assert!(n <= m, "assignment needs rows ({n}) <= columns ({m})");
    assert!(costs.iter().all(|row| row.len() == m), "ragged cost matrix");

    // 1-based; column 0 is the virtual source of each augmenting search.
    let mut u = vec![0.0; n + 1];
    let mut v = vec![0.0; m + 1];
    let mut owner = vec![0usize; m + 1];
    let mut way = vec![0usize; m + 1];
    for row in 1..=n {
        owner[0] = row;
        let mut col0 = 0;
        let mut min_v = vec![f64::INFINITY; m + 1];
        let mut used = vec![false; m + 1];
        loop {
            used[col0] = true;
            let i0 = owner[col0];
            let mut delta = f64::INFINITY;
            let mut col1 = 0;
            for j in 1..=m {
                if used[j] {
                    continue;
                }
                let reduced = costs[i0 - 1][j - 1] - u[i0] - v[j];
                if reduced < min_v[j] {
                    min_v[j] = reduced;
                    way[j] = col0;
                }
                if min_v[j] < delta {
                    delta = min_v[j];
                    col1 = j;
                }
            }
            for j in 0..=m {
                if used[j] {
                    u[owner[j]] += delta;
                    v[j] -= delta;
                } else {
                    min_v[j] -= delta;
                }
            }
            col0 = col1;
            if owner[col0] == 0 {
                break;
            }
        }
        loop {
            let prev = way[col0];
            owner[col0] = owner[prev];
            col0 = prev;
            if col0 == 0 {
                break;
            }
        }
    }
    let mut result = vec![0usize; n];
    for j in 1..=m {
        if owner[j] != 0 {
            result[owner[j] - 1] = j - 1;
        }
    }
    result
}

fn clamp_to_field(p: Point, field: &SensorField) -> Point {
    Point::new(p.x.clamp(0.0, field.width), p.y.clamp(0.0, field.height))
}

/// Assigns mobile nodes to targets with minimum total travel.
///
/// Targets are ranked by hole area (ties by cell id); when they outnumber the
/// mobiles only the largest ones are served. Target points outside the field
/// are moved to the nearest point of the field rectangle.
pub fn plan_relocation(targets: &[TargetLocation], field: &SensorField) -> HealingPlan {
    let mut ranked: Vec<TargetLocation> = targets
        .iter()
        .map(|t| TargetLocation {
            point: clamp_to_field(t.point, field),
            ..*t
        })
        .collect();
    ranked.sort_by(|x, y| {
        y.hole_area
            .total_cmp(&x.hole_area)
            .then(x.cell_id.cmp(&y.cell_id))
    });
    let mut mobiles = field.mobile.clone();
    mobiles.sort_by_key(|m| m.id);
    let served_count = ranked.len().min(mobiles.len());
    let unserved = ranked.split_off(served_count);
    let served = ranked;

    let costs: Vec<Vec<f64>> = served
        .iter()
        .map(|t| {
            mobiles
                .iter()
                .map(|m| m.position.distance(t.point))
                .collect()
        })
        .collect();
    let choice = min_cost_assignment(&costs);
    let mut assignments: Vec<Assignment> = served
        .iter()
        .zip(&choice)
        .enumerate()
        .map(|(row, (target, &col))| Assignment {
            mobile_id: mobiles[col].id,
            target: *target,
            distance: costs[row][col],
        })
        .collect();
    assignments.sort_by_key(|a| a.mobile_id);
    let total_movement = assignments.iter().map(|a| a.distance).sum();
    HealingPlan {
        assignments,
        total_movement,
        unserved,
    }
}

/// Field with every assigned mobile moved onto its target.
pub fn apply_plan(field: &SensorField, plan: &HealingPlan) -> Result<SensorField> {
    let mut out = field.clone();
    for a in &plan.assignments {
        let mobile = out
            .mobile
            .iter_mut()
            .find(|m| m.id == a.mobile_id)
            .ok_or_else(|| {
                Error::InconsistentInput(format!(
                    "plan moves unknown mobile sensor {}",
                    a.mobile_id
                ))
            })?;
        mobile.position = a.target.point;
    }
    out.validate()?;
    Ok(out)
}
