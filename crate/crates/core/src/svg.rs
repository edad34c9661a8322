//! Static SVG rendering of a scenario and, optionally, its report.
//!
//! Output is plain text built with fixed-precision formatting, so the same
//! inputs always give the same bytes. World y points up; SVG y points down,
//! so every y is written as `height - y`.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::geom::Point;
use crate::heal::{select_target, TargetLocation};
use crate::hole::CaseLabel;
use crate::io::{ReportFile, ScenarioFile};
use crate::pipeline::mesh_from_report;
use crate::triangulation::{triangulate, TriMesh};

fn case_fill(case: CaseLabel) -> &'static str {
    match case {
        CaseLabel::A => "#d62728",
        CaseLabel::B => "#ff7f0e",
        CaseLabel::C => "#bcbd22",
        CaseLabel::D => "#9467bd",
        CaseLabel::E => "#8c564b",
        CaseLabel::F => "#7f7f7f",
        CaseLabel::G => "#e377c2",
        CaseLabel::H => "#17becf",
        CaseLabel::I => "#1f77b4",
    }
}

struct Canvas {
    out: String,
    height: f64,
}

impl Canvas {
    fn x(&self, v: f64) -> String {
        format!("{v:.4}")
    }
    fn y(&self, v: f64) -> String {
        format!("{:.4}", self.height - v)
    }
    fn pt(&self, p: Point) -> String {
        format!("{},{}", self.x(p.x), self.y(p.y))
    }
    fn line(&mut self, class: &str, a: Point, b: Point, extra: &str) {
        let (x1, y1, x2, y2) = (self.x(a.x), self.y(a.y), self.x(b.x), self.y(b.y));
        let _ = writeln!(
            self.out,
            r#"<line class="{class}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"{extra}/>"#
        );
    }
    fn circle(&mut self, class: &str, c: Point, r: f64) {
        let (cx, cy) = (self.x(c.x), self.y(c.y));
        let _ = writeln!(
            self.out,
            r#"<circle class="{class}" cx="{cx}" cy="{cy}" r="{r:.4}"/>"#
        );
    }
}

/// Targets to mark: the plan's if there is one, otherwise the rule's choice
/// for every hole using the scenario's mobile radius.
fn markers(
    report: &ReportFile,
    scenario: &ScenarioFile,
    mesh: &TriMesh,
) -> Result<(Vec<TargetLocation>, bool)> {
    if let Some(record) = &report.plan {
        let plan = &record.plan;
        let mut all: Vec<TargetLocation> = plan.assignments.iter().map(|a| a.target).collect();
        all.extend(plan.unserved.iter().copied());
        return Ok((all, true));
    }
    let field = &scenario.field;
    let mobile_radius = scenario
        .meta
        .as_ref()
        .map(|m| m.mobile_radius)
        .or_else(|| field.mobile.first().map(|m| m.sensing_radius))
        .unwrap_or(field.sensing_radius);
    let mut targets = Vec::new();
    for r in report.triangles.iter().filter(|r| r.is_hole) {
        let cell = mesh.cell(r.cell_id)?;
        targets.push(select_target(r, &cell.geom, mobile_radius)?);
    }
    Ok((targets, false))
}

/// Draws the field boundary, sensing disks, triangulation, hole shading by
/// case label, target markers and movement arrows.
pub fn render_svg(scenario: &ScenarioFile, report: Option<&ReportFile>) -> Result<String> {
    let field = &scenario.field;
    if let Some(r) = report {
        let hash = scenario.content_hash();
        if r.scenario_hash != hash {
            return Err(Error::InconsistentInput(format!(
                "report was produced for scenario {}, not {}",
                r.scenario_hash, hash
            )));
        }
    }
    let mesh = match report {
        Some(r) if !r.triangles.is_empty() => Some(mesh_from_report(r, field)?),
        // A field that cannot be triangulated still renders, just without edges.
        _ => triangulate(field).ok(),
    };

    let (w, h) = (field.width, field.height);
    let margin = 0.05 * w.max(h);
    let stroke = w.max(h) / 500.0;
    let mut c = Canvas {
        out: String::new(),
        height: h,
    };
    let _ = writeln!(
        c.out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{:.4} {:.4} {:.4} {:.4}" stroke-width="{stroke:.4}">"#,
        -margin,
        -margin,
        w + 2.0 * margin,
        h + 2.0 * margin
    );
    let _ = writeln!(
        c.out,
        r##"<defs><marker id="arrow" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="6" markerHeight="6" orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="#000"/></marker></defs>"##
    );
    let _ = writeln!(
        c.out,
        "<style>.field{{fill:none;stroke:#000}}.disk{{fill:#2ca02c;fill-opacity:0.12;stroke:#2ca02c;stroke-opacity:0.4}}\
         .disk.mobile{{fill:#1f77b4;stroke:#1f77b4}}.edge{{stroke:#555;stroke-opacity:0.6}}.hole{{fill-opacity:0.55;stroke:none}}\
         .sensor{{fill:#000}}.sensor.mobile{{fill:#1f77b4}}.target{{fill:none;stroke:#d62728}}.move{{stroke:#000}}</style>"
    );
    let _ = writeln!(
        c.out,
        r#"<rect class="field" x="0" y="0" width="{w:.4}" height="{h:.4}"/>"#
    );

    let holes: Vec<_> = report
        .map(|r| r.triangles.iter().filter(|t| t.is_hole).collect())
        .unwrap_or_default();
    if let Some(mesh) = &mesh {
        for r in &holes {
            if let Ok(cell) = mesh.cell(r.cell_id) {
                let [p, q, s] = cell.geom.vertices;
                let points = format!("{} {} {}", c.pt(p), c.pt(q), c.pt(s));
                let _ = writeln!(
                    c.out,
                    r#"<polygon class="hole case-{}" fill="{}" points="{points}"/>"#,
                    r.case,
                    case_fill(r.case)
                );
            }
        }
    }

    for n in &field.stationary {
        c.circle("disk", n.position, field.sensing_radius);
    }
    for m in &field.mobile {
        c.circle("disk mobile", m.position, m.sensing_radius);
    }

    if let Some(mesh) = &mesh {
        let mut edges: Vec<(u32, u32)> = mesh
            .triangles
            .iter()
            .flat_map(|t| {
                let [a, b, s] = t.sensors;
                [(a, b), (b, s), (s, a)]
            })
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        for (a, b) in edges {
            if let (Some(p), Some(q)) = (field.stationary_position(a), field.stationary_position(b))
            {
                c.line("edge", p, q, "");
            }
        }
    }

    for n in &field.stationary {
        c.circle("sensor", n.position, 2.0 * stroke);
    }
    for m in &field.mobile {
        c.circle("sensor mobile", m.position, 2.0 * stroke);
    }

    if let (Some(r), Some(mesh)) = (report, &mesh) {
        let (targets, planned) = markers(r, scenario, mesh)?;
        let class = if planned {
            "target"
        } else {
            "target candidate"
        };
        for t in &targets {
            c.circle(&format!("{class} {}", t.kind), t.point, 4.0 * stroke);
        }
        if let Some(record) = &r.plan {
            for a in &record.plan.assignments {
                if let Some(m) = field.mobile.iter().find(|m| m.id == a.mobile_id) {
                    c.line(
                        "move",
                        m.position,
                        a.target.point,
                        r#" marker-end="url(#arrow)""#,
                    );
                }
            }
        }
    }

    c.out.push_str("</svg>\n");
    Ok(c.out)
}
