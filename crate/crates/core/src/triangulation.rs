//! Sensor field model and the Delaunay triangle mesh over stationary sensors.
//!
//! The mesh is built incrementally (Bowyer-Watson) with a single ghost vertex
//! closing every convex-hull edge, so no bounding super-triangle is needed and
//! the hull comes out exact. Orientation and in-circle tests use adaptive
//! exact predicates. Sites are inserted in ascending id order, which fixes the
//! output for cocircular inputs.

use std::collections::{BTreeMap, HashMap};

use robust::Coord;

use crate::error::{Error, Result};
use crate::geom::{triangle_from_vertices, Point, TriangleGeom};

pub type SensorId = u32;
pub type CellId = usize;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StationaryNode {
    pub id: SensorId,
    pub position: Point,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobileNode {
    pub id: SensorId,
    pub position: Point,
    pub sensing_radius: f64,
}

/// Rectangular deployment region `[0, width] x [0, height]` with its sensors.
#[derive(Debug, Clone, PartialEq)]
pub struct SensorField {
    pub width: f64,
    pub height: f64,
    pub sensing_radius: f64,
    pub stationary: Vec<StationaryNode>,
    pub mobile: Vec<MobileNode>,
}

impl SensorField {
    /// Builds a field and checks its invariants.
    pub fn new(
        width: f64,
        height: f64,
        sensing_radius: f64,
        stationary: Vec<StationaryNode>,
        mobile: Vec<MobileNode>,
    ) -> Result<Self> {
        let field = SensorField {
            width,
            height,
            sensing_radius,
            stationary,
            mobile,
        };
        field.validate()?;
        Ok(field)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.width > 0.0 && self.height > 0.0)
            || !(self.width.is_finite() && self.height.is_finite())
        {
            return Err(Error::InvalidInput(format!(
                "field dimensions must be positive, got {} x {}",
                self.width, self.height
            )));
        }
        if !(self.sensing_radius > 0.0 && self.sensing_radius.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "sensing radius must be positive, got {}",
                self.sensing_radius
            )));
        }
        let mut seen = HashMap::new();
        let positions = self
            .stationary
            .iter()
            .map(|n| (n.id, n.position))
            .chain(self.mobile.iter().map(|n| (n.id, n.position)));
        for (id, p) in positions {
            if seen.insert(id, ()).is_some() {
                return Err(Error::InvalidInput(format!("sensor id {id} is not unique")));
            }
            if !p.is_finite() || p.x < 0.0 || p.y < 0.0 || p.x > self.width || p.y > self.height {
                return Err(Error::InvalidInput(format!(
                    "sensor {id} at {p} lies outside the {} x {} field",
                    self.width, self.height
                )));
            }
        }
        for m in &self.mobile {
            if !(m.sensing_radius > 0.0 && m.sensing_radius.is_finite()) {
                return Err(Error::InvalidInput(format!(
                    "mobile sensor {} has non-positive sensing radius {}",
                    m.id, m.sensing_radius
                )));
            }
        }
        Ok(())
    }

    pub fn area(&self) -> f64 {
        self.width * self.height
    }

    pub fn stationary_position(&self, id: SensorId) -> Option<Point> {
        self.stationary
            .iter()
            .find(|n| n.id == id)
            .map(|n| n.position)
    }
}

/// One triangle of the mesh. `sensors[i]` sits at `geom.vertices[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct TriangleCell {
    pub id: CellId,
    pub sensors: [SensorId; 3],
    pub geom: TriangleGeom,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TriMesh {
    pub triangles: Vec<TriangleCell>,
}

impl TriMesh {
    pub fn cell(&self, id: CellId) -> Result<&TriangleCell> {
        self.triangles
            .get(id)
            .filter(|c| c.id == id)
            .or_else(|| self.triangles.iter().find(|c| c.id == id))
            .ok_or_else(|| Error::NotFound(format!("triangle cell {id}")))
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    /// Cells sharing an edge with `cell_id`, in ascending id order.
    pub fn neighbors(&self, cell_id: CellId) -> Result<Vec<CellId>> {
        let cell = self.cell(cell_id)?;
        let edges = edge_keys(&cell.sensors);
        let mut out: Vec<CellId> = self
            .triangles
            .iter()
            .filter(|other| other.id != cell_id)
            .filter(|other| {
                let theirs = edge_keys(&other.sensors);
                edges.iter().any(|e| theirs.contains(e))
            })
            .map(|other| other.id)
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    pub fn total_area(&self) -> f64 {
        self.triangles.iter().map(|t| t.geom.area).sum()
    }
}

/// Free-function form of [`TriMesh::neighbors`].
pub fn neighbors(mesh: &TriMesh, cell_id: CellId) -> Result<Vec<CellId>> {
    mesh.neighbors(cell_id)
}

fn edge_keys(s: &[SensorId; 3]) -> [(SensorId, SensorId); 3] {
    let key = |a: SensorId, b: SensorId| (a.min(b), a.max(b));
    [key(s[0], s[1]), key(s[1], s[2]), key(s[2], s[0])]
}

const GHOST: usize = usize::MAX;

fn coord(p: Point) -> Coord<f64> {
    Coord { x: p.x, y: p.y }
}

fn orient(p: Point, q: Point, r: Point) -> f64 {
    robust::orient2d(coord(p), coord(q), coord(r))
}

/// Bowyer-Watson over point indices. Triangles are counter-clockwise; a
/// triangle containing `GHOST` is written `[u, v, GHOST]` for the hull edge
/// `u -> v` with the interior on its right, i.e. the ghost is the outside.
struct Builder<'a> {
    points: &'a [Point],
    triangles: Vec<[usize; 3]>,
}

/// Strict in-circumcircle test; for a ghost triangle the "circle" is the open
/// outer half-plane of its hull edge plus the open edge itself.
fn in_circumcircle(points: &[Point], tri: &[usize; 3], p: Point) -> bool {
    if tri[2] == GHOST {
        let (u, v) = (points[tri[0]], points[tri[1]]);
        let o = orient(u, v, p);
        if o != 0.0 {
            return o > 0.0;
        }
        // Collinear with the hull edge: inside only on the open segment.
        let t = (p.x - u.x) * (v.x - u.x) + (p.y - u.y) * (v.y - u.y);
        let len2 = (v.x - u.x).powi(2) + (v.y - u.y).powi(2);
        return t > 0.0 && t < len2;
    }
    let [a, b, c] = tri.map(|i| points[i]);
    robust::incircle(coord(a), coord(b), coord(c), coord(p)) > 0.0
}

impl Builder<'_> {
    fn insert(&mut self, index: usize) {
        let p = self.points[index];
        let mut bad = Vec::new();
        let mut keep = Vec::with_capacity(self.triangles.len() + 4);
        for tri in self.triangles.drain(..) {
            if in_circumcircle(self.points, &tri, p) {
                bad.push(tri);
            } else {
                keep.push(tri);
            }
        }
        self.triangles = keep;

        // Cavity boundary: directed edges of bad triangles whose reverse is not
        // also an edge of a bad triangle.
        let mut directed: BTreeMap<(usize, usize), ()> = BTreeMap::new();
        for tri in &bad {
            for k in 0..3 {
                directed.insert((tri[k], tri[(k + 1) % 3]), ());
            }
        }
        for &(u, v) in directed.keys() {
            if directed.contains_key(&(v, u)) {
                continue;
            }
            // Ghost triangles rotate so GHOST stays last.
            let tri = if u == GHOST {
                [v, index, GHOST]
            } else if v == GHOST {
                [index, u, GHOST]
            } else {
                [u, v, index]
            };
            self.triangles.push(tri);
        }
    }
}

/// Delaunay triangulation of the field's stationary sensors.
pub fn triangulate(field: &SensorField) -> Result<TriMesh> {
    let mut sites: Vec<StationaryNode> = field.stationary.clone();
    sites.sort_by_key(|s| s.id);
    if sites.len() < 3 {
        return Err(Error::InsufficientSites(format!(
            "need at least 3 stationary sensors, got {}",
            sites.len()
        )));
    }
    let mut by_position: HashMap<(u64, u64), SensorId> = HashMap::new();
    for s in &sites {
        // Normalize -0.0 so it collides with 0.0.
        let key = (
            (s.position.x + 0.0).to_bits(),
            (s.position.y + 0.0).to_bits(),
        );
        if let Some(&first) = by_position.get(&key) {
            return Err(Error::DuplicateSite {
                first,
                second: s.id,
                x: s.position.x,
                y: s.position.y,
            });
        }
        by_position.insert(key, s.id);
    }
    let points: Vec<Point> = sites.iter().map(|s| s.position).collect();

    // Seed with the first non-collinear triple in id order.
    let (i0, i1) = (0, 1);
    let i2 = (2..points.len())
        .find(|&k| orient(points[i0], points[i1], points[k]) != 0.0)
        .ok_or_else(|| Error::InsufficientSites("all stationary sensors are collinear".into()))?;
    let seed = if orient(points[i0], points[i1], points[i2]) > 0.0 {
        [i0, i1, i2]
    } else {
        [i0, i2, i1]
    };
    let mut builder = Builder {
        points: &points,
        triangles: vec![
            seed,
            [seed[1], seed[0], GHOST],
            [seed[2], seed[1], GHOST],
            [seed[0], seed[2], GHOST],
        ],
    };
    for k in 2..points.len() {
        if k != i2 {
            builder.insert(k);
        }
    }

    let mut cells: Vec<[usize; 3]> = builder
        .triangles
        .into_iter()
        .filter(|t| !t.contains(&GHOST))
        .map(|t| {
            // Rotate so the lowest index (= lowest id) leads; orientation kept.
            let lead = (0..3).min_by_key(|&k| t[k]).unwrap_or(0);
            [t[lead], t[(lead + 1) % 3], t[(lead + 2) % 3]]
        })
        .collect();
    cells.sort_unstable();

    // Nearly collinear hull runs yield valid but sub-threshold slivers; they
    // carry no area and are dropped.
    let triangles = cells
        .into_iter()
        .map(|t| {
            (
                t,
                triangle_from_vertices(points[t[0]], points[t[1]], points[t[2]]),
            )
        })
        .filter(|(_, geom)| !geom.degenerate)
        .enumerate()
        .map(|(id, (t, geom))| TriangleCell {
            id,
            sensors: t.map(|i| sites[i].id),
            geom,
        })
        .collect();
    Ok(TriMesh { triangles })
}
