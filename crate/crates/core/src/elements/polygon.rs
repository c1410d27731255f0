use crate::cover::{Cover, CoverNode, CursorShape, MovementFreedom, NodeShape};
use crate::geometry::{points_bounds, rotate_point, Angle, Point, Rect};
use crate::layout::{Geometry, LayoutRecord};
use crate::mover::{Element, NodeDrag};
use crate::render::DrawCommand;

use super::SceneElement;

/// Radius of the apex and center nodes.
pub const APEX_RADIUS: f64 = 5.0;
/// Half-width of the edge (zoom) capsules.
pub const EDGE_HALF_WIDTH: f64 = 3.0;
/// Zooming never shrinks the farthest vertex closer than this to the center.
pub const MIN_CIRCUMRADIUS: f64 = 4.0;

/// A polygon reshaped by its apices and center, zoomed by its border and
/// moved or rotated by its body.
///
/// Vertices are stored relative to the center in the unrotated frame, so a
/// rotation only touches `angle` and is rigid by construction. The polygon is
/// kept star-shaped about its center: every fan triangle `(center, v[i],
/// v[i+1])` has the same winding.
#[derive(Debug, Clone)]
pub struct ChatoyantPolygon {
    center: Point<f64>,
    local: Vec<Point<f64>>,
    angle: Angle<f64>,
    /// Rejected apex travel and zoom of the current gesture, applied as soon
    /// as the accumulated change becomes valid again.
    pending_apex: Point<f64>,
    pending_zoom: f64,
}

/// Which kind of node an index refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Part {
    Apex(usize),
    Center,
    Edge(usize),
    Body,
}

/// Equal shapes; the gesture state is ignored.
impl PartialEq for ChatoyantPolygon {
    fn eq(&self, other: &Self) -> bool {
        self.center == other.center && self.local == other.local && self.angle == other.angle
    }
}

impl ChatoyantPolygon {
    /// Returns `None` unless there are at least three vertices forming a
    /// star-shaped polygon about `center`.
    pub fn new(center: Point<f64>, vertices: &[Point<f64>]) -> Option<Self> {
        let local: Vec<_> = vertices.iter().map(|&v| v - center).collect();
        (local.len() >= 3 && winding(&local).is_some() && circumradius(&local) >= MIN_CIRCUMRADIUS)
            .then_some(Self { center, local, angle: Angle::zero(), pending_apex: Point::origin(), pending_zoom: 1.0 })
    }

    /// Regular polygon with the first vertex straight to the right of `center`.
    pub fn regular(center: Point<f64>, radius: f64, sides: usize) -> Option<Self> {
        let step = std::f64::consts::TAU / sides as f64;
        let vertices: Vec<_> = (0..sides)
            .map(|k| {
                let a = step * k as f64;
                center + Point::new(a.cos(), a.sin()) * radius
            })
            .collect();
        Self::new(center, &vertices)
    }

    pub fn center(&self) -> Point<f64> {
        self.center
    }

    pub fn angle(&self) -> Angle<f64> {
        self.angle
    }

    /// Absolute vertex positions.
    pub fn vertices(&self) -> Vec<Point<f64>> {
        self.local
            .iter()
            .map(|&v| rotate_point(self.center + v, self.center, self.angle))
            .collect()
    }

    pub fn circumradius(&self) -> f64 {
        circumradius(&self.local)
    }

    fn part(&self, node: usize) -> Option<Part> {
        let n = self.local.len();
        match node {
            i if i < n => Some(Part::Apex(i)),
            i if i == n => Some(Part::Center),
            i if i <= 2 * n => Some(Part::Edge(i - n - 1)),
            i if i < 2 * n + 1 + self.body_triangles().len() => Some(Part::Body),
            _ => None,
        }
    }

    fn body_triangles(&self) -> Vec<[Point<f64>; 3]> {
        let v = self.vertices();
        let n = v.len();
        (0..n)
            .map(|i| [self.center, v[i], v[(i + 1) % n]])
            .filter(|t| (t[1] - t[0]).cross(t[2] - t[0]) != 0.0)
            .collect()
    }

    /// Scales every vertex about the center by the ratio of the pointer's
    /// successive distances from the center.
    fn zoom(&mut self, drag: &NodeDrag<f64>) -> bool {
        let before = drag.previous_pointer().distance(self.center);
        let after = drag.pointer.distance(self.center);
        if before == 0.0 || after == before {
            return false;
        }
        let factor = self.pending_zoom * after / before;
        if !factor.is_finite() || factor <= 0.0 {
            return false;
        }
        if circumradius(&self.local) * factor < MIN_CIRCUMRADIUS {
            self.pending_zoom = factor;
            return false;
        }
        self.pending_zoom = 1.0;
        for v in &mut self.local {
            *v = *v * factor;
        }
        factor != 1.0
    }

    fn move_apex(&mut self, i: usize, dx: f64, dy: f64) -> bool {
        let moved = rotate_point(Point::new(dx, dy), Point::origin(), -self.angle) + self.pending_apex;
        let mut local = self.local.clone();
        local[i] += moved;
        if winding(&local).is_none() || circumradius(&local) < MIN_CIRCUMRADIUS {
            self.pending_apex = moved;
            return false;
        }
        self.pending_apex = Point::origin();
        let changed = local[i] != self.local[i];
        self.local = local;
        changed
    }
}

/// Common sign of the fan triangles, if they all agree and none is flat.
fn winding(local: &[Point<f64>]) -> Option<f64> {
    let n = local.len();
    let mut sign = None;
    for i in 0..n {
        let c = local[i].cross(local[(i + 1) % n]);
        if c == 0.0 || !c.is_finite() {
            return None;
        }
        let s = c.signum();
        match sign {
            None => sign = Some(s),
            Some(t) if t != s => return None,
            _ => {}
        }
    }
    sign
}

fn circumradius(local: &[Point<f64>]) -> f64 {
    local.iter().map(|v| v.length()).fold(0.0, f64::max)
}

impl Element<f64> for ChatoyantPolygon {
    fn define_cover(&self) -> Cover<f64> {
        let v = self.vertices();
        let n = v.len();
        let mut cover = Cover::empty();
        for &p in &v {
            cover.push(CoverNode::new(
                NodeShape::circle(p, APEX_RADIUS).expect("positive radius"),
                MovementFreedom::Any,
                CursorShape::Hand,
            ));
        }
        cover.push(CoverNode::new(
            NodeShape::circle(self.center, APEX_RADIUS).expect("positive radius"),
            MovementFreedom::Any,
            CursorShape::MoveAll,
        ));
        for i in 0..n {
            cover.push(CoverNode::new(
                NodeShape::capsule(v[i], v[(i + 1) % n], EDGE_HALF_WIDTH).expect("positive half-width"),
                MovementFreedom::Any,
                CursorShape::SizeAll,
            ));
        }
        for t in self.body_triangles() {
            cover.push(CoverNode::new(
                NodeShape::polygon(t.to_vec()).expect("non-flat triangle"),
                MovementFreedom::None,
                CursorShape::MoveAll,
            ));
        }
        cover
    }

    fn move_by(&mut self, dx: f64, dy: f64) {
        self.center += Point::new(dx, dy);
    }

    fn move_node(&mut self, drag: &NodeDrag<f64>) -> bool {
        match (self.part(drag.node), drag.rotation) {
            (Some(Part::Body), Some(r)) => {
                if r.delta.radians == 0.0 {
                    return false;
                }
                self.angle = (self.angle + r.delta).normalized();
                true
            }
            (_, Some(_)) | (None, None) => false,
            (Some(Part::Apex(i)), None) => self.move_apex(i, drag.dx, drag.dy),
            (Some(Part::Center | Part::Body), None) => {
                if drag.dx == 0.0 && drag.dy == 0.0 {
                    return false;
                }
                self.move_by(drag.dx, drag.dy);
                true
            }
            (Some(Part::Edge(_)), None) => self.zoom(drag),
        }
    }

    fn bounds(&self) -> Rect<f64> {
        points_bounds(&self.vertices()).expect("at least three vertices")
    }

    fn rotatable(&self) -> bool {
        true
    }

    /// The body rotates about the center; other nodes do not rotate.
    fn rotation_pivot(&self, node: usize) -> Option<Point<f64>> {
        (self.part(node) == Some(Part::Body)).then_some(self.center)
    }

    fn caught(&mut self, _node: usize) {
        self.pending_apex = Point::origin();
        self.pending_zoom = 1.0;
    }

    fn released(&mut self) {
        self.caught(0);
    }
}

impl SceneElement for ChatoyantPolygon {
    fn kind(&self) -> &'static str {
        "polygon"
    }

    fn geometry(&self) -> Geometry {
        let b = self.bounds();
        Geometry { x: self.center.x, y: self.center.y, w: b.w, h: b.h, angle: self.angle.radians }
    }

    /// Vertex records hold the unrotated offsets from the center.
    fn child_records(&self) -> Vec<LayoutRecord> {
        self.local
            .iter()
            .enumerate()
            .map(|(i, v)| {
                LayoutRecord::leaf(&format!("v{i}"), "vertex", Geometry { x: v.x, y: v.y, w: 0.0, h: 0.0, angle: 0.0 })
            })
            .collect()
    }

    fn restore(&mut self, geometry: &Geometry, children: &[LayoutRecord], warnings: &mut Vec<String>) {
        self.center = Point::new(geometry.x, geometry.y);
        self.angle = Angle::from_radians(geometry.angle);
        let local: Vec<_> = (0..children.len())
            .map_while(|i| super::child(children, &format!("v{i}")))
            .map(|r| Point::new(r.geometry.x, r.geometry.y))
            .collect();
        if local.len() != children.len() || local.len() < 3 {
            warnings.push("polygon: vertex records incomplete, shape kept".into());
        } else if winding(&local).is_none() || circumradius(&local) < MIN_CIRCUMRADIUS {
            warnings.push("polygon: saved vertices are not star-shaped about the center, shape kept".into());
        } else {
            self.local = local;
        }
    }

    fn audit(&self) -> Result<(), String> {
        if self.local.len() < 3 {
            return Err("polygon has fewer than three vertices".into());
        }
        if !self.center.is_finite() || !self.angle.radians.is_finite() {
            return Err("polygon center or angle is not finite".into());
        }
        if winding(&self.local).is_none() {
            return Err("polygon winding is inconsistent".into());
        }
        if self.circumradius() < MIN_CIRCUMRADIUS {
            return Err(format!("polygon circumradius {} below {MIN_CIRCUMRADIUS}", self.circumradius()));
        }
        Ok(())
    }

    fn render(&self, out: &mut Vec<DrawCommand>) {
        out.push(DrawCommand::outline(self.vertices(), "polygon"));
        out.push(DrawCommand::circle(self.center, APEX_RADIUS, "polygon-center"));
    }

    fn rigid_points(&self) -> Vec<Point<f64>> {
        self.vertices()
    }
}
