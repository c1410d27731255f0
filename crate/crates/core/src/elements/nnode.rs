use crate::cover::{make_n_node_border_cover, Cover};
use crate::geometry::{Point, Rect};
use crate::layout::{Geometry, LayoutRecord};
use crate::mover::{Element, NodeDrag};
use crate::render::DrawCommand;

use super::SceneElement;

pub const DISC_NODES: usize = 24;
pub const RING_NODES: usize = 32;
pub const NODE_RADIUS: f64 = 4.0;
pub const DISC_MIN_RADIUS: f64 = 10.0;
pub const RING_MIN_INNER: f64 = 5.0;
pub const RING_MIN_WIDTH: f64 = 10.0;
/// No radius grows beyond this.
pub const MAX_RADIUS: f64 = 1000.0;

/// Radial change of a border drag: how much farther from `center` the pointer is now.
fn radial(center: Point<f64>, drag: &NodeDrag<f64>) -> f64 {
    drag.pointer.distance(center) - drag.previous_pointer().distance(center)
}

/// Clamps `value + slack + d` into `[lo, hi]`, keeping what was cut off in
/// `slack` so a reversed drag lands where it started.
fn clamp_with_slack(value: &mut f64, slack: &mut f64, d: f64, lo: f64, hi: f64) -> bool {
    let wanted = *value + *slack + d;
    let next = wanted.max(lo).min(hi);
    *slack = wanted - next;
    let changed = next != *value;
    *value = next;
    changed
}

/// A circle resized by any of its border nodes and moved by its inside.
#[derive(Debug, Clone, PartialEq)]
pub struct NNodeDisc {
    center: Point<f64>,
    radius: f64,
    slack: f64,
}

impl NNodeDisc {
    /// The radius is clamped into `[DISC_MIN_RADIUS, MAX_RADIUS]`.
    pub fn new(center: Point<f64>, radius: f64) -> Self {
        Self { center, radius: radius.clamp(DISC_MIN_RADIUS, MAX_RADIUS), slack: 0.0 }
    }

    pub fn center(&self) -> Point<f64> {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }
}

impl Element<f64> for NNodeDisc {
    fn define_cover(&self) -> Cover<f64> {
        make_n_node_border_cover(self.center, &[self.radius], NODE_RADIUS, DISC_NODES)
            .expect("radius is kept positive")
    }

    fn move_by(&mut self, dx: f64, dy: f64) {
        self.center += Point::new(dx, dy);
    }

    fn move_node(&mut self, drag: &NodeDrag<f64>) -> bool {
        if drag.rotation.is_some() || drag.node >= DISC_NODES {
            return false;
        }
        let d = radial(self.center, drag);
        clamp_with_slack(&mut self.radius, &mut self.slack, d, DISC_MIN_RADIUS, MAX_RADIUS)
    }

    fn bounds(&self) -> Rect<f64> {
        let r = self.radius;
        Rect::new(self.center.x - r, self.center.y - r, 2.0 * r, 2.0 * r)
    }

    fn caught(&mut self, _node: usize) {
        self.slack = 0.0;
    }

    fn released(&mut self) {
        self.slack = 0.0;
    }
}

impl SceneElement for NNodeDisc {
    fn kind(&self) -> &'static str {
        "disc"
    }

    /// `x, y` is the center; `w = h` is the diameter.
    fn geometry(&self) -> Geometry {
        let d = 2.0 * self.radius;
        Geometry { x: self.center.x, y: self.center.y, w: d, h: d, angle: 0.0 }
    }

    fn restore(&mut self, g: &Geometry, _children: &[LayoutRecord], warnings: &mut Vec<String>) {
        self.center = Point::new(g.x, g.y);
        let r = g.w / 2.0;
        self.radius = r.clamp(DISC_MIN_RADIUS, MAX_RADIUS);
        if self.radius != r {
            warnings.push(format!("disc: radius {r} clamped to {}", self.radius));
        }
    }

    fn audit(&self) -> Result<(), String> {
        if (DISC_MIN_RADIUS..=MAX_RADIUS).contains(&self.radius) && self.center.is_finite() {
            Ok(())
        } else {
            Err(format!("disc radius {} out of range", self.radius))
        }
    }

    fn render(&self, out: &mut Vec<DrawCommand>) {
        out.push(DrawCommand::circle(self.center, self.radius, "disc"));
    }
}

/// An annulus whose inner and outer borders are resized separately.
#[derive(Debug, Clone, PartialEq)]
pub struct NNodeRing {
    center: Point<f64>,
    inner: f64,
    outer: f64,
    slack: f64,
}

impl NNodeRing {
    /// Returns `None` unless `inner ≥ RING_MIN_INNER`,
    /// `outer − inner ≥ RING_MIN_WIDTH` and `outer ≤ MAX_RADIUS`.
    pub fn new(center: Point<f64>, inner: f64, outer: f64) -> Option<Self> {
        Self::valid(inner, outer).then_some(Self { center, inner, outer, slack: 0.0 })
    }

    fn valid(inner: f64, outer: f64) -> bool {
        inner >= RING_MIN_INNER && outer - inner >= RING_MIN_WIDTH - 1e-9 && outer <= MAX_RADIUS
    }

    pub fn center(&self) -> Point<f64> {
        self.center
    }

    pub fn radii(&self) -> (f64, f64) {
        (self.inner, self.outer)
    }
}

impl Element<f64> for NNodeRing {
    fn define_cover(&self) -> Cover<f64> {
        make_n_node_border_cover(self.center, &[self.inner, self.outer], NODE_RADIUS, RING_NODES)
            .expect("radii are kept increasing")
    }

    fn move_by(&mut self, dx: f64, dy: f64) {
        self.center += Point::new(dx, dy);
    }

    fn move_node(&mut self, drag: &NodeDrag<f64>) -> bool {
        if drag.rotation.is_some() {
            return false;
        }
        let d = radial(self.center, drag);
        match drag.node {
            i if i < RING_NODES => {
                let hi = self.outer - RING_MIN_WIDTH;
                clamp_with_slack(&mut self.inner, &mut self.slack, d, RING_MIN_INNER, hi)
            }
            i if i < 2 * RING_NODES => {
                let lo = self.inner + RING_MIN_WIDTH;
                clamp_with_slack(&mut self.outer, &mut self.slack, d, lo, MAX_RADIUS)
            }
            _ => false,
        }
    }

    fn bounds(&self) -> Rect<f64> {
        let r = self.outer;
        Rect::new(self.center.x - r, self.center.y - r, 2.0 * r, 2.0 * r)
    }

    fn caught(&mut self, _node: usize) {
        self.slack = 0.0;
    }

    fn released(&mut self) {
        self.slack = 0.0;
    }
}

impl SceneElement for NNodeRing {
    fn kind(&self) -> &'static str {
        "ring"
    }

    /// `x, y` is the center; `w` the outer and `h` the inner diameter.
    fn geometry(&self) -> Geometry {
        Geometry { x: self.center.x, y: self.center.y, w: 2.0 * self.outer, h: 2.0 * self.inner, angle: 0.0 }
    }

    fn restore(&mut self, g: &Geometry, _children: &[LayoutRecord], warnings: &mut Vec<String>) {
        self.center = Point::new(g.x, g.y);
        let (inner, outer) = (g.h / 2.0, g.w / 2.0);
        if Self::valid(inner, outer) {
            self.inner = inner;
            self.outer = outer;
        } else {
            warnings.push(format!("ring: radii {inner}/{outer} invalid, kept {}/{}", self.inner, self.outer));
        }
    }

    fn audit(&self) -> Result<(), String> {
        if Self::valid(self.inner, self.outer) && self.center.is_finite() {
            Ok(())
        } else {
            Err(format!("ring radii {}/{} violate the limits", self.inner, self.outer))
        }
    }

    fn render(&self, out: &mut Vec<DrawCommand>) {
        out.push(DrawCommand::circle(self.center, self.outer, "ring"));
        out.push(DrawCommand::circle(self.center, self.inner, "ring"));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mover::{Mover, PointerButton};

    fn p(x: f64, y: f64) -> Point<f64> {
        Point::new(x, y)
    }

    #[test]
    fn disc_grows_and_clamps_reversibly() {
        let mut m: Mover<f64> = Mover::new();
        let id = m.register(Box::new(NNodeDisc::new(p(100.0, 100.0), 50.0)));
        assert_eq!(m.hit(p(150.0, 100.0)).map(|h| h.1), Some(0));
        assert_eq!(m.hit(p(100.0, 100.0)).map(|h| h.1), Some(DISC_NODES));
        assert!(m.catch(p(150.0, 100.0), PointerButton::Left));
        assert!(m.move_to(p(170.0, 100.0)));
        assert_eq!(m.get(id).unwrap().bounds().w, 140.0);
        // past the minimum and back
        m.move_to(p(100.0, 100.0));
        assert_eq!(m.get(id).unwrap().bounds().w, 2.0 * DISC_MIN_RADIUS);
        m.move_to(p(150.0, 100.0));
        m.release();
        assert_eq!(m.get(id).unwrap().bounds().w, 100.0);
    }

    #[test]
    fn disc_body_moves() {
        let mut m: Mover<f64> = Mover::new();
        let id = m.register(Box::new(NNodeDisc::new(p(100.0, 100.0), 50.0)));
        assert!(m.catch(p(110.0, 110.0), PointerButton::Left));
        assert!(m.move_to(p(130.0, 100.0)));
        assert_eq!(m.get(id).unwrap().bounds(), Rect::new(70.0, 40.0, 100.0, 100.0));
    }

    #[test]
    fn ring_borders_resize_separately() {
        let mut ring = NNodeRing::new(p(0.0, 0.0), 30.0, 60.0).unwrap();
        let inner_drag = NodeDrag {
            node: 0,
            dx: -32.0,
            dy: 0.0,
            pointer: p(-2.0, 0.0),
            button: PointerButton::Left,
            rotation: None,
        };
        // from distance 30 to 2, clamped by the minimum inner radius
        assert!(ring.move_node(&inner_drag));
        assert_eq!(ring.radii(), (RING_MIN_INNER, 60.0));
        let mut ring = NNodeRing::new(p(0.0, 0.0), 30.0, 60.0).unwrap();
        let outer_drag = NodeDrag {
            node: RING_NODES,
            dx: -50.0,
            dy: 0.0,
            pointer: p(10.0, 0.0),
            button: PointerButton::Left,
            rotation: None,
        };
        assert!(ring.move_node(&outer_drag));
        assert_eq!(ring.radii(), (30.0, 40.0));
        assert!(ring.audit().is_ok());
        assert!(NNodeRing::new(p(0.0, 0.0), 30.0, 35.0).is_none());
    }
}
