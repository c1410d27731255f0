use crate::cover::{Cover, CoverNode, CursorShape, MovementFreedom, NodeShape};
use crate::geometry::{bounds_union, Point, Rect, Size};
use crate::layout::{Geometry, LayoutRecord};
use crate::mover::{Element, NodeDrag};
use crate::render::DrawCommand;

use super::{child, SceneElement};

/// Any number of rectangles that always move together. Not resizable.
///
/// Stored as one origin plus fixed offsets, so the relative placement cannot
/// drift.
#[derive(Debug, Clone, PartialEq)]
pub struct LinkedRectangles {
    origin: Point<f64>,
    parts: Vec<(Point<f64>, Size<f64>)>,
}

impl LinkedRectangles {
    /// # Panics
    /// When `rects` is empty or a rectangle has no area.
    pub fn new(rects: &[Rect<f64>]) -> Self {
        assert!(!rects.is_empty(), "at least one rectangle");
        assert!(rects.iter().all(|r| r.w > 0.0 && r.h > 0.0), "rectangles need an area");
        let origin = rects[0].top_left();
        let parts = rects.iter().map(|r| (r.top_left() - origin, r.size())).collect();
        Self { origin, parts }
    }

    pub fn rects(&self) -> Vec<Rect<f64>> {
        self.parts
            .iter()
            .map(|(offset, size)| {
                let at = self.origin + *offset;
                Rect::new(at.x, at.y, size.w, size.h)
            })
            .collect()
    }
}

impl Element<f64> for LinkedRectangles {
    fn define_cover(&self) -> Cover<f64> {
        Cover::new(
            self.rects()
                .into_iter()
                .map(|r| {
                    CoverNode::new(
                        NodeShape::rect(r).expect("rectangles have an area"),
                        MovementFreedom::None,
                        CursorShape::MoveAll,
                    )
                })
                .collect(),
        )
    }

    fn move_by(&mut self, dx: f64, dy: f64) {
        self.origin += Point::new(dx, dy);
    }

    /// Every node moves the whole set.
    fn move_node(&mut self, drag: &NodeDrag<f64>) -> bool {
        if drag.rotation.is_some() || (drag.dx == 0.0 && drag.dy == 0.0) {
            return false;
        }
        self.move_by(drag.dx, drag.dy);
        true
    }

    fn bounds(&self) -> Rect<f64> {
        bounds_union(&self.rects()).expect("at least one rectangle")
    }
}

impl SceneElement for LinkedRectangles {
    fn kind(&self) -> &'static str {
        "linked"
    }

    fn geometry(&self) -> Geometry {
        Geometry::of_rect(&self.bounds())
    }

    fn child_records(&self) -> Vec<LayoutRecord> {
        self.rects()
            .iter()
            .enumerate()
            .map(|(i, r)| LayoutRecord::leaf(&format!("r{i}"), "rect", Geometry::of_rect(r)))
            .collect()
    }

    /// Only the position of the first rectangle is taken; offsets are fixed.
    fn restore(&mut self, geometry: &Geometry, children: &[LayoutRecord], warnings: &mut Vec<String>) {
        match child(children, "r0") {
            Some(first) => self.origin = Point::new(first.geometry.x, first.geometry.y),
            None => {
                let b = self.bounds();
                self.move_by(geometry.x - b.x, geometry.y - b.y);
                warnings.push("linked rectangles: no `r0` record, placed by bounds".into());
            }
        }
    }

    fn audit(&self) -> Result<(), String> {
        if self.origin.is_finite() {
            Ok(())
        } else {
            Err("linked rectangles origin is not finite".into())
        }
    }

    fn render(&self, out: &mut Vec<DrawCommand>) {
        for r in self.rects() {
            out.push(DrawCommand::filled(r, "linked"));
        }
    }
}
