use crate::cover::{CoverNode, CursorShape, MovementFreedom, NodeShape};
use crate::geometry::{rotate_point, Angle, Point, Rect, Size};
use crate::layout::{Geometry, LayoutRecord};
use crate::render::DrawCommand;

/// Approximate glyph box used for painted text.
const CHAR_WIDTH: f64 = 7.0;
const TEXT_HEIGHT: f64 = 16.0;
const TEXT_PADDING: f64 = 6.0;

/// Painted text attached to an owner rectangle.
///
/// The text box is centred at `owner.x + anchor.x * owner.w`,
/// `owner.y + anchor.y * owner.h`, so moving or resizing the owner keeps the
/// text in the same relative place.
#[derive(Debug, Clone, PartialEq)]
pub struct Comment {
    pub content: String,
    pub anchor: Point<f64>,
    pub angle: Angle<f64>,
}

impl Comment {
    pub fn new(content: impl Into<String>, anchor: Point<f64>) -> Self {
        Self { content: content.into(), anchor, angle: Angle::zero() }
    }

    pub fn size(&self) -> Size<f64> {
        Size::new(
            CHAR_WIDTH * self.content.chars().count() as f64 + TEXT_PADDING,
            TEXT_HEIGHT,
        )
    }

    pub fn center(&self, owner: &Rect<f64>) -> Point<f64> {
        Point::new(
            owner.x + self.anchor.x * owner.w,
            owner.y + self.anchor.y * owner.h,
        )
    }

    /// Text box corners, rotated about the centre.
    pub fn outline(&self, owner: &Rect<f64>) -> Vec<Point<f64>> {
        let c = self.center(owner);
        let s = self.size();
        Rect::new(c.x - s.w / 2.0, c.y - s.h / 2.0, s.w, s.h)
            .corners()
            .iter()
            .map(|&v| rotate_point(v, c, self.angle))
            .collect()
    }

    pub fn bounds(&self, owner: &Rect<f64>) -> Rect<f64> {
        crate::geometry::points_bounds(&self.outline(owner)).expect("four corners")
    }

    /// Moveable by any text point.
    pub fn node(&self, owner: &Rect<f64>) -> CoverNode<f64> {
        CoverNode::new(
            NodeShape::polygon(self.outline(owner)).expect("text box is a proper rectangle"),
            MovementFreedom::Any,
            CursorShape::MoveAll,
        )
    }

    /// Shifts the text by a pixel displacement relative to its owner.
    pub fn shift(&mut self, owner: &Rect<f64>, dx: f64, dy: f64) -> bool {
        if dx == 0.0 && dy == 0.0 {
            return false;
        }
        self.anchor.x += dx / owner.w;
        self.anchor.y += dy / owner.h;
        true
    }

    pub fn rotate(&mut self, delta: Angle<f64>) -> bool {
        if delta.radians == 0.0 {
            return false;
        }
        self.angle = self.angle + delta;
        true
    }

    pub fn record(&self, tag: &str) -> LayoutRecord {
        let s = self.size();
        LayoutRecord::leaf(
            tag,
            "comment",
            Geometry { x: self.anchor.x, y: self.anchor.y, w: s.w, h: s.h, angle: self.angle.radians },
        )
    }

    pub fn restore(&mut self, g: &Geometry) {
        self.anchor = Point::new(g.x, g.y);
        self.angle = Angle::from_radians(g.angle);
    }

    pub fn render(&self, owner: &Rect<f64>, out: &mut Vec<DrawCommand>) {
        out.push(DrawCommand::text(&self.content, self.center(owner), self.angle.radians, "comment"));
    }
}
