use crate::cover::{Cover, CoverNode, NodeShape};
use crate::frame::{frame_roles, make_rect_frame_cover, EdgeDrag, SizeLimits, DEFAULT_FRAME_WIDTH};
use crate::geometry::{Rect, Size};
use crate::layout::{Geometry, LayoutRecord};
use crate::mover::{Element, NodeDrag};
use crate::render::DrawCommand;

use super::SceneElement;

/// A rectangular control moved and resized through the band around it.
///
/// The interior belongs to the control itself: it is covered by a passive node
/// so pressing there never starts a movement, and it also hides whatever lies
/// below.
#[derive(Debug, Clone, PartialEq)]
pub struct FramedControl {
    rect: Rect<f64>,
    limits: SizeLimits<f64>,
    payload: String,
    frame_width: f64,
    drag: EdgeDrag<f64>,
}

impl FramedControl {
    /// The initial size is clamped into `limits`.
    pub fn new(rect: Rect<f64>, limits: SizeLimits<f64>, payload: impl Into<String>) -> Self {
        let size = limits.clamp(rect.size());
        Self {
            rect: Rect::new(rect.x, rect.y, size.w, size.h),
            limits,
            payload: payload.into(),
            frame_width: DEFAULT_FRAME_WIDTH,
            drag: EdgeDrag::new(),
        }
    }

    /// A control whose size never changes.
    pub fn fixed(rect: Rect<f64>, payload: impl Into<String>) -> Self {
        let limits = SizeLimits::fixed(rect.size()).expect("control size must be positive");
        Self::new(rect, limits, payload)
    }

    pub fn with_frame_width(mut self, frame_width: f64) -> Self {
        assert!(frame_width > 0.0, "frame width must be positive");
        self.frame_width = frame_width;
        self
    }

    pub fn rect(&self) -> Rect<f64> {
        self.rect
    }

    pub fn limits(&self) -> &SizeLimits<f64> {
        &self.limits
    }

    pub fn payload(&self) -> &str {
        &self.payload
    }

    /// Moves and resizes, clamping the size. Returns true when clamping applied.
    pub fn set_rect(&mut self, rect: Rect<f64>) -> bool {
        let size = self.limits.clamp(rect.size());
        self.rect = Rect::new(rect.x, rect.y, size.w, size.h);
        size != rect.size()
    }

    pub(crate) fn restore_rect(&mut self, g: &Geometry, what: &str, warnings: &mut Vec<String>) {
        if self.set_rect(g.rect()) {
            warnings.push(format!(
                "{what}: size {}x{} clamped to {}x{}",
                g.w, g.h, self.rect.w, self.rect.h
            ));
        }
    }

    fn size_ok(&self) -> bool {
        let Size { w, h } = self.rect.size();
        w >= self.limits.min.w && w <= self.limits.max.w && h >= self.limits.min.h && h <= self.limits.max.h
    }
}

impl Element<f64> for FramedControl {
    fn define_cover(&self) -> Cover<f64> {
        let mut cover = make_rect_frame_cover(self.rect, self.frame_width, self.limits.policy())
            .expect("limits keep the control non-degenerate");
        cover.push(CoverNode::passive(
            NodeShape::rect(self.rect).expect("limits keep the control non-degenerate"),
        ));
        cover
    }

    fn move_by(&mut self, dx: f64, dy: f64) {
        self.rect = self.rect.translated(dx, dy);
    }

    fn move_node(&mut self, drag: &NodeDrag<f64>) -> bool {
        if drag.rotation.is_some() {
            return false;
        }
        match frame_roles(self.limits.policy()).get(drag.node) {
            Some(&role) => self.drag.apply(&mut self.rect, role, drag.dx, drag.dy, &self.limits),
            None => false,
        }
    }

    fn bounds(&self) -> Rect<f64> {
        self.rect
    }

    fn caught(&mut self, _node: usize) {
        self.drag.reset();
    }

    fn released(&mut self) {
        self.drag.reset();
    }
}

impl SceneElement for FramedControl {
    fn kind(&self) -> &'static str {
        "framed"
    }

    fn geometry(&self) -> Geometry {
        Geometry::of_rect(&self.rect)
    }

    fn restore(&mut self, geometry: &Geometry, _children: &[LayoutRecord], warnings: &mut Vec<String>) {
        self.restore_rect(geometry, "control", warnings);
    }

    fn audit(&self) -> Result<(), String> {
        if self.size_ok() {
            Ok(())
        } else {
            Err(format!(
                "control size {}x{} outside {:?}",
                self.rect.w, self.rect.h, self.limits
            ))
        }
    }

    fn render(&self, out: &mut Vec<DrawCommand>) {
        out.push(DrawCommand::filled(self.rect, "control"));
        out.push(DrawCommand::text(&self.payload, self.rect.center(), 0.0, "control-label"));
    }
}
