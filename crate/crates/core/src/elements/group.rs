use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::cover::{Cover, CoverNode, CursorShape, MovementFreedom, NodeShape};
use crate::frame::{make_border_cover, resize_roles, EdgeDrag, SizeLimits};
use crate::geometry::{Point, Rect};
use crate::layout::{Geometry, LayoutRecord};
use crate::mover::{Element, NodeDrag};
use crate::render::DrawCommand;

use super::{FramedControl, SceneElement};

/// Half-width of the resize band straddling the group outline.
const BORDER_HALF_WIDTH: f64 = 3.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GroupError {
    #[error("layout rule produced {got} rectangles for {expected} children")]
    ChildCount { expected: usize, got: usize },
    #[error("child `{tag}` leaves the frame at frame size {w}x{h}")]
    ChildOutside { tag: String, w: f64, h: f64 },
    #[error("child `{tag}` gets size {w}x{h}, outside its own limits")]
    ChildSize { tag: String, w: f64, h: f64 },
}

/// Maps a group frame to the rectangles of its children.
pub trait LayoutRule: Send + Sync {
    fn arrange(&self, frame: Rect<f64>, count: usize) -> Vec<Rect<f64>>;
}

impl<F> LayoutRule for F
where
    F: Fn(Rect<f64>, usize) -> Vec<Rect<f64>> + Send + Sync,
{
    fn arrange(&self, frame: Rect<f64>, count: usize) -> Vec<Rect<f64>> {
        self(frame, count)
    }
}

/// Children stacked top to bottom under a title strip, full inner width.
///
/// Rows with a fixed height keep it; the remaining height is split evenly
/// between the flexible rows.
#[derive(Debug, Clone, PartialEq)]
pub struct StackLayout {
    pub padding: f64,
    pub header: f64,
    pub gap: f64,
    pub heights: Vec<Option<f64>>,
}

impl LayoutRule for StackLayout {
    fn arrange(&self, frame: Rect<f64>, count: usize) -> Vec<Rect<f64>> {
        let rows = |i: usize| self.heights.get(i).copied().flatten();
        let fixed: f64 = (0..count).filter_map(rows).sum();
        let flexible = (0..count).filter(|&i| rows(i).is_none()).count();
        let inner_h = frame.h - self.header - 2.0 * self.padding - self.gap * count.saturating_sub(1) as f64;
        let share = if flexible > 0 { (inner_h - fixed) / flexible as f64 } else { 0.0 };
        let mut y = frame.y + self.header + self.padding;
        (0..count)
            .map(|i| {
                let h = rows(i).unwrap_or(share);
                let r = Rect::new(frame.x + self.padding, y, frame.w - 2.0 * self.padding, h);
                y += h + self.gap;
                r
            })
            .collect()
    }
}

/// A titled frame whose children are placed by a layout rule.
///
/// Moved by any free inner point, resized by its outline within `range`.
/// Child interiors stay reserved for the children.
#[derive(Clone)]
pub struct Group {
    frame: Rect<f64>,
    title: String,
    range: SizeLimits<f64>,
    children: Vec<(String, FramedControl)>,
    rule: Arc<dyn LayoutRule>,
    drag: EdgeDrag<f64>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("frame", &self.frame)
            .field("title", &self.title)
            .field("range", &self.range)
            .field("children", &self.children)
            .finish_non_exhaustive()
    }
}

impl Group {
    /// Validates the rule at the minimum, maximum and initial frame sizes.
    pub fn new(
        frame: Rect<f64>,
        title: impl Into<String>,
        range: SizeLimits<f64>,
        children: Vec<(String, FramedControl)>,
        rule: impl LayoutRule + 'static,
    ) -> Result<Self, GroupError> {
        let size = range.clamp(frame.size());
        let mut group = Self {
            frame: Rect::new(frame.x, frame.y, size.w, size.h),
            title: title.into(),
            range,
            children,
            rule: Arc::new(rule),
            drag: EdgeDrag::new(),
        };
        for probe in [range.min, range.max, size] {
            group.check(Rect::new(frame.x, frame.y, probe.w, probe.h))?;
        }
        group.relayout();
        Ok(group)
    }

    fn check(&self, frame: Rect<f64>) -> Result<(), GroupError> {
        let rects = self.rule.arrange(frame, self.children.len());
        if rects.len() != self.children.len() {
            return Err(GroupError::ChildCount { expected: self.children.len(), got: rects.len() });
        }
        for ((tag, control), r) in self.children.iter().zip(&rects) {
            if !frame.contains_rect(r) {
                return Err(GroupError::ChildOutside { tag: tag.clone(), w: frame.w, h: frame.h });
            }
            if !control.limits().contains(r.size()) {
                return Err(GroupError::ChildSize { tag: tag.clone(), w: r.w, h: r.h });
            }
        }
        Ok(())
    }

    fn relayout(&mut self) {
        let rects = self.rule.arrange(self.frame, self.children.len());
        for ((_, control), r) in self.children.iter_mut().zip(rects) {
            control.set_rect(r);
        }
    }

    pub fn frame(&self) -> Rect<f64> {
        self.frame
    }

    pub fn title(&self) -> &str {
        &self.title
    }

    pub fn range(&self) -> &SizeLimits<f64> {
        &self.range
    }

    pub fn children(&self) -> impl Iterator<Item = (&str, &FramedControl)> {
        self.children.iter().map(|(t, c)| (t.as_str(), c))
    }

    fn resize_start(&self) -> usize {
        self.children.len()
    }
}

impl Element<f64> for Group {
    fn define_cover(&self) -> Cover<f64> {
        let mut cover = Cover::empty();
        for (_, control) in &self.children {
            cover.push(CoverNode::passive(
                NodeShape::rect(control.rect()).expect("child has positive size"),
            ));
        }
        cover.append(
            make_border_cover(self.frame, BORDER_HALF_WIDTH, self.range.policy())
                .expect("range keeps the frame non-degenerate"),
        );
        cover.push(CoverNode::new(
            NodeShape::rect(self.frame).expect("range keeps the frame non-degenerate"),
            MovementFreedom::None,
            CursorShape::MoveAll,
        ));
        cover
    }

    /// Children are re-derived rather than translated, so they never drift
    /// from the layout rule.
    fn move_by(&mut self, dx: f64, dy: f64) {
        self.frame = self.frame.translated(dx, dy);
        self.relayout();
    }

    fn move_node(&mut self, drag: &NodeDrag<f64>) -> bool {
        if drag.rotation.is_some() || drag.node < self.resize_start() {
            return false;
        }
        let Some(&role) = resize_roles(self.range.policy()).get(drag.node - self.resize_start()) else {
            return false;
        };
        let changed = self.drag.apply(&mut self.frame, role, drag.dx, drag.dy, &self.range);
        if changed {
            self.relayout();
        }
        changed
    }

    fn bounds(&self) -> Rect<f64> {
        self.frame
    }

    fn caught(&mut self, _node: usize) {
        self.drag.reset();
    }

    fn released(&mut self) {
        self.drag.reset();
    }
}

impl SceneElement for Group {
    fn kind(&self) -> &'static str {
        "group"
    }

    fn geometry(&self) -> Geometry {
        Geometry::of_rect(&self.frame)
    }

    fn child_records(&self) -> Vec<LayoutRecord> {
        self.children
            .iter()
            .map(|(tag, c)| LayoutRecord::leaf(tag, "framed", Geometry::of_rect(&c.rect())))
            .collect()
    }

    /// Children are derived from the frame; their records are informational.
    fn restore(&mut self, geometry: &Geometry, _children: &[LayoutRecord], warnings: &mut Vec<String>) {
        let size = self.range.clamp(geometry.rect().size());
        if size != geometry.rect().size() {
            warnings.push(format!(
                "group `{}`: size {}x{} clamped to {}x{}",
                self.title, geometry.w, geometry.h, size.w, size.h
            ));
        }
        self.frame = Rect::new(geometry.x, geometry.y, size.w, size.h);
        self.relayout();
    }

    fn audit(&self) -> Result<(), String> {
        if !self.range.contains(self.frame.size()) {
            return Err(format!("group frame {:?} outside its range", self.frame));
        }
        let expected = self.rule.arrange(self.frame, self.children.len());
        for ((tag, control), r) in self.children.iter().zip(expected) {
            if control.rect() != r {
                return Err(format!("group child `{tag}` not at its layout position"));
            }
            if !self.frame.contains_rect(&control.rect()) {
                return Err(format!("group child `{tag}` outside the frame"));
            }
        }
        Ok(())
    }

    fn render(&self, out: &mut Vec<DrawCommand>) {
        out.push(DrawCommand::outline(self.frame.corners().to_vec(), "group-frame"));
        out.push(DrawCommand::text(
            &self.title,
            Point::new(self.frame.x + 8.0, self.frame.y + 8.0),
            0.0,
            "group-title",
        ));
        for (_, control) in &self.children {
            control.render(out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Size;
    use crate::mover::{Mover, PointerButton};

    fn p(x: f64, y: f64) -> Point<f64> {
        Point::new(x, y)
    }

    fn list() -> FramedControl {
        let limits = SizeLimits::new(Size::new(20.0, 20.0), Size::new(1000.0, 1000.0)).unwrap();
        FramedControl::new(Rect::new(0.0, 0.0, 50.0, 50.0), limits, "list")
    }

    fn group() -> Group {
        let range = SizeLimits::new(Size::new(100.0, 100.0), Size::new(300.0, 400.0)).unwrap();
        let rule = StackLayout { padding: 10.0, header: 20.0, gap: 5.0, heights: vec![None, Some(24.0)] };
        Group::new(
            Rect::new(0.0, 0.0, 200.0, 200.0),
            "Items",
            range,
            vec![("list".into(), list()), ("button".into(), list())],
            rule,
        )
        .unwrap()
    }

    #[test]
    fn stack_layout_positions() {
        let g = group();
        let rects: Vec<_> = g.children().map(|(_, c)| c.rect()).collect();
        // inner height 200 - 20 - 20 - 5 = 155, flexible row gets 131
        assert_eq!(rects[0], Rect::new(10.0, 30.0, 180.0, 131.0));
        assert_eq!(rects[1], Rect::new(10.0, 166.0, 180.0, 24.0));
    }

    #[test]
    fn moving_the_frame_moves_children() {
        let mut m: Mover<f64> = Mover::new();
        let id = m.register(Box::new(group()));
        assert!(m.catch(p(100.0, 15.0), PointerButton::Left), "title strip is free space");
        m.move_to(p(130.0, 35.0));
        m.release();
        let g = m.get(id).unwrap();
        assert_eq!(g.bounds(), Rect::new(30.0, 20.0, 200.0, 200.0));
        let expected = group();
        let _ = expected;
    }

    #[test]
    fn child_interior_blocks_catch() {
        let mut m: Mover<f64> = Mover::new();
        m.register(Box::new(group()));
        assert!(!m.catch(p(100.0, 100.0), PointerButton::Left));
    }

    #[test]
    fn resize_clamps_at_min_and_relayouts() {
        let mut g = group();
        let node = g.resize_start() + 5; // Side(Right) after the 4 corners
        assert_eq!(resize_roles(g.range.policy())[5], crate::frame::FrameRole::Side(crate::frame::Side::Right));
        g.caught(node);
        let changed = g.move_node(&NodeDrag {
            node,
            dx: -500.0,
            dy: 0.0,
            pointer: p(-300.0, 100.0),
            button: PointerButton::Left,
            rotation: None,
        });
        assert!(changed);
        assert_eq!(g.frame(), Rect::new(0.0, 0.0, 100.0, 200.0));
        let at_min = StackLayout { padding: 10.0, header: 20.0, gap: 5.0, heights: vec![None, Some(24.0)] }
            .arrange(g.frame(), 2);
        let rects: Vec<_> = g.children().map(|(_, c)| c.rect()).collect();
        assert_eq!(rects, at_min);
        assert!(g.audit().is_ok());
    }

    #[test]
    fn rule_validation() {
        let range = SizeLimits::new(Size::new(100.0, 100.0), Size::new(300.0, 400.0)).unwrap();
        let outside = |frame: Rect<f64>, n: usize| vec![Rect::new(frame.x, frame.y, 150.0, 30.0); n];
        let err = Group::new(Rect::new(0.0, 0.0, 200.0, 200.0), "g", range, vec![("a".into(), list())], outside)
            .unwrap_err();
        assert!(matches!(err, GroupError::ChildOutside { .. }), "{err:?}");
        let none = |_: Rect<f64>, _: usize| Vec::new();
        let err = Group::new(Rect::new(0.0, 0.0, 200.0, 200.0), "g", range, vec![("a".into(), list())], none)
            .unwrap_err();
        assert_eq!(err, GroupError::ChildCount { expected: 1, got: 0 });
    }
}
