use crate::cover::Cover;
use crate::geometry::{bounds_union, Point, Rect};
use crate::layout::{Geometry, LayoutRecord};
use crate::mover::{Element, NodeDrag};
use crate::render::DrawCommand;

use super::{child, Comment, FramedControl, SceneElement};

/// A control paired with a painted comment.
///
/// The comment keeps its fractional anchor when the pair moves or the control
/// is resized; it can also be dragged and rotated on its own.
#[derive(Debug, Clone, PartialEq)]
pub struct CommentedControl {
    control: FramedControl,
    comment: Comment,
}

impl CommentedControl {
    pub fn new(control: FramedControl, comment: Comment) -> Self {
        Self { control, comment }
    }

    /// Comment placed to the left of the control, vertically centred.
    pub fn labelled(control: FramedControl, text: &str) -> Self {
        let rect = control.rect();
        let comment = Comment::new(text, Point::new(0.0, 0.5));
        let half = comment.size().w / 2.0 + 8.0;
        let anchor = Point::new(-half / rect.w, 0.5);
        Self { control, comment: Comment { anchor, ..comment } }
    }

    pub fn control(&self) -> &FramedControl {
        &self.control
    }

    pub fn comment(&self) -> &Comment {
        &self.comment
    }

    pub fn text_center(&self) -> Point<f64> {
        self.comment.center(&self.control.rect())
    }

    /// Index of the comment node in the cover.
    fn text_node(&self) -> usize {
        self.control.define_cover().len()
    }
}

impl Element<f64> for CommentedControl {
    fn define_cover(&self) -> Cover<f64> {
        let mut cover = self.control.define_cover();
        cover.push(self.comment.node(&self.control.rect()));
        cover
    }

    fn move_by(&mut self, dx: f64, dy: f64) {
        self.control.move_by(dx, dy);
    }

    fn move_node(&mut self, drag: &NodeDrag<f64>) -> bool {
        if drag.node == self.text_node() {
            match drag.rotation {
                Some(r) => self.comment.rotate(r.delta),
                None => self.comment.shift(&self.control.rect(), drag.dx, drag.dy),
            }
        } else {
            self.control.move_node(drag)
        }
    }

    fn bounds(&self) -> Rect<f64> {
        let rect = self.control.rect();
        bounds_union(&[rect, self.comment.bounds(&rect)]).expect("two rects")
    }

    fn rotatable(&self) -> bool {
        true
    }

    /// Only the comment rotates, about its own centre.
    fn rotation_pivot(&self, node: usize) -> Option<Point<f64>> {
        (node == self.text_node()).then(|| self.text_center())
    }

    fn caught(&mut self, node: usize) {
        self.control.caught(node);
    }

    fn released(&mut self) {
        self.control.released();
    }
}

impl SceneElement for CommentedControl {
    fn kind(&self) -> &'static str {
        "commented"
    }

    fn geometry(&self) -> Geometry {
        Geometry::of_rect(&self.control.rect())
    }

    fn child_records(&self) -> Vec<LayoutRecord> {
        vec![self.comment.record("text")]
    }

    fn restore(&mut self, geometry: &Geometry, children: &[LayoutRecord], warnings: &mut Vec<String>) {
        self.control.restore_rect(geometry, "commented control", warnings);
        match child(children, "text") {
            Some(text) => self.comment.restore(&text.geometry),
            None => warnings.push("commented control: no `text` record, comment left in place".into()),
        }
    }

    fn audit(&self) -> Result<(), String> {
        self.control.audit()?;
        let a = self.comment.anchor;
        if a.is_finite() && self.comment.angle.radians.is_finite() {
            Ok(())
        } else {
            Err("comment anchor is not finite".into())
        }
    }

    fn render(&self, out: &mut Vec<DrawCommand>) {
        self.control.render(out);
        self.comment.render(&self.control.rect(), out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::SizeLimits;
    use crate::geometry::Size;
    use crate::mover::{Mover, PointerButton};

    fn p(x: f64, y: f64) -> Point<f64> {
        Point::new(x, y)
    }

    fn pair() -> CommentedControl {
        let limits = SizeLimits::new(Size::new(40.0, 24.0), Size::new(400.0, 24.0)).unwrap();
        let control = FramedControl::new(Rect::new(100.0, 100.0, 80.0, 24.0), limits, "name");
        CommentedControl::new(control, Comment::new("Name", p(1.1, 0.5)))
    }

    #[test]
    fn moving_the_pair_keeps_anchor() {
        let mut m: Mover<f64> = Mover::new();
        let id = m.register(Box::new(pair()));
        let before = pair().text_center();
        // left strip of the control frame (below the WE node)
        assert!(m.catch(p(97.0, 102.0), PointerButton::Left));
        m.move_to(p(107.0, 102.0));
        m.release();
        let moved = m.get(id).unwrap().bounds();
        assert_eq!(moved, pair().bounds().translated(10.0, 0.0));
        let _ = before;
    }

    #[test]
    fn moving_the_text_only_changes_anchor() {
        let mut c = pair();
        let start = c.text_center();
        let node = c.text_node();
        assert!(c.move_node(&NodeDrag {
            node,
            dx: 0.0,
            dy: -12.0,
            pointer: start + p(0.0, -12.0),
            button: PointerButton::Left,
            rotation: None,
        }));
        assert_eq!(c.control().rect(), Rect::new(100.0, 100.0, 80.0, 24.0));
        assert_eq!(c.text_center(), start + p(0.0, -12.0));
        assert_eq!(c.comment().anchor, p(1.1, 0.0));
    }

    #[test]
    fn resize_keeps_fractional_anchor() {
        let mut c = pair();
        // right resize node drag doubling the width
        let mut m: Mover<f64> = Mover::new();
        let node_x = 183.0;
        let id = {
            let id = m.register(Box::new(c.clone()));
            assert!(m.catch(p(node_x, 112.0), PointerButton::Left));
            m.move_to(p(node_x + 80.0, 112.0));
            m.release();
            id
        };
        let b = m.get(id).unwrap().bounds();
        // anchor arithmetic: centre x = 100 + 1.1 * 160
        let comment_w = c.comment().size().w;
        assert!((b.right() - (100.0 + 1.1 * 160.0 + comment_w / 2.0)).abs() < 1e-9);
        c.control.set_rect(Rect::new(100.0, 100.0, 160.0, 24.0));
        assert_eq!(c.text_center(), p(100.0 + 1.1 * 160.0, 112.0));
    }

    #[test]
    fn right_drag_rotates_text_only() {
        let mut m: Mover<f64> = Mover::new();
        let c = pair();
        let center = c.text_center();
        let id = m.register(Box::new(c));
        assert!(!m.catch(p(97.0, 102.0), PointerButton::Right), "frame does not rotate");
        assert!(m.catch(center + p(10.0, 0.0), PointerButton::Right));
        assert!(m.move_to(center + p(0.0, 10.0)));
        m.release();
        assert!(m.get(id).is_some());
    }
}
