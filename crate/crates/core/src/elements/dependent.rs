use std::fmt;

use crate::cover::{Cover, CoverNode, CursorShape, MovementFreedom, NodeShape};
use crate::geometry::{bounds_union, Point, Rect};
use crate::layout::{Geometry, LayoutRecord};
use crate::mover::{Element, NodeDrag};
use crate::render::DrawCommand;

use super::{child, drag_part, Parts, SceneElement};

/// A group defined from inside: its frame is always the union of the
/// children's bounds grown by `margin`.
///
/// Children keep their own covers and move individually; the frame area not
/// taken by a child moves the whole group.
pub struct DependentFrame {
    children: Vec<(String, Box<dyn SceneElement>)>,
    margin: f64,
    frame: Rect<f64>,
    active: Option<usize>,
}

impl fmt::Debug for DependentFrame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DependentFrame")
            .field("children", &self.children.iter().map(|(t, _)| t).collect::<Vec<_>>())
            .field("margin", &self.margin)
            .field("frame", &self.frame)
            .finish()
    }
}

impl DependentFrame {
    /// # Panics
    /// When `children` is empty or `margin` is not positive.
    pub fn new(children: Vec<(String, Box<dyn SceneElement>)>, margin: f64) -> Self {
        assert!(!children.is_empty(), "a dependent frame needs at least one child");
        assert!(margin > 0.0 && margin.is_finite(), "margin must be positive");
        let mut frame = Self { children, margin, frame: Rect::default(), active: None };
        frame.recompute();
        frame
    }

    pub fn frame(&self) -> Rect<f64> {
        self.frame
    }

    pub fn margin(&self) -> f64 {
        self.margin
    }

    pub fn children(&self) -> impl Iterator<Item = (&str, &dyn SceneElement)> {
        self.children.iter().map(|(t, c)| (t.as_str(), &**c))
    }

    /// Union of the children's bounds plus the margin.
    pub fn expected_frame(&self) -> Rect<f64> {
        let bounds: Vec<_> = self.children.iter().map(|(_, c)| c.bounds()).collect();
        bounds_union(&bounds).expect("at least one child").inflated(self.margin)
    }

    fn recompute(&mut self) {
        self.frame = self.expected_frame();
    }

    fn parts(&self) -> (Cover<f64>, Parts) {
        let mut cover = Cover::empty();
        let parts = Parts::compose(&mut cover, self.children.iter().map(|(_, c)| c.define_cover()));
        (cover, parts)
    }
}

impl Element<f64> for DependentFrame {
    fn define_cover(&self) -> Cover<f64> {
        let (mut cover, _) = self.parts();
        cover.push(CoverNode::new(
            NodeShape::rect(self.frame).expect("margin keeps the frame non-degenerate"),
            MovementFreedom::None,
            CursorShape::MoveAll,
        ));
        cover
    }

    fn move_by(&mut self, dx: f64, dy: f64) {
        for (_, c) in &mut self.children {
            c.move_by(dx, dy);
        }
        self.recompute();
    }

    fn move_node(&mut self, drag: &NodeDrag<f64>) -> bool {
        let (_, parts) = self.parts();
        let Some((part, local)) = parts.locate(drag.node) else {
            return false;
        };
        let changed = drag_part(&mut *self.children[part].1, local, drag);
        self.recompute();
        changed
    }

    fn bounds(&self) -> Rect<f64> {
        self.frame
    }

    fn rotatable(&self) -> bool {
        self.children.iter().any(|(_, c)| c.rotatable())
    }

    fn rotation_pivot(&self, node: usize) -> Option<Point<f64>> {
        let (_, parts) = self.parts();
        let (part, local) = parts.locate(node)?;
        self.children[part].1.rotation_pivot(local)
    }

    fn caught(&mut self, node: usize) {
        let (_, parts) = self.parts();
        self.active = parts.locate(node).map(|(part, local)| {
            self.children[part].1.caught(local);
            part
        });
    }

    fn released(&mut self) {
        if let Some(part) = self.active.take() {
            self.children[part].1.released();
        }
    }
}

impl SceneElement for DependentFrame {
    fn kind(&self) -> &'static str {
        "dependent"
    }

    fn geometry(&self) -> Geometry {
        Geometry::of_rect(&self.frame)
    }

    fn child_records(&self) -> Vec<LayoutRecord> {
        self.children
            .iter()
            .map(|(tag, c)| LayoutRecord {
                tag: tag.clone(),
                kind: c.kind().to_owned(),
                geometry: c.geometry(),
                children: c.child_records(),
            })
            .collect()
    }

    /// The frame itself is derived; only child records are applied.
    fn restore(&mut self, _geometry: &Geometry, children: &[LayoutRecord], warnings: &mut Vec<String>) {
        for (tag, c) in &mut self.children {
            match child(children, tag) {
                Some(rec) => c.restore(&rec.geometry, &rec.children, warnings),
                None => warnings.push(format!("dependent frame: no record for child `{tag}`")),
            }
        }
        for rec in children {
            if !self.children.iter().any(|(tag, _)| *tag == rec.tag) {
                warnings.push(format!("dependent frame: unknown child `{}` ignored", rec.tag));
            }
        }
        self.recompute();
    }

    fn audit(&self) -> Result<(), String> {
        for (tag, c) in &self.children {
            c.audit().map_err(|e| format!("{tag}: {e}"))?;
        }
        let expected = self.expected_frame();
        if self.frame == expected {
            Ok(())
        } else {
            Err(format!("frame {:?} differs from children union + margin {:?}", self.frame, expected))
        }
    }

    fn render(&self, out: &mut Vec<DrawCommand>) {
        out.push(DrawCommand::outline(self.frame.corners().to_vec(), "dependent-frame"));
        for (_, c) in &self.children {
            c.render(out);
        }
    }
}
