//! Concrete moveable elements: controls, commented controls, groups, dependent
//! frames, linked rectangles, the chatoyant polygon, N-node disc and ring, and
//! the plot composite with its scales and comments.

mod commented;
mod dependent;
mod framed;
mod group;
mod linked;
mod nnode;
mod plot;
mod polygon;
mod text;

pub use commented::CommentedControl;
pub use dependent::DependentFrame;
pub use framed::FramedControl;
pub use group::{Group, GroupError, LayoutRule, StackLayout};
pub use linked::LinkedRectangles;
pub use nnode::{NNodeDisc, NNodeRing};
pub use plot::{CommentOwner, PlotComposite, Scale};
pub use polygon::ChatoyantPolygon;
pub use text::Comment;

use crate::cover::{Cover, MovementFreedom};
use crate::layout::{Geometry, LayoutRecord};
use crate::mover::Element;
use crate::render::DrawCommand;

/// An element that can live in a [`crate::Scene`]: persisted, audited, drawn.
pub trait SceneElement: Element<f64> {
    /// Kind tag written to layout files.
    fn kind(&self) -> &'static str;

    /// Top-level geometry for the layout record.
    fn geometry(&self) -> Geometry;

    /// Nested records for composites.
    fn child_records(&self) -> Vec<LayoutRecord> {
        Vec::new()
    }

    /// Applies saved geometry. Anything adjusted or skipped is reported in `warnings`.
    fn restore(&mut self, geometry: &Geometry, children: &[LayoutRecord], warnings: &mut Vec<String>);

    /// Checks the element's invariants.
    fn audit(&self) -> Result<(), String>;

    /// Appends draw commands, back to front.
    fn render(&self, out: &mut Vec<DrawCommand>);

    /// Points whose pairwise distances a rotation must preserve.
    fn rigid_points(&self) -> Vec<crate::geometry::Point<f64>> {
        Vec::new()
    }
}

/// Index bookkeeping for a cover assembled from several part covers.
#[derive(Debug, Clone, Default)]
pub(crate) struct Parts {
    starts: Vec<usize>,
    end: usize,
}

impl Parts {
    /// Appends each part cover to `cover`. Nodes with freedom `None` are
    /// relabelled `Any`: inside a composite they move their part, not the whole.
    pub(crate) fn compose(cover: &mut Cover<f64>, parts: impl IntoIterator<Item = Cover<f64>>) -> Self {
        let mut starts = Vec::new();
        for part in parts {
            starts.push(cover.len());
            for mut node in part.nodes().iter().cloned() {
                if node.freedom == MovementFreedom::None && !node.is_passive() {
                    node.freedom = MovementFreedom::Any;
                }
                cover.push(node);
            }
        }
        Self { starts, end: cover.len() }
    }

    /// `(part, local index)` for a composite node index.
    pub(crate) fn locate(&self, node: usize) -> Option<(usize, usize)> {
        let part = self.starts.partition_point(|&s| s <= node);
        if node >= self.end || part == 0 {
            return None;
        }
        let part = part - 1;
        Some((part, node - self.starts[part]))
    }
}

/// Forwards a composite-level drag to one part, honouring the part's own
/// node freedom: `None` nodes translate the part.
pub(crate) fn drag_part<E: Element<f64> + ?Sized>(
    part: &mut E,
    local: usize,
    drag: &crate::mover::NodeDrag<f64>,
) -> bool {
    let freedom = part.define_cover().node(local).map(|n| n.freedom);
    if drag.rotation.is_none() && freedom == Some(MovementFreedom::None) {
        if drag.dx == 0.0 && drag.dy == 0.0 {
            return false;
        }
        part.move_by(drag.dx, drag.dy);
        true
    } else {
        part.move_node(&crate::mover::NodeDrag { node: local, ..*drag })
    }
}

pub(crate) fn child<'a>(children: &'a [LayoutRecord], tag: &str) -> Option<&'a LayoutRecord> {
    children.iter().find(|c| c.tag == tag)
}
