use crate::cover::{Cover, CoverNode, CursorShape, MovementFreedom, NodeShape};
use crate::frame::{make_border_cover, resize_roles, EdgeDrag, Side, SizeLimits};
use crate::geometry::{bounds_union, Point, Rect};
use crate::layout::{Geometry, LayoutRecord};
use crate::mover::{Element, NodeDrag};
use crate::render::DrawCommand;

use super::{child, Comment, SceneElement};

const BORDER_HALF_WIDTH: f64 = 3.0;

/// A scale attached to one side of the plotting area.
///
/// Its length always equals the attached side; `offset` is measured from
/// the side's anchor and only changes when the scale itself is dragged.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scale {
    pub side: Side,
    pub offset: Point<f64>,
    pub thickness: f64,
}

impl Scale {
    pub fn new(side: Side, thickness: f64) -> Self {
        assert!(thickness > 0.0, "scale thickness must be positive");
        Self { side, offset: Point::origin(), thickness }
    }

    /// Absolute rectangle for a given area.
    ///
    /// Top and left scales sit just outside the area; bottom and right ones
    /// start at the corresponding edge.
    pub fn rect(&self, area: &Rect<f64>) -> Rect<f64> {
        let t = self.thickness;
        let r = match self.side {
            Side::Top => Rect::new(area.x, area.y - t, area.w, t),
            Side::Bottom => Rect::new(area.x, area.bottom(), area.w, t),
            Side::Left => Rect::new(area.x - t, area.y, t, area.h),
            Side::Right => Rect::new(area.right(), area.y, t, area.h),
        };
        r.translated(self.offset.x, self.offset.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommentOwner {
    Area,
    Scale(usize),
}

/// Absolute positions derived from the parent-relative state.
#[derive(Debug, Clone, PartialEq, Default)]
struct Placement {
    scales: Vec<Rect<f64>>,
    comments: Vec<Rect<f64>>,
}

/// A plotting area with attached scales and comments.
///
/// The area is moved by its inside and resized by its border; scales follow
/// the sides they are attached to and can also be moved on their own;
/// comments keep their fractional place on their owner and can be moved and
/// rotated individually.
#[derive(Debug, Clone, PartialEq)]
pub struct PlotComposite {
    area: Rect<f64>,
    limits: SizeLimits<f64>,
    scales: Vec<Scale>,
    comments: Vec<(CommentOwner, Comment)>,
    drag: EdgeDrag<f64>,
    placed: Placement,
}

enum Part {
    Comment(usize),
    Scale(usize),
    Border(usize),
    Body,
}

impl PlotComposite {
    pub fn new(area: Rect<f64>, limits: SizeLimits<f64>) -> Self {
        let size = limits.clamp(area.size());
        let mut plot = Self {
            area: Rect::new(area.x, area.y, size.w, size.h),
            limits,
            scales: Vec::new(),
            comments: Vec::new(),
            drag: EdgeDrag::new(),
            placed: Placement::default(),
        };
        plot.refresh();
        plot
    }

    pub fn with_scale(mut self, scale: Scale) -> Self {
        self.scales.push(scale);
        self.refresh();
        self
    }

    /// # Panics
    /// When the owner is a scale that does not exist.
    pub fn with_comment(mut self, owner: CommentOwner, comment: Comment) -> Self {
        if let CommentOwner::Scale(i) = owner {
            assert!(i < self.scales.len(), "comment owner scale {i} does not exist");
        }
        self.comments.push((owner, comment));
        self.refresh();
        self
    }

    pub fn area(&self) -> Rect<f64> {
        self.area
    }

    pub fn scales(&self) -> &[Scale] {
        &self.scales
    }

    pub fn comments(&self) -> &[(CommentOwner, Comment)] {
        &self.comments
    }

    /// Current absolute rectangle of scale `i`.
    pub fn scale_rect(&self, i: usize) -> Rect<f64> {
        self.placed.scales[i]
    }

    /// Current absolute bounds of comment `i`.
    pub fn comment_bounds(&self, i: usize) -> Rect<f64> {
        self.placed.comments[i]
    }

    fn owner_rect(&self, owner: CommentOwner) -> Rect<f64> {
        match owner {
            CommentOwner::Area => self.area,
            CommentOwner::Scale(i) => self.scales[i].rect(&self.area),
        }
    }

    fn derive(&self) -> Placement {
        Placement {
            scales: self.scales.iter().map(|s| s.rect(&self.area)).collect(),
            comments: self.comments.iter().map(|(o, c)| c.bounds(&self.owner_rect(*o))).collect(),
        }
    }

    fn refresh(&mut self) {
        self.placed = self.derive();
    }

    fn part(&self, node: usize) -> Option<Part> {
        let nc = self.comments.len();
        let ns = self.scales.len();
        let nb = resize_roles(self.limits.policy()).len();
        match node {
            i if i < nc => Some(Part::Comment(i)),
            i if i < nc + ns => Some(Part::Scale(i - nc)),
            i if i < nc + ns + nb => Some(Part::Border(i - nc - ns)),
            i if i == nc + ns + nb => Some(Part::Body),
            _ => None,
        }
    }

    fn apply(&mut self, drag: &NodeDrag<f64>) -> bool {
        let moved = drag.dx != 0.0 || drag.dy != 0.0;
        match (self.part(drag.node), drag.rotation) {
            (Some(Part::Comment(i)), Some(r)) => self.comments[i].1.rotate(r.delta),
            (_, Some(_)) | (None, _) => false,
            (Some(Part::Comment(i)), None) => {
                let owner = self.owner_rect(self.comments[i].0);
                self.comments[i].1.shift(&owner, drag.dx, drag.dy)
            }
            (Some(Part::Scale(i)), None) => {
                self.scales[i].offset += drag.delta();
                moved
            }
            (Some(Part::Border(k)), None) => {
                let role = resize_roles(self.limits.policy())[k];
                self.drag.apply(&mut self.area, role, drag.dx, drag.dy, &self.limits)
            }
            (Some(Part::Body), None) => {
                self.area = self.area.translated(drag.dx, drag.dy);
                moved
            }
        }
    }
}

impl Element<f64> for PlotComposite {
    fn define_cover(&self) -> Cover<f64> {
        let mut cover = Cover::empty();
        for (owner, comment) in &self.comments {
            cover.push(comment.node(&self.owner_rect(*owner)));
        }
        for r in &self.placed.scales {
            cover.push(CoverNode::new(
                NodeShape::rect(*r).expect("scales have positive size"),
                MovementFreedom::Any,
                CursorShape::MoveAll,
            ));
        }
        cover.append(
            make_border_cover(self.area, BORDER_HALF_WIDTH, self.limits.policy())
                .expect("limits keep the area non-degenerate"),
        );
        cover.push(CoverNode::new(
            NodeShape::rect(self.area).expect("limits keep the area non-degenerate"),
            MovementFreedom::None,
            CursorShape::MoveAll,
        ));
        cover
    }

    fn move_by(&mut self, dx: f64, dy: f64) {
        self.area = self.area.translated(dx, dy);
        self.refresh();
    }

    fn move_node(&mut self, drag: &NodeDrag<f64>) -> bool {
        let changed = self.apply(drag);
        self.refresh();
        changed
    }

    fn bounds(&self) -> Rect<f64> {
        let mut all = vec![self.area];
        all.extend(&self.placed.scales);
        all.extend(&self.placed.comments);
        bounds_union(&all).expect("the area is always present")
    }

    fn rotatable(&self) -> bool {
        !self.comments.is_empty()
    }

    /// Comments rotate about their own centre; nothing else rotates.
    fn rotation_pivot(&self, node: usize) -> Option<Point<f64>> {
        match self.part(node)? {
            Part::Comment(i) => {
                let (owner, comment) = &self.comments[i];
                Some(comment.center(&self.owner_rect(*owner)))
            }
            _ => None,
        }
    }

    fn caught(&mut self, _node: usize) {
        self.drag.reset();
    }

    fn released(&mut self) {
        self.drag.reset();
    }
}

impl SceneElement for PlotComposite {
    fn kind(&self) -> &'static str {
        "plot"
    }

    fn geometry(&self) -> Geometry {
        Geometry::of_rect(&self.area)
    }

    /// Scales record their offset in `x, y` and their thickness in `w`.
    fn child_records(&self) -> Vec<LayoutRecord> {
        let scales = self.scales.iter().enumerate().map(|(i, s)| {
            LayoutRecord::leaf(
                &format!("scale{i}"),
                "scale",
                Geometry { x: s.offset.x, y: s.offset.y, w: s.thickness, h: 0.0, angle: 0.0 },
            )
        });
        let comments = self.comments.iter().enumerate().map(|(i, (_, c))| c.record(&format!("comment{i}")));
        scales.chain(comments).collect()
    }

    fn restore(&mut self, geometry: &Geometry, children: &[LayoutRecord], warnings: &mut Vec<String>) {
        let size = self.limits.clamp(geometry.rect().size());
        if size != geometry.rect().size() {
            warnings.push(format!(
                "plot: area {}x{} clamped to {}x{}",
                geometry.w, geometry.h, size.w, size.h
            ));
        }
        self.area = Rect::new(geometry.x, geometry.y, size.w, size.h);
        for (i, scale) in self.scales.iter_mut().enumerate() {
            match child(children, &format!("scale{i}")) {
                Some(rec) if rec.geometry.w > 0.0 => {
                    scale.offset = Point::new(rec.geometry.x, rec.geometry.y);
                    scale.thickness = rec.geometry.w;
                }
                Some(_) => warnings.push(format!("plot: scale{i} has no thickness, kept")),
                None => warnings.push(format!("plot: no record for scale{i}")),
            }
        }
        for (i, (_, comment)) in self.comments.iter_mut().enumerate() {
            match child(children, &format!("comment{i}")) {
                Some(rec) => comment.restore(&rec.geometry),
                None => warnings.push(format!("plot: no record for comment{i}")),
            }
        }
        self.refresh();
    }

    fn audit(&self) -> Result<(), String> {
        if !self.limits.contains(self.area.size()) {
            return Err(format!("plot area {:?} outside its limits", self.area));
        }
        if self.placed != self.derive() {
            return Err("plot children differ from their parent-relative derivation".into());
        }
        Ok(())
    }

    fn render(&self, out: &mut Vec<DrawCommand>) {
        out.push(DrawCommand::filled(self.area, "plot-area"));
        for r in &self.placed.scales {
            out.push(DrawCommand::filled(*r, "plot-scale"));
        }
        for (owner, comment) in &self.comments {
            comment.render(&self.owner_rect(*owner), out);
        }
    }
}
