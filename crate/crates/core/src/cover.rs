//! Covers: ordered sets of sensitive nodes that define where and how an
//! object can be grabbed.
//!
//! Nodes may overlap freely. Hit-testing walks the nodes in declaration order
//! and the first containing node wins, so small detail nodes (resize handles,
//! apexes) are declared ahead of the large body nodes they sit on.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{dist_point_segment, point_in_convex_polygon, signed_area2, Point};
use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoverError {
    #[error("circle radius must be strictly positive")]
    NonPositiveRadius,
    #[error("capsule half-width must be strictly positive")]
    NonPositiveHalfWidth,
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("polygon has zero area")]
    DegeneratePolygon,
    #[error("polygon is not convex")]
    NonConvexPolygon,
    #[error("node geometry is not finite")]
    NonFinite,
    #[error("frame width must be strictly positive")]
    NonPositiveFrameWidth,
    #[error("rectangle must have a strictly positive width and height")]
    DegenerateRect,
    #[error("an N-node cover needs at least 8 nodes per border, got {0}")]
    TooFewBorderNodes(usize),
    #[error("border radii must be strictly positive and strictly increasing")]
    BadRadii,
}

/// Geometric extent of a node.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase", rename_all_fields = "camelCase")]
pub enum NodeShape<T> {
    Circle { center: Point<T>, radius: T },
    /// A strip with two semicircular ends: every point within `half_width`
    /// of the segment `p1`-`p2`.
    Capsule { p1: Point<T>, p2: Point<T>, half_width: T },
    ConvexPolygon { vertices: Vec<Point<T>> },
}

impl<T: Real> NodeShape<T> {
    pub fn circle(center: Point<T>, radius: T) -> Result<Self, CoverError> {
        if !center.is_finite() || !radius.is_finite() {
            return Err(CoverError::NonFinite);
        }
        if radius <= T::zero() {
            return Err(CoverError::NonPositiveRadius);
        }
        Ok(Self::Circle { center, radius })
    }

    pub fn capsule(p1: Point<T>, p2: Point<T>, half_width: T) -> Result<Self, CoverError> {
        if !p1.is_finite() || !p2.is_finite() || !half_width.is_finite() {
            return Err(CoverError::NonFinite);
        }
        if half_width <= T::zero() {
            return Err(CoverError::NonPositiveHalfWidth);
        }
        Ok(Self::Capsule { p1, p2, half_width })
    }

    /// Validates convexity (either winding) and a non-zero area.
    pub fn polygon(vertices: Vec<Point<T>>) -> Result<Self, CoverError> {
        let n = vertices.len();
        if n < 3 {
            return Err(CoverError::TooFewVertices(n));
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(CoverError::NonFinite);
        }
        let area2 = signed_area2(&vertices);
        if area2 == T::zero() {
            return Err(CoverError::DegeneratePolygon);
        }
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            let turn = (b - a).cross(c - b);
            if turn * area2 < T::zero() {
                return Err(CoverError::NonConvexPolygon);
            }
        }
        Ok(Self::ConvexPolygon { vertices })
    }

    /// Axis-aligned rectangle as a four-vertex polygon.
    pub fn rect(r: crate::geometry::Rect<T>) -> Result<Self, CoverError> {
        if r.w <= T::zero() || r.h <= T::zero() {
            return Err(CoverError::DegenerateRect);
        }
        Self::polygon(r.corners().to_vec())
    }

    pub fn contains(&self, p: Point<T>) -> bool {
        match self {
            NodeShape::Circle { center, radius } => p.distance(*center) <= *radius,
            NodeShape::Capsule { p1, p2, half_width } => {
                dist_point_segment(p, *p1, *p2) <= *half_width
            }
            NodeShape::ConvexPolygon { vertices } => point_in_convex_polygon(p, vertices),
        }
    }

    /// A point guaranteed to lie inside the shape.
    pub fn interior_point(&self) -> Point<T> {
        match self {
            NodeShape::Circle { center, .. } => *center,
            NodeShape::Capsule { p1, p2, .. } => p1.lerp(*p2, T::lit(0.5)),
            NodeShape::ConvexPolygon { vertices } => {
                let n = T::from_usize(vertices.len()).expect("vertex count");
                let sum = vertices
                    .iter()
                    .fold(Point::origin(), |acc: Point<T>, v| acc + *v);
                Point::new(sum.x / n, sum.y / n)
            }
        }
    }
}

/// Individual mobility of a node.
///
/// `None` means the node has no motion of its own: grabbing it moves the whole
/// object.
#[allow(clippy::upper_case_acronyms)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MovementFreedom {
    Any,
    /// Vertical only.
    NS,
    /// Horizontal only.
    WE,
    None,
}

/// Pointer shape shown while hovering a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum CursorShape {
    #[default]
    #[serde(rename = "default")]
    Default,
    #[serde(rename = "move-all")]
    MoveAll,
    #[serde(rename = "size-ns")]
    SizeNS,
    #[serde(rename = "size-we")]
    SizeWE,
    #[serde(rename = "size-nwse")]
    SizeNWSE,
    #[serde(rename = "size-nesw")]
    SizeNESW,
    #[serde(rename = "size-all")]
    SizeAll,
    #[serde(rename = "rotate")]
    Rotate,
    #[serde(rename = "hand")]
    Hand,
}

impl CursorShape {
    pub fn name(self) -> &'static str {
        match self {
            CursorShape::Default => "default",
            CursorShape::MoveAll => "move-all",
            CursorShape::SizeNS => "size-ns",
            CursorShape::SizeWE => "size-we",
            CursorShape::SizeNWSE => "size-nwse",
            CursorShape::SizeNESW => "size-nesw",
            CursorShape::SizeAll => "size-all",
            CursorShape::Rotate => "rotate",
            CursorShape::Hand => "hand",
        }
    }

    pub fn is_resize(self) -> bool {
        matches!(
            self,
            CursorShape::SizeNS
                | CursorShape::SizeWE
                | CursorShape::SizeNWSE
                | CursorShape::SizeNESW
                | CursorShape::SizeAll
        )
    }
}

/// One sensitive area of a cover.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverNode<T> {
    pub shape: NodeShape<T>,
    pub freedom: MovementFreedom,
    pub cursor: CursorShape,
    passive: bool,
}

impl<T: Real> CoverNode<T> {
    pub fn new(shape: NodeShape<T>, freedom: MovementFreedom, cursor: CursorShape) -> Self {
        Self { shape, freedom, cursor, passive: false }
    }

    /// A node that absorbs the pointer without catching anything.
    ///
    /// Used for control interiors: they hide whatever lies underneath from the
    /// mover, but pressing there never starts a movement.
    pub fn passive(shape: NodeShape<T>) -> Self {
        Self {
            shape,
            freedom: MovementFreedom::None,
            cursor: CursorShape::Default,
            passive: true,
        }
    }

    pub fn is_passive(&self) -> bool {
        self.passive
    }

    pub fn contains(&self, p: Point<T>) -> bool {
        self.shape.contains(p)
    }
}

/// Ordered node list; the index of a node is its identity for `move_node`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Cover<T> {
    nodes: Vec<CoverNode<T>>,
}

impl<T: Real> Cover<T> {
    pub fn new(nodes: Vec<CoverNode<T>>) -> Self {
        Self { nodes }
    }

    pub fn empty() -> Self {
        Self { nodes: Vec::new() }
    }

    pub fn push(&mut self, node: CoverNode<T>) -> usize {
        self.nodes.push(node);
        self.nodes.len() - 1
    }

    /// Appends every node of `other`; returns the index offset they start at.
    pub fn append(&mut self, other: Cover<T>) -> usize {
        let offset = self.nodes.len();
        self.nodes.extend(other.nodes);
        offset
    }

    pub fn nodes(&self) -> &[CoverNode<T>] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> Option<&CoverNode<T>> {
        self.nodes.get(i)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Index of the first node, in declaration order, that contains `p`.
    pub fn hit(&self, p: Point<T>) -> Option<usize> {
        self.nodes.iter().position(|n| n.contains(p))
    }

    /// Cursor of the node [`Cover::hit`] returns.
    pub fn cursor_at(&self, p: Point<T>) -> Option<CursorShape> {
        self.hit(p).map(|i| self.nodes[i].cursor)
    }
}

/// Circle (one radius) or ring (two radii) border covered by many small nodes.
///
/// For every radius, `count` circles of `node_radius` are spaced evenly starting
/// at angle zero and declared first (radius by radius). The body comes last: a
/// single disc node for one radius, or `count` trapezoids spanning the annulus
/// for a ring. Body nodes have freedom `None`.
pub fn make_n_node_border_cover<T: Real>(
    center: Point<T>,
    radii: &[T],
    node_radius: T,
    count: usize,
) -> Result<Cover<T>, CoverError> {
    if count < 8 {
        return Err(CoverError::TooFewBorderNodes(count));
    }
    if radii.is_empty()
        || radii.len() > 2
        || radii[0] <= T::zero()
        || radii.windows(2).any(|w| w[1] <= w[0])
    {
        return Err(CoverError::BadRadii);
    }
    let step = T::lit(2.0) * T::PI() / T::from_usize(count).expect("count");
    let on_circle = |r: T, k: usize| {
        let a = step * T::from_usize(k).expect("index");
        center + Point::new(a.cos(), a.sin()) * r
    };
    let mut cover = Cover::empty();
    for &r in radii {
        for k in 0..count {
            cover.push(CoverNode::new(
                NodeShape::circle(on_circle(r, k), node_radius)?,
                MovementFreedom::Any,
                CursorShape::SizeAll,
            ));
        }
    }
    match radii {
        [r] => {
            cover.push(CoverNode::new(
                NodeShape::circle(center, *r)?,
                MovementFreedom::None,
                CursorShape::MoveAll,
            ));
        }
        [inner, outer] => {
            // Outer corners pushed out so the chords circumscribe the outer circle.
            let outer_reach = *outer / (step / T::lit(2.0)).cos();
            for k in 0..count {
                let quad = vec![
                    on_circle(*inner, k),
                    on_circle(outer_reach, k),
                    on_circle(outer_reach, k + 1),
                    on_circle(*inner, k + 1),
                ];
                cover.push(CoverNode::new(
                    NodeShape::polygon(quad)?,
                    MovementFreedom::None,
                    CursorShape::MoveAll,
                ));
            }
        }
        _ => unreachable!("radii length checked above"),
    }
    Ok(cover)
}
