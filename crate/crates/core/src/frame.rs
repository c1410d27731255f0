//! Rectangular frames: the automatic cover for controls and the edge-drag
//! arithmetic behind every rectangular resize.

use crate::cover::{Cover, CoverError, CoverNode, CursorShape, MovementFreedom, NodeShape};
use crate::geometry::{Rect, Size};
use crate::scalar::Real;

/// Default width of the sensitive band around a control, in logical pixels.
pub const DEFAULT_FRAME_WIDTH: f64 = 6.0;

/// Mid-side node length bounds; the length is a quarter of the side, clamped.
pub const MID_NODE_MIN: f64 = 16.0;
pub const MID_NODE_MAX: f64 = 60.0;

/// Which axes of a rectangle may be resized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ResizePolicy {
    NoResize,
    WEOnly,
    NSOnly,
    Full,
}

impl ResizePolicy {
    /// An axis is resizable iff its minimum is below its maximum.
    pub fn from_limits<T: Real>(limits: &SizeLimits<T>) -> Self {
        match (limits.min.w < limits.max.w, limits.min.h < limits.max.h) {
            (false, false) => ResizePolicy::NoResize,
            (true, false) => ResizePolicy::WEOnly,
            (false, true) => ResizePolicy::NSOnly,
            (true, true) => ResizePolicy::Full,
        }
    }

    pub fn resizes_width(self) -> bool {
        matches!(self, ResizePolicy::WEOnly | ResizePolicy::Full)
    }

    pub fn resizes_height(self) -> bool {
        matches!(self, ResizePolicy::NSOnly | ResizePolicy::Full)
    }
}

/// Inclusive size range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SizeLimits<T> {
    pub min: Size<T>,
    pub max: Size<T>,
}

impl<T: Real> SizeLimits<T> {
    /// `None` unless `0 < min <= max` on both axes.
    pub fn new(min: Size<T>, max: Size<T>) -> Option<Self> {
        let ok = min.w > T::zero()
            && min.h > T::zero()
            && min.w <= max.w
            && min.h <= max.h
            && max.w.is_finite()
            && max.h.is_finite();
        ok.then_some(Self { min, max })
    }

    /// A range that pins the size.
    pub fn fixed(size: Size<T>) -> Option<Self> {
        Self::new(size, size)
    }

    pub fn clamp(&self, size: Size<T>) -> Size<T> {
        Size::new(
            size.w.max(self.min.w).min(self.max.w),
            size.h.max(self.min.h).min(self.max.h),
        )
    }

    pub fn contains(&self, size: Size<T>) -> bool {
        size.w >= self.min.w && size.w <= self.max.w && size.h >= self.min.h && size.h <= self.max.h
    }

    pub fn policy(&self) -> ResizePolicy {
        ResizePolicy::from_limits(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Top,
    Right,
    Bottom,
    Left,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::Top, Side::Right, Side::Bottom, Side::Left];

    pub fn is_horizontal(self) -> bool {
        matches!(self, Side::Top | Side::Bottom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Corner {
    TopLeft,
    TopRight,
    BottomRight,
    BottomLeft,
}

impl Corner {
    pub const ALL: [Corner; 4] = [
        Corner::TopLeft,
        Corner::TopRight,
        Corner::BottomRight,
        Corner::BottomLeft,
    ];

    fn sides(self) -> (Side, Side) {
        match self {
            Corner::TopLeft => (Side::Top, Side::Left),
            Corner::TopRight => (Side::Top, Side::Right),
            Corner::BottomRight => (Side::Bottom, Side::Right),
            Corner::BottomLeft => (Side::Bottom, Side::Left),
        }
    }

    fn cursor(self) -> CursorShape {
        match self {
            Corner::TopLeft | Corner::BottomRight => CursorShape::SizeNWSE,
            Corner::TopRight | Corner::BottomLeft => CursorShape::SizeNESW,
        }
    }
}

/// What a node of a rectangular frame does when dragged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FrameRole {
    /// Moves the two edges meeting at the corner.
    Corner(Corner),
    /// Moves one edge.
    Side(Side),
    /// Moves the whole rectangle.
    Strip(Side),
}

/// Resize roles in declaration order: corners (only for `Full`), then sides.
pub fn resize_roles(policy: ResizePolicy) -> Vec<FrameRole> {
    let mut roles = Vec::with_capacity(8);
    if policy == ResizePolicy::Full {
        roles.extend(Corner::ALL.iter().map(|&c| FrameRole::Corner(c)));
    }
    for side in Side::ALL {
        let active = if side.is_horizontal() {
            policy.resizes_height()
        } else {
            policy.resizes_width()
        };
        if active {
            roles.push(FrameRole::Side(side));
        }
    }
    roles
}

/// Node roles of [`make_rect_frame_cover`], index for index.
pub fn frame_roles(policy: ResizePolicy) -> Vec<FrameRole> {
    let mut roles = resize_roles(policy);
    roles.extend(Side::ALL.iter().map(|&s| FrameRole::Strip(s)));
    roles
}

fn side_node(side: Side) -> (MovementFreedom, CursorShape) {
    if side.is_horizontal() {
        (MovementFreedom::NS, CursorShape::SizeNS)
    } else {
        (MovementFreedom::WE, CursorShape::SizeWE)
    }
}

fn mid_length<T: Real>(side_len: T) -> T {
    (side_len / T::lit(4.0))
        .max(T::lit(MID_NODE_MIN))
        .min(T::lit(MID_NODE_MAX))
}

/// The automatic cover of a control: a band of `frame_width` around `rect`.
///
/// Resize nodes come first (corner squares, then enlarged mid-side nodes), then
/// four move strips that together tile the whole band. Nothing covers the
/// interior of `rect`. [`frame_roles`] gives the role of each index.
pub fn make_rect_frame_cover<T: Real>(
    rect: Rect<T>,
    frame_width: T,
    policy: ResizePolicy,
) -> Result<Cover<T>, CoverError> {
    if frame_width <= T::zero() || !frame_width.is_finite() {
        return Err(CoverError::NonPositiveFrameWidth);
    }
    if !(rect.w > T::zero() && rect.h > T::zero()) {
        return Err(CoverError::DegenerateRect);
    }
    let fw = frame_width;
    let two = T::lit(2.0);
    let (l, t, r, b) = (rect.x, rect.y, rect.right(), rect.bottom());
    let band = |side: Side, from: T, to: T| match side {
        Side::Top => Rect::new(from, t - fw, to - from, fw),
        Side::Bottom => Rect::new(from, b, to - from, fw),
        Side::Left => Rect::new(l - fw, from, fw, to - from),
        Side::Right => Rect::new(r, from, fw, to - from),
    };
    let mut cover = Cover::empty();
    for role in resize_roles(policy) {
        let node = match role {
            FrameRole::Corner(corner) => {
                // The corner cell of the band: the part of a 2*fw square centred
                // on the corner that lies outside the rectangle's two sides.
                let (cx, cy) = match corner {
                    Corner::TopLeft => (l - fw, t - fw),
                    Corner::TopRight => (r, t - fw),
                    Corner::BottomRight => (r, b),
                    Corner::BottomLeft => (l - fw, b),
                };
                CoverNode::new(
                    NodeShape::rect(Rect::new(cx, cy, fw, fw))?,
                    MovementFreedom::Any,
                    corner.cursor(),
                )
            }
            FrameRole::Side(side) => {
                let (freedom, cursor) = side_node(side);
                let (mid, len) = if side.is_horizontal() {
                    (l + rect.w / two, mid_length(rect.w))
                } else {
                    (t + rect.h / two, mid_length(rect.h))
                };
                let shape = NodeShape::rect(band(side, mid - len / two, mid + len / two))?;
                CoverNode::new(shape, freedom, cursor)
            }
            FrameRole::Strip(_) => unreachable!("resize_roles yields no strips"),
        };
        cover.push(node);
    }
    for side in Side::ALL {
        let r = if side.is_horizontal() {
            band(side, l - fw, r + fw)
        } else {
            band(side, t, b)
        };
        cover.push(CoverNode::new(
            NodeShape::rect(r)?,
            MovementFreedom::None,
            CursorShape::MoveAll,
        ));
    }
    Ok(cover)
}

/// Resize nodes straddling the outline of `rect` by `half_width` on each side.
///
/// Used by objects that are moved by inner points and resized by their border:
/// the caller appends its own body nodes afterwards. Node roles follow
/// [`resize_roles`]; side nodes span the full edge between the corner squares.
pub fn make_border_cover<T: Real>(
    rect: Rect<T>,
    half_width: T,
    policy: ResizePolicy,
) -> Result<Cover<T>, CoverError> {
    if half_width <= T::zero() || !half_width.is_finite() {
        return Err(CoverError::NonPositiveFrameWidth);
    }
    if !(rect.w > T::zero() && rect.h > T::zero()) {
        return Err(CoverError::DegenerateRect);
    }
    let hw = half_width;
    let two = T::lit(2.0);
    let (l, t, r, b) = (rect.x, rect.y, rect.right(), rect.bottom());
    let mut cover = Cover::empty();
    for role in resize_roles(policy) {
        let node = match role {
            FrameRole::Corner(corner) => {
                let (cx, cy) = match corner {
                    Corner::TopLeft => (l, t),
                    Corner::TopRight => (r, t),
                    Corner::BottomRight => (r, b),
                    Corner::BottomLeft => (l, b),
                };
                CoverNode::new(
                    NodeShape::rect(Rect::new(cx - hw, cy - hw, two * hw, two * hw))?,
                    MovementFreedom::Any,
                    corner.cursor(),
                )
            }
            FrameRole::Side(side) => {
                let (freedom, cursor) = side_node(side);
                let strip = match side {
                    Side::Top => Rect::new(l - hw, t - hw, rect.w + two * hw, two * hw),
                    Side::Bottom => Rect::new(l - hw, b - hw, rect.w + two * hw, two * hw),
                    Side::Left => Rect::new(l - hw, t - hw, two * hw, rect.h + two * hw),
                    Side::Right => Rect::new(r - hw, t - hw, two * hw, rect.h + two * hw),
                };
                CoverNode::new(NodeShape::rect(strip)?, freedom, cursor)
            }
            FrameRole::Strip(_) => unreachable!("resize_roles yields no strips"),
        };
        cover.push(node);
    }
    Ok(cover)
}

/// Edge-drag state for one rectangular resize gesture.
///
/// Keeps the part of the pointer travel that the size limits swallowed, so a
/// drag that goes past a limit and comes back reattaches the edge exactly where
/// the pointer crosses it again. Reset it at the start of every gesture.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EdgeDrag<T> {
    slack: Size<T>,
}

impl<T: Real> EdgeDrag<T> {
    pub fn new() -> Self {
        Self { slack: Size::new(T::zero(), T::zero()) }
    }

    pub fn reset(&mut self) {
        *self = Self::new();
    }

    /// Applies a pointer displacement through `role`. Returns true iff `rect` changed.
    pub fn apply(
        &mut self,
        rect: &mut Rect<T>,
        role: FrameRole,
        dx: T,
        dy: T,
        limits: &SizeLimits<T>,
    ) -> bool {
        let before = *rect;
        match role {
            FrameRole::Strip(_) => *rect = rect.translated(dx, dy),
            FrameRole::Side(side) => self.drag_side(rect, side, dx, dy, limits),
            FrameRole::Corner(corner) => {
                let (horizontal, vertical) = corner.sides();
                self.drag_side(rect, horizontal, dx, dy, limits);
                self.drag_side(rect, vertical, dx, dy, limits);
            }
        }
        *rect != before
    }

    fn drag_side(&mut self, rect: &mut Rect<T>, side: Side, dx: T, dy: T, limits: &SizeLimits<T>) {
        match side {
            Side::Right => {
                let wanted = rect.w + dx + self.slack.w;
                rect.w = wanted.max(limits.min.w).min(limits.max.w);
                self.slack.w = wanted - rect.w;
            }
            Side::Left => {
                let right = rect.right();
                let wanted = rect.w - dx + self.slack.w;
                rect.w = wanted.max(limits.min.w).min(limits.max.w);
                self.slack.w = wanted - rect.w;
                rect.x = right - rect.w;
            }
            Side::Bottom => {
                let wanted = rect.h + dy + self.slack.h;
                rect.h = wanted.max(limits.min.h).min(limits.max.h);
                self.slack.h = wanted - rect.h;
            }
            Side::Top => {
                let bottom = rect.bottom();
                let wanted = rect.h - dy + self.slack.h;
                rect.h = wanted.max(limits.min.h).min(limits.max.h);
                self.slack.h = wanted - rect.h;
                rect.y = bottom - rect.h;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;

    fn p(x: f64, y: f64) -> Point<f64> {
        Point::new(x, y)
    }

    fn limits(min: (f64, f64), max: (f64, f64)) -> SizeLimits<f64> {
        SizeLimits::new(Size::new(min.0, min.1), Size::new(max.0, max.1)).unwrap()
    }

    #[test]
    fn policy_from_limits() {
        assert_eq!(limits((60.0, 30.0), (200.0, 30.0)).policy(), ResizePolicy::WEOnly);
        assert_eq!(limits((60.0, 30.0), (60.0, 30.0)).policy(), ResizePolicy::NoResize);
        assert_eq!(limits((60.0, 20.0), (60.0, 30.0)).policy(), ResizePolicy::NSOnly);
        assert_eq!(limits((10.0, 20.0), (60.0, 30.0)).policy(), ResizePolicy::Full);
        assert!(SizeLimits::new(Size::new(10.0, 10.0), Size::new(5.0, 20.0)).is_none());
        assert!(SizeLimits::new(Size::new(0.0, 10.0), Size::new(5.0, 20.0)).is_none());
    }

    #[test]
    fn full_frame_layout() {
        let rect = Rect::new(0.0, 0.0, 100.0, 60.0);
        let cover = make_rect_frame_cover(rect, 6.0, ResizePolicy::Full).unwrap();
        assert_eq!(cover.len(), 12);
        assert_eq!(frame_roles(ResizePolicy::Full).len(), 12);
        assert_eq!(cover.hit(p(50.0, 30.0)), None);
        let i = cover.hit(p(-3.0, 30.0)).unwrap();
        assert_eq!(frame_roles(ResizePolicy::Full)[i], FrameRole::Side(Side::Left));
        assert_eq!(cover.nodes()[i].cursor, CursorShape::SizeWE);
        assert_eq!(cover.nodes()[i].freedom, MovementFreedom::WE);
        let i = cover.hit(p(103.0, 63.0)).unwrap();
        assert_eq!(frame_roles(ResizePolicy::Full)[i], FrameRole::Corner(Corner::BottomRight));
        assert_eq!(cover.nodes()[i].cursor, CursorShape::SizeNWSE);
        // away from the middle of the top side only the strip is left
        let i = cover.hit(p(10.0, -3.0)).unwrap();
        assert_eq!(frame_roles(ResizePolicy::Full)[i], FrameRole::Strip(Side::Top));
    }

    #[test]
    fn no_resize_frame_is_strips_only() {
        let rect = Rect::new(0.0, 0.0, 100.0, 60.0);
        let cover = make_rect_frame_cover(rect, 6.0, ResizePolicy::NoResize).unwrap();
        assert_eq!(cover.len(), 4);
        let node = &cover.nodes()[cover.hit(p(-3.0, 30.0)).unwrap()];
        assert_eq!(node.freedom, MovementFreedom::None);
        assert_eq!(node.cursor, CursorShape::MoveAll);
        let we = make_rect_frame_cover(rect, 6.0, ResizePolicy::WEOnly).unwrap();
        assert_eq!(we.len(), 6);
        assert_eq!(we.cursor_at(p(50.0, -3.0)), Some(CursorShape::MoveAll));
        assert_eq!(we.cursor_at(p(103.0, 30.0)), Some(CursorShape::SizeWE));
    }

    #[test]
    fn mid_nodes_grow_with_side() {
        assert_eq!(mid_length(40.0), 16.0);
        assert_eq!(mid_length(120.0), 30.0);
        assert_eq!(mid_length(1000.0), 60.0);
        let rect = Rect::new(0.0, 0.0, 400.0, 30.0);
        let cover = make_rect_frame_cover(rect, 6.0, ResizePolicy::Full).unwrap();
        // top mid node spans 200 +- 30
        assert_eq!(cover.cursor_at(p(171.0, -1.0)), Some(CursorShape::SizeNS));
        assert_eq!(cover.cursor_at(p(169.0, -1.0)), Some(CursorShape::MoveAll));
    }

    #[test]
    fn frame_construction_errors() {
        let rect = Rect::new(0.0, 0.0, 100.0, 60.0);
        assert_eq!(
            make_rect_frame_cover(rect, 0.0, ResizePolicy::Full),
            Err(CoverError::NonPositiveFrameWidth)
        );
        assert_eq!(
            make_rect_frame_cover(Rect::new(0.0, 0.0, 0.0, 60.0), 6.0, ResizePolicy::Full),
            Err(CoverError::DegenerateRect)
        );
        assert_eq!(
            make_border_cover(rect, f64::NAN, ResizePolicy::Full),
            Err(CoverError::NonPositiveFrameWidth)
        );
    }

    #[test]
    fn border_cover_straddles_outline() {
        let rect = Rect::new(0.0, 0.0, 100.0, 60.0);
        let cover = make_border_cover(rect, 3.0, ResizePolicy::Full).unwrap();
        assert_eq!(cover.len(), 8);
        assert_eq!(cover.cursor_at(p(50.0, 2.0)), Some(CursorShape::SizeNS));
        assert_eq!(cover.cursor_at(p(50.0, -2.0)), Some(CursorShape::SizeNS));
        assert_eq!(cover.cursor_at(p(0.0, 0.0)), Some(CursorShape::SizeNWSE));
        assert_eq!(cover.hit(p(50.0, 30.0)), None);
        let ns = make_border_cover(rect, 3.0, ResizePolicy::NSOnly).unwrap();
        assert_eq!(ns.len(), 2);
    }

    #[test]
    fn edge_drag_clamps() {
        let lim = limits((60.0, 30.0), (200.0, 30.0));
        let mut drag = EdgeDrag::new();
        let mut r = Rect::new(10.0, 10.0, 100.0, 30.0);
        assert!(drag.apply(&mut r, FrameRole::Side(Side::Right), 150.0, 0.0, &lim));
        assert_eq!(r, Rect::new(10.0, 10.0, 200.0, 30.0));

        let mut drag = EdgeDrag::new();
        let mut r = Rect::new(10.0, 10.0, 100.0, 30.0);
        drag.apply(&mut r, FrameRole::Side(Side::Left), 50.0, 0.0, &lim);
        assert_eq!(r, Rect::new(50.0, 10.0, 60.0, 30.0));

        let mut r = Rect::new(10.0, 10.0, 100.0, 30.0);
        drag.reset();
        assert!(drag.apply(&mut r, FrameRole::Strip(Side::Top), 15.0, 7.0, &lim));
        assert_eq!(r, Rect::new(25.0, 17.0, 100.0, 30.0));
    }

    #[test]
    fn edge_drag_slack_reattaches() {
        let lim = limits((20.0, 20.0), (80.0, 80.0));
        let start = Rect::new(0.0, 0.0, 50.0, 50.0);
        for role in [
            FrameRole::Side(Side::Left),
            FrameRole::Side(Side::Top),
            FrameRole::Corner(Corner::BottomRight),
            FrameRole::Corner(Corner::TopRight),
        ] {
            let mut drag = EdgeDrag::new();
            let mut r = start;
            drag.apply(&mut r, role, 70.0, -90.0, &lim);
            assert!(lim.contains(r.size()));
            drag.apply(&mut r, role, -70.0, 90.0, &lim);
            assert_eq!(r, start, "{role:?}");
        }
    }
}
