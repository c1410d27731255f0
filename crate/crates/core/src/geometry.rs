//! 2D primitives and the containment / rotation helpers everything else builds on.
//!
//! Screen convention throughout: `y` grows downward and a positive [`Angle`]
//! turns clockwise on screen. Every containment predicate treats boundary
//! points as inside.

use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("coordinate is not finite")]
    NonFinite,
    #[error("cannot take the union of an empty set of rectangles")]
    EmptyUnion,
    #[error("rectangle has negative size")]
    NegativeSize,
}

/// A point (or displacement) in logical pixels.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Real> Point<T> {
    pub const fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    /// Builds a point, rejecting NaN and infinities.
    pub fn try_new(x: T, y: T) -> Result<Self, GeometryError> {
        if x.is_finite() && y.is_finite() {
            Ok(Self { x, y })
        } else {
            Err(GeometryError::NonFinite)
        }
    }

    pub fn origin() -> Self {
        Self::new(T::zero(), T::zero())
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(self, other: Self) -> T {
        self.x * other.x + self.y * other.y
    }

    /// Z component of the 3D cross product.
    pub fn cross(self, other: Self) -> T {
        self.x * other.y - self.y * other.x
    }

    pub fn length(self) -> T {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Self) -> T {
        (self - other).length()
    }

    /// Direction of `self` seen from `from`, in the clockwise-positive convention.
    pub fn angle_from(self, from: Self) -> Angle<T> {
        let d = self - from;
        Angle::from_radians(d.y.atan2(d.x))
    }

    pub fn lerp(self, other: Self, t: T) -> Self {
        self + (other - self) * t
    }
}

impl<T: Real> Add for Point<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl<T: Real> Sub for Point<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<T: Real> Mul<T> for Point<T> {
    type Output = Self;
    fn mul(self, rhs: T) -> Self {
        Self::new(self.x * rhs, self.y * rhs)
    }
}

impl<T: Real> Neg for Point<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl<T: Real> AddAssign for Point<T> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<T: Real> SubAssign for Point<T> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

/// Width / height pair.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Size<T> {
    pub w: T,
    pub h: T,
}

impl<T: Real> Size<T> {
    pub const fn new(w: T, h: T) -> Self {
        Self { w, h }
    }
}

/// Axis-aligned rectangle given by its top-left corner and a non-negative size.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Rect<T> {
    pub x: T,
    pub y: T,
    pub w: T,
    pub h: T,
}

impl<T: Real> Rect<T> {
    pub const fn new(x: T, y: T, w: T, h: T) -> Self {
        Self { x, y, w, h }
    }

    pub fn try_new(x: T, y: T, w: T, h: T) -> Result<Self, GeometryError> {
        if !(x.is_finite() && y.is_finite() && w.is_finite() && h.is_finite()) {
            return Err(GeometryError::NonFinite);
        }
        if w < T::zero() || h < T::zero() {
            return Err(GeometryError::NegativeSize);
        }
        Ok(Self { x, y, w, h })
    }

    pub fn from_corners(a: Point<T>, b: Point<T>) -> Self {
        let x = a.x.min(b.x);
        let y = a.y.min(b.y);
        Self::new(x, y, a.x.max(b.x) - x, a.y.max(b.y) - y)
    }

    pub fn right(&self) -> T {
        self.x + self.w
    }

    pub fn bottom(&self) -> T {
        self.y + self.h
    }

    pub fn size(&self) -> Size<T> {
        Size::new(self.w, self.h)
    }

    pub fn top_left(&self) -> Point<T> {
        Point::new(self.x, self.y)
    }

    pub fn center(&self) -> Point<T> {
        let two = T::lit(2.0);
        Point::new(self.x + self.w / two, self.y + self.h / two)
    }

    /// Corners in clockwise screen order starting at the top-left.
    pub fn corners(&self) -> [Point<T>; 4] {
        [
            Point::new(self.x, self.y),
            Point::new(self.right(), self.y),
            Point::new(self.right(), self.bottom()),
            Point::new(self.x, self.bottom()),
        ]
    }

    pub fn contains(&self, p: Point<T>) -> bool {
        p.x >= self.x && p.x <= self.right() && p.y >= self.y && p.y <= self.bottom()
    }

    /// True when `p` lies strictly inside (boundary excluded).
    pub fn contains_strictly(&self, p: Point<T>) -> bool {
        p.x > self.x && p.x < self.right() && p.y > self.y && p.y < self.bottom()
    }

    pub fn contains_rect(&self, other: &Rect<T>) -> bool {
        other.x >= self.x
            && other.y >= self.y
            && other.right() <= self.right()
            && other.bottom() <= self.bottom()
    }

    pub fn translated(&self, dx: T, dy: T) -> Self {
        Self::new(self.x + dx, self.y + dy, self.w, self.h)
    }

    /// Grows the rectangle by `d` on every side.
    pub fn inflated(&self, d: T) -> Self {
        let two = T::lit(2.0);
        Self::new(self.x - d, self.y - d, self.w + two * d, self.h + two * d)
    }
}

/// Rotation amount in radians; positive turns clockwise on a y-down screen.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize, Deserialize)]
pub struct Angle<T> {
    pub radians: T,
}

impl<T: Real> Angle<T> {
    pub const fn from_radians(radians: T) -> Self {
        Self { radians }
    }

    pub fn from_degrees(degrees: T) -> Self {
        Self::from_radians(degrees.to_radians())
    }

    pub fn zero() -> Self {
        Self::from_radians(T::zero())
    }

    pub fn degrees(self) -> T {
        self.radians.to_degrees()
    }

    /// Equivalent angle in `(-π, π]`.
    pub fn normalized(self) -> Self {
        let pi = T::PI();
        let tau = pi + pi;
        let mut r = self.radians % tau;
        if r <= -pi {
            r = r + tau;
        } else if r > pi {
            r = r - tau;
        }
        Self::from_radians(r)
    }
}

impl<T: Real> Add for Angle<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::from_radians(self.radians + rhs.radians)
    }
}

impl<T: Real> Sub for Angle<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::from_radians(self.radians - rhs.radians)
    }
}

impl<T: Real> Neg for Angle<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_radians(-self.radians)
    }
}

/// Euclidean distance from `p` to the closed segment `ab`. `a == b` is allowed.
pub fn dist_point_segment<T: Real>(p: Point<T>, a: Point<T>, b: Point<T>) -> T {
    let ab = b - a;
    let len2 = ab.dot(ab);
    if len2 == T::zero() {
        return p.distance(a);
    }
    let t = ((p - a).dot(ab) / len2).max(T::zero()).min(T::one());
    p.distance(a + ab * t)
}

/// Half-plane test of `p` against every edge of a convex polygon.
///
/// Either winding is accepted as long as it is consistent. Points on an edge
/// count as inside.
pub fn point_in_convex_polygon<T: Real>(p: Point<T>, vertices: &[Point<T>]) -> bool {
    let n = vertices.len();
    if n < 3 {
        return false;
    }
    let mut positive = false;
    let mut negative = false;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        let c = (b - a).cross(p - a);
        if c > T::zero() {
            positive = true;
        } else if c < T::zero() {
            negative = true;
        }
        if positive && negative {
            return false;
        }
    }
    true
}

/// Rotates `p` about `pivot`; positive angles turn clockwise on screen.
pub fn rotate_point<T: Real>(p: Point<T>, pivot: Point<T>, angle: Angle<T>) -> Point<T> {
    let (sin, cos) = angle.radians.sin_cos();
    let d = p - pivot;
    Point::new(
        pivot.x + d.x * cos - d.y * sin,
        pivot.y + d.x * sin + d.y * cos,
    )
}

/// Smallest rectangle containing every input.
pub fn bounds_union<T: Real>(rects: &[Rect<T>]) -> Result<Rect<T>, GeometryError> {
    let (first, rest) = rects.split_first().ok_or(GeometryError::EmptyUnion)?;
    let (mut left, mut top, mut right, mut bottom) =
        (first.x, first.y, first.right(), first.bottom());
    for r in rest {
        left = left.min(r.x);
        top = top.min(r.y);
        right = right.max(r.right());
        bottom = bottom.max(r.bottom());
    }
    Ok(Rect::new(left, top, right - left, bottom - top))
}

/// Bounding box of a point set, `None` when empty.
pub fn points_bounds<T: Real>(points: &[Point<T>]) -> Option<Rect<T>> {
    let (first, rest) = points.split_first()?;
    let mut r = Rect::new(first.x, first.y, T::zero(), T::zero());
    for p in rest {
        r = bounds_union(&[r, Rect::new(p.x, p.y, T::zero(), T::zero())]).ok()?;
    }
    Some(r)
}

/// Twice the signed area; positive for clockwise-on-screen winding.
pub fn signed_area2<T: Real>(vertices: &[Point<T>]) -> T {
    let n = vertices.len();
    (0..n).fold(T::zero(), |acc, i| {
        acc + vertices[i].cross(vertices[(i + 1) % n])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn p(x: f64, y: f64) -> Point<f64> {
        Point::new(x, y)
    }

    fn square() -> Vec<Point<f64>> {
        vec![p(-10.0, -10.0), p(10.0, -10.0), p(10.0, 10.0), p(-10.0, 10.0)]
    }

    #[test]
    fn segment_distance_examples() {
        assert_eq!(dist_point_segment(p(5.0, 3.0), p(0.0, 0.0), p(10.0, 0.0)), 3.0);
        assert_eq!(dist_point_segment(p(-4.0, 0.0), p(0.0, 0.0), p(10.0, 0.0)), 4.0);
        let d = dist_point_segment(p(7.0, 7.0), p(3.0, 3.0), p(3.0, 3.0));
        assert!((d - 32f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn convex_polygon_examples() {
        assert!(point_in_convex_polygon(p(0.0, 0.0), &square()));
        assert!(point_in_convex_polygon(p(10.0, 0.0), &square()));
        assert!(!point_in_convex_polygon(p(10.001, 0.0), &square()));
        let mut ccw = square();
        ccw.reverse();
        assert!(point_in_convex_polygon(p(10.0, 0.0), &ccw));
        assert!(!point_in_convex_polygon(p(0.0, 10.5), &ccw));
    }

    #[test]
    fn rotation_examples() {
        let q = rotate_point(p(1.0, 0.0), p(0.0, 0.0), Angle::from_radians(PI / 2.0));
        assert!((q.x - 0.0).abs() < 1e-15 && (q.y - 1.0).abs() < 1e-15);
        let q = rotate_point(p(5.0, 5.0), p(5.0, 5.0), Angle::from_radians(1.234));
        assert_eq!(q, p(5.0, 5.0));
        let q = rotate_point(p(3.0, 4.0), p(0.0, 0.0), Angle::from_radians(PI));
        assert!((q.x + 3.0).abs() < 1e-12 && (q.y + 4.0).abs() < 1e-12);
    }

    #[test]
    fn union_examples() {
        let r = |x, y, w, h| Rect::new(x, y, w, h);
        assert_eq!(
            bounds_union(&[r(0.0, 0.0, 10.0, 10.0), r(20.0, 20.0, 10.0, 10.0)]).unwrap(),
            r(0.0, 0.0, 30.0, 30.0)
        );
        assert_eq!(bounds_union(&[r(5.0, 5.0, 1.0, 1.0)]).unwrap(), r(5.0, 5.0, 1.0, 1.0));
        assert_eq!(
            bounds_union(&[r(0.0, 0.0, 10.0, 10.0), r(2.0, 2.0, 3.0, 3.0)]).unwrap(),
            r(0.0, 0.0, 10.0, 10.0)
        );
        assert_eq!(bounds_union::<f64>(&[]), Err(GeometryError::EmptyUnion));
    }

    #[test]
    fn non_finite_rejected() {
        assert_eq!(Point::try_new(f64::NAN, 0.0), Err(GeometryError::NonFinite));
        assert_eq!(Point::try_new(0.0, f64::INFINITY), Err(GeometryError::NonFinite));
        assert_eq!(
            Rect::try_new(0.0, 0.0, -1.0, 2.0),
            Err(GeometryError::NegativeSize)
        );
    }

    #[test]
    fn angle_normalization() {
        let a = Angle::from_radians(3.0 * PI).normalized();
        assert!((a.radians - PI).abs() < 1e-12);
        let a = Angle::from_radians(-PI).normalized();
        assert!((a.radians - PI).abs() < 1e-12);
        let a = Angle::from_radians(-3.5 * PI).normalized();
        assert!((a.radians - 0.5 * PI).abs() < 1e-12);
    }

    #[test]
    fn works_in_single_precision() {
        let q = rotate_point(
            Point::<f32>::new(1.0, 0.0),
            Point::origin(),
            Angle::from_degrees(90.0),
        );
        assert!(q.x.abs() < 1e-6 && (q.y - 1.0).abs() < 1e-6);
        assert_eq!(
            dist_point_segment(Point::<f32>::new(5.0, 3.0), Point::origin(), Point::new(10.0, 0.0)),
            3.0
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn rotation_round_trips(
            x in -1e3f64..1e3, y in -1e3f64..1e3,
            cx in -1e3f64..1e3, cy in -1e3f64..1e3,
            theta in -10.0f64..10.0,
        ) {
            let a = Angle::from_radians(theta);
            let back = rotate_point(rotate_point(p(x, y), p(cx, cy), a), p(cx, cy), -a);
            prop_assert!((back.x - x).abs() < 1e-9 && (back.y - y).abs() < 1e-9);
        }

        #[test]
        fn segment_distance_symmetric(
            px in -100.0f64..100.0, py in -100.0f64..100.0,
            ax in -100.0f64..100.0, ay in -100.0f64..100.0,
            bx in -100.0f64..100.0, by in -100.0f64..100.0,
        ) {
            let d1 = dist_point_segment(p(px, py), p(ax, ay), p(bx, by));
            let d2 = dist_point_segment(p(px, py), p(bx, by), p(ax, ay));
            prop_assert!((d1 - d2).abs() < 1e-9);
            let degenerate = dist_point_segment(p(px, py), p(ax, ay), p(ax, ay));
            prop_assert_eq!(degenerate, p(px, py).distance(p(ax, ay)));
        }
    }
}
