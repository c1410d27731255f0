//! Headless direct-manipulation engine.
//!
//! Every object is covered by sensitive nodes (circles, capsules, convex
//! polygons); a single [`Mover`] hit-tests those covers and turns pointer-down,
//! pointer-move and pointer-up into moving, resizing and rotating.
//!
//! The geometry, cover and mover layers are generic over the scalar type
//! ([`Real`], implemented for `f32` and `f64`). The element library, layout
//! persistence and trace replay run on `f64`; the aliases below name the
//! concrete types.

pub mod boundary;
pub mod cover;
pub mod elements;
pub mod frame;
pub mod geometry;
pub mod layout;
pub mod mover;
pub mod render;
pub mod replay;
pub mod scalar;
pub mod scene;

pub use cover::{make_n_node_border_cover, Cover, CoverError, CoverNode, CursorShape, MovementFreedom, NodeShape};
pub use frame::{make_rect_frame_cover, ResizePolicy, SizeLimits};
pub use geometry::{bounds_union, dist_point_segment, point_in_convex_polygon, rotate_point, Angle, GeometryError, Point, Rect, Size};
pub use mover::{Element, ElementId, Mover, MoverError, MoverState, NodeDrag, PointerButton, Released};
pub use scalar::Real;
pub use scene::{Scene, SceneError};
pub use layout::{LayoutDocument, LayoutError, LayoutRecord};
pub use elements::SceneElement;

pub type Point64 = Point<f64>;
pub type Rect64 = Rect<f64>;
pub type Size64 = Size<f64>;
pub type Angle64 = Angle<f64>;
pub type Cover64 = Cover<f64>;
pub type Point32 = Point<f32>;
pub type Rect32 = Rect<f32>;
pub type Cover32 = Cover<f32>;
