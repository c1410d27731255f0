//! The single supervisor that turns three pointer events into movements.
//!
//! Hosts forward pointer-down to [`Mover::catch`], pointer-move to
//! [`Mover::move_to`] (repainting when it returns true) and pointer-up to
//! [`Mover::release`]. One mover drives any number of elements of any kind.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cover::{Cover, CursorShape, MovementFreedom};
use crate::frame::{
    frame_roles, make_rect_frame_cover, EdgeDrag, SizeLimits, DEFAULT_FRAME_WIDTH,
};
use crate::geometry::{Angle, Point, Rect};
use crate::scalar::Real;

/// Registration handle; allocated in increasing order and never reused.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(u64);

impl ElementId {
    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointerButton {
    /// Forward movement and resizing.
    Left,
    /// Rotation.
    Right,
}

/// Rotation increment handed to an element during a right-button drag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation<T> {
    pub pivot: Point<T>,
    pub delta: Angle<T>,
}

/// Everything an element learns about one pointer step on one of its nodes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NodeDrag<T> {
    pub node: usize,
    /// Displacement, already projected on the node's movement freedom.
    pub dx: T,
    pub dy: T,
    /// Current pointer location.
    pub pointer: Point<T>,
    pub button: PointerButton,
    /// Set for right-button drags.
    pub rotation: Option<Rotation<T>>,
}

impl<T: Real> NodeDrag<T> {
    pub fn delta(&self) -> Point<T> {
        Point::new(self.dx, self.dy)
    }

    /// Pointer location at the previous step.
    pub fn previous_pointer(&self) -> Point<T> {
        self.pointer - self.delta()
    }
}

/// The moveable-object contract.
pub trait Element<T: Real> {
    /// Sensitive nodes for the current geometry; indices must be stable.
    fn define_cover(&self) -> Cover<T>;

    /// Translates the whole object.
    fn move_by(&mut self, dx: T, dy: T);

    /// Individual movement of node `drag.node`. Returns true iff the geometry
    /// changed, which also means the cover must be queried again.
    fn move_node(&mut self, drag: &NodeDrag<T>) -> bool;

    /// Current bounding box.
    fn bounds(&self) -> Rect<T>;

    fn rotatable(&self) -> bool {
        false
    }

    /// Pivot used when a right-button drag starts on `node`; `None` refuses rotation.
    fn rotation_pivot(&self, _node: usize) -> Option<Point<T>> {
        self.rotatable().then(|| self.bounds().center())
    }

    /// Called when a gesture starts on `node`.
    fn caught(&mut self, _node: usize) {}

    /// Called when the gesture ends.
    fn released(&mut self) {}
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DragMode<T> {
    Forward,
    Rotate {
        pivot: Point<T>,
        /// Pointer direction from the pivot at the last applied step.
        grab_angle: Angle<T>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Caught<T> {
    pub element: ElementId,
    pub node: usize,
    pub last_point: Point<T>,
    pub mode: DragMode<T>,
    pub freedom: MovementFreedom,
    pub cursor: CursorShape,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum MoverState<T> {
    #[default]
    Idle,
    Caught(Caught<T>),
}

/// What [`Mover::release`] let go of.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Released {
    pub element: ElementId,
    pub node: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoverError {
    #[error("element {0} is not registered")]
    UnknownElement(ElementId),
    #[error("z-order must list every registered element exactly once")]
    BadOrder,
}

struct Entry<E: ?Sized> {
    id: ElementId,
    element: Box<E>,
}

/// Element registry in z-order (last is topmost) plus the catch state machine.
pub struct Mover<T: Real, E: ?Sized + Element<T> = dyn Element<T>> {
    entries: Vec<Entry<E>>,
    next_id: u64,
    state: MoverState<T>,
}

impl<T: Real, E: ?Sized + Element<T>> Default for Mover<T, E> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Real, E: ?Sized + Element<T>> Mover<T, E> {
    pub fn new() -> Self {
        Self { entries: Vec::new(), next_id: 1, state: MoverState::Idle }
    }

    /// Adds `element` on top of the z-order.
    pub fn register(&mut self, element: Box<E>) -> ElementId {
        let id = ElementId(self.next_id);
        self.next_id += 1;
        self.entries.push(Entry { id, element });
        id
    }

    /// Removes an element, releasing it first when it is caught.
    pub fn unregister(&mut self, id: ElementId) -> Result<Box<E>, MoverError> {
        let pos = self.position(id)?;
        if self.caught_id() == Some(id) {
            self.release();
        }
        Ok(self.entries.remove(pos).element)
    }

    pub fn bring_to_front(&mut self, id: ElementId) -> Result<(), MoverError> {
        let pos = self.position(id)?;
        let entry = self.entries.remove(pos);
        self.entries.push(entry);
        Ok(())
    }

    /// Replaces the z-order; `order` runs bottom to top and must be a permutation.
    pub fn set_z_order(&mut self, order: &[ElementId]) -> Result<(), MoverError> {
        let mut rank = HashMap::with_capacity(order.len());
        for (i, id) in order.iter().enumerate() {
            if rank.insert(*id, i).is_some() {
                return Err(MoverError::BadOrder);
            }
        }
        if order.len() != self.entries.len() || self.entries.iter().any(|e| !rank.contains_key(&e.id)) {
            return Err(MoverError::BadOrder);
        }
        self.entries.sort_by_key(|e| rank[&e.id]);
        Ok(())
    }

    /// Ids from bottom to top.
    pub fn ids(&self) -> Vec<ElementId> {
        self.entries.iter().map(|e| e.id).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, id: ElementId) -> Option<&E> {
        self.entries.iter().find(|e| e.id == id).map(|e| &*e.element)
    }

    pub fn get_mut(&mut self, id: ElementId) -> Option<&mut E> {
        self.entries
            .iter_mut()
            .find(|e| e.id == id)
            .map(|e| &mut *e.element)
    }

    /// Elements from bottom to top.
    pub fn iter(&self) -> impl Iterator<Item = (ElementId, &E)> {
        self.entries.iter().map(|e| (e.id, &*e.element))
    }

    pub fn state(&self) -> &MoverState<T> {
        &self.state
    }

    pub fn caught_id(&self) -> Option<ElementId> {
        match self.state {
            MoverState::Caught(c) => Some(c.element),
            MoverState::Idle => None,
        }
    }

    /// Topmost element whose cover contains `p`, with the node index.
    ///
    /// A passive node stops the search: whatever lies underneath is hidden.
    pub fn hit(&self, p: Point<T>) -> Option<(ElementId, usize)> {
        for entry in self.entries.iter().rev() {
            let cover = entry.element.define_cover();
            if let Some(i) = cover.hit(p) {
                if cover.nodes()[i].is_passive() {
                    return None;
                }
                return Some((entry.id, i));
            }
        }
        None
    }

    /// Pointer-down. Returns whether an element was caught.
    pub fn catch(&mut self, p: Point<T>, button: PointerButton) -> bool {
        if matches!(self.state, MoverState::Caught(_)) {
            self.release();
        }
        if !p.is_finite() {
            return false;
        }
        let Some(entry) = self.entries.iter_mut().rev().find_map(|entry| {
            let cover = entry.element.define_cover();
            cover.hit(p).map(|i| (entry, cover.nodes()[i].clone(), i))
        }) else {
            return false;
        };
        let (entry, node, index) = entry;
        if node.is_passive() {
            return false;
        }
        let mode = match button {
            PointerButton::Left => DragMode::Forward,
            PointerButton::Right => match entry.element.rotation_pivot(index) {
                Some(pivot) => DragMode::Rotate { pivot, grab_angle: p.angle_from(pivot) },
                None => return false,
            },
        };
        entry.element.caught(index);
        self.state = MoverState::Caught(Caught {
            element: entry.id,
            node: index,
            last_point: p,
            mode,
            freedom: node.freedom,
            cursor: node.cursor,
        });
        true
    }

    /// Pointer-move. Returns true iff some geometry changed.
    pub fn move_to(&mut self, p: Point<T>) -> bool {
        let MoverState::Caught(mut caught) = self.state else {
            return false;
        };
        if !p.is_finite() {
            return false;
        }
        let Some(pos) = self.entries.iter().position(|e| e.id == caught.element) else {
            self.state = MoverState::Idle;
            return false;
        };
        let element = &mut self.entries[pos].element;
        let d = p - caught.last_point;
        caught.last_point = p;
        let changed = match caught.mode {
            DragMode::Forward => {
                let (dx, dy) = match caught.freedom {
                    MovementFreedom::Any | MovementFreedom::None => (d.x, d.y),
                    MovementFreedom::NS => (T::zero(), d.y),
                    MovementFreedom::WE => (d.x, T::zero()),
                };
                if dx == T::zero() && dy == T::zero() {
                    false
                } else if caught.freedom == MovementFreedom::None {
                    element.move_by(dx, dy);
                    true
                } else {
                    element.move_node(&NodeDrag {
                        node: caught.node,
                        dx,
                        dy,
                        pointer: p,
                        button: PointerButton::Left,
                        rotation: None,
                    })
                }
            }
            DragMode::Rotate { pivot, grab_angle } => {
                if p == pivot {
                    false
                } else {
                    let now = p.angle_from(pivot);
                    let delta = (now - grab_angle).normalized();
                    caught.mode = DragMode::Rotate { pivot, grab_angle: now };
                    delta.radians != T::zero()
                        && element.move_node(&NodeDrag {
                            node: caught.node,
                            dx: d.x,
                            dy: d.y,
                            pointer: p,
                            button: PointerButton::Right,
                            rotation: Some(Rotation { pivot, delta }),
                        })
                }
            }
        };
        self.state = MoverState::Caught(caught);
        changed
    }

    /// Pointer-up. Returns what was caught, if anything.
    pub fn release(&mut self) -> Option<Released> {
        let MoverState::Caught(caught) = std::mem::take(&mut self.state) else {
            return None;
        };
        if let Some(element) = self.get_mut(caught.element) {
            element.released();
        }
        Some(Released { element: caught.element, node: caught.node })
    }

    /// Cursor for hovering `p`; while caught, the caught node's cursor.
    pub fn cursor(&self, p: Point<T>) -> CursorShape {
        if let MoverState::Caught(c) = self.state {
            return c.cursor;
        }
        if !p.is_finite() {
            return CursorShape::Default;
        }
        self.hit(p)
            .and_then(|(id, i)| self.get(id).and_then(|e| e.define_cover().node(i).map(|n| n.cursor)))
            .unwrap_or_default()
    }

    fn position(&self, id: ElementId) -> Result<usize, MoverError> {
        self.entries
            .iter()
            .position(|e| e.id == id)
            .ok_or(MoverError::UnknownElement(id))
    }
}

impl<T: Real> Mover<T, dyn Element<T>> {
    /// Registers a plain rectangular control with an automatic frame cover
    /// whose resize nodes follow `limits`.
    pub fn register_control<C: Control<T> + 'static>(
        &mut self,
        control: C,
        limits: SizeLimits<T>,
    ) -> ElementId {
        self.register(Box::new(AutoFramed::new(control, limits)))
    }
}

/// A rectangular host object whose interior belongs to itself.
pub trait Control<T: Real> {
    fn rect(&self) -> Rect<T>;
    fn set_rect(&mut self, rect: Rect<T>);
}

impl<T: Real> Control<T> for Rect<T> {
    fn rect(&self) -> Rect<T> {
        *self
    }

    fn set_rect(&mut self, rect: Rect<T>) {
        *self = rect;
    }
}

/// Adapter that gives a [`Control`] the standard frame cover and behaviour.
#[derive(Debug, Clone)]
pub struct AutoFramed<C, T> {
    control: C,
    limits: SizeLimits<T>,
    frame_width: T,
    drag: EdgeDrag<T>,
}

impl<T: Real, C: Control<T>> AutoFramed<C, T> {
    /// Wraps `control`, clamping its current size into `limits`.
    pub fn new(mut control: C, limits: SizeLimits<T>) -> Self {
        let mut rect = control.rect();
        let size = limits.clamp(rect.size());
        rect.w = size.w;
        rect.h = size.h;
        control.set_rect(rect);
        Self { control, limits, frame_width: T::lit(DEFAULT_FRAME_WIDTH), drag: EdgeDrag::new() }
    }

    pub fn with_frame_width(mut self, frame_width: T) -> Self {
        self.frame_width = frame_width;
        self
    }

    pub fn control(&self) -> &C {
        &self.control
    }

    pub fn limits(&self) -> &SizeLimits<T> {
        &self.limits
    }
}

impl<T: Real, C: Control<T>> Element<T> for AutoFramed<C, T> {
    fn define_cover(&self) -> Cover<T> {
        make_rect_frame_cover(self.control.rect(), self.frame_width, self.limits.policy())
            .expect("limits keep the control non-degenerate")
    }

    fn move_by(&mut self, dx: T, dy: T) {
        let r = self.control.rect().translated(dx, dy);
        self.control.set_rect(r);
    }

    fn move_node(&mut self, drag: &NodeDrag<T>) -> bool {
        let Some(&role) = frame_roles(self.limits.policy()).get(drag.node) else {
            return false;
        };
        let mut r = self.control.rect();
        let changed = self.drag.apply(&mut r, role, drag.dx, drag.dy, &self.limits);
        self.control.set_rect(r);
        changed
    }

    fn bounds(&self) -> Rect<T> {
        self.control.rect()
    }

    fn caught(&mut self, _node: usize) {
        self.drag.reset();
    }

    fn released(&mut self) {
        self.drag.reset();
    }
}
