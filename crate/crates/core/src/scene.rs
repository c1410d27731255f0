//! A named set of tagged elements driven by one [`Mover`], with layout
//! save/restore and invariant audits.

use std::collections::HashMap;

use thiserror::Error;

use crate::cover::CursorShape;
use crate::elements::SceneElement;
use crate::geometry::Point;
use crate::layout::{Geometry, LayoutDocument, LayoutError, LayoutRecord};
use crate::mover::{ElementId, Mover, PointerButton};
use crate::render::DrawCommand;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SceneError {
    #[error("tag `{0}` is already used in this scene")]
    DuplicateTag(String),
    #[error("tag `{0}` must be non-empty and contain no whitespace or `/`")]
    BadTag(String),
    #[error("no element tagged `{0}`")]
    UnknownTag(String),
    #[error(transparent)]
    Layout(#[from] LayoutError),
}

pub struct Scene {
    id: String,
    mover: Mover<f64, dyn SceneElement>,
    tags: HashMap<String, ElementId>,
    names: HashMap<ElementId, String>,
}

impl std::fmt::Debug for Scene {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Scene").field("id", &self.id).field("tags", &self.tags_in_z_order()).finish()
    }
}

fn valid_tag(tag: &str) -> bool {
    !tag.is_empty() && !tag.chars().any(|c| c.is_whitespace() || c == '/')
}

impl Scene {
    /// # Panics
    /// When `id` is not a valid tag (it is written into layout headers).
    pub fn new(id: &str) -> Self {
        assert!(valid_tag(id), "scene id `{id}` must be a single word");
        Self { id: id.to_owned(), mover: Mover::new(), tags: HashMap::new(), names: HashMap::new() }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    /// Registers `element` on top of the z-order.
    pub fn add(&mut self, tag: &str, element: Box<dyn SceneElement>) -> Result<ElementId, SceneError> {
        if !valid_tag(tag) {
            return Err(SceneError::BadTag(tag.to_owned()));
        }
        if self.tags.contains_key(tag) {
            return Err(SceneError::DuplicateTag(tag.to_owned()));
        }
        let id = self.mover.register(element);
        self.tags.insert(tag.to_owned(), id);
        self.names.insert(id, tag.to_owned());
        Ok(id)
    }

    pub fn len(&self) -> usize {
        self.mover.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mover.is_empty()
    }

    pub fn id_of(&self, tag: &str) -> Option<ElementId> {
        self.tags.get(tag).copied()
    }

    pub fn tag_of(&self, id: ElementId) -> Option<&str> {
        self.names.get(&id).map(String::as_str)
    }

    pub fn element(&self, tag: &str) -> Option<&dyn SceneElement> {
        self.mover.get(self.id_of(tag)?)
    }

    pub fn element_mut(&mut self, tag: &str) -> Option<&mut (dyn SceneElement + 'static)> {
        let id = self.id_of(tag)?;
        self.mover.get_mut(id)
    }

    pub fn mover(&self) -> &Mover<f64, dyn SceneElement> {
        &self.mover
    }

    pub fn mover_mut(&mut self) -> &mut Mover<f64, dyn SceneElement> {
        &mut self.mover
    }

    /// Tags from bottom to top.
    pub fn tags_in_z_order(&self) -> Vec<&str> {
        self.mover.iter().map(|(id, _)| self.names[&id].as_str()).collect()
    }

    pub fn pointer_down(&mut self, p: Point<f64>, button: PointerButton) -> bool {
        self.mover.catch(p, button)
    }

    pub fn pointer_move(&mut self, p: Point<f64>) -> bool {
        self.mover.move_to(p)
    }

    pub fn pointer_up(&mut self) -> bool {
        self.mover.release().is_some()
    }

    pub fn cursor(&self, p: Point<f64>) -> CursorShape {
        self.mover.cursor(p)
    }

    /// Geometry of a record addressed by `tag` or `tag/child/...`.
    pub fn geometry(&self, path: &str) -> Result<Geometry, SceneError> {
        let unknown = || SceneError::UnknownTag(path.to_owned());
        let mut parts = path.split('/');
        let top = self.element(parts.next().unwrap_or_default()).ok_or_else(unknown)?;
        let mut geometry = top.geometry();
        let mut children = top.child_records();
        for part in parts {
            let rec = children.into_iter().find(|c| c.tag == part).ok_or_else(unknown)?;
            geometry = rec.geometry;
            children = rec.children;
        }
        Ok(geometry)
    }

    pub fn save_layout(&self) -> LayoutDocument {
        let records = self
            .mover
            .iter()
            .map(|(id, e)| LayoutRecord {
                tag: self.names[&id].clone(),
                kind: e.kind().to_owned(),
                geometry: e.geometry(),
                children: e.child_records(),
            })
            .collect();
        LayoutDocument { scene_id: self.id.clone(), records }
    }

    pub fn save_text(&self) -> String {
        self.save_layout().to_text()
    }

    /// Applies a saved layout. Returns warnings for records that were
    /// skipped or adjusted.
    ///
    /// Elements without a record keep their geometry and go to the bottom of
    /// the z-order, in their current order; the others follow in document
    /// order. Any drag in progress is released first.
    pub fn restore_layout(&mut self, doc: &LayoutDocument) -> Result<Vec<String>, SceneError> {
        if doc.scene_id != self.id {
            return Err(LayoutError::SceneMismatch { expected: self.id.clone(), found: doc.scene_id.clone() }.into());
        }
        self.mover.release();
        let mut warnings = Vec::new();
        let mut restored = Vec::new();
        for rec in &doc.records {
            let Some(id) = self.id_of(&rec.tag) else {
                warnings.push(format!("unknown tag `{}` ignored", rec.tag));
                continue;
            };
            if restored.contains(&id) {
                warnings.push(format!("duplicate record for `{}` ignored", rec.tag));
                continue;
            }
            let element = self.mover.get_mut(id).expect("tags map to registered elements");
            if element.kind() != rec.kind {
                warnings.push(format!("`{}` is a {}, record says {}; ignored", rec.tag, element.kind(), rec.kind));
                continue;
            }
            element.restore(&rec.geometry, &rec.children, &mut warnings);
            restored.push(id);
        }
        let mut order: Vec<ElementId> = self.mover.ids().into_iter().filter(|id| !restored.contains(id)).collect();
        order.extend(restored);
        self.mover.set_z_order(&order).expect("order is a permutation of the registered ids");
        Ok(warnings)
    }

    pub fn restore_text(&mut self, text: &str) -> Result<Vec<String>, SceneError> {
        self.restore_layout(&LayoutDocument::parse(text)?)
    }

    /// Checks every element's invariants; the error names the element.
    pub fn audit(&self) -> Result<(), String> {
        for (id, e) in self.mover.iter() {
            e.audit().map_err(|err| format!("{}: {err}", self.names[&id]))?;
        }
        Ok(())
    }

    /// Draw commands back to front; with `debug`, each element's cover
    /// nodes follow its own drawing.
    pub fn render(&self, debug: bool) -> Vec<DrawCommand> {
        let mut out = Vec::new();
        for (_, e) in self.mover.iter() {
            e.render(&mut out);
            if debug {
                out.extend(
                    e.define_cover()
                        .nodes()
                        .iter()
                        .map(|n| DrawCommand::DebugNode { shape: n.shape.clone(), freedom: n.freedom }),
                );
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elements::FramedControl;
    use crate::geometry::Rect;

    fn scene() -> Scene {
        let mut s = Scene::new("demo");
        s.add("ok", Box::new(FramedControl::fixed(Rect::new(10.0, 20.0, 80.0, 24.0), "OK"))).unwrap();
        s.add("cancel", Box::new(FramedControl::fixed(Rect::new(100.0, 20.0, 80.0, 24.0), "Cancel")))
            .unwrap();
        s
    }

    #[test]
    fn empty_scene_is_header_only() {
        assert_eq!(Scene::new("empty").save_text(), "MRL1 empty\n");
    }

    #[test]
    fn one_control_one_line() {
        let mut s = Scene::new("one");
        s.add("ok", Box::new(FramedControl::fixed(Rect::new(10.0, 20.0, 80.0, 24.0), "OK"))).unwrap();
        assert_eq!(s.save_text(), "MRL1 one\nok framed 10 20 80 24 0\n");
    }

    #[test]
    fn tags_are_checked() {
        let mut s = scene();
        let dup = s.add("ok", Box::new(FramedControl::fixed(Rect::new(0.0, 0.0, 1.0, 1.0), "")));
        assert_eq!(dup.unwrap_err(), SceneError::DuplicateTag("ok".into()));
        let bad = s.add("a b", Box::new(FramedControl::fixed(Rect::new(0.0, 0.0, 1.0, 1.0), "")));
        assert_eq!(bad.unwrap_err(), SceneError::BadTag("a b".into()));
    }

    #[test]
    fn restore_geometry_z_order_and_warnings() {
        let mut s = scene();
        let mut doc = s.save_layout();
        doc.records.reverse();
        doc.records[0].geometry.x = 300.0;
        doc.records.push(LayoutRecord::leaf("ghost", "framed", Geometry::default()));
        let warnings = s.restore_layout(&doc).unwrap();
        assert_eq!(warnings.len(), 1);
        assert_eq!(s.tags_in_z_order(), ["cancel", "ok"]);
        assert_eq!(s.geometry("cancel").unwrap().x, 300.0);
    }

    #[test]
    fn missing_elements_go_to_the_bottom() {
        let mut s = scene();
        let mut doc = s.save_layout();
        doc.records.retain(|r| r.tag == "ok");
        s.restore_layout(&doc).unwrap();
        assert_eq!(s.tags_in_z_order(), ["cancel", "ok"]);
    }

    #[test]
    fn scene_mismatch_and_truncation() {
        let mut s = scene();
        let err = s.restore_text("MRL1 other\n").unwrap_err();
        assert!(matches!(err, SceneError::Layout(LayoutError::SceneMismatch { .. })));
        let err = s.restore_text("MRL1 demo\nok framed 10 20 80\n").unwrap_err();
        assert!(matches!(err, SceneError::Layout(LayoutError::Malformed { line: 2, .. })), "{err:?}");
    }
}
