//! Request/response protocol for hosts that embed the engine across a
//! message boundary (a browser canvas, a child process).
//!
//! Messages are JSON objects tagged by `type`:
//!
//! ```json
//! {"type":"init","sceneName":"polygon"}
//! {"type":"pointerDown","x":310,"y":250,"button":"right"}
//! {"type":"pointerMove","x":300,"y":270}
//! {"type":"getRenderModel","debug":true}
//! ```
//!
//! Every request gets exactly one response, in order.

use serde::{Deserialize, Serialize};

use crate::cover::CursorShape;
use crate::geometry::Point;
use crate::mover::PointerButton;
use crate::render::DrawCommand;
use crate::replay::{build_scene, SCENES};
use crate::scene::Scene;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "camelCase", rename_all_fields = "camelCase")]
pub enum Request {
    Init { scene_name: String },
    PointerDown { x: f64, y: f64, button: PointerButton },
    PointerMove { x: f64, y: f64 },
    PointerUp,
    GetCursor { x: f64, y: f64 },
    GetRenderModel {
        #[serde(default)]
        debug: bool,
    },
    SaveLayout,
    RestoreLayout { document: String },
    ListScenes,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "camelCase", rename_all_fields = "camelCase")]
pub enum Response {
    Ready { scene_name: String },
    PointerDown { caught: bool },
    /// `changed` tells the host to repaint.
    PointerMove { changed: bool },
    PointerUp { released: bool },
    Cursor { cursor: CursorShape },
    RenderModel { commands: Vec<DrawCommand> },
    Layout { document: String },
    Restored { warnings: Vec<String> },
    Scenes { names: Vec<String> },
    Error { message: String },
}

/// One engine instance behind the boundary.
#[derive(Debug, Default)]
pub struct Session {
    scene: Option<Scene>,
}

impl Session {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn scene(&self) -> Option<&Scene> {
        self.scene.as_ref()
    }

    pub fn handle(&mut self, request: Request) -> Response {
        if let Request::Init { scene_name } = &request {
            return match build_scene(scene_name) {
                Some(scene) => {
                    self.scene = Some(scene);
                    Response::Ready { scene_name: scene_name.clone() }
                }
                None => error(format!("unknown scene `{scene_name}`")),
            };
        }
        if let Request::ListScenes = request {
            return Response::Scenes { names: SCENES.iter().map(|s| s.to_string()).collect() };
        }
        let Some(scene) = self.scene.as_mut() else {
            return error("no scene; send `init` first".into());
        };
        match request {
            Request::PointerDown { x, y, button } => {
                Response::PointerDown { caught: scene.pointer_down(Point::new(x, y), button) }
            }
            Request::PointerMove { x, y } => Response::PointerMove { changed: scene.pointer_move(Point::new(x, y)) },
            Request::PointerUp => Response::PointerUp { released: scene.pointer_up() },
            Request::GetCursor { x, y } => Response::Cursor { cursor: scene.cursor(Point::new(x, y)) },
            Request::GetRenderModel { debug } => Response::RenderModel { commands: scene.render(debug) },
            Request::SaveLayout => Response::Layout { document: scene.save_text() },
            Request::RestoreLayout { document } => match scene.restore_text(&document) {
                Ok(warnings) => Response::Restored { warnings },
                Err(e) => error(e.to_string()),
            },
            Request::Init { .. } | Request::ListScenes => unreachable!("handled above"),
        }
    }

    /// Handles one JSON request; malformed input yields an `error` response.
    pub fn handle_json(&mut self, line: &str) -> String {
        let response = match serde_json::from_str::<Request>(line) {
            Ok(request) => self.handle(request),
            Err(e) => error(format!("bad request: {e}")),
        };
        serde_json::to_string(&response).expect("responses always serialize")
    }
}

fn error(message: String) -> Response {
    Response::Error { message }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::{json, Value};

    fn send(s: &mut Session, v: Value) -> Value {
        serde_json::from_str(&s.handle_json(&v.to_string())).unwrap()
    }

    #[test]
    fn drag_over_json() {
        let mut s = Session::new();
        assert_eq!(send(&mut s, json!({"type": "pointerUp"}))["type"], "error");
        assert_eq!(
            send(&mut s, json!({"type": "init", "sceneName": "calculator"})),
            json!({"type": "ready", "sceneName": "calculator"})
        );
        // b7 top strip
        assert_eq!(
            send(&mut s, json!({"type": "getCursor", "x": 34, "y": 129})),
            json!({"type": "cursor", "cursor": "move-all"})
        );
        assert_eq!(
            send(&mut s, json!({"type": "pointerDown", "x": 34, "y": 129, "button": "left"})),
            json!({"type": "pointerDown", "caught": true})
        );
        assert_eq!(
            send(&mut s, json!({"type": "pointerMove", "x": 44, "y": 129})),
            json!({"type": "pointerMove", "changed": true})
        );
        assert_eq!(send(&mut s, json!({"type": "pointerUp"})), json!({"type": "pointerUp", "released": true}));
        let doc = send(&mut s, json!({"type": "saveLayout"}));
        assert!(doc["document"].as_str().unwrap().contains("\nb7 framed 34 132 56 36 0\n"));
    }

    #[test]
    fn render_model_and_overlay() {
        let mut s = Session::new();
        send(&mut s, json!({"type": "init", "sceneName": "polygon"}));
        let plain = send(&mut s, json!({"type": "getRenderModel"}));
        let debug = send(&mut s, json!({"type": "getRenderModel", "debug": true}));
        let count = |v: &Value| v["commands"].as_array().unwrap().len();
        assert_eq!(count(&plain), 2);
        // 6 apices, center, 6 edges, 6 body triangles
        assert_eq!(count(&debug), 2 + 19);
        assert_eq!(debug["commands"][2]["type"], "debugNode");
        assert_eq!(debug["commands"][2]["shape"]["kind"], "circle");
        assert_eq!(plain["commands"][0]["type"], "polygonOutline");
    }

    #[test]
    fn restore_round_trip_and_errors() {
        let mut s = Session::new();
        send(&mut s, json!({"type": "init", "sceneName": "nnode"}));
        let saved = send(&mut s, json!({"type": "saveLayout"}))["document"].clone();
        let restored = send(&mut s, json!({"type": "restoreLayout", "document": saved}));
        assert_eq!(restored, json!({"type": "restored", "warnings": []}));
        let bad = send(&mut s, json!({"type": "restoreLayout", "document": "MRL1 nnode\ndisc disc 1 2\n"}));
        assert_eq!(bad["type"], "error");
        assert!(bad["message"].as_str().unwrap().contains("line 2"));
        assert_eq!(send(&mut s, json!({"type": "bogus"}))["type"], "error");
        assert_eq!(send(&mut s, json!({"type": "init", "sceneName": "x"}))["type"], "error");
        assert_eq!(send(&mut s, json!({"type": "listScenes"}))["names"].as_array().unwrap().len(), 7);
    }
}
