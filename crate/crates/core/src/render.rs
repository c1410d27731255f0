//! Renderer-neutral draw commands produced from scene geometry.

use serde::{Deserialize, Serialize};

use crate::cover::{MovementFreedom, NodeShape};
use crate::geometry::{Point, Rect};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum DrawCommand {
    FilledRect {
        rect: Rect<f64>,
        style: String,
    },
    PolygonOutline {
        vertices: Vec<Point<f64>>,
        style: String,
    },
    CircleOutline {
        center: Point<f64>,
        r: f64,
        style: String,
    },
    Text {
        content: String,
        position: Point<f64>,
        /// Radians, clockwise.
        angle: f64,
        style: String,
    },
    DebugNode {
        shape: NodeShape<f64>,
        freedom: MovementFreedom,
    },
}

impl DrawCommand {
    pub fn filled(rect: Rect<f64>, style: &str) -> Self {
        DrawCommand::FilledRect { rect, style: style.to_owned() }
    }

    pub fn outline(vertices: Vec<Point<f64>>, style: &str) -> Self {
        DrawCommand::PolygonOutline { vertices, style: style.to_owned() }
    }

    pub fn circle(center: Point<f64>, r: f64, style: &str) -> Self {
        DrawCommand::CircleOutline { center, r, style: style.to_owned() }
    }

    pub fn text(content: &str, position: Point<f64>, angle: f64, style: &str) -> Self {
        DrawCommand::Text { content: content.to_owned(), position, angle, style: style.to_owned() }
    }
}
