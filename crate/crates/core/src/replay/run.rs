use std::fmt::Write as _;

use thiserror::Error;

use super::catalog;
use super::trace::{Field, TraceLine};
use crate::geometry::Point;
use crate::layout::format_real;
use crate::scene::Scene;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RunError {
    #[error("unknown scene `{0}`")]
    UnknownScene(String),
    #[error("trace step {step}: no element tagged `{tag}`")]
    UnknownTag { step: usize, tag: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct AssertionOutcome {
    /// Index of the assertion in the trace.
    pub step: usize,
    pub line: TraceLine,
    pub actual: f64,
    pub passed: bool,
}

/// Result of replaying one trace.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub scene: String,
    pub events: usize,
    /// Pointer-downs that caught something.
    pub catches: usize,
    /// Pointer-moves that changed geometry.
    pub repaints: usize,
    pub assertions: Vec<AssertionOutcome>,
    /// Final layout document text.
    pub layout: String,
}

impl Report {
    pub fn passed(&self) -> usize {
        self.assertions.iter().filter(|a| a.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.assertions.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    /// Deterministic text form (without the layout).
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "scene {}", self.scene);
        let _ = writeln!(out, "events {} catches {} repaints {}", self.events, self.catches, self.repaints);
        let _ = writeln!(out, "assertions {} passed {} failed {}", self.assertions.len(), self.passed(), self.failed());
        for a in &self.assertions {
            let verdict = if a.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{verdict} {} (actual {})", a.line, format_real(a.actual));
        }
        out
    }
}

/// Replays `trace` on a fresh catalog scene.
pub fn run_trace(scene: &str, trace: &[TraceLine]) -> Result<Report, RunError> {
    let mut s = catalog::build(scene).ok_or_else(|| RunError::UnknownScene(scene.to_owned()))?;
    run_on(&mut s, trace)
}

/// Replays `trace` on an existing scene.
pub fn run_on(scene: &mut Scene, trace: &[TraceLine]) -> Result<Report, RunError> {
    let mut report = Report {
        scene: scene.id().to_owned(),
        events: 0,
        catches: 0,
        repaints: 0,
        assertions: Vec::new(),
        layout: String::new(),
    };
    for (step, line) in trace.iter().enumerate() {
        match line {
            TraceLine::Down { x, y, button } => {
                report.events += 1;
                if scene.pointer_down(Point::new(*x, *y), *button) {
                    report.catches += 1;
                }
            }
            TraceLine::Move { x, y } => {
                report.events += 1;
                if scene.pointer_move(Point::new(*x, *y)) {
                    report.repaints += 1;
                }
            }
            TraceLine::Up => {
                report.events += 1;
                scene.pointer_up();
            }
            TraceLine::Assert { tag, field, value, tol } => {
                let g = scene
                    .geometry(tag)
                    .map_err(|_| RunError::UnknownTag { step, tag: tag.clone() })?;
                let actual = match field {
                    Field::X => g.x,
                    Field::Y => g.y,
                    Field::W => g.w,
                    Field::H => g.h,
                    Field::Angle => g.angle,
                };
                let passed = (actual - value).abs() <= *tol;
                report.assertions.push(AssertionOutcome { step, line: line.clone(), actual, passed });
            }
        }
    }
    report.layout = scene.save_text();
    Ok(report)
}
