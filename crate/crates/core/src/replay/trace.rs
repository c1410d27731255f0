//! Pointer traces: one event or assertion per line.
//!
//! ```text
//! # drag the 7 key one column to the right
//! down 30 75 L
//! move 102 75
//! up
//! assert b7 x 92 0.001
//! ```

use std::fmt;

use thiserror::Error;

use crate::layout::parse_real;
use crate::mover::PointerButton;

/// A geometry field that assertions can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    X,
    Y,
    W,
    H,
    Angle,
}

impl Field {
    pub fn name(self) -> &'static str {
        match self {
            Field::X => "x",
            Field::Y => "y",
            Field::W => "w",
            Field::H => "h",
            Field::Angle => "angle",
        }
    }

    fn parse(text: &str) -> Option<Self> {
        Some(match text {
            "x" => Field::X,
            "y" => Field::Y,
            "w" => Field::W,
            "h" => Field::H,
            "angle" => Field::Angle,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum TraceLine {
    Down { x: f64, y: f64, button: PointerButton },
    Move { x: f64, y: f64 },
    Up,
    /// `tag` may address a child record as `parent/child`.
    Assert { tag: String, field: Field, value: f64, tol: f64 },
}

/// Shortest text that parses back to the same value.
struct Num(f64);

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.0.abs();
        if a != 0.0 && !(1e-4..1e16).contains(&a) {
            write!(f, "{:e}", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Display for TraceLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceLine::Down { x, y, button } => {
                let b = match button {
                    PointerButton::Left => "L",
                    PointerButton::Right => "R",
                };
                write!(f, "down {} {} {b}", Num(*x), Num(*y))
            }
            TraceLine::Move { x, y } => write!(f, "move {} {}", Num(*x), Num(*y)),
            TraceLine::Up => f.write_str("up"),
            TraceLine::Assert { tag, field, value, tol } => {
                write!(f, "assert {tag} {} {} {}", field.name(), Num(*value), Num(*tol))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct TraceError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

pub fn parse_trace(text: &str) -> Result<Vec<TraceLine>, TraceError> {
    let mut out = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or_default();
        if content.trim().is_empty() {
            continue;
        }
        out.push(parse_line(content, index + 1)?);
    }
    Ok(out)
}

/// Renders a trace that [`parse_trace`] reads back unchanged.
pub fn format_trace(lines: &[TraceLine]) -> String {
    lines.iter().map(|l| format!("{l}\n")).collect()
}

/// Whitespace-separated words with their 1-based columns.
fn words(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (start, c.is_whitespace()) {
            (None, false) => start = Some(i),
            (Some(s), true) => {
                out.push((line[..s].chars().count() + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn parse_line(line: &str, line_no: usize) -> Result<TraceLine, TraceError> {
    let words = words(line);
    let end_column = line.trim_end().chars().count() + 1;
    let err = |column: usize, message: String| TraceError { line: line_no, column, message };
    let arg = |i: usize, what: &str| {
        words.get(i).copied().ok_or_else(|| err(end_column, format!("missing {what}")))
    };
    let real = |i: usize, what: &str| {
        let (column, text) = arg(i, what)?;
        parse_real(text).ok_or_else(|| err(column, format!("{what}: `{text}` is not a finite number")))
    };
    let (column, verb) = words[0];
    let (parsed, arity) = match verb {
        "down" => {
            let (x, y) = (real(1, "x")?, real(2, "y")?);
            let (bc, b) = arg(3, "button (L or R)")?;
            let button = match b {
                "L" => PointerButton::Left,
                "R" => PointerButton::Right,
                _ => return Err(err(bc, format!("button must be L or R, got `{b}`"))),
            };
            (TraceLine::Down { x, y, button }, 4)
        }
        "move" => (TraceLine::Move { x: real(1, "x")?, y: real(2, "y")? }, 3),
        "up" => (TraceLine::Up, 1),
        "assert" => {
            let (_, tag) = arg(1, "element tag")?;
            let (fc, f) = arg(2, "field")?;
            let field =
                Field::parse(f).ok_or_else(|| err(fc, format!("field must be x, y, w, h or angle, got `{f}`")))?;
            let value = real(3, "value")?;
            let tol = real(4, "tolerance")?;
            if tol < 0.0 {
                return Err(err(words[4].0, "tolerance must not be negative".into()));
            }
            (TraceLine::Assert { tag: tag.to_owned(), field, value, tol }, 5)
        }
        other => return Err(err(column, format!("unknown command `{other}`"))),
    };
    if let Some(&(column, extra)) = words.get(arity) {
        return Err(err(column, format!("unexpected `{extra}`")));
    }
    Ok(parsed)
}
