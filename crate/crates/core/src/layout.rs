//! Line-oriented layout documents (`.mrl`).
//!
//! ```text
//! MRL1 <scene-id>
//! <tag> <kind> <x> <y> <w> <h> <angle>
//!   <child-tag> <child-kind> <x> <y> <w> <h> <angle>
//! ```
//!
//! Records appear in z-order (bottom first); child lines are indented by two
//! spaces per nesting level. Reals are written with 17 significant digits in
//! the shortest `%g` form, which round-trips every `f64` exactly.

use std::fmt::Write as _;

use thiserror::Error;

pub const MAGIC: &str = "MRL1";
pub const FILE_EXTENSION: &str = "mrl";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LayoutError {
    #[error("not a layout document: expected header `{MAGIC} <scene-id>`")]
    BadMagic,
    #[error("layout belongs to scene `{found}`, expected `{expected}`")]
    SceneMismatch { expected: String, found: String },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
}

/// Position, size and rotation of one record. Meaning of the fields depends
/// on the element kind; all of them are finite.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Geometry {
    pub x: f64,
    pub y: f64,
    pub w: f64,
    pub h: f64,
    pub angle: f64,
}

impl Geometry {
    pub fn of_rect(r: &crate::geometry::Rect<f64>) -> Self {
        Self { x: r.x, y: r.y, w: r.w, h: r.h, angle: 0.0 }
    }

    pub fn rect(&self) -> crate::geometry::Rect<f64> {
        crate::geometry::Rect::new(self.x, self.y, self.w, self.h)
    }

    /// Field by its trace name (`x`, `y`, `w`, `h`, `angle`).
    pub fn field(&self, name: &str) -> Option<f64> {
        match name {
            "x" => Some(self.x),
            "y" => Some(self.y),
            "w" => Some(self.w),
            "h" => Some(self.h),
            "angle" => Some(self.angle),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LayoutRecord {
    pub tag: String,
    pub kind: String,
    pub geometry: Geometry,
    pub children: Vec<LayoutRecord>,
}

impl LayoutRecord {
    pub fn leaf(tag: &str, kind: &str, geometry: Geometry) -> Self {
        Self { tag: tag.to_owned(), kind: kind.to_owned(), geometry, children: Vec::new() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LayoutDocument {
    pub scene_id: String,
    pub records: Vec<LayoutRecord>,
}

impl LayoutDocument {
    pub fn to_text(&self) -> String {
        let mut out = format!("{MAGIC} {}\n", self.scene_id);
        for record in &self.records {
            write_record(&mut out, record, 0);
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, LayoutError> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or(LayoutError::BadMagic)?;
        let mut head = header.split_whitespace();
        if head.next() != Some(MAGIC) {
            return Err(LayoutError::BadMagic);
        }
        let scene_id = head.next().ok_or(LayoutError::BadMagic)?.to_owned();
        if head.next().is_some() {
            return Err(LayoutError::BadMagic);
        }

        // Stack of open records, one per nesting level.
        let mut records: Vec<LayoutRecord> = Vec::new();
        let mut open: Vec<LayoutRecord> = Vec::new();
        for (index, line) in lines {
            let line_no = index + 1;
            if line.trim().is_empty() {
                continue;
            }
            let indent = line.len() - line.trim_start_matches(' ').len();
            if indent % 2 != 0 {
                return Err(malformed(line_no, "indentation must be a multiple of two spaces"));
            }
            let depth = indent / 2;
            if depth > open.len() {
                return Err(malformed(line_no, "child record without a parent"));
            }
            let record = parse_record(line[indent..].trim_end(), line_no)?;
            while open.len() > depth {
                close_one(&mut open, &mut records);
            }
            open.push(record);
        }
        while !open.is_empty() {
            close_one(&mut open, &mut records);
        }
        Ok(Self { scene_id, records })
    }
}

fn close_one(open: &mut Vec<LayoutRecord>, records: &mut Vec<LayoutRecord>) {
    let done = open.pop().expect("non-empty");
    match open.last_mut() {
        Some(parent) => parent.children.push(done),
        None => records.push(done),
    }
}

fn malformed(line: usize, message: impl Into<String>) -> LayoutError {
    LayoutError::Malformed { line, message: message.into() }
}

fn parse_record(line: &str, line_no: usize) -> Result<LayoutRecord, LayoutError> {
    let fields: Vec<&str> = line.split(' ').collect();
    if fields.len() != 7 || fields.iter().any(|f| f.is_empty()) {
        return Err(malformed(
            line_no,
            format!("expected `<tag> <kind> <x> <y> <w> <h> <angle>`, got {} fields", fields.len()),
        ));
    }
    let mut values = [0.0; 5];
    for (slot, (name, text)) in values
        .iter_mut()
        .zip(["x", "y", "w", "h", "angle"].iter().zip(&fields[2..]))
    {
        *slot = parse_real(text)
            .ok_or_else(|| malformed(line_no, format!("field {name}: `{text}` is not a finite number")))?;
    }
    let [x, y, w, h, angle] = values;
    Ok(LayoutRecord {
        tag: fields[0].to_owned(),
        kind: fields[1].to_owned(),
        geometry: Geometry { x, y, w, h, angle },
        children: Vec::new(),
    })
}

/// Parses a finite real; `inf`/`nan` spellings are rejected.
pub fn parse_real(text: &str) -> Option<f64> {
    text.parse::<f64>().ok().filter(|v| v.is_finite())
}

fn write_record(out: &mut String, record: &LayoutRecord, depth: usize) {
    let g = &record.geometry;
    let _ = writeln!(
        out,
        "{:indent$}{} {} {} {} {} {} {}",
        "",
        record.tag,
        record.kind,
        format_real(g.x),
        format_real(g.y),
        format_real(g.w),
        format_real(g.h),
        format_real(g.angle),
        indent = depth * 2
    );
    for child in &record.children {
        write_record(out, child, depth + 1);
    }
}

/// Renders `v` like C's `%.17g`: 17 significant digits, trailing zeros
/// dropped, exponent form outside `1e-4 <= |v| < 1e17`.
pub fn format_real(v: f64) -> String {
    if v == 0.0 {
        return if v.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{v:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..17).contains(&exp) {
        let m = strip_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (16 - exp) as usize;
        strip_zeros(&format!("{v:.decimals$}")).to_owned()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
