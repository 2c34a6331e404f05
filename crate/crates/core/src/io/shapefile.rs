//! The plain-text shape file format.
//!
//! One record per line, `seg x1 y1 x2 y2`, each coordinate an integer or a
//! `p/q` rational. `#` starts a comment, blank lines are skipped, and an
//! empty file is the empty shape. Parsed input is reduced to maximal form;
//! when that changes anything, a diagnostic says so.

use thiserror::Error;

use crate::geom::{Point2, Segment};
use crate::rational::{format_rational, parse_rational};
use crate::shape::Shape;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeFileError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: zero-length segment")]
    DegenerateSegment { line: usize },
}

/// A parsed shape plus notes about what parsing had to do.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseOutcome {
    pub shape: Shape,
    /// Human-readable notes (currently: whether reduction merged input
    /// segments). Intended for a diagnostics channel such as stderr, never
    /// for the primary output stream.
    pub diagnostics: Vec<String>,
}

/// Parses the text of a shape file.
pub fn parse_shape(text: &str) -> Result<ParseOutcome, ShapeFileError> {
    let mut raw: Vec<Segment> = Vec::new();
    for (index, full_line) in text.lines().enumerate() {
        let line_no = index + 1;
        let content = full_line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        match tokens.next() {
            Some("seg") => {}
            Some(other) => {
                return Err(ShapeFileError::Malformed {
                    line: line_no,
                    message: format!("unknown record {other:?}, expected `seg`"),
                })
            }
            None => continue,
        }
        let mut coords = Vec::with_capacity(4);
        for _ in 0..4 {
            let token = tokens.next().ok_or_else(|| ShapeFileError::Malformed {
                line: line_no,
                message: "expected four coordinates after `seg`".to_string(),
            })?;
            let value = parse_rational(token).map_err(|e| ShapeFileError::Malformed {
                line: line_no,
                message: e.to_string(),
            })?;
            coords.push(value);
        }
        if let Some(extra) = tokens.next() {
            return Err(ShapeFileError::Malformed {
                line: line_no,
                message: format!("unexpected trailing token {extra:?}"),
            });
        }
        let [x1, y1, x2, y2]: [_; 4] = coords.try_into().expect("exactly four coordinates");
        let segment = Segment::new(Point2::new(x1, y1), Point2::new(x2, y2))
            .map_err(|_| ShapeFileError::DegenerateSegment { line: line_no })?;
        raw.push(segment);
    }

    let record_count = raw.len();
    let shape = Shape::from_segments(raw.clone());
    let mut diagnostics = Vec::new();
    let unchanged = record_count == shape.segment_count()
        && raw.iter().all(|s| shape.segments().contains(s));
    if !unchanged {
        diagnostics.push(format!(
            "reduced {record_count} input segment(s) to {} maximal segment(s)",
            shape.segment_count()
        ));
    }
    Ok(ParseOutcome { shape, diagnostics })
}

/// Canonical shape file text: one `seg` record per maximal segment, in
/// canonical order. Parsing it back yields the same shape.
pub fn serialize_shape(shape: &Shape) -> String {
    let mut out = String::new();
    for seg in shape.segments() {
        out.push_str(&format!(
            "seg {} {} {} {}\n",
            format_rational(&seg.p1().x),
            format_rational(&seg.p1().y),
            format_rational(&seg.p2().x),
            format_rational(&seg.p2().y),
        ));
    }
    out
}
