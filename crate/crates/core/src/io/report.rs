//! The JSON report document emitted by the CLI, and the JSON input format
//! for raw point/line sets.
//!
//! Rationals travel as `"p/q"` strings so the round trip stays exact; line
//! coefficients are integers and travel as JSON numbers (arbitrary
//! precision, so they never overflow or round). Key order is fixed by the
//! struct definitions and all arrays are canonically sorted, which makes
//! repeated runs byte-identical.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Number;
use thiserror::Error;

use crate::arrangement::{Arrangement, AxiomReport, RawPointLineSet};
use crate::determinacy::DeterminacyVerdict;
use crate::geom::{LineEq, Point2};
use crate::incidence::{GeometryClass, IncidenceStructure};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::shape::Shape;

fn big_number(value: &BigInt) -> Number {
    Number::from_str(&value.to_string()).expect("integer text is a valid JSON number")
}

fn point_strings(p: &Point2) -> [String; 2] {
    [format_rational(&p.x), format_rational(&p.y)]
}

fn line_numbers(l: &LineEq) -> [Number; 3] {
    [big_number(l.a()), big_number(l.b()), big_number(l.c())]
}

#[derive(Debug, Clone, Serialize)]
pub struct ShapeSection {
    pub segment_count: usize,
    pub segments: Vec<[String; 4]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ArrangementSection {
    pub lines: Vec<[Number; 3]>,
    pub points: Vec<[String; 2]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IncidenceSection {
    pub points: Vec<String>,
    pub lines: Vec<String>,
    pub flags: Vec<[String; 2]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DeterminacySection {
    pub determinate: bool,
    pub reason: String,
    pub mark_count: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomSection {
    pub valid: bool,
    pub rule1_violations: Vec<[String; 2]>,
    pub rule2_violations: Vec<[[Number; 3]; 2]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NaiveSection {
    pub lines: Vec<[Number; 3]>,
    pub points: Vec<[String; 2]>,
    pub axiom_report: AxiomSection,
}

/// The one document every report-producing command emits. Sections are
/// present when the command computed them.
#[derive(Debug, Clone, Default, Serialize)]
pub struct ReportDocument {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shape: Option<ShapeSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arrangement: Option<ArrangementSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub incidence: Option<IncidenceSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub geometry_class: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub determinacy: Option<DeterminacySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axiom_report: Option<AxiomSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub naive: Option<NaiveSection>,
}

impl ReportDocument {
    pub fn new() -> ReportDocument {
        ReportDocument::default()
    }

    pub fn with_shape(mut self, shape: &Shape) -> Self {
        self.shape = Some(ShapeSection {
            segment_count: shape.segment_count(),
            segments: shape
                .segments()
                .iter()
                .map(|s| {
                    [
                        format_rational(&s.p1().x),
                        format_rational(&s.p1().y),
                        format_rational(&s.p2().x),
                        format_rational(&s.p2().y),
                    ]
                })
                .collect(),
        });
        self
    }

    pub fn with_arrangement(mut self, arrangement: &Arrangement) -> Self {
        self.arrangement = Some(ArrangementSection {
            lines: arrangement.lines().iter().map(line_numbers).collect(),
            points: arrangement.points().iter().map(point_strings).collect(),
        });
        self
    }

    pub fn with_incidence(mut self, structure: &IncidenceStructure) -> Self {
        self.incidence = Some(IncidenceSection {
            points: structure.point_labels().to_vec(),
            lines: structure.line_labels().to_vec(),
            flags: structure
                .flags()
                .iter()
                .map(|&(p, l)| {
                    [
                        structure.point_labels()[p].clone(),
                        structure.line_labels()[l].clone(),
                    ]
                })
                .collect(),
        });
        self
    }

    pub fn with_geometry_class(mut self, class: GeometryClass) -> Self {
        self.geometry_class = Some(class.as_str().to_string());
        self
    }

    pub fn with_determinacy(mut self, verdict: &DeterminacyVerdict) -> Self {
        self.determinacy = Some(DeterminacySection {
            determinate: verdict.determinate,
            reason: verdict.reason.as_str().to_string(),
            mark_count: verdict.mark_count,
        });
        self
    }

    pub fn with_axiom_report(mut self, report: &AxiomReport) -> Self {
        self.axiom_report = Some(axiom_section(report));
        self
    }

    pub fn with_naive(mut self, raw: &RawPointLineSet, report: &AxiomReport) -> Self {
        self.naive = Some(NaiveSection {
            lines: raw.lines.iter().map(line_numbers).collect(),
            points: raw.points.iter().map(point_strings).collect(),
            axiom_report: axiom_section(report),
        });
        self
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut text =
            serde_json::to_string_pretty(self).expect("report document always serializes");
        text.push('\n');
        text
    }
}

fn axiom_section(report: &AxiomReport) -> AxiomSection {
    AxiomSection {
        valid: report.valid,
        rule1_violations: report.rule1_violations.iter().map(point_strings).collect(),
        rule2_violations: report
            .rule2_violations
            .iter()
            .map(|(l1, l2)| [line_numbers(l1), line_numbers(l2)])
            .collect(),
    }
}

/// Errors in the raw point/line JSON input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RawSetError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("{0}")]
    Schema(String),
}

/// Parses `{"points": [[x, y], …], "lines": [[a, b, c], …]}`.
///
/// Coordinates and coefficients are integers or `"p/q"` strings; both keys
/// may be omitted. Line triples are canonicalized, so duplicates collapse.
pub fn parse_raw_point_line_set(text: &str) -> Result<RawPointLineSet, RawSetError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| RawSetError::Json(e.to_string()))?;
    let object = value
        .as_object()
        .ok_or_else(|| RawSetError::Schema("top level must be an object".to_string()))?;
    for key in object.keys() {
        if key != "points" && key != "lines" {
            return Err(RawSetError::Schema(format!("unknown key {key:?}")));
        }
    }

    let mut raw = RawPointLineSet::default();
    if let Some(points) = object.get("points") {
        for (index, entry) in expect_array(points, "points")?.iter().enumerate() {
            let coords = expect_tuple::<2>(entry, &format!("points[{index}]"))?;
            let [x, y] = coords;
            raw.points.insert(Point2::new(x, y));
        }
    }
    if let Some(lines) = object.get("lines") {
        for (index, entry) in expect_array(lines, "lines")?.iter().enumerate() {
            let context = format!("lines[{index}]");
            let [a, b, c] = expect_tuple::<3>(entry, &context)?;
            let line = LineEq::from_coeffs(&a, &b, &c)
                .map_err(|e| RawSetError::Schema(format!("{context}: {e}")))?;
            raw.lines.insert(line);
        }
    }
    Ok(raw)
}

fn expect_array<'a>(
    value: &'a serde_json::Value,
    context: &str,
) -> Result<&'a Vec<serde_json::Value>, RawSetError> {
    value
        .as_array()
        .ok_or_else(|| RawSetError::Schema(format!("{context} must be an array")))
}

fn expect_tuple<const N: usize>(
    value: &serde_json::Value,
    context: &str,
) -> Result<[Rational; N], RawSetError> {
    let items = expect_array(value, context)?;
    if items.len() != N {
        return Err(RawSetError::Schema(format!(
            "{context} must have exactly {N} entries, found {}",
            items.len()
        )));
    }
    let mut out = Vec::with_capacity(N);
    for (i, item) in items.iter().enumerate() {
        out.push(coordinate(item).map_err(|msg| {
            RawSetError::Schema(format!("{context}[{i}]: {msg}"))
        })?);
    }
    Ok(out.try_into().expect("length checked above"))
}

fn coordinate(value: &serde_json::Value) -> Result<Rational, String> {
    match value {
        serde_json::Value::Number(n) => {
            let text = n.to_string();
            if text.contains(['.', 'e', 'E']) {
                return Err(format!(
                    "non-integer number {text}; use a \"p/q\" string for rationals"
                ));
            }
            BigInt::from_str(&text)
                .map(Rational::from_integer)
                .map_err(|_| format!("unreadable integer {text}"))
        }
        serde_json::Value::String(s) => parse_rational(s).map_err(|e| e.to_string()),
        other => Err(format!("expected number or \"p/q\" string, found {other}")),
    }
}
