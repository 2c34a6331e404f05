//! Shapes as finite sets of maximal line segments, with the algebra of
//! sum, difference and product, and similarity transformations.
//!
//! A shape never stores two segments that are adjacent collinear or
//! overlapping collinear: every constructor funnels through the reduction
//! step, which merges touching or overlapping collinear input into maximal
//! segments. Collinear segments separated by a gap are kept apart. The empty
//! shape is a shape.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use crate::error::GeomError;
use crate::geom::{LineEq, Point2, Segment};
use crate::rational::Rational;

/// A finite set of maximal line segments.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Shape {
    segments: BTreeSet<Segment>,
}

/// Parameter intervals per carrier line; the working representation of the
/// reduction and of the interval algebra behind difference and product.
type SpanMap = BTreeMap<LineEq, Vec<(Rational, Rational)>>;

fn span_map(segments: impl IntoIterator<Item = Segment>) -> SpanMap {
    let mut map: SpanMap = BTreeMap::new();
    for seg in segments {
        let line = seg.carrier();
        map.entry(line).or_default().push(seg.span());
    }
    map
}

/// Merges sorted spans that touch or overlap into maximal ones.
fn merge_spans(mut spans: Vec<(Rational, Rational)>) -> Vec<(Rational, Rational)> {
    spans.sort();
    let mut merged: Vec<(Rational, Rational)> = Vec::with_capacity(spans.len());
    for (lo, hi) in spans {
        match merged.last_mut() {
            Some((_, prev_hi)) if lo <= *prev_hi => {
                if hi > *prev_hi {
                    *prev_hi = hi;
                }
            }
            _ => merged.push((lo, hi)),
        }
    }
    merged
}

fn segments_of_spans(line: &LineEq, spans: &[(Rational, Rational)]) -> Vec<Segment> {
    spans
        .iter()
        .map(|(lo, hi)| {
            Segment::new(line.point_at(lo), line.point_at(hi))
                .expect("positive-length span yields a segment")
        })
        .collect()
}

impl Shape {
    /// The empty shape.
    pub fn empty() -> Shape {
        Shape::default()
    }

    /// Reduces an arbitrary collection of segments to maximal form.
    ///
    /// Duplicates, adjacent collinear and overlapping collinear input are
    /// all merged; the result covers exactly the same points of the plane.
    pub fn from_segments(segments: impl IntoIterator<Item = Segment>) -> Shape {
        let mut out = BTreeSet::new();
        for (line, spans) in span_map(segments) {
            out.extend(segments_of_spans(&line, &merge_spans(spans)));
        }
        Shape { segments: out }
    }

    pub fn segments(&self) -> &BTreeSet<Segment> {
        &self.segments
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn segment_count(&self) -> usize {
        self.segments.len()
    }

    /// The distinct carrier lines of the segments, each listed once even
    /// when several gap-separated segments share it.
    pub fn carriers(&self) -> BTreeSet<LineEq> {
        self.segments.iter().map(Segment::carrier).collect()
    }

    /// Whether some segment of the shape passes through `p`.
    pub fn covers_point(&self, p: &Point2) -> bool {
        self.segments.iter().any(|s| s.contains(p))
    }

    /// Reduced union: `S1 + S2`.
    pub fn sum(&self, other: &Shape) -> Shape {
        Shape::from_segments(self.segments.iter().chain(&other.segments).cloned())
    }

    /// Removes the parts of `other` from `self`, carrier by carrier.
    ///
    /// Segments are closed and only positive-length remainders survive, so
    /// subtracting a segment that merely shares an endpoint removes nothing.
    pub fn difference(&self, other: &Shape) -> Shape {
        let subtrahend = span_map(other.segments.iter().cloned());
        let mut out: Vec<Segment> = Vec::new();
        for (line, spans) in span_map(self.segments.iter().cloned()) {
            let spans = merge_spans(spans);
            match subtrahend.get(&line) {
                None => out.extend(segments_of_spans(&line, &spans)),
                Some(cuts) => {
                    let cuts = merge_spans(cuts.clone());
                    for span in spans {
                        out.extend(segments_of_spans(&line, &subtract_span(&span, &cuts)));
                    }
                }
            }
        }
        Shape::from_segments(out)
    }

    /// Common part of the two shapes: positive-length overlaps on shared
    /// carriers. Carriers that only cross, or collinear segments touching at
    /// a point, contribute nothing.
    pub fn product(&self, other: &Shape) -> Shape {
        let right = span_map(other.segments.iter().cloned());
        let mut out: Vec<Segment> = Vec::new();
        for (line, spans) in span_map(self.segments.iter().cloned()) {
            let Some(other_spans) = right.get(&line) else {
                continue;
            };
            let theirs = merge_spans(other_spans.clone());
            for (lo1, hi1) in &merge_spans(spans) {
                for (lo2, hi2) in &theirs {
                    let lo = if lo1 > lo2 { lo1 } else { lo2 };
                    let hi = if hi1 < hi2 { hi1 } else { hi2 };
                    if lo < hi {
                        out.extend(segments_of_spans(&line, &[(lo.clone(), hi.clone())]));
                    }
                }
            }
        }
        Shape::from_segments(out)
    }

    /// Applies a similarity transformation to every segment.
    pub fn transform(&self, map: &AffineMap) -> Shape {
        Shape::from_segments(self.segments.iter().map(|s| {
            Segment::new(map.apply(s.p1()), map.apply(s.p2()))
                .expect("invertible maps preserve distinctness")
        }))
    }
}

/// Subtracts a sorted, disjoint list of cut spans from one span, keeping
/// the positive-length remainders. A remainder that degenerates to a single
/// point is dropped.
fn subtract_span(
    span: &(Rational, Rational),
    cuts: &[(Rational, Rational)],
) -> Vec<(Rational, Rational)> {
    let (lo, hi) = span;
    let mut cursor = lo.clone();
    let mut out = Vec::new();
    for (cut_lo, cut_hi) in cuts {
        if cut_hi <= lo || cut_lo >= hi {
            continue;
        }
        if *cut_lo > cursor {
            out.push((cursor.clone(), cut_lo.clone()));
        }
        if *cut_hi > cursor {
            cursor = cut_hi.clone();
        }
        if cursor >= *hi {
            break;
        }
    }
    if cursor < *hi {
        out.push((cursor, hi.clone()));
    }
    out
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "{{}}");
        }
        let mut first = true;
        write!(f, "{{ ")?;
        for seg in &self.segments {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{seg}")?;
            first = false;
        }
        write!(f, " }}")
    }
}

impl Add for &Shape {
    type Output = Shape;
    fn add(self, rhs: &Shape) -> Shape {
        self.sum(rhs)
    }
}

impl Sub for &Shape {
    type Output = Shape;
    fn sub(self, rhs: &Shape) -> Shape {
        self.difference(rhs)
    }
}

impl Mul for &Shape {
    type Output = Shape;
    fn mul(self, rhs: &Shape) -> Shape {
        self.product(rhs)
    }
}

/// A plane similarity: rotation or reflection composed with a uniform scale,
/// followed by a translation. These are the transformations shapes are
/// closed under; restricting rotations to rational cosine/sine pairs keeps
/// every coordinate rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    m11: Rational,
    m12: Rational,
    m21: Rational,
    m22: Rational,
    tx: Rational,
    ty: Rational,
}

impl AffineMap {
    /// Builds a map from matrix rows `[[m11, m12], [m21, m22]]` and a
    /// translation, rejecting singular matrices and matrices that are not
    /// scalar multiples of an orthogonal matrix.
    pub fn new(matrix: [[Rational; 2]; 2], translation: (Rational, Rational)) -> Result<AffineMap, GeomError> {
        let [[m11, m12], [m21, m22]] = matrix;
        let rotation_like = m11 == m22 && m12 == -m21.clone();
        let reflection_like = m11 == -m22.clone() && m12 == m21;
        if !rotation_like && !reflection_like {
            return Err(GeomError::InvalidTransform(
                "matrix is not a similarity (no shear, no non-uniform scale)",
            ));
        }
        if (&m11 * &m22 - &m12 * &m21).is_zero() {
            return Err(GeomError::InvalidTransform("matrix is singular"));
        }
        Ok(AffineMap {
            m11,
            m12,
            m21,
            m22,
            tx: translation.0,
            ty: translation.1,
        })
    }

    pub fn identity() -> AffineMap {
        AffineMap::uniform_scale(Rational::from_integer(1.into()))
            .expect("identity scale is valid")
    }

    pub fn translation(tx: Rational, ty: Rational) -> AffineMap {
        let one = Rational::from_integer(1.into());
        let zero = Rational::zero();
        AffineMap::new(
            [[one.clone(), zero.clone()], [zero, one]],
            (tx, ty),
        )
        .expect("translation is valid")
    }

    /// Rotation about the origin by a rational point of the unit circle.
    ///
    /// Requires `cos² + sin² = 1`; e.g. `(3/5, 4/5)` from the 3-4-5 triple.
    pub fn rotation(cos: Rational, sin: Rational) -> Result<AffineMap, GeomError> {
        let one = Rational::from_integer(1.into());
        if &cos * &cos + &sin * &sin != one {
            return Err(GeomError::InvalidTransform(
                "rotation pair does not lie on the unit circle",
            ));
        }
        AffineMap::new(
            [[cos.clone(), -sin.clone()], [sin, cos]],
            (Rational::zero(), Rational::zero()),
        )
    }

    /// Uniform scale about the origin by a nonzero factor.
    pub fn uniform_scale(factor: Rational) -> Result<AffineMap, GeomError> {
        let zero = Rational::zero();
        AffineMap::new(
            [[factor.clone(), zero.clone()], [zero.clone(), factor]],
            (zero.clone(), zero),
        )
    }

    /// Reflection about the x-axis.
    pub fn reflection_x() -> AffineMap {
        let one = Rational::from_integer(1.into());
        let zero = Rational::zero();
        AffineMap::new(
            [[one.clone(), zero.clone()], [zero.clone(), -one]],
            (zero.clone(), zero),
        )
        .expect("axis reflection is valid")
    }

    /// Reflection about the y-axis.
    pub fn reflection_y() -> AffineMap {
        let one = Rational::from_integer(1.into());
        let zero = Rational::zero();
        AffineMap::new(
            [[-one.clone(), zero.clone()], [zero.clone(), one]],
            (zero.clone(), zero),
        )
        .expect("axis reflection is valid")
    }

    /// The map applying `self` first and `after` second.
    pub fn then(&self, after: &AffineMap) -> AffineMap {
        AffineMap::new(
            [
                [
                    &after.m11 * &self.m11 + &after.m12 * &self.m21,
                    &after.m11 * &self.m12 + &after.m12 * &self.m22,
                ],
                [
                    &after.m21 * &self.m11 + &after.m22 * &self.m21,
                    &after.m21 * &self.m12 + &after.m22 * &self.m22,
                ],
            ],
            (
                &after.m11 * &self.tx + &after.m12 * &self.ty + &after.tx,
                &after.m21 * &self.tx + &after.m22 * &self.ty + &after.ty,
            ),
        )
        .expect("similarities compose to similarities")
    }

    pub fn apply(&self, p: &Point2) -> Point2 {
        Point2::new(
            &self.m11 * &p.x + &self.m12 * &p.y + &self.tx,
            &self.m21 * &p.x + &self.m22 * &p.y + &self.ty,
        )
    }

    pub fn matrix(&self) -> [[Rational; 2]; 2] {
        [
            [self.m11.clone(), self.m12.clone()],
            [self.m21.clone(), self.m22.clone()],
        ]
    }

    pub fn translation_part(&self) -> (Rational, Rational) {
        (self.tx.clone(), self.ty.clone())
    }
}
