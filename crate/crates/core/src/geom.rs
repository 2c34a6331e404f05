//! Geometric kernel: points, canonical line equations, segments, and the
//! exact predicates the rest of the crate is built on.
//!
//! Lines are stored as integer triples `(a, b, c)` of `a·x + b·y + c = 0`,
//! gcd-reduced and sign-normalized, so two segments lie on the same carrier
//! line exactly when their [`LineEq`]s are equal. No floating point is used
//! anywhere; parallelism, incidence and intersection are all decidable.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::GeomError;
use crate::rational::Rational;

/// A point of the rational plane.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Point2 {
        Point2 { x, y }
    }

    /// Integer-coordinate convenience, used heavily by tests and fixtures.
    pub fn from_ints(x: i64, y: i64) -> Point2 {
        Point2::new(
            Rational::from_integer(BigInt::from(x)),
            Rational::from_integer(BigInt::from(y)),
        )
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Canonical equation `a·x + b·y + c = 0` of an infinitely extending line.
///
/// Invariants: `(a, b) != (0, 0)`, `gcd(|a|, |b|, |c|) = 1`, and the sign is
/// fixed by `a > 0`, or `a = 0 && b > 0`. Every line of the rational plane
/// has exactly one such triple, which makes sets of construction lines
/// behave as sets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LineEq {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl LineEq {
    /// Canonicalizes a rational coefficient triple.
    ///
    /// Fails with [`GeomError::InvalidLine`] when `a = b = 0`.
    pub fn from_coeffs(a: &Rational, b: &Rational, c: &Rational) -> Result<LineEq, GeomError> {
        if a.is_zero() && b.is_zero() {
            return Err(GeomError::InvalidLine);
        }
        // Clear denominators, then reduce and fix the sign.
        let scale = a.denom().lcm(b.denom()).lcm(c.denom());
        let ai = (a * &scale).to_integer();
        let bi = (b * &scale).to_integer();
        let ci = (c * &scale).to_integer();
        Ok(Self::from_integer_coeffs_unchecked(ai, bi, ci))
    }

    /// Canonicalizes an integer coefficient triple.
    pub fn from_integer_coeffs(a: BigInt, b: BigInt, c: BigInt) -> Result<LineEq, GeomError> {
        if a.is_zero() && b.is_zero() {
            return Err(GeomError::InvalidLine);
        }
        Ok(Self::from_integer_coeffs_unchecked(a, b, c))
    }

    /// Small-integer convenience for tests and fixtures.
    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<LineEq, GeomError> {
        Self::from_integer_coeffs(BigInt::from(a), BigInt::from(b), BigInt::from(c))
    }

    fn from_integer_coeffs_unchecked(a: BigInt, b: BigInt, c: BigInt) -> LineEq {
        let g = a.gcd(&b).gcd(&c);
        let (mut a, mut b, mut c) = (&a / &g, &b / &g, &c / &g);
        let flip = a.is_negative() || (a.is_zero() && b.is_negative());
        if flip {
            a = -a;
            b = -b;
            c = -c;
        }
        LineEq { a, b, c }
    }

    /// The unique line through two distinct points.
    pub fn through(p: &Point2, q: &Point2) -> Result<LineEq, GeomError> {
        if p == q {
            return Err(GeomError::DegenerateSegment(p.to_string()));
        }
        let dx = &q.x - &p.x;
        let dy = &q.y - &p.y;
        // (dy)·x − (dx)·y + (dx·py − dy·px) = 0 passes through both points.
        let c = &dx * &p.y - &dy * &p.x;
        Ok(Self::from_coeffs(&dy, &(-dx), &c).expect("distinct points span a line"))
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    /// Exact incidence test: `a·x + b·y + c = 0`.
    pub fn contains(&self, p: &Point2) -> bool {
        (&p.x * &self.a + &p.y * &self.b + Rational::from_integer(self.c.clone())).is_zero()
    }

    /// Whether the two lines have no common point or are equal.
    pub fn is_parallel_to(&self, other: &LineEq) -> bool {
        (&self.a * &other.b - &other.a * &self.b).is_zero()
    }

    /// Intersection point of two distinct lines, `None` when parallel.
    ///
    /// Asking for the intersection of a line with itself is a caller bug and
    /// reports [`GeomError::IdenticalLines`].
    pub fn meet(&self, other: &LineEq) -> Result<Option<Point2>, GeomError> {
        if self == other {
            return Err(GeomError::IdenticalLines);
        }
        let det = &self.a * &other.b - &other.a * &self.b;
        if det.is_zero() {
            return Ok(None);
        }
        // Cramer's rule on the 2x2 system.
        let x = Rational::new(&self.b * &other.c - &other.b * &self.c, det.clone());
        let y = Rational::new(&other.a * &self.c - &self.a * &other.c, det);
        Ok(Some(Point2::new(x, y)))
    }

    /// True for lines of the form `x = k` (the one case where the
    /// x-coordinate is useless as a parameter along the line).
    pub fn is_vertical(&self) -> bool {
        self.b.is_zero()
    }

    /// Position of a point along the line: its x-coordinate, or the
    /// y-coordinate for vertical lines. Strictly monotone along the line.
    pub fn param_of(&self, p: &Point2) -> Rational {
        if self.is_vertical() {
            p.y.clone()
        } else {
            p.x.clone()
        }
    }

    /// Inverse of [`LineEq::param_of`]: the point of the line at parameter `t`.
    pub fn point_at(&self, t: &Rational) -> Point2 {
        if self.is_vertical() {
            // x = -c / a
            let x = Rational::new(-self.c.clone(), self.a.clone());
            Point2::new(x, t.clone())
        } else {
            // y = -(c + a·t) / b
            let y = -(Rational::from_integer(self.c.clone())
                + Rational::from_integer(self.a.clone()) * t)
                / Rational::from_integer(self.b.clone());
            Point2::new(t.clone(), y)
        }
    }
}

impl fmt::Display for LineEq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.a, self.b, self.c)
    }
}

/// How two segments relate with respect to the `co` relation.
///
/// `AdjacentCollinear` and `OverlappingCollinear` are the two configurations
/// a shape may not contain; collinear segments separated by a gap are fine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoClass {
    /// The segments lie on different carrier lines.
    DistinctCarriers,
    /// Same carrier, separated by a gap of positive length.
    CollinearDisjoint,
    /// Same carrier, touching at exactly one point.
    AdjacentCollinear,
    /// Same carrier, sharing a sub-segment of positive length.
    OverlappingCollinear,
}

impl CoClass {
    /// Whether the pair is forbidden inside a shape.
    pub fn is_co(self) -> bool {
        matches!(
            self,
            CoClass::AdjacentCollinear | CoClass::OverlappingCollinear
        )
    }
}

/// A line segment of positive length.
///
/// Endpoints are stored in lexicographic `(x, y)` order so that segment
/// equality is set equality of the endpoints.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    p1: Point2,
    p2: Point2,
}

impl Segment {
    pub fn new(a: Point2, b: Point2) -> Result<Segment, GeomError> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Segment { p1: a, p2: b }),
            std::cmp::Ordering::Greater => Ok(Segment { p1: b, p2: a }),
            std::cmp::Ordering::Equal => Err(GeomError::DegenerateSegment(a.to_string())),
        }
    }

    /// Integer-coordinate convenience, used heavily by tests and fixtures.
    pub fn from_ints(x1: i64, y1: i64, x2: i64, y2: i64) -> Result<Segment, GeomError> {
        Segment::new(Point2::from_ints(x1, y1), Point2::from_ints(x2, y2))
    }

    pub fn p1(&self) -> &Point2 {
        &self.p1
    }

    pub fn p2(&self) -> &Point2 {
        &self.p2
    }

    /// The infinitely extending line containing this segment.
    pub fn carrier(&self) -> LineEq {
        LineEq::through(&self.p1, &self.p2).expect("segment endpoints are distinct")
    }

    /// Parameter interval of the segment along its carrier. `lo < hi` holds
    /// because the endpoint order agrees with the carrier parameter.
    pub fn span(&self) -> (Rational, Rational) {
        let line = self.carrier();
        (line.param_of(&self.p1), line.param_of(&self.p2))
    }

    /// Exact membership test, endpoints included.
    pub fn contains(&self, p: &Point2) -> bool {
        let line = self.carrier();
        if !line.contains(p) {
            return false;
        }
        let t = line.param_of(p);
        let (lo, hi) = self.span();
        lo <= t && t <= hi
    }

    /// Classifies this segment against another; see [`CoClass`].
    pub fn co_classify(&self, other: &Segment) -> CoClass {
        if self.carrier() != other.carrier() {
            return CoClass::DistinctCarriers;
        }
        let (lo1, hi1) = self.span();
        let (lo2, hi2) = other.span();
        if hi1 < lo2 || hi2 < lo1 {
            CoClass::CollinearDisjoint
        } else if hi1 == lo2 || hi2 == lo1 {
            CoClass::AdjacentCollinear
        } else {
            CoClass::OverlappingCollinear
        }
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -- {}", self.p1, self.p2)
    }
}
