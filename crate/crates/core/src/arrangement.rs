//! Arrangements of registration marks and construction lines.
//!
//! The arrangement of a shape pairs the set `L` of carrier lines of its
//! segments with the set `P` of all pairwise intersection points of those
//! lines. A pair of arbitrary point and line sets is an arrangement for a
//! shape exactly when
//!
//! 1. every point lies on at least two of the lines, and
//! 2. every two nonparallel lines intersect in a point of the set.
//!
//! Both hold vacuously for the empty arrangement. Constructing from a shape
//! guarantees them; raw point/line sets must pass [`RawPointLineSet::validate`].
//!
//! Union, difference and intersection of arrangements are defined relative
//! to the corresponding shape operations, which always yields arrangements
//! again. The component-wise set operations (`naive_*`) are provided for
//! comparison; they frequently violate one of the axioms, which is the
//! reason the relative definitions exist.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::geom::{LineEq, Point2};
use crate::shape::Shape;

/// An unordered pair of distinct lines, stored sorted.
pub type LinePair = (LineEq, LineEq);

fn line_pair(a: &LineEq, b: &LineEq) -> LinePair {
    if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

/// A candidate pair of point and line sets, not yet known to satisfy the
/// arrangement axioms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RawPointLineSet {
    pub points: BTreeSet<Point2>,
    pub lines: BTreeSet<LineEq>,
}

impl RawPointLineSet {
    pub fn new(
        points: impl IntoIterator<Item = Point2>,
        lines: impl IntoIterator<Item = LineEq>,
    ) -> RawPointLineSet {
        RawPointLineSet {
            points: points.into_iter().collect(),
            lines: lines.into_iter().collect(),
        }
    }

    /// Checks both arrangement axioms exhaustively and reports every
    /// violation, not just the first.
    pub fn validate(&self) -> AxiomReport {
        let rule1_violations: BTreeSet<Point2> = self
            .points
            .iter()
            .filter(|p| self.lines.iter().filter(|l| l.contains(p)).count() < 2)
            .cloned()
            .collect();

        let mut rule2_violations: BTreeSet<LinePair> = BTreeSet::new();
        for (l1, l2) in self.lines.iter().tuple_combinations() {
            let met = l1.meet(l2).expect("set members are distinct lines");
            if let Some(q) = met {
                if !self.points.contains(&q) {
                    rule2_violations.insert(line_pair(l1, l2));
                }
            }
        }

        AxiomReport {
            valid: rule1_violations.is_empty() && rule2_violations.is_empty(),
            rule1_violations,
            rule2_violations,
        }
    }
}

/// Outcome of validating a raw point/line set against the two axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub valid: bool,
    /// Points lying on fewer than two of the lines.
    pub rule1_violations: BTreeSet<Point2>,
    /// Nonparallel line pairs whose intersection point is missing.
    pub rule2_violations: BTreeSet<LinePair>,
}

/// A point/line pair satisfying both arrangement axioms.
///
/// Only obtainable from a shape or from a raw set that validated cleanly.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Arrangement {
    points: BTreeSet<Point2>,
    lines: BTreeSet<LineEq>,
}

impl Arrangement {
    /// The empty arrangement, associated with the empty shape.
    pub fn empty() -> Arrangement {
        Arrangement::default()
    }

    /// The arrangement of a shape: carrier lines plus all their pairwise
    /// intersection points.
    ///
    /// Registration marks are recomputed from the lines, not read off the
    /// segment endpoints; two carriers may well cross outside every segment
    /// and that crossing is still a mark. Both axioms hold by construction.
    pub fn of(shape: &Shape) -> Arrangement {
        let lines = shape.carriers();
        let points = lines
            .iter()
            .tuple_combinations()
            .filter_map(|(l1, l2)| l1.meet(l2).expect("distinct carrier lines"))
            .collect();
        Arrangement { points, lines }
    }

    /// `A ∪ B` defined as the arrangement of the shape sum.
    pub fn union(s1: &Shape, s2: &Shape) -> Arrangement {
        Arrangement::of(&s1.sum(s2))
    }

    /// `A \ B` defined as the arrangement of the shape difference.
    pub fn difference(s1: &Shape, s2: &Shape) -> Arrangement {
        Arrangement::of(&s1.difference(s2))
    }

    /// `A ∩ B` defined as the arrangement of the shape product.
    pub fn intersection(s1: &Shape, s2: &Shape) -> Arrangement {
        Arrangement::of(&s1.product(s2))
    }

    /// Promotes a raw set that satisfies both axioms.
    pub fn try_from_raw(raw: RawPointLineSet) -> Result<Arrangement, Box<AxiomReport>> {
        let report = raw.validate();
        if report.valid {
            Ok(Arrangement {
                points: raw.points,
                lines: raw.lines,
            })
        } else {
            Err(Box::new(report))
        }
    }

    pub fn points(&self) -> &BTreeSet<Point2> {
        &self.points
    }

    pub fn lines(&self) -> &BTreeSet<LineEq> {
        &self.lines
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty() && self.lines.is_empty()
    }

    pub fn to_raw(&self) -> RawPointLineSet {
        RawPointLineSet {
            points: self.points.clone(),
            lines: self.lines.clone(),
        }
    }

    /// Component-wise set union. Not necessarily an arrangement: crossings
    /// between a line of `self` and a line of `other` are usually missing
    /// from the combined point set.
    pub fn naive_union(&self, other: &Arrangement) -> RawPointLineSet {
        RawPointLineSet {
            points: self.points.union(&other.points).cloned().collect(),
            lines: self.lines.union(&other.lines).cloned().collect(),
        }
    }

    /// Component-wise set difference. Not necessarily an arrangement:
    /// surviving points can be orphaned when their lines are removed.
    pub fn naive_difference(&self, other: &Arrangement) -> RawPointLineSet {
        RawPointLineSet {
            points: self.points.difference(&other.points).cloned().collect(),
            lines: self.lines.difference(&other.lines).cloned().collect(),
        }
    }

    /// Component-wise set intersection. Not necessarily an arrangement, and
    /// even when it is one it need not describe the product shape.
    pub fn naive_intersection(&self, other: &Arrangement) -> RawPointLineSet {
        RawPointLineSet {
            points: self.points.intersection(&other.points).cloned().collect(),
            lines: self.lines.intersection(&other.lines).cloned().collect(),
        }
    }
}
