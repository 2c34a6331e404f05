//! Deciding whether a shape on the left side of a rule can be matched by
//! definite transformations.
//!
//! The decision runs over the shape's arrangement: a point-line geometry
//! always gives a determinate rule, and otherwise two registration marks
//! suffice. The empty shape, single-mark pencils and all-parallel carrier
//! sets are indeterminate.
//!
//! [`determinate_by_segment_triples`] reaches the same verdict along a
//! completely different route: a brute-force search for a witnessing triple
//! of segments with pairwise distinct carriers, not all parallel and not
//! passing through one common point. The two routes are kept independent
//! on purpose and the test suite insists they agree.

use std::fmt;

use itertools::Itertools;

use crate::arrangement::Arrangement;
use crate::incidence::IncidenceStructure;
use crate::shape::Shape;

/// Why a shape is or is not usable as a determinate rule left side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeterminacyReason {
    /// The arrangement is a point-line geometry (every construction line
    /// carries at least two marks).
    GeometryArrangement,
    /// Not a geometry, but at least two registration marks exist.
    TwoOrMoreMarks,
    /// At most one registration mark: a pencil or parallel-only carriers.
    FewerThanTwoMarks,
    /// The empty shape has the empty arrangement.
    EmptyArrangement,
}

impl DeterminacyReason {
    pub fn as_str(self) -> &'static str {
        match self {
            DeterminacyReason::GeometryArrangement => "GeometryArrangement",
            DeterminacyReason::TwoOrMoreMarks => "TwoOrMoreMarks",
            DeterminacyReason::FewerThanTwoMarks => "FewerThanTwoMarks",
            DeterminacyReason::EmptyArrangement => "EmptyArrangement",
        }
    }
}

impl fmt::Display for DeterminacyReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Verdict of the determinacy decision, with the registration mark count
/// of the shape's arrangement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeterminacyVerdict {
    pub determinate: bool,
    pub reason: DeterminacyReason,
    pub mark_count: usize,
}

/// Decides determinacy of a rule whose left side is `shape`.
///
/// The right side of a rule plays no part in the decision.
pub fn classify_rule(shape: &Shape) -> DeterminacyVerdict {
    if shape.is_empty() {
        return DeterminacyVerdict {
            determinate: false,
            reason: DeterminacyReason::EmptyArrangement,
            mark_count: 0,
        };
    }
    let arrangement = Arrangement::of(shape);
    let mark_count = arrangement.points().len();
    let structure = IncidenceStructure::of(&arrangement);
    if structure.check_point_line_geometry().is_ok() {
        DeterminacyVerdict {
            determinate: true,
            reason: DeterminacyReason::GeometryArrangement,
            mark_count,
        }
    } else if mark_count >= 2 {
        DeterminacyVerdict {
            determinate: true,
            reason: DeterminacyReason::TwoOrMoreMarks,
            mark_count,
        }
    } else {
        DeterminacyVerdict {
            determinate: false,
            reason: DeterminacyReason::FewerThanTwoMarks,
            mark_count,
        }
    }
}

/// Independent determinacy check by exhaustive search over segment triples.
///
/// Returns true when some unordered triple of segments satisfies all of:
/// no two of the three collinear, the three carriers not mutually parallel,
/// and the three carriers not concurrent through a single common point.
pub fn determinate_by_segment_triples(shape: &Shape) -> bool {
    shape
        .segments()
        .iter()
        .tuple_combinations()
        .any(|(s1, s2, s3)| {
            let (l1, l2, l3) = (s1.carrier(), s2.carrier(), s3.carrier());
            // (ii) no two collinear.
            if l1 == l2 || l1 == l3 || l2 == l3 {
                return false;
            }
            // (iii) not all three parallel.
            if l1.is_parallel_to(&l2) && l1.is_parallel_to(&l3) {
                return false;
            }
            // (i) no single point common to all three carriers.
            let concurrent = [(&l1, &l2, &l3), (&l1, &l3, &l2), (&l2, &l3, &l1)]
                .into_iter()
                .any(|(a, b, rest)| match a.meet(b).expect("distinct lines") {
                    Some(q) => rest.contains(&q),
                    None => false,
                });
            !concurrent
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Segment;

    fn shape(segs: &[(i64, i64, i64, i64)]) -> Shape {
        Shape::from_segments(
            segs.iter()
                .map(|&(a, b, c, d)| Segment::from_ints(a, b, c, d).unwrap()),
        )
    }

    fn triangle() -> Shape {
        shape(&[(0, 0, 2, 0), (0, 0, 1, 2), (2, 0, 1, 2)])
    }

    #[test]
    fn triangle_is_determinate_as_geometry() {
        let v = classify_rule(&triangle());
        assert!(v.determinate);
        assert_eq!(v.reason, DeterminacyReason::GeometryArrangement);
        assert_eq!(v.mark_count, 3);
    }

    #[test]
    fn parallels_with_transversal_is_the_smallest_two_mark_case() {
        let v = classify_rule(&shape(&[(0, 0, 0, 2), (2, 0, 2, 2), (0, 1, 2, 1)]));
        assert!(v.determinate);
        assert_eq!(v.reason, DeterminacyReason::TwoOrMoreMarks);
        assert_eq!(v.mark_count, 2);
    }

    #[test]
    fn crossing_pair_is_indeterminate() {
        let v = classify_rule(&shape(&[(0, 0, 2, 2), (0, 2, 2, 0)]));
        assert!(!v.determinate);
        assert_eq!(v.reason, DeterminacyReason::FewerThanTwoMarks);
        assert_eq!(v.mark_count, 1);
    }

    #[test]
    fn single_segment_is_indeterminate() {
        let v = classify_rule(&shape(&[(0, 0, 1, 0)]));
        assert!(!v.determinate);
        assert_eq!(v.reason, DeterminacyReason::FewerThanTwoMarks);
        assert_eq!(v.mark_count, 0);
    }

    #[test]
    fn parallel_only_shapes_are_indeterminate() {
        let v = classify_rule(&shape(&[(0, 0, 1, 0), (0, 1, 1, 1), (0, 3, 1, 3)]));
        assert!(!v.determinate);
        assert_eq!(v.mark_count, 0);
    }

    #[test]
    fn empty_shape_is_indeterminate() {
        let v = classify_rule(&Shape::empty());
        assert!(!v.determinate);
        assert_eq!(v.reason, DeterminacyReason::EmptyArrangement);
        assert_eq!(v.mark_count, 0);
    }

    #[test]
    fn triple_search_accepts_the_triangle() {
        assert!(determinate_by_segment_triples(&triangle()));
    }

    #[test]
    fn triple_search_rejects_pencils() {
        // Three segments whose carriers all pass through the origin.
        let pencil = shape(&[(-1, 0, 1, 0), (0, -1, 0, 1), (-1, -1, 1, 1)]);
        assert!(!determinate_by_segment_triples(&pencil));
        assert!(!classify_rule(&pencil).determinate);
    }

    #[test]
    fn triple_search_needs_three_segments() {
        assert!(!determinate_by_segment_triples(&shape(&[
            (0, 0, 2, 2),
            (0, 2, 2, 0)
        ])));
        assert!(!determinate_by_segment_triples(&Shape::empty()));
    }

    #[test]
    fn routes_agree_on_the_named_cases() {
        for s in [
            triangle(),
            shape(&[(0, 0, 0, 2), (2, 0, 2, 2), (0, 1, 2, 1)]),
            shape(&[(0, 0, 2, 2), (0, 2, 2, 0)]),
            shape(&[(0, 0, 1, 0)]),
            shape(&[(0, 0, 1, 0), (0, 1, 1, 1), (0, 3, 1, 3)]),
            Shape::empty(),
        ] {
            assert_eq!(
                classify_rule(&s).determinate,
                determinate_by_segment_triples(&s),
                "routes disagree on {s}"
            );
        }
    }

    #[test]
    fn adding_a_crossing_carrier_preserves_determinacy() {
        // Monotonicity spot check: extend the triangle with a new non-
        // parallel carrier; the verdict must stay determinate.
        let extended = triangle().sum(&shape(&[(0, 5, 7, 6)]));
        assert!(classify_rule(&extended).determinate);
        let two_marks = shape(&[(0, 0, 0, 2), (2, 0, 2, 2), (0, 1, 2, 1)]);
        let extended = two_marks.sum(&shape(&[(0, -3, 9, -2)]));
        assert!(classify_rule(&extended).determinate);
    }
}
