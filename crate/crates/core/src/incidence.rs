//! Incidence structures extracted from arrangements, and their
//! classification as point-line geometries, near-linear and linear spaces.
//!
//! An incidence structure is the purely combinatorial residue of an
//! arrangement: labelled points, labelled lines, and the flags saying which
//! point is on which line. Distance, betweenness and parallelism are gone;
//! every check in this module consults labels and flags only, never
//! coordinates.
//!
//! A structure is a point-line geometry when (i) every line is incident
//! with at least two points and (ii) distinct lines have distinct point
//! sets. A geometry is a near-linear space when two distinct points share
//! at most one line, and a linear space when they share exactly one and
//! some three points are non-collinear.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::arrangement::{Arrangement, RawPointLineSet};
use crate::geom::{LineEq, Point2};

const POINT_ALPHABET: &[u8] = b"pqrstuvwxyz";
const LINE_ALPHABET: &[u8] = b"ABCDEFGHIJKLMNOPQRSTUVWXYZ";

fn label_from(alphabet: &[u8], index: usize) -> String {
    let letter = alphabet[index % alphabet.len()] as char;
    match index / alphabet.len() {
        0 => letter.to_string(),
        generation => format!("{letter}{generation}"),
    }
}

/// Deterministic label of the `index`-th point: `p, q, r, …, z, p1, q1, …`.
pub fn point_label(index: usize) -> String {
    label_from(POINT_ALPHABET, index)
}

/// Deterministic label of the `index`-th line: `A, B, …, Z, A1, B1, …`.
pub fn line_label(index: usize) -> String {
    label_from(LINE_ALPHABET, index)
}

/// A labelled triple of points, lines and incidence flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceStructure {
    point_labels: Vec<String>,
    line_labels: Vec<String>,
    /// Flags as (point index, line index), sorted.
    flags: BTreeSet<(usize, usize)>,
    point_to_lines: Vec<BTreeSet<usize>>,
    line_to_points: Vec<BTreeSet<usize>>,
}

impl IncidenceStructure {
    /// Labels points in lexicographic coordinate order and lines in
    /// canonical-equation order, then records a flag for every exact
    /// point-on-line incidence.
    pub fn from_sets(points: &BTreeSet<Point2>, lines: &BTreeSet<LineEq>) -> IncidenceStructure {
        let point_list: Vec<&Point2> = points.iter().collect();
        let line_list: Vec<&LineEq> = lines.iter().collect();
        let flags = point_list
            .iter()
            .enumerate()
            .cartesian_product(line_list.iter().enumerate())
            .filter(|((_, p), (_, l))| l.contains(p))
            .map(|((pi, _), (li, _))| (pi, li))
            .collect();
        Self::assemble(
            (0..point_list.len()).map(point_label).collect(),
            (0..line_list.len()).map(line_label).collect(),
            flags,
        )
    }

    /// The incidence structure of an arrangement.
    pub fn of(arrangement: &Arrangement) -> IncidenceStructure {
        Self::from_sets(arrangement.points(), arrangement.lines())
    }

    /// The incidence structure of a raw point/line set. The set need not be
    /// an arrangement; configurations that fail the arrangement axioms can
    /// still be perfectly good geometries.
    pub fn of_raw(raw: &RawPointLineSet) -> IncidenceStructure {
        Self::from_sets(&raw.points, &raw.lines)
    }

    /// A purely combinatorial structure with auto-generated labels.
    ///
    /// Panics when a flag index is out of range; this constructor exists
    /// for abstract structures that no coordinate geometry realizes.
    pub fn new_abstract(
        point_count: usize,
        line_count: usize,
        flags: impl IntoIterator<Item = (usize, usize)>,
    ) -> IncidenceStructure {
        let flags: BTreeSet<(usize, usize)> = flags.into_iter().collect();
        for &(p, l) in &flags {
            assert!(p < point_count, "flag references point {p} out of {point_count}");
            assert!(l < line_count, "flag references line {l} out of {line_count}");
        }
        Self::assemble(
            (0..point_count).map(point_label).collect(),
            (0..line_count).map(line_label).collect(),
            flags,
        )
    }

    fn assemble(
        point_labels: Vec<String>,
        line_labels: Vec<String>,
        flags: BTreeSet<(usize, usize)>,
    ) -> IncidenceStructure {
        let mut point_to_lines = vec![BTreeSet::new(); point_labels.len()];
        let mut line_to_points = vec![BTreeSet::new(); line_labels.len()];
        for &(p, l) in &flags {
            point_to_lines[p].insert(l);
            line_to_points[l].insert(p);
        }
        IncidenceStructure {
            point_labels,
            line_labels,
            flags,
            point_to_lines,
            line_to_points,
        }
    }

    pub fn point_labels(&self) -> &[String] {
        &self.point_labels
    }

    pub fn line_labels(&self) -> &[String] {
        &self.line_labels
    }

    pub fn point_count(&self) -> usize {
        self.point_labels.len()
    }

    pub fn line_count(&self) -> usize {
        self.line_labels.len()
    }

    pub fn flags(&self) -> &BTreeSet<(usize, usize)> {
        &self.flags
    }

    pub fn flag_count(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.point_labels.is_empty() && self.line_labels.is_empty()
    }

    /// Indices of the lines passing through a point.
    pub fn lines_through(&self, point: usize) -> &BTreeSet<usize> {
        &self.point_to_lines[point]
    }

    /// Indices of the points on a line.
    pub fn points_on(&self, line: usize) -> &BTreeSet<usize> {
        &self.line_to_points[line]
    }

    /// Rule (i): every line is incident with at least two points.
    /// Rule (ii): distinct lines have distinct point sets.
    pub fn check_point_line_geometry(&self) -> Result<(), GeometryViolation> {
        for (li, points) in self.line_to_points.iter().enumerate() {
            if points.len() < 2 {
                return Err(GeometryViolation::LineWithFewPoints {
                    line: self.line_labels[li].clone(),
                    point_count: points.len(),
                });
            }
        }
        for (l1, l2) in (0..self.line_count()).tuple_combinations() {
            if self.line_to_points[l1] == self.line_to_points[l2] {
                return Err(GeometryViolation::IndistinctLines {
                    first: self.line_labels[l1].clone(),
                    second: self.line_labels[l2].clone(),
                });
            }
        }
        Ok(())
    }

    /// A near-linear space is a point-line geometry in which two distinct
    /// points are incident with at most one common line.
    pub fn check_near_linear(&self) -> Result<(), NearLinearViolation> {
        self.check_point_line_geometry()
            .map_err(NearLinearViolation::NotAGeometry)?;
        for (p1, p2) in (0..self.point_count()).tuple_combinations() {
            let mut shared = self.point_to_lines[p1].intersection(&self.point_to_lines[p2]);
            if let (Some(&l1), Some(&l2)) = (shared.next(), shared.next()) {
                return Err(NearLinearViolation::PointPairOnTwoLines {
                    points: (self.point_labels[p1].clone(), self.point_labels[p2].clone()),
                    lines: (self.line_labels[l1].clone(), self.line_labels[l2].clone()),
                });
            }
        }
        Ok(())
    }

    /// A linear space is a near-linear space in which two distinct points
    /// share exactly one line, with at least three non-collinear points
    /// (without the last clause two joined points would qualify).
    pub fn check_linear_space(&self) -> Result<(), LinearViolation> {
        self.check_near_linear()
            .map_err(LinearViolation::NotNearLinear)?;
        for (p1, p2) in (0..self.point_count()).tuple_combinations() {
            if self.point_to_lines[p1]
                .intersection(&self.point_to_lines[p2])
                .next()
                .is_none()
            {
                return Err(LinearViolation::UnjoinedPoints {
                    points: (self.point_labels[p1].clone(), self.point_labels[p2].clone()),
                });
            }
        }
        if self.point_count() < 3 {
            // With 0 or 1 points there is no witnessing line; with 2 joined
            // points their unique common line is the certificate.
            let line = (self.point_count() == 2)
                .then(|| {
                    self.point_to_lines[0]
                        .intersection(&self.point_to_lines[1])
                        .next()
                        .map(|&l| self.line_labels[l].clone())
                })
                .flatten();
            return Err(LinearViolation::AllPointsCollinear { line });
        }
        // Every pair is joined exactly once, so if a third point escapes the
        // line through the first two, that triple is non-collinear; if none
        // does, that line carries every point.
        let &common = self.point_to_lines[0]
            .intersection(&self.point_to_lines[1])
            .next()
            .expect("pair joined after the check above");
        if (2..self.point_count()).all(|p| self.point_to_lines[p].contains(&common)) {
            return Err(LinearViolation::AllPointsCollinear {
                line: Some(self.line_labels[common].clone()),
            });
        }
        Ok(())
    }

    /// Figure-of-merit classification: linear spaces are reported as such,
    /// remaining near-linear spaces as near-linear, anything else as not a
    /// geometry.
    pub fn classify(&self) -> GeometryClass {
        if self.check_linear_space().is_ok() {
            GeometryClass::LinearSpace
        } else if self.check_near_linear().is_ok() {
            GeometryClass::NearLinearSpace
        } else {
            GeometryClass::NotAGeometry
        }
    }

    /// Bipartite graph with one vertex per point and per line and one edge
    /// per flag.
    pub fn levi_graph(&self) -> LeviGraph {
        LeviGraph {
            point_nodes: self.point_labels.iter().map(|l| format!("p_{l}")).collect(),
            line_nodes: self.line_labels.iter().map(|l| format!("L_{l}")).collect(),
            edges: self.flags.iter().copied().collect(),
        }
    }
}

/// Coarse taxonomy of incidence structures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeometryClass {
    NotAGeometry,
    NearLinearSpace,
    LinearSpace,
}

impl GeometryClass {
    pub fn as_str(self) -> &'static str {
        match self {
            GeometryClass::NotAGeometry => "NotAGeometry",
            GeometryClass::NearLinearSpace => "NearLinearSpace",
            GeometryClass::LinearSpace => "LinearSpace",
        }
    }
}

impl fmt::Display for GeometryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Why a structure fails to be a point-line geometry.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryViolation {
    #[error("line {line} is incident with {point_count} point(s), need at least 2")]
    LineWithFewPoints { line: String, point_count: usize },
    #[error("lines {first} and {second} are incident with the same point set")]
    IndistinctLines { first: String, second: String },
}

/// Why a structure fails to be a near-linear space.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NearLinearViolation {
    #[error(transparent)]
    NotAGeometry(GeometryViolation),
    #[error("points {} and {} both lie on lines {} and {}", .points.0, .points.1, .lines.0, .lines.1)]
    PointPairOnTwoLines {
        points: (String, String),
        lines: (String, String),
    },
}

/// Why a structure fails to be a linear space.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinearViolation {
    #[error(transparent)]
    NotNearLinear(NearLinearViolation),
    #[error("points {} and {} are not joined by any line", .points.0, .points.1)]
    UnjoinedPoints { points: (String, String) },
    #[error("no three non-collinear points{}", .line.as_ref().map(|l| format!(" (all points lie on {l})")).unwrap_or_default())]
    AllPointsCollinear { line: Option<String> },
}

/// The Levi graph of an incidence structure: a bipartite graph whose two
/// vertex classes are the points and the lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviGraph {
    /// `p_<label>` vertices, in point order.
    pub point_nodes: Vec<String>,
    /// `L_<label>` vertices, in line order.
    pub line_nodes: Vec<String>,
    /// Edges as (point index, line index), sorted.
    pub edges: Vec<(usize, usize)>,
}

impl LeviGraph {
    pub fn node_count(&self) -> usize {
        self.point_nodes.len() + self.line_nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Degree of the `index`-th point vertex.
    pub fn point_degree(&self, index: usize) -> usize {
        self.edges.iter().filter(|(p, _)| *p == index).count()
    }

    /// Degree of the `index`-th line vertex.
    pub fn line_degree(&self, index: usize) -> usize {
        self.edges.iter().filter(|(_, l)| *l == index).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Segment;
    use crate::shape::Shape;

    fn shape(segs: &[(i64, i64, i64, i64)]) -> Shape {
        Shape::from_segments(
            segs.iter()
                .map(|&(a, b, c, d)| Segment::from_ints(a, b, c, d).unwrap()),
        )
    }

    fn structure_of(segs: &[(i64, i64, i64, i64)]) -> IncidenceStructure {
        IncidenceStructure::of(&Arrangement::of(&shape(segs)))
    }

    fn triangle() -> IncidenceStructure {
        structure_of(&[(0, 0, 2, 0), (0, 0, 1, 2), (2, 0, 1, 2)])
    }

    fn unit_square() -> IncidenceStructure {
        structure_of(&[(0, 0, 1, 0), (0, 1, 1, 1), (0, 0, 0, 1), (1, 0, 1, 1)])
    }

    #[test]
    fn labels_rotate_with_generation_suffix() {
        assert_eq!(point_label(0), "p");
        assert_eq!(point_label(10), "z");
        assert_eq!(point_label(11), "p1");
        assert_eq!(point_label(23), "q2");
        assert_eq!(line_label(0), "A");
        assert_eq!(line_label(25), "Z");
        assert_eq!(line_label(26), "A1");
    }

    #[test]
    fn empty_arrangement_gives_empty_structure() {
        let s = IncidenceStructure::of(&Arrangement::empty());
        assert!(s.is_empty());
        assert_eq!(s.flag_count(), 0);
    }

    #[test]
    fn triangle_structure_counts() {
        let s = triangle();
        assert_eq!(s.point_count(), 3);
        assert_eq!(s.line_count(), 3);
        assert_eq!(s.flag_count(), 6);
        for l in 0..3 {
            assert_eq!(s.points_on(l).len(), 2);
        }
    }

    #[test]
    fn crossing_pair_is_a_single_pencil() {
        let s = structure_of(&[(0, 0, 2, 2), (0, 2, 2, 0)]);
        assert_eq!(s.point_count(), 1);
        assert_eq!(s.line_count(), 2);
        assert_eq!(s.flag_count(), 2);
    }

    #[test]
    fn labelling_is_deterministic() {
        let a = Arrangement::of(&shape(&[(0, 0, 2, 0), (0, 0, 1, 2), (2, 0, 1, 2)]));
        assert_eq!(IncidenceStructure::of(&a), IncidenceStructure::of(&a));
        assert_eq!(triangle().point_labels(), &["p", "q", "r"]);
        assert_eq!(triangle().line_labels(), &["A", "B", "C"]);
    }

    #[test]
    fn flag_degrees_are_consistent() {
        for s in [triangle(), unit_square()] {
            let by_points: usize = (0..s.point_count()).map(|p| s.lines_through(p).len()).sum();
            let by_lines: usize = (0..s.line_count()).map(|l| s.points_on(l).len()).sum();
            assert_eq!(by_points, s.flag_count());
            assert_eq!(by_lines, s.flag_count());
        }
    }

    #[test]
    fn triangle_is_a_linear_space() {
        let s = triangle();
        assert!(s.check_point_line_geometry().is_ok());
        assert!(s.check_near_linear().is_ok());
        assert!(s.check_linear_space().is_ok());
        assert_eq!(s.classify(), GeometryClass::LinearSpace);
    }

    #[test]
    fn square_is_near_linear_but_not_linear() {
        let s = unit_square();
        assert!(s.check_near_linear().is_ok());
        // Diagonal corners share no construction line.
        match s.check_linear_space() {
            Err(LinearViolation::UnjoinedPoints { .. }) => {}
            other => panic!("expected unjoined corners, got {other:?}"),
        }
        assert_eq!(s.classify(), GeometryClass::NearLinearSpace);
    }

    #[test]
    fn parallels_fail_rule_one() {
        let s = structure_of(&[(0, 0, 1, 0), (0, 1, 1, 1)]);
        match s.check_point_line_geometry() {
            Err(GeometryViolation::LineWithFewPoints { point_count: 0, .. }) => {}
            other => panic!("expected a pointless line, got {other:?}"),
        }
        assert_eq!(s.classify(), GeometryClass::NotAGeometry);
    }

    #[test]
    fn single_pencil_fails_rule_one() {
        // Three segments through the origin: one mark, three lines.
        let s = structure_of(&[(-1, 0, 1, 0), (0, -1, 0, 1), (-1, -1, 1, 1)]);
        assert_eq!(s.point_count(), 1);
        match s.check_point_line_geometry() {
            Err(GeometryViolation::LineWithFewPoints { point_count: 1, .. }) => {}
            other => panic!("expected single-point lines, got {other:?}"),
        }
        assert_eq!(s.classify(), GeometryClass::NotAGeometry);
    }

    #[test]
    fn duplicate_lines_fail_rule_two() {
        // Abstract: two lines over the same two points. No rational-plane
        // arrangement realizes this; rule (ii) exists for exactly this case.
        let s = IncidenceStructure::new_abstract(2, 2, [(0, 0), (1, 0), (0, 1), (1, 1)]);
        match s.check_point_line_geometry() {
            Err(GeometryViolation::IndistinctLines { .. }) => {}
            other => panic!("expected indistinct lines, got {other:?}"),
        }
    }

    #[test]
    fn two_joined_points_are_not_a_linear_space() {
        // One line through two points: near-linear, but the non-triviality
        // clause rules it out as a linear space.
        let two = IncidenceStructure::new_abstract(2, 1, [(0, 0), (1, 0)]);
        assert!(two.check_near_linear().is_ok());
        match two.check_linear_space() {
            Err(LinearViolation::AllPointsCollinear { line: Some(l) }) => assert_eq!(l, "A"),
            other => panic!("expected collinearity certificate, got {other:?}"),
        }
        assert_eq!(two.classify(), GeometryClass::NearLinearSpace);
    }

    #[test]
    fn near_linear_violation_carries_witness() {
        // Abstract: two points joined by two distinct lines, padded so the
        // lines have distinct point sets.
        let s = IncidenceStructure::new_abstract(
            4,
            2,
            [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (3, 1)],
        );
        assert!(s.check_point_line_geometry().is_ok());
        match s.check_near_linear() {
            Err(NearLinearViolation::PointPairOnTwoLines { points, lines }) => {
                assert_eq!(points, ("p".into(), "q".into()));
                assert_eq!(lines, ("A".into(), "B".into()));
            }
            other => panic!("expected double-joined pair, got {other:?}"),
        }
    }

    #[test]
    fn empty_structure_is_vacuously_near_linear() {
        let s = IncidenceStructure::of(&Arrangement::empty());
        assert!(s.check_point_line_geometry().is_ok());
        assert!(s.check_near_linear().is_ok());
        assert!(matches!(
            s.check_linear_space(),
            Err(LinearViolation::AllPointsCollinear { line: None })
        ));
        assert_eq!(s.classify(), GeometryClass::NearLinearSpace);
    }

    #[test]
    fn levi_graph_of_triangle() {
        let g = triangle().levi_graph();
        assert_eq!(g.node_count(), 6);
        assert_eq!(g.edge_count(), 6);
        for l in 0..3 {
            assert_eq!(g.line_degree(l), 2);
        }
        assert_eq!(g.point_nodes, vec!["p_p", "p_q", "p_r"]);
        assert_eq!(g.line_nodes, vec!["L_A", "L_B", "L_C"]);
    }

    #[test]
    fn levi_graph_of_pencil_is_a_star() {
        let s = structure_of(&[(-1, 0, 1, 0), (0, -1, 0, 1), (-1, -1, 1, 1)]);
        let g = s.levi_graph();
        assert_eq!(g.node_count(), 4);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.point_degree(0), 3);
    }

    #[test]
    fn levi_graph_of_empty_structure_is_empty() {
        let g = IncidenceStructure::of(&Arrangement::empty()).levi_graph();
        assert_eq!(g.node_count(), 0);
        assert_eq!(g.edge_count(), 0);
    }
}
