//! Shared fixtures, seeded generators and oracles for the integration and
//! acceptance suites.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use regmark_core::rational::{rat, rat_int, Rational};
use regmark_core::{AffineMap, Arrangement, LineEq, Point2, RawPointLineSet, Segment, Shape};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rational in [-10, 10] with denominator at most 4.
pub fn random_rational(rng: &mut impl Rng) -> Rational {
    let denom = rng.random_range(1..=4i64);
    let numer = rng.random_range(-(10 * denom)..=(10 * denom));
    rat(numer, denom)
}

pub fn random_point(rng: &mut impl Rng) -> Point2 {
    Point2::new(random_rational(rng), random_rational(rng))
}

pub fn random_segment(rng: &mut impl Rng) -> Segment {
    loop {
        let p = random_point(rng);
        let q = random_point(rng);
        if let Ok(seg) = Segment::new(p, q) {
            return seg;
        }
    }
}

/// A shape of at most `max_segments` random segments (co-related input is
/// merged by construction, so the result may hold fewer).
pub fn random_shape(rng: &mut impl Rng, max_segments: usize) -> Shape {
    let count = rng.random_range(0..=max_segments);
    Shape::from_segments((0..count).map(|_| random_segment(rng)))
}

/// Rational points of the unit circle for exact rotations.
const ROTATIONS: &[(i64, i64, i64, i64)] = &[
    (1, 1, 0, 1),
    (0, 1, 1, 1),
    (0, 1, -1, 1),
    (-1, 1, 0, 1),
    (3, 5, 4, 5),
    (-3, 5, 4, 5),
    (5, 13, -12, 13),
    (8, 17, 15, 17),
];

const SCALES: &[(i64, i64)] = &[(1, 1), (2, 1), (3, 1), (1, 2), (5, 2), (-1, 1), (-2, 1), (-1, 2)];

pub const ROTATION_COUNT: usize = ROTATIONS.len();
pub const SCALE_COUNT: usize = SCALES.len();

/// Assembles a valid similarity from catalogue indices (any `usize` works,
/// indices wrap) plus a translation.
pub fn similarity_from_parts(
    rotation: usize,
    reflect: bool,
    scale: usize,
    tx: Rational,
    ty: Rational,
) -> AffineMap {
    let (cn, cd, sn, sd) = ROTATIONS[rotation % ROTATIONS.len()];
    let mut map = AffineMap::rotation(rat(cn, cd), rat(sn, sd)).expect("unit-circle pair");
    if reflect {
        map = map.then(&AffineMap::reflection_x());
    }
    let (n, d) = SCALES[scale % SCALES.len()];
    map = map.then(&AffineMap::uniform_scale(rat(n, d)).expect("nonzero scale"));
    map.then(&AffineMap::translation(tx, ty))
}

/// A random valid similarity: rotation, optional reflection, nonzero
/// uniform scale, translation.
pub fn random_similarity(rng: &mut impl Rng) -> AffineMap {
    similarity_from_parts(
        rng.random_range(0..ROTATION_COUNT),
        rng.random_bool(0.5),
        rng.random_range(0..SCALE_COUNT),
        random_rational(rng),
        random_rational(rng),
    )
}

pub fn seg(x1: i64, y1: i64, x2: i64, y2: i64) -> Segment {
    Segment::from_ints(x1, y1, x2, y2).expect("fixture segments are non-degenerate")
}

pub fn shape_of(segs: &[(i64, i64, i64, i64)]) -> Shape {
    Shape::from_segments(segs.iter().map(|&(a, b, c, d)| seg(a, b, c, d)))
}

pub fn line(a: i64, b: i64, c: i64) -> LineEq {
    LineEq::from_ints(a, b, c).expect("fixture lines are non-degenerate")
}

pub fn triangle() -> Shape {
    shape_of(&[(0, 0, 2, 0), (0, 0, 1, 2), (2, 0, 1, 2)])
}

pub fn unit_square() -> Shape {
    shape_of(&[(0, 0, 1, 0), (0, 1, 1, 1), (0, 0, 0, 1), (1, 0, 1, 1)])
}

pub fn x_shape() -> Shape {
    shape_of(&[(0, 0, 2, 2), (0, 2, 2, 0)])
}

pub fn single_segment() -> Shape {
    shape_of(&[(0, 0, 1, 0)])
}

pub fn parallel_pair() -> Shape {
    shape_of(&[(0, 0, 1, 0), (0, 1, 1, 1)])
}

/// Two vertical parallels crossed by one horizontal transversal: the
/// smallest two-mark arrangement.
pub fn parallels_with_transversal() -> Shape {
    shape_of(&[(0, 0, 0, 2), (2, 0, 2, 2), (0, 1, 2, 1)])
}

/// Three segments whose carriers all pass through the origin.
pub fn pencil() -> Shape {
    shape_of(&[(-1, 0, 1, 0), (0, -1, 0, 1), (-1, -1, 1, 1)])
}

/// Fixed pool of ten small-integer segments used for the exhaustive
/// determinacy family: parallels, shared carriers with a gap, concurrent
/// and generic crossings are all represented.
pub fn segment_pool() -> Vec<Segment> {
    vec![
        seg(0, 0, 2, 0),   // y = 0
        seg(0, 1, 2, 1),   // y = 1, parallel to the first
        seg(0, 0, 0, 2),   // x = 0
        seg(1, 0, 1, 2),   // x = 1
        seg(0, 0, 2, 2),   // y = x, through the origin
        seg(0, 2, 2, 0),   // x + y = 2
        seg(0, 0, 1, 2),   // 2x - y = 0, through the origin
        seg(2, 0, 1, 2),   // 2x + y = 4
        seg(3, 0, 5, 0),   // y = 0 again, gap-separated from the first
        seg(0, -1, 2, -1), // y = -1
    ]
}

/// Rational realization of the 9-point, 9-line configuration where the
/// cross-joins of two point triples meet in a third collinear triple.
/// A point-line geometry, but not an arrangement for a shape.
pub fn pappus_raw() -> RawPointLineSet {
    let half = rat(1, 2);
    let points = vec![
        Point2::from_ints(0, 0),
        Point2::from_ints(1, 0),
        Point2::from_ints(2, 0),
        Point2::from_ints(0, 1),
        Point2::from_ints(1, 1),
        Point2::from_ints(2, 1),
        Point2::new(half.clone(), half.clone()),
        Point2::new(rat_int(1), half.clone()),
        Point2::new(rat(3, 2), half),
    ];
    let lines = vec![
        line(0, 1, 0),   // bottom triple
        line(0, 1, -1),  // top triple
        line(0, 2, -1),  // the collinear cross-join points
        line(1, -1, 0),
        line(1, 1, -1),
        line(1, -2, 0),
        line(1, 2, -2),
        line(1, -1, -1),
        line(1, 1, -2),
    ];
    RawPointLineSet::new(points, lines)
}

/// Rational realization of the 10-point, 10-line two-triangle perspectivity
/// configuration. A point-line geometry, but not an arrangement for a shape.
pub fn desargues_raw() -> RawPointLineSet {
    let points = vec![
        Point2::from_ints(0, 0),   // center of perspectivity
        Point2::from_ints(1, 0),   // first triangle
        Point2::from_ints(0, 1),
        Point2::from_ints(1, 1),
        Point2::from_ints(2, 0),   // second triangle
        Point2::from_ints(0, 3),
        Point2::from_ints(4, 4),
        Point2::from_ints(4, -3),  // axis points
        Point2::from_ints(1, -2),
        Point2::from_ints(-8, 1),
    ];
    let lines = vec![
        line(0, 1, 0),   // rays through the center
        line(1, 0, 0),
        line(1, -1, 0),
        line(1, 1, -1),  // first triangle sides paired with
        line(3, 2, -6),  // second triangle sides
        line(1, 0, -1),
        line(2, -1, -4),
        line(0, 1, -1),
        line(1, -4, 12),
        line(1, 3, 5),   // the axis
    ];
    RawPointLineSet::new(points, lines)
}

/// Sample points for the coverage oracle: endpoints, midpoints and all
/// pairwise carrier intersections of the given segments.
pub fn sample_points(segments: &[Segment]) -> BTreeSet<Point2> {
    let mut samples = BTreeSet::new();
    let half = rat(1, 2);
    for s in segments {
        samples.insert(s.p1().clone());
        samples.insert(s.p2().clone());
        samples.insert(Point2::new(
            (&s.p1().x + &s.p2().x) * &half,
            (&s.p1().y + &s.p2().y) * &half,
        ));
    }
    let carriers: Vec<LineEq> = segments.iter().map(Segment::carrier).collect();
    for (i, l1) in carriers.iter().enumerate() {
        for l2 in &carriers[i + 1..] {
            if l1 == l2 {
                continue;
            }
            if let Ok(Some(q)) = l1.meet(l2) {
                samples.insert(q);
            }
        }
    }
    samples
}

/// Whether any of the raw segments covers `p`.
pub fn raw_covers(segments: &[Segment], p: &Point2) -> bool {
    segments.iter().any(|s| s.contains(p))
}

/// `n` random lines, pairwise nonparallel, no three concurrent.
pub fn general_position_lines(rng: &mut impl Rng, n: usize) -> Vec<LineEq> {
    'retry: loop {
        let mut lines: Vec<LineEq> = Vec::with_capacity(n);
        while lines.len() < n {
            let a = rng.random_range(-20..=20i64);
            let b = rng.random_range(-20..=20i64);
            let c = rng.random_range(-20..=20i64);
            let Ok(candidate) = LineEq::from_ints(a, b, c) else {
                continue;
            };
            if lines.iter().any(|l| l.is_parallel_to(&candidate)) {
                continue;
            }
            lines.push(candidate);
        }
        let mut meets = BTreeSet::new();
        for (i, l1) in lines.iter().enumerate() {
            for l2 in &lines[i + 1..] {
                let q = l1.meet(l2).expect("distinct").expect("nonparallel");
                if !meets.insert(q) {
                    continue 'retry; // three concurrent, resample
                }
            }
        }
        return lines;
    }
}

/// One segment on each line, so the shape's carriers are exactly `lines`.
pub fn shape_realizing_lines(lines: &[LineEq]) -> Shape {
    Shape::from_segments(lines.iter().map(|l| {
        Segment::new(l.point_at(&rat_int(0)), l.point_at(&rat_int(1)))
            .expect("distinct parameters give distinct points")
    }))
}

/// Convenience: the arrangement validity of a shape.
pub fn arrangement_is_valid(shape: &Shape) -> bool {
    Arrangement::of(shape).to_raw().validate().valid
}
