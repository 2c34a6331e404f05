//! Shapes made of maximal line segments, the point-line arrangements that
//! contain them, and the finite geometries those arrangements give rise to.
//!
//! Everything runs on exact rational arithmetic: collinearity, parallelism,
//! incidence and intersection are decided without tolerances, which is what
//! makes the arrangement axioms and the geometry classification sound.
//!
//! The pipeline, bottom to top:
//!
//! - [`geom`]: points, canonical line equations, segments, and the `co`
//!   classification of collinear segment pairs.
//! - [`shape`]: finite sets of maximal segments with sum, difference,
//!   product and similarity transformations.
//! - [`arrangement`]: registration marks and construction lines of a shape,
//!   the two arrangement axioms, definitional versus naive set operations.
//! - [`incidence`]: labelled incidence structures and their classification
//!   as point-line geometries, near-linear and linear spaces.
//! - [`determinacy`]: the determinate/indeterminate decision for rule left
//!   sides, with an independent segment-triple search as a cross-check.
//! - [`io`]: shape files, JSON reports, SVG and DOT output.

#![forbid(unsafe_code)]

pub mod arrangement;
pub mod determinacy;
pub mod error;
pub mod geom;
pub mod incidence;
pub mod io;
pub mod rational;
pub mod shape;

pub use arrangement::{Arrangement, AxiomReport, LinePair, RawPointLineSet};
pub use determinacy::{
    classify_rule, determinate_by_segment_triples, DeterminacyReason, DeterminacyVerdict,
};
pub use error::GeomError;
pub use geom::{CoClass, LineEq, Point2, Segment};
pub use incidence::{
    GeometryClass, GeometryViolation, IncidenceStructure, LeviGraph, LinearViolation,
    NearLinearViolation,
};
pub use rational::Rational;
pub use shape::{AffineMap, Shape};
