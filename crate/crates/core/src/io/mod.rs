//! File formats and renderers: the plain-text shape format, the JSON report
//! document, SVG drawings and Graphviz DOT export. All output is
//! deterministic byte for byte.

pub mod dot;
pub mod report;
pub mod shapefile;
pub mod svg;

pub use dot::emit_dot;
pub use report::{parse_raw_point_line_set, RawSetError, ReportDocument};
pub use shapefile::{parse_shape, serialize_shape, ParseOutcome, ShapeFileError};
pub use svg::{render_svg, RenderOptions};
