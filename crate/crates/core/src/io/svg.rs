//! SVG rendering of a shape together with its arrangement.
//!
//! Segments draw solid, construction lines draw dashed and clipped to a
//! padded bounding box of the content (the lines themselves are unbounded),
//! registration marks draw as filled dots. Clipping happens in exact
//! rational arithmetic; floating point only appears at the final formatting
//! step, with a fixed precision, so output is byte-stable across runs.

use num_traits::{ToPrimitive, Zero};

use crate::arrangement::Arrangement;
use crate::geom::{LineEq, Point2};
use crate::rational::{rat_int, Rational};
use crate::shape::Shape;

#[derive(Debug, Clone)]
pub struct RenderOptions {
    /// Padding around the content bounding box, as a percentage of its
    /// larger extent.
    pub pad_percent: u32,
    /// Decimal places in emitted coordinates.
    pub precision: usize,
}

impl Default for RenderOptions {
    fn default() -> RenderOptions {
        RenderOptions {
            pad_percent: 10,
            precision: 4,
        }
    }
}

struct Canvas {
    x0: Rational,
    y0: Rational,
    x1: Rational,
    y1: Rational,
    precision: usize,
}

impl Canvas {
    fn width(&self) -> Rational {
        &self.x1 - &self.x0
    }

    fn height(&self) -> Rational {
        &self.y1 - &self.y0
    }

    fn extent(&self) -> Rational {
        let (w, h) = (self.width(), self.height());
        if w > h {
            w
        } else {
            h
        }
    }

    fn fmt(&self, value: f64) -> String {
        format!("{:.*}", self.precision, value)
    }

    /// SVG user coordinates: shift to the origin and flip y so the picture
    /// is not upside down.
    fn project(&self, p: &Point2) -> (String, String) {
        let x = (&p.x - &self.x0).to_f64().unwrap_or(0.0);
        let y = (&self.y1 - &p.y).to_f64().unwrap_or(0.0);
        (self.fmt(x), self.fmt(y))
    }
}

/// Renders the shape and arrangement as a standalone SVG document.
pub fn render_svg(shape: &Shape, arrangement: &Arrangement, options: &RenderOptions) -> String {
    let mut content: Vec<Point2> = Vec::new();
    for seg in shape.segments() {
        content.push(seg.p1().clone());
        content.push(seg.p2().clone());
    }
    content.extend(arrangement.points().iter().cloned());

    let Some(first) = content.first() else {
        // Empty canvas: no content to size against.
        return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\"></svg>\n"
            .to_string();
    };

    let (mut x0, mut x1) = (first.x.clone(), first.x.clone());
    let (mut y0, mut y1) = (first.y.clone(), first.y.clone());
    for p in &content {
        if p.x < x0 {
            x0 = p.x.clone();
        }
        if p.x > x1 {
            x1 = p.x.clone();
        }
        if p.y < y0 {
            y0 = p.y.clone();
        }
        if p.y > y1 {
            y1 = p.y.clone();
        }
    }
    let raw_extent = {
        let (w, h) = (&x1 - &x0, &y1 - &y0);
        if w > h {
            w
        } else {
            h
        }
    };
    let basis = if raw_extent.is_zero() {
        rat_int(1)
    } else {
        raw_extent
    };
    let pad = &basis * rat_int(options.pad_percent as i64) / rat_int(100);
    let pad = if pad.is_zero() { rat_int(1) } else { pad };
    let canvas = Canvas {
        x0: &x0 - &pad,
        y0: &y0 - &pad,
        x1: &x1 + &pad,
        y1: &y1 + &pad,
        precision: options.precision,
    };

    let unit = canvas.extent().to_f64().unwrap_or(1.0);
    let seg_width = canvas.fmt(unit / 150.0);
    let line_width = canvas.fmt(unit / 300.0);
    let dash = format!("{} {}", canvas.fmt(unit / 60.0), canvas.fmt(unit / 90.0));
    let dot_radius = canvas.fmt(unit / 80.0);

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {} {}\">\n",
        canvas.fmt(canvas.width().to_f64().unwrap_or(1.0)),
        canvas.fmt(canvas.height().to_f64().unwrap_or(1.0)),
    ));

    out.push_str(&format!(
        "  <g class=\"construction-lines\" stroke=\"#999999\" stroke-width=\"{line_width}\" stroke-dasharray=\"{dash}\">\n"
    ));
    for line in arrangement.lines() {
        if let Some((a, b)) = clip_line(line, &canvas) {
            let (x1, y1) = canvas.project(&a);
            let (x2, y2) = canvas.project(&b);
            out.push_str(&format!(
                "    <line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\"/>\n"
            ));
        }
    }
    out.push_str("  </g>\n");

    out.push_str(&format!(
        "  <g class=\"segments\" stroke=\"#000000\" stroke-width=\"{seg_width}\" stroke-linecap=\"round\">\n"
    ));
    for seg in shape.segments() {
        let (x1, y1) = canvas.project(seg.p1());
        let (x2, y2) = canvas.project(seg.p2());
        out.push_str(&format!(
            "    <line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\"/>\n"
        ));
    }
    out.push_str("  </g>\n");

    out.push_str("  <g class=\"marks\" fill=\"#cc3333\">\n");
    for p in arrangement.points() {
        let (cx, cy) = canvas.project(p);
        out.push_str(&format!(
            "    <circle cx=\"{cx}\" cy=\"{cy}\" r=\"{dot_radius}\"/>\n"
        ));
    }
    out.push_str("  </g>\n");

    out.push_str("</svg>\n");
    out
}

/// Exact clip of an unbounded line against the canvas rectangle: the two
/// extreme border crossings that fall inside the box, or `None` when the
/// line misses it (possible only for lines that merely graze a corner,
/// since every construction line passes through content).
fn clip_line(line: &LineEq, canvas: &Canvas) -> Option<(Point2, Point2)> {
    let mut hits: Vec<Point2> = Vec::new();
    let inside = |p: &Point2| {
        p.x >= canvas.x0 && p.x <= canvas.x1 && p.y >= canvas.y0 && p.y <= canvas.y1
    };

    if !line.b().is_zero() {
        // Not vertical: intersect with the two vertical borders.
        for x in [&canvas.x0, &canvas.x1] {
            let p = line.point_at(x);
            if inside(&p) {
                hits.push(p);
            }
        }
    }
    if !line.a().is_zero() {
        // Not horizontal: intersect with the two horizontal borders.
        for y in [&canvas.y0, &canvas.y1] {
            let p = solve_for_x(line, y);
            if inside(&p) {
                hits.push(p);
            }
        }
    }
    hits.sort();
    hits.dedup();
    match (hits.first(), hits.last()) {
        (Some(a), Some(b)) if a != b => Some((a.clone(), b.clone())),
        _ => None,
    }
}

/// The point of `line` with the given y-coordinate; requires `a != 0`.
fn solve_for_x(line: &LineEq, y: &Rational) -> Point2 {
    let x = -(Rational::from_integer(line.c().clone())
        + Rational::from_integer(line.b().clone()) * y)
        / Rational::from_integer(line.a().clone());
    Point2::new(x, y.clone())
}
