//! Deterministic SVG rendering.
//!
//! Separable loci are drawn from their exact polygons, the other families
//! from marching-squares chains. Coordinates are emitted with the y axis
//! negated so the mathematical y-up orientation maps onto the SVG y-down
//! one, and every number uses the shortest round-trip decimal form, so
//! identical requests produce byte-identical documents.

use std::fmt::Write;

use taxicurves::{
    contour_sample, sum_ellipse_polygon, BBox, ConicSpec, DegenerateSet, Line, Point,
    SumEllipseShape,
};

use crate::CliError;

const CURVE_COLOR: &str = "#1f77b4";
const FOCUS_COLOR: &str = "#d62728";
const DIRECTRIX_COLOR: &str = "#2ca02c";
const IMAGE_WIDTH: f64 = 640.0;

fn num(value: f64) -> String {
    format!("{value}")
}

/// Bounding box for the separable families: the exact polygon (or the
/// degenerate set) padded 20%.
pub fn default_bbox(spec: &ConicSpec) -> Result<BBox, CliError> {
    let (foci, sum) = match spec {
        ConicSpec::Circle { center, radius } => (vec![*center], *radius),
        ConicSpec::TwoFociEllipse { f1, f2, gamma } => (vec![*f1, *f2], -gamma),
        ConicSpec::SumEllipse { foci, sum } => (foci.clone(), *sum),
        ConicSpec::TwoFociHyperbola { .. } | ConicSpec::Parabola { .. } => {
            return Err(CliError::invalid("--bbox is required for hyperbola and parabola renders"));
        }
    };
    let shape = sum_ellipse_polygon(&foci, sum).map_err(CliError::from)?;
    let (lo, hi) = match &shape {
        SumEllipseShape::Polygon(poly) => poly.bounding_box().expect("closed polygon"),
        SumEllipseShape::Degenerate(set) => degenerate_box(set, &foci),
    };
    // Degenerate sets can have zero extent; keep the viewport nonempty.
    let width = (hi.x - lo.x).max(1e-6);
    let height = (hi.y - lo.y).max(1e-6);
    let pad_x = (width * 0.2).max(0.5);
    let pad_y = (height * 0.2).max(0.5);
    Ok(BBox::new(lo.x - pad_x, lo.y - pad_y, hi.x + pad_x, hi.y + pad_y))
}

fn degenerate_box(set: &DegenerateSet, foci: &[Point]) -> (Point, Point) {
    let points: Vec<Point> = match set {
        DegenerateSet::EmptySet => foci.to_vec(),
        DegenerateSet::SinglePoint(p) => vec![*p],
        DegenerateSet::Segment(a, b) => vec![*a, *b],
        DegenerateSet::Rectangle { lo, hi } => vec![*lo, *hi],
    };
    let mut lo = points[0];
    let mut hi = points[0];
    for p in points.iter().chain(foci.iter()) {
        lo.x = lo.x.min(p.x);
        lo.y = lo.y.min(p.y);
        hi.x = hi.x.max(p.x);
        hi.y = hi.y.max(p.y);
    }
    (lo, hi)
}

/// Renders the curve, its foci and (for parabolas) the directrix into a
/// standalone SVG 1.1 document with `viewBox` matching `bbox`.
pub fn render_svg(spec: &ConicSpec, bbox: BBox, resolution: usize) -> Result<String, CliError> {
    if !bbox.is_valid() {
        return Err(CliError::invalid("bbox must be finite with x0 < x1 and y0 < y1"));
    }
    if resolution < 2 {
        return Err(CliError::invalid("resolution must be at least 2"));
    }
    let width = bbox.width();
    let height = bbox.height();
    let stroke = width.max(height) / 320.0;
    let image_height = IMAGE_WIDTH * height / width;

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">",
        num(IMAGE_WIDTH),
        num(image_height),
        num(bbox.x_min),
        num(-bbox.y_max),
        num(width),
        num(height),
    );
    let _ = writeln!(
        svg,
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>",
        num(bbox.x_min),
        num(-bbox.y_max),
        num(width),
        num(height),
    );

    match spec {
        ConicSpec::Circle { .. }
        | ConicSpec::TwoFociEllipse { .. }
        | ConicSpec::SumEllipse { .. } => {
            let (foci, sum) = match spec {
                ConicSpec::Circle { center, radius } => (vec![*center], *radius),
                ConicSpec::TwoFociEllipse { f1, f2, gamma } => (vec![*f1, *f2], -gamma),
                ConicSpec::SumEllipse { foci, sum } => (foci.clone(), *sum),
                _ => unreachable!(),
            };
            match sum_ellipse_polygon(&foci, sum).map_err(CliError::from)? {
                SumEllipseShape::Polygon(poly) => {
                    push_path(&mut svg, poly.vertices(), true, CURVE_COLOR, stroke);
                }
                SumEllipseShape::Degenerate(set) => push_degenerate(&mut svg, &set, stroke),
            }
            push_foci(&mut svg, &foci, stroke);
        }
        ConicSpec::TwoFociHyperbola { f1, f2, .. } => {
            push_chains(&mut svg, spec, bbox, resolution, stroke);
            push_foci(&mut svg, &[*f1, *f2], stroke);
        }
        ConicSpec::Parabola { focus, directrix, .. } => {
            push_chains(&mut svg, spec, bbox, resolution, stroke);
            push_directrix(&mut svg, directrix, bbox, stroke);
            push_foci(&mut svg, &[*focus], stroke);
        }
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}

fn push_path(svg: &mut String, points: &[Point], close: bool, color: &str, stroke: f64) {
    if points.is_empty() {
        return;
    }
    let mut d = String::new();
    for (i, p) in points.iter().enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        let _ = write!(d, "{}{} {} ", cmd, num(p.x), num(-p.y));
    }
    let d = if close { format!("{}Z", d) } else { d.trim_end().to_string() };
    let _ = writeln!(
        svg,
        "<path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\"/>",
        d,
        color,
        num(stroke),
    );
}

fn push_chains(svg: &mut String, spec: &ConicSpec, bbox: BBox, resolution: usize, stroke: f64) {
    for chain in contour_sample(spec, bbox, resolution) {
        let closed = chain.len() > 2
            && chain.first().map(|p| (p.x.to_bits(), p.y.to_bits()))
                == chain.last().map(|p| (p.x.to_bits(), p.y.to_bits()));
        let points = if closed { &chain[..chain.len() - 1] } else { &chain[..] };
        push_path(svg, points, closed, CURVE_COLOR, stroke);
    }
}

fn push_degenerate(svg: &mut String, set: &DegenerateSet, stroke: f64) {
    match set {
        DegenerateSet::EmptySet => {}
        DegenerateSet::SinglePoint(p) => {
            let _ = writeln!(
                svg,
                "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\"/>",
                num(p.x),
                num(-p.y),
                num(stroke * 2.0),
                CURVE_COLOR,
            );
        }
        DegenerateSet::Segment(a, b) => push_path(svg, &[*a, *b], false, CURVE_COLOR, stroke),
        DegenerateSet::Rectangle { lo, hi } => {
            let _ = writeln!(
                svg,
                "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\"/>",
                num(lo.x),
                num(-hi.y),
                num(hi.x - lo.x),
                num(hi.y - lo.y),
                CURVE_COLOR,
                num(stroke),
            );
        }
    }
}

fn push_foci(svg: &mut String, foci: &[Point], stroke: f64) {
    for focus in foci {
        let _ = writeln!(
            svg,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\"/>",
            num(focus.x),
            num(-focus.y),
            num(stroke * 2.0),
            FOCUS_COLOR,
        );
    }
}

/// Clips `a*x + b*y + c = 0` to the viewport and draws it dashed.
fn push_directrix(svg: &mut String, line: &Line, bbox: BBox, stroke: f64) {
    let mut hits: Vec<Point> = Vec::new();
    let mut push = |p: Point| {
        let eps = 1e-9 * (1.0 + bbox.width().max(bbox.height()));
        if p.x >= bbox.x_min - eps
            && p.x <= bbox.x_max + eps
            && p.y >= bbox.y_min - eps
            && p.y <= bbox.y_max + eps
            && !hits.iter().any(|q| (q.x - p.x).abs() < eps && (q.y - p.y).abs() < eps)
        {
            hits.push(p);
        }
    };
    if line.b != 0.0 {
        for x in [bbox.x_min, bbox.x_max] {
            push(Point::new(x, -(line.a * x + line.c) / line.b));
        }
    }
    if line.a != 0.0 {
        for y in [bbox.y_min, bbox.y_max] {
            push(Point::new(-(line.b * y + line.c) / line.a, y));
        }
    }
    if hits.len() >= 2 {
        let (a, b) = (hits[0], hits[1]);
        let _ = writeln!(
            svg,
            "<path d=\"M{} {} L{} {}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\" stroke-dasharray=\"{}\"/>",
            num(a.x),
            num(-a.y),
            num(b.x),
            num(-b.y),
            DIRECTRIX_COLOR,
            num(stroke),
            num(stroke * 3.0),
        );
    }
}
