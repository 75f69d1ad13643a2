//! Exact polygon construction for separable constant-sum loci, polygon
//! area/perimeter oracles, and a marching-squares tracer for the
//! non-separable curve families.
//!
//! The constant-sum region `{P : sum_i d1(P, F_i) <= S}` is separable:
//! it equals `{(x, y) : g(x) + h(y) <= S}` for the one-dimensional profiles
//! `g`, `h` of [`profile::abs_sum_profile`]. Its boundary is a convex
//! polygon whose vertices land exactly on profile breakpoints and on the
//! solutions of `g(x) = S - v` for breakpoint values `v` of `h`, so the
//! polygon is constructed exactly rather than traced. Hyperbolas and
//! parabolas carry no area/perimeter formulas here and are render-only via
//! [`contour::contour_sample`].

pub mod contour;
pub mod profile;

pub use contour::{contour_sample, sample_contours, BBox, TAU_CONTOUR};
pub use profile::{abs_sum_profile, PiecewiseLinearConvex};

use crate::metric::{taxicab_distance, Metric, Point};
use thiserror::Error;

/// Consecutive vertices closer than this (per coordinate) are merged.
pub const VERTEX_MERGE_TOL: f64 = 1e-12;

/// Sine-of-angle threshold under which consecutive edges count as collinear.
const COLLINEAR_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PolygonError {
    #[error("coordinate list must be nonempty")]
    EmptyCoords,
    #[error("coordinates must be finite")]
    NonFiniteInput,
    #[error("level-set threshold must be finite")]
    NonFiniteLevel,
    #[error("area requires a closed polygon")]
    OpenPolygon,
    #[error("area requires at least 3 vertices, got {0}")]
    TooFewVertices(usize),
}

/// An ordered vertex chain, optionally closed.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Point>,
    closed: bool,
}

impl Polygon {
    pub fn closed(vertices: Vec<Point>) -> Self {
        Self { vertices, closed: true }
    }

    pub fn open(vertices: Vec<Point>) -> Self {
        Self { vertices, closed: false }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Axis-aligned bounding box as `(lower_left, upper_right)`.
    /// `None` for an empty vertex list.
    pub fn bounding_box(&self) -> Option<(Point, Point)> {
        let first = self.vertices.first()?;
        let mut lo = *first;
        let mut hi = *first;
        for v in &self.vertices {
            lo.x = lo.x.min(v.x);
            lo.y = lo.y.min(v.y);
            hi.x = hi.x.max(v.x);
            hi.y = hi.y.max(v.y);
        }
        Some((lo, hi))
    }
}

/// A constant-sum level set that carries no interior: the empty set, the
/// single minimizer, a segment of minimizers, or the full axis-aligned
/// rectangle of minimizers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DegenerateSet {
    EmptySet,
    SinglePoint(Point),
    Segment(Point, Point),
    Rectangle { lo: Point, hi: Point },
}

impl DegenerateSet {
    /// Builds the appropriate variant from an axis-aligned box, collapsing
    /// zero-extent sides.
    pub fn from_box(x_lo: f64, x_hi: f64, y_lo: f64, y_hi: f64) -> Self {
        let flat_x = x_lo == x_hi;
        let flat_y = y_lo == y_hi;
        match (flat_x, flat_y) {
            (true, true) => DegenerateSet::SinglePoint(Point::new(x_lo, y_lo)),
            (true, false) => DegenerateSet::Segment(Point::new(x_lo, y_lo), Point::new(x_lo, y_hi)),
            (false, true) => DegenerateSet::Segment(Point::new(x_lo, y_lo), Point::new(x_hi, y_lo)),
            (false, false) => {
                DegenerateSet::Rectangle { lo: Point::new(x_lo, y_lo), hi: Point::new(x_hi, y_hi) }
            }
        }
    }

    /// Lebesgue area: zero except for the rectangle.
    pub fn area(&self) -> f64 {
        match self {
            DegenerateSet::Rectangle { lo, hi } => (hi.x - lo.x) * (hi.y - lo.y),
            _ => 0.0,
        }
    }

    /// Taxicab boundary length `2 (|dx| + |dy|)` of the spanned box; zero
    /// for a point, twice the length for a segment.
    pub fn taxicab_perimeter(&self) -> f64 {
        match self {
            DegenerateSet::EmptySet | DegenerateSet::SinglePoint(_) => 0.0,
            DegenerateSet::Segment(a, b) => 2.0 * taxicab_distance(*a, *b),
            DegenerateSet::Rectangle { lo, hi } => 2.0 * ((hi.x - lo.x) + (hi.y - lo.y)),
        }
    }
}

/// Outcome of [`sum_ellipse_polygon`]: a proper convex polygon above the
/// degeneration level, a degenerate set at or below it.
#[derive(Debug, Clone, PartialEq)]
pub enum SumEllipseShape {
    Polygon(Polygon),
    Degenerate(DegenerateSet),
}

/// Constructs the exact boundary of `{P : sum_i d1(P, F_i) <= S}`.
///
/// With `S0` the minimum attainable sum: `S < S0` yields the empty set,
/// `S = S0` the full minimizing rectangle (possibly a segment or point),
/// and `S > S0` a convex counterclockwise polygon starting at its
/// rightmost-lowest vertex, with no duplicate and no collinear vertices.
///
/// ```
/// use taxicurves::{sum_ellipse_polygon, Point, SumEllipseShape};
///
/// // Two axis-aligned foci give the hexagonal constant-sum locus.
/// let foci = [Point::new(0.0, 0.0), Point::new(2.0, 0.0)];
/// let SumEllipseShape::Polygon(hexagon) = sum_ellipse_polygon(&foci, 4.0).unwrap() else {
///     unreachable!("sum 4 exceeds the degeneration level 2");
/// };
/// assert_eq!(hexagon.vertices().len(), 6);
/// ```
pub fn sum_ellipse_polygon(foci: &[Point], s: f64) -> Result<SumEllipseShape, PolygonError> {
    if !s.is_finite() {
        return Err(PolygonError::NonFiniteLevel);
    }
    if foci.iter().any(|f| !f.is_finite()) {
        return Err(PolygonError::NonFiniteInput);
    }
    let xs: Vec<f64> = foci.iter().map(|f| f.x).collect();
    let ys: Vec<f64> = foci.iter().map(|f| f.y).collect();
    let g = abs_sum_profile(&xs)?;
    let h = abs_sum_profile(&ys)?;
    let s0 = g.min_value() + h.min_value();

    if s < s0 {
        return Ok(SumEllipseShape::Degenerate(DegenerateSet::EmptySet));
    }
    if s == s0 {
        let (x_lo, x_hi) = g.min_interval();
        let (y_lo, y_hi) = h.min_interval();
        return Ok(SumEllipseShape::Degenerate(DegenerateSet::from_box(x_lo, x_hi, y_lo, y_hi)));
    }

    let (x_lo, x_hi) =
        g.sublevel_interval(s - h.min_value()).expect("s > s0 implies a nonempty x-extent");

    // Candidate columns: the extent endpoints, every g-breakpoint inside,
    // and both solutions of g(x) = s - v for each h-breakpoint value v.
    // Candidates that turn out not to be kinks become collinear vertices
    // and are merged below, which keeps the vertex count canonical.
    let mut cands = vec![x_lo, x_hi];
    for &b in g.breakpoints() {
        if b > x_lo && b < x_hi {
            cands.push(b);
        }
    }
    for &v in h.breakpoint_values() {
        if let Some((a, b)) = g.sublevel_interval(s - v) {
            for t in [a, b] {
                if t > x_lo && t < x_hi {
                    cands.push(t);
                }
            }
        }
    }
    cands.sort_by(|a, b| a.partial_cmp(b).unwrap());
    cands.dedup_by(|a, b| (*a - *b).abs() <= VERTEX_MERGE_TOL);

    // Feasible y-interval at each candidate column. The extent endpoints
    // solve g(x) = s - min h, so re-evaluating g there can overshoot the
    // level by a rounding ulp; clamp to keep the column feasible.
    let y_interval = |x: f64| -> (f64, f64) {
        let level = (s - g.value(x)).max(h.min_value());
        h.sublevel_interval(level).expect("level clamped to at least min h")
    };

    let m = cands.len() - 1;
    let (first_lo, first_hi) = y_interval(cands[0]);
    let (last_lo, last_hi) = y_interval(cands[m]);

    // Counterclockwise assembly from the rightmost-lowest vertex: right
    // vertical edge (if any), upper chain right-to-left, left vertical edge
    // (if any), lower chain left-to-right.
    let mut vertices = Vec::with_capacity(2 * cands.len() + 2);
    vertices.push(Point::new(cands[m], last_lo));
    if last_hi - last_lo > VERTEX_MERGE_TOL {
        vertices.push(Point::new(cands[m], last_hi));
    }
    for &x in cands[..m].iter().rev() {
        let (_, hi) = y_interval(x);
        vertices.push(Point::new(x, hi));
    }
    if first_hi - first_lo > VERTEX_MERGE_TOL {
        vertices.push(Point::new(cands[0], first_lo));
    }
    for &x in &cands[1..m] {
        let (lo, _) = y_interval(x);
        vertices.push(Point::new(x, lo));
    }

    dedup_vertices(&mut vertices);
    merge_collinear(&mut vertices);

    if vertices.len() < 3 {
        // Only reachable when s sits within merging tolerance of s0; report
        // the minimizing set instead of a sliver.
        let (x_lo, x_hi) = g.min_interval();
        let (y_lo, y_hi) = h.min_interval();
        return Ok(SumEllipseShape::Degenerate(DegenerateSet::from_box(x_lo, x_hi, y_lo, y_hi)));
    }
    Ok(SumEllipseShape::Polygon(Polygon::closed(vertices)))
}

fn dedup_vertices(vertices: &mut Vec<Point>) {
    vertices.dedup_by(|a, b| {
        (a.x - b.x).abs() <= VERTEX_MERGE_TOL && (a.y - b.y).abs() <= VERTEX_MERGE_TOL
    });
    while vertices.len() > 1 {
        let first = vertices[0];
        let last = *vertices.last().unwrap();
        if (first.x - last.x).abs() <= VERTEX_MERGE_TOL
            && (first.y - last.y).abs() <= VERTEX_MERGE_TOL
        {
            vertices.pop();
        } else {
            break;
        }
    }
}

fn merge_collinear(vertices: &mut Vec<Point>) {
    loop {
        let n = vertices.len();
        if n < 3 {
            return;
        }
        let mut removed = false;
        let mut i = 0;
        while vertices.len() >= 3 && i < vertices.len() {
            let n = vertices.len();
            let prev = vertices[(i + n - 1) % n];
            let cur = vertices[i];
            let next = vertices[(i + 1) % n];
            let e1 = (cur.x - prev.x, cur.y - prev.y);
            let e2 = (next.x - cur.x, next.y - cur.y);
            let cross = e1.0 * e2.1 - e1.1 * e2.0;
            let l1 = e1.0.hypot(e1.1);
            let l2 = e2.0.hypot(e2.1);
            if cross.abs() <= COLLINEAR_TOL * l1 * l2 {
                vertices.remove(i);
                removed = true;
            } else {
                i += 1;
            }
        }
        if !removed {
            return;
        }
    }
}

/// Polygon area by the surveyor's formula; orientation-independent.
pub fn shoelace_area(poly: &Polygon) -> Result<f64, PolygonError> {
    if !poly.is_closed() {
        return Err(PolygonError::OpenPolygon);
    }
    let v = poly.vertices();
    if v.len() < 3 {
        return Err(PolygonError::TooFewVertices(v.len()));
    }
    let mut twice_area = 0.0;
    for i in 0..v.len() {
        let j = (i + 1) % v.len();
        twice_area += v[i].x * v[j].y - v[j].x * v[i].y;
    }
    Ok(twice_area.abs() / 2.0)
}

/// Sum of edge lengths under the given metric, including the closing edge
/// for closed polygons. Fewer than two vertices have zero length.
pub fn polygon_perimeter(poly: &Polygon, metric: Metric) -> f64 {
    let v = poly.vertices();
    if v.len() < 2 {
        return 0.0;
    }
    let mut length = 0.0;
    for w in v.windows(2) {
        length += metric.distance(w[0], w[1]);
    }
    if poly.is_closed() {
        length += metric.distance(*v.last().unwrap(), v[0]);
    }
    length
}
