//! Marching-squares tracer for implicit curves.
//!
//! Samples a signed function on a uniform grid, classifies nodes by
//! `f <= 0`, refines every sign-changing grid edge by bisection and stitches
//! the per-cell segments into polyline chains. Chains are assembled in
//! row-major cell order from crossings computed once per grid edge, so the
//! output is deterministic and identical crossings match bit-for-bit.
//!
//! Being sign-based, the tracer can only see parts of a zero set across
//! which the function changes sign; measure-zero filaments with `f > 0` on
//! both sides (the tails of some degenerate hyperbolas) are invisible to it.

use crate::conic::ConicSpec;
use crate::metric::Point;

/// Residual tolerance for refined crossing points.
pub const TAU_CONTOUR: f64 = 1e-6;

/// Bisection step cap per crossing.
const MAX_REFINE: usize = 60;

/// An axis-aligned sampling window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BBox {
    pub x_min: f64,
    pub y_min: f64,
    pub x_max: f64,
    pub y_max: f64,
}

impl BBox {
    pub fn new(x_min: f64, y_min: f64, x_max: f64, y_max: f64) -> Self {
        Self { x_min, y_min, x_max, y_max }
    }

    pub fn width(&self) -> f64 {
        self.x_max - self.x_min
    }

    pub fn height(&self) -> f64 {
        self.y_max - self.y_min
    }

    pub fn is_valid(&self) -> bool {
        self.x_min.is_finite()
            && self.y_min.is_finite()
            && self.x_max.is_finite()
            && self.y_max.is_finite()
            && self.x_min < self.x_max
            && self.y_min < self.y_max
    }

    /// Grows the box by `fraction` of its extent on every side.
    pub fn padded(&self, fraction: f64) -> Self {
        let dx = self.width() * fraction;
        let dy = self.height() * fraction;
        Self::new(self.x_min - dx, self.y_min - dy, self.x_max + dx, self.y_max + dy)
    }
}

/// Traces the zero-crossing chains of a curve's residual on a
/// `resolution x resolution` node grid over `bbox`.
///
/// Every emitted point satisfies `|residual| <= TAU_CONTOUR`. Returns an
/// empty list when the grid sees no sign change (including for an invalid
/// box or `resolution < 2`).
pub fn contour_sample(spec: &ConicSpec, bbox: BBox, resolution: usize) -> Vec<Vec<Point>> {
    sample_contours(|p| spec.residual(p), bbox, resolution)
}

/// [`contour_sample`] generalized over any signed function with region
/// convention `f <= 0` inside.
pub fn sample_contours<F: Fn(Point) -> f64>(
    f: F,
    bbox: BBox,
    resolution: usize,
) -> Vec<Vec<Point>> {
    if !bbox.is_valid() || resolution < 2 {
        return Vec::new();
    }
    let res = resolution;
    let dx = bbox.width() / (res - 1) as f64;
    let dy = bbox.height() / (res - 1) as f64;
    let node =
        |i: usize, j: usize| Point::new(bbox.x_min + i as f64 * dx, bbox.y_min + j as f64 * dy);

    let mut values = vec![0.0; res * res];
    for j in 0..res {
        for i in 0..res {
            values[j * res + i] = f(node(i, j));
        }
    }
    let inside = |i: usize, j: usize| values[j * res + i] <= 0.0;

    // Crossing per grid edge, computed once so the two cells sharing an
    // edge reference the identical point.
    let mut h_cross: Vec<Option<Point>> = vec![None; (res - 1) * res];
    let mut v_cross: Vec<Option<Point>> = vec![None; res * (res - 1)];
    for j in 0..res {
        for i in 0..res - 1 {
            if inside(i, j) != inside(i + 1, j) {
                let (a, b) = (node(i, j), node(i + 1, j));
                let (fa, fb) = (values[j * res + i], values[j * res + i + 1]);
                h_cross[j * (res - 1) + i] = Some(refine_crossing(&f, a, fa, b, fb));
            }
        }
    }
    for j in 0..res - 1 {
        for i in 0..res {
            if inside(i, j) != inside(i, j + 1) {
                let (a, b) = (node(i, j), node(i, j + 1));
                let (fa, fb) = (values[j * res + i], values[(j + 1) * res + i]);
                v_cross[j * res + i] = Some(refine_crossing(&f, a, fa, b, fb));
            }
        }
    }

    let mut segments: Vec<(Point, Point)> = Vec::new();
    // Crossings can coincide when the curve passes through a grid node;
    // zero-length segments carry no geometry and are dropped.
    let mut emit = |a: Point, b: Point| {
        if key(a) != key(b) {
            segments.push((a, b));
        }
    };
    for j in 0..res - 1 {
        for i in 0..res - 1 {
            let bl = inside(i, j) as u8;
            let br = (inside(i + 1, j) as u8) << 1;
            let tr = (inside(i + 1, j + 1) as u8) << 2;
            let tl = (inside(i, j + 1) as u8) << 3;
            let case = bl | br | tr | tl;
            if case == 0 || case == 15 {
                continue;
            }
            let bottom = h_cross[j * (res - 1) + i];
            let top = h_cross[(j + 1) * (res - 1) + i];
            let left = v_cross[j * res + i];
            let right = v_cross[j * res + i + 1];
            let seg = |a: Option<Point>, b: Option<Point>| (a.unwrap(), b.unwrap());
            match case {
                1 | 14 => {
                    let (a, b) = seg(left, bottom);
                    emit(a, b);
                }
                2 | 13 => {
                    let (a, b) = seg(bottom, right);
                    emit(a, b);
                }
                4 | 11 => {
                    let (a, b) = seg(right, top);
                    emit(a, b);
                }
                8 | 7 => {
                    let (a, b) = seg(top, left);
                    emit(a, b);
                }
                3 | 12 => {
                    let (a, b) = seg(left, right);
                    emit(a, b);
                }
                6 | 9 => {
                    let (a, b) = seg(bottom, top);
                    emit(a, b);
                }
                5 | 10 => {
                    // Saddle: resolve the pairing from the cell center.
                    let center = Point::new(
                        bbox.x_min + (i as f64 + 0.5) * dx,
                        bbox.y_min + (j as f64 + 0.5) * dy,
                    );
                    let center_inside = f(center) <= 0.0;
                    let band = if case == 5 { center_inside } else { !center_inside };
                    if band {
                        let (a, b) = seg(left, top);
                        emit(a, b);
                        let (a, b) = seg(bottom, right);
                        emit(a, b);
                    } else {
                        let (a, b) = seg(left, bottom);
                        emit(a, b);
                        let (a, b) = seg(top, right);
                        emit(a, b);
                    }
                }
                _ => unreachable!(),
            }
        }
    }

    stitch(segments)
}

fn refine_crossing<F: Fn(Point) -> f64>(f: &F, a: Point, fa: f64, b: Point, fb: f64) -> Point {
    // Keep the weak-sign invariant: `inside` has f <= 0, `outside` f > 0.
    let (mut inside, mut outside) = if fa <= 0.0 { (a, b) } else { (b, a) };
    debug_assert!((fa <= 0.0) != (fb <= 0.0));
    if f(inside).abs() <= TAU_CONTOUR {
        return inside;
    }
    for _ in 0..MAX_REFINE {
        let mid = Point::new(0.5 * (inside.x + outside.x), 0.5 * (inside.y + outside.y));
        if mid == inside || mid == outside {
            break;
        }
        let v = f(mid);
        if v.abs() <= TAU_CONTOUR {
            return mid;
        }
        if v <= 0.0 {
            inside = mid;
        } else {
            outside = mid;
        }
    }
    Point::new(0.5 * (inside.x + outside.x), 0.5 * (inside.y + outside.y))
}

fn key(p: Point) -> (u64, u64) {
    (p.x.to_bits(), p.y.to_bits())
}

/// Links segments that share exact endpoints into chains. Closed chains
/// repeat their first point at the end.
fn stitch(segments: Vec<(Point, Point)>) -> Vec<Vec<Point>> {
    use std::collections::HashMap;

    let mut at_point: HashMap<(u64, u64), Vec<usize>> = HashMap::new();
    for (idx, (a, b)) in segments.iter().enumerate() {
        at_point.entry(key(*a)).or_default().push(idx);
        at_point.entry(key(*b)).or_default().push(idx);
    }

    let mut used = vec![false; segments.len()];
    let mut chains = Vec::new();
    for start in 0..segments.len() {
        if used[start] {
            continue;
        }
        used[start] = true;
        let (a, b) = segments[start];
        let mut chain = std::collections::VecDeque::from([a, b]);

        // Grow at the tail, then at the head, always taking the lowest
        // unused segment index so the result is order-deterministic.
        loop {
            let tail = *chain.back().unwrap();
            let next =
                at_point.get(&key(tail)).and_then(|ids| ids.iter().find(|&&i| !used[i]).copied());
            match next {
                Some(i) => {
                    used[i] = true;
                    let (a, b) = segments[i];
                    chain.push_back(if key(a) == key(tail) { b } else { a });
                }
                None => break,
            }
        }
        loop {
            let head = *chain.front().unwrap();
            let next =
                at_point.get(&key(head)).and_then(|ids| ids.iter().find(|&&i| !used[i]).copied());
            match next {
                Some(i) => {
                    used[i] = true;
                    let (a, b) = segments[i];
                    chain.push_front(if key(a) == key(head) { b } else { a });
                }
                None => break,
            }
        }
        let mut points: Vec<Point> = chain.into_iter().collect();
        points.dedup_by(|a, b| key(*a) == key(*b));
        if points.len() >= 2 {
            chains.push(points);
        }
    }
    chains
}
