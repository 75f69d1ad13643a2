//! Column sweep that accumulates the area and perimeter of an implicit
//! region.
//!
//! The region is given by a signed function `f` with `{f <= 0}` feasible and
//! must satisfy the y-interval property: every vertical slice is empty or a
//! single closed interval (true for all convex regions, hence for every
//! constant-sum locus in either metric). The sweep walks columns from
//! `start_x` to `end_x` in `step` increments, finds each column's feasible
//! interval `[min_y, max_y]`, and accumulates
//!
//! * perimeter: the first nonempty column's vertical extent, then per column
//!   `dist(max_y, old_max_y) + dist(min_y, old_min_y)` where `dist` is the
//!   per-metric column distance, and finally the last nonempty column's
//!   vertical extent as the closing contribution;
//! * area: per column `(max_y - min_y) * step` plus the two triangular
//!   corrections `(max_y - old_max_y) * step / 2` and
//!   `(old_min_y - min_y) * step / 2`.
//!
//! Leading and trailing empty columns are tolerated: the opening
//! contribution is deferred to the first nonempty column and the closing
//! contribution uses the last nonempty one, so loose scan windows change
//! nothing on exact ones. Accumulation is strictly sequential
//! left-to-right; identical inputs give bitwise-identical outputs.

use crate::metric::{Metric, Point};
use crate::polygonize::abs_sum_profile;
use thiserror::Error;

/// Iteration cap for the ternary interior search and for each boundary
/// bisection.
const MAX_ITER: usize = 200;

/// Width floor at which the ternary interior search stops early.
const TERNARY_FLOOR: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScanError {
    #[error("scan config invalid: {0}")]
    InvalidConfig(&'static str),
    #[error("y bracket {bracket} does not contain the region at x = {x}")]
    BracketExceeded { x: f64, bracket: f64 },
    #[error("column distance is defined for the taxicab and Euclidean metrics only")]
    UnsupportedMetric,
    #[error("every column in the scan window is empty")]
    EmptyRegion,
    #[error("focus list must be nonempty")]
    NoFoci,
}

/// A region `{P : f(P) <= 0}` given by its signed value function.
///
/// Implementations must satisfy the y-interval property for
/// [`scan_area_perimeter`] to be meaningful.
pub trait ImplicitRegion {
    fn value(&self, p: Point) -> f64;
}

impl<F: Fn(Point) -> f64> ImplicitRegion for F {
    fn value(&self, p: Point) -> f64 {
        self(p)
    }
}

/// The constant-sum region `sum_i d(P, F_i) <= sum` under the given metric.
#[derive(Debug, Clone, PartialEq)]
pub struct SumEllipseRegion {
    foci: Vec<Point>,
    sum: f64,
    metric: Metric,
}

impl SumEllipseRegion {
    pub fn new(foci: Vec<Point>, sum: f64, metric: Metric) -> Result<Self, ScanError> {
        if foci.is_empty() {
            return Err(ScanError::NoFoci);
        }
        metric.validate().map_err(|_| ScanError::UnsupportedMetric)?;
        Ok(Self { foci, sum, metric })
    }

    pub fn foci(&self) -> &[Point] {
        &self.foci
    }

    pub fn sum(&self) -> f64 {
        self.sum
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }
}

impl ImplicitRegion for SumEllipseRegion {
    fn value(&self, p: Point) -> f64 {
        self.foci.iter().map(|f| self.metric.distance(p, *f)).sum::<f64>() - self.sum
    }
}

/// Sweep parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanConfig {
    pub start_x: f64,
    pub end_x: f64,
    pub step: f64,
    pub metric: Metric,
    /// Boundary bisection stops once the bracket is narrower than this.
    pub root_tol: f64,
    /// Half-width of the vertical search window per column.
    pub y_bracket: f64,
}

impl ScanConfig {
    /// Defaults: step 0.01, taxicab metric, root tolerance 1e-10, y bracket
    /// 1e3.
    pub fn new(start_x: f64, end_x: f64) -> Self {
        Self {
            start_x,
            end_x,
            step: 0.01,
            metric: Metric::Taxicab,
            root_tol: 1e-10,
            y_bracket: 1e3,
        }
    }

    pub fn with_step(mut self, step: f64) -> Self {
        self.step = step;
        self
    }

    pub fn with_metric(mut self, metric: Metric) -> Self {
        self.metric = metric;
        self
    }

    pub fn with_root_tol(mut self, root_tol: f64) -> Self {
        self.root_tol = root_tol;
        self
    }

    pub fn with_y_bracket(mut self, y_bracket: f64) -> Self {
        self.y_bracket = y_bracket;
        self
    }

    pub fn validate(&self) -> Result<(), ScanError> {
        let ordered =
            self.start_x.is_finite() && self.end_x.is_finite() && self.start_x <= self.end_x;
        if !ordered {
            return Err(ScanError::InvalidConfig("start_x must be finite and <= end_x"));
        }
        if !(self.step > 0.0 && self.step.is_finite()) {
            return Err(ScanError::InvalidConfig("step must be a positive finite real"));
        }
        if self.root_tol.is_nan() || self.root_tol <= 0.0 {
            return Err(ScanError::InvalidConfig("root_tol must be > 0"));
        }
        if !(self.y_bracket > 0.0 && self.y_bracket.is_finite()) {
            return Err(ScanError::InvalidConfig("y_bracket must be a positive finite real"));
        }
        if !supported_metric(self.metric) {
            return Err(ScanError::UnsupportedMetric);
        }
        Ok(())
    }
}

fn supported_metric(metric: Metric) -> bool {
    let k = metric.order();
    k == 1.0 || k == 2.0
}

/// Sweep outcome.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanResult {
    pub area: f64,
    pub perimeter: f64,
    pub columns_hit: usize,
    pub columns_empty: usize,
}

/// One nonempty column of a traced sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanColumn {
    pub x: f64,
    pub min_y: f64,
    pub max_y: f64,
}

/// Feasible vertical extent of the region at column `x`, or `None` for an
/// empty column.
///
/// A ternary search over `[-bracket, bracket]` locates the convex slice's
/// interior minimum of `f(x, .)`; if the minimum exceeds `max(tol, 1e-12)`
/// the column is empty, and a barely positive minimum reports the grazing
/// single-point column. Otherwise both boundary points are bisected with
/// the weak-sign invariant (`f <= 0` inside) and the inside endpoint of the
/// final bracket is returned, so a tiny `tol` converges to the last
/// representable feasible value.
///
/// Errors with [`ScanError::BracketExceeded`] when `f` is already feasible
/// at either bracket end, since the slice then extends past the window.
pub fn find_y_extremes(
    region: &impl ImplicitRegion,
    x: f64,
    bracket: f64,
    tol: f64,
) -> Result<Option<(f64, f64)>, ScanError> {
    let f = |y: f64| region.value(Point::new(x, y));
    if f(-bracket) <= 0.0 || f(bracket) <= 0.0 {
        return Err(ScanError::BracketExceeded { x, bracket });
    }

    // Ternary search for the interior minimum of the convex slice.
    let (mut lo, mut hi) = (-bracket, bracket);
    for _ in 0..MAX_ITER {
        if hi - lo <= TERNARY_FLOOR {
            break;
        }
        let third = (hi - lo) / 3.0;
        let m1 = lo + third;
        let m2 = hi - third;
        if m1 <= lo || m2 >= hi {
            break;
        }
        let f1 = f(m1);
        let f2 = f(m2);
        if f1 < f2 {
            hi = m2;
        } else if f2 < f1 {
            lo = m1;
        } else {
            lo = m1;
            hi = m2;
        }
    }
    let y_star = 0.5 * (lo + hi);
    let f_star = f(y_star);
    let feasible_tol = tol.max(1e-12);
    if f_star > feasible_tol {
        return Ok(None);
    }
    if f_star > 0.0 {
        // Grazing column: the region touches this column in (numerically)
        // a single point.
        return Ok(Some((y_star, y_star)));
    }

    let max_y = bisect_boundary(&f, y_star, bracket, tol);
    let min_y = bisect_boundary(&f, y_star, -bracket, tol);
    Ok(Some((min_y, max_y)))
}

/// Bisects between a feasible point and an infeasible one, returning the
/// feasible endpoint of the final bracket.
fn bisect_boundary(f: &impl Fn(f64) -> f64, inside: f64, outside: f64, tol: f64) -> f64 {
    let (mut a, mut b) = (inside, outside);
    for _ in 0..MAX_ITER {
        let mid = 0.5 * (a + b);
        if mid == a || mid == b {
            break;
        }
        if f(mid) <= 0.0 {
            a = mid;
        } else {
            b = mid;
        }
        if (b - a).abs() <= tol {
            break;
        }
    }
    a
}

/// Triangular area correction `(y1 - y2) * step / 2`, sign included.
#[inline]
pub fn trapezoid_correction(y1: f64, y2: f64, step: f64) -> f64 {
    (y1 - y2) * step / 2.0
}

/// Per-column boundary length between consecutive extreme values:
/// `|y - old_y| + |step|` for the taxicab metric, the hypotenuse for the
/// Euclidean one. Other Minkowski orders are unsupported.
pub fn column_distance(y: f64, old_y: f64, step: f64, metric: Metric) -> Result<f64, ScanError> {
    let k = metric.order();
    if k == 1.0 {
        Ok((y - old_y).abs() + step.abs())
    } else if k == 2.0 {
        Ok((y - old_y).hypot(step))
    } else {
        Err(ScanError::UnsupportedMetric)
    }
}

/// Runs the sweep; see the module documentation for the accumulation rules.
///
/// ```
/// use taxicurves::{scan_area_perimeter, Point, ScanConfig};
///
/// // The unit taxicab circle, swept at four columns per unit.
/// let circle = |p: Point| p.x.abs() + p.y.abs() - 1.0;
/// let cfg = ScanConfig::new(-1.0, 1.0).with_step(0.25);
/// let result = scan_area_perimeter(&circle, &cfg).unwrap();
/// assert!((result.area - 2.0).abs() < 1e-6);
/// assert!((result.perimeter - 8.0).abs() < 1e-6);
/// ```
pub fn scan_area_perimeter(
    region: &impl ImplicitRegion,
    cfg: &ScanConfig,
) -> Result<ScanResult, ScanError> {
    scan_engine(region, cfg, |_, _, _| {})
}

/// Runs the sweep and additionally records every nonempty column.
pub fn scan_area_perimeter_traced(
    region: &impl ImplicitRegion,
    cfg: &ScanConfig,
) -> Result<(ScanResult, Vec<ScanColumn>), ScanError> {
    let mut columns = Vec::new();
    let result = scan_engine(region, cfg, |x, min_y, max_y| {
        columns.push(ScanColumn { x, min_y, max_y });
    })?;
    Ok((result, columns))
}

fn scan_engine(
    region: &impl ImplicitRegion,
    cfg: &ScanConfig,
    mut on_column: impl FnMut(f64, f64, f64),
) -> Result<ScanResult, ScanError> {
    cfg.validate()?;
    let mut area = 0.0;
    let mut perimeter = 0.0;
    let mut columns_hit = 0usize;
    let mut columns_empty = 0usize;
    let mut previous: Option<(f64, f64)> = None;

    // Columns are generated as start_x + i*step rather than by repeated
    // addition, and the end bound carries a relative slack, so rounding
    // cannot drop the final column of an exact-extent window.
    let slack = (cfg.end_x - cfg.start_x).abs() * 1e-12;
    let mut index = 0u64;
    loop {
        let x = cfg.start_x + index as f64 * cfg.step;
        if x > cfg.end_x + slack {
            break;
        }
        match find_y_extremes(region, x, cfg.y_bracket, cfg.root_tol)? {
            None => columns_empty += 1,
            Some((min_y, max_y)) => {
                columns_hit += 1;
                on_column(x, min_y, max_y);
                match previous {
                    None => perimeter += max_y - min_y,
                    Some((old_min, old_max)) => {
                        perimeter += column_distance(max_y, old_max, cfg.step, cfg.metric)?
                            + column_distance(min_y, old_min, cfg.step, cfg.metric)?;
                        area += (max_y - min_y) * cfg.step
                            + trapezoid_correction(max_y, old_max, cfg.step)
                            + trapezoid_correction(old_min, min_y, cfg.step);
                    }
                }
                previous = Some((min_y, max_y));
            }
        }
        index += 1;
    }

    match previous {
        None => Err(ScanError::EmptyRegion),
        Some((min_y, max_y)) => {
            perimeter += max_y - min_y;
            Ok(ScanResult { area, perimeter, columns_hit, columns_empty })
        }
    }
}

/// The x-extent `[x_lo, x_hi]` of a nonempty constant-sum region, or `None`
/// when the sum lies below the minimum attainable value.
///
/// Exact (via the separable profiles) for the taxicab metric; located
/// numerically for the Euclidean one.
pub fn sum_ellipse_x_extent(
    foci: &[Point],
    sum: f64,
    metric: Metric,
) -> Result<Option<(f64, f64)>, ScanError> {
    if foci.is_empty() {
        return Err(ScanError::NoFoci);
    }
    if !supported_metric(metric) {
        return Err(ScanError::UnsupportedMetric);
    }
    if metric.order() == 1.0 {
        let xs: Vec<f64> = foci.iter().map(|f| f.x).collect();
        let ys: Vec<f64> = foci.iter().map(|f| f.y).collect();
        let g = abs_sum_profile(&xs).map_err(|_| ScanError::InvalidConfig("non-finite foci"))?;
        let h = abs_sum_profile(&ys).map_err(|_| ScanError::InvalidConfig("non-finite foci"))?;
        return Ok(g.sublevel_interval(sum - h.min_value()));
    }

    let region = SumEllipseRegion::new(foci.to_vec(), sum, metric)?;
    let spread = foci.iter().map(|f| f.x.abs().max(f.y.abs())).fold(0.0, f64::max);
    let y_bracket = sum.abs() + spread + 1.0;
    let reach = sum.abs() + spread + 1.0;
    let column_min = |x: f64| -> f64 {
        let f = |y: f64| region.value(Point::new(x, y));
        let (mut lo, mut hi) = (-y_bracket, y_bracket);
        for _ in 0..MAX_ITER {
            if hi - lo <= TERNARY_FLOOR {
                break;
            }
            let third = (hi - lo) / 3.0;
            let (m1, m2) = (lo + third, hi - third);
            if m1 <= lo || m2 >= hi {
                break;
            }
            if f(m1) < f(m2) {
                hi = m2;
            } else {
                lo = m1;
            }
        }
        f(0.5 * (lo + hi))
    };

    // Ternary in x for an interior feasible column, then bisect outward.
    let (mut lo, mut hi) = (-reach, reach);
    for _ in 0..MAX_ITER {
        if hi - lo <= TERNARY_FLOOR {
            break;
        }
        let third = (hi - lo) / 3.0;
        let (m1, m2) = (lo + third, hi - third);
        if m1 <= lo || m2 >= hi {
            break;
        }
        if column_min(m1) < column_min(m2) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    let x_star = 0.5 * (lo + hi);
    if column_min(x_star) > 0.0 {
        return Ok(None);
    }
    let x_hi = bisect_boundary(&column_min, x_star, reach, 1e-12);
    let x_lo = bisect_boundary(&column_min, x_star, -reach, 1e-12);
    Ok(Some((x_lo, x_hi)))
}
