//! Distance primitives for the Minkowski family of plane metrics.
//!
//! The Minkowski distance of order `k >= 1` between two points is
//! `(|dx|^k + |dy|^k)^(1/k)`; order 1 is the taxicab (Manhattan) metric and
//! order 2 the Euclidean one. The taxicab distance from a point to a line
//! `ax + by + c = 0` has the closed form `|a*x + b*y + c| / max(|a|, |b|)`.

use thiserror::Error;

/// Errors from the distance primitives.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MetricError {
    /// A coordinate was NaN or infinite.
    #[error("coordinates must be finite")]
    NonFiniteInput,
    /// Minkowski order outside `[1, inf)`.
    #[error("Minkowski order must be a finite real >= 1, got {0}")]
    InvalidOrder(f64),
    /// Line with `a = b = 0` describes no line at all.
    #[error("line coefficients (a, b) must not both be zero")]
    DegenerateLine,
}

/// A location in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Self { x, y }
    }
}

/// Plane metric selector.
///
/// `Minkowski(k)` must have a finite order `k >= 1`; orders 1 and 2 are
/// routed through the same code paths as [`Metric::Taxicab`] and
/// [`Metric::Euclidean`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Metric {
    Taxicab,
    Euclidean,
    Minkowski(f64),
}

impl Metric {
    pub fn order(&self) -> f64 {
        match self {
            Metric::Taxicab => 1.0,
            Metric::Euclidean => 2.0,
            Metric::Minkowski(k) => *k,
        }
    }

    pub fn validate(&self) -> Result<(), MetricError> {
        match self {
            Metric::Minkowski(k) if !(k.is_finite() && *k >= 1.0) => {
                Err(MetricError::InvalidOrder(*k))
            }
            _ => Ok(()),
        }
    }

    /// Distance between two points under this metric.
    ///
    /// Assumes a valid metric (see [`Metric::validate`]); an invalid order
    /// produces meaningless values rather than panicking.
    pub fn distance(&self, a: Point, b: Point) -> f64 {
        let dx = (a.x - b.x).abs();
        let dy = (a.y - b.y).abs();
        match self {
            Metric::Taxicab => dx + dy,
            Metric::Euclidean => dx.hypot(dy),
            Metric::Minkowski(k) if *k == 1.0 => dx + dy,
            Metric::Minkowski(k) if *k == 2.0 => dx.hypot(dy),
            Metric::Minkowski(k) => {
                // Factor out the larger component so large coordinates or
                // large orders do not overflow the intermediate powers.
                let m = dx.max(dy);
                if m == 0.0 {
                    0.0
                } else {
                    m * ((dx / m).powf(*k) + (dy / m).powf(*k)).powf(1.0 / *k)
                }
            }
        }
    }
}

/// Taxicab (order-1) distance.
#[inline]
pub fn taxicab_distance(a: Point, b: Point) -> f64 {
    (a.x - b.x).abs() + (a.y - b.y).abs()
}

/// Euclidean (order-2) distance.
#[inline]
pub fn euclidean_distance(a: Point, b: Point) -> f64 {
    (a.x - b.x).hypot(a.y - b.y)
}

/// Minkowski distance of the given metric's order, with input validation.
///
/// ```
/// use taxicurves::{minkowski_distance, Metric, Point};
///
/// let a = Point::new(0.0, 0.0);
/// let b = Point::new(3.0, 4.0);
/// assert_eq!(minkowski_distance(a, b, Metric::Taxicab).unwrap(), 7.0);
/// assert_eq!(minkowski_distance(a, b, Metric::Euclidean).unwrap(), 5.0);
/// ```
pub fn minkowski_distance(a: Point, b: Point, metric: Metric) -> Result<f64, MetricError> {
    if !a.is_finite() || !b.is_finite() {
        return Err(MetricError::NonFiniteInput);
    }
    metric.validate()?;
    Ok(metric.distance(a, b))
}

/// A line `a*x + b*y + c = 0`.
///
/// `(a, b)` must not both be zero; [`Line::new`] enforces that.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl Line {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self, MetricError> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(MetricError::NonFiniteInput);
        }
        if a == 0.0 && b == 0.0 {
            return Err(MetricError::DegenerateLine);
        }
        Ok(Self { a, b, c })
    }

    /// `a*x + b*y + c` at the point.
    #[inline]
    pub fn eval(&self, p: Point) -> f64 {
        self.a * p.x + self.b * p.y + self.c
    }

    /// `max(|a|, |b|)`, the taxicab normalizer of the coefficients.
    #[inline]
    pub fn max_coeff(&self) -> f64 {
        self.a.abs().max(self.b.abs())
    }
}

/// Taxicab distance from a point to a line: `|a*x + b*y + c| / max(|a|, |b|)`.
///
/// Zero exactly when the point lies on the line.
pub fn point_line_distance_taxicab(p: Point, line: Line) -> Result<f64, MetricError> {
    if !p.is_finite() {
        return Err(MetricError::NonFiniteInput);
    }
    let m = line.max_coeff();
    if !(m > 0.0 && m.is_finite()) {
        return Err(MetricError::DegenerateLine);
    }
    Ok(line.eval(p).abs() / m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minkowski_taxicab_and_euclidean() {
        let a = Point::new(0.0, 0.0);
        let b = Point::new(3.0, 4.0);
        assert_eq!(minkowski_distance(a, b, Metric::Taxicab).unwrap(), 7.0);
        assert_eq!(minkowski_distance(a, b, Metric::Euclidean).unwrap(), 5.0);
        assert_eq!(minkowski_distance(a, b, Metric::Minkowski(1.0)).unwrap(), 7.0);
        assert_eq!(minkowski_distance(a, b, Metric::Minkowski(2.0)).unwrap(), 5.0);
    }

    #[test]
    fn minkowski_identity() {
        let p = Point::new(1.0, 1.0);
        for metric in [Metric::Taxicab, Metric::Euclidean, Metric::Minkowski(3.5)] {
            assert_eq!(minkowski_distance(p, p, metric).unwrap(), 0.0);
        }
    }

    #[test]
    fn minkowski_rejects_bad_input() {
        let a = Point::new(0.0, 0.0);
        let b = Point::new(f64::NAN, 0.0);
        assert_eq!(minkowski_distance(a, b, Metric::Taxicab), Err(MetricError::NonFiniteInput));
        assert_eq!(
            minkowski_distance(a, a, Metric::Minkowski(0.5)),
            Err(MetricError::InvalidOrder(0.5))
        );
        assert!(minkowski_distance(a, a, Metric::Minkowski(f64::NAN)).is_err());
    }

    #[test]
    fn point_line_distance_examples() {
        // Minimum of |x| + |y| over x + y = 2 is attained at (2,0) and (0,2).
        let l = Line::new(1.0, 1.0, -2.0).unwrap();
        assert_eq!(point_line_distance_taxicab(Point::new(0.0, 0.0), l).unwrap(), 2.0);

        let vertical = Line::new(1.0, 0.0, 0.0).unwrap();
        assert_eq!(point_line_distance_taxicab(Point::new(1.0, 1.0), vertical).unwrap(), 1.0);

        // Point on the line.
        let l = Line::new(2.0, 1.0, -3.0).unwrap();
        assert_eq!(point_line_distance_taxicab(Point::new(2.0, -1.0), l).unwrap(), 0.0);
    }

    #[test]
    fn degenerate_line_rejected() {
        assert_eq!(Line::new(0.0, 0.0, 1.0), Err(MetricError::DegenerateLine));
        let bogus = Line { a: 0.0, b: 0.0, c: 1.0 };
        assert_eq!(
            point_line_distance_taxicab(Point::new(0.0, 0.0), bogus),
            Err(MetricError::DegenerateLine)
        );
    }

    #[test]
    fn minkowski_large_order_stays_finite() {
        let a = Point::new(0.0, 0.0);
        let b = Point::new(3e8, 4e8);
        let d = minkowski_distance(a, b, Metric::Minkowski(700.0)).unwrap();
        assert!(d.is_finite());
        // Large orders approach the max coordinate difference.
        assert!((d - 4e8).abs() < 1e-2 * 4e8);
    }
}
