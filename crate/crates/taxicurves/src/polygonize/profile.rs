//! Exact one-dimensional profiles `g(t) = sum_i |t - c_i|`.
//!
//! These convex piecewise-linear functions are the separable building
//! blocks of every constant-sum locus: with `g` built from the focus
//! x-coordinates and `h` from the y-coordinates, the region is
//! `{(x, y) : g(x) + h(y) <= S}`. Slopes step through
//! `-n, -n+2, ..., n-2, n` across the breakpoints, the minimum is attained
//! on the median interval, and sublevel sets are closed intervals whose
//! endpoints solve exactly on the linear pieces.

use super::PolygonError;

/// The profile `g(t) = sum_i |t - c_i|` over a nonempty coordinate multiset.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseLinearConvex {
    /// Input multiset, ascending (duplicates kept).
    breakpoints: Vec<f64>,
    /// Profile value at each breakpoint.
    values: Vec<f64>,
}

/// Builds the profile of `t -> sum_i |t - coords[i]|`.
pub fn abs_sum_profile(coords: &[f64]) -> Result<PiecewiseLinearConvex, PolygonError> {
    PiecewiseLinearConvex::from_coords(coords)
}

impl PiecewiseLinearConvex {
    pub fn from_coords(coords: &[f64]) -> Result<Self, PolygonError> {
        if coords.is_empty() {
            return Err(PolygonError::EmptyCoords);
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(PolygonError::NonFiniteInput);
        }
        let mut breakpoints = coords.to_vec();
        breakpoints.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let values =
            breakpoints.iter().map(|&t| breakpoints.iter().map(|&c| (t - c).abs()).sum()).collect();
        Ok(Self { breakpoints, values })
    }

    /// Number of input coordinates (counting multiplicity).
    pub fn point_count(&self) -> usize {
        self.breakpoints.len()
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    /// Profile values at the breakpoints, in breakpoint order.
    pub fn breakpoint_values(&self) -> &[f64] {
        &self.values
    }

    /// Evaluates the profile at `t` by direct summation, which is exact up
    /// to rounding for any `t`.
    pub fn value(&self, t: f64) -> f64 {
        self.breakpoints.iter().map(|&c| (t - c).abs()).sum()
    }

    /// The minimum of the profile, attained on [`Self::min_interval`].
    pub fn min_value(&self) -> f64 {
        let n = self.breakpoints.len();
        // For even counts the two median values are mathematically equal
        // but may differ by an ulp; take the smaller.
        self.values[(n - 1) / 2].min(self.values[n / 2])
    }

    /// The closed interval of minimizers: the median interval of the input
    /// multiset. Collapses to a point for odd counts.
    pub fn min_interval(&self) -> (f64, f64) {
        let n = self.breakpoints.len();
        (self.breakpoints[(n - 1) / 2], self.breakpoints[n / 2])
    }

    /// The sublevel set `{t : g(t) <= level}` as a closed interval, or
    /// `None` when `level` lies below the minimum. Endpoints are solved on
    /// the linear pieces; a level equal to the minimum returns the median
    /// interval.
    pub fn sublevel_interval(&self, level: f64) -> Option<(f64, f64)> {
        if level.is_nan() || level < self.min_value() {
            return None;
        }
        let n = self.breakpoints.len();
        let b = &self.breakpoints;
        let v = &self.values;
        let nf = n as f64;

        let lo = if level >= v[0] {
            // Outer-left piece has slope -n.
            b[0] - (level - v[0]) / nf
        } else {
            // Descending pieces: find the segment with v[i-1] > level >= v[i].
            let mut lo = b[0];
            for i in 1..n {
                if v[i] <= level {
                    let slope = 2.0 * i as f64 - nf;
                    // A zero slope is the median plateau, reachable only
                    // when its two values differ by rounding; snap to its
                    // edge instead of dividing.
                    lo =
                        if slope == 0.0 { b[i - 1] } else { b[i - 1] + (level - v[i - 1]) / slope };
                    break;
                }
            }
            lo
        };

        let hi = if level >= v[n - 1] {
            // Outer-right piece has slope +n.
            b[n - 1] + (level - v[n - 1]) / nf
        } else {
            // Ascending pieces: find the segment with v[j] <= level < v[j+1].
            let mut hi = b[n - 1];
            for j in (0..n - 1).rev() {
                if v[j] <= level {
                    let slope = 2.0 * (j + 1) as f64 - nf;
                    hi = if slope == 0.0 { b[j + 1] } else { b[j] + (level - v[j]) / slope };
                    break;
                }
            }
            hi
        };

        Some((lo, hi))
    }
}
