//! Closed-form area and perimeter formulas for the stated taxicab regimes,
//! the taxicab Fermat–Torricelli minimizing set, and reconciliation of the
//! formulas against the exact polygon oracle.
//!
//! The formula route and the oracle route are deliberately kept separate:
//! the formulas are evaluated exactly as stated for their regimes, the
//! oracle measures the exactly constructed polygon, and [`reconcile`]
//! reports where the two disagree. Disagreements are surfaced, never
//! silently corrected. Rational arithmetic backs the trifocal formulas so
//! golden values like 4/3 or 28/9 are exact.

use crate::conic::{classify_ellipse, ConicError, EllipseRegime};
use crate::metric::{Metric, Point};
use crate::polygonize::{
    abs_sum_profile, polygon_perimeter, shoelace_area, sum_ellipse_polygon, DegenerateSet,
    PolygonError, SumEllipseShape,
};
use thiserror::Error;

/// Exact rational value.
pub type Rational = num_rational::Ratio<i64>;

/// Absolute tolerance at which [`reconcile`] declares agreement.
pub const RECONCILE_TOL: f64 = 1e-9;

/// The canonical trifocal focus triple `(-1,0), (1,0), (0,0)` for which the
/// closed-form trifocal area/perimeter formulas are stated.
pub const TRIFOCAL_CANONICAL_FOCI: [Point; 3] =
    [Point::new(-1.0, 0.0), Point::new(1.0, 0.0), Point::new(0.0, 0.0)];

/// Degeneration level of the canonical trifocal sum: at `S = 2` the locus
/// collapses to the Fermat–Torricelli point.
pub const TRIFOCAL_CANONICAL_S0: f64 = 2.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MeasureError {
    #[error("radius must be > 0, got {0}")]
    InvalidRadius(f64),
    #[error("the level set is empty: no measure applies")]
    EmptyClass,
    #[error("sum {s} degenerates at or below s0 = {s0}")]
    DegenerateSum { s: f64, s0: f64 },
    #[error("sum {s} lies below the minimum attainable sum {s0}: empty region")]
    EmptyRegion { s: f64, s0: f64 },
    #[error(transparent)]
    Conic(#[from] ConicError),
    #[error(transparent)]
    Polygon(#[from] PolygonError),
}

/// Area and perimeter of a region, with the metric the perimeter was
/// measured in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Measure {
    pub area: f64,
    pub perimeter: f64,
    pub perimeter_metric: Metric,
}

/// The minimizing set of the taxicab focal-distance sum and its value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FermatResult {
    pub minimizing_set: DegenerateSet,
    pub s0: f64,
}

/// Side-by-side comparison of the formula route and the oracle route.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReconciliationReport {
    pub formula: Measure,
    pub oracle: Measure,
    pub area_abs_diff: f64,
    pub perimeter_abs_diff: f64,
    pub area_agrees: bool,
    pub perimeter_agrees: bool,
}

/// Taxicab circle measures by the closed formulas: area `4 r^2`,
/// perimeter `8 r`.
pub fn circle_measures_formula(radius: f64) -> Result<Measure, MeasureError> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(MeasureError::InvalidRadius(radius));
    }
    Ok(Measure {
        area: 4.0 * radius * radius,
        perimeter: 8.0 * radius,
        perimeter_metric: Metric::Taxicab,
    })
}

/// Two-focus taxicab ellipse measures by the closed formulas of the
/// E.1–E.3 regimes, with `2 alpha = -gamma - delta`:
///
/// * E.1: area `2a * (-gamma)`, perimeter `2 (-gamma + 2a)`;
/// * E.2: area `(|dx| + 2a)(|dy| + 2a)`, perimeter `2 (|dx| + 2a) + 2 (|dy| + 2a)`;
/// * E.3: area `|dx| * |dy|`, perimeter `2 delta`.
///
/// The empty regime has no measure and errors.
pub fn two_focus_measures_formula(
    f1: Point,
    f2: Point,
    gamma: f64,
) -> Result<Measure, MeasureError> {
    let class = classify_ellipse(f1, f2, gamma)?;
    let delta = class.delta;
    let two_alpha = -gamma - delta;
    let dx = (f1.x - f2.x).abs();
    let dy = (f1.y - f2.y).abs();
    let (area, perimeter) = match class.regime {
        EllipseRegime::Hexagon => (two_alpha * -gamma, 2.0 * (-gamma + two_alpha)),
        EllipseRegime::Octagon => {
            ((dx + two_alpha) * (dy + two_alpha), 2.0 * (dx + two_alpha) + 2.0 * (dy + two_alpha))
        }
        EllipseRegime::DegenerateRectangle => (dx * dy, 2.0 * delta),
        EllipseRegime::Empty => return Err(MeasureError::EmptyClass),
    };
    Ok(Measure { area, perimeter, perimeter_metric: Metric::Taxicab })
}

/// Canonical trifocal measures by the closed piecewise formulas, exact in
/// rational arithmetic:
///
/// * `2 < S < 3`: area `4/3 (S - 2)^2`, perimeter `16/3 (S - 2)`;
/// * `S >= 3`: area `4/3 (S (S/3 - 1) + 1)`, perimeter `8/3 (S - 1)`.
///
/// Both branches agree at `S = 3`. `S <= 2` degenerates and errors.
pub fn trifocal_measures_formula_exact(s: Rational) -> Result<(Rational, Rational), MeasureError> {
    let two = Rational::from_integer(2);
    let three = Rational::from_integer(3);
    if s <= two {
        return Err(MeasureError::DegenerateSum {
            s: rational_to_f64(s),
            s0: TRIFOCAL_CANONICAL_S0,
        });
    }
    let four_thirds = Rational::new(4, 3);
    let (area, perimeter) = if s < three {
        let excess = s - two;
        (four_thirds * excess * excess, Rational::new(16, 3) * excess)
    } else {
        (
            four_thirds * (s * (s / three - Rational::from_integer(1)) + Rational::from_integer(1)),
            Rational::new(8, 3) * (s - Rational::from_integer(1)),
        )
    };
    Ok((area, perimeter))
}

/// Floating-point front end of [`trifocal_measures_formula_exact`].
pub fn trifocal_measures_formula(s: f64) -> Result<Measure, MeasureError> {
    if s.is_nan() || s <= TRIFOCAL_CANONICAL_S0 {
        return Err(MeasureError::DegenerateSum { s, s0: TRIFOCAL_CANONICAL_S0 });
    }
    let (area, perimeter) = if s < 3.0 {
        let excess = s - 2.0;
        (4.0 / 3.0 * excess * excess, 16.0 / 3.0 * excess)
    } else {
        (4.0 / 3.0 * (s * (s / 3.0 - 1.0) + 1.0), 8.0 / 3.0 * (s - 1.0))
    };
    Ok(Measure { area, perimeter, perimeter_metric: Metric::Taxicab })
}

pub fn rational_to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// The set of minimizers of `P -> sum_i d1(P, F_i)` and the minimum `S0`.
///
/// The sum is separable, so the minimizing set is the product of the
/// coordinatewise median intervals: a point, an axis-aligned segment, or a
/// rectangle.
pub fn fermat_point_taxicab(foci: &[Point]) -> Result<FermatResult, MeasureError> {
    if foci.iter().any(|f| !f.is_finite()) {
        return Err(MeasureError::Polygon(PolygonError::NonFiniteInput));
    }
    let xs: Vec<f64> = foci.iter().map(|f| f.x).collect();
    let ys: Vec<f64> = foci.iter().map(|f| f.y).collect();
    let g = abs_sum_profile(&xs)?;
    let h = abs_sum_profile(&ys)?;
    let (x_lo, x_hi) = g.min_interval();
    let (y_lo, y_hi) = h.min_interval();
    Ok(FermatResult {
        minimizing_set: DegenerateSet::from_box(x_lo, x_hi, y_lo, y_hi),
        s0: g.min_value() + h.min_value(),
    })
}

/// Exact-polygon measures of the constant-sum region: shoelace area and
/// taxicab perimeter. Degenerate sets at `S = S0` report the spanned box's
/// area and boundary length; an empty region errors.
pub fn measures_oracle(foci: &[Point], s: f64) -> Result<Measure, MeasureError> {
    match sum_ellipse_polygon(foci, s)? {
        SumEllipseShape::Polygon(poly) => Ok(Measure {
            area: shoelace_area(&poly)?,
            perimeter: polygon_perimeter(&poly, Metric::Taxicab),
            perimeter_metric: Metric::Taxicab,
        }),
        SumEllipseShape::Degenerate(DegenerateSet::EmptySet) => {
            let s0 = fermat_point_taxicab(foci)?.s0;
            Err(MeasureError::EmptyRegion { s, s0 })
        }
        SumEllipseShape::Degenerate(set) => Ok(Measure {
            area: set.area(),
            perimeter: set.taxicab_perimeter(),
            perimeter_metric: Metric::Taxicab,
        }),
    }
}

/// A parameter set that admits both a formula measure and an oracle measure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ReconcileTarget {
    Circle {
        radius: f64,
    },
    TwoFocusEllipse {
        f1: Point,
        f2: Point,
        gamma: f64,
    },
    /// Canonical trifocal foci with the given sum.
    Trifocal {
        s: f64,
    },
}

/// Pairs the formula measure with the oracle measure and reports the
/// absolute differences; agreement is judged at [`RECONCILE_TOL`].
pub fn reconcile(target: ReconcileTarget) -> Result<ReconciliationReport, MeasureError> {
    let (formula, oracle) = match target {
        ReconcileTarget::Circle { radius } => {
            (circle_measures_formula(radius)?, measures_oracle(&[Point::new(0.0, 0.0)], radius)?)
        }
        ReconcileTarget::TwoFocusEllipse { f1, f2, gamma } => {
            (two_focus_measures_formula(f1, f2, gamma)?, measures_oracle(&[f1, f2], -gamma)?)
        }
        ReconcileTarget::Trifocal { s } => {
            (trifocal_measures_formula(s)?, measures_oracle(&TRIFOCAL_CANONICAL_FOCI, s)?)
        }
    };
    let area_abs_diff = (formula.area - oracle.area).abs();
    let perimeter_abs_diff = (formula.perimeter - oracle.perimeter).abs();
    Ok(ReconciliationReport {
        formula,
        oracle,
        area_abs_diff,
        perimeter_abs_diff,
        area_agrees: area_abs_diff <= RECONCILE_TOL,
        perimeter_agrees: perimeter_abs_diff <= RECONCILE_TOL,
    })
}
