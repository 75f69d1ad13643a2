//! Second-order curves and multifocal ellipses under the taxicab metric.
//!
//! The crate provides, per module:
//!
//! * [`metric`]: Minkowski point distances and the taxicab point-to-line
//!   distance;
//! * [`conic`]: defining-equation residuals for the five curve families and
//!   the taxicab regime classifiers (E.1–E.3, H.1–H.3, P.1–P.6);
//! * [`polygonize`]: exact convex polygons for separable constant-sum
//!   loci, polygon area/perimeter oracles, and a marching-squares tracer
//!   for the rest;
//! * [`measures`]: closed-form area/perimeter formulas for the stated
//!   regimes, the taxicab Fermat–Torricelli set, and reconciliation of
//!   formulas against the polygon oracle;
//! * [`scan`]: a column sweep that estimates area and perimeter of any
//!   convex implicit region in either metric.
//!
//! Everything is a pure function of its arguments and safe for unlimited
//! concurrent use.

pub mod conic;
pub mod measures;
pub mod metric;
pub mod polygonize;
pub mod scan;

pub use conic::{
    classify_ellipse, classify_hyperbola, classify_parabola, general_conic_residual, Alpha,
    BranchSign, ConicError, ConicSpec, EllipseClass, EllipseRegime, GeneralConicSpec,
    HyperbolaClass, HyperbolaRegime, ParabolaClass, ParabolaRegime, TAU_CLASS,
};
pub use measures::{
    circle_measures_formula, fermat_point_taxicab, measures_oracle, reconcile,
    trifocal_measures_formula, trifocal_measures_formula_exact, two_focus_measures_formula,
    FermatResult, Measure, MeasureError, Rational, ReconcileTarget, ReconciliationReport,
    RECONCILE_TOL, TRIFOCAL_CANONICAL_FOCI, TRIFOCAL_CANONICAL_S0,
};
pub use metric::{
    euclidean_distance, minkowski_distance, point_line_distance_taxicab, taxicab_distance, Line,
    Metric, MetricError, Point,
};
pub use polygonize::{
    abs_sum_profile, contour_sample, polygon_perimeter, sample_contours, shoelace_area,
    sum_ellipse_polygon, BBox, DegenerateSet, PiecewiseLinearConvex, Polygon, PolygonError,
    SumEllipseShape, TAU_CONTOUR, VERTEX_MERGE_TOL,
};
pub use scan::{
    column_distance, find_y_extremes, scan_area_perimeter, scan_area_perimeter_traced,
    sum_ellipse_x_extent, trapezoid_correction, ImplicitRegion, ScanColumn, ScanConfig, ScanError,
    ScanResult, SumEllipseRegion,
};
