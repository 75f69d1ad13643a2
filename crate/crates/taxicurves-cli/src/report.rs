//! JSON report types. Field order is the wire schema; keys serialize in
//! declaration order, so identical requests produce identical documents.

use serde::Serialize;
use taxicurves::{DegenerateSet, Measure, Metric, ReconciliationReport};

pub fn metric_name(metric: Metric) -> &'static str {
    match metric {
        Metric::Taxicab => "taxicab",
        Metric::Euclidean => "euclidean",
        Metric::Minkowski(_) => "minkowski",
    }
}

pub fn point_json(p: taxicurves::Point) -> [f64; 2] {
    [p.x, p.y]
}

#[derive(Debug, Serialize)]
pub struct MeasureJson {
    pub area: f64,
    pub perimeter: f64,
    pub metric: &'static str,
}

impl From<Measure> for MeasureJson {
    fn from(m: Measure) -> Self {
        Self { area: m.area, perimeter: m.perimeter, metric: metric_name(m.perimeter_metric) }
    }
}

/// Exact fraction strings of the formula route, present when the requested
/// level is an exact rational.
#[derive(Debug, Serialize)]
pub struct ExactMeasureJson {
    pub area: String,
    pub perimeter: String,
}

#[derive(Debug, Serialize)]
pub struct ReconciliationJson {
    pub area_abs_diff: f64,
    pub perimeter_abs_diff: f64,
    pub area_agrees: bool,
    pub perimeter_agrees: bool,
}

impl From<&ReconciliationReport> for ReconciliationJson {
    fn from(r: &ReconciliationReport) -> Self {
        Self {
            area_abs_diff: r.area_abs_diff,
            perimeter_abs_diff: r.perimeter_abs_diff,
            area_agrees: r.area_agrees,
            perimeter_agrees: r.perimeter_agrees,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ClassifyReport {
    pub command: &'static str,
    pub family: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub foci: Option<Vec<[f64; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eccentricity: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<[f64; 3]>,
    pub class: &'static str,
    /// Regime tag such as "E.1"; absent for extrapolated classes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regime: Option<&'static str>,
    pub predicate: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta: Option<f64>,
    /// Directrix slope magnitude; the string "infinity" for vertical
    /// directrices (JSON numbers cannot carry infinities).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<serde_json::Value>,
    pub extrapolated: bool,
    pub warnings: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct MeasureReport {
    pub command: &'static str,
    pub family: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub foci: Option<Vec<[f64; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sum: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regime: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula: Option<MeasureJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula_exact: Option<ExactMeasureJson>,
    pub oracle: MeasureJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reconciliation: Option<ReconciliationJson>,
    pub warnings: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ScanReport {
    pub command: &'static str,
    pub foci: Vec<[f64; 2]>,
    pub sum: f64,
    pub metric: &'static str,
    pub step: f64,
    pub start_x: f64,
    pub end_x: f64,
    pub area: f64,
    pub perimeter: f64,
    pub columns_hit: usize,
    pub columns_empty: usize,
}

#[derive(Debug, Serialize)]
pub struct MinimizingSetJson {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub endpoints: Option<[[f64; 2]; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corner_lo: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corner_hi: Option<[f64; 2]>,
}

impl From<DegenerateSet> for MinimizingSetJson {
    fn from(set: DegenerateSet) -> Self {
        match set {
            DegenerateSet::EmptySet => Self {
                kind: "empty",
                point: None,
                endpoints: None,
                corner_lo: None,
                corner_hi: None,
            },
            DegenerateSet::SinglePoint(p) => Self {
                kind: "point",
                point: Some(point_json(p)),
                endpoints: None,
                corner_lo: None,
                corner_hi: None,
            },
            DegenerateSet::Segment(a, b) => Self {
                kind: "segment",
                point: None,
                endpoints: Some([point_json(a), point_json(b)]),
                corner_lo: None,
                corner_hi: None,
            },
            DegenerateSet::Rectangle { lo, hi } => Self {
                kind: "rectangle",
                point: None,
                endpoints: None,
                corner_lo: Some(point_json(lo)),
                corner_hi: Some(point_json(hi)),
            },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FermatReport {
    pub command: &'static str,
    pub foci: Vec<[f64; 2]>,
    pub s0: f64,
    pub minimizing_set: MinimizingSetJson,
}
