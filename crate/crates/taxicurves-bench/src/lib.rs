//! Shared fixtures for the criterion benches.

use taxicurves::{Metric, Point, ScanConfig, SumEllipseRegion};

/// The canonical trifocal region at sum 3 under the requested metric.
pub fn canonical_region(metric: Metric) -> SumEllipseRegion {
    SumEllipseRegion::new(taxicurves::TRIFOCAL_CANONICAL_FOCI.to_vec(), 3.0, metric)
        .expect("canonical region is valid")
}

/// A fixed eight-focus cloud for polygonization benches.
pub fn eight_foci() -> Vec<Point> {
    vec![
        Point::new(-1.3, 0.2),
        Point::new(0.7, -0.9),
        Point::new(1.9, 1.4),
        Point::new(-0.4, 2.1),
        Point::new(0.0, 0.0),
        Point::new(2.4, -0.6),
        Point::new(-2.0, -1.1),
        Point::new(0.9, 0.8),
    ]
}

/// Scan configuration used across the sweep benches.
pub fn bench_scan_config(metric: Metric) -> ScanConfig {
    ScanConfig::new(-1.0, 1.0).with_step(0.01).with_metric(metric)
}
