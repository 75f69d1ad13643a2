use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use taxicurves::{
    contour_sample, measures_oracle, scan_area_perimeter, sum_ellipse_polygon, BBox, ConicSpec,
    Metric, Point, TRIFOCAL_CANONICAL_FOCI,
};
use taxicurves_bench::{bench_scan_config, canonical_region, eight_foci};

fn bench_polygonize(c: &mut Criterion) {
    let foci = eight_foci();
    c.bench_function("sum_ellipse_polygon/trifocal", |b| {
        b.iter(|| sum_ellipse_polygon(black_box(&TRIFOCAL_CANONICAL_FOCI), black_box(4.0)))
    });
    c.bench_function("sum_ellipse_polygon/eight_foci", |b| {
        b.iter(|| sum_ellipse_polygon(black_box(&foci), black_box(20.0)))
    });
    c.bench_function("measures_oracle/trifocal", |b| {
        b.iter(|| measures_oracle(black_box(&TRIFOCAL_CANONICAL_FOCI), black_box(4.0)))
    });
}

fn bench_scan(c: &mut Criterion) {
    let taxicab = canonical_region(Metric::Taxicab);
    let euclidean = canonical_region(Metric::Euclidean);
    c.bench_function("scan/taxicab_step_0.01", |b| {
        b.iter(|| scan_area_perimeter(black_box(&taxicab), &bench_scan_config(Metric::Taxicab)))
    });
    c.bench_function("scan/euclidean_step_0.01", |b| {
        b.iter(|| scan_area_perimeter(black_box(&euclidean), &bench_scan_config(Metric::Euclidean)))
    });
}

fn bench_contour(c: &mut Criterion) {
    let hyperbola = ConicSpec::TwoFociHyperbola {
        f1: Point::new(0.0, 0.0),
        f2: Point::new(4.0, 2.0),
        gamma: -4.0,
    };
    let bbox = BBox::new(-2.0, -2.0, 6.0, 4.0);
    c.bench_function("contour_sample/hyperbola_128", |b| {
        b.iter(|| contour_sample(black_box(&hyperbola), black_box(bbox), black_box(128)))
    });
}

criterion_group!(benches, bench_polygonize, bench_scan, bench_contour);
criterion_main!(benches);
