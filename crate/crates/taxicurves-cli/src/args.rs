//! Command-line surface.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "taxicurves",
    version,
    about = "Classify, measure, scan and render taxicab-metric curves"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify an ellipse, hyperbola or parabola into its taxicab regime.
    Classify(ClassifyArgs),
    /// Compute formula and polygon-oracle measures with reconciliation.
    Measure(MeasureArgs),
    /// Sweep a constant-sum region, accumulating area and perimeter.
    Scan(ScanArgs),
    /// Render a curve as an SVG document.
    Render(RenderArgs),
    /// Locate the taxicab Fermat-Torricelli minimizing set.
    Fermat(FermatArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Circle,
    Ellipse,
    Hyperbola,
    Parabola,
    Trifocal,
    #[value(name = "sumellipse")]
    SumEllipse,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Circle => "circle",
            Family::Ellipse => "ellipse",
            Family::Hyperbola => "hyperbola",
            Family::Parabola => "parabola",
            Family::Trifocal => "trifocal",
            Family::SumEllipse => "sumellipse",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricArg {
    Taxicab,
    Euclidean,
}

impl MetricArg {
    pub fn name(self) -> &'static str {
        match self {
            MetricArg::Taxicab => "taxicab",
            MetricArg::Euclidean => "euclidean",
        }
    }

    pub fn to_metric(self) -> taxicurves::Metric {
        match self {
            MetricArg::Taxicab => taxicurves::Metric::Taxicab,
            MetricArg::Euclidean => taxicurves::Metric::Euclidean,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Curve family: ellipse, hyperbola or parabola.
    #[arg(long, value_enum)]
    pub family: Family,
    /// Semicolon-separated foci, e.g. "0,0;2,1".
    #[arg(long, allow_hyphen_values = true)]
    pub foci: Option<String>,
    /// Nonpositive constant of the two-focus families.
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<f64>,
    /// Parabola eccentricity (> 0).
    #[arg(long)]
    pub eccentricity: Option<f64>,
    /// Directrix coefficients "a,b,c" of a*x + b*y + c = 0.
    #[arg(long, allow_hyphen_values = true)]
    pub line: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MeasureArgs {
    /// Curve family: circle, ellipse, trifocal or sumellipse.
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long, allow_hyphen_values = true)]
    pub foci: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<f64>,
    /// Constant distance sum; accepts decimals ("2.5") and fractions ("5/2").
    #[arg(long, allow_hyphen_values = true)]
    pub sum: Option<String>,
    #[arg(long)]
    pub radius: Option<f64>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Semicolon-separated foci, e.g. "-1,0;1,0;0,0".
    #[arg(long, allow_hyphen_values = true)]
    pub foci: String,
    /// Constant distance sum; accepts decimals and fractions.
    #[arg(long, allow_hyphen_values = true)]
    pub sum: String,
    #[arg(long, value_enum, default_value = "taxicab")]
    pub metric: MetricArg,
    /// Column spacing.
    #[arg(long, default_value_t = 0.01)]
    pub step: f64,
    /// First column; defaults to the region's left extent.
    #[arg(long = "startx", allow_hyphen_values = true)]
    pub start_x: Option<f64>,
    /// Scan bound; defaults to the region's right extent.
    #[arg(long = "endx", allow_hyphen_values = true)]
    pub end_x: Option<f64>,
    /// json for the summary report, csv for the per-column dump.
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long, allow_hyphen_values = true)]
    pub foci: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub sum: Option<String>,
    #[arg(long)]
    pub radius: Option<f64>,
    #[arg(long)]
    pub eccentricity: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub line: Option<String>,
    /// Viewport "x0,y0,x1,y1"; required for hyperbola and parabola,
    /// defaults to the region box padded 20% otherwise.
    #[arg(long, allow_hyphen_values = true)]
    pub bbox: Option<String>,
    /// Contour grid nodes per axis (>= 2).
    #[arg(long, default_value_t = 256)]
    pub resolution: usize,
    #[arg(long, value_enum, default_value = "svg")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FermatArgs {
    /// Semicolon-separated foci.
    #[arg(long, allow_hyphen_values = true)]
    pub foci: String,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
