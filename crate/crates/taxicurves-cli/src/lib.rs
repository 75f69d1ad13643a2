//! Command implementations behind the `taxicurves` binary.
//!
//! Exit codes: 0 on success, 2 for invalid input (including argument
//! parsing and unwritable output paths), 3 when the requested region or
//! measure is empty or degenerate.

pub mod args;
pub mod render;
pub mod report;

use std::path::PathBuf;

use taxicurves::{
    classify_ellipse, classify_hyperbola, classify_parabola, fermat_point_taxicab, measures_oracle,
    reconcile, trifocal_measures_formula_exact, BBox, ConicError, ConicSpec, Line, MeasureError,
    MetricError, Point, PolygonError, Rational, ReconcileTarget, ScanConfig, ScanError,
    SumEllipseRegion, TRIFOCAL_CANONICAL_FOCI,
};

pub use args::{Cli, Command, Family, Format, MetricArg};
use report::{
    point_json, ClassifyReport, ExactMeasureJson, FermatReport, MeasureJson, MeasureReport,
    ReconciliationJson, ScanReport,
};

/// Exit code 2: invalid input. Exit code 3: empty or degenerate region.
#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn invalid(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    pub fn empty(message: impl Into<String>) -> Self {
        Self { code: 3, message: message.into() }
    }
}

impl From<MetricError> for CliError {
    fn from(e: MetricError) -> Self {
        CliError::invalid(e.to_string())
    }
}

impl From<ConicError> for CliError {
    fn from(e: ConicError) -> Self {
        CliError::invalid(e.to_string())
    }
}

impl From<PolygonError> for CliError {
    fn from(e: PolygonError) -> Self {
        CliError::invalid(e.to_string())
    }
}

impl From<MeasureError> for CliError {
    fn from(e: MeasureError) -> Self {
        match e {
            MeasureError::EmptyRegion { .. }
            | MeasureError::EmptyClass
            | MeasureError::DegenerateSum { .. } => CliError::empty(e.to_string()),
            other => CliError::invalid(other.to_string()),
        }
    }
}

impl From<ScanError> for CliError {
    fn from(e: ScanError) -> Self {
        match e {
            ScanError::EmptyRegion => CliError::empty(e.to_string()),
            other => CliError::invalid(other.to_string()),
        }
    }
}

/// A finished command: the report text and where it should go.
#[derive(Debug)]
pub struct Execution {
    pub text: String,
    pub out: Option<PathBuf>,
}

/// Parses an argument vector (including the binary name) without exiting
/// the process; drives the CLI from tests.
pub fn parse_cli_from<I, T>(args: I) -> Result<Cli, String>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    Cli::try_parse_from(args).map_err(|e| e.to_string())
}

/// Executes a parsed command, producing the report text.
pub fn execute(command: &Command) -> Result<Execution, CliError> {
    match command {
        Command::Classify(args) => classify(args),
        Command::Measure(args) => measure(args),
        Command::Scan(args) => scan(args),
        Command::Render(args) => render_command(args),
        Command::Fermat(args) => fermat(args),
    }
}

/// Executes and routes the output; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match execute(&cli.command) {
        Ok(execution) => match execution.out {
            Some(path) => match std::fs::write(&path, execution.text) {
                Ok(()) => 0,
                Err(e) => {
                    eprintln!("error: cannot write {}: {}", path.display(), e);
                    2
                }
            },
            None => {
                print!("{}", execution.text);
                0
            }
        },
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

// ---------------------------------------------------------------------------
// flag parsing
// ---------------------------------------------------------------------------

fn parse_number(text: &str, flag: &str) -> Result<f64, CliError> {
    let value: f64 = text
        .trim()
        .parse()
        .map_err(|_| CliError::invalid(format!("{flag}: cannot parse '{text}' as a number")))?;
    if !value.is_finite() {
        return Err(CliError::invalid(format!("{flag}: value must be finite")));
    }
    Ok(value)
}

/// Parses "x,y;x,y;..." into points.
pub fn parse_foci(text: &str) -> Result<Vec<Point>, CliError> {
    let mut foci = Vec::new();
    for pair in text.split(';') {
        let pair = pair.trim();
        if pair.is_empty() {
            continue;
        }
        let coords: Vec<&str> = pair.split(',').collect();
        if coords.len() != 2 {
            return Err(CliError::invalid(format!(
                "--foci: expected 'x,y' pairs separated by ';', got '{pair}'"
            )));
        }
        foci.push(Point::new(
            parse_number(coords[0], "--foci")?,
            parse_number(coords[1], "--foci")?,
        ));
    }
    if foci.is_empty() {
        return Err(CliError::invalid("--foci: at least one 'x,y' pair is required"));
    }
    Ok(foci)
}

/// Parses "a,b,c" into a line.
pub fn parse_line(text: &str) -> Result<Line, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::invalid(format!("--line: expected 'a,b,c', got '{text}'")));
    }
    Ok(Line::new(
        parse_number(parts[0], "--line")?,
        parse_number(parts[1], "--line")?,
        parse_number(parts[2], "--line")?,
    )?)
}

/// Parses "x0,y0,x1,y1" into a viewport.
pub fn parse_bbox(text: &str) -> Result<BBox, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 4 {
        return Err(CliError::invalid(format!("--bbox: expected 'x0,y0,x1,y1', got '{text}'")));
    }
    let bbox = BBox::new(
        parse_number(parts[0], "--bbox")?,
        parse_number(parts[1], "--bbox")?,
        parse_number(parts[2], "--bbox")?,
        parse_number(parts[3], "--bbox")?,
    );
    if !bbox.is_valid() {
        return Err(CliError::invalid("--bbox: requires x0 < x1 and y0 < y1"));
    }
    Ok(bbox)
}

/// Parses a level that may be a fraction ("5/2"), keeping the exact
/// rational alongside the float when one exists.
pub fn parse_sum(text: &str) -> Result<(f64, Option<Rational>), CliError> {
    let text = text.trim();
    if let Some((numer, denom)) = text.split_once('/') {
        let numer: i64 = numer
            .trim()
            .parse()
            .map_err(|_| CliError::invalid(format!("--sum: bad fraction '{text}'")))?;
        let denom: i64 = denom
            .trim()
            .parse()
            .map_err(|_| CliError::invalid(format!("--sum: bad fraction '{text}'")))?;
        if denom == 0 {
            return Err(CliError::invalid("--sum: fraction denominator must be nonzero"));
        }
        let ratio = Rational::new(numer, denom);
        return Ok((*ratio.numer() as f64 / *ratio.denom() as f64, Some(ratio)));
    }
    let value = parse_number(text, "--sum")?;
    Ok((value, decimal_to_rational(text)))
}

/// Exact rational value of a plain decimal literal, when it fits in i64.
fn decimal_to_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (sign, digits) = match text.strip_prefix('-') {
        Some(rest) => (-1i64, rest),
        None => (1i64, text.strip_prefix('+').unwrap_or(text)),
    };
    let (integer, fraction) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if integer.is_empty() && fraction.is_empty() {
        return None;
    }
    if !integer.chars().all(|c| c.is_ascii_digit())
        || !fraction.chars().all(|c| c.is_ascii_digit())
        || fraction.len() > 15
    {
        return None;
    }
    let mut numer: i64 = 0;
    for c in integer.chars().chain(fraction.chars()) {
        numer = numer.checked_mul(10)?.checked_add((c as u8 - b'0') as i64)?;
    }
    let denom = 10i64.checked_pow(fraction.len() as u32)?;
    Some(Rational::new(sign * numer, denom))
}

fn require<T>(value: Option<T>, message: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::invalid(message))
}

fn two_foci(foci: &[Point]) -> Result<(Point, Point), CliError> {
    if foci.len() != 2 {
        return Err(CliError::invalid(format!(
            "this family takes exactly two foci, got {}",
            foci.len()
        )));
    }
    Ok((foci[0], foci[1]))
}

fn to_json(report: &impl serde::Serialize) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("reports serialize");
    text.push('\n');
    text
}

fn extrapolated_warning(label: &str) -> String {
    format!("class '{label}' is extrapolated: not part of the printed regime table")
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

fn classify(args: &args::ClassifyArgs) -> Result<Execution, CliError> {
    if args.format != Format::Json {
        return Err(CliError::invalid("classify reports are json only"));
    }
    let report = match args.family {
        Family::Ellipse => {
            let foci = parse_foci(require(args.foci.as_deref(), "--foci is required")?)?;
            let (f1, f2) = two_foci(&foci)?;
            let gamma = require(args.gamma, "--gamma is required")?;
            let class = classify_ellipse(f1, f2, gamma)?;
            let mut warnings = Vec::new();
            if class.regime.is_extrapolated() {
                warnings.push(extrapolated_warning(class.regime.label()));
            }
            ClassifyReport {
                command: "classify",
                family: "ellipse",
                foci: Some(foci.iter().copied().map(point_json).collect()),
                gamma: Some(gamma),
                eccentricity: None,
                line: None,
                class: class.regime.label(),
                regime: class.regime.regime_tag(),
                predicate: class.regime.predicate(),
                delta: Some(class.delta),
                eta: None,
                rho: None,
                extrapolated: class.regime.is_extrapolated(),
                warnings,
            }
        }
        Family::Hyperbola => {
            let foci = parse_foci(require(args.foci.as_deref(), "--foci is required")?)?;
            let (f1, f2) = two_foci(&foci)?;
            let gamma = require(args.gamma, "--gamma is required")?;
            let class = classify_hyperbola(f1, f2, gamma)?;
            let mut warnings = Vec::new();
            if class.regime.is_extrapolated() {
                warnings.push(extrapolated_warning(class.regime.label()));
            }
            ClassifyReport {
                command: "classify",
                family: "hyperbola",
                foci: Some(foci.iter().copied().map(point_json).collect()),
                gamma: Some(gamma),
                eccentricity: None,
                line: None,
                class: class.regime.label(),
                regime: class.regime.regime_tag(),
                predicate: class.regime.predicate(),
                delta: Some(class.delta),
                eta: Some(class.eta),
                rho: None,
                extrapolated: class.regime.is_extrapolated(),
                warnings,
            }
        }
        Family::Parabola => {
            let foci = parse_foci(require(args.foci.as_deref(), "--foci is required")?)?;
            if foci.len() != 1 {
                return Err(CliError::invalid("parabola takes exactly one focus"));
            }
            let line = parse_line(require(args.line.as_deref(), "--line is required")?)?;
            let eccentricity = require(args.eccentricity, "--eccentricity is required")?;
            let class = classify_parabola(foci[0], line, eccentricity)?;
            let mut warnings = Vec::new();
            if class.regime.is_extrapolated() {
                warnings.push(extrapolated_warning(class.regime.label()));
            }
            let rho = if class.rho.is_finite() {
                serde_json::Value::from(class.rho)
            } else {
                serde_json::Value::from("infinity")
            };
            ClassifyReport {
                command: "classify",
                family: "parabola",
                foci: Some(foci.iter().copied().map(point_json).collect()),
                gamma: None,
                eccentricity: Some(eccentricity),
                line: Some([line.a, line.b, line.c]),
                class: class.regime.label(),
                regime: class.regime.regime_tag(),
                predicate: class.regime.predicate(),
                delta: None,
                eta: None,
                rho: Some(rho),
                extrapolated: class.regime.is_extrapolated(),
                warnings,
            }
        }
        other => {
            return Err(CliError::invalid(format!(
                "classify supports ellipse, hyperbola and parabola, not {}",
                other.name()
            )));
        }
    };
    Ok(Execution { text: to_json(&report), out: args.out.clone() })
}

// ---------------------------------------------------------------------------
// measure
// ---------------------------------------------------------------------------

fn area_warning(report: &ReconciliationJson) -> Option<String> {
    (!report.area_agrees).then(|| {
        format!("area formula disagrees with the polygon oracle by {}", report.area_abs_diff)
    })
}

fn measure(args: &args::MeasureArgs) -> Result<Execution, CliError> {
    if args.format != Format::Json {
        return Err(CliError::invalid("measure reports are json only"));
    }
    let report = match args.family {
        Family::Circle => {
            let radius = require(args.radius, "--radius is required")?;
            let rec = reconcile(ReconcileTarget::Circle { radius })?;
            let reconciliation = ReconciliationJson::from(&rec);
            let warnings = area_warning(&reconciliation).into_iter().collect();
            MeasureReport {
                command: "measure",
                family: "circle",
                foci: None,
                radius: Some(radius),
                gamma: None,
                sum: None,
                class: None,
                regime: None,
                formula: Some(MeasureJson::from(rec.formula)),
                formula_exact: None,
                oracle: MeasureJson::from(rec.oracle),
                reconciliation: Some(reconciliation),
                warnings,
            }
        }
        Family::Ellipse => {
            let foci = parse_foci(require(args.foci.as_deref(), "--foci is required")?)?;
            let (f1, f2) = two_foci(&foci)?;
            let gamma = require(args.gamma, "--gamma is required")?;
            let class = classify_ellipse(f1, f2, gamma)?;
            let rec = reconcile(ReconcileTarget::TwoFocusEllipse { f1, f2, gamma })?;
            let reconciliation = ReconciliationJson::from(&rec);
            let warnings = area_warning(&reconciliation).into_iter().collect();
            MeasureReport {
                command: "measure",
                family: "ellipse",
                foci: Some(foci.iter().copied().map(point_json).collect()),
                radius: None,
                gamma: Some(gamma),
                sum: None,
                class: Some(class.regime.label()),
                regime: class.regime.regime_tag(),
                formula: Some(MeasureJson::from(rec.formula)),
                formula_exact: None,
                oracle: MeasureJson::from(rec.oracle),
                reconciliation: Some(reconciliation),
                warnings,
            }
        }
        Family::Trifocal => {
            let (sum, rational) = parse_sum(require(args.sum.as_deref(), "--sum is required")?)?;
            let rec = reconcile(ReconcileTarget::Trifocal { s: sum })?;
            let formula_exact = match rational {
                Some(s) => trifocal_measures_formula_exact(s).ok().map(|(area, perimeter)| {
                    ExactMeasureJson { area: area.to_string(), perimeter: perimeter.to_string() }
                }),
                None => None,
            };
            let reconciliation = ReconciliationJson::from(&rec);
            let warnings = area_warning(&reconciliation).into_iter().collect();
            MeasureReport {
                command: "measure",
                family: "trifocal",
                foci: Some(TRIFOCAL_CANONICAL_FOCI.iter().copied().map(point_json).collect()),
                radius: None,
                gamma: None,
                sum: Some(sum),
                class: None,
                regime: None,
                formula: Some(MeasureJson::from(rec.formula)),
                formula_exact,
                oracle: MeasureJson::from(rec.oracle),
                reconciliation: Some(reconciliation),
                warnings,
            }
        }
        Family::SumEllipse => {
            let foci = parse_foci(require(args.foci.as_deref(), "--foci is required")?)?;
            let (sum, _) = parse_sum(require(args.sum.as_deref(), "--sum is required")?)?;
            let oracle = measures_oracle(&foci, sum)?;
            MeasureReport {
                command: "measure",
                family: "sumellipse",
                foci: Some(foci.iter().copied().map(point_json).collect()),
                radius: None,
                gamma: None,
                sum: Some(sum),
                class: None,
                regime: None,
                formula: None,
                formula_exact: None,
                oracle: MeasureJson::from(oracle),
                reconciliation: None,
                warnings: Vec::new(),
            }
        }
        other => {
            return Err(CliError::invalid(format!(
                "measure supports circle, ellipse, trifocal and sumellipse, not {}",
                other.name()
            )));
        }
    };
    Ok(Execution { text: to_json(&report), out: args.out.clone() })
}

// ---------------------------------------------------------------------------
// scan
// ---------------------------------------------------------------------------

fn scan(args: &args::ScanArgs) -> Result<Execution, CliError> {
    let foci = parse_foci(&args.foci)?;
    let (sum, _) = parse_sum(&args.sum)?;
    let metric = args.metric.to_metric();

    let (start_x, end_x) = match (args.start_x, args.end_x) {
        (Some(start), Some(end)) => (start, end),
        (start, end) => {
            let extent = taxicurves::sum_ellipse_x_extent(&foci, sum, metric)?
                .ok_or_else(|| CliError::empty("the region is empty at this sum"))?;
            (start.unwrap_or(extent.0), end.unwrap_or(extent.1))
        }
    };

    let region = SumEllipseRegion::new(foci.clone(), sum, metric)?;
    let cfg = ScanConfig::new(start_x, end_x).with_step(args.step).with_metric(metric);
    let (result, columns) = taxicurves::scan_area_perimeter_traced(&region, &cfg)?;

    let text = match args.format {
        Format::Json => to_json(&ScanReport {
            command: "scan",
            foci: foci.iter().copied().map(point_json).collect(),
            sum,
            metric: args.metric.name(),
            step: args.step,
            start_x,
            end_x,
            area: result.area,
            perimeter: result.perimeter,
            columns_hit: result.columns_hit,
            columns_empty: result.columns_empty,
        }),
        Format::Csv => {
            let mut text = String::from("x,min_y,max_y\n");
            for column in &columns {
                text.push_str(&format!("{},{},{}\n", column.x, column.min_y, column.max_y));
            }
            text
        }
        Format::Svg => return Err(CliError::invalid("scan emits json or csv, not svg")),
    };
    Ok(Execution { text, out: args.out.clone() })
}

// ---------------------------------------------------------------------------
// render
// ---------------------------------------------------------------------------

fn render_command(args: &args::RenderArgs) -> Result<Execution, CliError> {
    if args.format != Format::Svg {
        return Err(CliError::invalid("render emits svg only"));
    }
    let spec = match args.family {
        Family::Circle => {
            let radius = require(args.radius, "--radius is required")?;
            let center = match args.foci.as_deref() {
                Some(text) => {
                    let foci = parse_foci(text)?;
                    if foci.len() != 1 {
                        return Err(CliError::invalid("circle takes exactly one focus"));
                    }
                    foci[0]
                }
                None => Point::new(0.0, 0.0),
            };
            ConicSpec::Circle { center, radius }
        }
        Family::Ellipse => {
            let foci = parse_foci(require(args.foci.as_deref(), "--foci is required")?)?;
            let (f1, f2) = two_foci(&foci)?;
            let gamma = require(args.gamma, "--gamma is required")?;
            ConicSpec::TwoFociEllipse { f1, f2, gamma }
        }
        Family::Hyperbola => {
            let foci = parse_foci(require(args.foci.as_deref(), "--foci is required")?)?;
            let (f1, f2) = two_foci(&foci)?;
            let gamma = require(args.gamma, "--gamma is required")?;
            ConicSpec::TwoFociHyperbola { f1, f2, gamma }
        }
        Family::Parabola => {
            let foci = parse_foci(require(args.foci.as_deref(), "--foci is required")?)?;
            if foci.len() != 1 {
                return Err(CliError::invalid("parabola takes exactly one focus"));
            }
            let directrix = parse_line(require(args.line.as_deref(), "--line is required")?)?;
            let eccentricity = require(args.eccentricity, "--eccentricity is required")?;
            ConicSpec::Parabola { focus: foci[0], directrix, eccentricity }
        }
        Family::Trifocal => {
            let (sum, _) = parse_sum(require(args.sum.as_deref(), "--sum is required")?)?;
            let foci = match args.foci.as_deref() {
                Some(text) => {
                    let foci = parse_foci(text)?;
                    if foci.len() != 3 {
                        return Err(CliError::invalid("trifocal takes exactly three foci"));
                    }
                    foci
                }
                None => TRIFOCAL_CANONICAL_FOCI.to_vec(),
            };
            ConicSpec::SumEllipse { foci, sum }
        }
        Family::SumEllipse => {
            let foci = parse_foci(require(args.foci.as_deref(), "--foci is required")?)?;
            let (sum, _) = parse_sum(require(args.sum.as_deref(), "--sum is required")?)?;
            ConicSpec::SumEllipse { foci, sum }
        }
    };
    spec.validate()?;

    let bbox = match args.bbox.as_deref() {
        Some(text) => parse_bbox(text)?,
        None => render::default_bbox(&spec)?,
    };
    let text = render::render_svg(&spec, bbox, args.resolution)?;
    Ok(Execution { text, out: args.out.clone() })
}

// ---------------------------------------------------------------------------
// fermat
// ---------------------------------------------------------------------------

fn fermat(args: &args::FermatArgs) -> Result<Execution, CliError> {
    if args.format != Format::Json {
        return Err(CliError::invalid("fermat reports are json only"));
    }
    let foci = parse_foci(&args.foci)?;
    let result = fermat_point_taxicab(&foci)?;
    let report = FermatReport {
        command: "fermat",
        foci: foci.iter().copied().map(point_json).collect(),
        s0: result.s0,
        minimizing_set: result.minimizing_set.into(),
    };
    Ok(Execution { text: to_json(&report), out: args.out.clone() })
}
