//! Residual evaluators and regime classifiers for second-order curves under
//! the taxicab metric.
//!
//! Every curve family is represented by a signed residual that vanishes
//! exactly on the locus. The two-focus families additionally come with
//! classifiers that report which of the known taxicab regimes the parameters
//! fall into: E.1–E.3 for ellipses, H.1–H.3 for hyperbolas and P.1–P.6 for
//! parabolas. The classifiers are total: parameter combinations the printed
//! regime tables do not cover map to explicitly flagged extrapolated
//! variants instead of panicking or guessing.

use crate::metric::{taxicab_distance, Line, Point};
use thiserror::Error;

/// Absolute tolerance for the equality predicates used by the classifiers
/// (`-gamma = delta`, `-gamma = |eta|`, `e = rho`, `rho = 1`).
pub const TAU_CLASS: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConicError {
    #[error("gamma must be <= 0, got {0}")]
    InvalidGamma(f64),
    #[error("eccentricity must be > 0, got {0}")]
    InvalidEccentricity(f64),
    #[error("radius must be > 0, got {0}")]
    InvalidRadius(f64),
    #[error("focus list must be nonempty")]
    NoFoci,
    #[error("two-focus form requires a second focus")]
    MissingSecondFocus,
    #[error("focus-directrix form requires a directrix")]
    MissingDirectrix,
    #[error("coordinates must be finite")]
    NonFiniteInput,
}

fn approx_eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= TAU_CLASS
}

// ---------------------------------------------------------------------------
// General residual
// ---------------------------------------------------------------------------

/// Family selector of the general conic residual: `MinusOne` gives the
/// two-focus hyperbola, `Zero` the focus-directrix parabola and `One` the
/// two-focus ellipse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alpha {
    MinusOne,
    Zero,
    One,
}

impl Alpha {
    pub fn value(self) -> f64 {
        match self {
            Alpha::MinusOne => -1.0,
            Alpha::Zero => 0.0,
            Alpha::One => 1.0,
        }
    }
}

/// Branch of the double-signed constant term in the general residual.
///
/// `Plus` adds `alpha * gamma` and is the branch on which the two-focus
/// ellipse and the focus-directrix parabola residuals coincide with their
/// dedicated forms; for the hyperbola the two signs select the two branches
/// of the locus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchSign {
    Plus,
    Minus,
}

impl BranchSign {
    fn factor(self) -> f64 {
        match self {
            BranchSign::Plus => 1.0,
            BranchSign::Minus => -1.0,
        }
    }
}

/// Parameters of the general taxicab conic residual
/// `d1(P,F1) + alpha*d1(P,F2) + beta*|a*x + b*y + c| ± alpha*gamma`,
/// with `beta = e*(alpha^2 - 1)/max(|a|,|b|)` when a directrix is present.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralConicSpec {
    f1: Point,
    f2: Option<Point>,
    directrix: Option<Line>,
    alpha: Alpha,
    eccentricity: f64,
    gamma: f64,
}

impl GeneralConicSpec {
    /// Builds a validated spec. A nonzero `alpha` requires `f2`; `alpha` of
    /// zero requires the directrix. `gamma` must be nonpositive and the
    /// eccentricity positive.
    pub fn new(
        f1: Point,
        f2: Option<Point>,
        directrix: Option<Line>,
        alpha: Alpha,
        eccentricity: f64,
        gamma: f64,
    ) -> Result<Self, ConicError> {
        if !f1.is_finite() || f2.is_some_and(|p| !p.is_finite()) {
            return Err(ConicError::NonFiniteInput);
        }
        if gamma > 0.0 || gamma.is_nan() {
            return Err(ConicError::InvalidGamma(gamma));
        }
        if !(eccentricity > 0.0 && eccentricity.is_finite()) {
            return Err(ConicError::InvalidEccentricity(eccentricity));
        }
        match alpha {
            Alpha::Zero if directrix.is_none() => return Err(ConicError::MissingDirectrix),
            Alpha::MinusOne | Alpha::One if f2.is_none() => {
                return Err(ConicError::MissingSecondFocus)
            }
            _ => {}
        }
        Ok(Self { f1, f2, directrix, alpha, eccentricity, gamma })
    }

    pub fn f1(&self) -> Point {
        self.f1
    }

    pub fn f2(&self) -> Option<Point> {
        self.f2
    }

    pub fn directrix(&self) -> Option<Line> {
        self.directrix
    }

    pub fn alpha(&self) -> Alpha {
        self.alpha
    }

    pub fn eccentricity(&self) -> f64 {
        self.eccentricity
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Evaluates the general residual at `p` on the chosen branch.
    pub fn residual(&self, p: Point, sign: BranchSign) -> f64 {
        general_conic_residual(self, p, sign)
    }
}

/// General conic residual at `p`; see [`GeneralConicSpec`].
pub fn general_conic_residual(spec: &GeneralConicSpec, p: Point, sign: BranchSign) -> f64 {
    let alpha = spec.alpha.value();
    let mut value = taxicab_distance(p, spec.f1);
    if let Some(f2) = spec.f2 {
        value += alpha * taxicab_distance(p, f2);
    }
    if let Some(line) = spec.directrix {
        let beta = spec.eccentricity * (alpha * alpha - 1.0) / line.max_coeff();
        value += beta * line.eval(p).abs();
    }
    value + sign.factor() * alpha * spec.gamma
}

// ---------------------------------------------------------------------------
// Concrete curve families
// ---------------------------------------------------------------------------

/// One of the five curve families.
///
/// `SumEllipse` generalizes the constant-sum locus to any number of foci;
/// one focus reduces to the circle and two foci with `sum = -gamma` to the
/// two-focus ellipse, both as pointwise-identical residuals.
#[derive(Debug, Clone, PartialEq)]
pub enum ConicSpec {
    Circle { center: Point, radius: f64 },
    TwoFociEllipse { f1: Point, f2: Point, gamma: f64 },
    TwoFociHyperbola { f1: Point, f2: Point, gamma: f64 },
    Parabola { focus: Point, directrix: Line, eccentricity: f64 },
    SumEllipse { foci: Vec<Point>, sum: f64 },
}

impl ConicSpec {
    pub fn validate(&self) -> Result<(), ConicError> {
        match self {
            ConicSpec::Circle { center, radius } => {
                if !center.is_finite() {
                    return Err(ConicError::NonFiniteInput);
                }
                if !(*radius > 0.0 && radius.is_finite()) {
                    return Err(ConicError::InvalidRadius(*radius));
                }
            }
            ConicSpec::TwoFociEllipse { f1, f2, gamma }
            | ConicSpec::TwoFociHyperbola { f1, f2, gamma } => {
                if !f1.is_finite() || !f2.is_finite() {
                    return Err(ConicError::NonFiniteInput);
                }
                if *gamma > 0.0 || gamma.is_nan() {
                    return Err(ConicError::InvalidGamma(*gamma));
                }
            }
            ConicSpec::Parabola { focus, eccentricity, .. } => {
                if !focus.is_finite() {
                    return Err(ConicError::NonFiniteInput);
                }
                if !(*eccentricity > 0.0 && eccentricity.is_finite()) {
                    return Err(ConicError::InvalidEccentricity(*eccentricity));
                }
            }
            ConicSpec::SumEllipse { foci, sum } => {
                if foci.is_empty() {
                    return Err(ConicError::NoFoci);
                }
                if foci.iter().any(|f| !f.is_finite()) || !sum.is_finite() {
                    return Err(ConicError::NonFiniteInput);
                }
            }
        }
        Ok(())
    }

    /// Signed defining residual at `p`: zero exactly on the curve.
    ///
    /// For `Circle`, `TwoFociEllipse` and `SumEllipse` the residual is
    /// strictly negative inside the enclosed region and positive outside.
    /// The hyperbola folds both locus branches into the single zero set of
    /// `|d1 - d2| + gamma`.
    pub fn residual(&self, p: Point) -> f64 {
        match self {
            ConicSpec::Circle { center, radius } => taxicab_distance(p, *center) - radius,
            ConicSpec::TwoFociEllipse { f1, f2, gamma } => {
                taxicab_distance(p, *f1) + taxicab_distance(p, *f2) + gamma
            }
            ConicSpec::TwoFociHyperbola { f1, f2, gamma } => {
                (taxicab_distance(p, *f1) - taxicab_distance(p, *f2)).abs() + gamma
            }
            ConicSpec::Parabola { focus, directrix, eccentricity } => {
                taxicab_distance(p, *focus)
                    - eccentricity * (directrix.eval(p).abs() / directrix.max_coeff())
            }
            ConicSpec::SumEllipse { foci, sum } => {
                foci.iter().map(|f| taxicab_distance(p, *f)).sum::<f64>() - sum
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Ellipse classification
// ---------------------------------------------------------------------------

/// Shape regime of a two-focus taxicab ellipse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EllipseRegime {
    /// E.1: `-gamma > delta` with axis-aligned foci.
    Hexagon,
    /// E.2: `-gamma > delta` with foci in general position.
    Octagon,
    /// E.3: `-gamma = delta`; the locus fills the axis-aligned rectangle
    /// with the focal segment as diagonal.
    DegenerateRectangle,
    /// `-gamma < delta`: no point attains a distance sum below `delta`.
    /// Extrapolated variant; not part of the printed regime table.
    Empty,
}

impl EllipseRegime {
    pub fn label(self) -> &'static str {
        match self {
            EllipseRegime::Hexagon => "hexagon",
            EllipseRegime::Octagon => "octagon",
            EllipseRegime::DegenerateRectangle => "degenerate-rectangle",
            EllipseRegime::Empty => "empty",
        }
    }

    pub fn regime_tag(self) -> Option<&'static str> {
        match self {
            EllipseRegime::Hexagon => Some("E.1"),
            EllipseRegime::Octagon => Some("E.2"),
            EllipseRegime::DegenerateRectangle => Some("E.3"),
            EllipseRegime::Empty => None,
        }
    }

    pub fn predicate(self) -> &'static str {
        match self {
            EllipseRegime::Hexagon => "-gamma > delta and (y1 = y2 or x1 = x2)",
            EllipseRegime::Octagon => "-gamma > delta and (y1 != y2 and x1 != x2)",
            EllipseRegime::DegenerateRectangle => "-gamma = delta",
            EllipseRegime::Empty => "-gamma < delta",
        }
    }

    pub fn is_extrapolated(self) -> bool {
        matches!(self, EllipseRegime::Empty)
    }
}

/// Classification outcome for a two-focus ellipse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipseClass {
    pub regime: EllipseRegime,
    /// `delta = d1(F1, F2)`.
    pub delta: f64,
}

/// Classifies the two-focus taxicab ellipse with constant `gamma <= 0`.
///
/// Equality predicates are compared with tolerance [`TAU_CLASS`]. Coincident
/// foci satisfy the E.1 predicate as printed (the locus is then the
/// circle-square of radius `-gamma/2`); they are reported as `Hexagon`, not
/// special-cased.
pub fn classify_ellipse(f1: Point, f2: Point, gamma: f64) -> Result<EllipseClass, ConicError> {
    if !f1.is_finite() || !f2.is_finite() {
        return Err(ConicError::NonFiniteInput);
    }
    if gamma > 0.0 || gamma.is_nan() {
        return Err(ConicError::InvalidGamma(gamma));
    }
    let delta = taxicab_distance(f1, f2);
    let level = -gamma;
    let regime = if approx_eq(level, delta) {
        EllipseRegime::DegenerateRectangle
    } else if level > delta {
        if approx_eq(f1.y, f2.y) || approx_eq(f1.x, f2.x) {
            EllipseRegime::Hexagon
        } else {
            EllipseRegime::Octagon
        }
    } else {
        EllipseRegime::Empty
    };
    Ok(EllipseClass { regime, delta })
}

// ---------------------------------------------------------------------------
// Hyperbola classification
// ---------------------------------------------------------------------------

/// Shape regime of a two-focus taxicab hyperbola.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HyperbolaRegime {
    /// H.1: `-gamma = |eta|`; two planar regions with tails.
    RegionsWithTails,
    /// H.2: `-gamma < delta` and `-gamma < |eta|`; a pair of parallel
    /// degenerate lines.
    ParallelLines,
    /// H.3: `|eta| < -gamma < delta`; a true taxicab hyperbola.
    TrueHyperbola,
    /// `-gamma >= delta`: the difference of focal distances never reaches
    /// `-gamma`. Extrapolated variant; not part of the printed regime table.
    Degenerate,
}

impl HyperbolaRegime {
    pub fn label(self) -> &'static str {
        match self {
            HyperbolaRegime::RegionsWithTails => "regions-with-tails",
            HyperbolaRegime::ParallelLines => "parallel-lines",
            HyperbolaRegime::TrueHyperbola => "true-hyperbola",
            HyperbolaRegime::Degenerate => "degenerate",
        }
    }

    pub fn regime_tag(self) -> Option<&'static str> {
        match self {
            HyperbolaRegime::RegionsWithTails => Some("H.1"),
            HyperbolaRegime::ParallelLines => Some("H.2"),
            HyperbolaRegime::TrueHyperbola => Some("H.3"),
            HyperbolaRegime::Degenerate => None,
        }
    }

    pub fn predicate(self) -> &'static str {
        match self {
            HyperbolaRegime::RegionsWithTails => "-gamma = |eta|",
            HyperbolaRegime::ParallelLines => "-gamma < delta and -gamma < |eta|",
            HyperbolaRegime::TrueHyperbola => "|eta| < -gamma < delta",
            HyperbolaRegime::Degenerate => "-gamma >= delta",
        }
    }

    pub fn is_extrapolated(self) -> bool {
        matches!(self, HyperbolaRegime::Degenerate)
    }
}

/// Classification outcome for a two-focus hyperbola.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperbolaClass {
    pub regime: HyperbolaRegime,
    /// `eta = x1 - x2 - y1 + y2`.
    pub eta: f64,
    /// `delta = d1(F1, F2)`.
    pub delta: f64,
}

/// Classifies the two-focus taxicab hyperbola with constant `gamma <= 0`.
///
/// `|eta| <= delta` always holds, so the regimes below are exhaustive. The
/// H.1 equality test runs first; the boundary `-gamma = delta` (not covered
/// by the printed table) is folded into the extrapolated `Degenerate`
/// variant.
pub fn classify_hyperbola(f1: Point, f2: Point, gamma: f64) -> Result<HyperbolaClass, ConicError> {
    if !f1.is_finite() || !f2.is_finite() {
        return Err(ConicError::NonFiniteInput);
    }
    if gamma > 0.0 || gamma.is_nan() {
        return Err(ConicError::InvalidGamma(gamma));
    }
    let delta = taxicab_distance(f1, f2);
    let eta = f1.x - f2.x - f1.y + f2.y;
    let level = -gamma;
    let regime = if approx_eq(level, eta.abs()) {
        HyperbolaRegime::RegionsWithTails
    } else if level < eta.abs() {
        HyperbolaRegime::ParallelLines
    } else if level < delta && !approx_eq(level, delta) {
        HyperbolaRegime::TrueHyperbola
    } else {
        HyperbolaRegime::Degenerate
    };
    Ok(HyperbolaClass { regime, eta, delta })
}

// ---------------------------------------------------------------------------
// Parabola classification
// ---------------------------------------------------------------------------

/// Shape regime of a taxicab parabola, driven by the eccentricity `e` and
/// the directrix slope magnitude `rho = |-a/b|` (infinite for vertical
/// directrices).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParabolaRegime {
    /// P.1: `1 < e < rho`; two branches.
    P1,
    /// P.2: `1 < e = rho`; two branches.
    P2,
    /// P.3: `1 < rho < e`; two branches.
    P3,
    /// P.4: `0 < e < 1`; a quadrilateral with a vertical and a horizontal
    /// diagonal through the focus.
    P4,
    /// P.5: `e = 1`, `rho != 1`; two line segments and two vertical or
    /// horizontal rays.
    P5,
    /// P.6: `e = 1`, `rho = 1`; a line segment, a vertical ray and a
    /// horizontal ray.
    P6,
    /// `e > 1` with `rho <= 1`: not covered by the printed regimes.
    /// Extrapolated variant.
    Unclassified,
}

impl ParabolaRegime {
    pub fn label(self) -> &'static str {
        match self {
            ParabolaRegime::P1 | ParabolaRegime::P2 | ParabolaRegime::P3 => "two-branches",
            ParabolaRegime::P4 => "quadrilateral",
            ParabolaRegime::P5 => "two-segments-two-rays",
            ParabolaRegime::P6 => "segment-and-two-rays",
            ParabolaRegime::Unclassified => "unclassified",
        }
    }

    pub fn regime_tag(self) -> Option<&'static str> {
        match self {
            ParabolaRegime::P1 => Some("P.1"),
            ParabolaRegime::P2 => Some("P.2"),
            ParabolaRegime::P3 => Some("P.3"),
            ParabolaRegime::P4 => Some("P.4"),
            ParabolaRegime::P5 => Some("P.5"),
            ParabolaRegime::P6 => Some("P.6"),
            ParabolaRegime::Unclassified => None,
        }
    }

    pub fn predicate(self) -> &'static str {
        match self {
            ParabolaRegime::P1 => "1 < e < rho",
            ParabolaRegime::P2 => "1 < e = rho",
            ParabolaRegime::P3 => "1 < rho < e",
            ParabolaRegime::P4 => "0 < e < 1",
            ParabolaRegime::P5 => "e = 1 and rho != 1",
            ParabolaRegime::P6 => "e = 1 and rho = 1",
            ParabolaRegime::Unclassified => "e > 1 and rho <= 1",
        }
    }

    pub fn is_extrapolated(self) -> bool {
        matches!(self, ParabolaRegime::Unclassified)
    }
}

/// Classification outcome for a parabola.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParabolaClass {
    pub regime: ParabolaRegime,
    /// `rho = |-a/b|`; `f64::INFINITY` when `b = 0`.
    pub rho: f64,
}

/// Classifies the taxicab parabola given focus, directrix and eccentricity.
pub fn classify_parabola(
    focus: Point,
    directrix: Line,
    eccentricity: f64,
) -> Result<ParabolaClass, ConicError> {
    if !focus.is_finite() {
        return Err(ConicError::NonFiniteInput);
    }
    if !(directrix.max_coeff() > 0.0 && directrix.max_coeff().is_finite()) {
        return Err(ConicError::NonFiniteInput);
    }
    if !(eccentricity > 0.0 && eccentricity.is_finite()) {
        return Err(ConicError::InvalidEccentricity(eccentricity));
    }
    let rho = if directrix.b == 0.0 { f64::INFINITY } else { (directrix.a / directrix.b).abs() };
    let e = eccentricity;
    let regime = if approx_eq(e, 1.0) {
        if rho.is_finite() && approx_eq(rho, 1.0) {
            ParabolaRegime::P6
        } else {
            ParabolaRegime::P5
        }
    } else if e < 1.0 {
        ParabolaRegime::P4
    } else if rho.is_finite() && approx_eq(rho, e) {
        ParabolaRegime::P2
    } else if e < rho {
        ParabolaRegime::P1
    } else if rho > 1.0 && !approx_eq(rho, 1.0) {
        ParabolaRegime::P3
    } else {
        ParabolaRegime::Unclassified
    };
    Ok(ParabolaClass { regime, rho })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn general_residual_coincident_foci_is_circle() {
        // Coincident foci with gamma = -2 reduce to a circle of radius 1.
        let spec =
            GeneralConicSpec::new(pt(0.0, 0.0), Some(pt(0.0, 0.0)), None, Alpha::One, 1.0, -2.0)
                .unwrap();
        assert_eq!(spec.residual(pt(1.0, 0.0), BranchSign::Plus), 0.0);
    }

    #[test]
    fn general_residual_parabola_vertex() {
        // e = 1 parabola: the vertex lies midway between focus and directrix.
        let spec = GeneralConicSpec::new(
            pt(0.0, 0.0),
            None,
            Some(Line::new(1.0, 0.0, 1.0).unwrap()),
            Alpha::Zero,
            1.0,
            0.0,
        )
        .unwrap();
        assert_eq!(spec.residual(pt(-0.5, 0.0), BranchSign::Plus), 0.0);
        assert_eq!(spec.residual(pt(-0.5, 0.0), BranchSign::Minus), 0.0);
    }

    #[test]
    fn general_residual_hyperbola_branch() {
        let spec = GeneralConicSpec::new(
            pt(0.0, 0.0),
            Some(pt(4.0, 2.0)),
            None,
            Alpha::MinusOne,
            1.0,
            -4.0,
        )
        .unwrap();
        // d1 - d2 = 0 - 6; the Plus branch adds alpha*gamma = +4.
        assert_eq!(spec.residual(pt(0.0, 0.0), BranchSign::Plus), -2.0);
    }

    #[test]
    fn general_spec_validation() {
        assert_eq!(
            GeneralConicSpec::new(pt(0.0, 0.0), None, None, Alpha::One, 1.0, -1.0),
            Err(ConicError::MissingSecondFocus)
        );
        assert_eq!(
            GeneralConicSpec::new(pt(0.0, 0.0), None, None, Alpha::Zero, 1.0, 0.0),
            Err(ConicError::MissingDirectrix)
        );
        assert_eq!(
            GeneralConicSpec::new(pt(0.0, 0.0), Some(pt(1.0, 0.0)), None, Alpha::One, 1.0, 0.5),
            Err(ConicError::InvalidGamma(0.5))
        );
    }

    #[test]
    fn residual_examples() {
        let circle = ConicSpec::Circle { center: pt(0.0, 0.0), radius: 1.0 };
        assert_eq!(circle.residual(pt(0.5, 0.5)), 0.0);

        let tri = ConicSpec::SumEllipse {
            foci: vec![pt(-1.0, 0.0), pt(1.0, 0.0), pt(0.0, 0.0)],
            sum: 3.0,
        };
        assert!(tri.residual(pt(0.0, 1.0 / 3.0)).abs() < 1e-15);

        let ell = ConicSpec::TwoFociEllipse { f1: pt(0.0, 0.0), f2: pt(2.0, 0.0), gamma: -4.0 };
        assert_eq!(ell.residual(pt(3.0, 0.0)), 0.0);
    }

    #[test]
    fn residual_sign_inside_outside() {
        let circle = ConicSpec::Circle { center: pt(0.0, 0.0), radius: 1.0 };
        assert!(circle.residual(pt(0.1, 0.1)) < 0.0);
        assert!(circle.residual(pt(2.0, 0.0)) > 0.0);
    }

    #[test]
    fn classify_ellipse_examples() {
        let c = classify_ellipse(pt(0.0, 0.0), pt(2.0, 0.0), -4.0).unwrap();
        assert_eq!(c.regime, EllipseRegime::Hexagon);
        assert_eq!(c.delta, 2.0);

        let c = classify_ellipse(pt(0.0, 0.0), pt(2.0, 1.0), -5.0).unwrap();
        assert_eq!(c.regime, EllipseRegime::Octagon);
        assert_eq!(c.delta, 3.0);

        let c = classify_ellipse(pt(0.0, 0.0), pt(2.0, 1.0), -3.0).unwrap();
        assert_eq!(c.regime, EllipseRegime::DegenerateRectangle);

        let c = classify_ellipse(pt(0.0, 0.0), pt(2.0, 1.0), -1.0).unwrap();
        assert_eq!(c.regime, EllipseRegime::Empty);
        assert!(c.regime.is_extrapolated());

        assert_eq!(
            classify_ellipse(pt(0.0, 0.0), pt(1.0, 0.0), 0.5),
            Err(ConicError::InvalidGamma(0.5))
        );
    }

    #[test]
    fn classify_hyperbola_examples() {
        let f1 = pt(0.0, 0.0);
        let f2 = pt(4.0, 2.0);
        let c = classify_hyperbola(f1, f2, -2.0).unwrap();
        assert_eq!(c.regime, HyperbolaRegime::RegionsWithTails);
        assert_eq!(c.eta, -2.0);

        let c = classify_hyperbola(f1, f2, -1.0).unwrap();
        assert_eq!(c.regime, HyperbolaRegime::ParallelLines);

        let c = classify_hyperbola(f1, f2, -4.0).unwrap();
        assert_eq!(c.regime, HyperbolaRegime::TrueHyperbola);
        assert_eq!(c.delta, 6.0);

        let c = classify_hyperbola(f1, f2, -6.0).unwrap();
        assert_eq!(c.regime, HyperbolaRegime::Degenerate);
        assert!(c.regime.is_extrapolated());
    }

    #[test]
    fn classify_parabola_examples() {
        let focus = pt(0.0, 0.0);
        let c = classify_parabola(focus, Line::new(2.0, 1.0, -5.0).unwrap(), 3.0).unwrap();
        assert_eq!(c.regime, ParabolaRegime::P3);
        assert_eq!(c.rho, 2.0);

        let c = classify_parabola(focus, Line::new(1.0, 0.0, -2.0).unwrap(), 0.5).unwrap();
        assert_eq!(c.regime, ParabolaRegime::P4);
        assert!(c.rho.is_infinite());

        let c = classify_parabola(focus, Line::new(1.0, 2.0, -5.0).unwrap(), 1.0).unwrap();
        assert_eq!(c.regime, ParabolaRegime::P5);
        assert_eq!(c.rho, 0.5);

        let c = classify_parabola(focus, Line::new(1.0, 1.0, 0.0).unwrap(), 1.0).unwrap();
        assert_eq!(c.regime, ParabolaRegime::P6);

        let c = classify_parabola(focus, Line::new(3.0, 1.0, 0.0).unwrap(), 2.0).unwrap();
        assert_eq!(c.regime, ParabolaRegime::P1);
        assert_eq!(c.rho, 3.0);

        // e > 1 with rho <= 1 falls outside the printed regimes.
        let c = classify_parabola(focus, Line::new(1.0, 2.0, 0.0).unwrap(), 2.0).unwrap();
        assert_eq!(c.regime, ParabolaRegime::Unclassified);
        assert!(c.regime.is_extrapolated());

        assert_eq!(
            classify_parabola(focus, Line::new(1.0, 0.0, 0.0).unwrap(), 0.0),
            Err(ConicError::InvalidEccentricity(0.0))
        );
    }

    #[test]
    fn classify_parabola_vertical_directrix_regimes() {
        // b = 0 makes rho infinite: e > 1 is P.1, e = 1 is P.5.
        let focus = pt(0.0, 0.0);
        let l = Line::new(1.0, 0.0, -2.0).unwrap();
        assert_eq!(classify_parabola(focus, l, 2.0).unwrap().regime, ParabolaRegime::P1);
        assert_eq!(classify_parabola(focus, l, 1.0).unwrap().regime, ParabolaRegime::P5);
    }

    #[test]
    fn classifier_equality_tolerance() {
        // -gamma within TAU_CLASS of delta classifies as E.3.
        let c = classify_ellipse(pt(0.0, 0.0), pt(2.0, 1.0), -(3.0 + 0.5e-9)).unwrap();
        assert_eq!(c.regime, EllipseRegime::DegenerateRectangle);
        // P.2 requires e = rho within tolerance.
        let c = classify_parabola(pt(0.0, 0.0), Line::new(2.0, 1.0, -5.0).unwrap(), 2.0 + 0.5e-9)
            .unwrap();
        assert_eq!(c.regime, ParabolaRegime::P2);
    }

    #[test]
    fn coincident_foci_classify_as_hexagon() {
        let c = classify_ellipse(pt(1.0, 1.0), pt(1.0, 1.0), -2.0).unwrap();
        assert_eq!(c.regime, EllipseRegime::Hexagon);
        assert_eq!(c.delta, 0.0);
    }
}
