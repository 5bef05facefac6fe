use thiserror::Error;

/// Coarse classification used by callers to map errors onto process exit
/// codes: bad input, a violated hypothesis of the rank formulas, or a
/// refusal to spend resources.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Input,
    Hypothesis,
    Resource,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse `{0}` as a rational number")]
    ParseRational(String),

    #[error("invalid linkage: {0}")]
    InvalidLinkage(String),

    #[error("expected {expected} angles, got {got}")]
    AngleCountMismatch { expected: usize, got: usize },

    #[error("subset enumeration too large: k = {k} exceeds cap {cap}")]
    EnumerationTooLarge { k: usize, cap: usize },

    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    #[error("endpoint off unit circle: |point {index}| = {norm}")]
    EndpointOffCircle { index: usize, norm: f64 },

    #[error("curve exits reachable disk at vertex {index}: |p| = {norm}")]
    CurveExitsDisk { index: usize, norm: f64 },

    #[error("curve passes through the origin while a zero critical radius exists")]
    CurveThroughOrigin,

    #[error("curve is not simple: segments {0} and {1} intersect")]
    SelfIntersection(usize, usize),

    #[error("tangential intersection with the circle of radius {radius} near segment {segment}")]
    TangentialIntersection { segment: usize, radius: f64 },

    #[error("crossing at polyline vertex {vertex} on the circle of radius {radius}; refine the polyline")]
    CrossingAtVertex { vertex: usize, radius: f64 },

    #[error("odd crossing count {count} for the circle of radius {radius}")]
    OddCrossingCount { radius: String, count: usize },

    #[error("tangency: a critical radius equals |h| = {h}; the chord is tangent to that circle")]
    ChordTangent { h: String },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid delta: {0}")]
    InvalidDelta(String),

    #[error("resolution too coarse: thickened complex is empty at n = {n}")]
    ResolutionTooCoarse { n: u32 },

    #[error("cell budget exceeded: complex needs more than {budget} cells")]
    CellBudgetExceeded { budget: usize },
}

impl Error {
    /// Stable machine-readable code, kept independent of the display text.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ParseRational(_) => "parse-rational",
            Error::InvalidLinkage(_) => "invalid-linkage",
            Error::AngleCountMismatch { .. } => "angle-count-mismatch",
            Error::EnumerationTooLarge { .. } => "enumeration-too-large",
            Error::InvalidCurve(_) => "invalid-curve",
            Error::EndpointOffCircle { .. } => "endpoint-off-circle",
            Error::CurveExitsDisk { .. } => "curve-exits-disk",
            Error::CurveThroughOrigin => "curve-through-origin",
            Error::SelfIntersection(..) => "self-intersection",
            Error::TangentialIntersection { .. } => "tangential-intersection",
            Error::CrossingAtVertex { .. } => "crossing-at-vertex",
            Error::OddCrossingCount { .. } => "odd-crossing-count",
            Error::ChordTangent { .. } => "chord-tangent",
            Error::InvalidGrid(_) => "invalid-grid",
            Error::InvalidDelta(_) => "invalid-delta",
            Error::ResolutionTooCoarse { .. } => "resolution-too-coarse",
            Error::CellBudgetExceeded { .. } => "cell-budget-exceeded",
        }
    }

    pub fn class(&self) -> ErrorClass {
        match self {
            Error::ParseRational(_)
            | Error::InvalidLinkage(_)
            | Error::AngleCountMismatch { .. }
            | Error::InvalidCurve(_)
            | Error::InvalidGrid(_)
            | Error::InvalidDelta(_) => ErrorClass::Input,

            Error::EndpointOffCircle { .. }
            | Error::CurveExitsDisk { .. }
            | Error::CurveThroughOrigin
            | Error::SelfIntersection(..)
            | Error::TangentialIntersection { .. }
            | Error::CrossingAtVertex { .. }
            | Error::OddCrossingCount { .. }
            | Error::ChordTangent { .. } => ErrorClass::Hypothesis,

            Error::EnumerationTooLarge { .. }
            | Error::ResolutionTooCoarse { .. }
            | Error::CellBudgetExceeded { .. } => ErrorClass::Resource,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
