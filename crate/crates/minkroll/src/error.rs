//! Error taxonomy shared by every module.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero vector where a direction is required")]
    ZeroVector,

    #[error("unit circle is not smooth at {0}")]
    NonSmoothBoundary(String),

    #[error("parameter {value} outside domain [{lo}, {hi}]")]
    DomainViolation { value: f64, lo: f64, hi: f64 },

    #[error("curve is irregular: {0}")]
    IrregularCurve(String),

    #[error("ray does not intersect the curve: {0}")]
    NoIntersection(String),

    #[error("measure density is degenerate (zero total)")]
    DegenerateDensity,

    #[error("rotations have different measures or centers")]
    MeasureMismatch,

    #[error("point coincides with the measure center")]
    CenterPoint,

    #[error("polodes have no common contact point at s = 0 (gap {0:.3e})")]
    NoCommonContact(f64),

    #[error("polode tangents disagree at s = 0 (gap {0:.3e})")]
    TangentMismatch(f64),

    #[error("operation requires a smooth unit ball")]
    NonSmoothBall,

    #[error("motion is translative (rotation rate vanishes)")]
    TranslativeMotion,

    #[error("tracked point sits at the instantaneous pole")]
    PoleCoincidence,

    #[error("point lies on the inflection curve (infinite curvature radius)")]
    OnInflectionCurve,

    #[error("no root along direction ({0}, {1})")]
    NoRoot(f64, f64),

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("parse error at line {line}: {msg}")]
    ParseError { line: usize, msg: String },

    #[error("unknown key `{0}`")]
    UnknownKey(String),

    #[error("unresolved name `{0}`")]
    UnresolvedName(String),

    #[error("io error: {0}")]
    IoError(#[from] std::io::Error),
}
