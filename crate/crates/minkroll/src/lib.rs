//! Computational geometry of two-dimensional normed ("Minkowski") planes.
//!
//! The plane is `R^2` equipped with a norm whose unit ball is a centrally
//! symmetric convex body. On top of the norm the crate builds, in order:
//!
//! * [`plane`] - norm evaluation for several ball families, the semi-inner
//!   product, Birkhoff orthogonality, the tangent operator `Q`, the line and
//!   plane `sigma` ratios, and an arc-length parametrization of the unit
//!   circle;
//! * [`curve`] - parametric curves, Minkowski arc length, arc-length
//!   reparametrization, starlike curves and their radial functions;
//! * [`measure`] - generalized angle measures on starlike carriers, the
//!   rotations they induce, and generalized polar coordinates;
//! * [`motion`] - rolling without slipping, the induced one-parameter family
//!   of plane transforms, roulettes, and the classical Euclidean pole/polode
//!   constructions used as an oracle;
//! * [`curvature`] - the Busemann sine and curvature (by a chord limit and by
//!   a comparison formula), inflection loci of a rolling motion, and the
//!   Euler-Savary relations between polode curvature and roulette curvature.
//!
//! Everything is generic over the scalar type through [`scalar::Real`];
//! `f64` aliases are exported at the crate root. All types are immutable
//! after construction and safe to share across threads.

pub mod curvature;
pub mod curve;
pub mod error;
pub mod measure;
pub mod motion;
pub mod numerics;
pub mod plane;
pub mod scalar;
pub mod vec2;

pub use error::{Error, Result};
pub use scalar::Real;

/// `f64` vector.
pub type Vec2 = vec2::Vector2<f64>;
/// `f64` plane context.
pub type Plane = plane::PlaneContext<f64>;
/// `f64` parametric curve.
pub type Curve = curve::ParamCurve<f64>;
/// `f64` starlike curve.
pub type Starlike = curve::StarlikeCurve<f64>;
/// `f64` angle measure.
pub type Measure = measure::AngleMeasure<f64>;
/// `f64` general rotation.
pub type Rotation = measure::GeneralRotation<f64>;
/// `f64` rolling motion.
pub type Rolling = motion::RollingMotion<f64>;
