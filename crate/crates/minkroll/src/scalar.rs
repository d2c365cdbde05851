//! Scalar abstraction: the library is generic over the floating type.

use num_traits::{Float, FromPrimitive};
use std::fmt::{Debug, Display, LowerExp};

/// Floating scalar the geometry is computed in.
///
/// `f64` is the intended instantiation (all documented tolerances assume it);
/// `f32` compiles and works at correspondingly coarser accuracy.
pub trait Real:
    Float + FromPrimitive + Debug + Display + LowerExp + Send + Sync + 'static
{
    /// Shorthand for converting an `f64` literal.
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("literal conversion")
    }

    fn pi() -> Self {
        Self::lit(std::f64::consts::PI)
    }

    fn two_pi() -> Self {
        Self::lit(std::f64::consts::TAU)
    }

    fn half() -> Self {
        Self::lit(0.5)
    }

    fn two() -> Self {
        Self::lit(2.0)
    }
}

impl Real for f64 {}
impl Real for f32 {}
