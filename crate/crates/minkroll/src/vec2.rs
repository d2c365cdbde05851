//! Plain background-coordinate vectors.
//!
//! `Vector2` carries Euclidean background coordinates; all Minkowski-norm
//! structure lives in [`crate::plane::PlaneContext`]. The Euclidean helpers
//! here (dot, cross, `norm_e`) refer to the background inner product, which
//! the theory uses as the auxiliary reference structure.

use crate::scalar::Real;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Copy, PartialEq)]
pub struct Vector2<T> {
    pub x: T,
    pub y: T,
}

impl<T: Real> Vector2<T> {
    pub fn new(x: T, y: T) -> Self {
        Vector2 { x, y }
    }

    pub fn zero() -> Self {
        Vector2 { x: T::zero(), y: T::zero() }
    }

    pub fn dot(self, o: Self) -> T {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the cross product; positive when `o` is
    /// counterclockwise from `self`.
    pub fn cross(self, o: Self) -> T {
        self.x * o.y - self.y * o.x
    }

    /// Euclidean (background) norm.
    pub fn norm_e(self) -> T {
        self.x.hypot(self.y)
    }

    /// Euclidean unit vector.
    pub fn unit_e(self) -> Self {
        self / self.norm_e()
    }

    /// Counterclockwise Euclidean quarter turn.
    pub fn perp(self) -> Self {
        Vector2 { x: -self.y, y: self.x }
    }

    /// Background polar angle in `(-pi, pi]`.
    pub fn angle(self) -> T {
        self.y.atan2(self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn from_polar_e(r: T, theta: T) -> Self {
        Vector2 { x: r * theta.cos(), y: r * theta.sin() }
    }
}

impl<T: Real> Add for Vector2<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Vector2 { x: self.x + o.x, y: self.y + o.y }
    }
}

impl<T: Real> Sub for Vector2<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Vector2 { x: self.x - o.x, y: self.y - o.y }
    }
}

impl<T: Real> Neg for Vector2<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Vector2 { x: -self.x, y: -self.y }
    }
}

impl<T: Real> Mul<T> for Vector2<T> {
    type Output = Self;
    fn mul(self, k: T) -> Self {
        Vector2 { x: self.x * k, y: self.y * k }
    }
}

impl<T: Real> Div<T> for Vector2<T> {
    type Output = Self;
    fn div(self, k: T) -> Self {
        Vector2 { x: self.x / k, y: self.y / k }
    }
}

impl<T: Real> std::fmt::Debug for Vector2<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?}, {:?})", self.x, self.y)
    }
}

impl<T: Real> std::fmt::Display for Vector2<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}
