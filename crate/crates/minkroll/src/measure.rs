//! Angle measures on the unit circle and the generalized rotations they
//! induce.
//!
//! An angle measure assigns mass to arcs of directions; normalizing the
//! total to `2 pi` turns it into an angle scale. Rotation by `theta` slides
//! every direction forward by measure `theta` while preserving norms, so
//! homothety factors survive and rotations about a common measure form a
//! one-parameter group.
//!
//! Polygonal carriers get closed-form cumulative functions (piecewise linear
//! in perimeter position, exact sector areas), smooth carriers get quadrature
//! tables refreshed by bracketed Newton inversion.

use crate::error::{Error, Result};
use crate::numerics::{self, PeriodicCubic};
use crate::plane::PlaneContext;
use crate::scalar::Real;
use crate::vec2::Vector2;
use std::sync::Arc;

enum MeasureKind<T> {
    /// Minkowski arc length along the unit circle.
    ArcLength,
    /// Sector area swept from the center.
    Area,
    /// Custom positive density `w(theta) dtheta`, periodically interpolated.
    Density(PeriodicCubic<T>),
}

struct MeasureInner<T> {
    ctx: PlaneContext<T>,
    kind: MeasureKind<T>,
    /// quadrature table for Area / Density on smooth carriers
    nodes: Vec<T>,
    cdf: Vec<T>,
    /// polygon sector-area cdf at the vertices (Area on polygon carriers)
    poly_area_cum: Vec<T>,
    total_raw: T,
}

/// A normalized angle measure on the directions of a plane.
pub struct AngleMeasure<T> {
    inner: Arc<MeasureInner<T>>,
}

impl<T> Clone for AngleMeasure<T> {
    fn clone(&self) -> Self {
        AngleMeasure { inner: Arc::clone(&self.inner) }
    }
}

/// Result of the measure sanity checks.
#[derive(Debug, Clone, Copy)]
pub struct BrassReport<T> {
    /// normalized total equals `2 pi` within tolerance
    pub total_ok: bool,
    /// antipodal arcs carry equal mass within tolerance
    pub symmetric: bool,
    /// no fine cell concentrates a disproportionate share of the mass
    pub atomless: bool,
    /// largest residual seen by the symmetry probe
    pub max_symmetry_residual: T,
    /// largest fine-cell mass relative to the average cell
    pub max_cell_ratio: T,
}

impl<T: Real> AngleMeasure<T> {
    /// Arc-length measure: arcs weighted by their Minkowski length.
    pub fn arclen(ctx: &PlaneContext<T>) -> Self {
        let total = ctx.circumference();
        AngleMeasure {
            inner: Arc::new(MeasureInner {
                ctx: ctx.clone(),
                kind: MeasureKind::ArcLength,
                nodes: Vec::new(),
                cdf: Vec::new(),
                poly_area_cum: Vec::new(),
                total_raw: total,
            }),
        }
    }

    /// Sector-area measure: arcs weighted by the area they sweep.
    pub fn area(ctx: &PlaneContext<T>) -> Self {
        if let Some(verts) = ctx.polygon_vertices() {
            // exact cumulative sector areas at the vertices
            let n = verts.len();
            let mut cum = Vec::with_capacity(n + 1);
            let mut acc = T::zero();
            cum.push(acc);
            for i in 0..n {
                acc = acc + verts[i].cross(verts[(i + 1) % n]) * T::half();
                cum.push(acc);
            }
            return AngleMeasure {
                inner: Arc::new(MeasureInner {
                    ctx: ctx.clone(),
                    kind: MeasureKind::Area,
                    nodes: Vec::new(),
                    cdf: Vec::new(),
                    poly_area_cum: cum,
                    total_raw: acc,
                }),
            };
        }
        let density = area_density(ctx.clone());
        let (nodes, cdf) = build_cdf(&density, 4096);
        let total = *cdf.last().unwrap();
        AngleMeasure {
            inner: Arc::new(MeasureInner {
                ctx: ctx.clone(),
                kind: MeasureKind::Area,
                nodes,
                cdf,
                poly_area_cum: Vec::new(),
                total_raw: total,
            }),
        }
    }

    /// Custom density from `(theta, weight)` samples, interpolated
    /// periodically. Weights must stay strictly positive.
    pub fn density(ctx: &PlaneContext<T>, samples: Vec<(T, T)>) -> Result<Self> {
        if samples.len() < 4 {
            return Err(Error::BadParams("density needs at least 4 samples".into()));
        }
        let mut s: Vec<(T, T)> = samples
            .into_iter()
            .map(|(a, w)| {
                let mut th = a % T::two_pi();
                if th < T::zero() {
                    th = th + T::two_pi();
                }
                (th, w)
            })
            .collect();
        s.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
        for w in s.windows(2) {
            if w[1].0 - w[0].0 <= T::lit(1e-12) {
                return Err(Error::BadParams("duplicate density sample angle".into()));
            }
        }
        if s.iter().any(|&(_, w)| !(w > T::zero()) || !w.is_finite()) {
            return Err(Error::DegenerateDensity);
        }
        let sp = PeriodicCubic::new(
            s.iter().map(|p| p.0).collect(),
            s.iter().map(|p| p.1).collect(),
            T::two_pi(),
        );
        // the interpolant must stay positive between samples too
        let m = 4096;
        for k in 0..m {
            let th = T::two_pi() * T::from_usize(k).unwrap() / T::from_usize(m).unwrap();
            if !(sp.eval(th) > T::zero()) {
                return Err(Error::DegenerateDensity);
            }
        }
        let spd = Arc::new(sp);
        let sp2 = Arc::clone(&spd);
        let dens = move |th: T| sp2.eval(th);
        let (nodes, cdf) = build_cdf(&dens, 4096);
        let total = *cdf.last().unwrap();
        drop(dens);
        let sp = match Arc::try_unwrap(spd) {
            Ok(sp) => sp,
            Err(_) => unreachable!("interpolant uniquely owned"),
        };
        Ok(AngleMeasure {
            inner: Arc::new(MeasureInner {
                ctx: ctx.clone(),
                kind: MeasureKind::Density(sp),
                nodes,
                cdf,
                poly_area_cum: Vec::new(),
                total_raw: total,
            }),
        })
    }

    pub fn context(&self) -> &PlaneContext<T> {
        &self.inner.ctx
    }

    /// Un-normalized total mass: circumference for arc length, ball area for
    /// sector area, integral of the weight for densities.
    pub fn total_raw(&self) -> T {
        self.inner.total_raw
    }

    /// Raw (un-normalized) measure of the arc from the reference direction
    /// `theta = 0` counterclockwise to `theta`, in `[0, total_raw)`.
    pub fn raw_value(&self, theta: T) -> T {
        let th = wrap(theta);
        let i = &self.inner;
        match &i.kind {
            MeasureKind::ArcLength => {
                let base = i.ctx.arcpos_of_theta(T::zero());
                let mut d = i.ctx.arcpos_of_theta(th) - base;
                if d < T::zero() {
                    d = d + i.ctx.circumference();
                }
                d
            }
            MeasureKind::Area if !i.poly_area_cum.is_empty() => {
                let verts = i.ctx.polygon_vertices().expect("polygon carrier");
                let b = i.ctx.boundary_point(th);
                let (k, _) = polygon_sector(&verts, th);
                let partial = verts[k].cross(b) * T::half();
                let cum = i.poly_area_cum[k] + partial;
                let base = {
                    let b0 = i.ctx.boundary_point(T::zero());
                    let (k0, _) = polygon_sector(&verts, T::zero());
                    i.poly_area_cum[k0] + verts[k0].cross(b0) * T::half()
                };
                let mut d = cum - base;
                if d < T::zero() {
                    d = d + i.total_raw;
                }
                d
            }
            _ => {
                let idx = numerics::bracket_index(&i.nodes, th);
                let a = i.nodes[idx];
                let f = self.density_fn();
                i.cdf[idx] + numerics::integrate(&f, a, th, T::lit(1e-14))
            }
        }
    }

    fn density_fn(&self) -> Box<dyn Fn(T) -> T + '_> {
        let i = &self.inner;
        match &i.kind {
            MeasureKind::ArcLength => {
                let ctx = i.ctx.clone();
                Box::new(move |th: T| ctx.boundary_speed(th))
            }
            MeasureKind::Area => {
                let ctx = i.ctx.clone();
                Box::new(move |th: T| {
                    let b = ctx.boundary_point(th);
                    let db = ctx.boundary_deriv_theta(th);
                    b.cross(db).abs() * T::half()
                })
            }
            MeasureKind::Density(sp) => Box::new(move |th: T| sp.eval(wrap(th))),
        }
    }

    /// Normalized measure of the arc from `theta = 0` to `theta`: the angle
    /// coordinate of the direction, in `[0, 2 pi)`.
    pub fn value(&self, theta: T) -> T {
        self.raw_value(theta) / self.inner.total_raw * T::two_pi()
    }

    /// Normalized measure of the counterclockwise arc from direction `a`
    /// to direction `b`.
    pub fn arc_between(&self, a: T, b: T) -> T {
        let mut d = self.value(b) - self.value(a);
        if d < T::zero() {
            d = d + T::two_pi();
        }
        d
    }

    /// Inverse of [`AngleMeasure::value`]: the background angle whose
    /// normalized measure coordinate is `m` (taken mod `2 pi`).
    pub fn theta_at(&self, m: T) -> T {
        let mut m = m % T::two_pi();
        if m < T::zero() {
            m = m + T::two_pi();
        }
        let raw = m / T::two_pi() * self.inner.total_raw;
        let i = &self.inner;
        match &i.kind {
            MeasureKind::ArcLength => {
                let base = i.ctx.arcpos_of_theta(T::zero());
                i.ctx.theta_of_arcpos(base + raw)
            }
            MeasureKind::Area if !i.poly_area_cum.is_empty() => {
                let verts = i.ctx.polygon_vertices().expect("polygon carrier");
                let n = verts.len();
                // shift to the vertex-based origin
                let base = {
                    let b0 = i.ctx.boundary_point(T::zero());
                    let (k0, _) = polygon_sector(&verts, T::zero());
                    i.poly_area_cum[k0] + verts[k0].cross(b0) * T::half()
                };
                let mut target = base + raw;
                if target >= i.total_raw {
                    target = target - i.total_raw;
                }
                let k = numerics::bracket_index(&i.poly_area_cum, target).min(n - 1);
                // within edge k: area is linear in the edge parameter
                let e = verts[(k + 1) % n] - verts[k];
                let rate = verts[k].cross(e) * T::half();
                let t = (target - i.poly_area_cum[k]) / rate;
                let b = verts[k] + e * t;
                wrap(b.angle())
            }
            _ => {
                let idx = numerics::bracket_index(&i.cdf, raw);
                let (t0, t1) = (i.nodes[idx], i.nodes[idx + 1]);
                let c0 = i.cdf[idx];
                let f = self.density_fn();
                let g = |th: T| c0 + numerics::integrate(&f, t0, th, T::lit(1e-14)) - raw;
                let guess = t0 + (t1 - t0) * ((raw - c0) / (i.cdf[idx + 1] - c0));
                numerics::newton_bracketed(g, |th| f(th), t0, t1, guess, T::lit(1e-15))
            }
        }
    }

    /// Polar form: Minkowski norm and normalized angle coordinate.
    pub fn to_polar(&self, x: Vector2<T>) -> Result<(T, T)> {
        let n = self.inner.ctx.norm(x);
        if n == T::zero() {
            return Err(Error::ZeroVector);
        }
        Ok((n, self.value(x.angle())))
    }

    /// Rebuilds the vector with Minkowski norm `r` and normalized angle `m`.
    pub fn from_polar(&self, r: T, m: T) -> Vector2<T> {
        self.inner.ctx.boundary_point(self.theta_at(m)) * r
    }

    /// Sanity checks: normalized total, central symmetry, absence of atoms.
    pub fn brass_check(&self, tol: T) -> BrassReport<T> {
        // total: normalized value just below a full turn approaches 2 pi
        let eps = T::lit(1e-9);
        let almost = self.value(T::two_pi() - eps);
        let total_ok = (T::two_pi() - almost).abs() <= tol + eps * T::lit(10.0);

        // symmetry: antipodal arcs carry the same mass
        let mut max_sym = T::zero();
        let k = 64;
        for idx in 0..k {
            let a = T::two_pi() * T::from_usize(idx).unwrap() / T::from_usize(k).unwrap();
            let b = a + T::two_pi() * T::from_usize(idx % 7 + 1).unwrap() / T::lit(16.0);
            let d1 = self.arc_mod(a, b);
            let d2 = self.arc_mod(a + T::pi(), b + T::pi());
            max_sym = max_sym.max((d1 - d2).abs());
        }
        let symmetric = max_sym <= tol;

        // atoms: no fine cell holds a disproportionate share
        let cells = 4096;
        let mut max_cell = T::zero();
        let mut prev = self.value(T::zero());
        for idx in 1..=cells {
            let th = T::two_pi() * T::from_usize(idx).unwrap() / T::from_usize(cells).unwrap();
            let v = if idx == cells { T::two_pi() } else { self.value(th) };
            max_cell = max_cell.max(v - prev);
            prev = v;
        }
        let avg = T::two_pi() / T::from_usize(cells).unwrap();
        let ratio = max_cell / avg;
        let atomless = ratio <= T::lit(64.0);

        BrassReport {
            total_ok,
            symmetric,
            atomless,
            max_symmetry_residual: max_sym,
            max_cell_ratio: ratio,
        }
    }

    fn arc_mod(&self, a: T, b: T) -> T {
        self.arc_between(wrap(a), wrap(b))
    }

    /// Converts a normalized angle to the raw scale of this measure
    /// (arc length units for the arc-length measure).
    pub fn raw_of_normalized(&self, theta: T) -> T {
        theta * self.inner.total_raw / T::two_pi()
    }

    /// Shared-identity check: rotations only compose over the same measure.
    pub fn same_measure(&self, other: &AngleMeasure<T>) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    /// The rotation by normalized angle `theta` under this measure.
    pub fn rotation(&self, theta: T) -> GeneralRotation<T> {
        GeneralRotation { measure: self.clone(), theta }
    }
}

fn wrap<T: Real>(a: T) -> T {
    let mut th = a % T::two_pi();
    if th < T::zero() {
        th = th + T::two_pi();
    }
    th
}

fn area_density<T: Real>(ctx: PlaneContext<T>) -> impl Fn(T) -> T {
    move |th: T| {
        let b = ctx.boundary_point(th);
        let db = ctx.boundary_deriv_theta(th);
        b.cross(db).abs() * T::half()
    }
}

fn build_cdf<T: Real>(density: &impl Fn(T) -> T, n: usize) -> (Vec<T>, Vec<T>) {
    let mut nodes = Vec::with_capacity(n + 1);
    let mut cdf = Vec::with_capacity(n + 1);
    let mut acc = T::zero();
    nodes.push(T::zero());
    cdf.push(acc);
    for i in 0..n {
        let a = T::two_pi() * T::from_usize(i).unwrap() / T::from_usize(n).unwrap();
        let b = T::two_pi() * T::from_usize(i + 1).unwrap() / T::from_usize(n).unwrap();
        acc = acc + numerics::integrate(density, a, b, T::lit(1e-15));
        nodes.push(b);
        cdf.push(acc);
    }
    (nodes, cdf)
}

/// Locates the polygon sector (vertex wedge) containing direction `theta`:
/// returns the index `k` such that `theta` lies between the angles of
/// `verts[k]` and `verts[k+1]`.
fn polygon_sector<T: Real>(verts: &[Vector2<T>], theta: T) -> (usize, bool) {
    let n = verts.len();
    let base = wrap(verts[0].angle());
    let mut th = wrap(theta);
    while th < base {
        th = th + T::two_pi();
    }
    let mut angles = Vec::with_capacity(n);
    let mut prev = T::neg_infinity();
    for v in verts {
        let mut a = wrap(v.angle());
        while a <= prev {
            a = a + T::two_pi();
        }
        prev = a;
        angles.push(a);
    }
    let mut k = n - 1;
    for i in 0..n {
        let hi = if i + 1 < n { angles[i + 1] } else { angles[0] + T::two_pi() };
        if th >= angles[i] && th < hi {
            k = i;
            break;
        }
    }
    (k, false)
}

/// A generalized rotation: advances directions by a fixed normalized angle
/// of an [`AngleMeasure`] while preserving Minkowski norms.
pub struct GeneralRotation<T> {
    measure: AngleMeasure<T>,
    theta: T,
}

impl<T> Clone for GeneralRotation<T>
where
    T: Copy,
{
    fn clone(&self) -> Self {
        GeneralRotation { measure: self.measure.clone(), theta: self.theta }
    }
}

impl<T: Real> GeneralRotation<T> {
    pub fn new(measure: &AngleMeasure<T>, theta: T) -> Self {
        GeneralRotation { measure: measure.clone(), theta }
    }

    pub fn theta(&self) -> T {
        self.theta
    }

    pub fn measure(&self) -> &AngleMeasure<T> {
        &self.measure
    }

    /// Raw angle corresponding to `theta` (e.g. boundary arc length for the
    /// arc-length measure).
    pub fn raw_angle(&self) -> T {
        self.measure.raw_of_normalized(self.theta)
    }

    /// Rotates `x` about the origin: norm is preserved exactly, the angle
    /// coordinate advances by `theta`.
    pub fn rotate(&self, x: Vector2<T>) -> Result<Vector2<T>> {
        let (n, m) = self.measure.to_polar(x)?;
        Ok(self.measure.from_polar(n, m + self.theta))
    }

    /// Rotates `x` about `center`.
    pub fn rotate_about(&self, center: Vector2<T>, x: Vector2<T>) -> Result<Vector2<T>> {
        if (x - center).norm_e() == T::zero() {
            return Ok(x);
        }
        Ok(center + self.rotate(x - center)?)
    }

    /// Composition: both rotations must share the same measure.
    pub fn compose(&self, other: &GeneralRotation<T>) -> Result<GeneralRotation<T>> {
        if !self.measure.same_measure(&other.measure) {
            return Err(Error::MeasureMismatch);
        }
        Ok(GeneralRotation {
            measure: self.measure.clone(),
            theta: self.theta + other.theta,
        })
    }

    pub fn inverse(&self) -> GeneralRotation<T> {
        GeneralRotation { measure: self.measure.clone(), theta: -self.theta }
    }
}

/// Rigid placement built from a rotation: `x -> target + R(x - anchor)`.
pub fn motion_apply<T: Real>(
    rot: &GeneralRotation<T>,
    anchor: Vector2<T>,
    target: Vector2<T>,
    x: Vector2<T>,
) -> Result<Vector2<T>> {
    if (x - anchor).norm_e() == T::zero() {
        return Ok(target);
    }
    Ok(target + rot.rotate(x - anchor)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: f64, y: f64) -> Vector2<f64> {
        Vector2::new(x, y)
    }

    #[test]
    fn euclid_measures_are_the_classical_angle() {
        let e = PlaneContext::<f64>::euclidean();
        for m in [AngleMeasure::arclen(&e), AngleMeasure::area(&e)] {
            for th in [0.0, 0.7, 2.0, 4.5, 6.0] {
                assert!((m.value(th) - th).abs() < 1e-9, "th {th}");
            }
            let r = m.rotation(1.0);
            let p = r.rotate(v(2.0, 0.5)).unwrap();
            let (c, s) = (1.0f64.cos(), 1.0f64.sin());
            let expect = v(2.0 * c - 0.5 * s, 2.0 * s + 0.5 * c);
            assert!((p - expect).norm_e() < 1e-9, "{p:?}");
        }
    }

    #[test]
    fn square_quarter_rotation_is_euclidean() {
        let li = PlaneContext::<f64>::linf();
        let m = AngleMeasure::arclen(&li);
        let r = m.rotation(std::f64::consts::FRAC_PI_2);
        // quarter by arc length = two units of the eight-unit perimeter
        let p = r.rotate(v(1.0, 0.5)).unwrap();
        assert!((p - v(-0.5, 1.0)).norm_e() < 1e-12, "{p:?}");
        // raw angle exposure
        assert!((r.raw_angle() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn square_area_measure_matches_arclen_on_square() {
        // on the square both densities are proportional edge by edge
        let li = PlaneContext::<f64>::linf();
        let ma = AngleMeasure::area(&li);
        let ml = AngleMeasure::arclen(&li);
        assert!((ma.total_raw() - 4.0).abs() < 1e-12);
        assert!((ml.total_raw() - 8.0).abs() < 1e-12);
        for th in [0.1, 0.7, 2.9, 4.0, 5.7] {
            assert!((ma.value(th) - ml.value(th)).abs() < 1e-12, "th {th}");
        }
    }

    #[test]
    fn rotation_preserves_norm_and_homothety() {
        let l4 = PlaneContext::<f64>::lp(4.0).unwrap();
        let m = AngleMeasure::arclen(&l4);
        let r = m.rotation(0.9);
        let x = v(0.3, -1.2);
        let y = r.rotate(x).unwrap();
        assert!((l4.norm(y) - l4.norm(x)).abs() < 1e-12);
        for alpha in [0.5, 2.0, 3.0] {
            let ya = r.rotate(x * alpha).unwrap();
            assert!((ya - y * alpha).norm_e() < 1e-10, "alpha {alpha}");
        }
    }

    #[test]
    fn rotations_compose_additively() {
        let l4 = PlaneContext::<f64>::lp(4.0).unwrap();
        let m = AngleMeasure::area(&l4);
        let r1 = m.rotation(0.8);
        let r2 = m.rotation(1.7);
        let x = v(1.1, 0.2);
        let a = r2.rotate(r1.rotate(x).unwrap()).unwrap();
        let b = r1.compose(&r2).unwrap().rotate(x).unwrap();
        assert!((a - b).norm_e() < 1e-9, "{a:?} vs {b:?}");
        // inverse undoes
        let back = r1.inverse().rotate(r1.rotate(x).unwrap()).unwrap();
        assert!((back - x).norm_e() < 1e-9);
    }

    #[test]
    fn compose_requires_same_measure() {
        let l4 = PlaneContext::<f64>::lp(4.0).unwrap();
        let m1 = AngleMeasure::arclen(&l4);
        let m2 = AngleMeasure::arclen(&l4); // same kind, distinct identity
        let r1 = m1.rotation(0.3);
        let r2 = m2.rotation(0.4);
        assert!(matches!(r1.compose(&r2), Err(Error::MeasureMismatch)));
    }

    #[test]
    fn brass_checks_pass_for_canonical_measures() {
        for ctx in [
            PlaneContext::<f64>::euclidean(),
            PlaneContext::<f64>::lp(4.0).unwrap(),
            PlaneContext::<f64>::linf(),
            PlaneContext::<f64>::l1(),
        ] {
            for m in [AngleMeasure::arclen(&ctx), AngleMeasure::area(&ctx)] {
                let rep = m.brass_check(1e-8);
                assert!(rep.total_ok, "total: {rep:?}");
                assert!(rep.symmetric, "symmetry: {rep:?}");
                assert!(rep.atomless, "atoms: {rep:?}");
            }
        }
    }

    #[test]
    fn asymmetric_density_is_flagged() {
        let e = PlaneContext::<f64>::euclidean();
        let n = 64;
        let samples: Vec<(f64, f64)> = (0..n)
            .map(|i| {
                let th = std::f64::consts::TAU * i as f64 / n as f64;
                (th, 1.0 + 0.5 * th.sin()) // not centrally symmetric
            })
            .collect();
        let m = AngleMeasure::density(&e, samples).unwrap();
        let rep = m.brass_check(1e-8);
        assert!(rep.total_ok);
        assert!(!rep.symmetric);
    }

    #[test]
    fn degenerate_density_rejected() {
        let e = PlaneContext::<f64>::euclidean();
        let samples: Vec<(f64, f64)> = (0..16)
            .map(|i| {
                let th = std::f64::consts::TAU * i as f64 / 16.0;
                (th, th.cos()) // dips below zero
            })
            .collect();
        assert!(matches!(
            AngleMeasure::density(&e, samples),
            Err(Error::DegenerateDensity)
        ));
    }

    #[test]
    fn polar_roundtrip_square_area() {
        let li = PlaneContext::<f64>::linf();
        let m = AngleMeasure::area(&li);
        for x in [v(1.0, 0.3), v(-0.2, 0.9), v(-1.4, -1.4), v(0.4, -1.0)] {
            let (r, a) = m.to_polar(x).unwrap();
            let back = m.from_polar(r, a);
            assert!((back - x).norm_e() < 1e-10, "{x:?} -> {back:?}");
        }
    }

    #[test]
    fn motion_apply_moves_anchor_to_target() {
        let e = PlaneContext::<f64>::euclidean();
        let m = AngleMeasure::arclen(&e);
        let r = m.rotation(std::f64::consts::FRAC_PI_2);
        let anchor = v(1.0, 1.0);
        let target = v(3.0, 0.0);
        let p = motion_apply(&r, anchor, target, anchor).unwrap();
        assert!((p - target).norm_e() < 1e-12);
        let q = motion_apply(&r, anchor, target, v(2.0, 1.0)).unwrap();
        assert!((q - v(3.0, 1.0)).norm_e() < 1e-9, "{q:?}");
    }
}
