//! Flexible motions: one curve rolling on another without slipping.
//!
//! Both polodes are kept in Minkowski arc-length parametrization with the
//! contact configuration at `s = 0`. The rolling map at parameter `s` sends
//! the moving plane through the generalized rotation (raw boundary arc
//! angle) that carries the moving polode's tangent onto the fixed one's,
//! anchored so the polode points of equal rolled length coincide:
//! `x -> gamma(s) + R(phi_raw(s)) (x - gamma'(s))`.
//!
//! Raw angles are unwrapped along a node table so `phi_raw` is continuous
//! with `phi_raw(0) = 0`.

use crate::curve::ParamCurve;
use crate::error::{Error, Result};
use crate::plane::PlaneContext;
use crate::scalar::Real;
use crate::vec2::Vector2;

/// A no-slip rolling of `moving` on `fixed`.
pub struct RollingMotion<T> {
    ctx: PlaneContext<T>,
    /// fixed polode, unit Minkowski speed, contact at s = 0
    fixed: ParamCurve<T>,
    /// moving polode, unit Minkowski speed, contact at s = 0
    moving: ParamCurve<T>,
    window: (T, T),
    phi_nodes: Vec<T>,
    phi_vals: Vec<T>,
}

/// Residuals of the rolling invariants over a sample of the window.
#[derive(Debug, Clone, Copy)]
pub struct RollCheck<T> {
    /// worst deviation of either polode speed from 1
    pub max_speed_residual: T,
    /// worst mismatch of the rotated moving tangent against the fixed one
    pub max_tangent_residual: T,
    /// worst normalized arc-length mismatch between rolled arcs
    pub max_arc_residual: T,
}

impl<T: Real> RollingMotion<T> {
    /// Builds a rolling motion from unit-speed polodes with the contact at
    /// `s = 0`. Verifies contact and tangency; `window` is the parameter
    /// range the unwrap table covers (must contain 0).
    pub fn from_unit_speed(
        ctx: &PlaneContext<T>,
        fixed: ParamCurve<T>,
        moving: ParamCurve<T>,
        window: (T, T),
    ) -> Result<Self> {
        if !(window.0 <= T::zero() && window.1 > window.0 && T::zero() <= window.1) {
            return Err(Error::BadParams(format!(
                "window must contain 0, got [{}, {}]",
                window.0, window.1
            )));
        }
        let pf = fixed.eval(T::zero());
        let pm = moving.eval(T::zero());
        let scale = T::one() + pf.norm_e();
        let gap = (pf - pm).norm_e();
        if gap > scale * T::lit(1e-9) {
            return Err(Error::NoCommonContact(gap.to_f64().unwrap_or(f64::NAN)));
        }
        let tf = fixed.deriv(T::zero());
        let tm = moving.deriv(T::zero());
        let cross = tf.unit_e().cross(tm.unit_e()).abs();
        if cross > T::lit(1e-6) || tf.dot(tm) <= T::zero() {
            return Err(Error::TangentMismatch(cross.to_f64().unwrap_or(f64::NAN)));
        }
        let mut m = RollingMotion {
            ctx: ctx.clone(),
            fixed,
            moving,
            window,
            phi_nodes: Vec::new(),
            phi_vals: Vec::new(),
        };
        m.build_phi_table()?;
        Ok(m)
    }

    /// Builds a rolling motion from arbitrary regular curves: both are
    /// reparametrized by Minkowski arc length, with the contact placed at
    /// the given curve parameters.
    pub fn new(
        ctx: &PlaneContext<T>,
        fixed: &ParamCurve<T>,
        moving: &ParamCurve<T>,
        contact_fixed_param: T,
        contact_moving_param: T,
        window: (T, T),
    ) -> Result<Self> {
        let f = shifted_arclen(ctx, fixed, contact_fixed_param)?;
        let m = shifted_arclen(ctx, moving, contact_moving_param)?;
        Self::from_unit_speed(ctx, f, m, window)
    }

    fn build_phi_table(&mut self) -> Result<()> {
        let n = 4096usize;
        let (lo, hi) = self.window;
        let span = hi - lo;
        let circ = self.ctx.circumference();
        let mut nodes = Vec::with_capacity(n + 1);
        let mut vals = Vec::with_capacity(n + 1);
        // start the unwrap at s = 0 where tangents coincide: phi(0) = 0
        let u0 = self.phi_wrapped(T::zero())?;
        // walk right from 0, then left from 0, then stitch
        let mut right_nodes = vec![T::zero()];
        let mut right_vals = vec![nearest_branch(u0, T::zero(), circ)];
        let steps_r = ((hi / span) * T::from_usize(n).unwrap())
            .ceil()
            .to_usize()
            .unwrap_or(0)
            .max(1);
        let h_r = hi / T::from_usize(steps_r).unwrap();
        for k in 1..=steps_r {
            let s = h_r * T::from_usize(k).unwrap();
            let u = self.phi_wrapped(s)?;
            let prev = *right_vals.last().unwrap();
            right_vals.push(prev + wrap_pm(u - prev, circ));
            right_nodes.push(s);
        }
        let mut left_nodes = vec![T::zero()];
        let mut left_vals = vec![right_vals[0]];
        if lo < T::zero() {
            let steps_l = (((-lo) / span) * T::from_usize(n).unwrap())
                .ceil()
                .to_usize()
                .unwrap_or(0)
                .max(1);
            let h_l = lo / T::from_usize(steps_l).unwrap();
            for k in 1..=steps_l {
                let s = h_l * T::from_usize(k).unwrap();
                let u = self.phi_wrapped(s)?;
                let prev = *left_vals.last().unwrap();
                left_vals.push(prev + wrap_pm(u - prev, circ));
                left_nodes.push(s);
            }
        }
        for i in (1..left_nodes.len()).rev() {
            nodes.push(left_nodes[i]);
            vals.push(left_vals[i]);
        }
        nodes.extend(right_nodes);
        vals.extend(right_vals);
        self.phi_nodes = nodes;
        self.phi_vals = vals;
        Ok(())
    }

    /// Raw rotation angle at `s`, wrapped to `[0, circumference)`: boundary
    /// arc position of the fixed tangent minus that of the moving tangent.
    fn phi_wrapped(&self, s: T) -> Result<T> {
        let a = self.ctx.arcpos(self.fixed.deriv(s))?;
        let b = self.ctx.arcpos(self.moving.deriv(s))?;
        let circ = self.ctx.circumference();
        let mut d = (a - b) % circ;
        if d < T::zero() {
            d = d + circ;
        }
        Ok(d)
    }

    /// Continuous raw rotation angle with `phi_raw(0) = 0`. Defined for any
    /// `s` within (or moderately beyond) the window.
    pub fn phi_raw(&self, s: T) -> Result<T> {
        let u = self.phi_wrapped(s)?;
        let circ = self.ctx.circumference();
        // nearest table node anchors the branch
        let i = match self
            .phi_nodes
            .binary_search_by(|x| x.partial_cmp(&s).unwrap())
        {
            Ok(i) => i,
            Err(i) => {
                if i == 0 {
                    0
                } else if i >= self.phi_nodes.len() {
                    self.phi_nodes.len() - 1
                } else if (self.phi_nodes[i] - s).abs() < (s - self.phi_nodes[i - 1]).abs() {
                    i
                } else {
                    i - 1
                }
            }
        };
        Ok(self.phi_vals[i] + wrap_pm(u - self.phi_vals[i], circ))
    }

    pub fn context(&self) -> &PlaneContext<T> {
        &self.ctx
    }

    pub fn fixed(&self) -> &ParamCurve<T> {
        &self.fixed
    }

    pub fn moving(&self) -> &ParamCurve<T> {
        &self.moving
    }

    pub fn window(&self) -> (T, T) {
        self.window
    }

    /// Contact point at roll parameter `s` (a point of the fixed polode).
    pub fn contact(&self, s: T) -> Vector2<T> {
        self.fixed.eval(s)
    }

    /// Common unit tangent of both polodes at the contact.
    pub fn contact_tangent(&self, s: T) -> Vector2<T> {
        self.fixed.deriv(s)
    }

    /// The rolling map at parameter `s` applied to a point `x` of the
    /// moving plane.
    pub fn transform(&self, s: T, x: Vector2<T>) -> Result<Vector2<T>> {
        let g = self.fixed.eval(s);
        let gm = self.moving.eval(s);
        let d = x - gm;
        if d.norm_e() == T::zero() {
            return Ok(g);
        }
        let phi = self.phi_raw(s)?;
        Ok(g + self.ctx.rotate_raw(d, phi)?)
    }

    /// The path a moving-plane point traces under the rolling, as a curve
    /// over the window. Velocities come from finite differences of the
    /// transform.
    pub fn roulette(&self, p: Vector2<T>) -> ParamCurve<T>
    where
        T: 'static,
    {
        let me = self.shallow_clone();
        ParamCurve::new(
            move |s: T| me.transform(s, p).expect("roulette eval"),
            self.window,
        )
    }

    fn shallow_clone(&self) -> RollingMotion<T> {
        RollingMotion {
            ctx: self.ctx.clone(),
            fixed: self.fixed.clone(),
            moving: self.moving.clone(),
            window: self.window,
            phi_nodes: self.phi_nodes.clone(),
            phi_vals: self.phi_vals.clone(),
        }
    }

    /// Forward-difference check that the tracked point's velocity is
    /// conjugate (via the semi-inner product) to the segment joining it to
    /// the instantaneous pole, i.e. the contact point: returns the
    /// normalized residual `|[v, x - K]| / (|v| |x - K|)`.
    ///
    /// The conjugacy is exact at `s = 0`, where the rolling rotation is the
    /// identity; away from the contact configuration it only survives in
    /// planes whose raw rotations are linear maps (the Euclidean one), so
    /// meaningful residual checks re-anchor the motion instead of sliding
    /// `s`.
    pub fn instantaneous_pole_check(&self, s: T, p: Vector2<T>, h: T) -> Result<T> {
        let x0 = self.transform(s, p)?;
        let x1 = self.transform(s + h, p)?;
        let v = (x1 - x0) / h;
        let k = self.contact(s);
        let r = x0 - k;
        let nv = self.ctx.norm(v);
        let nr = self.ctx.norm(r);
        if nr <= T::lit(1e-10) * (T::one() + self.ctx.norm(x0) + self.ctx.norm(k)) {
            return Err(Error::PoleCoincidence);
        }
        if nv == T::zero() {
            return Err(Error::IrregularCurve(format!("tracked point stalls at s = {s}")));
        }
        Ok(self.ctx.semi_inner(v, r).abs() / (nv * nr))
    }

    /// Samples the rolling invariants over the window.
    pub fn roll_check(&self, samples: usize) -> Result<RollCheck<T>> {
        let (lo, hi) = self.window;
        let mut max_speed = T::zero();
        let mut max_tan = T::zero();
        let mut max_arc = T::zero();
        let n = samples.max(2);
        for k in 0..n {
            let s = lo + (hi - lo) * T::from_usize(k).unwrap() / T::from_usize(n - 1).unwrap();
            let df = self.fixed.deriv(s);
            let dm = self.moving.deriv(s);
            max_speed = max_speed
                .max((self.ctx.norm(df) - T::one()).abs())
                .max((self.ctx.norm(dm) - T::one()).abs());
            let phi = self.phi_raw(s)?;
            let carried = self.ctx.rotate_raw(dm, phi)?;
            max_tan = max_tan.max(self.ctx.norm(carried - df));
            if s != T::zero() {
                let af = self.fixed.arc_length(&self.ctx, T::zero().min(s), T::zero().max(s))?;
                let am = self.moving.arc_length(&self.ctx, T::zero().min(s), T::zero().max(s))?;
                max_arc = max_arc.max((af - am).abs() / s.abs());
            }
        }
        Ok(RollCheck {
            max_speed_residual: max_speed,
            max_tangent_residual: max_tan,
            max_arc_residual: max_arc,
        })
    }
}

fn wrap_pm<T: Real>(d: T, circ: T) -> T {
    let mut d = d % circ;
    if d > circ * T::half() {
        d = d - circ;
    }
    if d < -circ * T::half() {
        d = d + circ;
    }
    d
}

fn nearest_branch<T: Real>(u: T, target: T, circ: T) -> T {
    target + wrap_pm(u - target, circ)
}

fn shifted_arclen<T: Real>(
    ctx: &PlaneContext<T>,
    curve: &ParamCurve<T>,
    contact_param: T,
) -> Result<ParamCurve<T>> {
    let al = curve.by_arclen(ctx)?;
    let off = curve.arc_length(ctx, curve.domain().0, contact_param)?;
    let total = al.domain().1;
    let closed = al.is_closed();
    let a2 = al.clone();
    let mut out = ParamCurve::new(move |s: T| al.eval(s + off), (-off, total - off))
        .with_deriv(move |s: T| a2.deriv(s + off));
    if closed {
        out = out.closed();
    }
    Ok(out)
}

// ------------------------------------------------------------------ presets

/// Rolling of the homothet `1/n` of a Minkowski circle inside that circle:
/// the generalized hypocycloid generator. The fixed polode is the circle of
/// Minkowski radius `fixed_radius` about the origin, the contact starts at
/// background angle `theta0`, and the window covers one full turn of the
/// fixed circle each way.
pub fn hypocycloid_motion<T: Real>(
    ctx: &PlaneContext<T>,
    n: u32,
    theta0: T,
    fixed_radius: T,
) -> Result<RollingMotion<T>> {
    if n < 2 {
        return Err(Error::BadParams(format!("hypocycloid needs n >= 2, got {n}")));
    }
    if !(fixed_radius > T::zero()) {
        return Err(Error::BadParams("fixed radius must be positive".into()));
    }
    let r = fixed_radius;
    let circ = ctx.circumference() * r;
    let l0 = ctx.arcpos_of_theta(theta0);
    let c1 = ctx.clone();
    let c2 = ctx.clone();
    let fixed = ParamCurve::new(
        move |s: T| c1.point_at_arclen(l0 + s / r) * r,
        (-circ, circ),
    )
    .with_deriv(move |s: T| {
        let th = c2.theta_of_arcpos(l0 + s / r);
        let d = c2.boundary_deriv_theta(th);
        d / c2.norm(d)
    })
    .closed();
    let p = ctx.boundary_point(theta0) * r;
    let nf = T::from_u32(n).unwrap();
    let f2 = fixed.clone();
    let f3 = fixed.clone();
    let moving = ParamCurve::new(
        move |s: T| p * ((nf - T::one()) / nf) + f2.eval(nf * s) / nf,
        (-circ / nf, circ / nf),
    )
    .with_deriv(move |s: T| f3.deriv(nf * s))
    .closed();
    RollingMotion::from_unit_speed(ctx, fixed, moving, (-circ, circ))
}

/// A wheel: the Minkowski circle of radius `r` rolling on the horizontal
/// axis, contact at the origin, window `(-span, span)` in rolled length.
pub fn wheel_motion<T: Real>(
    ctx: &PlaneContext<T>,
    r: T,
    span: T,
) -> Result<RollingMotion<T>> {
    if !(r > T::zero()) || !(span > T::zero()) {
        return Err(Error::BadParams("wheel needs positive radius and span".into()));
    }
    // fixed polode: the x-axis at unit Minkowski speed
    let sx = ctx.sigma_line(Vector2::new(T::one(), T::zero()))?;
    let fixed = ParamCurve::new(
        move |s: T| Vector2::new(s / sx, T::zero()),
        (-span, span),
    )
    .with_deriv(move |_s: T| Vector2::new(T::one() / sx, T::zero()));
    // moving polode: the circle of radius r through the origin whose
    // boundary tangent at the origin points along +x
    let b_star = ctx.q_inverse(Vector2::new(T::one() / sx, T::zero()))?;
    let center = -b_star * r;
    let l_star = ctx.arcpos(b_star)?;
    let c1 = ctx.clone();
    let c2 = ctx.clone();
    let moving = ParamCurve::new(
        move |s: T| center + c1.point_at_arclen(l_star + s / r) * r,
        (-span, span),
    )
    .with_deriv(move |s: T| {
        let th = c2.theta_of_arcpos(l_star + s / r);
        let d = c2.boundary_deriv_theta(th);
        d / c2.norm(d)
    })
    .closed();
    RollingMotion::from_unit_speed(ctx, fixed, moving, (-span, span))
}

// ------------------------------------------------- Euclidean motions, polodes

/// A classical planar motion given by the path of a tracked frame origin as
/// a function of the (Euclidean) rotation angle.
pub struct EuclideanMotion<T> {
    pose: ParamCurve<T>,
}

impl<T: Real> EuclideanMotion<T> {
    pub fn new(pose: ParamCurve<T>) -> Self {
        EuclideanMotion { pose }
    }

    pub fn pose(&self) -> &ParamCurve<T> {
        &self.pose
    }

    /// Position of moving-plane point `x` at rotation angle `phi`.
    pub fn apply(&self, phi: T, x: Vector2<T>) -> Vector2<T> {
        let p = self.pose.eval(phi);
        let (c, s) = (phi.cos(), phi.sin());
        p + Vector2::new(c * x.x - s * x.y, s * x.x + c * x.y)
    }
}

/// Extracts the fixed and moving polodes of a Euclidean motion: the fixed
/// pole curve `p + perp(dp/dphi)` and its counterpart pulled back to the
/// moving frame. A frozen pose (constant `p`) carries no rotation-angle
/// parametrization of an actual motion and is rejected.
pub fn euclidean_polodes<T: Real>(
    motion: &EuclideanMotion<T>,
) -> Result<(ParamCurve<T>, ParamCurve<T>)> {
    let pose = motion.pose.clone();
    let (a, b) = pose.domain();
    let mut max_d = T::zero();
    for k in 0..=32 {
        let t = a + (b - a) * T::from_usize(k).unwrap() / T::lit(32.0);
        max_d = max_d.max(pose.deriv(t).norm_e());
    }
    if !max_d.is_finite() || max_d < T::lit(1e-9) {
        return Err(Error::TranslativeMotion);
    }
    let p1 = pose.clone();
    let fixed = ParamCurve::new(move |phi: T| p1.eval(phi) + p1.deriv(phi).perp(), (a, b));
    let p2 = pose.clone();
    let moving = ParamCurve::new(
        move |phi: T| {
            let d = p2.deriv(phi).perp();
            let (c, s) = ((-phi).cos(), (-phi).sin());
            Vector2::new(c * d.x - s * d.y, s * d.x + c * d.y)
        },
        (a, b),
    );
    Ok((fixed, moving))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: f64, y: f64) -> Vector2<f64> {
        Vector2::new(x, y)
    }

    #[test]
    fn wheel_phi_is_minus_s_over_r() {
        let e = PlaneContext::<f64>::euclidean();
        let w = wheel_motion(&e, 2.0, 10.0).unwrap();
        for s in [-3.0, -0.4, 0.0, 1.2, 5.0] {
            let phi = w.phi_raw(s).unwrap();
            assert!((phi + s / 2.0).abs() < 1e-9, "s {s}: phi {phi}");
        }
    }

    #[test]
    fn wheel_center_travels_straight() {
        let e = PlaneContext::<f64>::euclidean();
        let r = 1.5;
        let w = wheel_motion(&e, r, 8.0).unwrap();
        for s in [-2.0, 0.7, 3.1] {
            let c = w.transform(s, v(0.0, r)).unwrap();
            assert!((c - v(s, r)).norm_e() < 1e-9, "s {s}: {c:?}");
        }
    }

    #[test]
    fn wheel_rim_point_traces_cycloid() {
        let e = PlaneContext::<f64>::euclidean();
        let w = wheel_motion(&e, 1.0, 8.0).unwrap();
        for s in [0.3, 1.0, std::f64::consts::PI, 4.4] {
            let p = w.transform(s, v(0.0, 0.0)).unwrap();
            let expect = v(s - s.sin(), 1.0 - s.cos());
            assert!((p - expect).norm_e() < 1e-9, "s {s}: {p:?}");
        }
    }

    #[test]
    fn euclid_hypocycloid_phi_rate() {
        let e = PlaneContext::<f64>::euclidean();
        for n in [2u32, 3, 5] {
            let m = hypocycloid_motion(&e, n, 0.0, 1.0).unwrap();
            let s = 0.37;
            let phi = m.phi_raw(s).unwrap();
            let expect = (1.0 - n as f64) * s;
            assert!((phi - expect).abs() < 1e-9, "n {n}: phi {phi} vs {expect}");
        }
    }

    #[test]
    fn l4_hypocycloid_contact_data() {
        let l4 = PlaneContext::<f64>::lp(4.0).unwrap();
        let m = hypocycloid_motion(&l4, 3, 0.9, 1.0).unwrap();
        let k = m.contact(0.0);
        assert!((k - v(0.729979523838, 0.919889695608)).norm_e() < 1e-9, "{k:?}");
        let t = m.contact_tangent(0.0);
        assert!((t - v(-0.9849908001, 0.4922173841)).norm_e() < 1e-7, "{t:?}");
        // raw angular velocity at the contact: central difference
        let h = 1e-5;
        let rate = (m.phi_raw(h).unwrap() - m.phi_raw(-h).unwrap()) / (2.0 * h);
        assert!((rate - (-5.238919257)).abs() < 1e-4, "rate {rate}");
    }

    #[test]
    fn rolling_invariants_hold() {
        let l4 = PlaneContext::<f64>::lp(4.0).unwrap();
        let m = hypocycloid_motion(&l4, 3, 0.9, 1.0).unwrap();
        let chk = m.roll_check(17).unwrap();
        assert!(chk.max_speed_residual < 1e-8, "{chk:?}");
        assert!(chk.max_tangent_residual < 1e-6, "{chk:?}");
        assert!(chk.max_arc_residual < 1e-8, "{chk:?}");
    }

    #[test]
    fn pole_check_small_residual() {
        let e = PlaneContext::<f64>::euclidean();
        let w = wheel_motion(&e, 1.0, 8.0).unwrap();
        let res = w.instantaneous_pole_check(0.5, v(0.4, 0.9), 1e-7).unwrap();
        assert!(res < 1e-5, "residual {res}");
        // outside the Euclidean plane the conjugacy holds at the contact
        // configuration s = 0, where the rolling map's rotation is trivial
        let l4 = PlaneContext::<f64>::lp(4.0).unwrap();
        let m = hypocycloid_motion(&l4, 3, 0.9, 1.0).unwrap();
        let r1 = m.instantaneous_pole_check(0.0, v(0.1, 0.2), 1e-4).unwrap();
        let r2 = m.instantaneous_pole_check(0.0, v(0.1, 0.2), 1e-5).unwrap();
        assert!(r2 < 1e-4, "residual {r2}");
        assert!(r2 < r1, "no decay: {r1} -> {r2}");
    }

    #[test]
    fn pole_coincidence_detected() {
        let e = PlaneContext::<f64>::euclidean();
        let w = wheel_motion(&e, 1.0, 8.0).unwrap();
        // the rim contact point sits exactly on the pole at s = 0
        assert!(matches!(
            w.instantaneous_pole_check(0.0, v(0.0, 0.0), 1e-7),
            Err(Error::PoleCoincidence)
        ));
    }

    #[test]
    fn mismatched_polodes_rejected() {
        let e = PlaneContext::<f64>::euclidean();
        let c1 = crate::curve::circle(v(0.0, 0.0), 1.0).unwrap();
        let c2 = crate::curve::circle(v(5.0, 0.0), 1.0).unwrap();
        // no common point at the chosen contact parameters
        let r = RollingMotion::new(&e, &c1, &c2, 0.0, 0.0, (-1.0, 1.0));
        assert!(matches!(r, Err(Error::NoCommonContact(_))));
        // touching externally but traversed with opposite tangents
        let c3 = crate::curve::circle(v(2.0, 0.0), 1.0).unwrap();
        let r = RollingMotion::new(&e, &c1, &c3, 0.0, std::f64::consts::PI, (-1.0, 1.0));
        assert!(matches!(r, Err(Error::TangentMismatch(_))));
    }

    #[test]
    fn generic_constructor_matches_preset() {
        let e = PlaneContext::<f64>::euclidean();
        let fixed = crate::curve::circle(v(0.0, 0.0), 1.0).unwrap();
        // homothet about the contact point: the circle of radius 1/3
        // internally tangent at (1, 0)
        let moving = crate::curve::homothet(&fixed, v(1.0, 0.0), 1.0 / 3.0).unwrap();
        let m1 = RollingMotion::new(&e, &fixed, &moving, 0.0, 0.0, (-2.0, 2.0)).unwrap();
        let m2 = hypocycloid_motion(&e, 3, 0.0, 1.0).unwrap();
        for s in [-1.0, 0.3, 1.7] {
            let p1 = m1.transform(s, v(0.5, 0.1)).unwrap();
            let p2 = m2.transform(s, v(0.5, 0.1)).unwrap();
            assert!((p1 - p2).norm_e() < 1e-7, "s {s}: {p1:?} vs {p2:?}");
        }
    }

    #[test]
    fn euclidean_wheel_polodes() {
        // pose of a unit wheel rolling left along the x-axis as phi grows
        let r = 1.0;
        let pose = ParamCurve::new(
            move |phi: f64| v(-r * phi, r),
            (-6.0, 6.0),
        );
        let em = EuclideanMotion::new(pose);
        let (fixed, moving) = euclidean_polodes(&em).unwrap();
        for phi in [-2.0, 0.0, 1.3] {
            let f = fixed.eval(phi);
            assert!(f.y.abs() < 1e-6, "fixed polode off the axis: {f:?}");
            let mv = moving.eval(phi);
            assert!((mv.norm_e() - r).abs() < 1e-6, "moving polode radius: {mv:?}");
        }
    }

    #[test]
    fn rotation_about_origin_has_point_polode() {
        let pose = ParamCurve::new(move |phi: f64| v(phi.cos(), phi.sin()), (0.0, 3.0))
            .with_deriv(move |phi: f64| v(-phi.sin(), phi.cos()));
        let (fixed, _) = euclidean_polodes(&EuclideanMotion::new(pose)).unwrap();
        for phi in [0.2, 1.1, 2.9] {
            assert!(fixed.eval(phi).norm_e() < 1e-9);
        }
        let frozen = ParamCurve::new(move |_phi: f64| v(1.0, 2.0), (0.0, 3.0));
        assert!(matches!(
            euclidean_polodes(&EuclideanMotion::new(frozen)),
            Err(Error::TranslativeMotion)
        ));
    }

    #[test]
    fn roulette_curve_wraps_transform() {
        let e = PlaneContext::<f64>::euclidean();
        let w = wheel_motion(&e, 1.0, 6.0).unwrap();
        let tr = w.roulette(v(0.0, 0.0));
        let p = tr.eval(1.0);
        assert!((p - v(1.0 - 1.0f64.sin(), 1.0 - 1.0f64.cos())).norm_e() < 1e-9);
        // finite-difference velocity points along the cycloid tangent
        let d = tr.deriv(1.0);
        let expect = v(1.0 - 1.0f64.cos(), 1.0f64.sin());
        assert!((d - expect).norm_e() < 1e-5, "{d:?}");
    }
}
