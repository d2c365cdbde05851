//! Parametric curves, arc-length reparametrization in a chosen norm, and
//! starlike curves with radial point lookup.
//!
//! A `ParamCurve` owns its evaluator as a shared closure; analytic
//! derivatives are used when available and finite differences fill in
//! otherwise. Reparametrization builds a cumulative length table plus a
//! monotone interpolant and polishes lookups with bracketed Newton steps.

use crate::error::{Error, Result};
use crate::numerics::{self, MonotoneCubic, NaturalCubic, PeriodicCubic};
use crate::plane::PlaneContext;
use crate::scalar::Real;
use crate::vec2::Vector2;
use std::sync::Arc;

type EvalFn<T> = Arc<dyn Fn(T) -> Vector2<T> + Send + Sync>;

/// Structural information some operations can exploit for exact answers.
pub enum CurveGeometry<T> {
    /// no special structure
    Generic,
    /// the unit circle of a context; parameter is the background angle
    BallBoundary(PlaneContext<T>),
    /// piecewise linear chain through the listed points
    Polyline(Vec<Vector2<T>>),
}

impl<T> Clone for CurveGeometry<T>
where
    Vector2<T>: Copy,
{
    fn clone(&self) -> Self {
        match self {
            CurveGeometry::Generic => CurveGeometry::Generic,
            CurveGeometry::BallBoundary(c) => CurveGeometry::BallBoundary(c.clone()),
            CurveGeometry::Polyline(p) => CurveGeometry::Polyline(p.clone()),
        }
    }
}

/// A parametric curve `t -> R^2` on a closed interval.
pub struct ParamCurve<T> {
    eval: EvalFn<T>,
    deriv: Option<EvalFn<T>>,
    domain: (T, T),
    closed: bool,
    /// relative finite-difference step (fraction of the domain span)
    h_fd: T,
    geometry: CurveGeometry<T>,
}

impl<T> Clone for ParamCurve<T>
where
    T: Copy,
    Vector2<T>: Copy,
{
    fn clone(&self) -> Self {
        ParamCurve {
            eval: Arc::clone(&self.eval),
            deriv: self.deriv.as_ref().map(Arc::clone),
            domain: self.domain,
            closed: self.closed,
            h_fd: self.h_fd,
            geometry: self.geometry.clone(),
        }
    }
}

impl<T: Real> ParamCurve<T> {
    pub fn new(
        eval: impl Fn(T) -> Vector2<T> + Send + Sync + 'static,
        domain: (T, T),
    ) -> Self {
        ParamCurve {
            eval: Arc::new(eval),
            deriv: None,
            domain,
            closed: false,
            h_fd: T::lit(1e-6),
            geometry: CurveGeometry::Generic,
        }
    }

    pub fn with_deriv(
        mut self,
        deriv: impl Fn(T) -> Vector2<T> + Send + Sync + 'static,
    ) -> Self {
        self.deriv = Some(Arc::new(deriv));
        self
    }

    /// Marks the curve closed: the evaluator must be periodic with period
    /// equal to the domain span.
    pub fn closed(mut self) -> Self {
        self.closed = true;
        self
    }

    pub fn with_h_fd(mut self, h_fd: T) -> Self {
        self.h_fd = h_fd;
        self
    }

    pub fn with_geometry(mut self, geometry: CurveGeometry<T>) -> Self {
        self.geometry = geometry;
        self
    }

    pub fn domain(&self) -> (T, T) {
        self.domain
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn geometry(&self) -> &CurveGeometry<T> {
        &self.geometry
    }

    pub fn span(&self) -> T {
        self.domain.1 - self.domain.0
    }

    pub fn eval(&self, t: T) -> Vector2<T> {
        (self.eval)(t)
    }

    /// First derivative: analytic when provided, otherwise central
    /// differences (one-sided second order at open ends).
    pub fn deriv(&self, t: T) -> Vector2<T> {
        if let Some(d) = &self.deriv {
            return d(t);
        }
        let h = self.h_fd * self.span();
        let (a, b) = self.domain;
        if self.closed || (t - h >= a && t + h <= b) {
            (self.eval(t + h) - self.eval(t - h)) / (h + h)
        } else if t - h < a {
            // one-sided, second order
            let f0 = self.eval(t);
            let f1 = self.eval(t + h);
            let f2 = self.eval(t + h + h);
            (f1 * T::lit(4.0) - f2 - f0 * T::lit(3.0)) / (h + h)
        } else {
            let f0 = self.eval(t);
            let f1 = self.eval(t - h);
            let f2 = self.eval(t - h - h);
            (f0 * T::lit(3.0) + f2 - f1 * T::lit(4.0)) / (h + h)
        }
    }

    /// Second derivative, by differencing the first (analytic first
    /// derivatives give near machine-accurate results; otherwise a wider
    /// stencil balances truncation against rounding).
    pub fn second_deriv(&self, t: T) -> Vector2<T> {
        if let Some(d) = &self.deriv {
            let h = self.h_fd * self.span();
            let (a, b) = self.domain;
            if self.closed || (t - h >= a && t + h <= b) {
                (d(t + h) - d(t - h)) / (h + h)
            } else if t - h < a {
                (d(t + h) * T::lit(4.0) - d(t + h + h) - d(t) * T::lit(3.0)) / (h + h)
            } else {
                (d(t) * T::lit(3.0) + d(t - h - h) - d(t - h) * T::lit(4.0)) / (h + h)
            }
        } else {
            let h = T::lit(1e-4) * self.span();
            (self.eval(t + h) - self.eval(t) * T::two() + self.eval(t - h)) / (h * h)
        }
    }

    /// Minkowski-unit tangent at `t`.
    pub fn tangent_direction(&self, ctx: &PlaneContext<T>, t: T) -> Result<Vector2<T>> {
        let d = self.deriv(t);
        let n = ctx.norm(d);
        if n == T::zero() {
            return Err(Error::IrregularCurve(format!("vanishing velocity at t = {t}")));
        }
        Ok(d / n)
    }

    /// Minkowski arc length between parameters `a` and `b` (`a <= b`),
    /// exact for ball boundaries and polylines, adaptive quadrature
    /// otherwise.
    pub fn arc_length(&self, ctx: &PlaneContext<T>, a: T, b: T) -> Result<T> {
        if b < a {
            return Ok(-self.arc_length(ctx, b, a)?);
        }
        match &self.geometry {
            CurveGeometry::BallBoundary(bctx) if same_context(bctx, ctx) => {
                // parameter is the background angle: count whole turns plus
                // the wrapped remainder of cumulative boundary length
                let turns = ((b - a) / T::two_pi()).floor();
                let rem = b - a - turns * T::two_pi();
                let la = ctx.arcpos_of_theta(a);
                let mut lrem = ctx.arcpos_of_theta(a + rem) - la;
                if lrem < T::zero() {
                    lrem = lrem + ctx.circumference();
                }
                Ok(turns * ctx.circumference() + lrem)
            }
            CurveGeometry::Polyline(pts) if pts.len() >= 2 => {
                Ok(polyline_arc_length(pts, ctx, self.domain, self.closed, a, b))
            }
            _ => {
                let f = |t: T| ctx.norm(self.deriv(t));
                let tol = T::lit(1e-12) * (T::one() + (b - a).abs());
                Ok(numerics::integrate(&f, a, b, tol))
            }
        }
    }

    /// Total Minkowski length over the whole domain.
    pub fn total_length(&self, ctx: &PlaneContext<T>) -> Result<T> {
        self.arc_length(ctx, self.domain.0, self.domain.1)
    }

    /// Reparametrizes by Minkowski arc length. The result's parameter is
    /// length from `domain.0`, with domain `[0, total]`. Fails with
    /// `IrregularCurve` when the velocity vanishes somewhere (relative to
    /// the average speed).
    pub fn by_arclen(&self, ctx: &PlaneContext<T>) -> Result<ParamCurve<T>> {
        let map = ArcLenMap::build(self.clone(), ctx.clone(), 2048)?;
        let total = map.total();
        let map = Arc::new(map);
        let m1 = Arc::clone(&map);
        let m2 = Arc::clone(&map);
        let mut out = ParamCurve::new(move |s: T| m1.curve.eval(m1.t_of_s(s)), (T::zero(), total))
            .with_deriv(move |s: T| {
                // chain rule: unit-speed in the Minkowski norm
                let t = m2.t_of_s(s);
                let d = m2.curve.deriv(t);
                d / m2.ctx.norm(d)
            })
            .with_geometry(self.geometry.clone());
        out.closed = self.closed;
        Ok(out)
    }
}

fn same_context<T: Real>(a: &PlaneContext<T>, b: &PlaneContext<T>) -> bool {
    // cheap structural identity: same shared internals
    a.internals_ptr() == b.internals_ptr()
}

fn polyline_arc_length<T: Real>(
    pts: &[Vector2<T>],
    ctx: &PlaneContext<T>,
    domain: (T, T),
    closed: bool,
    a: T,
    b: T,
) -> T {
    // the chain is parametrized uniformly over the domain
    let nseg = if closed { pts.len() } else { pts.len() - 1 };
    let span = domain.1 - domain.0;
    let seg_of = |t: T| -> T {
        (t - domain.0) / span * T::from_usize(nseg).unwrap()
    };
    let (sa, sb) = (seg_of(a), seg_of(b));
    let point_at = |u: T| -> Vector2<T> {
        let mut i = u.floor();
        let mut frac = u - i;
        if !closed && i >= T::from_usize(nseg).unwrap() {
            i = T::from_usize(nseg - 1).unwrap();
            frac = T::one();
        }
        let i = (i.to_isize().unwrap().rem_euclid(nseg as isize)) as usize;
        let p = pts[i];
        let q = pts[(i + 1) % pts.len()];
        p + (q - p) * frac
    };
    let mut acc = T::zero();
    let mut u = sa;
    while u < sb {
        let next = (u.floor() + T::one()).min(sb);
        acc = acc + ctx.norm(point_at(next) - point_at(u));
        u = next;
    }
    acc
}

/// Cumulative arc-length table with monotone inverse lookup.
struct ArcLenMap<T> {
    curve: ParamCurve<T>,
    ctx: PlaneContext<T>,
    ts: Vec<T>,
    ss: Vec<T>,
    inv_guess: MonotoneCubic<T>,
}

impl<T: Real> ArcLenMap<T> {
    fn build(curve: ParamCurve<T>, ctx: PlaneContext<T>, m: usize) -> Result<Self> {
        let (a, b) = curve.domain();
        let span = b - a;
        let mut ts = Vec::with_capacity(m + 1);
        let mut ss = Vec::with_capacity(m + 1);
        let mut acc = T::zero();
        ts.push(a);
        ss.push(acc);
        let speed = |t: T| ctx.norm(curve.deriv(t));
        let mut min_speed = T::infinity();
        for i in 0..m {
            let t0 = a + span * T::from_usize(i).unwrap() / T::from_usize(m).unwrap();
            let t1 = a + span * T::from_usize(i + 1).unwrap() / T::from_usize(m).unwrap();
            min_speed = min_speed.min(speed((t0 + t1) * T::half()));
            acc = acc + numerics::integrate(&speed, t0, t1, T::lit(1e-13));
            ts.push(t1);
            ss.push(acc);
        }
        let avg_speed = acc / span;
        // locate the true speed minimum near the smallest sampled value:
        // grid midpoints alone can step over a cusp
        let mut i_min = 0usize;
        let mut v_min = T::infinity();
        for i in 0..m {
            let tm = (ts[i] + ts[i + 1]) * T::half();
            let s = speed(tm).min(speed(ts[i]));
            if s < v_min {
                v_min = s;
                i_min = i;
            }
        }
        let lo = if i_min == 0 { ts[0] } else { ts[i_min - 1] };
        let hi = if i_min + 2 <= m { ts[i_min + 1] } else { ts[m] };
        let t_min = numerics::golden_min(&speed, lo, hi, span * T::lit(1e-13));
        if !(speed(t_min).min(v_min) > avg_speed * T::lit(1e-6)) {
            return Err(Error::IrregularCurve(
                "velocity vanishes; arc-length reparametrization undefined".into(),
            ));
        }
        let inv_guess = MonotoneCubic::new(ss.clone(), ts.clone());
        Ok(ArcLenMap { curve, ctx, ts, ss, inv_guess })
    }

    fn total(&self) -> T {
        *self.ss.last().unwrap()
    }

    fn t_of_s(&self, s: T) -> T {
        let total = self.total();
        let (a, b) = self.curve.domain();
        let mut s = s;
        let mut base = T::zero();
        if self.curve.is_closed() {
            let w = s % total;
            let w = if w < T::zero() { w + total } else { w };
            base = (s - w) / total; // whole turns, signed
            s = w;
        } else if s < T::zero() {
            // linear extension below the start
            let sp = self.ctx.norm(self.curve.deriv(a));
            return a + s / sp;
        } else if s > total {
            let sp = self.ctx.norm(self.curve.deriv(b));
            return b + (s - total) / sp;
        }
        let i = numerics::bracket_index(&self.ss, s);
        let (t0, t1) = (self.ts[i], self.ts[i + 1]);
        let s0 = self.ss[i];
        let guess = self.inv_guess.eval(s).max(t0).min(t1);
        let speed = |t: T| self.ctx.norm(self.curve.deriv(t));
        let f = |t: T| s0 + numerics::integrate(&speed, t0, t, T::lit(1e-14)) - s;
        let t = numerics::newton_bracketed(f, speed, t0, t1, guess, T::lit(1e-14) * (T::one() + total));
        t + base * (b - a)
    }
}

// ------------------------------------------------------------------ builtins

/// Conic in polar form about a focus at the origin:
/// `r(theta) = p / (1 + eps cos(theta))` with `0 <= eps < 1`.
pub fn heliocentric_ellipse<T: Real>(p: T, eps: T) -> Result<ParamCurve<T>> {
    if !(p > T::zero()) || !(eps >= T::zero() && eps < T::one()) {
        return Err(Error::BadParams(format!(
            "ellipse needs p > 0 and 0 <= eps < 1, got p = {p}, eps = {eps}"
        )));
    }
    let r = move |th: T| p / (T::one() + eps * th.cos());
    let eval = move |th: T| Vector2::from_polar_e(r(th), th);
    let deriv = move |th: T| {
        let rr = r(th);
        let dr = p * eps * th.sin() / (T::one() + eps * th.cos()).powi(2);
        let u = Vector2::from_polar_e(T::one(), th);
        u * dr + u.perp() * rr
    };
    Ok(ParamCurve::new(eval, (T::zero(), T::two_pi()))
        .with_deriv(deriv)
        .closed())
}

/// Two-cusped epicycloid traced by a circle of radius 1 rolling outside a
/// circle of radius 2, scaled to span `[-2, 2]`:
/// `((-3 cos t + cos 3t) / 2, (-3 sin t + sin 3t) / 2)`.
/// Euclidean speed is `3 |sin t|`; cusps at `t = 0` and `t = pi`.
pub fn nephroid<T: Real>() -> ParamCurve<T> {
    let half = T::half();
    let three = T::lit(3.0);
    let eval = move |t: T| {
        Vector2::new(
            (-three * t.cos() + (three * t).cos()) * half,
            (-three * t.sin() + (three * t).sin()) * half,
        )
    };
    let deriv = move |t: T| {
        Vector2::new(
            (three * t.sin() - three * (three * t).sin()) * half,
            (-three * t.cos() + three * (three * t).cos()) * half,
        )
    };
    ParamCurve::new(eval, (T::zero(), T::two_pi()))
        .with_deriv(deriv)
        .closed()
}

/// Euclidean circle, parametrized by angle.
pub fn circle<T: Real>(center: Vector2<T>, radius: T) -> Result<ParamCurve<T>> {
    if !(radius > T::zero()) {
        return Err(Error::BadParams(format!("circle radius must be positive, got {radius}")));
    }
    let eval = move |t: T| center + Vector2::from_polar_e(radius, t);
    let deriv = move |t: T| Vector2::from_polar_e(radius, t).perp();
    Ok(ParamCurve::new(eval, (T::zero(), T::two_pi()))
        .with_deriv(deriv)
        .closed())
}

/// The unit circle of a context, parametrized by the background angle.
pub fn unit_circle<T: Real>(ctx: &PlaneContext<T>) -> ParamCurve<T> {
    let c1 = ctx.clone();
    let c2 = ctx.clone();
    ParamCurve::new(move |th: T| c1.boundary_point(th), (T::zero(), T::two_pi()))
        .with_deriv(move |th: T| c2.boundary_deriv_theta(th))
        .closed()
        .with_geometry(CurveGeometry::BallBoundary(ctx.clone()))
}

/// Homothety of a curve about `center` with the given nonzero `ratio`.
pub fn homothet<T: Real>(
    base: &ParamCurve<T>,
    center: Vector2<T>,
    ratio: T,
) -> Result<ParamCurve<T>> {
    if ratio == T::zero() || !ratio.is_finite() {
        return Err(Error::BadParams("homothety ratio must be nonzero and finite".into()));
    }
    let b1 = base.clone();
    let b2 = base.clone();
    let geometry = match base.geometry() {
        CurveGeometry::Polyline(pts) => {
            CurveGeometry::Polyline(pts.iter().map(|&p| center + (p - center) * ratio).collect())
        }
        _ => CurveGeometry::Generic,
    };
    let mut out = ParamCurve::new(
        move |t: T| center + (b1.eval(t) - center) * ratio,
        base.domain(),
    )
    .with_geometry(geometry);
    out.deriv = Some(Arc::new(move |t: T| b2.deriv(t) * ratio));
    out.closed = base.is_closed();
    Ok(out)
}

/// The piecewise linear chain through `points`, parametrized uniformly per
/// segment over `[0, 1]`. Length queries use the exact chain.
pub fn polyline<T: Real>(points: Vec<Vector2<T>>, closed: bool) -> Result<ParamCurve<T>> {
    let n = points.len();
    if n < if closed { 3 } else { 2 } {
        return Err(Error::BadParams(format!("too few polyline points: {n}")));
    }
    let nseg = if closed { n } else { n - 1 };
    let pts = points.clone();
    let eval = move |t: T| -> Vector2<T> {
        let mut u = t * T::from_usize(nseg).unwrap();
        if closed {
            let nn = T::from_usize(nseg).unwrap();
            u = u % nn;
            if u < T::zero() {
                u = u + nn;
            }
        } else {
            u = u.max(T::zero()).min(T::from_usize(nseg).unwrap());
        }
        let mut i = u.floor();
        let mut frac = u - i;
        if !closed && i >= T::from_usize(nseg).unwrap() {
            i = T::from_usize(nseg - 1).unwrap();
            frac = T::one();
        }
        let i = (i.to_isize().unwrap().rem_euclid(nseg as isize)) as usize;
        let p = pts[i];
        let q = pts[(i + 1) % pts.len()];
        p + (q - p) * frac
    };
    let mut out = ParamCurve::new(eval, (T::zero(), T::one()))
        .with_geometry(CurveGeometry::Polyline(points));
    out.closed = closed;
    Ok(out)
}

/// Smooth interpolant through sample points: periodic cubic for closed
/// chains, natural cubic for open ones, over a chord-length parameter
/// rescaled to `[0, 1]`. The spline is the curve, so lengths come from
/// quadrature, not from the sample chain.
pub fn from_samples<T: Real>(points: Vec<Vector2<T>>, closed: bool) -> Result<ParamCurve<T>> {
    let n = points.len();
    if n < if closed { 3 } else { 2 } {
        return Err(Error::BadParams(format!("too few sample points: {n}")));
    }
    // chord-length knots
    let mut knots = Vec::with_capacity(n + 1);
    let mut acc = T::zero();
    knots.push(acc);
    for i in 1..n {
        acc = acc + (points[i] - points[i - 1]).norm_e();
        knots.push(acc);
    }
    if closed {
        acc = acc + (points[0] - points[n - 1]).norm_e();
    }
    let total = acc;
    if !(total > T::zero()) {
        return Err(Error::BadParams("degenerate sample chain".into()));
    }
    let us: Vec<T> = knots.iter().map(|&k| k / total).collect();

    let geometry = CurveGeometry::Generic;
    if closed {
        let xs = PeriodicCubic::new(us.clone(), points.iter().map(|p| p.x).collect(), T::one());
        let ys = PeriodicCubic::new(us, points.iter().map(|p| p.y).collect(), T::one());
        let xs = Arc::new(xs);
        let ys = Arc::new(ys);
        let (x1, y1) = (Arc::clone(&xs), Arc::clone(&ys));
        Ok(ParamCurve::new(
            move |t: T| Vector2::new(xs.eval(t), ys.eval(t)),
            (T::zero(), T::one()),
        )
        .with_deriv(move |t: T| Vector2::new(x1.deriv(t), y1.deriv(t)))
        .closed()
        .with_geometry(geometry))
    } else {
        let xs = NaturalCubic::new(us.clone(), points.iter().map(|p| p.x).collect());
        let ys = NaturalCubic::new(us, points.iter().map(|p| p.y).collect());
        let xs = Arc::new(xs);
        let ys = Arc::new(ys);
        let (x1, y1) = (Arc::clone(&xs), Arc::clone(&ys));
        Ok(ParamCurve::new(
            move |t: T| Vector2::new(xs.eval(t), ys.eval(t)),
            (T::zero(), T::one()),
        )
        .with_deriv(move |t: T| Vector2::new(x1.deriv(t), y1.deriv(t)))
        .with_geometry(geometry))
    }
}

// ------------------------------------------------------------------ starlike

/// A closed curve that is starlike about a center: every ray from the center
/// meets it exactly once. Construction verifies the monotone-winding
/// certificate on a dense sample.
pub struct StarlikeCurve<T> {
    curve: ParamCurve<T>,
    center: Vector2<T>,
    /// unwrapped polar angle at sample parameters, strictly increasing
    sample_t: Vec<T>,
    sample_ang: Vec<T>,
}

impl<T: Real> StarlikeCurve<T> {
    pub fn new(curve: ParamCurve<T>, center: Vector2<T>) -> Result<Self> {
        if !curve.is_closed() {
            return Err(Error::IrregularCurve("starlike curves must be closed".into()));
        }
        let n = 4096usize;
        let (a, b) = curve.domain();
        let span = b - a;
        let mut sample_t = Vec::with_capacity(n + 1);
        let mut sample_ang = Vec::with_capacity(n + 1);
        let mut prev = T::zero();
        for k in 0..=n {
            let t = a + span * T::from_usize(k).unwrap() / T::from_usize(n).unwrap();
            let d = curve.eval(t) - center;
            if d.norm_e() == T::zero() {
                return Err(Error::IrregularCurve("curve passes through the center".into()));
            }
            let mut ang = d.angle();
            if k == 0 {
                prev = ang;
            } else {
                while ang <= prev - T::pi() {
                    ang = ang + T::two_pi();
                }
                while ang > prev + T::pi() {
                    ang = ang - T::two_pi();
                }
                if ang <= prev {
                    return Err(Error::IrregularCurve(format!(
                        "winding is not strictly monotone near t = {t}"
                    )));
                }
                prev = ang;
            }
            sample_t.push(t);
            sample_ang.push(ang);
        }
        let turn = sample_ang[n] - sample_ang[0];
        if (turn - T::two_pi()).abs() > T::lit(1e-6) {
            return Err(Error::IrregularCurve(format!(
                "total winding about the center is {turn}, expected one turn"
            )));
        }
        Ok(StarlikeCurve { curve, center, sample_t, sample_ang })
    }

    pub fn center(&self) -> Vector2<T> {
        self.center
    }

    pub fn curve(&self) -> &ParamCurve<T> {
        &self.curve
    }

    /// The unique point of the curve on the ray from the center with the
    /// given direction.
    pub fn radial_point(&self, dir: Vector2<T>) -> Result<Vector2<T>> {
        Ok(self.curve.eval(self.radial_param(dir)?))
    }

    /// Parameter of the radial point in the given direction.
    pub fn radial_param(&self, dir: Vector2<T>) -> Result<T> {
        if dir.norm_e() == T::zero() {
            return Err(Error::ZeroVector);
        }
        // lift the target angle into the unwrapped sample range
        let mut target = dir.angle();
        let lo = self.sample_ang[0];
        while target < lo {
            target = target + T::two_pi();
        }
        while target >= lo + T::two_pi() {
            target = target - T::two_pi();
        }
        let i = numerics::bracket_index(&self.sample_ang, target);
        let (t0, t1) = (self.sample_t[i], self.sample_t[i + 1]);
        let c = self.center;
        let f = {
            let curve = &self.curve;
            move |t: T| {
                let d = curve.eval(t) - c;
                let mut ang = d.angle();
                // compare angles near the bracket's range
                while ang < target - T::pi() {
                    ang = ang + T::two_pi();
                }
                while ang > target + T::pi() {
                    ang = ang - T::two_pi();
                }
                ang - target
            }
        };
        Ok(numerics::bisect(&f, t0, t1, T::lit(1e-14) * (T::one() + t1.abs())))
    }
}
