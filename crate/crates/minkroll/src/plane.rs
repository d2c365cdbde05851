//! The normed plane: unit-ball families, norm and semi-inner product,
//! Birkhoff orthogonality, the tangent operator `Q`, sigma ratios, and an
//! arc-length parametrization of the unit circle.
//!
//! A `PlaneContext` is immutable and cheap to clone (shared internals); all
//! operations are pure. The unit circle is exposed both through analytic
//! per-kind evaluators and through a cumulative arc-length table; analytic
//! evaluators always take precedence, the table only brackets searches.
//!
//! Orientation convention: the boundary parameter `theta` is the background
//! polar angle, traversed counterclockwise; `arcpos` measures Minkowski
//! length along the boundary from `theta = 0`.

use crate::error::{Error, Result};
use crate::numerics::{self, PeriodicCubic};
use crate::scalar::Real;
use crate::vec2::Vector2;
use std::sync::Arc;

/// Default number of boundary table nodes.
pub const DEFAULT_RESOLUTION: usize = 4096;

/// How the unit ball is described.
pub enum BallKind<T> {
    /// Round ball of the background inner product.
    Euclidean,
    /// `lp` ball, exponent strictly between 1 and infinity.
    Lp(T),
    /// Centrally symmetric convex polygon, vertices counterclockwise.
    Polygon(Vec<Vector2<T>>),
    /// Smooth radial profile `r(theta)` interpolated periodically from
    /// `(theta, r)` samples.
    Radial(Vec<(T, T)>),
}

struct PolygonData<T> {
    verts: Vec<Vector2<T>>,
    /// outward normals and support offsets: gauge(v) = max_i n_i.v / c_i
    normals: Vec<Vector2<T>>,
    offsets: Vec<T>,
    /// background angle of each vertex, strictly increasing, starting in [0, 2pi)
    vert_angles: Vec<T>,
    /// cumulative Minkowski perimeter at each vertex (self-norm edge lengths)
    cum: Vec<T>,
    total: T,
}

enum Shape<T> {
    Euclidean,
    Lp(T),
    Polygon(PolygonData<T>),
    Radial(PeriodicCubic<T>),
}

struct Inner<T> {
    shape: Shape<T>,
    /// unit ball = scale * base ball; norm(v) = base_gauge(v) / scale
    scale: T,
    resolution: usize,
    /// boundary table for smooth kinds: angles and cumulative Minkowski
    /// arc length (scale-invariant); empty for polygons (exact path instead)
    table_theta: Vec<T>,
    table_len: Vec<T>,
    circumference: T,
    area_e: T,
    smooth: bool,
    strictly_convex: bool,
}

/// A two-dimensional normed plane.
pub struct PlaneContext<T> {
    inner: Arc<Inner<T>>,
}

impl<T> Clone for PlaneContext<T> {
    fn clone(&self) -> Self {
        PlaneContext { inner: Arc::clone(&self.inner) }
    }
}

impl<T: Real> PlaneContext<T> {
    pub fn euclidean() -> Self {
        Self::build(BallKind::Euclidean, DEFAULT_RESOLUTION).expect("euclidean ball")
    }

    /// `lp` ball with `1 < p < infinity`. Use [`PlaneContext::l1`] or
    /// [`PlaneContext::linf`] for the polygonal end points.
    pub fn lp(p: T) -> Result<Self> {
        if !(p > T::one()) || !p.is_finite() {
            return Err(Error::BadParams(format!(
                "lp exponent must satisfy 1 < p < inf, got {p}"
            )));
        }
        Self::build(BallKind::Lp(p), DEFAULT_RESOLUTION)
    }

    /// The l1 ball (diamond), as a polygon context.
    pub fn l1() -> Self {
        let v = |x: f64, y: f64| Vector2::new(T::lit(x), T::lit(y));
        Self::polygon(vec![v(1.0, 0.0), v(0.0, 1.0), v(-1.0, 0.0), v(0.0, -1.0)])
            .expect("l1 ball")
    }

    /// The sup-norm ball (square), as a polygon context.
    pub fn linf() -> Self {
        let v = |x: f64, y: f64| Vector2::new(T::lit(x), T::lit(y));
        Self::polygon(vec![v(1.0, -1.0), v(1.0, 1.0), v(-1.0, 1.0), v(-1.0, -1.0)])
            .expect("linf ball")
    }

    /// Polygon ball. Vertices must wind counterclockwise, be origin-symmetric
    /// and strictly convex, with the origin inside.
    pub fn polygon(verts: Vec<Vector2<T>>) -> Result<Self> {
        Self::build(BallKind::Polygon(verts), DEFAULT_RESOLUTION)
    }

    /// Polygon ball from vertices that may cover only half a turn; the
    /// antipodal half is completed automatically, duplicates are merged and
    /// the result is sorted counterclockwise.
    pub fn polygon_completing(verts: Vec<Vector2<T>>) -> Result<Self> {
        if verts.is_empty() {
            return Err(Error::BadParams("empty vertex list".into()));
        }
        let diam = verts.iter().map(|v| v.norm_e()).fold(T::zero(), T::max);
        let tol = diam * T::lit(1e-9);
        let mut all: Vec<Vector2<T>> = Vec::with_capacity(verts.len() * 2);
        for &v in &verts {
            for cand in [v, -v] {
                if !all.iter().any(|w| (*w - cand).norm_e() <= tol) {
                    all.push(cand);
                }
            }
        }
        all.sort_by(|a, b| {
            wrap_angle(a.angle()).partial_cmp(&wrap_angle(b.angle())).unwrap()
        });
        Self::polygon(all)
    }

    /// Smooth ball from `(theta, r)` samples of the radial profile,
    /// interpolated by a periodic cubic spline.
    pub fn radial(samples: Vec<(T, T)>) -> Result<Self> {
        Self::build(BallKind::Radial(samples), DEFAULT_RESOLUTION)
    }

    /// Radial ball completing antipodal samples when only half a turn is
    /// given; duplicate angles (mod 2 pi) are merged.
    pub fn radial_completing(samples: Vec<(T, T)>) -> Result<Self> {
        let mut all: Vec<(T, T)> = Vec::with_capacity(samples.len() * 2);
        let tol = T::lit(1e-9);
        for &(a, r) in &samples {
            for cand in [(wrap_angle(a), r), (wrap_angle(a + T::pi()), r)] {
                if !all.iter().any(|&(b, _)| {
                    let d = (b - cand.0).abs();
                    d <= tol || (T::two_pi() - d) <= tol
                }) {
                    all.push(cand);
                }
            }
        }
        Self::radial(all)
    }

    pub fn with_resolution(kind: BallKind<T>, resolution: usize) -> Result<Self> {
        Self::build(kind, resolution.max(16))
    }

    /// Same ball geometry scaled by `factor` (> 0): the unit ball becomes
    /// `factor` times larger, the norm `factor` times smaller.
    pub fn rescaled(&self, factor: T) -> Result<Self> {
        if !(factor > T::zero()) || !factor.is_finite() {
            return Err(Error::BadParams(format!("scale factor must be positive, got {factor}")));
        }
        let i = &self.inner;
        let shape = match &i.shape {
            Shape::Euclidean => Shape::Euclidean,
            Shape::Lp(p) => Shape::Lp(*p),
            Shape::Polygon(p) => Shape::Polygon(PolygonData {
                verts: p.verts.clone(),
                normals: p.normals.clone(),
                offsets: p.offsets.clone(),
                vert_angles: p.vert_angles.clone(),
                cum: p.cum.clone(),
                total: p.total,
            }),
            Shape::Radial(_) => {
                // rebuild: the spline is not cloneable piecemeal
                return match &i.shape {
                    Shape::Radial(sp) => {
                        let n = i.resolution.min(512);
                        let samples: Vec<(T, T)> = (0..n)
                            .map(|k| {
                                let th = T::two_pi() * T::from_usize(k).unwrap()
                                    / T::from_usize(n).unwrap();
                                (th, sp.eval(th))
                            })
                            .collect();
                        let mut ctx = Self::with_resolution(BallKind::Radial(samples), i.resolution)?;
                        // rebuilt at scale 1: apply the combined scale
                        let s = i.scale * factor;
                        let a = Arc::get_mut(&mut ctx.inner).unwrap();
                        a.scale = s;
                        a.area_e = a.area_e * s * s;
                        Ok(ctx)
                    }
                    _ => unreachable!(),
                };
            }
        };
        let scale = i.scale * factor;
        Ok(PlaneContext {
            inner: Arc::new(Inner {
                shape,
                scale,
                resolution: i.resolution,
                table_theta: i.table_theta.clone(),
                table_len: i.table_len.clone(),
                circumference: i.circumference,
                area_e: i.area_e / (i.scale * i.scale) * (scale * scale),
                smooth: i.smooth,
                strictly_convex: i.strictly_convex,
            }),
        })
    }

    fn build(kind: BallKind<T>, resolution: usize) -> Result<Self> {
        let shape = match kind {
            BallKind::Euclidean => Shape::Euclidean,
            BallKind::Lp(p) => {
                if !(p > T::one()) || !p.is_finite() {
                    return Err(Error::BadParams(format!("lp exponent {p}")));
                }
                Shape::Lp(p)
            }
            BallKind::Polygon(verts) => Shape::Polygon(Self::build_polygon(verts)?),
            BallKind::Radial(samples) => Shape::Radial(Self::build_radial(samples)?),
        };

        let smooth = !matches!(shape, Shape::Polygon(_));
        let strictly_convex = match &shape {
            Shape::Euclidean | Shape::Lp(_) => true,
            Shape::Polygon(_) => false,
            Shape::Radial(sp) => radial_strictly_convex(sp),
        };

        // Euclidean area of the base ball
        let area_e = match &shape {
            Shape::Euclidean => T::pi(),
            Shape::Lp(p) => {
                let p = *p;
                let f = move |th: T| {
                    let r = lp_radius(p, th);
                    r * r
                };
                T::two() * numerics::integrate(&f, T::zero(), T::half() * T::pi(), T::lit(1e-13))
            }
            Shape::Polygon(pd) => {
                let mut s = T::zero();
                let n = pd.verts.len();
                for i in 0..n {
                    s = s + pd.verts[i].cross(pd.verts[(i + 1) % n]);
                }
                s * T::half()
            }
            Shape::Radial(sp) => {
                let f = |th: T| {
                    let r = sp.eval(th);
                    r * r
                };
                T::half() * numerics::integrate(&f, T::zero(), T::two_pi(), T::lit(1e-13))
            }
        };

        // boundary table (smooth kinds) and circumference
        let (table_theta, table_len, circumference) = match &shape {
            Shape::Polygon(pd) => (Vec::new(), Vec::new(), pd.total),
            _ => {
                let n = resolution;
                let mut thetas = Vec::with_capacity(n + 1);
                let mut lens = Vec::with_capacity(n + 1);
                let mut acc = T::zero();
                lens.push(acc);
                thetas.push(T::zero());
                for i in 0..n {
                    let a = T::two_pi() * T::from_usize(i).unwrap() / T::from_usize(n).unwrap();
                    let b =
                        T::two_pi() * T::from_usize(i + 1).unwrap() / T::from_usize(n).unwrap();
                    let f = |th: T| boundary_speed_raw(&shape, th);
                    acc = acc + numerics::integrate(&f, a, b, T::lit(1e-15));
                    thetas.push(b);
                    lens.push(acc);
                }
                (thetas, lens, acc)
            }
        };

        Ok(PlaneContext {
            inner: Arc::new(Inner {
                shape,
                scale: T::one(),
                resolution,
                table_theta,
                table_len,
                circumference,
                area_e,
                smooth,
                strictly_convex,
            }),
        })
    }

    fn build_polygon(mut verts: Vec<Vector2<T>>) -> Result<PolygonData<T>> {
        let n = verts.len();
        if n < 4 || n % 2 != 0 {
            return Err(Error::BadParams(format!(
                "polygon ball needs an even vertex count >= 4, got {n}"
            )));
        }
        // normalize to counterclockwise winding
        let mut shoelace = T::zero();
        for i in 0..n {
            shoelace = shoelace + verts[i].cross(verts[(i + 1) % n]);
        }
        if shoelace < T::zero() {
            verts.reverse();
        } else if shoelace == T::zero() {
            return Err(Error::BadParams("degenerate polygon".into()));
        }
        // origin symmetry: the vertex set must contain every antipode
        let diam = verts.iter().map(|v| v.norm_e()).fold(T::zero(), T::max);
        let tol = diam * T::lit(1e-9);
        for v in &verts {
            if !verts.iter().any(|w| (*w + *v).norm_e() <= tol) {
                return Err(Error::BadParams(format!(
                    "polygon ball is not origin-symmetric near ({}, {})",
                    v.x, v.y
                )));
            }
        }
        // strict convexity and origin inside
        for i in 0..n {
            let a = verts[i];
            let b = verts[(i + 1) % n];
            let c = verts[(i + 2) % n];
            if (b - a).cross(c - b) <= tol * tol {
                return Err(Error::BadParams("polygon ball is not strictly convex".into()));
            }
            if a.cross(b) <= T::zero() {
                return Err(Error::BadParams("origin not inside the polygon ball".into()));
            }
        }
        // rotate the list so vertex angles start at the smallest angle in [0, 2pi)
        let start = (0..n)
            .min_by(|&i, &j| {
                let ai = wrap_angle(verts[i].angle());
                let aj = wrap_angle(verts[j].angle());
                ai.partial_cmp(&aj).unwrap()
            })
            .unwrap();
        verts.rotate_left(start);

        let mut normals = Vec::with_capacity(n);
        let mut offsets = Vec::with_capacity(n);
        for i in 0..n {
            let a = verts[i];
            let b = verts[(i + 1) % n];
            let e = b - a;
            let nrm = Vector2::new(e.y, -e.x); // outward for ccw winding
            normals.push(nrm);
            offsets.push(nrm.dot(a));
        }
        let mut vert_angles = Vec::with_capacity(n);
        let mut prev = T::neg_infinity();
        for v in &verts {
            let mut a = wrap_angle(v.angle());
            while a <= prev {
                a = a + T::two_pi();
            }
            prev = a;
            vert_angles.push(a);
        }
        // edge lengths in the polygon's own norm
        let gauge = |v: Vector2<T>| -> T {
            let mut best = T::neg_infinity();
            for i in 0..n {
                let q = normals[i].dot(v) / offsets[i];
                if q > best {
                    best = q;
                }
            }
            best
        };
        let mut cum = Vec::with_capacity(n + 1);
        let mut acc = T::zero();
        cum.push(acc);
        for i in 0..n {
            let e = verts[(i + 1) % n] - verts[i];
            acc = acc + gauge(e);
            cum.push(acc);
        }
        Ok(PolygonData { verts, normals, offsets, vert_angles, cum, total: acc })
    }

    fn build_radial(samples: Vec<(T, T)>) -> Result<PeriodicCubic<T>> {
        if samples.len() < 6 {
            return Err(Error::BadParams("radial ball needs at least 6 samples".into()));
        }
        let mut s: Vec<(T, T)> = samples
            .into_iter()
            .map(|(a, r)| (wrap_angle(a), r))
            .collect();
        s.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
        for w in s.windows(2) {
            if w[1].0 - w[0].0 <= T::lit(1e-12) {
                return Err(Error::BadParams("duplicate radial sample angle".into()));
            }
        }
        for &(_, r) in &s {
            if !(r > T::zero()) || !r.is_finite() {
                return Err(Error::BadParams("radial sample radius must be positive".into()));
            }
        }
        // central symmetry: r(theta) = r(theta + pi) on the sample set
        let maxr = s.iter().map(|p| p.1).fold(T::zero(), T::max);
        let sp = PeriodicCubic::new(
            s.iter().map(|p| p.0).collect(),
            s.iter().map(|p| p.1).collect(),
            T::two_pi(),
        );
        for &(a, r) in &s {
            let anti = sp.eval(a + T::pi());
            if (anti - r).abs() > maxr * T::lit(1e-6) {
                return Err(Error::BadParams(format!(
                    "radial profile is not centrally symmetric at theta = {a}"
                )));
            }
        }
        // convexity of the sampled boundary chain
        let m = 1024;
        let pt = |k: usize| -> Vector2<T> {
            let th = T::two_pi() * T::from_usize(k % m).unwrap() / T::from_usize(m).unwrap();
            Vector2::from_polar_e(sp.eval(th), th)
        };
        for k in 0..m {
            let a = pt(k);
            let b = pt(k + 1);
            let c = pt(k + 2);
            if (b - a).cross(c - b) < -maxr * maxr * T::lit(1e-9) {
                return Err(Error::BadParams("radial profile is not convex".into()));
            }
        }
        Ok(sp)
    }

    // ---------------------------------------------------------------- norms

    /// Minkowski norm of `v`.
    pub fn norm(&self, v: Vector2<T>) -> T {
        self.base_gauge(v) / self.inner.scale
    }

    fn base_gauge(&self, v: Vector2<T>) -> T {
        match &self.inner.shape {
            Shape::Euclidean => v.norm_e(),
            Shape::Lp(p) => lp_gauge(*p, v),
            Shape::Polygon(pd) => {
                let mut best = T::neg_infinity();
                for i in 0..pd.normals.len() {
                    let q = pd.normals[i].dot(v) / pd.offsets[i];
                    if q > best {
                        best = q;
                    }
                }
                best.max(T::zero())
            }
            Shape::Radial(sp) => {
                let r = v.norm_e();
                if r == T::zero() {
                    T::zero()
                } else {
                    r / sp.eval(v.angle())
                }
            }
        }
    }

    /// Semi-inner product `[x, y]`: `norm(y)` times the one-sided derivative
    /// of `t -> norm(y + t x)` at `t = 0+`. `[x, y] = 0` encodes Birkhoff
    /// orthogonality of `y` to `x`; `[y, y] = norm(y)^2`; homogeneous in each
    /// slot; `y = 0` gives 0. On polygon balls the derivative is one-sided
    /// (max over active faces).
    pub fn semi_inner(&self, x: Vector2<T>, y: Vector2<T>) -> T {
        if y.x == T::zero() && y.y == T::zero() {
            return T::zero();
        }
        let s2 = self.inner.scale * self.inner.scale;
        match &self.inner.shape {
            Shape::Euclidean => x.dot(y) / s2,
            Shape::Lp(p) => {
                let g = lp_gauge_gradient(*p, y);
                lp_gauge(*p, y) * g.dot(x) / s2
            }
            Shape::Polygon(pd) => {
                // right derivative of a max of linear functionals:
                // max over the active faces
                let gy = self.base_gauge(y);
                let tol = gy * T::lit(1e-12);
                let mut d = T::neg_infinity();
                for i in 0..pd.normals.len() {
                    if (pd.normals[i].dot(y) / pd.offsets[i] - gy).abs() <= tol {
                        let q = pd.normals[i].dot(x) / pd.offsets[i];
                        if q > d {
                            d = q;
                        }
                    }
                }
                gy * d / s2
            }
            Shape::Radial(sp) => {
                let g = radial_gauge_gradient(sp, y);
                self.base_gauge(y) * g.dot(x) / s2
            }
        }
    }

    /// Variational Birkhoff orthogonality test: `x` is Birkhoff orthogonal to
    /// `y` when `norm(x + t y) >= norm(x)` for all `t`. Minimizes by golden
    /// section over a bracketing interval and compares with relative `tol`.
    pub fn is_birkhoff_orthogonal(&self, x: Vector2<T>, y: Vector2<T>, tol: T) -> Result<bool> {
        let nx = self.norm(x);
        if nx == T::zero() {
            return Err(Error::ZeroVector);
        }
        let ny = self.norm(y);
        if ny == T::zero() {
            return Ok(true);
        }
        let span = T::lit(10.0) * nx / ny;
        let f = |t: T| self.norm(x + y * t);
        let tmin = numerics::golden_min(&f, -span, span, span * T::lit(1e-12));
        Ok(f(tmin) >= nx * (T::one() - tol))
    }

    // ------------------------------------------------------------ Q operator

    /// Birkhoff-normal operator: the counterclockwise tangent direction of
    /// the unit circle at `x / norm(x)`, scaled to `norm(Q(x)) = norm(x)`.
    /// Postcondition: `semi_inner(Q(x), x) = 0`.
    pub fn q_normal(&self, x: Vector2<T>) -> Result<Vector2<T>> {
        let n = self.norm(x);
        if n == T::zero() {
            return Err(Error::ZeroVector);
        }
        match &self.inner.shape {
            Shape::Euclidean => Ok(x.perp()),
            Shape::Polygon(pd) => {
                let th = wrap_angle(x.angle());
                let (i, at_vertex) = polygon_edge_of(pd, th);
                if at_vertex {
                    return Err(Error::NonSmoothBoundary(format!(
                        "vertex in direction theta = {th}"
                    )));
                }
                let e = pd.verts[(i + 1) % pd.verts.len()] - pd.verts[i];
                let ne = self.norm(e);
                Ok(e * (n / ne))
            }
            _ => {
                let t = self.boundary_deriv_theta(x.angle());
                let nt = self.norm(t);
                Ok(t * (n / nt))
            }
        }
    }

    /// Inverse of [`PlaneContext::q_normal`]: the vector `y` with
    /// `norm(y) = norm(x)` whose tangent `Q(y)` is a positive multiple of `x`.
    pub fn q_inverse(&self, x: Vector2<T>) -> Result<Vector2<T>> {
        let n = self.norm(x);
        if n == T::zero() {
            return Err(Error::ZeroVector);
        }
        match &self.inner.shape {
            Shape::Euclidean => Ok(-x.perp()),
            Shape::Polygon(_) => Err(Error::NonSmoothBoundary(
                "tangent inversion needs a smooth unit circle".into(),
            )),
            Shape::Lp(p) => {
                // support point of the outward normal -x.perp(), in closed
                // form through the dual exponent: exact even where the
                // boundary curvature vanishes and a root search would be
                // ill-conditioned
                let p = *p;
                let q = p / (p - T::one());
                let nrm = -x.perp();
                let m = nrm.x.abs().max(nrm.y.abs());
                let sgn = |z: T| if z >= T::zero() { T::one() } else { -T::one() };
                let y0 = Vector2::new(
                    sgn(nrm.x) * (nrm.x.abs() / m).powf(q - T::one()),
                    sgn(nrm.y) * (nrm.y.abs() / m).powf(q - T::one()),
                );
                let unit = y0 * (self.inner.scale / lp_gauge(p, y0));
                Ok(unit * n)
            }
            _ => {
                // the tangent turns monotonically: locate the boundary angle
                // whose tangent is a positive multiple of x
                let cross = |th: T| self.boundary_deriv_theta(th).cross(x);
                let dotx = |th: T| self.boundary_deriv_theta(th).dot(x);
                let m = 256usize;
                let step = T::two_pi() / T::from_usize(m).unwrap();
                let mut found = None;
                let mut prev_th = T::zero();
                let mut prev_c = cross(prev_th);
                for k in 1..=m {
                    let th = step * T::from_usize(k).unwrap();
                    let c = cross(th);
                    if (prev_c <= T::zero()) != (c <= T::zero())
                        && dotx((prev_th + th) * T::half()) > T::zero()
                    {
                        found = Some((prev_th, th));
                        break;
                    }
                    prev_th = th;
                    prev_c = c;
                }
                let (a, b) = found.ok_or(Error::NonSmoothBoundary(
                    "tangent direction not attained".into(),
                ))?;
                let th = numerics::bisect(&cross, a, b, T::lit(1e-15));
                Ok(self.boundary_point(th) * n)
            }
        }
    }

    // ------------------------------------------------------------- sigma/area

    /// `sigma` of the line through the origin with the given direction: the
    /// Minkowski norm of the Euclidean unit vector along it.
    pub fn sigma_line(&self, d: Vector2<T>) -> Result<T> {
        let e = d.norm_e();
        if e == T::zero() {
            return Err(Error::ZeroVector);
        }
        Ok(self.norm(d) / e)
    }

    /// `sigma` of the plane: `pi` over the Euclidean area of the unit ball.
    pub fn sigma_plane(&self) -> T {
        T::pi() / self.inner.area_e
    }

    /// Euclidean area of the unit ball.
    pub fn area_e(&self) -> T {
        self.inner.area_e
    }

    /// Minkowski length of the unit circle measured in its own norm.
    /// Always lies in `[6, 8]`.
    pub fn circumference(&self) -> T {
        self.inner.circumference
    }

    pub fn is_smooth(&self) -> bool {
        self.inner.smooth
    }

    pub fn is_strictly_convex(&self) -> bool {
        self.inner.strictly_convex
    }

    /// Ball scale relative to the base description (1 unless rescaled).
    pub fn scale(&self) -> T {
        self.inner.scale
    }

    /// Identity of the shared internals, for cheap same-context checks.
    pub(crate) fn internals_ptr(&self) -> *const u8 {
        Arc::as_ptr(&self.inner) as *const u8
    }

    /// Polygon vertices (scaled), when the ball is polygonal.
    pub fn polygon_vertices(&self) -> Option<Vec<Vector2<T>>> {
        match &self.inner.shape {
            Shape::Polygon(pd) => {
                Some(pd.verts.iter().map(|&v| v * self.inner.scale).collect())
            }
            _ => None,
        }
    }

    // ------------------------------------------------- boundary parametrization

    /// Point of the unit circle in background direction `theta`.
    pub fn boundary_point(&self, theta: T) -> Vector2<T> {
        let r = match &self.inner.shape {
            Shape::Euclidean => T::one(),
            Shape::Lp(p) => lp_radius(*p, theta),
            Shape::Polygon(pd) => {
                let th = wrap_angle(theta);
                let (i, _) = polygon_edge_of(pd, th);
                let u = Vector2::from_polar_e(T::one(), th);
                pd.offsets[i] / pd.normals[i].dot(u)
            }
            Shape::Radial(sp) => sp.eval(theta),
        };
        Vector2::from_polar_e(r * self.inner.scale, theta)
    }

    /// `d/dtheta` of [`PlaneContext::boundary_point`]. For polygon balls this
    /// is the one-sided edge derivative; exactly at a vertex it belongs to
    /// the edge starting there.
    pub fn boundary_deriv_theta(&self, theta: T) -> Vector2<T> {
        let u = Vector2::from_polar_e(T::one(), theta);
        let up = u.perp();
        let (r, dr) = match &self.inner.shape {
            Shape::Euclidean => (T::one(), T::zero()),
            Shape::Lp(p) => (lp_radius(*p, theta), lp_radius_deriv(*p, theta)),
            Shape::Polygon(pd) => {
                let th = wrap_angle(theta);
                let (i, _) = polygon_edge_of(pd, th);
                let nu = pd.normals[i].dot(u);
                let r = pd.offsets[i] / nu;
                let dr = -pd.offsets[i] * pd.normals[i].dot(up) / (nu * nu);
                (r, dr)
            }
            Shape::Radial(sp) => (sp.eval(theta), sp.deriv(theta)),
        };
        (u * dr + up * r) * self.inner.scale
    }

    /// Minkowski speed of the boundary parametrization at `theta`
    /// (scale-invariant).
    pub fn boundary_speed(&self, theta: T) -> T {
        self.norm(self.boundary_deriv_theta(theta))
    }

    /// Cumulative Minkowski arc length of the unit circle at the given
    /// background angle, in `[0, circumference)`, measured from a fixed
    /// reference point (`theta = 0` for smooth balls, the first vertex for
    /// polygons). Consistent with [`PlaneContext::theta_of_arcpos`] and
    /// [`PlaneContext::point_at_arclen`]; use differences for arc lengths.
    pub fn arcpos_of_theta(&self, theta: T) -> T {
        let th = wrap_angle(theta);
        match &self.inner.shape {
            Shape::Euclidean => th,
            Shape::Polygon(pd) => {
                let (i, _) = polygon_edge_of(pd, th);
                let u = Vector2::from_polar_e(T::one(), th);
                let b = u * (pd.offsets[i] / pd.normals[i].dot(u));
                pd.cum[i] + self.polygon_base_norm(pd, b - pd.verts[i])
            }
            _ => {
                let i = numerics::bracket_index(&self.inner.table_theta, th);
                let a = self.inner.table_theta[i];
                let f = |t: T| boundary_speed_raw(&self.inner.shape, t);
                self.inner.table_len[i] + numerics::integrate(&f, a, th, T::lit(1e-14))
            }
        }
    }

    fn polygon_base_norm(&self, pd: &PolygonData<T>, v: Vector2<T>) -> T {
        let mut best = T::neg_infinity();
        for i in 0..pd.normals.len() {
            let q = pd.normals[i].dot(v) / pd.offsets[i];
            if q > best {
                best = q;
            }
        }
        best.max(T::zero())
    }

    /// Background angle at cumulative boundary arc length `l` (mod the
    /// circumference).
    pub fn theta_of_arcpos(&self, l: T) -> T {
        let circ = self.inner.circumference;
        let mut l = l % circ;
        if l < T::zero() {
            l = l + circ;
        }
        match &self.inner.shape {
            Shape::Euclidean => l,
            Shape::Polygon(pd) => {
                let i = numerics::bracket_index(&pd.cum, l);
                let e = pd.verts[(i + 1) % pd.verts.len()] - pd.verts[i];
                let en = self.polygon_base_norm(pd, e);
                let b = pd.verts[i] + e * ((l - pd.cum[i]) / en);
                wrap_angle(b.angle())
            }
            _ => {
                let i = numerics::bracket_index(&self.inner.table_len, l);
                let (t0, t1) = (self.inner.table_theta[i], self.inner.table_theta[i + 1]);
                let (l0, l1) = (self.inner.table_len[i], self.inner.table_len[i + 1]);
                let guess = t0 + (t1 - t0) * ((l - l0) / (l1 - l0));
                let f = |th: T| {
                    let g = |t: T| boundary_speed_raw(&self.inner.shape, t);
                    l0 + numerics::integrate(&g, t0, th, T::lit(1e-14)) - l
                };
                let df = |th: T| boundary_speed_raw(&self.inner.shape, th);
                numerics::newton_bracketed(f, df, t0, t1, guess, T::lit(1e-15))
            }
        }
    }

    /// Point of the unit circle at cumulative boundary arc length `l`.
    pub fn point_at_arclen(&self, l: T) -> Vector2<T> {
        match &self.inner.shape {
            Shape::Polygon(pd) => {
                let circ = self.inner.circumference;
                let mut lw = l % circ;
                if lw < T::zero() {
                    lw = lw + circ;
                }
                let i = numerics::bracket_index(&pd.cum, lw);
                let e = pd.verts[(i + 1) % pd.verts.len()] - pd.verts[i];
                let en = self.polygon_base_norm(pd, e);
                (pd.verts[i] + e * ((lw - pd.cum[i]) / en)) * self.inner.scale
            }
            _ => self.boundary_point(self.theta_of_arcpos(l)),
        }
    }

    /// Cumulative boundary position of the direction of `v`.
    pub fn arcpos(&self, v: Vector2<T>) -> Result<T> {
        if v.x == T::zero() && v.y == T::zero() {
            return Err(Error::ZeroVector);
        }
        Ok(self.arcpos_of_theta(v.angle()))
    }

    /// Rotation by raw boundary arc length: slides the direction of `x`
    /// along the unit circle by Minkowski length `phi_raw`, preserving
    /// `norm(x)`. This is the rotation the arc-length angle measure induces,
    /// in un-normalized units.
    pub fn rotate_raw(&self, x: Vector2<T>, phi_raw: T) -> Result<Vector2<T>> {
        let n = self.norm(x);
        if n == T::zero() {
            return Err(Error::ZeroVector);
        }
        let l = self.arcpos(x)? + phi_raw;
        Ok(self.point_at_arclen(l) * n)
    }
}

// ------------------------------------------------------------ free helpers

fn radial_strictly_convex<T: Real>(sp: &PeriodicCubic<T>) -> bool {
    // strict turning of the sampled boundary chain
    let m = 2048usize;
    let pt = |k: usize| -> Vector2<T> {
        let th = T::two_pi() * T::from_usize(k % m).unwrap() / T::from_usize(m).unwrap();
        Vector2::from_polar_e(sp.eval(th), th)
    };
    let maxr = (0..m).map(|k| pt(k).norm_e()).fold(T::zero(), T::max);
    for k in 0..m {
        let a = pt(k);
        let b = pt(k + 1);
        let c = pt(k + 2);
        if (b - a).cross(c - b) <= maxr * maxr * T::lit(1e-12) {
            return false;
        }
    }
    true
}

fn wrap_angle<T: Real>(a: T) -> T {
    let mut th = a % T::two_pi();
    if th < T::zero() {
        th = th + T::two_pi();
    }
    th
}

/// max-normalized lp gauge, overflow-safe
fn lp_gauge<T: Real>(p: T, v: Vector2<T>) -> T {
    let ax = v.x.abs();
    let ay = v.y.abs();
    let m = ax.max(ay);
    if m == T::zero() {
        return T::zero();
    }
    m * ((ax / m).powf(p) + (ay / m).powf(p)).powf(T::one() / p)
}

/// gradient of the lp gauge (well-defined away from 0 for p > 1)
fn lp_gauge_gradient<T: Real>(p: T, v: Vector2<T>) -> Vector2<T> {
    let g = lp_gauge(p, v);
    let e = p - T::one();
    let sx = if v.x >= T::zero() { T::one() } else { -T::one() };
    let sy = if v.y >= T::zero() { T::one() } else { -T::one() };
    Vector2::new(
        sx * (v.x.abs() / g).powf(e),
        sy * (v.y.abs() / g).powf(e),
    )
}

fn lp_radius<T: Real>(p: T, theta: T) -> T {
    let c = theta.cos().abs();
    let s = theta.sin().abs();
    (c.powf(p) + s.powf(p)).powf(-T::one() / p)
}

fn lp_radius_deriv<T: Real>(p: T, theta: T) -> T {
    // r = w^{-1/p}, w = |cos|^p + |sin|^p
    let c = theta.cos();
    let s = theta.sin();
    let w = c.abs().powf(p) + s.abs().powf(p);
    let sgn = |z: T| if z >= T::zero() { T::one() } else { -T::one() };
    let dw = p * (c * sgn(s) * s.abs().powf(p - T::one())
        - s * sgn(c) * c.abs().powf(p - T::one()));
    -w.powf(-T::one() / p - T::one()) * dw / p
}

fn radial_gauge_gradient<T: Real>(sp: &PeriodicCubic<T>, v: Vector2<T>) -> Vector2<T> {
    // gauge = |v|_E / r(theta(v))
    let re = v.norm_e();
    let th = v.angle();
    let r = sp.eval(th);
    let dr = sp.deriv(th);
    Vector2::new(
        v.x / (re * r) + dr * v.y / (re * r * r),
        v.y / (re * r) - dr * v.x / (re * r * r),
    )
}

/// Minkowski speed of the base boundary at `theta` (shape-level helper so the
/// table builder can run before the context exists).
fn boundary_speed_raw<T: Real>(shape: &Shape<T>, theta: T) -> T {
    let u = Vector2::from_polar_e(T::one(), theta);
    let up = u.perp();
    match shape {
        Shape::Euclidean => T::one(),
        Shape::Lp(p) => {
            let d = u * lp_radius_deriv(*p, theta) + up * lp_radius(*p, theta);
            lp_gauge(*p, d)
        }
        Shape::Radial(sp) => {
            let d = u * sp.deriv(theta) + up * sp.eval(theta);
            let re = d.norm_e();
            re / sp.eval(d.angle())
        }
        Shape::Polygon(_) => unreachable!("polygon boundary length is exact"),
    }
}

fn polygon_edge_of<T: Real>(pd: &PolygonData<T>, theta: T) -> (usize, bool) {
    // vert_angles increase; find the edge whose angular cone contains theta
    let n = pd.vert_angles.len();
    let base = pd.vert_angles[0];
    let mut th = theta;
    while th < base {
        th = th + T::two_pi();
    }
    while th >= base + T::two_pi() {
        th = th - T::two_pi();
    }
    let mut lo = 0usize;
    let mut hi = n; // edge i covers [vert_angles[i], vert_angles[i+1])
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        let am = if mid < n { pd.vert_angles[mid] } else { base + T::two_pi() };
        if am <= th {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let a_lo = pd.vert_angles[lo];
    let a_hi = if lo + 1 < n { pd.vert_angles[lo + 1] } else { base + T::two_pi() };
    let tol = T::lit(1e-12);
    let at_vertex = (th - a_lo).abs() <= tol || (a_hi - th).abs() <= tol;
    (lo, at_vertex)
}

#[cfg(test)]
mod tests {
    use super::*;

    type V = Vector2<f64>;

    fn v(x: f64, y: f64) -> V {
        Vector2::new(x, y)
    }

    #[test]
    fn norms_basic() {
        let e = PlaneContext::<f64>::euclidean();
        assert!((e.norm(v(3.0, 4.0)) - 5.0).abs() < 1e-15);
        let li = PlaneContext::<f64>::linf();
        assert!((li.norm(v(3.0, 4.0)) - 4.0).abs() < 1e-12);
        let l4 = PlaneContext::<f64>::lp(4.0).unwrap();
        assert!((l4.norm(v(1.0, 1.0)) - 2f64.powf(0.25)).abs() < 1e-15);
        let l1 = PlaneContext::<f64>::l1();
        assert!((l1.norm(v(3.0, -4.0)) - 7.0).abs() < 1e-12);
    }

    #[test]
    fn lp_rejects_bad_exponent() {
        assert!(PlaneContext::<f64>::lp(1.0).is_err());
        assert!(PlaneContext::<f64>::lp(0.5).is_err());
        assert!(PlaneContext::<f64>::lp(f64::INFINITY).is_err());
    }

    #[test]
    fn semi_inner_values() {
        let e = PlaneContext::<f64>::euclidean();
        assert_eq!(e.semi_inner(v(1.0, 0.0), v(0.0, 1.0)), 0.0);
        // [y, y] = norm(y)^2 in every context
        for ctx in [
            PlaneContext::<f64>::euclidean(),
            PlaneContext::<f64>::lp(4.0).unwrap(),
            PlaneContext::<f64>::linf(),
        ] {
            let y = v(1.0, 0.0);
            let n = ctx.norm(y);
            assert!((ctx.semi_inner(y, y) - n * n).abs() < 1e-12);
        }
        // frozen: l4, x = (1,0), y = (1,1) gives 2^{-1/2}
        let l4 = PlaneContext::<f64>::lp(4.0).unwrap();
        let got = l4.semi_inner(v(1.0, 0.0), v(1.0, 1.0));
        assert!((got - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12, "got {got}");
    }

    #[test]
    fn semi_inner_matches_difference_quotient() {
        let l4 = PlaneContext::<f64>::lp(3.0).unwrap();
        let x = v(0.3, -1.1);
        let y = v(0.8, 0.6);
        let h = 1e-7;
        let fd = l4.norm(y) * (l4.norm(y + x * h) - l4.norm(y - x * h)) / (2.0 * h);
        assert!((l4.semi_inner(x, y) - fd).abs() < 1e-7);
    }

    #[test]
    fn birkhoff_examples() {
        let e = PlaneContext::<f64>::euclidean();
        assert!(e.is_birkhoff_orthogonal(v(1.0, 0.0), v(0.0, 1.0), 1e-9).unwrap());
        assert!(!e.is_birkhoff_orthogonal(v(1.0, 0.0), v(1.0, 1.0), 1e-9).unwrap());
        let li = PlaneContext::<f64>::linf();
        assert!(li.is_birkhoff_orthogonal(v(1.0, 1.0), v(1.0, -1.0), 1e-9).unwrap());
        assert!(matches!(
            e.is_birkhoff_orthogonal(v(0.0, 0.0), v(1.0, 0.0), 1e-9),
            Err(Error::ZeroVector)
        ));
    }

    #[test]
    fn q_normal_values() {
        let e = PlaneContext::<f64>::euclidean();
        let q = e.q_normal(v(1.0, 0.0)).unwrap();
        assert!((q - v(0.0, 1.0)).norm_e() < 1e-15);

        let l4 = PlaneContext::<f64>::lp(4.0).unwrap();
        let q = l4.q_normal(v(1.0, 0.0)).unwrap();
        assert!((q - v(0.0, 1.0)).norm_e() < 1e-12, "{q:?}");
        // at the diagonal the tangent is parallel to (-1, 1) with norm 2^{1/4}
        let q = l4.q_normal(v(1.0, 1.0)).unwrap();
        assert!(q.x < 0.0 && q.y > 0.0 && (q.x + q.y).abs() < 1e-12, "{q:?}");
        assert!((l4.norm(q) - 2f64.powf(0.25)).abs() < 1e-12);
        // [Q(x), x] = 0
        for ang in [0.3, 1.2, 2.0, 4.4] {
            let x = Vector2::from_polar_e(1.7, ang);
            let q = l4.q_normal(x).unwrap();
            assert!(l4.semi_inner(q, x).abs() < 1e-10 * l4.norm(x).powi(2));
        }
    }

    #[test]
    fn q_on_polygon_edges_and_vertices() {
        let li = PlaneContext::<f64>::linf();
        // direction (1, 0.3) hits the right edge, tangent (0, 1)
        let q = li.q_normal(v(1.0, 0.3)).unwrap();
        assert!((q.unit_e() - v(0.0, 1.0)).norm_e() < 1e-12);
        // vertex direction fails loudly
        assert!(matches!(
            li.q_normal(v(1.0, 1.0)),
            Err(Error::NonSmoothBoundary(_))
        ));
    }

    #[test]
    fn q_inverse_roundtrip() {
        for ctx in [PlaneContext::<f64>::euclidean(), PlaneContext::<f64>::lp(4.0).unwrap()] {
            for ang in [0.1, 0.9, 2.2, 3.9, 5.5] {
                let x = Vector2::from_polar_e(0.8, ang);
                let y = ctx.q_inverse(x).unwrap();
                let back = ctx.q_normal(y).unwrap();
                assert!((back - x).norm_e() < 1e-9 * x.norm_e(), "ang {ang}");
                assert!((ctx.norm(y) - ctx.norm(x)).abs() < 1e-12);
            }
        }
        let l4 = PlaneContext::<f64>::lp(4.0).unwrap();
        let y = l4.q_inverse(v(0.0, 1.0)).unwrap();
        assert!((y - v(1.0, 0.0)).norm_e() < 1e-10, "{y:?}");
    }

    #[test]
    fn sigma_values() {
        let e = PlaneContext::<f64>::euclidean();
        assert!((e.sigma_line(v(3.0, -1.0)).unwrap() - 1.0).abs() < 1e-15);
        assert!((e.sigma_plane() - 1.0).abs() < 1e-12);
        let li = PlaneContext::<f64>::linf();
        assert!((li.sigma_line(v(1.0, 1.0)).unwrap() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        assert!((li.sigma_line(v(1.0, 0.0)).unwrap() - 1.0).abs() < 1e-12);
        assert!((li.sigma_plane() - std::f64::consts::FRAC_PI_4).abs() < 1e-12);
        let l1 = PlaneContext::<f64>::l1();
        assert!((l1.sigma_plane() - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn circumference_values() {
        let e = PlaneContext::<f64>::euclidean();
        assert!((e.circumference() - std::f64::consts::TAU).abs() < 1e-12);
        let li = PlaneContext::<f64>::linf();
        assert!((li.circumference() - 8.0).abs() < 1e-12);
        let l1 = PlaneContext::<f64>::l1();
        assert!((l1.circumference() - 8.0).abs() < 1e-12);
        // frozen oracle value: the l4 circle measured in its own norm
        let l4 = PlaneContext::<f64>::lp(4.0).unwrap();
        assert!(
            (l4.circumference() - 6.793869647256927).abs() < 1e-8,
            "got {}",
            l4.circumference()
        );
    }

    #[test]
    fn arcpos_point_roundtrip() {
        let l4 = PlaneContext::<f64>::lp(4.0).unwrap();
        let circ = l4.circumference();
        for k in 0..17 {
            let l = circ * k as f64 / 17.0;
            let p = l4.point_at_arclen(l);
            assert!((l4.norm(p) - 1.0).abs() < 1e-12);
            let back = l4.arcpos(p).unwrap();
            assert!((back - l).abs() < 1e-10, "l {l} back {back}");
        }
    }

    #[test]
    fn rotate_raw_on_square_walks_the_perimeter() {
        let li = PlaneContext::<f64>::linf();
        // quarter of the total length 8 is 2: from (1, 0.5) two units ccw
        // along the square lands at (-0.5, 1), the Euclidean quarter turn
        let r = li.rotate_raw(v(1.0, 0.5), 2.0).unwrap();
        assert!((r - v(-0.5, 1.0)).norm_e() < 1e-12, "{r:?}");
        // interior points scale along the ray
        let r = li.rotate_raw(v(0.5, 0.25), 2.0).unwrap();
        assert!((r - v(-0.25, 0.5)).norm_e() < 1e-12, "{r:?}");
    }

    #[test]
    fn polygon_validation() {
        // not symmetric
        assert!(PlaneContext::polygon(vec![
            v(1.0, 0.0),
            v(0.0, 1.0),
            v(-1.0, 0.2),
            v(0.0, -1.0)
        ])
        .is_err());
        // clockwise input is accepted and normalized
        let cw = PlaneContext::polygon(vec![
            v(1.0, -1.0),
            v(-1.0, -1.0),
            v(-1.0, 1.0),
            v(1.0, 1.0),
        ])
        .unwrap();
        assert!((cw.norm(v(3.0, 4.0)) - 4.0).abs() < 1e-12);
    }

    #[test]
    fn polygon_half_completion() {
        let half = vec![v(1.0, -1.0), v(1.0, 1.0), v(-1.0, 1.0)];
        let ctx = PlaneContext::polygon_completing(half).unwrap();
        assert!((ctx.circumference() - 8.0).abs() < 1e-12);
    }

    #[test]
    fn radial_ball_approximates_its_generator() {
        // sample an l4 profile and compare norms
        let n = 256;
        let samples: Vec<(f64, f64)> = (0..n)
            .map(|i| {
                let th = std::f64::consts::TAU * i as f64 / n as f64;
                (th, lp_radius(4.0, th))
            })
            .collect();
        let rad = PlaneContext::radial(samples).unwrap();
        let l4 = PlaneContext::<f64>::lp(4.0).unwrap();
        assert!(rad.is_smooth());
        for ang in [0.17, 1.0, 2.5, 4.0, 5.9] {
            let x = Vector2::from_polar_e(1.3, ang);
            assert!((rad.norm(x) - l4.norm(x)).abs() < 1e-6);
        }
        assert!((rad.circumference() - l4.circumference()).abs() < 1e-5);
    }

    #[test]
    fn rescaling_scales_norm_and_fixes_circumference() {
        let l4 = PlaneContext::<f64>::lp(4.0).unwrap();
        let c = 2.0;
        let big = l4.rescaled(c).unwrap();
        let x = v(0.7, -0.2);
        assert!((big.norm(x) - l4.norm(x) / c).abs() < 1e-12);
        assert!((big.circumference() - l4.circumference()).abs() < 1e-12);
        assert!((big.sigma_plane() - l4.sigma_plane() / (c * c)).abs() < 1e-12);
        // sigma(T) = 1 normalization used by the combined Euler-Savary check
        let norm1 = l4.rescaled(l4.sigma_plane().sqrt()).unwrap();
        assert!((norm1.sigma_plane() - 1.0).abs() < 1e-10);
    }
}
