//! Small numerical kernel: adaptive quadrature, 1-d minimization and
//! root-finding, monotone and periodic interpolation, Richardson
//! extrapolation.
//!
//! Everything here is scalar-generic and allocation-light; the geometry
//! modules call into these routines on hot paths.

use crate::scalar::Real;

/// Adaptive Simpson quadrature of `f` over `[a, b]` to absolute tolerance
/// `tol`. Piecewise-smooth integrands are fine: the recursion isolates the
/// finitely many kinks.
pub fn integrate<T: Real, F: Fn(T) -> T>(f: &F, a: T, b: T, tol: T) -> T {
    if a == b {
        return T::zero();
    }
    let c = (a + b) * T::half();
    let fa = f(a);
    let fb = f(b);
    let fc = f(c);
    let whole = simpson(a, b, fa, fc, fb);
    adapt(f, a, b, fa, fc, fb, whole, tol, 48)
}

fn simpson<T: Real>(a: T, b: T, fa: T, fc: T, fb: T) -> T {
    (b - a) / T::lit(6.0) * (fa + T::lit(4.0) * fc + fb)
}

#[allow(clippy::too_many_arguments)]
fn adapt<T: Real, F: Fn(T) -> T>(
    f: &F,
    a: T,
    b: T,
    fa: T,
    fc: T,
    fb: T,
    whole: T,
    tol: T,
    depth: u32,
) -> T {
    let c = (a + b) * T::half();
    let lm = (a + c) * T::half();
    let rm = (c + b) * T::half();
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, c, fa, flm, fc);
    let right = simpson(c, b, fc, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= T::lit(15.0) * tol {
        left + right + delta / T::lit(15.0)
    } else {
        let half_tol = tol * T::half();
        adapt(f, a, c, fa, flm, fc, left, half_tol, depth - 1)
            + adapt(f, c, b, fc, frm, fb, right, half_tol, depth - 1)
    }
}

/// Golden-section minimization of a unimodal `f` on `[a, b]`.
/// Returns the abscissa of the minimum. The interval is narrowed to `tol`,
/// but once `f` is flat to machine precision the abscissa is only good to
/// about `sqrt(eps * |f| / f'')`; the minimum VALUE stays fully accurate.
pub fn golden_min<T: Real, F: Fn(T) -> T>(f: &F, a: T, b: T, tol: T) -> T {
    let inv_phi = T::lit(0.618_033_988_749_894_9);
    let (mut a, mut b) = (a, b);
    let mut x1 = b - (b - a) * inv_phi;
    let mut x2 = a + (b - a) * inv_phi;
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while (b - a).abs() > tol {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - (b - a) * inv_phi;
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + (b - a) * inv_phi;
            f2 = f(x2);
        }
    }
    (a + b) * T::half()
}

/// Bisection on a sign change; `f(a)` and `f(b)` must have opposite signs.
pub fn bisect<T: Real, F: Fn(T) -> T>(f: &F, a: T, b: T, tol: T) -> T {
    let (mut a, mut b) = (a, b);
    let mut fa = f(a);
    if fa == T::zero() {
        return a;
    }
    for _ in 0..200 {
        let m = (a + b) * T::half();
        if (b - a).abs() <= tol {
            return m;
        }
        let fm = f(m);
        if fm == T::zero() {
            return m;
        }
        if (fa > T::zero()) == (fm > T::zero()) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    (a + b) * T::half()
}

/// Newton iteration safeguarded by a bracket: falls back to bisection
/// whenever a step leaves `[a, b]` or the derivative collapses.
pub fn newton_bracketed<T: Real>(
    f: impl Fn(T) -> T,
    df: impl Fn(T) -> T,
    a: T,
    b: T,
    x0: T,
    tol: T,
) -> T {
    let (mut a, mut b) = (a, b);
    let mut x = x0;
    let fa = f(a);
    for _ in 0..60 {
        let fx = f(x);
        if fx.abs() == T::zero() {
            return x;
        }
        // maintain the bracket
        if (fa > T::zero()) == (fx > T::zero()) {
            a = x;
        } else {
            b = x;
        }
        let d = df(x);
        let step = if d != T::zero() { fx / d } else { T::infinity() };
        let mut next = x - step;
        if !(next > a.min(b) && next < a.max(b)) || !next.is_finite() {
            next = (a + b) * T::half();
        }
        if (next - x).abs() <= tol {
            return next;
        }
        x = next;
    }
    x
}

/// Monotone cubic (Fritsch-Carlson) interpolant over strictly increasing
/// knots. Used to invert cumulative tables without overshoot.
pub struct MonotoneCubic<T> {
    xs: Vec<T>,
    ys: Vec<T>,
    ms: Vec<T>,
}

impl<T: Real> MonotoneCubic<T> {
    pub fn new(xs: Vec<T>, ys: Vec<T>) -> Self {
        assert!(xs.len() == ys.len() && xs.len() >= 2);
        let n = xs.len();
        let mut d = vec![T::zero(); n - 1];
        for i in 0..n - 1 {
            d[i] = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
        }
        let mut ms = vec![T::zero(); n];
        ms[0] = d[0];
        ms[n - 1] = d[n - 2];
        for i in 1..n - 1 {
            ms[i] = if d[i - 1] * d[i] <= T::zero() {
                T::zero()
            } else {
                (d[i - 1] + d[i]) * T::half()
            };
        }
        // clamp slopes to keep monotonicity
        for i in 0..n - 1 {
            if d[i] == T::zero() {
                ms[i] = T::zero();
                ms[i + 1] = T::zero();
            } else {
                let a = ms[i] / d[i];
                let bq = ms[i + 1] / d[i];
                let s = (a * a + bq * bq).sqrt();
                if s > T::lit(3.0) {
                    let t = T::lit(3.0) / s;
                    ms[i] = t * a * d[i];
                    ms[i + 1] = t * bq * d[i];
                }
            }
        }
        MonotoneCubic { xs, ys, ms }
    }

    pub fn eval(&self, x: T) -> T {
        let n = self.xs.len();
        let i = bracket_index(&self.xs, x);
        let h = self.xs[i + 1] - self.xs[i];
        let t = ((x - self.xs[i]) / h).max(T::zero()).min(T::one());
        let t2 = t * t;
        let t3 = t2 * t;
        let h00 = T::two() * t3 - T::lit(3.0) * t2 + T::one();
        let h10 = t3 - T::two() * t2 + t;
        let h01 = -T::two() * t3 + T::lit(3.0) * t2;
        let h11 = t3 - t2;
        let _ = n;
        h00 * self.ys[i] + h10 * h * self.ms[i] + h01 * self.ys[i + 1] + h11 * h * self.ms[i + 1]
    }
}

/// Index `i` with `xs[i] <= x < xs[i+1]` (clamped to the ends).
pub fn bracket_index<T: Real>(xs: &[T], x: T) -> usize {
    let n = xs.len();
    if x <= xs[0] {
        return 0;
    }
    if x >= xs[n - 1] {
        return n - 2;
    }
    let mut lo = 0usize;
    let mut hi = n - 1;
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if xs[mid] <= x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Periodic natural cubic spline over knots `xs` (strictly increasing,
/// spanning one period `period`); `ys[0]` is also the value at
/// `xs[0] + period`. Smooth (C2) closed interpolant for radial profiles.
pub struct PeriodicCubic<T> {
    xs: Vec<T>,
    ys: Vec<T>,
    m2: Vec<T>, // second derivatives at the knots
    period: T,
}

impl<T: Real> PeriodicCubic<T> {
    pub fn new(xs: Vec<T>, ys: Vec<T>, period: T) -> Self {
        let n = xs.len();
        assert!(n >= 3, "periodic spline needs at least 3 knots");
        // knot spacings, wrapping the last interval back to xs[0] + period
        let h = |i: usize| -> T {
            if i + 1 < n {
                xs[i + 1] - xs[i]
            } else {
                xs[0] + period - xs[n - 1]
            }
        };
        let y = |i: usize| ys[i % n];
        // cyclic tridiagonal system for the moments (second derivatives)
        let mut a = vec![T::zero(); n]; // sub
        let mut b = vec![T::zero(); n]; // diag
        let mut c = vec![T::zero(); n]; // super
        let mut r = vec![T::zero(); n];
        for i in 0..n {
            let hp = h((i + n - 1) % n);
            let hc = h(i);
            a[i] = hp;
            b[i] = T::two() * (hp + hc);
            c[i] = hc;
            let yp = y((i + n - 1) % n);
            let yc = y(i);
            let yn = y(i + 1);
            r[i] = T::lit(6.0) * ((yn - yc) / hc - (yc - yp) / hp);
        }
        let m2 = solve_cyclic_tridiag(&a, &b, &c, &r);
        PeriodicCubic { xs, ys, m2, period }
    }

    fn locate(&self, x: T) -> (usize, T, T) {
        let n = self.xs.len();
        let mut u = (x - self.xs[0]) % self.period;
        if u < T::zero() {
            u = u + self.period;
        }
        let xw = self.xs[0] + u;
        let i = if xw >= self.xs[n - 1] { n - 1 } else { bracket_index(&self.xs, xw) };
        let xi = self.xs[i];
        let h = if i + 1 < n { self.xs[i + 1] - xi } else { self.xs[0] + self.period - xi };
        (i, xw - xi, h)
    }

    pub fn eval(&self, x: T) -> T {
        let n = self.xs.len();
        let (i, d, h) = self.locate(x);
        let j = (i + 1) % n;
        let (ma, mb) = (self.m2[i], self.m2[j]);
        let (ya, yb) = (self.ys[i], self.ys[j]);
        let t = d / h;
        let s = T::one() - t;
        s * ya
            + t * yb
            + h * h / T::lit(6.0) * ((s * s * s - s) * ma + (t * t * t - t) * mb)
    }

    pub fn deriv(&self, x: T) -> T {
        let n = self.xs.len();
        let (i, d, h) = self.locate(x);
        let j = (i + 1) % n;
        let (ma, mb) = (self.m2[i], self.m2[j]);
        let (ya, yb) = (self.ys[i], self.ys[j]);
        let t = d / h;
        let s = T::one() - t;
        (yb - ya) / h
            + h / T::lit(6.0)
                * (-(T::lit(3.0) * s * s - T::one()) * ma + (T::lit(3.0) * t * t - T::one()) * mb)
    }
}

/// Natural cubic spline through `(xs, ys)` with zero end moments.
pub struct NaturalCubic<T> {
    xs: Vec<T>,
    ys: Vec<T>,
    m2: Vec<T>,
}

impl<T: Real> NaturalCubic<T> {
    pub fn new(xs: Vec<T>, ys: Vec<T>) -> Self {
        let n = xs.len();
        assert!(n >= 3, "natural spline needs at least 3 knots");
        // interior moment equations; natural ends pin m2[0] = m2[n-1] = 0
        let m = n - 2;
        let mut a = vec![T::zero(); m];
        let mut b = vec![T::zero(); m];
        let mut c = vec![T::zero(); m];
        let mut r = vec![T::zero(); m];
        for k in 0..m {
            let i = k + 1;
            let hp = xs[i] - xs[i - 1];
            let hc = xs[i + 1] - xs[i];
            a[k] = hp;
            b[k] = T::two() * (hp + hc);
            c[k] = hc;
            r[k] = T::lit(6.0) * ((ys[i + 1] - ys[i]) / hc - (ys[i] - ys[i - 1]) / hp);
        }
        let mut m2 = vec![T::zero(); n];
        if m > 0 {
            let sol = solve_tridiag(&a, &b, &c, &r);
            m2[1..n - 1].copy_from_slice(&sol);
        }
        NaturalCubic { xs, ys, m2 }
    }

    fn locate(&self, x: T) -> (usize, T) {
        let n = self.xs.len();
        let i = bracket_index(&self.xs, x).min(n - 2);
        (i, self.xs[i + 1] - self.xs[i])
    }

    pub fn eval(&self, x: T) -> T {
        let (i, h) = self.locate(x);
        let t = (x - self.xs[i]) / h;
        let s = T::one() - t;
        s * self.ys[i]
            + t * self.ys[i + 1]
            + h * h / T::lit(6.0)
                * ((s * s * s - s) * self.m2[i] + (t * t * t - t) * self.m2[i + 1])
    }

    pub fn deriv(&self, x: T) -> T {
        let (i, h) = self.locate(x);
        let t = (x - self.xs[i]) / h;
        let s = T::one() - t;
        (self.ys[i + 1] - self.ys[i]) / h
            + h / T::lit(6.0)
                * (-(T::lit(3.0) * s * s - T::one()) * self.m2[i]
                    + (T::lit(3.0) * t * t - T::one()) * self.m2[i + 1])
    }
}

/// Cyclic tridiagonal solve (Sherman-Morrison correction of a plain
/// tridiagonal factorization). Coefficient rows: a (sub), b (diag), c (super),
/// with a[0] and c[n-1] wrapping around.
fn solve_cyclic_tridiag<T: Real>(a: &[T], b: &[T], c: &[T], r: &[T]) -> Vec<T> {
    let n = b.len();
    let gamma = -b[0];
    let mut bb = b.to_vec();
    bb[0] = b[0] - gamma;
    bb[n - 1] = b[n - 1] - a[0] * c[n - 1] / gamma;
    let x = solve_tridiag(a, &bb, c, r);
    let mut u = vec![T::zero(); n];
    u[0] = gamma;
    u[n - 1] = c[n - 1];
    let z = solve_tridiag(a, &bb, c, &u);
    let fact = (x[0] + a[0] * x[n - 1] / gamma) / (T::one() + z[0] + a[0] * z[n - 1] / gamma);
    x.iter().zip(z.iter()).map(|(&xi, &zi)| xi - fact * zi).collect()
}

fn solve_tridiag<T: Real>(a: &[T], b: &[T], c: &[T], r: &[T]) -> Vec<T> {
    let n = b.len();
    let mut cp = vec![T::zero(); n];
    let mut dp = vec![T::zero(); n];
    cp[0] = c[0] / b[0];
    dp[0] = r[0] / b[0];
    for i in 1..n {
        let m = b[i] - a[i] * cp[i - 1];
        cp[i] = c[i] / m;
        dp[i] = (r[i] - a[i] * dp[i - 1]) / m;
    }
    let mut x = vec![T::zero(); n];
    x[n - 1] = dp[n - 1];
    for i in (0..n - 1).rev() {
        x[i] = dp[i] - cp[i] * x[i + 1];
    }
    x
}

/// One Richardson extrapolation level for a quantity with leading error
/// `O(h^p)`: combines values at `h` and `h/2`.
pub fn richardson<T: Real>(f_h: T, f_h2: T, p: i32) -> T {
    let w = T::two().powi(p);
    (w * f_h2 - f_h) / (w - T::one())
}

/// Observed convergence order from consecutive differences of a sequence
/// evaluated at h, h/2, h/4.
pub fn observed_order<T: Real>(f_h: T, f_h2: T, f_h4: T) -> T {
    let e1 = (f_h - f_h2).abs();
    let e2 = (f_h2 - f_h4).abs();
    if e2 == T::zero() || e1 == T::zero() {
        return T::infinity();
    }
    (e1 / e2).ln() / T::two().ln()
}

/// Small deterministic RNG (splitmix64): the same seed yields the same
/// stream on every platform, which keeps sampled test data and generated
/// artifacts reproducible.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in [lo, hi).
    pub fn in_range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}
