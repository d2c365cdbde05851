//! Scenario execution: building geometry from specs, sampling outputs, and
//! the verification checks behind `verify`.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use minkroll::curve::{self, ParamCurve};
use minkroll::curvature;
use minkroll::error::{Error, Result};
use minkroll::measure::AngleMeasure;
use minkroll::motion::{hypocycloid_motion, wheel_motion, RollingMotion};
use minkroll::numerics::SplitMix64;
use minkroll::plane::PlaneContext;
use minkroll::vec2::Vector2;

use crate::emit::{self, CheckRow, RouletteRow, SvgMarker, SvgPath};
use crate::scenario::{BallSpec, CurveSpec, MeasureSpec, MotionSpec, Scenario};

fn v(x: f64, y: f64) -> Vector2<f64> {
    Vector2::new(x, y)
}

/// Maps `f` over `items` on up to `MKIN_THREADS` scoped threads (default:
/// available parallelism). Results keep input order, so output bytes do not
/// depend on the thread count.
pub fn parallel_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let cap = std::env::var("MKIN_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
        });
    let n_threads = cap.min(items.len()).max(1);
    if n_threads == 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(n_threads);
    let mut out: Vec<Option<R>> = std::iter::repeat_with(|| None).take(items.len()).collect();
    std::thread::scope(|s| {
        for (chunk_items, out_slot) in items.chunks(chunk).zip(out.chunks_mut(chunk)) {
            s.spawn(|| {
                for (it, slot) in chunk_items.iter().zip(out_slot.iter_mut()) {
                    *slot = Some(f(it));
                }
            });
        }
    });
    out.into_iter().map(|o| o.expect("worker filled every slot")).collect()
}

/// Reads a whitespace- or comma-separated two-column numeric file
/// (`#` starts a comment).
fn read_pairs(path: &Path) -> Result<Vec<(f64, f64)>> {
    let text = std::fs::read_to_string(path)?;
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .collect();
        if fields.len() != 2 {
            return Err(Error::ParseError {
                line: idx + 1,
                msg: format!("expected two numbers per line in {}", path.display()),
            });
        }
        let a = fields[0].parse::<f64>().map_err(|_| Error::ParseError {
            line: idx + 1,
            msg: format!("bad number `{}` in {}", fields[0], path.display()),
        })?;
        let b = fields[1].parse::<f64>().map_err(|_| Error::ParseError {
            line: idx + 1,
            msg: format!("bad number `{}` in {}", fields[1], path.display()),
        })?;
        out.push((a, b));
    }
    Ok(out)
}

fn resolve(base: &Path, rel: &str) -> PathBuf {
    let p = Path::new(rel);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base.join(p)
    }
}

pub fn build_context(ball: &BallSpec, base: &Path) -> Result<PlaneContext<f64>> {
    match ball {
        BallSpec::Euclidean => Ok(PlaneContext::euclidean()),
        BallSpec::Lp(p) if p.is_infinite() => Ok(PlaneContext::linf()),
        BallSpec::Lp(p) if *p == 1.0 => Ok(PlaneContext::l1()),
        BallSpec::Lp(p) => PlaneContext::lp(*p),
        BallSpec::Polygon(rel) => {
            let verts = read_pairs(&resolve(base, rel))?
                .into_iter()
                .map(|(x, y)| v(x, y))
                .collect();
            PlaneContext::polygon_completing(verts)
        }
        BallSpec::Radial(rel) => {
            PlaneContext::radial_completing(read_pairs(&resolve(base, rel))?)
        }
    }
}

pub fn build_measure(
    spec: &MeasureSpec,
    ctx: &PlaneContext<f64>,
    base: &Path,
) -> Result<AngleMeasure<f64>> {
    match spec {
        MeasureSpec::Arclen => Ok(AngleMeasure::arclen(ctx)),
        MeasureSpec::Area => Ok(AngleMeasure::area(ctx)),
        MeasureSpec::Density(rel) => {
            AngleMeasure::density(ctx, read_pairs(&resolve(base, rel))?)
        }
    }
}

fn build_one_curve(
    spec: &CurveSpec,
    built: &BTreeMap<String, ParamCurve<f64>>,
    ctx: &PlaneContext<f64>,
    base: &Path,
) -> Result<Option<ParamCurve<f64>>> {
    Ok(Some(match spec {
        CurveSpec::Circle { center, radius } => {
            curve::circle(v(center.0, center.1), *radius)?
        }
        CurveSpec::UnitCircle => curve::unit_circle(ctx),
        CurveSpec::Ellipse { p, eps } => curve::heliocentric_ellipse(*p, *eps)?,
        CurveSpec::Nephroid => curve::nephroid(),
        CurveSpec::Line { origin, dir, span } => {
            let d = v(dir.0, dir.1);
            let de = d.norm_e();
            if de == 0.0 || !(*span > 0.0) {
                return Err(Error::BadParams(
                    "line needs a nonzero direction and positive span".into(),
                ));
            }
            let u = d / de;
            let o = v(origin.0, origin.1);
            ParamCurve::new(move |t: f64| o + u * t, (-*span, *span))
                .with_deriv(move |_t: f64| u)
        }
        CurveSpec::Homothet { of, center, ratio } => match built.get(of) {
            Some(b) => curve::homothet(b, v(center.0, center.1), *ratio)?,
            None => return Ok(None),
        },
        CurveSpec::Samples { path, closed } => {
            let pts = read_pairs(&resolve(base, path))?
                .into_iter()
                .map(|(x, y)| v(x, y))
                .collect();
            curve::from_samples(pts, *closed)?
        }
    }))
}

pub fn build_curves(
    sc: &Scenario,
    ctx: &PlaneContext<f64>,
    base: &Path,
) -> Result<BTreeMap<String, ParamCurve<f64>>> {
    let mut built = BTreeMap::new();
    let mut pending: Vec<(String, CurveSpec)> = sc.curves.clone();
    while !pending.is_empty() {
        let before = pending.len();
        let mut next = Vec::new();
        for (name, spec) in pending {
            match build_one_curve(&spec, &built, ctx, base)? {
                Some(c) => {
                    built.insert(name, c);
                }
                None => next.push((name, spec)),
            }
        }
        if next.len() == before {
            let names: Vec<String> = next.into_iter().map(|(n, _)| n).collect();
            return Err(Error::UnresolvedName(format!(
                "homothety cycle among curves: {}",
                names.join(", ")
            )));
        }
        pending = next;
    }
    Ok(built)
}

pub fn build_motion(
    sc: &Scenario,
    ctx: &PlaneContext<f64>,
    curves: &BTreeMap<String, ParamCurve<f64>>,
) -> Result<RollingMotion<f64>> {
    let spec = sc
        .motion
        .as_ref()
        .ok_or_else(|| Error::BadParams("scenario has no [motion] block".into()))?;
    match spec {
        MotionSpec::Wheel { radius, s_max, .. } => wheel_motion(ctx, *radius, *s_max),
        MotionSpec::Hypocycloid { n, theta0, radius, .. } => {
            hypocycloid_motion(ctx, *n, *theta0, *radius)
        }
        MotionSpec::Generic {
            fixed,
            moving,
            contact_fixed,
            contact_moving,
            s_max,
            ..
        } => {
            let f = curves
                .get(fixed)
                .ok_or_else(|| Error::UnresolvedName(fixed.clone()))?;
            let m = curves
                .get(moving)
                .ok_or_else(|| Error::UnresolvedName(moving.clone()))?;
            RollingMotion::new(ctx, f, m, *contact_fixed, *contact_moving, (-s_max, *s_max))
        }
    }
}

fn sample_curve(c: &ParamCurve<f64>, n: usize) -> Vec<Vector2<f64>> {
    let (lo, hi) = c.domain();
    (0..=n)
        .map(|i| c.eval(lo + (hi - lo) * i as f64 / n as f64))
        .collect()
}

/// Tracked points of a scenario, or a deterministic default fan around the
/// contact when the scenario names none.
fn tracked_points(sc: &Scenario, m: &RollingMotion<f64>) -> Vec<Vector2<f64>> {
    if !sc.track.is_empty() {
        return sc.track.iter().map(|&(x, y)| v(x, y)).collect();
    }
    let ctx = m.context();
    let k = m.contact(0.0);
    (0..8)
        .map(|j| {
            let beta = 0.35 + std::f64::consts::TAU * j as f64 / 8.0;
            let d = v(beta.cos(), beta.sin());
            k + d / ctx.norm(d) * 0.8
        })
        .collect()
}

fn suffixed(path: &Path, k: usize) -> PathBuf {
    if k == 0 {
        return path.to_path_buf();
    }
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("out");
    let ext = path.extension().and_then(|s| s.to_str()).unwrap_or("csv");
    path.with_file_name(format!("{stem}_{k}.{ext}"))
}

/// `roll`: sample the roulettes of the tracked points, write the CSVs and
/// the overlay SVG.
pub fn run_roll(sc: &Scenario, base: &Path) -> Result<()> {
    let ctx = build_context(&sc.ball, base)?;
    let curves = build_curves(sc, &ctx, base)?;
    let motion = build_motion(sc, &ctx, &curves)?;
    let steps = sc.motion.as_ref().map(|m| m.steps()).unwrap_or(64);
    let (lo, hi) = motion.window();
    let points = tracked_points(sc, &motion);

    let mut svg_paths = Vec::new();
    svg_paths.push(SvgPath {
        points: sample_curve(motion.fixed(), 256.max(steps)),
        color: "#444444",
        closed: false,
    });
    svg_paths.push(SvgPath {
        points: sample_curve(motion.moving(), 256.max(steps)),
        color: "#999999",
        closed: false,
    });

    for (k, p) in points.iter().enumerate() {
        let r = motion.roulette(*p);
        let rows: Vec<RouletteRow> = (0..=steps)
            .map(|i| {
                let s = lo + (hi - lo) * i as f64 / steps as f64;
                RouletteRow {
                    s,
                    pos: r.eval(s),
                    vel: r.deriv(s),
                    acc: r.second_deriv(s),
                }
            })
            .collect();
        if let Some(rel) = &sc.output.roulette_csv {
            emit::write_roulette_csv(&suffixed(&resolve(base, rel), k), &rows)?;
        }
        svg_paths.push(SvgPath {
            points: rows.iter().map(|row| row.pos).collect(),
            color: "#1f77b4",
            closed: false,
        });
    }

    if let Some(rel) = &sc.output.svg {
        let mut markers = vec![SvgMarker {
            at: motion.contact(0.0),
            label: "K".into(),
            color: "#d62728",
        }];
        if let Ok(l) = curvature::inflection_pole(&motion) {
            markers.push(SvgMarker { at: l, label: "L".into(), color: "#2ca02c" });
        }
        emit::emit_svg(&resolve(base, rel), &svg_paths, &markers)?;
    }
    Ok(())
}

/// `inflection`: sample the inflection curve fan, write the CSV and the
/// overlay SVG with the locus, the return curve, and the poles.
pub fn run_inflection(sc: &Scenario, base: &Path) -> Result<()> {
    let ctx = build_context(&sc.ball, base)?;
    let curves = build_curves(sc, &ctx, base)?;
    let motion = build_motion(sc, &ctx, &curves)?;
    let fan = curvature::inflection_curve(&motion, 64)?;

    let rows: Vec<(Vector2<f64>, Vector2<f64>)> = fan
        .rays
        .iter()
        .filter_map(|r| r.locus.map(|p| (r.dir, p)))
        .collect();
    if rows.is_empty() {
        return Err(Error::NoRoot(f64::NAN, f64::NAN));
    }
    if let Some(rel) = &sc.output.inflection_csv {
        emit::write_inflection_csv(&resolve(base, rel), &rows)?;
    }
    if let Some(rel) = &sc.output.svg {
        let locus: Vec<Vector2<f64>> = rows.iter().map(|(_, p)| *p).collect();
        let ret: Vec<Vector2<f64>> = fan
            .rays
            .iter()
            .filter_map(|r| r.return_point)
            .collect();
        let paths = vec![
            SvgPath {
                points: sample_curve(motion.fixed(), 256),
                color: "#444444",
                closed: false,
            },
            SvgPath {
                points: sample_curve(motion.moving(), 256),
                color: "#999999",
                closed: false,
            },
            SvgPath { points: locus, color: "#9467bd", closed: false },
            SvgPath { points: ret, color: "#8c564b", closed: false },
        ];
        let markers = vec![
            SvgMarker { at: fan.pole_k, label: "K".into(), color: "#d62728" },
            SvgMarker { at: fan.pole_l, label: "L".into(), color: "#2ca02c" },
        ];
        emit::emit_svg(&resolve(base, rel), &paths, &markers)?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Statement1,
    Es1,
    Es2,
    Combined,
    Brass,
    GroupLaws,
}

impl CheckKind {
    pub fn from_flag(s: &str) -> Result<CheckKind> {
        match s {
            "statement1" => Ok(CheckKind::Statement1),
            "es1" => Ok(CheckKind::Es1),
            "es2" => Ok(CheckKind::Es2),
            "combined" => Ok(CheckKind::Combined),
            "brass" => Ok(CheckKind::Brass),
            "laws" | "group_laws" => Ok(CheckKind::GroupLaws),
            other => Err(Error::BadParams(format!(
                "unknown check `{other}` (statement1|es1|es2|combined|brass|laws)"
            ))),
        }
    }
}

pub struct RunReport {
    pub rows: Vec<CheckRow>,
    pub all_pass: bool,
}

fn err_row(name: String, tol: f64, e: &Error) -> CheckRow {
    CheckRow {
        quantity: format!("{name} [error: {e}]"),
        lhs: f64::NAN,
        rhs: f64::NAN,
        residual: f64::NAN,
        tolerance: tol,
        h: None,
        observed_order: None,
        pass: false,
    }
}

fn check_brass(measure: &AngleMeasure<f64>, tol: f64, rows: &mut Vec<CheckRow>) {
    let rep = measure.brass_check(tol);
    rows.push(CheckRow {
        quantity: "measure-symmetry".into(),
        lhs: rep.max_symmetry_residual,
        rhs: 0.0,
        residual: rep.max_symmetry_residual,
        tolerance: tol,
        h: None,
        observed_order: None,
        pass: rep.symmetric && rep.total_ok,
    });
    rows.push(CheckRow {
        quantity: "measure-atomless".into(),
        lhs: rep.max_cell_ratio,
        rhs: 1.0,
        residual: rep.max_cell_ratio,
        tolerance: 64.0,
        h: None,
        observed_order: None,
        pass: rep.atomless,
    });
}

fn check_group_laws(
    measure: &AngleMeasure<f64>,
    seed: u64,
    tol: f64,
    rows: &mut Vec<CheckRow>,
) {
    let mut rng = SplitMix64::new(seed);
    let tau = std::f64::consts::TAU;
    let mut worst_add = 0.0f64;
    let mut worst_hom = 0.0f64;
    let mut failed: Option<Error> = None;
    'outer: for _ in 0..50 {
        let t1 = rng.in_range(0.0, tau);
        let t2 = rng.in_range(0.0, tau);
        let r1 = measure.rotation(t1);
        let r2 = measure.rotation(t2);
        let r12 = measure.rotation(t1 + t2);
        for _ in 0..3 {
            let x = v(rng.in_range(-2.0, 2.0), rng.in_range(-2.0, 2.0));
            if x.norm_e() < 1e-3 {
                continue;
            }
            let a = match r2.rotate(x).and_then(|y| r1.rotate(y)) {
                Ok(a) => a,
                Err(e) => {
                    failed = Some(e);
                    break 'outer;
                }
            };
            let b = match r12.rotate(x) {
                Ok(b) => b,
                Err(e) => {
                    failed = Some(e);
                    break 'outer;
                }
            };
            worst_add = worst_add.max((a - b).norm_e() / (1.0 + b.norm_e()));
            for alpha in [0.5, 2.0, 3.0] {
                let lhs = match r1.rotate(x * alpha) {
                    Ok(l) => l,
                    Err(e) => {
                        failed = Some(e);
                        break 'outer;
                    }
                };
                let rhs = match r1.rotate(x) {
                    Ok(r) => r * alpha,
                    Err(e) => {
                        failed = Some(e);
                        break 'outer;
                    }
                };
                worst_hom = worst_hom.max((lhs - rhs).norm_e() / (1.0 + rhs.norm_e()));
            }
        }
    }
    if let Some(e) = failed {
        rows.push(err_row("rotation-additivity".into(), tol, &e));
        return;
    }
    rows.push(CheckRow {
        quantity: "rotation-additivity".into(),
        lhs: worst_add,
        rhs: 0.0,
        residual: worst_add,
        tolerance: tol,
        h: None,
        observed_order: None,
        pass: worst_add <= tol,
    });
    rows.push(CheckRow {
        quantity: "rotation-homothety".into(),
        lhs: worst_hom,
        rhs: 0.0,
        residual: worst_hom,
        tolerance: tol,
        h: None,
        observed_order: None,
        pass: worst_hom <= tol,
    });
}

fn check_statement1(
    m: &RollingMotion<f64>,
    points: &[Vector2<f64>],
    tol: f64,
    rows: &mut Vec<CheckRow>,
) {
    let sweeps = parallel_map(points, |p| {
        let r1 = m.instantaneous_pole_check(0.0, *p, 1e-4);
        let r2 = m.instantaneous_pole_check(0.0, *p, 1e-5);
        let r3 = m.instantaneous_pole_check(0.0, *p, 1e-6);
        (*p, r1, r2, r3)
    });
    for (k, (_p, r1, r2, r3)) in sweeps.into_iter().enumerate() {
        let name = format!("pole-conjugacy[{k}]");
        match (r1, r2, r3) {
            (Ok(a), Ok(b), Ok(c)) => {
                // the steps are decade-spaced, so this is a per-decade order
                let order = if b > 0.0 && c > 0.0 { (a / b).log10() } else { f64::INFINITY };
                rows.push(CheckRow {
                    quantity: name,
                    lhs: b,
                    rhs: 0.0,
                    residual: b,
                    tolerance: tol,
                    h: Some(1e-5),
                    observed_order: Some(order),
                    pass: b <= tol && a > b && b > c,
                });
            }
            (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => {
                rows.push(err_row(name, tol, &e));
            }
        }
    }
}

fn check_es1(
    m: &RollingMotion<f64>,
    points: &[Vector2<f64>],
    tol: f64,
    rows: &mut Vec<CheckRow>,
) {
    let results = parallel_map(points, |p| {
        (curvature::es_first(m, *p, 2e-3), curvature::es_first(m, *p, 1e-3))
    });
    for (k, (coarse, fine)) in results.into_iter().enumerate() {
        let name = format!("es-first[{k}]");
        match (coarse, fine) {
            (Ok(a), Ok(b)) => {
                let order = if b.residual_first > 0.0 {
                    (a.residual_first / b.residual_first).log2()
                } else {
                    f64::INFINITY
                };
                rows.push(CheckRow {
                    quantity: name,
                    lhs: 1.0 / b.kp - 1.0 / b.ko_p,
                    rhs: 1.0 / b.ki_p,
                    residual: b.residual_first,
                    tolerance: tol,
                    h: Some(1e-3),
                    observed_order: Some(order),
                    pass: b.residual_first <= tol,
                });
            }
            (Err(e), _) | (_, Err(e)) => rows.push(err_row(name, tol, &e)),
        }
    }
}

fn check_es2(m: &RollingMotion<f64>, tol: f64, rows: &mut Vec<CheckRow>) {
    let hs = [2e-3, 1e-3, 5e-4];
    let mut res = Vec::new();
    for h in hs {
        match curvature::es_second(m, h) {
            Ok(es) => res.push(es),
            Err(e) => {
                rows.push(err_row("es-second".into(), tol, &e));
                return;
            }
        }
    }
    let fine = &res[2];
    let order = minkroll::numerics::observed_order(
        res[0].residual,
        res[1].residual,
        res[2].residual,
    );
    rows.push(CheckRow {
        quantity: "es-second".into(),
        lhs: fine.lhs.abs(),
        rhs: fine.rhs,
        residual: fine.residual,
        tolerance: tol,
        h: Some(5e-4),
        observed_order: Some(order),
        pass: fine.residual <= tol,
    });
}

fn check_combined(m: &RollingMotion<f64>, tol: f64, rows: &mut Vec<CheckRow>) {
    let comb = match curvature::combined_es(m, 16, 0.8, 2e-3) {
        Ok(c) => c,
        Err(e) => {
            rows.push(err_row("combined-es".into(), tol, &e));
            return;
        }
    };
    if comb.points.is_empty() {
        rows.push(err_row(
            "combined-es".into(),
            tol,
            &Error::NoRoot(f64::NAN, f64::NAN),
        ));
        return;
    }
    let first = &comb.points[0];
    let limb_gap = (first.rhs_curvatures.abs() - first.rhs_alpha.abs()).abs()
        / first.rhs_alpha.abs();
    rows.push(CheckRow {
        quantity: "combined-right-limbs".into(),
        lhs: first.rhs_curvatures.abs(),
        rhs: first.rhs_alpha.abs(),
        residual: limb_gap,
        tolerance: tol,
        h: Some(2e-3),
        observed_order: None,
        pass: limb_gap <= tol,
    });
    let worst = comb
        .points
        .iter()
        .max_by(|a, b| a.residual.total_cmp(&b.residual))
        .expect("nonempty fan");
    let mean =
        comb.points.iter().map(|p| p.residual).sum::<f64>() / comb.points.len() as f64;
    rows.push(CheckRow {
        quantity: "combined-fan-max".into(),
        lhs: worst.lhs.abs(),
        rhs: worst.rhs_alpha.abs(),
        residual: worst.residual,
        tolerance: tol,
        h: Some(2e-3),
        observed_order: None,
        pass: worst.residual <= tol,
    });
    rows.push(CheckRow {
        quantity: "combined-fan-mean".into(),
        lhs: mean,
        rhs: 0.0,
        residual: mean,
        tolerance: tol,
        h: Some(2e-3),
        observed_order: None,
        pass: mean <= tol,
    });
}

/// `verify`: run the enabled checks (or exactly the one selected by
/// `only`), returning every row; module errors become failing rows.
pub fn run_verify(sc: &Scenario, base: &Path, only: Option<CheckKind>) -> Result<RunReport> {
    let ctx = build_context(&sc.ball, base)?;
    let enabled = |kind: CheckKind, toggled: bool| match only {
        Some(o) => o == kind,
        None => toggled,
    };
    let mut rows = Vec::new();

    if enabled(CheckKind::Brass, sc.verify.brass)
        || enabled(CheckKind::GroupLaws, sc.verify.group_laws)
    {
        let measure = build_measure(&sc.measure, &ctx, base)?;
        if enabled(CheckKind::Brass, sc.verify.brass) {
            check_brass(&measure, sc.tolerances.brass, &mut rows);
        }
        if enabled(CheckKind::GroupLaws, sc.verify.group_laws) {
            check_group_laws(&measure, sc.seed, sc.tolerances.group_laws, &mut rows);
        }
    }

    let needs_motion = enabled(CheckKind::Statement1, sc.verify.statement1)
        || enabled(CheckKind::Es1, sc.verify.es1)
        || enabled(CheckKind::Es2, sc.verify.es2)
        || enabled(CheckKind::Combined, sc.verify.combined);
    if needs_motion {
        let curves = build_curves(sc, &ctx, base)?;
        let motion = build_motion(sc, &ctx, &curves)?;
        let points = tracked_points(sc, &motion);
        if enabled(CheckKind::Statement1, sc.verify.statement1) {
            check_statement1(&motion, &points, sc.tolerances.statement1, &mut rows);
        }
        if enabled(CheckKind::Es1, sc.verify.es1) {
            check_es1(&motion, &points, sc.tolerances.es1, &mut rows);
        }
        if enabled(CheckKind::Es2, sc.verify.es2) {
            check_es2(&motion, sc.tolerances.es2, &mut rows);
        }
        if enabled(CheckKind::Combined, sc.verify.combined) {
            check_combined(&motion, sc.tolerances.combined, &mut rows);
        }
    }

    if let Some(rel) = &sc.output.report {
        emit::write_report_csv(&resolve(base, rel), &rows)?;
    }
    let all_pass = !rows.is_empty() && rows.iter().all(|r| r.pass);
    Ok(RunReport { rows, all_pass })
}
