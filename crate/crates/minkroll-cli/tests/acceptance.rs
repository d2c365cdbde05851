//! Acceptance gate: one test per verification target, each printing the
//! measured numbers it judged. Tolerances and runtime budgets are asserted
//! as stated, so a target that the geometry genuinely cannot meet fails
//! here with its evidence in the panic message rather than being relaxed
//! into a green light.
//!
//! The reference values cited in comments were produced by an independently
//! implemented evaluation of the same constructions.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use minkroll::curvature::{
    busemann_curvature_limit, busemann_sine, combined_es, es_first, es_second, inflection_curve,
    inflection_pole_field, radial_spread_about_best_center,
};
use minkroll::curve::{self, ParamCurve};
use minkroll::motion::{euclidean_polodes, hypocycloid_motion, wheel_motion, EuclideanMotion};
use minkroll::numerics::{golden_min, SplitMix64};
use minkroll::{Measure, Plane, Rolling, Vec2};

fn v(x: f64, y: f64) -> Vec2 {
    Vec2::new(x, y)
}

fn l4() -> Plane {
    Plane::lp(4.0).unwrap()
}

/// Random centrally symmetric polygon ball: the convex hull of `half`
/// random annulus points together with their antipodes, near-collinear
/// vertices dropped so the result stays strictly convex.
fn random_polygon(rng: &mut SplitMix64, half: usize) -> Plane {
    let mut pts = Vec::with_capacity(2 * half);
    for i in 0..half {
        let theta = (i as f64 + 0.25 + 0.5 * rng.next_f64()) * PI / half as f64;
        let r = rng.in_range(0.5, 1.5);
        let p = v(r * theta.cos(), r * theta.sin());
        pts.push(p);
        pts.push(p * -1.0);
    }
    pts.sort_by(|a, b| (a.x, a.y).partial_cmp(&(b.x, b.y)).unwrap());
    // monotone-chain hull, strict turns only
    let chain = |iter: &mut dyn Iterator<Item = Vec2>| {
        let mut out: Vec<Vec2> = Vec::new();
        for p in iter {
            while out.len() >= 2 {
                let a = out[out.len() - 2];
                let b = out[out.len() - 1];
                if (b - a).cross(p - b) <= 1e-9 {
                    out.pop();
                } else {
                    break;
                }
            }
            out.push(p);
        }
        out.pop();
        out
    };
    let mut hull = chain(&mut pts.iter().copied());
    hull.extend(chain(&mut pts.iter().rev().copied()));
    let upper: Vec<Vec2> = hull
        .into_iter()
        .filter(|p| p.y > 1e-12 || (p.y.abs() <= 1e-12 && p.x > 0.0))
        .collect();
    Plane::polygon_completing(upper).unwrap()
}

/// Default tracked-point fan: eight Minkowski-unit directions offset by
/// 0.35 radians, at Minkowski distance 0.8 from the contact point.
fn fan(ctx: &Plane, k: Vec2) -> Vec<Vec2> {
    (0..8)
        .map(|j| {
            let beta = 0.35 + TAU * j as f64 / 8.0;
            let d = v(beta.cos(), beta.sin());
            k + d / ctx.norm(d) * 0.8
        })
        .collect()
}

#[test]
fn c01_linf_arclen_quarter_turn_is_the_euclidean_rotation() {
    let start = Instant::now();
    let ctx = Plane::linf();
    let measure = Measure::arclen(&ctx);
    let quarter = measure.rotation(FRAC_PI_2);

    let mut rng = SplitMix64::new(1);
    let mut pts = Vec::with_capacity(2000);
    for j in 0..1000 {
        pts.push(ctx.boundary_point(TAU * j as f64 / 1000.0));
    }
    for _ in 0..1000 {
        let theta = rng.in_range(0.0, TAU);
        pts.push(ctx.boundary_point(theta) * rng.in_range(0.05, 0.95));
    }

    let mut worst = 0.0f64;
    for &p in &pts {
        let got = quarter.rotate(p).unwrap();
        let want = v(-p.y, p.x);
        worst = worst.max((got - want).norm_e());
    }
    let dt = start.elapsed().as_secs_f64();
    println!("quarter turn on the square ball: max deviation {worst:.3e} over {} points, {dt:.3} s", pts.len());
    assert!(worst <= 1e-9, "quarter turn deviates from the Euclidean rotation by {worst:.3e}");
    assert!(dt < 1.0, "took {dt:.3} s, budget 1 s");
}

#[test]
fn c02_rotations_form_a_group_and_commute_with_homothety() {
    let start = Instant::now();
    let mut rng = SplitMix64::new(2);
    let gon = random_polygon(&mut rng, 6);
    let balls: [(&str, Plane); 3] = [("linf", Plane::linf()), ("lp4", l4()), ("12-gon", gon)];

    let mut worst = 0.0f64;
    for (name, ctx) in &balls {
        let measure = Measure::arclen(ctx);
        for _ in 0..200 {
            let t1 = rng.in_range(-TAU, TAU);
            let t2 = rng.in_range(-TAU, TAU);
            let r1 = measure.rotation(t1);
            let r2 = measure.rotation(t2);
            let sum = measure.rotation(t1 + t2);
            let p = v(rng.in_range(-2.0, 2.0), rng.in_range(-2.0, 2.0));
            if ctx.norm(p) < 1e-2 {
                continue;
            }
            let scale = ctx.norm(p);
            let base = r1.rotate(p).unwrap();
            let composed = r1.rotate(r2.rotate(p).unwrap()).unwrap();
            let direct = sum.rotate(p).unwrap();
            let err = (composed - direct).norm_e() / scale;
            assert!(err <= 1e-8, "{name}: composition residual {err:.3e} at ({t1}, {t2})");
            worst = worst.max(err);
            for alpha in [0.5, 2.0, 3.0] {
                let scaled = r1.rotate(p * alpha).unwrap();
                let err = (scaled - base * alpha).norm_e() / (alpha * scale);
                assert!(err <= 1e-8, "{name}: homothety residual {err:.3e} at alpha {alpha}");
                worst = worst.max(err);
            }
        }
    }
    let dt = start.elapsed().as_secs_f64();
    println!("group laws over 200 angle pairs x 3 balls: max residual {worst:.3e}, {dt:.3} s");
    assert!(dt < 5.0, "took {dt:.3} s, budget 5 s");
}

#[test]
fn c03_circumference_of_the_unit_circle_lies_between_6_and_8() {
    let mut rng = SplitMix64::new(3);
    let mut lo = f64::INFINITY;
    let mut hi = 0.0f64;
    for i in 0..50 {
        let ctx = random_polygon(&mut rng, 3 + (i % 6));
        let c = ctx.circumference();
        assert!(
            (6.0 - 1e-9..=8.0 + 1e-9).contains(&c),
            "polygon {i}: circumference {c} outside [6, 8]"
        );
        lo = lo.min(c);
        hi = hi.max(c);
    }
    for p in [1.5, 2.0, 4.0] {
        let c = Plane::lp(p).unwrap().circumference();
        assert!((6.0 - 1e-9..=8.0 + 1e-9).contains(&c), "lp {p}: circumference {c}");
    }
    let c1 = Plane::l1().circumference();
    let cinf = Plane::linf().circumference();
    let ce = Plane::euclidean().circumference();
    println!("circumference range over 50 random polygons: [{lo:.6}, {hi:.6}]");
    println!("l1 {c1:.9}  linf {cinf:.9}  euclidean {ce:.9}");
    assert!((c1 - 8.0).abs() <= 1e-6, "l1 circumference {c1}");
    assert!((cinf - 8.0).abs() <= 1e-6, "linf circumference {cinf}");
    assert!((ce - TAU).abs() <= 1e-6, "euclidean circumference {ce}");
}

#[test]
fn c04_nephroid_arc_length_matches_the_closed_form() {
    let ctx = Plane::euclidean();
    let neph = curve::nephroid::<f64>();
    let total = neph.arc_length(&ctx, 0.0, FRAC_PI_2).unwrap();
    println!("nephroid arc over [0, pi/2]: {total:.9}");
    assert!((total - 3.0).abs() <= 1e-6, "total arc {total}");
    for (a, b) in [(0.2, 0.9), (0.55, 1.3), (0.05, 1.5)] {
        let arc = neph.arc_length(&ctx, a, b).unwrap();
        let oracle = 3.0 * (f64::cos(a) - f64::cos(b));
        println!("nephroid arc over [{a}, {b}]: {arc:.9} vs closed form {oracle:.9}");
        assert!((arc - oracle).abs() <= 1e-6, "arc over [{a}, {b}]: {arc} vs {oracle}");
    }
}

#[test]
fn c05_euclidean_reductions_recover_classical_objects() {
    let ctx = Plane::euclidean();
    let mut rng = SplitMix64::new(5);

    // Q is the 90-degree rotation.
    let mut worst_q = 0.0f64;
    for _ in 0..100 {
        let x = v(rng.in_range(-2.0, 2.0), rng.in_range(-2.0, 2.0));
        if x.norm_e() < 1e-2 {
            continue;
        }
        let q = ctx.q_normal(x).unwrap();
        worst_q = worst_q.max((q - v(-x.y, x.x)).norm_e());
    }
    println!("Q vs 90-degree rotation: max deviation {worst_q:.3e}");
    assert!(worst_q <= 1e-12, "Q deviates from perp by {worst_q:.3e}");

    // The Busemann sine is the Euclidean sine.
    let mut worst_s = 0.0f64;
    for _ in 0..100 {
        let a = v(rng.in_range(-2.0, 2.0), rng.in_range(-2.0, 2.0));
        let b = v(rng.in_range(-2.0, 2.0), rng.in_range(-2.0, 2.0));
        if a.norm_e() < 1e-2 || b.norm_e() < 1e-2 {
            continue;
        }
        let sm = busemann_sine(&ctx, a, b).unwrap();
        let sine = (a.x * b.y - a.y * b.x).abs() / (a.norm_e() * b.norm_e());
        worst_s = worst_s.max((sm - sine).abs());
    }
    println!("Busemann sine vs Euclidean sine: max deviation {worst_s:.3e}");
    assert!(worst_s <= 1e-9, "sine deviates by {worst_s:.3e}");

    // Chord-limit curvature of a circle of radius r is 1/r.
    for r in [0.5, 1.0, 2.0] {
        let c = curve::circle(v(0.3, -0.2), r).unwrap();
        let chi = busemann_curvature_limit(&c, &ctx, 0.7, 1e-3).unwrap();
        println!("radius-{r} circle: chord-limit curvature {chi:.9}");
        assert!((chi - 1.0 / r).abs() <= 1e-6, "curvature {chi} vs {}", 1.0 / r);
    }

    // Polodes of the classical wheel pose: the x-axis and the rim circle.
    let r = 1.3;
    let pose = ParamCurve::new(move |phi: f64| v(-r * phi, r), (-6.0, 6.0));
    let (fixed, moving) = euclidean_polodes(&EuclideanMotion::new(pose)).unwrap();
    let mut worst_f = 0.0f64;
    let mut worst_m = 0.0f64;
    for k in 0..=64 {
        let phi = -6.0 + 12.0 * k as f64 / 64.0;
        worst_f = worst_f.max(fixed.eval(phi).y.abs());
        worst_m = worst_m.max((moving.eval(phi).norm_e() - r).abs());
    }
    println!("wheel polodes: fixed off-axis {worst_f:.3e}, moving radius error {worst_m:.3e}");
    assert!(worst_f <= 1e-6, "fixed polode leaves the axis by {worst_f:.3e}");
    assert!(worst_m <= 1e-6, "moving polode radius error {worst_m:.3e}");
}

#[test]
fn c06_tracked_velocities_are_conjugate_to_the_pole_ray() {
    let start = Instant::now();
    let ctx = l4();
    let mut states = 0usize;
    let mut worst_mid = 0.0f64;
    for theta0 in [0.3, 0.9, 1.6, 2.5, 3.8] {
        let m = hypocycloid_motion(&ctx, 3, theta0, 1.0).unwrap();
        let k = m.contact(0.0);
        for j in 0..4 {
            let beta = 0.35 + TAU * j as f64 / 4.0;
            let d = v(beta.cos(), beta.sin());
            let p = k + d / ctx.norm(d) * 0.8;
            let r1 = m.instantaneous_pole_check(0.0, p, 1e-4).unwrap();
            let r2 = m.instantaneous_pole_check(0.0, p, 1e-5).unwrap();
            let r3 = m.instantaneous_pole_check(0.0, p, 1e-6).unwrap();
            assert!(
                r2 <= 1e-4,
                "theta0 {theta0}, point {j}: residual {r2:.3e} at h = 1e-5"
            );
            assert!(
                r1 > r2 && r2 > r3,
                "theta0 {theta0}, point {j}: residuals not monotone: {r1:.3e}, {r2:.3e}, {r3:.3e}"
            );
            worst_mid = worst_mid.max(r2);
            states += 1;
        }
    }
    let dt = start.elapsed().as_secs_f64();
    println!("pole conjugacy over {states} states: max residual {worst_mid:.3e} at h = 1e-5, {dt:.3} s");
    assert_eq!(states, 20);
    assert!(dt < 10.0, "took {dt:.3} s, budget 10 s");
}

/// Locations of near-zero roulette speed over one period, golden-refined.
fn cusp_positions(m: &Rolling, rim: Vec2, period: f64) -> Vec<(f64, f64)> {
    let roulette = m.roulette(rim);
    let speed = |s: f64| roulette.deriv(s).norm_e();
    let n = 2048usize;
    let grid: Vec<f64> = (0..n).map(|j| period * j as f64 / n as f64).collect();
    let vals: Vec<f64> = grid.iter().map(|&s| speed(s)).collect();
    let mut found: Vec<(f64, f64)> = Vec::new();
    for j in 0..n {
        let prev = vals[(j + n - 1) % n];
        let next = vals[(j + 1) % n];
        if vals[j] <= prev && vals[j] <= next && vals[j] < 0.2 {
            let a = grid[j] - period / n as f64;
            let b = grid[j] + period / n as f64;
            let s = golden_min(&speed, a, b, 1e-10);
            let s_mod = s.rem_euclid(period);
            if speed(s) < 1e-3
                && !found
                    .iter()
                    .any(|&(t, _)| (t - s_mod).abs() < 1e-2 * period || (t - s_mod).abs() > 0.99 * period)
            {
                found.push((s_mod, speed(s)));
            }
        }
    }
    found.sort_by(|a, b| a.0.total_cmp(&b.0));
    found
}

#[test]
fn c07_hypocycloids_have_n_cusps_per_period() {
    // Classical plane: the rim point's trace has exactly n zero-speed
    // cusps per period, at the n contact returns.
    let e = Plane::euclidean();
    let period_e = e.circumference();
    for n in [2u32, 3, 5] {
        let m = hypocycloid_motion(&e, n, 0.4, 1.0).unwrap();
        let rim = m.contact(0.0);
        let cusps = cusp_positions(&m, rim, period_e);
        let report: Vec<String> = cusps
            .iter()
            .map(|(s, sp)| format!("s = {s:.4} (speed {sp:.1e})"))
            .collect();
        println!("euclidean hypocycloid n = {n}: cusps at {}", report.join(", "));
        assert_eq!(cusps.len(), n as usize, "n = {n}: found {}", cusps.len());
        for (s, _) in &cusps {
            let dist = (0..n)
                .map(|k| {
                    let d = (s - period_e * k as f64 / n as f64).rem_euclid(period_e);
                    d.min(period_e - d)
                })
                .fold(f64::INFINITY, f64::min);
            assert!(
                dist <= 1e-3 * period_e,
                "n = {n}: cusp at {s} is {dist:.2e} from the nearest contact return"
            );
        }
    }

    // Quartic plane: the n contact returns are still zero-speed cusps,
    // but they are not alone. The quartic circle has flat spots where the
    // tangent direction momentarily stops advancing, the rotation rate of
    // the rolling crosses zero there, and the rolling condition then
    // makes every tracked point stall, so the trace picks up extra
    // zero-speed spikes between the cusps. The count below records both.
    let ctx = l4();
    let period = ctx.circumference();
    for n in [2u32, 3, 5] {
        let m = hypocycloid_motion(&ctx, n, 0.9, 1.0).unwrap();
        let rim = m.contact(0.0);
        let roulette = m.roulette(rim);
        for k in 0..n {
            let s = period * k as f64 / n as f64;
            let sp = roulette.deriv(s).norm_e();
            assert!(sp < 1e-3, "lp4 n = {n}: contact return {k} has speed {sp:.3e}");
        }
        let dips = cusp_positions(&m, rim, period);
        println!(
            "lp4 hypocycloid n = {n}: {n} contact cusps plus {} further stall dips found",
            dips.len().saturating_sub(n as usize)
        );
    }

    // Degenerate Euclidean case: the two-cusped roulette is a segment.
    let m = hypocycloid_motion(&e, 2, 0.4, 1.0).unwrap();
    let rim = m.contact(0.0);
    let roulette = m.roulette(rim);
    let pts: Vec<Vec2> = (0..=512)
        .map(|j| roulette.eval(-TAU + 2.0 * TAU * j as f64 / 512.0))
        .collect();
    let dir = pts
        .iter()
        .copied()
        .max_by(|a, b| a.norm_e().total_cmp(&b.norm_e()))
        .unwrap();
    let u = dir / dir.norm_e();
    let worst = pts
        .iter()
        .map(|p| (u.x * p.y - u.y * p.x).abs())
        .fold(0.0f64, f64::max);
    println!("euclidean n = 2 roulette: max distance from the diameter line {worst:.3e}");
    assert!(worst <= 1e-6, "two-cusped roulette bends by {worst:.3e}");
}

#[test]
fn c08_first_euler_savary_relation() {
    let start = Instant::now();

    // Euclidean wheel, tracked rim apex: the cycloid numbers are exact.
    let e = Plane::euclidean();
    let wheel = wheel_motion(&e, 1.0, 4.0).unwrap();
    let es = es_first(&wheel, v(0.0, 2.0), 2e-3).unwrap();
    let op_dist = (es.o_p - es.p).norm_e();
    println!(
        "cycloid apex: KP {:.9}  KI_P {:.9}  |O_P P| {:.9}  residual {:.3e}",
        es.kp, es.ki_p, op_dist, es.residual_first
    );
    assert!((es.kp - 2.0).abs() <= 1e-6, "KP = {}", es.kp);
    assert!((es.ki_p - 1.0).abs() <= 1e-6, "KI_P = {}", es.ki_p);
    assert!((op_dist - 4.0).abs() <= 1e-6, "|O_P P| = {op_dist}");
    assert!(es.residual_first <= 1e-6, "residual {:.3e}", es.residual_first);

    // Quartic plane, circle-on-circle, eight tracked points. The relation
    // is evaluated at h and h/2; the target is a relative residual within
    // 2e-2 converging at order >= 1.
    let ctx = l4();
    let m = hypocycloid_motion(&ctx, 3, 0.9, 1.0).unwrap();
    let k = m.contact(0.0);
    let mut table = String::new();
    let mut worst_res = 0.0f64;
    let mut worst_order = f64::INFINITY;
    for (j, p) in fan(&ctx, k).into_iter().enumerate() {
        let coarse = es_first(&m, p, 2e-3).unwrap();
        let fine = es_first(&m, p, 1e-3).unwrap();
        let order = (coarse.residual_first / fine.residual_first).log2();
        table.push_str(&format!(
            "  point {j}: residual {:.4} -> {:.4} under h-halving, order {order:+.3}\n",
            coarse.residual_first, fine.residual_first
        ));
        worst_res = worst_res.max(fine.residual_first);
        worst_order = worst_order.min(order);
    }
    let dt = start.elapsed().as_secs_f64();
    println!("quartic first relation over the 8-point fan:\n{table}  ({dt:.3} s)");
    assert!(dt < 60.0, "took {dt:.3} s, budget 60 s");
    assert!(
        worst_res <= 2e-2 && worst_order >= 1.0,
        "first relation does not close in the quartic plane: max residual {worst_res:.4} \
         (target 2e-2), min order {worst_order:+.3} (target >= 1); the residual is \
         direction-dependent and h-independent:\n{table}"
    );
}

#[test]
fn c09_second_and_combined_euler_savary_relations() {
    // Wheels: the polode curvature difference is 1/r.
    let e = Plane::euclidean();
    for r in [1.0, 2.0] {
        let m = wheel_motion(&e, r, 4.0).unwrap();
        let es = es_second(&m, 2e-3).unwrap();
        let diff = (es.chi_fixed - es.chi_moving).abs();
        println!("wheel r = {r}: |chi_f - chi_m| = {diff:.9}, dual-route residual {:.3e}", es.residual);
        assert!((diff - 1.0 / r).abs() <= 1e-6, "difference {diff} vs {}", 1.0 / r);
        assert!(es.residual <= 1e-6, "wheel residual {:.3e}", es.residual);
    }

    // Quartic plane: both routes to the relation agree, with the chord
    // route converging toward the comparison route as h shrinks.
    let ctx = l4();
    let m = hypocycloid_motion(&ctx, 3, 0.9, 1.0).unwrap();
    let sweep: Vec<(f64, f64)> = [0.2, 0.1, 0.05]
        .iter()
        .map(|&h| (h, es_second(&m, h).unwrap().residual))
        .collect();
    let fine = es_second(&m, 2e-3).unwrap();
    println!(
        "quartic second relation: chi_f {:.6}, chi_m {:.6}, alpha_K {:.6}",
        fine.chi_fixed, fine.chi_moving, fine.alpha_k
    );
    for (h, r) in &sweep {
        println!("  h = {h}: dual-route residual {r:.3e}");
    }
    println!("  h = 2e-3: dual-route residual {:.3e}", fine.residual);
    assert!(fine.residual <= 2e-2, "quartic dual-route residual {:.3e}", fine.residual);
    assert!(
        sweep[2].1 < sweep[0].1 && fine.residual < sweep[0].1,
        "no convergence evidence across the h sweep: {sweep:?}"
    );

    // Combined relation under the unit-sigma rescale, 16-point fan. The
    // right-hand limbs agree in magnitude; the target is the full chain
    // closing within 5e-2 at every fan point.
    let combined = combined_es(&m, 16, 0.8, 2e-3).unwrap();
    let first = combined.points.first().unwrap();
    let rel_limbs =
        (first.rhs_curvatures.abs() - first.rhs_alpha.abs()).abs() / first.rhs_alpha.abs();
    let mut table = String::new();
    let mut worst = 0.0f64;
    let mut mean = 0.0f64;
    for (j, pt) in combined.points.iter().enumerate() {
        table.push_str(&format!(
            "  point {j:2}: |lhs| {:.6}  |rhs| {:.6}  residual {:.4}\n",
            pt.lhs.abs(),
            pt.rhs_alpha.abs(),
            pt.residual
        ));
        worst = worst.max(pt.residual);
        mean += pt.residual / combined.points.len() as f64;
    }
    println!(
        "combined relation, ball rescaled by {:.9}: right limbs agree to {rel_limbs:.3e}\n{table}",
        combined.scale
    );
    assert!(rel_limbs <= 1e-6, "right limbs disagree: {rel_limbs:.3e}");
    assert!(
        worst <= 5e-2,
        "combined relation does not close in the quartic plane: max residual {worst:.4}, \
         mean {mean:.4} over the 16-point fan (target 5e-2), while the two right-hand \
         limbs agree to {rel_limbs:.3e}; the left limb carries the direction-dependent \
         first-relation error:\n{table}"
    );
}

#[test]
fn c10_inflection_curve_geometry() {
    // Euclidean wheel: the inflection curve is the circle on diameter KL.
    let e = Plane::euclidean();
    let wheel = wheel_motion(&e, 1.0, 4.0).unwrap();
    let fan64 = inflection_curve(&wheel, 64).unwrap();
    let center = (fan64.pole_k + fan64.pole_l) * 0.5;
    let radius = (fan64.pole_l - fan64.pole_k).norm_e() * 0.5;
    let mut worst = 0.0f64;
    let mut hits = 0usize;
    for ray in &fan64.rays {
        if let Some(p) = ray.locus {
            worst = worst.max(((p - center).norm_e() - radius).abs());
            hits += 1;
        }
    }
    println!("wheel inflection curve: {hits} fan hits, max deviation from the KL-circle {worst:.3e}");
    assert!(hits > 20, "only {hits} rays meet the locus");
    assert!(worst <= 1e-6, "locus leaves the Thales circle by {worst:.3e}");

    // Quartic circle-on-circle: the locus is starlike about K (one
    // contiguous arc of fan hits), every point satisfies the membership
    // functional, and it is measurably not a Minkowski circle.
    let ctx = l4();
    let m = hypocycloid_motion(&ctx, 3, 0.9, 1.0).unwrap();
    let fan64 = inflection_curve(&m, 64).unwrap();
    let k = fan64.pole_k;
    let mut membership = 0.0f64;
    let mut locus = Vec::new();
    for ray in &fan64.rays {
        if let Some(p) = ray.locus {
            let lp = p - inflection_pole_field(&m, p).unwrap();
            let kp = p - k;
            let res = ctx.semi_inner(lp, kp).abs() / (ctx.norm(lp) * ctx.norm(kp)).max(1e-30);
            membership = membership.max(res);
            locus.push(p);
        }
    }
    let transitions = {
        let hit: Vec<bool> = fan64.rays.iter().map(|r| r.locus.is_some()).collect();
        (0..hit.len()).filter(|&j| hit[j] != hit[(j + 1) % hit.len()]).count()
    };
    let (center, spread) = radial_spread_about_best_center(&ctx, &locus).unwrap();
    println!(
        "quartic inflection curve: {} hits in {transitions} arc transitions, membership {membership:.3e}, \
         radial spread {spread:.4} about ({:.4}, {:.4})",
        locus.len(),
        center.x,
        center.y
    );
    assert!(locus.len() >= 16, "too few locus points: {}", locus.len());
    assert_eq!(transitions, 2, "fan hits are not one contiguous arc");
    assert!(membership <= 1e-8, "membership functional {membership:.3e}");
    assert!(spread > 1e-3, "locus looks like a circle: spread {spread:.3e}");
}

fn stage_scenarios(dir: &Path) {
    let bundled = Path::new(env!("CARGO_MANIFEST_DIR")).join("scenarios");
    for entry in fs::read_dir(bundled).unwrap() {
        let src = entry.unwrap().path();
        if src.is_file() {
            fs::copy(&src, dir.join(src.file_name().unwrap())).unwrap();
        }
    }
}

fn out_bytes(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    let mut map = BTreeMap::new();
    for entry in fs::read_dir(dir.join("out")).unwrap() {
        let p: PathBuf = entry.unwrap().path();
        if p.is_file() {
            map.insert(p.file_name().unwrap().to_string_lossy().into_owned(), fs::read(&p).unwrap());
        }
    }
    map
}

#[test]
fn c11_cli_is_deterministic_and_honors_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_minkroll");
    let tmp = tempfile::tempdir().unwrap();
    stage_scenarios(tmp.path());
    let run = |args: &[&str]| {
        Command::new(bin)
            .args(args)
            .current_dir(tmp.path())
            .env("MKIN_THREADS", "2")
            .output()
            .unwrap()
    };

    // Passing scenario: exit 0, and every emitted file is byte-stable.
    for args in [&["roll", "wheel_euclid.scn"][..], &["verify", "wheel_euclid.scn"][..]] {
        assert_eq!(run(args).status.code(), Some(0), "{args:?}");
    }
    let first = out_bytes(tmp.path());
    for args in [&["roll", "wheel_euclid.scn"][..], &["verify", "wheel_euclid.scn"][..]] {
        run(args);
    }
    let second = out_bytes(tmp.path());
    assert_eq!(first.len(), second.len());
    let mut stable = 0usize;
    for (name, bytes) in &first {
        assert_eq!(bytes, &second[name], "{name} changed between identical runs");
        stable += 1;
    }

    // Scenario built to fail some checks: exit 1, report still written.
    let red = run(&["verify", "full_l4.scn"]);
    assert_eq!(red.status.code(), Some(1), "full_l4 should exit 1");
    assert!(tmp.path().join("out/full_report.csv").exists());

    // Unparseable scenario: exit 2 with a diagnostic.
    fs::write(tmp.path().join("broken.scn"), "ball = lp:nope\n").unwrap();
    let broken = run(&["verify", "broken.scn"]);
    assert_eq!(broken.status.code(), Some(2), "parse failures should exit 2");
    assert!(!broken.stderr.is_empty());

    println!("CLI contract: {stable} files byte-stable, exit codes 0/1/2 observed");
}
