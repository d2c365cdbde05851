//! Deterministic file emitters: CSV tables and a self-contained SVG
//! overlay. Identical inputs produce byte-identical files.

use std::io::Write;
use std::path::Path;

use minkroll::error::{Error, Result};
use minkroll::vec2::Vector2;

/// 12 significant digits, scientific; the one float format used in CSVs.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        // avoid "-0" flapping between runs of algebraically zero results
        return "0.00000000000e0".to_string();
    }
    format!("{x:.11e}")
}

fn create(path: &Path) -> Result<std::fs::File> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            std::fs::create_dir_all(dir)?;
        }
    }
    Ok(std::fs::File::create(path)?)
}

/// One roulette sample row.
#[derive(Debug, Clone, Copy)]
pub struct RouletteRow {
    pub s: f64,
    pub pos: Vector2<f64>,
    pub vel: Vector2<f64>,
    pub acc: Vector2<f64>,
}

pub fn write_roulette_csv(path: &Path, rows: &[RouletteRow]) -> Result<()> {
    let mut f = create(path)?;
    writeln!(f, "s,x,y,vx,vy,ax,ay")?;
    for r in rows {
        writeln!(
            f,
            "{},{},{},{},{},{},{}",
            fmt_sig(r.s),
            fmt_sig(r.pos.x),
            fmt_sig(r.pos.y),
            fmt_sig(r.vel.x),
            fmt_sig(r.vel.y),
            fmt_sig(r.acc.x),
            fmt_sig(r.acc.y),
        )?;
    }
    Ok(())
}

pub fn write_inflection_csv(
    path: &Path,
    rows: &[(Vector2<f64>, Vector2<f64>)],
) -> Result<()> {
    let mut f = create(path)?;
    writeln!(f, "dir_x,dir_y,px,py")?;
    for (dir, p) in rows {
        writeln!(
            f,
            "{},{},{},{}",
            fmt_sig(dir.x),
            fmt_sig(dir.y),
            fmt_sig(p.x),
            fmt_sig(p.y),
        )?;
    }
    Ok(())
}

/// One verification row of the report.
#[derive(Debug, Clone)]
pub struct CheckRow {
    pub quantity: String,
    pub lhs: f64,
    pub rhs: f64,
    pub residual: f64,
    pub tolerance: f64,
    pub h: Option<f64>,
    pub observed_order: Option<f64>,
    pub pass: bool,
}

pub fn write_report_csv(path: &Path, rows: &[CheckRow]) -> Result<()> {
    let mut f = create(path)?;
    writeln!(f, "quantity,lhs,rhs,residual,tolerance,h,observed_order,pass")?;
    for r in rows {
        writeln!(
            f,
            "{},{},{},{},{},{},{},{}",
            r.quantity,
            fmt_sig(r.lhs),
            fmt_sig(r.rhs),
            fmt_sig(r.residual),
            fmt_sig(r.tolerance),
            r.h.map(fmt_sig).unwrap_or_default(),
            r.observed_order.map(fmt_sig).unwrap_or_default(),
            if r.pass { "pass" } else { "FAIL" },
        )?;
    }
    Ok(())
}

pub fn render_report_text(rows: &[CheckRow]) -> String {
    let mut out = String::new();
    let wq = rows
        .iter()
        .map(|r| r.quantity.len())
        .max()
        .unwrap_or(8)
        .max(8);
    out.push_str(&format!(
        "{:<wq$}  {:>15} {:>15} {:>12} {:>9} {:>7}  result\n",
        "check", "lhs", "rhs", "residual", "tol", "order"
    ));
    for r in rows {
        let order = r
            .observed_order
            .map(|o| format!("{o:.2}"))
            .unwrap_or_else(|| "-".into());
        out.push_str(&format!(
            "{:<wq$}  {:>15.6e} {:>15.6e} {:>12.3e} {:>9.1e} {:>7}  {}\n",
            r.quantity,
            r.lhs,
            r.rhs,
            r.residual,
            r.tolerance,
            order,
            if r.pass { "pass" } else { "FAIL" },
        ));
    }
    out
}

/// A polyline with a stroke color, in model coordinates.
#[derive(Debug, Clone)]
pub struct SvgPath {
    pub points: Vec<Vector2<f64>>,
    pub color: &'static str,
    pub closed: bool,
}

/// A labeled marker dot.
#[derive(Debug, Clone)]
pub struct SvgMarker {
    pub at: Vector2<f64>,
    pub label: String,
    pub color: &'static str,
}

/// Renders paths and markers into a fixed 800x800 viewport computed from
/// the joint bounding box plus a 5% margin. Coordinates are rounded to
/// 1e-6 before printing so the output is byte-stable.
pub fn emit_svg(path: &Path, paths: &[SvgPath], markers: &[SvgMarker]) -> Result<()> {
    let pts = paths
        .iter()
        .flat_map(|p| p.points.iter())
        .chain(markers.iter().map(|m| &m.at));
    let mut lo = Vector2::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Vector2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    let mut any = false;
    for p in pts {
        any = true;
        lo.x = lo.x.min(p.x);
        lo.y = lo.y.min(p.y);
        hi.x = hi.x.max(p.x);
        hi.y = hi.y.max(p.y);
    }
    if !any {
        return Err(Error::BadParams("nothing to draw".into()));
    }
    let side = (hi.x - lo.x).max(hi.y - lo.y).max(1e-9);
    let margin = side * 0.05;
    let cx = (lo.x + hi.x) * 0.5;
    let cy = (lo.y + hi.y) * 0.5;
    let half = side * 0.5 + margin;
    let scale = 800.0 / (2.0 * half);
    let to_px = |p: Vector2<f64>| -> (f64, f64) {
        let x = (p.x - cx + half) * scale;
        let y = 800.0 - (p.y - cy + half) * scale;
        ((x * 1e6).round() / 1e6, (y * 1e6).round() / 1e6)
    };

    let mut f = create(path)?;
    writeln!(
        f,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" viewBox="0 0 800 800">"#
    )?;
    writeln!(f, r#"<rect width="800" height="800" fill="white"/>"#)?;
    for p in paths {
        if p.points.is_empty() {
            continue;
        }
        let mut d = String::new();
        for (i, pt) in p.points.iter().enumerate() {
            let (x, y) = to_px(*pt);
            d.push_str(if i == 0 { "M" } else { " L" });
            d.push_str(&format!("{x:.6} {y:.6}"));
        }
        if p.closed {
            d.push_str(" Z");
        }
        writeln!(
            f,
            r#"<path d="{d}" fill="none" stroke="{}" stroke-width="1.5"/>"#,
            p.color
        )?;
    }
    for m in markers {
        let (x, y) = to_px(m.at);
        writeln!(
            f,
            r#"<circle cx="{x:.6}" cy="{y:.6}" r="4" fill="{}"/>"#,
            m.color
        )?;
        writeln!(
            f,
            r#"<text x="{:.6}" y="{:.6}" font-family="monospace" font-size="14" fill="{}">{}</text>"#,
            x + 8.0,
            y - 8.0,
            m.color,
            m.label
        )?;
    }
    writeln!(f, "</svg>")?;
    Ok(())
}
