//! Scenario files: a flat key/value format with named blocks.
//!
//! ```text
//! # top-level keys
//! ball = lp:4              # euclidean | lp:<p> | polygon:<path> | radial:<path>
//! measure = arclen         # arclen | area | density:<path>
//! seed = 42
//!
//! [curve big]
//! kind = unitcircle
//!
//! [curve small]
//! kind = homothet
//! of = big
//! center = 0.5, 0.5
//! ratio = 0.5
//!
//! [motion]                 # either a preset ...
//! preset = wheel
//! radius = 1
//! steps = 64
//! s_max = 4
//!
//! [motion]                 # ... or two named polodes with contact params
//! fixed = big
//! moving = small
//! contact_fixed = 0.9
//! contact_moving = 0.9
//! steps = 64
//! s_max = 1.5
//!
//! [track]
//! points = 0, 2; 1, 0.5
//!
//! [verify]
//! statement1 = true
//! es1 = true
//! es2 = true
//! combined = false
//! brass = true
//! group_laws = false
//!
//! [tolerances]
//! es1 = 2e-2
//!
//! [output]
//! roulette_csv = out/roulette.csv
//! inflection_csv = out/inflection.csv
//! svg = out/overlay.svg
//! report = out/report.csv
//! ```
//!
//! Unknown keys are rejected, names must resolve, `parse(print(s)) == s`.

use std::fmt::Write as _;

use minkroll::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum BallSpec {
    Euclidean,
    Lp(f64),
    Polygon(String),
    Radial(String),
}

#[derive(Debug, Clone, PartialEq)]
pub enum MeasureSpec {
    Arclen,
    Area,
    Density(String),
}

#[derive(Debug, Clone, PartialEq)]
pub enum CurveSpec {
    Circle { center: (f64, f64), radius: f64 },
    UnitCircle,
    Ellipse { p: f64, eps: f64 },
    Nephroid,
    Line { origin: (f64, f64), dir: (f64, f64), span: f64 },
    Homothet { of: String, center: (f64, f64), ratio: f64 },
    Samples { path: String, closed: bool },
}

#[derive(Debug, Clone, PartialEq)]
pub enum MotionSpec {
    Wheel {
        radius: f64,
        steps: usize,
        s_max: f64,
    },
    Hypocycloid {
        n: u32,
        theta0: f64,
        radius: f64,
        steps: usize,
        s_max: f64,
    },
    Generic {
        fixed: String,
        moving: String,
        contact_fixed: f64,
        contact_moving: f64,
        steps: usize,
        s_max: f64,
    },
}

impl MotionSpec {
    pub fn steps(&self) -> usize {
        match self {
            MotionSpec::Wheel { steps, .. }
            | MotionSpec::Hypocycloid { steps, .. }
            | MotionSpec::Generic { steps, .. } => *steps,
        }
    }

    pub fn s_max(&self) -> f64 {
        match self {
            MotionSpec::Wheel { s_max, .. }
            | MotionSpec::Hypocycloid { s_max, .. }
            | MotionSpec::Generic { s_max, .. } => *s_max,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyToggles {
    pub statement1: bool,
    pub es1: bool,
    pub es2: bool,
    pub combined: bool,
    pub brass: bool,
    pub group_laws: bool,
}

impl Default for VerifyToggles {
    fn default() -> Self {
        VerifyToggles {
            statement1: false,
            es1: false,
            es2: false,
            combined: false,
            brass: false,
            group_laws: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub statement1: f64,
    pub es1: f64,
    pub es2: f64,
    pub combined: f64,
    pub brass: f64,
    pub group_laws: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            statement1: 1e-4,
            es1: 2e-2,
            es2: 2e-2,
            combined: 5e-2,
            brass: 1e-6,
            group_laws: 1e-8,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct OutputSpec {
    pub roulette_csv: Option<String>,
    pub inflection_csv: Option<String>,
    pub svg: Option<String>,
    pub report: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub ball: BallSpec,
    pub measure: MeasureSpec,
    pub seed: u64,
    pub curves: Vec<(String, CurveSpec)>,
    pub motion: Option<MotionSpec>,
    pub track: Vec<(f64, f64)>,
    pub verify: VerifyToggles,
    pub tolerances: Tolerances,
    pub output: OutputSpec,
}

impl Default for Scenario {
    fn default() -> Self {
        Scenario {
            ball: BallSpec::Euclidean,
            measure: MeasureSpec::Arclen,
            seed: 42,
            curves: Vec::new(),
            motion: None,
            track: Vec::new(),
            verify: VerifyToggles::default(),
            tolerances: Tolerances::default(),
            output: OutputSpec::default(),
        }
    }
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::ParseError { line, msg: msg.into() }
}

fn parse_f64(line: usize, s: &str) -> Result<f64> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| perr(line, format!("expected a number, got `{}`", s.trim())))
}

fn parse_pair(line: usize, s: &str) -> Result<(f64, f64)> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(perr(line, format!("expected `x, y`, got `{}`", s.trim())));
    }
    Ok((parse_f64(line, parts[0])?, parse_f64(line, parts[1])?))
}

fn parse_bool(line: usize, s: &str) -> Result<bool> {
    match s.trim() {
        "true" => Ok(true),
        "false" => Ok(false),
        other => Err(perr(line, format!("expected true or false, got `{other}`"))),
    }
}

fn parse_ball(line: usize, s: &str) -> Result<BallSpec> {
    let s = s.trim();
    if s == "euclidean" {
        return Ok(BallSpec::Euclidean);
    }
    if let Some(rest) = s.strip_prefix("lp:") {
        if rest == "inf" {
            return Ok(BallSpec::Lp(f64::INFINITY));
        }
        return Ok(BallSpec::Lp(parse_f64(line, rest)?));
    }
    if let Some(rest) = s.strip_prefix("polygon:") {
        return Ok(BallSpec::Polygon(rest.trim().to_string()));
    }
    if let Some(rest) = s.strip_prefix("radial:") {
        return Ok(BallSpec::Radial(rest.trim().to_string()));
    }
    Err(perr(line, format!("unknown ball `{s}` (euclidean | lp:<p> | polygon:<path> | radial:<path>)")))
}

fn parse_measure(line: usize, s: &str) -> Result<MeasureSpec> {
    let s = s.trim();
    match s {
        "arclen" => return Ok(MeasureSpec::Arclen),
        "area" => return Ok(MeasureSpec::Area),
        _ => {}
    }
    if let Some(rest) = s.strip_prefix("density:") {
        return Ok(MeasureSpec::Density(rest.trim().to_string()));
    }
    Err(perr(line, format!("unknown measure `{s}` (arclen | area | density:<path>)")))
}

/// Accumulates `key = value` lines of one block before they are assembled
/// into a typed spec, keeping line numbers for error reporting.
struct RawBlock {
    header_line: usize,
    kind: String,
    name: String,
    entries: Vec<(usize, String, String)>,
}

impl RawBlock {
    fn take(&self, key: &str) -> Option<(usize, &str)> {
        self.entries
            .iter()
            .find(|(_, k, _)| k == key)
            .map(|(l, _, v)| (*l, v.as_str()))
    }

    fn require(&self, key: &str) -> Result<(usize, &str)> {
        self.take(key).ok_or_else(|| {
            perr(
                self.header_line,
                format!("block `{}` is missing required key `{key}`", self.describe()),
            )
        })
    }

    fn describe(&self) -> String {
        if self.name.is_empty() {
            self.kind.clone()
        } else {
            format!("{} {}", self.kind, self.name)
        }
    }

    fn reject_unknown(&self, allowed: &[&str]) -> Result<()> {
        for (line, k, _) in &self.entries {
            if !allowed.contains(&k.as_str()) {
                return Err(Error::UnknownKey(format!(
                    "`{k}` in block `{}` (line {line})",
                    self.describe()
                )));
            }
        }
        Ok(())
    }
}

fn assemble_curve(b: &RawBlock) -> Result<CurveSpec> {
    let (kline, kind) = b.require("kind")?;
    match kind.trim() {
        "circle" => {
            b.reject_unknown(&["kind", "center", "radius"])?;
            let (l, c) = b.require("center")?;
            let center = parse_pair(l, c)?;
            let (l, r) = b.require("radius")?;
            Ok(CurveSpec::Circle { center, radius: parse_f64(l, r)? })
        }
        "unitcircle" => {
            b.reject_unknown(&["kind"])?;
            Ok(CurveSpec::UnitCircle)
        }
        "ellipse" => {
            b.reject_unknown(&["kind", "p", "eps"])?;
            let (l, p) = b.require("p")?;
            let p = parse_f64(l, p)?;
            let (l, e) = b.require("eps")?;
            Ok(CurveSpec::Ellipse { p, eps: parse_f64(l, e)? })
        }
        "nephroid" => {
            b.reject_unknown(&["kind"])?;
            Ok(CurveSpec::Nephroid)
        }
        "line" => {
            b.reject_unknown(&["kind", "origin", "dir", "span"])?;
            let (l, o) = b.require("origin")?;
            let origin = parse_pair(l, o)?;
            let (l, d) = b.require("dir")?;
            let dir = parse_pair(l, d)?;
            let (l, s) = b.require("span")?;
            Ok(CurveSpec::Line { origin, dir, span: parse_f64(l, s)? })
        }
        "homothet" => {
            b.reject_unknown(&["kind", "of", "center", "ratio"])?;
            let (_, of) = b.require("of")?;
            let (l, c) = b.require("center")?;
            let center = parse_pair(l, c)?;
            let (l, r) = b.require("ratio")?;
            Ok(CurveSpec::Homothet {
                of: of.trim().to_string(),
                center,
                ratio: parse_f64(l, r)?,
            })
        }
        "samples" => {
            b.reject_unknown(&["kind", "path", "closed"])?;
            let (_, path) = b.require("path")?;
            let closed = match b.take("closed") {
                Some((l, v)) => parse_bool(l, v)?,
                None => false,
            };
            Ok(CurveSpec::Samples { path: path.trim().to_string(), closed })
        }
        other => Err(perr(kline, format!("unknown curve kind `{other}`"))),
    }
}

fn assemble_motion(b: &RawBlock) -> Result<MotionSpec> {
    let steps = match b.take("steps") {
        Some((l, v)) => {
            let n = parse_f64(l, v)?;
            if n < 16.0 || n.fract() != 0.0 {
                return Err(perr(l, "steps must be an integer of at least 16"));
            }
            n as usize
        }
        None => 64,
    };
    let s_max = match b.take("s_max") {
        Some((l, v)) => {
            let s = parse_f64(l, v)?;
            if !(s > 0.0) {
                return Err(perr(l, "s_max must be positive"));
            }
            s
        }
        None => 1.0,
    };
    if let Some((pline, preset)) = b.take("preset") {
        match preset.trim() {
            "wheel" => {
                b.reject_unknown(&["preset", "radius", "steps", "s_max"])?;
                let radius = match b.take("radius") {
                    Some((l, v)) => parse_f64(l, v)?,
                    None => 1.0,
                };
                Ok(MotionSpec::Wheel { radius, steps, s_max })
            }
            "hypocycloid" => {
                b.reject_unknown(&["preset", "n", "theta0", "radius", "steps", "s_max"])?;
                let (l, n) = b.require("n")?;
                let n = parse_f64(l, n)?;
                if n < 2.0 || n.fract() != 0.0 {
                    return Err(perr(l, "n must be an integer of at least 2"));
                }
                let theta0 = match b.take("theta0") {
                    Some((l, v)) => parse_f64(l, v)?,
                    None => 0.0,
                };
                let radius = match b.take("radius") {
                    Some((l, v)) => parse_f64(l, v)?,
                    None => 1.0,
                };
                Ok(MotionSpec::Hypocycloid { n: n as u32, theta0, radius, steps, s_max })
            }
            other => Err(perr(pline, format!("unknown motion preset `{other}`"))),
        }
    } else {
        b.reject_unknown(&[
            "fixed",
            "moving",
            "contact_fixed",
            "contact_moving",
            "steps",
            "s_max",
        ])?;
        let (_, fixed) = b.require("fixed")?;
        let (_, moving) = b.require("moving")?;
        let contact_fixed = match b.take("contact_fixed") {
            Some((l, v)) => parse_f64(l, v)?,
            None => 0.0,
        };
        let contact_moving = match b.take("contact_moving") {
            Some((l, v)) => parse_f64(l, v)?,
            None => 0.0,
        };
        Ok(MotionSpec::Generic {
            fixed: fixed.trim().to_string(),
            moving: moving.trim().to_string(),
            contact_fixed,
            contact_moving,
            steps,
            s_max,
        })
    }
}

pub fn parse_scenario(text: &str) -> Result<Scenario> {
    let mut sc = Scenario::default();
    let mut blocks: Vec<RawBlock> = Vec::new();
    let mut in_block = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if let Some(inner) = line.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| perr(line_no, "unterminated block header"))?
                .trim();
            let mut parts = inner.split_whitespace();
            let kind = parts
                .next()
                .ok_or_else(|| perr(line_no, "empty block header"))?
                .to_string();
            let name = parts.next().unwrap_or("").to_string();
            if parts.next().is_some() {
                return Err(perr(line_no, "block header has too many words"));
            }
            match kind.as_str() {
                "curve" if name.is_empty() => {
                    return Err(perr(line_no, "curve block needs a name: [curve <name>]"))
                }
                "curve" | "motion" | "track" | "verify" | "tolerances" | "output" => {}
                other => return Err(perr(line_no, format!("unknown block `{other}`"))),
            }
            blocks.push(RawBlock { header_line: line_no, kind, name, entries: Vec::new() });
            in_block = true;
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| perr(line_no, "expected `key = value`"))?;
        let key = key.trim().to_string();
        let value = value.trim().to_string();
        if in_block {
            blocks.last_mut().unwrap().entries.push((line_no, key, value));
        } else {
            match key.as_str() {
                "ball" => sc.ball = parse_ball(line_no, &value)?,
                "measure" => sc.measure = parse_measure(line_no, &value)?,
                "seed" => {
                    sc.seed = value.parse::<u64>().map_err(|_| {
                        perr(line_no, format!("seed must be a nonnegative integer, got `{value}`"))
                    })?
                }
                other => return Err(Error::UnknownKey(format!("`{other}` (line {line_no})"))),
            }
        }
    }

    for b in &blocks {
        match b.kind.as_str() {
            "curve" => {
                if sc.curves.iter().any(|(n, _)| *n == b.name) {
                    return Err(perr(b.header_line, format!("duplicate curve name `{}`", b.name)));
                }
                let spec = assemble_curve(b)?;
                sc.curves.push((b.name.clone(), spec));
            }
            "motion" => {
                if sc.motion.is_some() {
                    return Err(perr(b.header_line, "more than one motion block"));
                }
                sc.motion = Some(assemble_motion(b)?);
            }
            "track" => {
                b.reject_unknown(&["points"])?;
                if let Some((l, v)) = b.take("points") {
                    for part in v.split(';') {
                        if part.trim().is_empty() {
                            continue;
                        }
                        sc.track.push(parse_pair(l, part)?);
                    }
                }
            }
            "verify" => {
                b.reject_unknown(&[
                    "statement1",
                    "es1",
                    "es2",
                    "combined",
                    "brass",
                    "group_laws",
                ])?;
                for (l, k, v) in &b.entries {
                    let on = parse_bool(*l, v)?;
                    match k.as_str() {
                        "statement1" => sc.verify.statement1 = on,
                        "es1" => sc.verify.es1 = on,
                        "es2" => sc.verify.es2 = on,
                        "combined" => sc.verify.combined = on,
                        "brass" => sc.verify.brass = on,
                        "group_laws" => sc.verify.group_laws = on,
                        _ => unreachable!(),
                    }
                }
            }
            "tolerances" => {
                b.reject_unknown(&[
                    "statement1",
                    "es1",
                    "es2",
                    "combined",
                    "brass",
                    "group_laws",
                ])?;
                for (l, k, v) in &b.entries {
                    let t = parse_f64(*l, v)?;
                    if !(t > 0.0) {
                        return Err(perr(*l, "tolerance must be positive"));
                    }
                    match k.as_str() {
                        "statement1" => sc.tolerances.statement1 = t,
                        "es1" => sc.tolerances.es1 = t,
                        "es2" => sc.tolerances.es2 = t,
                        "combined" => sc.tolerances.combined = t,
                        "brass" => sc.tolerances.brass = t,
                        "group_laws" => sc.tolerances.group_laws = t,
                        _ => unreachable!(),
                    }
                }
            }
            "output" => {
                b.reject_unknown(&["roulette_csv", "inflection_csv", "svg", "report"])?;
                for (_, k, v) in &b.entries {
                    let v = Some(v.clone());
                    match k.as_str() {
                        "roulette_csv" => sc.output.roulette_csv = v,
                        "inflection_csv" => sc.output.inflection_csv = v,
                        "svg" => sc.output.svg = v,
                        "report" => sc.output.report = v,
                        _ => unreachable!(),
                    }
                }
            }
            _ => unreachable!(),
        }
    }

    // cross references must resolve
    let names: Vec<&str> = sc.curves.iter().map(|(n, _)| n.as_str()).collect();
    for (name, spec) in &sc.curves {
        if let CurveSpec::Homothet { of, .. } = spec {
            if !names.contains(&of.as_str()) {
                return Err(Error::UnresolvedName(format!(
                    "curve `{name}` is a homothet of undefined curve `{of}`"
                )));
            }
            if of == name {
                return Err(Error::UnresolvedName(format!(
                    "curve `{name}` cannot be a homothet of itself"
                )));
            }
        }
    }
    if let Some(MotionSpec::Generic { fixed, moving, .. }) = &sc.motion {
        for n in [fixed, moving] {
            if !names.contains(&n.as_str()) {
                return Err(Error::UnresolvedName(format!(
                    "motion references undefined curve `{n}`"
                )));
            }
        }
    }
    Ok(sc)
}

fn fmt_f(x: f64) -> String {
    // shortest round-trip form keeps printed scenarios tidy and exact
    format!("{x}")
}

/// Canonical text form; `parse_scenario(print_scenario(s)) == s`.
pub fn print_scenario(sc: &Scenario) -> String {
    let mut out = String::new();
    let ball = match &sc.ball {
        BallSpec::Euclidean => "euclidean".to_string(),
        BallSpec::Lp(p) if p.is_infinite() => "lp:inf".to_string(),
        BallSpec::Lp(p) => format!("lp:{}", fmt_f(*p)),
        BallSpec::Polygon(p) => format!("polygon:{p}"),
        BallSpec::Radial(p) => format!("radial:{p}"),
    };
    let _ = writeln!(out, "ball = {ball}");
    let measure = match &sc.measure {
        MeasureSpec::Arclen => "arclen".to_string(),
        MeasureSpec::Area => "area".to_string(),
        MeasureSpec::Density(p) => format!("density:{p}"),
    };
    let _ = writeln!(out, "measure = {measure}");
    let _ = writeln!(out, "seed = {}", sc.seed);

    for (name, spec) in &sc.curves {
        let _ = writeln!(out, "\n[curve {name}]");
        match spec {
            CurveSpec::Circle { center, radius } => {
                let _ = writeln!(out, "kind = circle");
                let _ = writeln!(out, "center = {}, {}", fmt_f(center.0), fmt_f(center.1));
                let _ = writeln!(out, "radius = {}", fmt_f(*radius));
            }
            CurveSpec::UnitCircle => {
                let _ = writeln!(out, "kind = unitcircle");
            }
            CurveSpec::Ellipse { p, eps } => {
                let _ = writeln!(out, "kind = ellipse");
                let _ = writeln!(out, "p = {}", fmt_f(*p));
                let _ = writeln!(out, "eps = {}", fmt_f(*eps));
            }
            CurveSpec::Nephroid => {
                let _ = writeln!(out, "kind = nephroid");
            }
            CurveSpec::Line { origin, dir, span } => {
                let _ = writeln!(out, "kind = line");
                let _ = writeln!(out, "origin = {}, {}", fmt_f(origin.0), fmt_f(origin.1));
                let _ = writeln!(out, "dir = {}, {}", fmt_f(dir.0), fmt_f(dir.1));
                let _ = writeln!(out, "span = {}", fmt_f(*span));
            }
            CurveSpec::Homothet { of, center, ratio } => {
                let _ = writeln!(out, "kind = homothet");
                let _ = writeln!(out, "of = {of}");
                let _ = writeln!(out, "center = {}, {}", fmt_f(center.0), fmt_f(center.1));
                let _ = writeln!(out, "ratio = {}", fmt_f(*ratio));
            }
            CurveSpec::Samples { path, closed } => {
                let _ = writeln!(out, "kind = samples");
                let _ = writeln!(out, "path = {path}");
                let _ = writeln!(out, "closed = {closed}");
            }
        }
    }

    if let Some(m) = &sc.motion {
        let _ = writeln!(out, "\n[motion]");
        match m {
            MotionSpec::Wheel { radius, steps, s_max } => {
                let _ = writeln!(out, "preset = wheel");
                let _ = writeln!(out, "radius = {}", fmt_f(*radius));
                let _ = writeln!(out, "steps = {steps}");
                let _ = writeln!(out, "s_max = {}", fmt_f(*s_max));
            }
            MotionSpec::Hypocycloid { n, theta0, radius, steps, s_max } => {
                let _ = writeln!(out, "preset = hypocycloid");
                let _ = writeln!(out, "n = {n}");
                let _ = writeln!(out, "theta0 = {}", fmt_f(*theta0));
                let _ = writeln!(out, "radius = {}", fmt_f(*radius));
                let _ = writeln!(out, "steps = {steps}");
                let _ = writeln!(out, "s_max = {}", fmt_f(*s_max));
            }
            MotionSpec::Generic {
                fixed,
                moving,
                contact_fixed,
                contact_moving,
                steps,
                s_max,
            } => {
                let _ = writeln!(out, "fixed = {fixed}");
                let _ = writeln!(out, "moving = {moving}");
                let _ = writeln!(out, "contact_fixed = {}", fmt_f(*contact_fixed));
                let _ = writeln!(out, "contact_moving = {}", fmt_f(*contact_moving));
                let _ = writeln!(out, "steps = {steps}");
                let _ = writeln!(out, "s_max = {}", fmt_f(*s_max));
            }
        }
    }

    if !sc.track.is_empty() {
        let _ = writeln!(out, "\n[track]");
        let pts: Vec<String> = sc
            .track
            .iter()
            .map(|(x, y)| format!("{}, {}", fmt_f(*x), fmt_f(*y)))
            .collect();
        let _ = writeln!(out, "points = {}", pts.join("; "));
    }

    let _ = writeln!(out, "\n[verify]");
    let v = &sc.verify;
    let _ = writeln!(out, "statement1 = {}", v.statement1);
    let _ = writeln!(out, "es1 = {}", v.es1);
    let _ = writeln!(out, "es2 = {}", v.es2);
    let _ = writeln!(out, "combined = {}", v.combined);
    let _ = writeln!(out, "brass = {}", v.brass);
    let _ = writeln!(out, "group_laws = {}", v.group_laws);

    let _ = writeln!(out, "\n[tolerances]");
    let t = &sc.tolerances;
    let _ = writeln!(out, "statement1 = {}", fmt_f(t.statement1));
    let _ = writeln!(out, "es1 = {}", fmt_f(t.es1));
    let _ = writeln!(out, "es2 = {}", fmt_f(t.es2));
    let _ = writeln!(out, "combined = {}", fmt_f(t.combined));
    let _ = writeln!(out, "brass = {}", fmt_f(t.brass));
    let _ = writeln!(out, "group_laws = {}", fmt_f(t.group_laws));

    let o = &sc.output;
    if o.roulette_csv.is_some() || o.inflection_csv.is_some() || o.svg.is_some() || o.report.is_some()
    {
        let _ = writeln!(out, "\n[output]");
        if let Some(p) = &o.roulette_csv {
            let _ = writeln!(out, "roulette_csv = {p}");
        }
        if let Some(p) = &o.inflection_csv {
            let _ = writeln!(out, "inflection_csv = {p}");
        }
        if let Some(p) = &o.svg {
            let _ = writeln!(out, "svg = {p}");
        }
        if let Some(p) = &o.report {
            let _ = writeln!(out, "report = {p}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_scenario_parses() {
        let sc = parse_scenario("ball = euclidean\n").unwrap();
        assert_eq!(sc.ball, BallSpec::Euclidean);
        assert_eq!(sc.measure, MeasureSpec::Arclen);
        assert_eq!(sc.seed, 42);
    }

    #[test]
    fn unknown_ball_is_a_parse_error_with_line() {
        let err = parse_scenario("ball = l0\n").unwrap_err();
        match err {
            Error::ParseError { line, msg } => {
                assert_eq!(line, 1);
                assert!(msg.contains("l0"), "{msg}");
            }
            other => panic!("wrong error {other:?}"),
        }
    }

    #[test]
    fn unknown_key_is_named() {
        let err = parse_scenario("bell = euclidean\n").unwrap_err();
        match err {
            Error::UnknownKey(k) => assert!(k.contains("bell"), "{k}"),
            other => panic!("wrong error {other:?}"),
        }
    }

    #[test]
    fn undefined_curve_reference_is_rejected() {
        let text = "\
ball = euclidean
[motion]
fixed = ghost
moving = ghost
steps = 16
s_max = 1
";
        let err = parse_scenario(text).unwrap_err();
        assert!(matches!(err, Error::UnresolvedName(_)), "{err:?}");
    }

    #[test]
    fn steps_floor_is_enforced() {
        let text = "\
[motion]
preset = wheel
steps = 8
s_max = 1
";
        let err = parse_scenario(text).unwrap_err();
        assert!(matches!(err, Error::ParseError { .. }), "{err:?}");
    }

    #[test]
    fn print_parse_round_trip() {
        let text = "\
ball = lp:4
measure = arclen
seed = 7

[curve big]
kind = unitcircle

[curve small]
kind = homothet
of = big
center = 0.729979523838382, 0.919889695607914
ratio = 0.3333333333333333

[motion]
fixed = big
moving = small
contact_fixed = 0.9
contact_moving = 0.9
steps = 64
s_max = 1.5

[track]
points = 0, 2; 1.25, -0.5

[verify]
statement1 = true
es2 = true

[tolerances]
es2 = 1e-3

[output]
svg = out/overlay.svg
report = out/report.csv
";
        let sc = parse_scenario(text).unwrap();
        let printed = print_scenario(&sc);
        let back = parse_scenario(&printed).unwrap();
        assert_eq!(sc, back);
        // and printing is idempotent
        assert_eq!(printed, print_scenario(&back));
    }

    #[test]
    fn comments_and_blanks_are_ignored() {
        let text = "# heading\n\nball = lp:1.5  # inline\n";
        let sc = parse_scenario(text).unwrap();
        assert_eq!(sc.ball, BallSpec::Lp(1.5));
    }
}
