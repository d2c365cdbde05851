//! `minkroll`: rotations, rolling motions and curvature checks in normed
//! planes, driven by scenario files.
//!
//! Exit codes: 0 all checks pass, 1 a verification check failed, 2 bad
//! usage, unparsable scenario, or I/O failure.

use minkroll_cli::{emit, run, scenario};

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use minkroll::error::{Error, Result};
use minkroll::motion::hypocycloid_motion;
use minkroll::numerics::golden_min;
use minkroll::plane::PlaneContext;
use minkroll::vec2::Vector2;

#[derive(Parser)]
#[command(name = "minkroll", version, about = "rolling motions and curvature in normed planes")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print basic invariants of a unit ball (circumference, sigma, area)
    NormInfo {
        /// euclidean | lp:<p> | polygon:<path> | radial:<path>
        ball: String,
    },
    /// Apply a generalized rotation to a point
    Rotate {
        /// euclidean | lp:<p> | polygon:<path> | radial:<path>
        ball: String,
        /// arclen | area | density:<path>
        measure: String,
        /// rotation angle (generalized measure units, full turn = 2 pi)
        #[arg(long)]
        theta: f64,
        /// point as "x,y"
        #[arg(long)]
        point: String,
    },
    /// Roll a scenario's motion and write roulette CSVs and the overlay SVG
    Roll { scenario: PathBuf },
    /// Sample a scenario's inflection curve into CSV and SVG
    Inflection { scenario: PathBuf },
    /// Run the verification checks a scenario enables
    Verify {
        scenario: PathBuf,
        /// run exactly one check: statement1|es1|es2|combined|brass|laws
        #[arg(long)]
        only: Option<String>,
    },
    /// Built-in demonstrations
    Demo {
        #[command(subcommand)]
        what: DemoCmd,
    },
}

#[derive(Subcommand)]
enum DemoCmd {
    /// Roll a circle inside an n times larger one and report the cusps
    Hypocycloid {
        #[arg(long)]
        n: u32,
    },
}

fn parse_point(s: &str) -> Result<Vector2<f64>> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::BadParams(format!("expected `x,y`, got `{s}`")));
    }
    let x = parts[0]
        .trim()
        .parse::<f64>()
        .map_err(|_| Error::BadParams(format!("bad number `{}`", parts[0])))?;
    let y = parts[1]
        .trim()
        .parse::<f64>()
        .map_err(|_| Error::BadParams(format!("bad number `{}`", parts[1])))?;
    Ok(Vector2::new(x, y))
}

fn parse_ball_arg(s: &str) -> Result<PlaneContext<f64>> {
    let spec = scenario::parse_scenario(&format!("ball = {s}\n"))?;
    run::build_context(&spec.ball, Path::new("."))
}

fn load_scenario(path: &Path) -> Result<(scenario::Scenario, PathBuf)> {
    let text = std::fs::read_to_string(path)?;
    let sc = scenario::parse_scenario(&text)?;
    let base = path
        .parent()
        .filter(|p| !p.as_os_str().is_empty())
        .map(|p| p.to_path_buf())
        .unwrap_or_else(|| PathBuf::from("."));
    Ok((sc, base))
}

fn norm_info(ball: &str) -> Result<()> {
    let ctx = parse_ball_arg(ball)?;
    let circ = ctx.circumference();
    println!("ball            {ball}");
    println!("circumference   {}", emit::fmt_sig(circ));
    println!("sigma_plane     {}", emit::fmt_sig(ctx.sigma_plane()));
    println!(
        "euclid_area     {}",
        emit::fmt_sig(std::f64::consts::PI / ctx.sigma_plane())
    );
    println!("smooth_boundary {}", ctx.is_smooth());
    println!(
        "length_bounds   6 <= {} <= 8: {}",
        emit::fmt_sig(circ),
        circ >= 6.0 - 1e-9 && circ <= 8.0 + 1e-9
    );
    Ok(())
}

fn rotate(ball: &str, measure: &str, theta: f64, point: &str) -> Result<()> {
    let ctx = parse_ball_arg(ball)?;
    let spec = scenario::parse_scenario(&format!("measure = {measure}\n"))?;
    let m = run::build_measure(&spec.measure, &ctx, Path::new("."))?;
    let x = parse_point(point)?;
    let y = m.rotation(theta).rotate(x)?;
    println!("{} {}", emit::fmt_sig(y.x), emit::fmt_sig(y.y));
    Ok(())
}

fn demo_hypocycloid(n: u32) -> Result<()> {
    let ctx = PlaneContext::<f64>::euclidean();
    let m = hypocycloid_motion(&ctx, n, 0.0, 1.0)?;
    let p = m.contact(0.0);
    let roulette = m.roulette(p);
    let circ = ctx.circumference();
    let speed = |s: f64| roulette.deriv(s).norm_e();

    // cusps are the zeros of the rim speed over one trip around the ring
    let grid = 2048;
    let mut cusps: Vec<f64> = Vec::new();
    for i in 0..grid {
        let s0 = -circ / 2.0 + circ * i as f64 / grid as f64;
        let s1 = s0 + circ / grid as f64;
        let s = golden_min(&speed, s0, s1, 1e-10);
        if speed(s) < 1e-3 && !cusps.iter().any(|c| (c - s).abs() < 1e-3 * circ) {
            cusps.push(s);
        }
    }
    println!("hypocycloid n = {n}");
    println!("cusps per turn  {}", cusps.len());
    for (i, s) in cusps.iter().enumerate() {
        let pt = roulette.eval(*s);
        println!(
            "  cusp[{i}] s = {}  at ({}, {})",
            emit::fmt_sig(*s),
            emit::fmt_sig(pt.x),
            emit::fmt_sig(pt.y)
        );
    }
    Ok(())
}

fn dispatch(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::NormInfo { ball } => {
            norm_info(&ball)?;
            Ok(true)
        }
        Cmd::Rotate { ball, measure, theta, point } => {
            rotate(&ball, &measure, theta, &point)?;
            Ok(true)
        }
        Cmd::Roll { scenario } => {
            let (sc, base) = load_scenario(&scenario)?;
            run::run_roll(&sc, &base)?;
            Ok(true)
        }
        Cmd::Inflection { scenario } => {
            let (sc, base) = load_scenario(&scenario)?;
            run::run_inflection(&sc, &base)?;
            Ok(true)
        }
        Cmd::Verify { scenario, only } => {
            let (sc, base) = load_scenario(&scenario)?;
            let only = only.as_deref().map(run::CheckKind::from_flag).transpose()?;
            let report = run::run_verify(&sc, &base, only)?;
            print!("{}", emit::render_report_text(&report.rows));
            Ok(report.all_pass)
        }
        Cmd::Demo { what } => {
            match what {
                DemoCmd::Hypocycloid { n } => demo_hypocycloid(n)?,
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
