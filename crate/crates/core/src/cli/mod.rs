//! Command-line front end.
//!
//! [`run`] parses the arguments, dispatches to the library and returns the
//! JSON report together with the process exit code: 0 on success or a
//! passing verdict, 2 when a verification fails (including configurations
//! that do not satisfy the hypothesis being checked), 1 on input errors.

pub mod scene;
pub mod svg;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

use crate::arith::{ArithError, Scalar};
use crate::butterfly::{
    butterfly_point, eleven_point_conic, scenario_axis, scenario_circle, scenario_diameter, scenario_klamkin,
    verify_prop1, verify_prop2, ButterflyReport,
};
use crate::error::GeomError;
use crate::pencil::{farey_sweep, Pencil, PencilParam};
use crate::projective::{harmonic_conjugate, HomParam, Point};

pub use scene::{Scene, SceneFile};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot parse input: {0}")]
    Parse(String),
    #[error("unknown reference: {0}")]
    UnknownReference(String),
    #[error("duplicate name: {0}")]
    DuplicateName(String),
    #[error("invalid scene: {0}")]
    InvalidScene(String),
    #[error("{0}")]
    Io(String),
    #[error("viewport has zero or negative extent")]
    EmptyViewport,
    #[error(transparent)]
    Geom(#[from] GeomError),
}

impl From<ArithError> for CliError {
    fn from(e: ArithError) -> Self {
        CliError::Geom(GeomError::Arith(e))
    }
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "UsageError",
            CliError::Parse(_) => "ParseError",
            CliError::UnknownReference(_) => "UnknownReference",
            CliError::DuplicateName(_) => "DuplicateName",
            CliError::InvalidScene(_) => "InvalidScene",
            CliError::Io(_) => "IoError",
            CliError::EmptyViewport => "EmptyViewport",
            CliError::Geom(e) => e.code(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Geom(e) if e.is_hypothesis_failure() => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Pretty,
}

#[derive(Debug, Parser)]
#[command(name = "desargues", version, about = "Desargues involutions and butterfly-theorem verifiers with exact arithmetic")]
pub struct Cli {
    /// Output format of the report
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct PencilLine {
    #[arg(long)]
    pub scene: PathBuf,
    #[arg(long)]
    pub pencil: String,
    #[arg(long)]
    pub line: String,
}

#[derive(Debug, Args)]
pub struct Sampling {
    /// Number of parameters of the deterministic sweep
    #[arg(long, default_value_t = 8)]
    pub samples: usize,
    /// Also test this many random members drawn from the given seed
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The Desargues involution induced on a line
    Involution(PencilLine),
    /// Fixed points of the Desargues involution on a line
    FixedPoints(PencilLine),
    /// Harmonic conjugate of M with respect to P and Q (values or "inf")
    Harmonic {
        #[arg(long, num_args = 3, value_names = ["M", "P", "Q"], allow_negative_numbers = true)]
        params: Vec<String>,
    },
    /// A member of a pencil, by parameter or through a point
    Member {
        #[arg(long)]
        scene: PathBuf,
        #[arg(long)]
        pencil: String,
        /// Parameter as "λ:μ"
        #[arg(long, allow_hyphen_values = true, conflicts_with = "through", required_unless_present = "through")]
        param: Option<String>,
        /// Point name or "x,y"
        #[arg(long, allow_hyphen_values = true)]
        through: Option<String>,
    },
    /// The conic of centers of the pencil and its eleven witnesses
    ElevenPoint {
        #[arg(long)]
        scene: PathBuf,
        #[arg(long)]
        pencil: String,
    },
    /// Check a theorem on a configuration
    Verify {
        #[command(subcommand)]
        which: Verify,
    },
    /// Draw the scene as SVG
    Render {
        #[arg(long)]
        scene: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// xmin ymin xmax ymax
        #[arg(long, num_args = 4, allow_negative_numbers = true)]
        viewport: Option<Vec<f64>>,
        /// Width of the image in pixels
        #[arg(long, default_value_t = 600)]
        width: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum Verify {
    Prop1 {
        #[command(flatten)]
        at: PencilLine,
        #[command(flatten)]
        sampling: Sampling,
    },
    Prop2 {
        #[command(flatten)]
        at: PencilLine,
        /// Two member parameters "λ:μ" whose pairs determine the fixed points
        #[arg(long, num_args = 2, allow_hyphen_values = true, required = true)]
        members: Vec<String>,
        #[command(flatten)]
        sampling: Sampling,
    },
    Klamkin {
        #[command(flatten)]
        at: PencilLine,
        #[command(flatten)]
        sampling: Sampling,
    },
    Circle {
        #[command(flatten)]
        at: PencilLine,
        #[command(flatten)]
        sampling: Sampling,
    },
    Diameter {
        #[command(flatten)]
        at: PencilLine,
        /// Parameter "λ:μ" of the member H
        #[arg(long, allow_hyphen_values = true)]
        member: String,
        #[command(flatten)]
        sampling: Sampling,
    },
    Axis {
        #[command(flatten)]
        at: PencilLine,
        #[arg(long, allow_hyphen_values = true)]
        member: String,
        #[command(flatten)]
        sampling: Sampling,
    },
    ButterflyPoint {
        #[arg(long)]
        scene: PathBuf,
        #[arg(long)]
        pencil: String,
        /// Point name or "x,y"
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
}

/// Output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Ok,
    Pass,
    Fail,
}

struct Success {
    status: Status,
    result: Value,
    notes: Vec<String>,
}

impl Success {
    fn ok(result: Value) -> Self {
        Success {
            status: Status::Ok,
            result,
            notes: vec![],
        }
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn parse_param(s: &str) -> Result<PencilParam, CliError> {
    let (l, m) = s
        .split_once(':')
        .ok_or_else(|| CliError::Usage(format!("expected a parameter \"λ:μ\", got {s:?}")))?;
    Ok(PencilParam::new(l.parse::<Scalar>()?, m.parse::<Scalar>()?)?)
}

fn parse_hom(s: &str) -> Result<HomParam, CliError> {
    if s.trim() == "inf" {
        return Ok(HomParam::infinity());
    }
    Ok(HomParam::value(s.parse::<Scalar>()?))
}

fn parse_point(scene: &Scene, s: &str) -> Result<Point, CliError> {
    if let Some((x, y)) = s.split_once(',') {
        return Ok(Point::affine(x.parse::<Scalar>()?, y.parse::<Scalar>()?));
    }
    scene.point(s).cloned()
}

fn samples(s: &Sampling) -> Vec<PencilParam> {
    let mut out = farey_sweep(s.samples);
    if let Some(seed) = s.seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        while out.len() < 2 * s.samples {
            let (l, m): (i64, i64) = (rng.gen_range(-50..=50), rng.gen_range(-50..=50));
            if let Ok(t) = PencilParam::new(l, m) {
                out.push(t);
            }
        }
    }
    out
}

fn verdict(r: &ButterflyReport) -> Success {
    Success {
        status: if r.pass { Status::Pass } else { Status::Fail },
        result: to_value(r),
        notes: vec![],
    }
}

fn load(scene: &Path, pencil: &str) -> Result<(Scene, Pencil), CliError> {
    let s = Scene::load(scene)?;
    let p = s.pencil(pencil)?.clone();
    Ok((s, p))
}

fn pencil_line(at: &PencilLine) -> Result<(Scene, Pencil, crate::projective::Line), CliError> {
    let (s, p) = load(&at.scene, &at.pencil)?;
    let l = s.line(&at.line)?.clone();
    Ok((s, p, l))
}

fn execute(cmd: &Command) -> Result<Success, CliError> {
    match cmd {
        Command::Involution(at) => {
            let (_, p, l) = pencil_line(at)?;
            let d = p.desargues_involution(&l)?;
            let fixed = d.involution.fixed_points()?;
            Ok(Success::ok(json!({
                "line": to_value(&l),
                "chart": to_value(&d.chart),
                "involution": to_value(&d.involution),
                "pairs": to_value(&d.pairs),
                "fixed_points": to_value(&fixed),
            })))
        }
        Command::FixedPoints(at) => {
            let (_, p, l) = pencil_line(at)?;
            let d = p.desargues_involution(&l)?;
            let fixed = d.involution.fixed_points()?;
            let mut notes = vec![];
            if let Some(dd) = fixed.radicand() {
                if dd.sign() == num_bigint::Sign::Minus {
                    notes.push(format!("fixed points are a conjugate imaginary pair (d = {dd})"));
                }
            }
            Ok(Success {
                status: Status::Ok,
                result: json!({
                    "fixed_points": to_value(&fixed),
                    "points": to_value(&d.fixed_points()?),
                }),
                notes,
            })
        }
        Command::Harmonic { params } => {
            let [m, p, q] = [0, 1, 2].map(|i| parse_hom(&params[i]));
            let n = harmonic_conjugate(&m?, &p?, &q?)?;
            Ok(Success::ok(to_value(&n)))
        }
        Command::Member {
            scene,
            pencil,
            param,
            through,
        } => {
            let (s, p) = load(scene, pencil)?;
            let (t, c) = match (param, through) {
                (Some(t), _) => {
                    let t = parse_param(t)?;
                    let c = p.member(&t);
                    (t, c)
                }
                (None, Some(x)) => p.member_through(&parse_point(&s, x)?)?,
                (None, None) => return Err(CliError::Usage("one of --param or --through is required".into())),
            };
            let class = c.classify_affine().ok();
            Ok(Success::ok(json!({
                "param": to_value(&t),
                "conic": to_value(&c),
                "rank": c.rank(),
                "kind": class.map(|k| to_value(&k.kind)),
                "rectangular": class.map(|k| k.rectangular),
            })))
        }
        Command::ElevenPoint { scene, pencil } => {
            let (_, p) = load(scene, pencil)?;
            match eleven_point_conic(&p) {
                Ok(e) => {
                    let mut notes = vec![];
                    if e.degenerate {
                        notes.push("centers of the smooth members are collinear; the locus is a line pair".into());
                    }
                    Ok(Success {
                        status: Status::Ok,
                        result: to_value(&e),
                        notes,
                    })
                }
                Err(GeomError::DegenerateLocus { common_center, implicit }) => Ok(Success {
                    status: Status::Ok,
                    result: json!({
                        "locus": "degenerate",
                        "common_center": to_value(&common_center),
                        "implicit": to_value(&implicit),
                    }),
                    notes: vec!["every member has the same center".into()],
                }),
                Err(e) => Err(e.into()),
            }
        }
        Command::Verify { which } => verify(which),
        Command::Render {
            scene,
            out,
            viewport,
            width,
        } => {
            let s = Scene::load(scene)?;
            let vp = viewport.as_ref().map(|v| [v[0], v[1], v[2], v[3]]);
            let (svg, summary) = svg::render(&s, vp, *width)?;
            std::fs::write(out, svg).map_err(|e| CliError::Io(format!("{}: {e}", out.display())))?;
            let notes = summary.notes.clone();
            Ok(Success {
                status: Status::Ok,
                result: to_value(&summary),
                notes,
            })
        }
    }
}

fn verify(which: &Verify) -> Result<Success, CliError> {
    match which {
        Verify::Prop1 { at, sampling } => {
            let (_, p, l) = pencil_line(at)?;
            Ok(verdict(&verify_prop1(&p, &l, &samples(sampling))?))
        }
        Verify::Prop2 { at, members, sampling } => {
            let (_, p, l) = pencil_line(at)?;
            let chart = crate::projective::LineChart::default_for(&l);
            let a = p.member(&parse_param(&members[0])?).restrict_to_line(&chart)?;
            let b = p.member(&parse_param(&members[1])?).restrict_to_line(&chart)?;
            Ok(verdict(&verify_prop2(&p, &l, &a, &b, &samples(sampling))?))
        }
        Verify::Klamkin { at, sampling } => {
            let (_, p, l) = pencil_line(at)?;
            Ok(verdict(&scenario_klamkin(&p, &l, &samples(sampling))?))
        }
        Verify::Circle { at, sampling } => {
            let (_, p, l) = pencil_line(at)?;
            Ok(verdict(&scenario_circle(&p, &l, &samples(sampling))?))
        }
        Verify::Diameter { at, member, sampling } => {
            let (_, p, l) = pencil_line(at)?;
            Ok(verdict(&scenario_diameter(&p, &parse_param(member)?, &l, &samples(sampling))?))
        }
        Verify::Axis { at, member, sampling } => {
            let (_, p, l) = pencil_line(at)?;
            Ok(verdict(&scenario_axis(&p, &parse_param(member)?, &l, &samples(sampling))?))
        }
        Verify::ButterflyPoint { scene, pencil, point } => {
            let (s, p) = load(scene, pencil)?;
            let m = parse_point(&s, point)?;
            let b = butterfly_point(&p, &m)?;
            let locus_value = match eleven_point_conic(&p) {
                Ok(e) => Some(e.conic.eval(&m)?),
                Err(GeomError::DegenerateLocus { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            Ok(Success {
                status: if b.is_butterfly { Status::Pass } else { Status::Fail },
                result: json!({
                    "point": to_value(&m),
                    "butterfly": to_value(&b),
                    "locus_value": to_value(&locus_value),
                }),
                notes: vec![],
            })
        }
    }
}

/// Radicands of every irrational value in a report, in increasing order.
fn radicands(v: &Value, out: &mut std::collections::BTreeSet<i128>) {
    match v {
        Value::Object(m) => {
            if let (Some(Value::Number(d)), true, true) = (m.get("d"), m.contains_key("a"), m.contains_key("b")) {
                if let Some(d) = d.as_i64() {
                    out.insert(d as i128);
                }
            }
            m.values().for_each(|x| radicands(x, out));
        }
        Value::Array(a) => a.iter().for_each(|x| radicands(x, out)),
        _ => {}
    }
}

fn render_report(format: Format, report: &Value) -> String {
    let mut s = match format {
        Format::Json => serde_json::to_string(report),
        Format::Pretty => serde_json::to_string_pretty(report),
    }
    .expect("values serialize");
    s.push('\n');
    s
}

/// Runs one command line (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let echo: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    stdout: e.to_string(),
                    code: 0,
                };
            }
            let report = json!({
                "command": echo,
                "status": "error",
                "result": null,
                "diagnostics": {"radicands": [], "notes": []},
                "error": {"code": "UsageError", "message": e.kind().to_string()},
            });
            return Outcome {
                stdout: render_report(Format::Json, &report),
                code: 1,
            };
        }
    };
    let (report, code) = match execute(&cli.command) {
        Ok(s) => {
            let mut ds = std::collections::BTreeSet::new();
            radicands(&s.result, &mut ds);
            let (status, code) = match s.status {
                Status::Ok => ("ok", 0),
                Status::Pass => ("pass", 0),
                Status::Fail => ("fail", 2),
            };
            let report = json!({
                "command": echo,
                "status": status,
                "result": s.result,
                "diagnostics": {"radicands": ds.into_iter().collect::<Vec<_>>(), "notes": s.notes},
                "error": null,
            });
            (report, code)
        }
        Err(e) => {
            let code = e.exit_code();
            let report = json!({
                "command": echo,
                "status": if code == 2 { "fail" } else { "error" },
                "result": null,
                "diagnostics": {"radicands": [], "notes": []},
                "error": {"code": e.code(), "message": e.to_string()},
            });
            (report, code)
        }
    };
    Outcome {
        stdout: render_report(cli.format, &report),
        code,
    }
}
