//! The `depiction` command line.
//!
//! Exit codes: `check` returns 0 for a correct diagram, 1 for an incorrect
//! one and 2 for an inapplicable diagram or an invalid document. Other
//! subcommands return 0 on success, 1 when the geometry rules the request out
//! and 2 for invalid documents. Usage errors return 64 and unreadable or
//! unwritable files 66.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use crate::checker::{decide_depiction, PlanarDiagram};
use crate::generators::{
    gen_axis_perspective_triangles, gen_correct_diagram, gen_incorrect_diagram,
    gen_point_perspective_triangles, point_perspective, GenConfig, Seed,
};
use crate::io::{self, DocError};
use crate::kernel::Rational;
use crate::lift::{
    attempt_lift, default_parameters, lift_collinear_centers, lift_via_axis, project_scene,
    verify_witness,
};
use crate::perspectivity::{desargues_axis, side_axes};
use crate::quadrangle::quadrangular_trace;
use crate::svg::render_svg;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_NOINPUT: i32 = 66;

#[derive(Parser, Debug)]
#[command(
    name = "depiction",
    version,
    about = "Decide whether a planar diagram depicts a quadrangle and its shadow"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide a diagram and print the verdict document.
    Check {
        input: PathBuf,
        /// Also lift a correct diagram and write the witness here.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Build a spatial witness for a correct diagram.
    Lift {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Centers)]
        method: Method,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        c1: Option<Rational>,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        c2: Option<Rational>,
    },
    /// Project a spatial scene into the drawing plane.
    Project { scene: PathBuf },
    /// Print the side axes, the common axis and the traces on it.
    Axis { input: PathBuf },
    /// Print the traces of both quadrangles on a line given as `a:b:c`.
    Qset {
        input: PathBuf,
        #[arg(value_parser = line_arg, allow_hyphen_values = true)]
        line: crate::kernel::Line2,
    },
    /// Run a seeded property suite.
    Fuzz {
        #[arg(long, default_value_t = 1000)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = FuzzMode::Correct)]
        mode: FuzzMode,
    },
    /// Draw a diagram as SVG.
    Render {
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Centers,
    Axis,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FuzzMode {
    Correct,
    Incorrect,
    Desargues,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    io::parse_rational(s)
}

fn line_arg(s: &str) -> Result<crate::kernel::Line2, String> {
    io::parse_line_arg(s)
}

/// Failure of one invocation: the exit code and the message for stderr.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<DocError> for Failure {
    fn from(e: DocError) -> Self {
        Failure::new(EXIT_INVALID, format!("error: {e}"))
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| {
        Failure::new(
            EXIT_NOINPUT,
            format!("error: kind=file path={} message=\"{e}\"", path.display()),
        )
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| {
        Failure::new(
            EXIT_NOINPUT,
            format!("error: kind=file path={} message=\"{e}\"", path.display()),
        )
    })
}

fn read_diagram(path: &Path) -> Result<PlanarDiagram, Failure> {
    Ok(io::parse_diagram(&read_file(path)?)?)
}

fn geometry(e: crate::GeomError) -> Failure {
    Failure::new(EXIT_FAIL, format!("error: kind=geometry message=\"{e}\""))
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run_cli<S: AsRef<str>>(argv: &[S], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv.iter().map(|s| s.as_ref())) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let text = e.render().to_string();
            if informational {
                let _ = out.write_all(text.as_bytes());
                return EXIT_OK;
            }
            let _ = err.write_all(text.as_bytes());
            return EXIT_USAGE;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "{}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let mut emit = |text: &str| {
        out.write_all(text.as_bytes()).map_err(|e| {
            Failure::new(
                EXIT_NOINPUT,
                format!("error: kind=file path=<stdout> message=\"{e}\""),
            )
        })
    };
    match command {
        Command::Check { input, witness } => {
            let d = read_diagram(&input)?;
            let v = decide_depiction(&d);
            let mut reference = None;
            if let (Some(path), true) = (&witness, v.correct) {
                let (c1, c2) = default_parameters();
                let w = lift_collinear_centers(&d, &c1, &c2).map_err(geometry)?;
                write_file(path, &io::emit_witness(&w))?;
                reference = Some(path.display().to_string());
            }
            emit(&io::emit_verdict(&v, reference.as_deref()))?;
            Ok(if !v.applicable {
                EXIT_INVALID
            } else if v.correct {
                EXIT_OK
            } else {
                EXIT_FAIL
            })
        }
        Command::Lift {
            input,
            method,
            c1,
            c2,
        } => {
            let d = read_diagram(&input)?;
            let w = match method {
                Method::Centers => {
                    let (d1, d2) = default_parameters();
                    lift_collinear_centers(&d, &c1.unwrap_or(d1), &c2.unwrap_or(d2))
                }
                Method::Axis => {
                    if c1.is_some() || c2.is_some() {
                        return Err(Failure::new(
                            EXIT_USAGE,
                            "error: kind=usage message=\"--c1/--c2 apply to --method centers\"",
                        ));
                    }
                    lift_via_axis(&d)
                }
            }
            .map_err(geometry)?;
            emit(&io::emit_witness(&w))?;
            Ok(EXIT_OK)
        }
        Command::Project { scene } => {
            let s = io::parse_scene(&read_file(&scene)?)?;
            let d = project_scene(&s).map_err(geometry)?;
            emit(&io::emit_diagram(&d))?;
            Ok(EXIT_OK)
        }
        Command::Axis { input } => {
            let d = read_diagram(&input)?;
            let axes = side_axes(d.quad1(), d.quad2()).map_err(geometry)?;
            let traces = if axes.all_equal() {
                let t1 = quadrangular_trace(d.quad1(), axes.s()).map_err(geometry)?;
                let t2 = quadrangular_trace(d.quad2(), axes.s()).map_err(geometry)?;
                Some((t1, t2))
            } else {
                None
            };
            emit(&io::emit_axis(&axes, traces.as_ref().map(|(a, b)| (a, b))))?;
            Ok(if traces.is_some() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Qset { input, line } => {
            let d = read_diagram(&input)?;
            let t1 = quadrangular_trace(d.quad1(), &line).map_err(geometry)?;
            let t2 = quadrangular_trace(d.quad2(), &line).map_err(geometry)?;
            emit(&io::emit_qset(&t1, &t2))?;
            Ok(EXIT_OK)
        }
        Command::Fuzz { count, seed, mode } => {
            let report = fuzz(mode, count, Seed(seed));
            emit(&report.summary)?;
            Ok(if report.all_passed {
                EXIT_OK
            } else {
                EXIT_FAIL
            })
        }
        Command::Render { input, out } => {
            let d = read_diagram(&input)?;
            write_file(&out, &render_svg(&d))?;
            Ok(EXIT_OK)
        }
    }
}

struct FuzzReport {
    all_passed: bool,
    summary: String,
}

fn fuzz(mode: FuzzMode, count: u64, seed: Seed) -> FuzzReport {
    let cfg = GenConfig::default();
    let check = |s: Seed| -> Result<(), String> {
        match mode {
            FuzzMode::Correct => {
                let (_, d) = gen_correct_diagram(s, &cfg).map_err(|e| e.to_string())?;
                let v = decide_depiction(&d);
                if !v.correct {
                    return Err(format!("verdict {}", v.reason));
                }
                let (c1, c2) = default_parameters();
                let w = lift_collinear_centers(&d, &c1, &c2).map_err(|e| e.to_string())?;
                let report = verify_witness(&d, &w);
                if !report.passed() {
                    return Err(format!("witness failed {:?}", report.failed()));
                }
                Ok(())
            }
            FuzzMode::Incorrect => {
                let d = gen_incorrect_diagram(s, &cfg).map_err(|e| e.to_string())?;
                let v = decide_depiction(&d);
                if v.correct {
                    return Err("verdict correct".into());
                }
                let (c1, c2) = default_parameters();
                let attempt = attempt_lift(&d, &c1, &c2).map_err(|e| e.to_string())?;
                if attempt.determinant.is_zero() {
                    return Err("lifted points are coplanar".into());
                }
                Ok(())
            }
            FuzzMode::Desargues => {
                let (_, t1, t2) =
                    gen_point_perspective_triangles(s, &cfg).map_err(|e| e.to_string())?;
                desargues_axis(&t1, &t2).map_err(|e| format!("direct: {e}"))?;
                let (_, u1, u2) =
                    gen_axis_perspective_triangles(s, &cfg).map_err(|e| e.to_string())?;
                if !point_perspective(&u1, &u2) {
                    return Err("converse: triangles not point-perspective".into());
                }
                Ok(())
            }
        }
    };
    let mut passed = 0u64;
    let mut first_failure = None;
    for i in 0..count {
        let s = seed.nth(i);
        match check(s) {
            Ok(()) => passed += 1,
            Err(msg) => {
                first_failure.get_or_insert((s, msg));
            }
        }
    }
    let noun = match mode {
        FuzzMode::Correct => "verdicts correct",
        FuzzMode::Incorrect => "verdicts incorrect with nonzero certificate",
        FuzzMode::Desargues => "Desargues checks passed",
    };
    let mut summary = format!("{passed}/{count} {noun}\n");
    if let Some((s, msg)) = &first_failure {
        summary.push_str(&format!("first failure: seed={} {msg}\n", s.0));
    }
    FuzzReport {
        all_passed: first_failure.is_none(),
        summary,
    }
}
