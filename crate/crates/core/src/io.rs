//! JSON documents for diagrams, witnesses, scenes, verdicts, axes and
//! quadrangular traces.
//!
//! Scalars are always strings holding a rational (`"4"`, `"-7/3"`), never
//! JSON numbers. Points are written affinely normalized (last coordinate
//! `"1"`) when finite and as canonical integers otherwise; lines and planes
//! are written as canonical integers. Every point therefore has exactly one
//! spelling, and emitting a parsed canonical document reproduces it byte for
//! byte.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::checker::{DegeneracyClass, Note, PlanarDiagram, Reason, Verdict};
use crate::error::GeomError;
use crate::kernel::{drawing_plane, Line2, Plane3, Point2, Point3, Rational};
use crate::lift::{SceneReading, SpatialQuadrangle, SpatialScene, Witness};
use crate::perspectivity::SideAxes;
use crate::quadrangle::{
    DiagonalLabel, DiagonalTriangle, Label, Quadrangle, QuadrangularTrace, SideLabel,
};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DocError {
    /// Malformed JSON or a missing/mistyped field.
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    /// A field holds a value that is not acceptable.
    Field { field: String, message: String },
    /// The values parse but violate an invariant of the described object.
    InvariantViolation { what: String, source: GeomError },
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocError::Parse {
                line,
                column,
                message,
            } => write!(
                f,
                "kind=parse line={line} column={column} message=\"{message}\""
            ),
            DocError::Field { field, message } => {
                write!(f, "kind=field field={field} message=\"{message}\"")
            }
            DocError::InvariantViolation { what, source } => {
                write!(f, "kind=invariant what={what} message=\"{source}\"")
            }
        }
    }
}

impl std::error::Error for DocError {}

type DocResult<T> = std::result::Result<T, DocError>;

fn field_err(field: &str, message: impl Into<String>) -> DocError {
    DocError::Field {
        field: field.to_string(),
        message: message.into(),
    }
}

fn invariant(what: &str) -> impl FnOnce(GeomError) -> DocError + '_ {
    move |source| DocError::InvariantViolation {
        what: what.to_string(),
        source,
    }
}

fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> DocResult<T> {
    serde_json::from_str(text).map_err(|e| DocError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

fn check_version(version: u32) -> DocResult<()> {
    if version != FORMAT_VERSION {
        return Err(field_err(
            "version",
            format!("unsupported version {version}, expected {FORMAT_VERSION}"),
        ));
    }
    Ok(())
}

/// `"n"` or `"n/d"` in lowest terms with a positive denominator.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Accepts `"n"` and `"n/d"` with `d != 0`; the result is reduced.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| format!("not a rational: {s:?}"))?;
    let d = BigInt::from_str(d).map_err(|_| format!("not a rational: {s:?}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator: {s:?}"));
    }
    Ok(Rational::new(n, d))
}

fn parse_coords<const N: usize>(field: &str, raw: &[String]) -> DocResult<[Rational; N]> {
    if raw.len() != N {
        return Err(field_err(
            field,
            format!("expected {N} coordinates, found {}", raw.len()),
        ));
    }
    let mut out = Vec::with_capacity(N);
    for (i, s) in raw.iter().enumerate() {
        out.push(parse_rational(s).map_err(|m| field_err(&format!("{field}[{i}]"), m))?);
    }
    Ok(out.try_into().expect("length checked"))
}

/// Last coordinate scaled to one when nonzero, canonical integers otherwise.
fn point_strings<const N: usize>(coords: &[BigInt; N]) -> Vec<String> {
    let w = &coords[N - 1];
    if w.is_zero() {
        coords.iter().map(|c| c.to_string()).collect()
    } else {
        coords
            .iter()
            .map(|c| format_rational(&Rational::new(c.clone(), w.clone())))
            .collect()
    }
}

fn int_strings<const N: usize>(coords: &[BigInt; N]) -> Vec<String> {
    coords.iter().map(|c| c.to_string()).collect()
}

pub fn point2_strings(p: &Point2) -> Vec<String> {
    point_strings(p.coords())
}

pub fn point3_strings(p: &Point3) -> Vec<String> {
    point_strings(p.coords())
}

pub fn line2_strings(l: &Line2) -> Vec<String> {
    int_strings(l.coords())
}

pub fn plane_strings(p: &Plane3) -> Vec<String> {
    int_strings(p.coords())
}

fn parse_point2(field: &str, raw: &[String]) -> DocResult<Point2> {
    Point2::from_rationals(&parse_coords::<3>(field, raw)?)
        .map_err(|e| field_err(field, e.to_string()))
}

fn parse_point3(field: &str, raw: &[String]) -> DocResult<Point3> {
    Point3::from_rationals(&parse_coords::<4>(field, raw)?)
        .map_err(|e| field_err(field, e.to_string()))
}

fn parse_plane(field: &str, raw: &[String]) -> DocResult<Plane3> {
    Plane3::from_rationals(&parse_coords::<4>(field, raw)?)
        .map_err(|e| field_err(field, e.to_string()))
}

/// Parses a line given as `a:b:c` or `a,b,c` with rational entries.
pub fn parse_line_arg(s: &str) -> Result<Line2, String> {
    let parts: Vec<String> = s.split([':', ',']).map(|p| p.trim().to_string()).collect();
    let coords = parse_coords::<3>("line", &parts).map_err(|e| e.to_string())?;
    Line2::from_rationals(&coords).map_err(|e| e.to_string())
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
struct QuadDoc {
    #[serde(rename = "P")]
    p: Vec<String>,
    #[serde(rename = "Q")]
    q: Vec<String>,
    #[serde(rename = "R")]
    r: Vec<String>,
    #[serde(rename = "S")]
    s: Vec<String>,
}

impl QuadDoc {
    fn from_points<T>(pts: [&T; 4], f: impl Fn(&T) -> Vec<String>) -> Self {
        Self {
            p: f(pts[0]),
            q: f(pts[1]),
            r: f(pts[2]),
            s: f(pts[3]),
        }
    }

    fn fields(&self) -> [(&'static str, &Vec<String>); 4] {
        [
            ("P", &self.p),
            ("Q", &self.q),
            ("R", &self.r),
            ("S", &self.s),
        ]
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
struct DiagramDoc {
    version: u32,
    #[serde(rename = "O")]
    center: Vec<String>,
    quad1: QuadDoc,
    quad2: QuadDoc,
}

fn quad_doc(q: &Quadrangle) -> QuadDoc {
    let v = q.vertices();
    QuadDoc::from_points([&v[0], &v[1], &v[2], &v[3]], point2_strings)
}

fn parse_quad(name: &str, doc: &QuadDoc) -> DocResult<Quadrangle> {
    let mut pts = Vec::with_capacity(4);
    for (label, raw) in doc.fields() {
        pts.push(parse_point2(&format!("{name}.{label}"), raw)?);
    }
    Quadrangle::from_array(pts.try_into().expect("four points")).map_err(invariant(name))
}

pub fn emit_diagram(d: &PlanarDiagram) -> String {
    to_json(&DiagramDoc {
        version: FORMAT_VERSION,
        center: point2_strings(d.center()),
        quad1: quad_doc(d.quad1()),
        quad2: quad_doc(d.quad2()),
    })
}

pub fn parse_diagram(text: &str) -> DocResult<PlanarDiagram> {
    let doc: DiagramDoc = from_json(text)?;
    check_version(doc.version)?;
    let center = parse_point2("O", &doc.center)?;
    let quad1 = parse_quad("quad1", &doc.quad1)?;
    let quad2 = parse_quad("quad2", &doc.quad2)?;
    PlanarDiagram::new(center, quad1, quad2).map_err(invariant("diagram"))
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
struct BarredQuadDoc {
    #[serde(rename = "Pbar")]
    p: Vec<String>,
    #[serde(rename = "Qbar")]
    q: Vec<String>,
    #[serde(rename = "Rbar")]
    r: Vec<String>,
    #[serde(rename = "Sbar")]
    s: Vec<String>,
}

impl BarredQuadDoc {
    fn new(q: &SpatialQuadrangle) -> Self {
        let v = q.vertices();
        Self {
            p: point3_strings(&v[0]),
            q: point3_strings(&v[1]),
            r: point3_strings(&v[2]),
            s: point3_strings(&v[3]),
        }
    }

    fn parse(&self, plane: Plane3) -> DocResult<SpatialQuadrangle> {
        let fields = [
            ("Pbar", &self.p),
            ("Qbar", &self.q),
            ("Rbar", &self.r),
            ("Sbar", &self.s),
        ];
        let mut pts = Vec::with_capacity(4);
        for (label, raw) in fields {
            pts.push(parse_point3(&format!("quad.{label}"), raw)?);
        }
        SpatialQuadrangle::with_plane(pts.try_into().expect("four points"), plane)
            .map_err(invariant("quad"))
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
struct WitnessDoc {
    version: u32,
    #[serde(rename = "O1")]
    o1: Vec<String>,
    #[serde(rename = "O2")]
    o2: Vec<String>,
    quad: BarredQuadDoc,
    plane: Vec<String>,
    drawing_plane: Vec<String>,
}

pub fn emit_witness(w: &Witness) -> String {
    to_json(&WitnessDoc {
        version: FORMAT_VERSION,
        o1: point3_strings(&w.o1),
        o2: point3_strings(&w.o2),
        quad: BarredQuadDoc::new(&w.quad),
        plane: plane_strings(w.quad.plane()),
        drawing_plane: plane_strings(&w.drawing_plane),
    })
}

pub fn parse_witness(text: &str) -> DocResult<Witness> {
    let doc: WitnessDoc = from_json(text)?;
    check_version(doc.version)?;
    let o1 = parse_point3("O1", &doc.o1)?;
    let o2 = parse_point3("O2", &doc.o2)?;
    let plane = parse_plane("plane", &doc.plane)?;
    let drawing = parse_plane("drawing_plane", &doc.drawing_plane)?;
    if drawing != drawing_plane() {
        return Err(field_err("drawing_plane", "must be the plane (0:0:1:0)"));
    }
    let quad = doc.quad.parse(plane)?;
    if quad.plane() == &drawing {
        return Err(DocError::InvariantViolation {
            what: "plane".into(),
            source: GeomError::InconsistentConstruction("witness plane is the drawing plane"),
        });
    }
    if o1 == o2 {
        return Err(invariant("O2")(GeomError::CoincidentPoints));
    }
    for (name, o) in [("O1", &o1), ("O2", &o2)] {
        if o.on(&drawing) || o.on(quad.plane()) {
            return Err(invariant(name)(GeomError::CenterOnTarget));
        }
    }
    Ok(Witness {
        quad,
        o1,
        o2,
        drawing_plane: drawing,
    })
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
struct SceneDoc {
    version: u32,
    quad: BarredQuadDoc,
    plane: Vec<String>,
    light: Vec<String>,
    shadow_plane: Vec<String>,
    #[serde(default)]
    viewpoint: Option<Vec<String>>,
    #[serde(default)]
    reading: Option<String>,
}

pub fn emit_scene(s: &SpatialScene) -> String {
    to_json(&SceneDoc {
        version: FORMAT_VERSION,
        quad: BarredQuadDoc::new(&s.quad),
        plane: plane_strings(s.quad.plane()),
        light: point3_strings(&s.light),
        shadow_plane: plane_strings(&s.shadow_plane),
        viewpoint: s.viewpoint.as_ref().map(point3_strings),
        reading: s.reading.map(|r| r.name().to_string()),
    })
}

pub fn parse_scene(text: &str) -> DocResult<SpatialScene> {
    let doc: SceneDoc = from_json(text)?;
    check_version(doc.version)?;
    let plane = parse_plane("plane", &doc.plane)?;
    let quad = doc.quad.parse(plane)?;
    let light = parse_point3("light", &doc.light)?;
    let shadow_plane = parse_plane("shadow_plane", &doc.shadow_plane)?;
    let viewpoint = doc
        .viewpoint
        .as_deref()
        .map(|v| parse_point3("viewpoint", v))
        .transpose()?;
    let reading = match doc.reading.as_deref() {
        None => None,
        Some("shadow-in-place") => Some(SceneReading::ShadowInPlace),
        Some("both-projected") => Some(SceneReading::BothProjected),
        Some(other) => return Err(field_err("reading", format!("unknown reading {other:?}"))),
    };
    Ok(SpatialScene {
        quad,
        light,
        shadow_plane,
        viewpoint,
        reading,
    })
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
struct DegeneracyDoc {
    kind: String,
    #[serde(default)]
    distinct: Option<String>,
    coincident: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
struct TripleDoc<T> {
    #[serde(rename = "A")]
    a: T,
    #[serde(rename = "B")]
    b: T,
    #[serde(rename = "C")]
    c: T,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
struct DiagonalPointsDoc {
    quad1: TripleDoc<Vec<String>>,
    quad2: TripleDoc<Vec<String>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
struct VerdictDoc {
    version: u32,
    applicable: bool,
    correct: bool,
    degeneracy: DegeneracyDoc,
    diagonal: TripleDoc<bool>,
    diagonal_points: DiagonalPointsDoc,
    reason: String,
    witness: Option<String>,
    notes: Vec<String>,
}

fn triangle_doc(t: &DiagonalTriangle) -> TripleDoc<Vec<String>> {
    TripleDoc {
        a: point2_strings(t.a()),
        b: point2_strings(t.b()),
        c: point2_strings(t.c()),
    }
}

fn parse_triangle(name: &str, doc: &TripleDoc<Vec<String>>) -> DocResult<DiagonalTriangle> {
    Ok(DiagonalTriangle::from_points([
        parse_point2(&format!("{name}.A"), &doc.a)?,
        parse_point2(&format!("{name}.B"), &doc.b)?,
        parse_point2(&format!("{name}.C"), &doc.c)?,
    ]))
}

fn parse_label(field: &str, s: &str) -> DocResult<Label> {
    Label::ALL
        .into_iter()
        .find(|l| l.name() == s)
        .ok_or_else(|| field_err(field, format!("unknown vertex label {s:?}")))
}

fn parse_diagonal_label(field: &str, s: &str) -> DocResult<DiagonalLabel> {
    DiagonalLabel::ALL
        .into_iter()
        .find(|l| l.name() == s)
        .ok_or_else(|| field_err(field, format!("unknown diagonal label {s:?}")))
}

fn parse_reason(s: &str) -> DocResult<Reason> {
    match s.split_once(':') {
        None if s == "correct" => Ok(Reason::Correct),
        None if s == "identical" => Ok(Reason::Identical),
        Some(("not-perspective", l)) => Ok(Reason::NotPerspective(parse_label("reason", l)?)),
        Some(("diagonal-not-perspective", l)) => Ok(Reason::DiagonalNotPerspective(
            parse_diagonal_label("reason", l)?,
        )),
        _ => Err(field_err("reason", format!("unknown reason {s:?}"))),
    }
}

fn parse_note(s: &str) -> DocResult<Note> {
    let bad = || field_err("notes", format!("unknown note {s:?}"));
    let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
    let (quad, item) = rest.split_once('.').ok_or_else(bad)?;
    let quad = match quad {
        "quad1" => 1,
        "quad2" => 2,
        _ => return Err(bad()),
    };
    match kind {
        "center-on-side" => {
            let side = SideLabel::ALL
                .into_iter()
                .find(|x| x.name() == item)
                .ok_or_else(bad)?;
            Ok(Note::CenterOnSide { quad, side })
        }
        "center-is-diagonal-point" => Ok(Note::CenterIsDiagonalPoint {
            quad,
            point: parse_diagonal_label("notes", item)?,
        }),
        _ => Err(bad()),
    }
}

/// Serializes a verdict; `witness` names an accompanying witness document.
pub fn emit_verdict(v: &Verdict, witness: Option<&str>) -> String {
    let distinct = match v.degeneracy {
        DegeneracyClass::TriangleCase { distinct } | DegeneracyClass::VertexCase { distinct } => {
            Some(distinct.name().to_string())
        }
        _ => None,
    };
    to_json(&VerdictDoc {
        version: FORMAT_VERSION,
        applicable: v.applicable,
        correct: v.correct,
        degeneracy: DegeneracyDoc {
            kind: v.degeneracy.name().to_string(),
            distinct,
            coincident: v
                .degeneracy
                .coincident()
                .iter()
                .map(|l| l.name().to_string())
                .collect(),
        },
        diagonal: TripleDoc {
            a: v.diagonal_pairs[0],
            b: v.diagonal_pairs[1],
            c: v.diagonal_pairs[2],
        },
        diagonal_points: DiagonalPointsDoc {
            quad1: triangle_doc(&v.diagonals.0),
            quad2: triangle_doc(&v.diagonals.1),
        },
        reason: v.reason.to_string(),
        witness: witness.map(str::to_string),
        notes: v.notes.iter().map(|n| n.to_string()).collect(),
    })
}

/// Parses a verdict document into the verdict and its witness reference.
pub fn parse_verdict(text: &str) -> DocResult<(Verdict, Option<String>)> {
    let doc: VerdictDoc = from_json(text)?;
    check_version(doc.version)?;
    let distinct = doc
        .degeneracy
        .distinct
        .as_deref()
        .map(|s| parse_label("degeneracy.distinct", s))
        .transpose()?;
    let degeneracy = match (doc.degeneracy.kind.as_str(), distinct) {
        ("none", None) => DegeneracyClass::None,
        ("identical", None) => DegeneracyClass::Identical,
        ("triangle", Some(distinct)) => DegeneracyClass::TriangleCase { distinct },
        ("vertex", Some(distinct)) => DegeneracyClass::VertexCase { distinct },
        (kind, _) => {
            return Err(field_err(
                "degeneracy",
                format!("inconsistent degeneracy kind {kind:?}"),
            ))
        }
    };
    let coincident: Vec<String> = degeneracy
        .coincident()
        .iter()
        .map(|l| l.name().to_string())
        .collect();
    if coincident != doc.degeneracy.coincident {
        return Err(field_err(
            "degeneracy.coincident",
            "does not match the degeneracy kind",
        ));
    }
    let reason = parse_reason(&doc.reason)?;
    if doc.correct != (reason == Reason::Correct) {
        return Err(field_err("correct", "disagrees with the reason"));
    }
    let notes = doc
        .notes
        .iter()
        .map(|n| parse_note(n))
        .collect::<DocResult<_>>()?;
    let verdict = Verdict {
        applicable: doc.applicable,
        diagonal_pairs: [doc.diagonal.a, doc.diagonal.b, doc.diagonal.c],
        degeneracy,
        correct: doc.correct,
        reason,
        notes,
        diagonals: (
            parse_triangle("diagonal_points.quad1", &doc.diagonal_points.quad1)?,
            parse_triangle("diagonal_points.quad2", &doc.diagonal_points.quad2)?,
        ),
    };
    Ok((verdict, doc.witness))
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
struct SidesDoc {
    #[serde(rename = "QR")]
    qr: Vec<String>,
    #[serde(rename = "RP")]
    rp: Vec<String>,
    #[serde(rename = "PQ")]
    pq: Vec<String>,
    #[serde(rename = "SP")]
    sp: Vec<String>,
    #[serde(rename = "SQ")]
    sq: Vec<String>,
    #[serde(rename = "SR")]
    sr: Vec<String>,
}

impl SidesDoc {
    fn new(get: impl Fn(SideLabel) -> Vec<String>) -> Self {
        Self {
            qr: get(SideLabel::QR),
            rp: get(SideLabel::RP),
            pq: get(SideLabel::PQ),
            sp: get(SideLabel::SP),
            sq: get(SideLabel::SQ),
            sr: get(SideLabel::SR),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
struct AxesDoc {
    s: Vec<String>,
    r: Vec<String>,
    q: Vec<String>,
    p: Vec<String>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
struct TracesDoc {
    quad1: SidesDoc,
    quad2: SidesDoc,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
struct AxisDoc {
    version: u32,
    axis: Option<Vec<String>>,
    axes: AxesDoc,
    side_meets: SidesDoc,
    traces: Option<TracesDoc>,
}

/// The four side axes, the common axis when they coincide, and the traces of
/// both quadrangles on it.
pub fn emit_axis(
    axes: &SideAxes,
    traces: Option<(&QuadrangularTrace, &QuadrangularTrace)>,
) -> String {
    to_json(&AxisDoc {
        version: FORMAT_VERSION,
        axis: axes.all_equal().then(|| line2_strings(axes.s())),
        axes: AxesDoc {
            s: line2_strings(axes.s()),
            r: line2_strings(axes.r()),
            q: line2_strings(axes.q()),
            p: line2_strings(axes.p()),
        },
        side_meets: SidesDoc::new(|s| point2_strings(axes.meets.get(s))),
        traces: traces.map(|(t1, t2)| TracesDoc {
            quad1: SidesDoc::new(|s| point2_strings(t1.get(s))),
            quad2: SidesDoc::new(|s| point2_strings(t2.get(s))),
        }),
    })
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
struct QsetDoc {
    version: u32,
    line: Vec<String>,
    quad1: SidesDoc,
    quad2: SidesDoc,
    equal: bool,
}

/// Traces of both quadrangles on one line and whether they agree label-wise.
pub fn emit_qset(t1: &QuadrangularTrace, t2: &QuadrangularTrace) -> String {
    to_json(&QsetDoc {
        version: FORMAT_VERSION,
        line: line2_strings(t1.line()),
        quad1: SidesDoc::new(|s| point2_strings(t1.get(s))),
        quad2: SidesDoc::new(|s| point2_strings(t2.get(s))),
        equal: SideLabel::ALL.iter().all(|&s| t1.get(s) == t2.get(s)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::decide_depiction;
    use crate::kernel::rat;
    use crate::lift::{default_parameters, lift_collinear_centers};

    const DILATION: &str = r#"{
  "version": 1,
  "O": ["3", "0", "1"],
  "quad1": {"P": ["1", "1", "1"], "Q": ["-1", "1", "1"], "R": ["-1", "-1", "1"], "S": ["1", "-1", "1"]},
  "quad2": {"P": ["-1", "2", "1"], "Q": ["-5", "2", "1"], "R": ["-5", "-2", "1"], "S": ["-1", "-2", "1"]}
}"#;

    #[test]
    fn rationals_format_and_parse() {
        assert_eq!(format_rational(&rat(-7, 3)), "-7/3");
        assert_eq!(format_rational(&rat(8, 2)), "4");
        assert_eq!(parse_rational("2/4").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-6/-4").unwrap(), rat(3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("0.5").is_err());
    }

    #[test]
    fn canonical_round_trip() {
        let d = parse_diagram(DILATION).unwrap();
        let text = emit_diagram(&d);
        assert_eq!(parse_diagram(&text).unwrap(), d);
        assert_eq!(emit_diagram(&parse_diagram(&text).unwrap()), text);
    }

    #[test]
    fn non_canonical_coordinates_are_normalized() {
        let text = DILATION.replace(r#""O": ["3", "0", "1"]"#, r#""O": ["2/4", "0", "1"]"#);
        let emitted = emit_diagram(&parse_diagram(&text).unwrap());
        assert!(emitted.contains("\"1/2\""));
        let scaled = DILATION.replace(r#""O": ["3", "0", "1"]"#, r#""O": ["6", "0", "2"]"#);
        assert_eq!(
            emit_diagram(&parse_diagram(&scaled).unwrap()),
            emit_diagram(&parse_diagram(DILATION).unwrap())
        );
    }

    #[test]
    fn center_on_vertex_is_invariant_violation() {
        let text = DILATION.replace(r#""O": ["3", "0", "1"]"#, r#""O": ["1", "1", "1"]"#);
        match parse_diagram(&text) {
            Err(DocError::InvariantViolation { source, .. }) => {
                assert_eq!(source, GeomError::CenterIsVertex)
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parse_errors_carry_locations() {
        let broken = DILATION.replace("\"quad2\"", "quad2");
        match parse_diagram(&broken) {
            Err(DocError::Parse { line, .. }) => assert_eq!(line, 5),
            other => panic!("unexpected {other:?}"),
        }
        let bad_field = DILATION.replace(r#""Q": ["-1", "1", "1"]"#, r#""Q": ["-1", "one", "1"]"#);
        match parse_diagram(&bad_field) {
            Err(DocError::Field { field, .. }) => assert_eq!(field, "quad1.Q[1]"),
            other => panic!("unexpected {other:?}"),
        }
        let short = DILATION.replace(r#""O": ["3", "0", "1"]"#, r#""O": ["3", "0"]"#);
        assert!(matches!(parse_diagram(&short), Err(DocError::Field { .. })));
        let collinear = DILATION.replace(r#""S": ["1", "-1", "1"]"#, r#""S": ["0", "1", "1"]"#);
        assert!(matches!(
            parse_diagram(&collinear),
            Err(DocError::InvariantViolation { .. })
        ));
    }

    #[test]
    fn witness_round_trip_and_affine_form() {
        let d = parse_diagram(DILATION).unwrap();
        let (c1, c2) = default_parameters();
        let w = lift_collinear_centers(&d, &c1, &c2).unwrap();
        let text = emit_witness(&w);
        assert!(text.contains("\"1/3\",\n      \"4/3\",\n      \"-1/3\",\n      \"1\""));
        assert_eq!(parse_witness(&text).unwrap(), w);
        assert_eq!(emit_witness(&parse_witness(&text).unwrap()), text);
    }

    #[test]
    fn verdict_round_trip() {
        let d = parse_diagram(DILATION).unwrap();
        let v = decide_depiction(&d);
        let text = emit_verdict(&v, Some("dilation.witness.json"));
        let (back, witness) = parse_verdict(&text).unwrap();
        assert_eq!(back, v);
        assert_eq!(witness.as_deref(), Some("dilation.witness.json"));
    }

    #[test]
    fn line_arguments() {
        assert_eq!(parse_line_arg("0:0:1").unwrap(), Line2::at_infinity());
        assert_eq!(
            parse_line_arg("1/2, 0, -1").unwrap(),
            Line2::from_ints([1, 0, -2]).unwrap()
        );
        assert!(parse_line_arg("0:0").is_err());
        assert!(parse_line_arg("0:0:0").is_err());
    }
}
