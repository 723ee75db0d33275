//! Perspectivity from a point and from a line, the four side axes of a
//! perspective pair of quadrangles, and perspective collineations.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{GeomError, Result};
use crate::kernel::{canonical_ints, collinear2, cross, det3, join2, meet2, Line2, Point2};
use crate::quadrangle::{sides, Label, Quadrangle, SideLabel};

/// Three labeled points.
pub type Triangle = [Point2; 3];

/// Whether `x1` and `x2` are homologous under a perspectivity from `o`.
/// Coincident points always are.
pub fn pair_perspective_from(o: &Point2, x1: &Point2, x2: &Point2) -> bool {
    x1 == x2 || collinear2(o, x1, x2)
}

fn center_is_vertex<'a>(o: &Point2, mut vertices: impl Iterator<Item = &'a Point2>) -> bool {
    vertices.any(|v| v == o)
}

pub fn quad_perspective(o: &Point2, q1: &Quadrangle, q2: &Quadrangle) -> Result<bool> {
    if center_is_vertex(o, q1.vertices().iter().chain(q2.vertices())) {
        return Err(GeomError::CenterIsVertex);
    }
    Ok(Label::ALL
        .into_iter()
        .all(|l| pair_perspective_from(o, q1.vertex(l), q2.vertex(l))))
}

pub fn triangles_perspective_point(o: &Point2, t1: &Triangle, t2: &Triangle) -> Result<bool> {
    if center_is_vertex(o, t1.iter().chain(t2)) {
        return Err(GeomError::CenterIsVertex);
    }
    Ok(t1
        .iter()
        .zip(t2)
        .all(|(a, b)| pair_perspective_from(o, a, b)))
}

/// The line through three collinear points, at least two of them distinct.
fn line_through_three(pts: [&Point2; 3]) -> Result<Line2> {
    if !collinear2(pts[0], pts[1], pts[2]) {
        return Err(GeomError::NotPerspective);
    }
    let [a, b, c] = pts;
    join2(a, b)
        .or_else(|_| join2(a, c))
        .map_err(|_| GeomError::DegenerateAxis)
}

/// Side `i` of a triangle is the side opposite vertex `i`.
fn triangle_sides(t: &Triangle) -> Result<[Line2; 3]> {
    Ok([
        join2(&t[1], &t[2])?,
        join2(&t[2], &t[0])?,
        join2(&t[0], &t[1])?,
    ])
}

/// The axis of two triangles: the line carrying the meets of homologous
/// sides.
pub fn desargues_axis(t1: &Triangle, t2: &Triangle) -> Result<Line2> {
    let s1 = triangle_sides(t1)?;
    let s2 = triangle_sides(t2)?;
    if s1.iter().zip(&s2).any(|(a, b)| a == b) {
        return Err(GeomError::HomologousSidesEqual);
    }
    let meets: Vec<Point2> = s1
        .iter()
        .zip(&s2)
        .map(|(a, b)| meet2(a, b))
        .collect::<Result<_>>()?;
    line_through_three([&meets[0], &meets[1], &meets[2]])
}

/// Axis label, named after the vertex dropped from both quadrangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AxisLabel {
    S,
    R,
    Q,
    P,
}

impl AxisLabel {
    pub const ALL: [AxisLabel; 4] = [AxisLabel::S, AxisLabel::R, AxisLabel::Q, AxisLabel::P];

    /// The three side pairs whose meets define the axis.
    pub fn defining_sides(self) -> [SideLabel; 3] {
        use SideLabel::*;
        match self {
            AxisLabel::S => [QR, RP, PQ],
            AxisLabel::R => [PQ, SQ, SP],
            AxisLabel::Q => [SP, RP, SR],
            AxisLabel::P => [SR, SQ, QR],
        }
    }

    pub fn dropped(self) -> Label {
        match self {
            AxisLabel::S => Label::S,
            AxisLabel::R => Label::R,
            AxisLabel::Q => Label::Q,
            AxisLabel::P => Label::P,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AxisLabel::S => "s",
            AxisLabel::R => "r",
            AxisLabel::Q => "q",
            AxisLabel::P => "p",
        }
    }
}

impl fmt::Display for AxisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The meets of the six homologous side pairs of two quadrangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideMeets {
    points: [Point2; 6],
}

impl SideMeets {
    pub fn get(&self, side: SideLabel) -> &Point2 {
        &self.points[side.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (SideLabel, &Point2)> {
        SideLabel::ALL.into_iter().zip(self.points.iter())
    }
}

/// Meets of homologous sides; fails if any pair of homologous sides coincide.
pub fn side_meets(q1: &Quadrangle, q2: &Quadrangle) -> Result<SideMeets> {
    let (s1, s2) = (sides(q1), sides(q2));
    let mut points = Vec::with_capacity(6);
    for side in SideLabel::ALL {
        points
            .push(meet2(s1.get(side), s2.get(side)).map_err(|_| GeomError::HomologousSidesEqual)?);
    }
    Ok(SideMeets {
        points: points.try_into().expect("six meets"),
    })
}

/// The four Desargues axes `s, r, q, p` of two quadrangles perspective from a
/// point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideAxes {
    pub meets: SideMeets,
    lines: [Line2; 4],
}

impl SideAxes {
    pub fn get(&self, label: AxisLabel) -> &Line2 {
        &self.lines[label as usize]
    }

    pub fn s(&self) -> &Line2 {
        &self.lines[0]
    }
    pub fn r(&self) -> &Line2 {
        &self.lines[1]
    }
    pub fn q(&self) -> &Line2 {
        &self.lines[2]
    }
    pub fn p(&self) -> &Line2 {
        &self.lines[3]
    }

    pub fn iter(&self) -> impl Iterator<Item = (AxisLabel, &Line2)> {
        AxisLabel::ALL.into_iter().zip(self.lines.iter())
    }

    pub fn all_equal(&self) -> bool {
        self.lines.iter().all(|l| l == &self.lines[0])
    }
}

pub fn side_axes(q1: &Quadrangle, q2: &Quadrangle) -> Result<SideAxes> {
    let meets = side_meets(q1, q2)?;
    let mut lines = Vec::with_capacity(4);
    for axis in AxisLabel::ALL {
        let [a, b, c] = axis.defining_sides().map(|s| meets.get(s));
        lines.push(line_through_three([a, b, c])?);
    }
    Ok(SideAxes {
        meets,
        lines: lines.try_into().expect("four axes"),
    })
}

/// The common line `o = s = r = q = p`.
pub fn common_axis(q1: &Quadrangle, q2: &Quadrangle) -> Result<Line2> {
    let axes = side_axes(q1, q2)?;
    if axes.all_equal() {
        Ok(axes.s().clone())
    } else {
        Err(GeomError::NoCommonAxis)
    }
}

/// Homologous sides pairwise distinct and their six meets pairwise distinct.
pub fn general_position(q1: &Quadrangle, q2: &Quadrangle) -> bool {
    let Ok(meets) = side_meets(q1, q2) else {
        return false;
    };
    let pts = &meets.points;
    (0..6).all(|i| (i + 1..6).all(|j| pts[i] != pts[j]))
}

/// An invertible plane collineation, stored as a 3×3 integer matrix
/// normalized up to scale.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Collineation {
    m: [[BigInt; 3]; 3],
}

impl Collineation {
    pub fn from_rows(rows: [[BigInt; 3]; 3]) -> Result<Self> {
        if det3([&rows[0], &rows[1], &rows[2]]).is_zero() {
            return Err(GeomError::SingularMatrix);
        }
        let flat: Vec<BigInt> = rows.into_iter().flatten().collect();
        let flat = canonical_ints(flat)?;
        let mut it = flat.into_iter();
        let mut row = || [(); 3].map(|_| it.next().expect("nine entries"));
        Ok(Self {
            m: [row(), row(), row()],
        })
    }

    pub fn from_int_rows(rows: [[i64; 3]; 3]) -> Result<Self> {
        Self::from_rows(rows.map(|r| r.map(BigInt::from)))
    }

    pub fn identity() -> Self {
        Self::from_int_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).expect("invertible")
    }

    pub fn rows(&self) -> &[[BigInt; 3]; 3] {
        &self.m
    }

    pub fn determinant(&self) -> BigInt {
        det3([&self.m[0], &self.m[1], &self.m[2]])
    }

    fn mul_vec(m: &[[BigInt; 3]; 3], v: &[BigInt; 3]) -> [BigInt; 3] {
        m.clone()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
    }

    /// Cofactor matrix; proportional to the inverse transpose.
    fn cofactor(&self) -> [[BigInt; 3]; 3] {
        let m = &self.m;
        [
            cross(&m[1], &m[2]),
            cross(&m[2], &m[0]),
            cross(&m[0], &m[1]),
        ]
    }

    pub fn apply_point(&self, p: &Point2) -> Point2 {
        Point2::from_bigints(Self::mul_vec(&self.m, p.coords())).expect("invertible map")
    }

    pub fn apply_line(&self, l: &Line2) -> Line2 {
        Line2::from_bigints(Self::mul_vec(&self.cofactor(), l.coords())).expect("invertible map")
    }

    pub fn apply_quadrangle(&self, q: &Quadrangle) -> Quadrangle {
        q.map(|p| self.apply_point(p))
            .expect("collineations preserve quadrangles")
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Collineation) -> Collineation {
        let a = &self.m;
        let b = &other.m;
        let entry = |i: usize, j: usize| (0..3).map(|k| &a[i][k] * &b[k][j]).sum::<BigInt>();
        let rows = [0, 1, 2].map(|i| [0, 1, 2].map(|j| entry(i, j)));
        Collineation::from_rows(rows).expect("product of invertible maps")
    }

    pub fn inverse(&self) -> Collineation {
        // The adjugate is the transposed cofactor matrix.
        let c = self.cofactor();
        let rows = [0, 1, 2].map(|i| [0, 1, 2].map(|j| c[j][i].clone()));
        Collineation::from_rows(rows).expect("inverse of invertible map")
    }
}

/// The perspective collineation with the given center and axis taking
/// `pair.0` to `pair.1`. A center on the axis gives an elation.
pub fn perspective_collineation(
    center: &Point2,
    axis: &Line2,
    pair: (&Point2, &Point2),
) -> Result<Collineation> {
    let (a, b) = pair;
    if a.on(axis) || b.on(axis) {
        return Err(GeomError::InvalidPair("pair point on the axis"));
    }
    if a == center || b == center {
        return Err(GeomError::InvalidPair("pair point equals the center"));
    }
    if !collinear2(center, a, b) {
        return Err(GeomError::InvalidPair("pair not collinear with the center"));
    }
    if a == b {
        return Ok(Collineation::identity());
    }
    // The map is x -> d x + n (l·x) c. Writing b = alpha a + beta c, the
    // ratio n/d equals beta / (alpha (l·a)).
    let (av, bv, cv, lv) = (a.coords(), b.coords(), center.coords(), axis.coords());
    let dot =
        |x: &[BigInt; 3], y: &[BigInt; 3]| x.iter().zip(y).map(|(p, q)| p * q).sum::<BigInt>();
    let u = cross(av, cv);
    let n = -dot(&cross(bv, av), &u);
    let d = dot(&cross(bv, cv), &u) * dot(lv, av);
    let rows = [0, 1, 2].map(|i| {
        [0, 1, 2].map(|j| {
            let diag = if i == j { d.clone() } else { BigInt::zero() };
            diag + &n * &cv[i] * &lv[j]
        })
    });
    let h = Collineation::from_rows(rows)?;
    debug_assert_eq!(&h.apply_point(a), b);
    Ok(h)
}

/// Whether `h` fixes the axis pointwise and the center linewise. Checked on
/// three points of the axis and on the lines joining the center to the basis
/// and unit points, which determine a collineation's action on the pencil.
pub fn fixes_axis_and_center(h: &Collineation, center: &Point2, axis: &Line2) -> bool {
    let (x, y) = axis.two_points();
    let z = Point2::from_bigints([0, 1, 2].map(|i| &x.coords()[i] + &y.coords()[i]))
        .expect("distinct points");
    let axis_fixed = [x, y, z].iter().all(|p| &h.apply_point(p) == p);
    let pencil_fixed = [[1i64, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]
        .into_iter()
        .map(|c| Point2::from_ints(c).expect("nonzero"))
        .filter_map(|p| join2(center, &p).ok())
        .all(|l| h.apply_line(&l) == l);
    axis_fixed && pencil_fixed
}
