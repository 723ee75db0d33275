//! Complete quadrangles with labeled vertices, their six sides, diagonal
//! triangles and the traces of the sides on a line.

use std::fmt;

use crate::error::{GeomError, Result};
use crate::kernel::{collinear2, join2, meet2, Line2, Point2};

/// Vertex label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    P,
    Q,
    R,
    S,
}

impl Label {
    pub const ALL: [Label; 4] = [Label::P, Label::Q, Label::R, Label::S];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Label::P => "P",
            Label::Q => "Q",
            Label::R => "R",
            Label::S => "S",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Side label. The order of `ALL` lists the three opposite pairs
/// `{QR, SP}`, `{RP, SQ}`, `{PQ, SR}` by position `i` and `i + 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SideLabel {
    QR,
    RP,
    PQ,
    SP,
    SQ,
    SR,
}

impl SideLabel {
    pub const ALL: [SideLabel; 6] = [
        SideLabel::QR,
        SideLabel::RP,
        SideLabel::PQ,
        SideLabel::SP,
        SideLabel::SQ,
        SideLabel::SR,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn endpoints(self) -> (Label, Label) {
        use Label::*;
        match self {
            SideLabel::QR => (Q, R),
            SideLabel::RP => (R, P),
            SideLabel::PQ => (P, Q),
            SideLabel::SP => (S, P),
            SideLabel::SQ => (S, Q),
            SideLabel::SR => (S, R),
        }
    }

    /// The side sharing no vertex with this one.
    pub fn opposite(self) -> SideLabel {
        SideLabel::ALL[(self.index() + 3) % 6]
    }

    /// The side joining two distinct labels, in either order.
    pub fn joining(a: Label, b: Label) -> SideLabel {
        SideLabel::ALL
            .into_iter()
            .find(|s| {
                let (x, y) = s.endpoints();
                (x, y) == (a, b) || (y, x) == (a, b)
            })
            .expect("labels must differ")
    }

    pub fn name(self) -> &'static str {
        match self {
            SideLabel::QR => "QR",
            SideLabel::RP => "RP",
            SideLabel::PQ => "PQ",
            SideLabel::SP => "SP",
            SideLabel::SQ => "SQ",
            SideLabel::SR => "SR",
        }
    }
}

impl fmt::Display for SideLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Diagonal point label: `A = SP·QR`, `B = SQ·RP`, `C = SR·PQ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiagonalLabel {
    A,
    B,
    C,
}

impl DiagonalLabel {
    pub const ALL: [DiagonalLabel; 3] = [DiagonalLabel::A, DiagonalLabel::B, DiagonalLabel::C];

    pub fn index(self) -> usize {
        self as usize
    }

    /// The opposite pair of sides whose meet is this diagonal point.
    pub fn sides(self) -> (SideLabel, SideLabel) {
        match self {
            DiagonalLabel::A => (SideLabel::SP, SideLabel::QR),
            DiagonalLabel::B => (SideLabel::SQ, SideLabel::RP),
            DiagonalLabel::C => (SideLabel::SR, SideLabel::PQ),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DiagonalLabel::A => "A",
            DiagonalLabel::B => "B",
            DiagonalLabel::C => "C",
        }
    }
}

impl fmt::Display for DiagonalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Four labeled points of the plane, pairwise distinct, no three collinear.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quadrangle {
    vertices: [Point2; 4],
}

impl Quadrangle {
    pub fn new(p: Point2, q: Point2, r: Point2, s: Point2) -> Result<Self> {
        validate_quadrangle(p, q, r, s)
    }

    pub fn from_array(vertices: [Point2; 4]) -> Result<Self> {
        let [p, q, r, s] = vertices;
        validate_quadrangle(p, q, r, s)
    }

    pub fn vertex(&self, label: Label) -> &Point2 {
        &self.vertices[label.index()]
    }

    pub fn vertices(&self) -> &[Point2; 4] {
        &self.vertices
    }

    /// Reassigns labels: the new vertex `Label::ALL[i]` is the old vertex
    /// `perm[i]`.
    pub fn relabel(&self, perm: [Label; 4]) -> Result<Self> {
        Self::from_array(perm.map(|l| self.vertex(l).clone()))
    }

    /// Applies a point map to every vertex and revalidates.
    pub fn map(&self, mut f: impl FnMut(&Point2) -> Point2) -> Result<Self> {
        let [p, q, r, s] = &self.vertices;
        Self::from_array([f(p), f(q), f(r), f(s)])
    }

    /// Equality of the unlabeled vertex sets.
    pub fn same_vertex_set(&self, other: &Quadrangle) -> bool {
        let mut a = self.vertices.clone();
        let mut b = other.vertices.clone();
        a.sort();
        b.sort();
        a == b
    }

    pub fn side(&self, side: SideLabel) -> Line2 {
        let (a, b) = side.endpoints();
        join2(self.vertex(a), self.vertex(b)).expect("quadrangle vertices are distinct")
    }
}

pub fn validate_quadrangle(p: Point2, q: Point2, r: Point2, s: Point2) -> Result<Quadrangle> {
    let vertices = [p, q, r, s];
    for i in 0..4 {
        for j in i + 1..4 {
            if vertices[i] == vertices[j] {
                return Err(GeomError::RepeatedVertex(Label::ALL[i], Label::ALL[j]));
            }
        }
    }
    for (i, j, k) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
        if collinear2(&vertices[i], &vertices[j], &vertices[k]) {
            return Err(GeomError::CollinearTriple(
                Label::ALL[i],
                Label::ALL[j],
                Label::ALL[k],
            ));
        }
    }
    Ok(Quadrangle { vertices })
}

/// The six sides of a quadrangle, keyed by [`SideLabel`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideSet {
    lines: [Line2; 6],
}

impl SideSet {
    pub fn get(&self, side: SideLabel) -> &Line2 {
        &self.lines[side.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (SideLabel, &Line2)> {
        SideLabel::ALL.into_iter().zip(self.lines.iter())
    }

    /// The opposite pairs `(QR, SP)`, `(RP, SQ)`, `(PQ, SR)`.
    pub fn opposite_pairs(&self) -> [(&Line2, &Line2); 3] {
        [0, 1, 2].map(|i| (&self.lines[i], &self.lines[i + 3]))
    }
}

pub fn sides(q: &Quadrangle) -> SideSet {
    SideSet {
        lines: SideLabel::ALL.map(|s| q.side(s)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagonalTriangle {
    points: [Point2; 3],
}

impl DiagonalTriangle {
    /// Wraps three points as `A`, `B`, `C` without recomputing them.
    pub fn from_points(points: [Point2; 3]) -> Self {
        Self { points }
    }

    pub fn get(&self, label: DiagonalLabel) -> &Point2 {
        &self.points[label.index()]
    }

    pub fn a(&self) -> &Point2 {
        &self.points[0]
    }

    pub fn b(&self) -> &Point2 {
        &self.points[1]
    }

    pub fn c(&self) -> &Point2 {
        &self.points[2]
    }

    pub fn points(&self) -> &[Point2; 3] {
        &self.points
    }
}

pub fn diagonal_triangle(q: &Quadrangle) -> DiagonalTriangle {
    let s = sides(q);
    DiagonalTriangle {
        points: DiagonalLabel::ALL.map(|d| {
            let (x, y) = d.sides();
            // Opposite sides share no vertex, so they are distinct lines.
            meet2(s.get(x), s.get(y)).expect("opposite sides are distinct")
        }),
    }
}

/// The six points in which a line meets the sides of a quadrangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadrangularTrace {
    line: Line2,
    points: [Point2; 6],
}

impl QuadrangularTrace {
    pub fn line(&self) -> &Line2 {
        &self.line
    }

    pub fn get(&self, side: SideLabel) -> &Point2 {
        &self.points[side.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (SideLabel, &Point2)> {
        SideLabel::ALL.into_iter().zip(self.points.iter())
    }

    pub fn opposite_pairs(&self) -> [(&Point2, &Point2); 3] {
        [0, 1, 2].map(|i| (&self.points[i], &self.points[i + 3]))
    }
}

pub fn quadrangular_trace(q: &Quadrangle, line: &Line2) -> Result<QuadrangularTrace> {
    if let Some(l) = Label::ALL.into_iter().find(|&l| q.vertex(l).on(line)) {
        return Err(GeomError::LineThroughVertex(l));
    }
    let s = sides(q);
    Ok(QuadrangularTrace {
        line: line.clone(),
        points: SideLabel::ALL
            .map(|side| meet2(s.get(side), line).expect("a line through no vertex is not a side")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: [i64; 3]) -> Point2 {
        Point2::from_ints(c).unwrap()
    }

    pub(crate) fn standard() -> Quadrangle {
        Quadrangle::new(p([1, 0, 0]), p([0, 1, 0]), p([0, 0, 1]), p([1, 1, 1])).unwrap()
    }

    fn square() -> Quadrangle {
        Quadrangle::new(
            Point2::affine_ints(1, 1),
            Point2::affine_ints(-1, 1),
            Point2::affine_ints(-1, -1),
            Point2::affine_ints(1, -1),
        )
        .unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(
            validate_quadrangle(p([1, 0, 0]), p([0, 1, 0]), p([0, 0, 1]), p([1, 1, 1])).is_ok()
        );
        assert_eq!(
            validate_quadrangle(p([1, 0, 0]), p([0, 1, 0]), p([1, 1, 0]), p([1, 1, 1])),
            Err(GeomError::CollinearTriple(Label::P, Label::Q, Label::R))
        );
        assert_eq!(
            validate_quadrangle(p([1, 0, 0]), p([1, 0, 0]), p([0, 0, 1]), p([1, 1, 1])),
            Err(GeomError::RepeatedVertex(Label::P, Label::Q))
        );
    }

    #[test]
    fn side_examples() {
        let s = sides(&standard());
        assert_eq!(s.get(SideLabel::PQ), &Line2::from_ints([0, 0, 1]).unwrap());
        assert_eq!(s.get(SideLabel::QR), &Line2::from_ints([1, 0, 0]).unwrap());
        assert_eq!(s.get(SideLabel::SP), &Line2::from_ints([0, 1, -1]).unwrap());

        let sq = sides(&square());
        // y = 1 and x + y = 0
        assert_eq!(
            sq.get(SideLabel::PQ),
            &Line2::from_ints([0, 1, -1]).unwrap()
        );
        assert_eq!(sq.get(SideLabel::SQ), &Line2::from_ints([1, 1, 0]).unwrap());
    }

    #[test]
    fn each_side_holds_exactly_its_two_vertices() {
        for q in [standard(), square()] {
            for (label, line) in sides(&q).iter() {
                let (a, b) = label.endpoints();
                for v in Label::ALL {
                    assert_eq!(q.vertex(v).on(line), v == a || v == b, "{label} {v}");
                }
            }
        }
    }

    #[test]
    fn diagonal_examples() {
        let d = diagonal_triangle(&standard());
        assert_eq!(d.a(), &p([0, 1, 1]));
        assert_eq!(d.b(), &p([1, 0, 1]));
        assert_eq!(d.c(), &p([1, 1, 0]));

        let d = diagonal_triangle(&square());
        assert_eq!(d.a(), &p([0, 1, 0]));
        assert_eq!(d.b(), &p([0, 0, 1]));
        assert_eq!(d.c(), &p([1, 0, 0]));
        assert!(!collinear2(d.a(), d.b(), d.c()));
    }

    #[test]
    fn trace_examples() {
        let t = quadrangular_trace(&square(), &Line2::at_infinity()).unwrap();
        assert_eq!(t.get(SideLabel::PQ), &p([1, 0, 0]));
        assert_eq!(t.get(SideLabel::QR), &p([0, 1, 0]));
        assert_eq!(t.get(SideLabel::SR), &p([1, 0, 0]));
        assert_eq!(t.get(SideLabel::SP), &p([0, 1, 0]));
        assert_eq!(t.get(SideLabel::SQ), &p([1, -1, 0]));
        assert_eq!(t.get(SideLabel::RP), &p([1, 1, 0]));
        for (_, x) in t.iter() {
            assert!(x.on(t.line()));
        }

        let q = standard();
        let through = join2(q.vertex(Label::P), q.vertex(Label::R)).unwrap();
        assert_eq!(
            quadrangular_trace(&q, &through),
            Err(GeomError::LineThroughVertex(Label::P))
        );
    }

    #[test]
    fn side_label_structure() {
        for s in SideLabel::ALL {
            let (a, b) = s.endpoints();
            let (c, d) = s.opposite().endpoints();
            assert!(![c, d].contains(&a) && ![c, d].contains(&b));
            assert_eq!(SideLabel::joining(b, a), s);
        }
    }
}
