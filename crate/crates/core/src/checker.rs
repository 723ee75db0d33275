//! Decides whether two point-perspective quadrangles correctly depict a plane
//! quadrangle in space and its shadow.
//!
//! The criterion: the diagonal triangles must be perspective from the same
//! center as the vertices. It is necessary because central projection between
//! two planes carries diagonal points to diagonal points, and sufficient
//! because every diagram passing it can be lifted (see [`crate::lift`]).

use std::fmt;

use crate::error::{GeomError, Result};
use crate::kernel::Point2;
use crate::perspectivity::{pair_perspective_from, quad_perspective};
use crate::quadrangle::{
    diagonal_triangle, sides, DiagonalLabel, DiagonalTriangle, Label, Quadrangle,
};

/// A center `O` and two homologously labeled quadrangles in one plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarDiagram {
    center: Point2,
    quad1: Quadrangle,
    quad2: Quadrangle,
}

impl PlanarDiagram {
    pub fn new(center: Point2, quad1: Quadrangle, quad2: Quadrangle) -> Result<Self> {
        if quad1
            .vertices()
            .iter()
            .chain(quad2.vertices())
            .any(|v| v == &center)
        {
            return Err(GeomError::CenterIsVertex);
        }
        Ok(Self {
            center,
            quad1,
            quad2,
        })
    }

    pub fn center(&self) -> &Point2 {
        &self.center
    }

    pub fn quad1(&self) -> &Quadrangle {
        &self.quad1
    }

    pub fn quad2(&self) -> &Quadrangle {
        &self.quad2
    }

    /// The nine labeled points: `O` then the vertices of both quadrangles.
    pub fn points(&self) -> impl Iterator<Item = &Point2> {
        std::iter::once(&self.center)
            .chain(self.quad1.vertices())
            .chain(self.quad2.vertices())
    }
}

/// How many homologous vertices coincide, and in which pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DegeneracyClass {
    None,
    /// `P, Q, R` shared; the equal sides `QR, RP, PQ` form a triangle.
    TriangleCase {
        distinct: Label,
    },
    /// `S` and two of `P, Q, R` shared; the equal sides meet at `S`.
    VertexCase {
        distinct: Label,
    },
    Identical,
}

impl DegeneracyClass {
    pub fn name(&self) -> &'static str {
        match self {
            DegeneracyClass::None => "none",
            DegeneracyClass::TriangleCase { .. } => "triangle",
            DegeneracyClass::VertexCase { .. } => "vertex",
            DegeneracyClass::Identical => "identical",
        }
    }

    /// Labels whose homologous vertices coincide.
    pub fn coincident(&self) -> Vec<Label> {
        match self {
            DegeneracyClass::None => Vec::new(),
            DegeneracyClass::Identical => Label::ALL.to_vec(),
            DegeneracyClass::TriangleCase { distinct }
            | DegeneracyClass::VertexCase { distinct } => {
                Label::ALL.into_iter().filter(|l| l != distinct).collect()
            }
        }
    }
}

pub fn classify_degeneracy(q1: &Quadrangle, q2: &Quadrangle) -> DegeneracyClass {
    let distinct: Vec<Label> = Label::ALL
        .into_iter()
        .filter(|&l| q1.vertex(l) != q2.vertex(l))
        .collect();
    match distinct.as_slice() {
        [] => DegeneracyClass::Identical,
        [Label::S] => DegeneracyClass::TriangleCase { distinct: Label::S },
        [l] => DegeneracyClass::VertexCase { distinct: *l },
        _ => DegeneracyClass::None,
    }
}

/// Why a verdict came out the way it did. Only the first failure is named.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reason {
    Correct,
    /// The vertex pair with this label does not pass through the center.
    NotPerspective(Label),
    Identical,
    DiagonalNotPerspective(DiagonalLabel),
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::Correct => write!(f, "correct"),
            Reason::NotPerspective(l) => write!(f, "not-perspective:{l}"),
            Reason::Identical => write!(f, "identical"),
            Reason::DiagonalNotPerspective(d) => write!(f, "diagonal-not-perspective:{d}"),
        }
    }
}

/// Conditions worth flagging that do not change the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Note {
    /// The center lies on a side of quadrangle 1 or 2.
    CenterOnSide {
        quad: u8,
        side: crate::quadrangle::SideLabel,
    },
    CenterIsDiagonalPoint {
        quad: u8,
        point: DiagonalLabel,
    },
}

impl fmt::Display for Note {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Note::CenterOnSide { quad, side } => write!(f, "center-on-side:quad{quad}.{side}"),
            Note::CenterIsDiagonalPoint { quad, point } => {
                write!(f, "center-is-diagonal-point:quad{quad}.{point}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub applicable: bool,
    /// Perspectivity from the center of the pairs `(A1,A2)`, `(B1,B2)`, `(C1,C2)`.
    pub diagonal_pairs: [bool; 3],
    pub degeneracy: DegeneracyClass,
    pub correct: bool,
    pub reason: Reason,
    pub notes: Vec<Note>,
    pub diagonals: (DiagonalTriangle, DiagonalTriangle),
}

impl Verdict {
    pub fn diagonal(&self, label: DiagonalLabel) -> bool {
        self.diagonal_pairs[label.index()]
    }

    pub fn perspective_diagonal_count(&self) -> usize {
        self.diagonal_pairs.iter().filter(|&&b| b).count()
    }
}

fn notes_for(d: &PlanarDiagram, diag1: &DiagonalTriangle, diag2: &DiagonalTriangle) -> Vec<Note> {
    let mut notes = Vec::new();
    for (i, q) in [(1u8, d.quad1()), (2u8, d.quad2())] {
        for (side, line) in sides(q).iter() {
            if d.center().on(line) {
                notes.push(Note::CenterOnSide { quad: i, side });
            }
        }
    }
    for (i, t) in [(1u8, diag1), (2u8, diag2)] {
        for point in DiagonalLabel::ALL {
            if t.get(point) == d.center() {
                notes.push(Note::CenterIsDiagonalPoint { quad: i, point });
            }
        }
    }
    notes
}

pub fn decide_depiction(d: &PlanarDiagram) -> Verdict {
    let o = d.center();
    let applicable =
        quad_perspective(o, d.quad1(), d.quad2()).expect("diagram excludes O as a vertex");
    let diag1 = diagonal_triangle(d.quad1());
    let diag2 = diagonal_triangle(d.quad2());
    let diagonal_pairs =
        DiagonalLabel::ALL.map(|l| pair_perspective_from(o, diag1.get(l), diag2.get(l)));
    let degeneracy = classify_degeneracy(d.quad1(), d.quad2());

    let reason = if !applicable {
        let label = Label::ALL
            .into_iter()
            .find(|&l| !pair_perspective_from(o, d.quad1().vertex(l), d.quad2().vertex(l)))
            .expect("some vertex pair fails");
        Reason::NotPerspective(label)
    } else if degeneracy == DegeneracyClass::Identical {
        Reason::Identical
    } else if let Some(l) = DiagonalLabel::ALL
        .into_iter()
        .find(|l| !diagonal_pairs[l.index()])
    {
        Reason::DiagonalNotPerspective(l)
    } else {
        Reason::Correct
    };

    let notes = notes_for(d, &diag1, &diag2);
    Verdict {
        applicable,
        diagonal_pairs,
        degeneracy,
        correct: reason == Reason::Correct,
        reason,
        notes,
        diagonals: (diag1, diag2),
    }
}
