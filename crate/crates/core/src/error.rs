use thiserror::Error;

use crate::quadrangle::Label;

/// Failures of the geometric operations.
///
/// Every variant names a violated precondition; none of them signal
/// arithmetic trouble, which cannot happen over the rationals.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("all homogeneous coordinates are zero")]
    ZeroVector,
    #[error("the two points coincide")]
    CoincidentPoints,
    #[error("the two lines coincide")]
    CoincidentLines,
    #[error("the points are collinear")]
    CollinearPoints,
    #[error("coordinates violate the Grassmann-Pluecker relation")]
    NotALine,
    #[error("the four points are not coplanar")]
    NotCoplanar,
    #[error("the line lies in the plane")]
    LineInPlane,
    #[error("the projection center lies on the target plane")]
    CenterOnTarget,
    #[error("the projected point is the projection center")]
    ProjectingCenter,
    #[error("the point is not on the drawing plane x2 = 0")]
    NotOnDrawingPlane,
    #[error("vertices {0} and {1} coincide")]
    RepeatedVertex(Label, Label),
    #[error("vertices {0}, {1}, {2} are collinear")]
    CollinearTriple(Label, Label, Label),
    #[error("the line passes through vertex {0}")]
    LineThroughVertex(Label),
    #[error("the center coincides with a vertex")]
    CenterIsVertex,
    #[error("a pair of homologous sides coincide")]
    HomologousSidesEqual,
    #[error("the figures are not perspective")]
    NotPerspective,
    #[error("the homologous side intersections do not determine a line")]
    DegenerateAxis,
    #[error("the four side axes s, r, q, p do not coincide")]
    NoCommonAxis,
    #[error("invalid pair for a perspective collineation: {0}")]
    InvalidPair(&'static str),
    #[error("the matrix is singular")]
    SingularMatrix,
    #[error("the diagram is not a correct depiction")]
    NotCorrectDiagram,
    #[error("the quadrangles are not in general position")]
    NotGeneralPosition,
    #[error("degenerate lift parameters: {0}")]
    DegenerateParameters(&'static str),
    #[error("the scene cannot be depicted: {0}")]
    DegenerateScene(String),
    #[error("the construction produced an inconsistent configuration: {0}")]
    InconsistentConstruction(&'static str),
    #[error("generator exhausted {0} retries")]
    RetriesExhausted(u32),
    #[error("invalid generator configuration: {0}")]
    InvalidConfig(&'static str),
}

pub type Result<T, E = GeomError> = std::result::Result<T, E>;
