//! Spatial witnesses for correct diagrams.
//!
//! A witness is a plane quadrangle in space together with two centers `O1`,
//! `O2` on a line through the embedded diagram center: projecting the
//! quadrangle from `O1` onto the drawing plane gives the first quadrangle,
//! projecting from `O2` gives the second. Two constructions are provided:
//! [`lift_collinear_centers`] intersects the rays `O1 X1` and `O2 X2`, and
//! [`lift_via_axis`] cuts the rays from `O1` with a plane through the common
//! side axis.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::checker::{decide_depiction, PlanarDiagram};
use crate::error::{GeomError, Result};
use crate::kernel::{
    central_project, chart_drawing, collinear3, coplanarity_determinant, drawing_plane,
    embed_drawing, embed_line, line3_through, meet_line_plane, meet_lines3, plane_through,
    LineMeet, Plane3, Point2, Point3, Rational,
};
use crate::perspectivity::{common_axis, general_position};
use crate::quadrangle::{DiagonalLabel, Label, Quadrangle};

/// Four labeled points of space in one plane, no three collinear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpatialQuadrangle {
    vertices: [Point3; 4],
    plane: Plane3,
}

impl SpatialQuadrangle {
    pub fn new(vertices: [Point3; 4]) -> Result<Self> {
        check_spatial_vertices(&vertices)?;
        let plane = plane_through(&vertices[0], &vertices[1], &vertices[2])?;
        if !vertices[3].on(&plane) {
            return Err(GeomError::NotCoplanar);
        }
        Ok(Self { vertices, plane })
    }

    /// Accepts a stated plane without checking anything; [`verify_witness`]
    /// reports on the result.
    pub fn from_parts_unchecked(vertices: [Point3; 4], plane: Plane3) -> Self {
        Self { vertices, plane }
    }

    /// Validates the vertices and that each lies on the stated plane.
    pub fn with_plane(vertices: [Point3; 4], plane: Plane3) -> Result<Self> {
        check_spatial_vertices(&vertices)?;
        if vertices.iter().any(|v| !v.on(&plane)) {
            return Err(GeomError::NotCoplanar);
        }
        Ok(Self { vertices, plane })
    }

    pub fn vertex(&self, label: Label) -> &Point3 {
        &self.vertices[label.index()]
    }

    pub fn vertices(&self) -> &[Point3; 4] {
        &self.vertices
    }

    pub fn plane(&self) -> &Plane3 {
        &self.plane
    }

    /// Diagonal point `label` of the spatial quadrangle, if the opposite sides
    /// meet.
    pub fn diagonal_point(&self, label: DiagonalLabel) -> Option<Point3> {
        let (x, y) = label.sides();
        let side = |s: crate::quadrangle::SideLabel| {
            let (a, b) = s.endpoints();
            line3_through(self.vertex(a), self.vertex(b)).ok()
        };
        meet_lines3(&side(x)?, &side(y)?).ok()?.point()
    }
}

fn check_spatial_vertices(v: &[Point3; 4]) -> Result<()> {
    for i in 0..4 {
        for j in i + 1..4 {
            if v[i] == v[j] {
                return Err(GeomError::RepeatedVertex(Label::ALL[i], Label::ALL[j]));
            }
        }
    }
    for (i, j, k) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
        if collinear3(&v[i], &v[j], &v[k]) {
            return Err(GeomError::CollinearTriple(
                Label::ALL[i],
                Label::ALL[j],
                Label::ALL[k],
            ));
        }
    }
    Ok(())
}

/// Spatial certificate that a diagram is a correct depiction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub quad: SpatialQuadrangle,
    pub o1: Point3,
    pub o2: Point3,
    pub drawing_plane: Plane3,
}

/// Which physical reading produced a diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SceneReading {
    /// The shadow is drawn where it falls; the quadrangle is seen from a viewpoint.
    ShadowInPlace,
    /// Quadrangle and shadow are both images under a viewpoint projection.
    BothProjected,
}

impl SceneReading {
    pub fn name(self) -> &'static str {
        match self {
            SceneReading::ShadowInPlace => "shadow-in-place",
            SceneReading::BothProjected => "both-projected",
        }
    }
}

/// A quadrangle lit from a point source, casting a shadow on a plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpatialScene {
    pub quad: SpatialQuadrangle,
    pub light: Point3,
    pub shadow_plane: Plane3,
    /// Defaults to [`default_viewpoint`] when absent.
    pub viewpoint: Option<Point3>,
    pub reading: Option<SceneReading>,
}

impl SpatialScene {
    /// The scene read off a witness: light at `O1`, eye at `O2`, shadow on the
    /// drawing plane.
    pub fn from_witness(w: &Witness) -> Self {
        Self {
            quad: w.quad.clone(),
            light: w.o1.clone(),
            shadow_plane: w.drawing_plane.clone(),
            viewpoint: Some(w.o2.clone()),
            reading: Some(SceneReading::ShadowInPlace),
        }
    }
}

/// The ideal point of the x2 axis: viewing the drawing plane from straight
/// above.
pub fn default_viewpoint() -> Point3 {
    Point3::from_ints([0, 0, 1, 0]).expect("nonzero")
}

/// The embedded center displaced by `c` along the x2 direction.
pub fn displaced_center(o: &Point2, c: &Rational) -> Point3 {
    match o.affine_coords() {
        Some((x, y)) => Point3::affine(x, y, c.clone()),
        None => {
            let [a, b, _] = o.to_rationals();
            Point3::from_rationals(&[a, b, c.clone(), Rational::zero()]).expect("nonzero")
        }
    }
}

fn check_parameters(c1: &Rational, c2: &Rational) -> Result<()> {
    if c1.is_zero() || c2.is_zero() {
        return Err(GeomError::DegenerateParameters(
            "lift parameters must be nonzero",
        ));
    }
    if c1 == c2 {
        return Err(GeomError::DegenerateParameters(
            "lift parameters must differ",
        ));
    }
    Ok(())
}

/// The four points `O1 X1 · O2 X2` and their coplanarity determinant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftAttempt {
    pub o1: Point3,
    pub o2: Point3,
    pub points: [Point3; 4],
    /// Determinant of the canonical coordinates; zero iff the points are
    /// coplanar.
    pub determinant: BigInt,
}

/// Intersects the rays through homologous vertices without checking the
/// verdict. Needs vertex perspectivity, otherwise some pair of rays is skew.
pub fn attempt_lift(d: &PlanarDiagram, c1: &Rational, c2: &Rational) -> Result<LiftAttempt> {
    check_parameters(c1, c2)?;
    let o1 = displaced_center(d.center(), c1);
    let o2 = displaced_center(d.center(), c2);
    let mut points = Vec::with_capacity(4);
    for l in Label::ALL {
        let x1 = embed_drawing(d.quad1().vertex(l));
        let x2 = embed_drawing(d.quad2().vertex(l));
        let ray1 = line3_through(&o1, &x1)?;
        let ray2 = line3_through(&o2, &x2)?;
        match meet_lines3(&ray1, &ray2)? {
            LineMeet::Point(p) => points.push(p),
            LineMeet::Skew => return Err(GeomError::NotPerspective),
        }
    }
    let points: [Point3; 4] = points.try_into().expect("four points");
    let determinant = coplanarity_determinant([&points[0], &points[1], &points[2], &points[3]]);
    Ok(LiftAttempt {
        o1,
        o2,
        points,
        determinant,
    })
}

/// Default lift parameters `(1, -1)`.
pub fn default_parameters() -> (Rational, Rational) {
    (Rational::one(), -Rational::one())
}

pub fn lift_collinear_centers(d: &PlanarDiagram, c1: &Rational, c2: &Rational) -> Result<Witness> {
    check_parameters(c1, c2)?;
    if !decide_depiction(d).correct {
        return Err(GeomError::NotCorrectDiagram);
    }
    let attempt = attempt_lift(d, c1, c2)?;
    if !attempt.determinant.is_zero() {
        return Err(GeomError::InconsistentConstruction(
            "lifted vertices are not coplanar",
        ));
    }
    let quad = SpatialQuadrangle::new(attempt.points)
        .map_err(|_| GeomError::InconsistentConstruction("lifted vertices are degenerate"))?;
    if quad.plane() == &drawing_plane() {
        return Err(GeomError::InconsistentConstruction(
            "lifted plane is the drawing plane",
        ));
    }
    Ok(Witness {
        quad,
        o1: attempt.o1,
        o2: attempt.o2,
        drawing_plane: drawing_plane(),
    })
}

/// Anchor points tried in order when choosing the plane through the axis.
const AXIS_ANCHORS: [[i64; 4]; 6] = [
    [0, 0, 1, 0],
    [0, 0, 1, 1],
    [1, 0, 1, 1],
    [0, 1, 1, 1],
    [1, 1, 2, 1],
    [2, -1, 1, 1],
];

pub fn lift_via_axis(d: &PlanarDiagram) -> Result<Witness> {
    if !decide_depiction(d).correct {
        return Err(GeomError::NotCorrectDiagram);
    }
    if !general_position(d.quad1(), d.quad2()) {
        return Err(GeomError::NotGeneralPosition);
    }
    let axis = common_axis(d.quad1(), d.quad2())
        .map_err(|_| GeomError::InconsistentConstruction("correct diagram without common axis"))?;
    let (a, b) = axis.two_points();
    let (a, b) = (embed_drawing(&a), embed_drawing(&b));
    debug_assert!(embed_line(&axis).contains(&a));

    let pi = drawing_plane();
    let o1 = displaced_center(d.center(), &Rational::one());
    let plane = AXIS_ANCHORS
        .iter()
        .map(|c| Point3::from_ints(*c).expect("nonzero"))
        .filter_map(|anchor| plane_through(&a, &b, &anchor).ok())
        .find(|p| p != &pi && !o1.on(p))
        .ok_or(GeomError::InconsistentConstruction(
            "no anchor gives a usable plane",
        ))?;

    let mut barred = Vec::with_capacity(4);
    for l in Label::ALL {
        let ray = line3_through(&o1, &embed_drawing(d.quad1().vertex(l)))?;
        barred.push(meet_line_plane(&ray, &plane)?);
    }
    let barred: [Point3; 4] = barred.try_into().expect("four points");
    let quad = SpatialQuadrangle::with_plane(barred, plane)
        .map_err(|_| GeomError::InconsistentConstruction("cut quadrangle is degenerate"))?;

    // O2 is the common point of the lines joining barred vertices to quad2.
    let rays: Vec<_> = Label::ALL
        .into_iter()
        .map(|l| line3_through(quad.vertex(l), &embed_drawing(d.quad2().vertex(l))))
        .collect::<Result<_>>()
        .map_err(|_| GeomError::InconsistentConstruction("barred vertex on the drawing"))?;
    let o2 = rays
        .iter()
        .enumerate()
        .flat_map(|(i, r)| rays[i + 1..].iter().map(move |s| (r, s)))
        .find_map(|(r, s)| meet_lines3(r, s).ok().and_then(LineMeet::point))
        .ok_or(GeomError::InconsistentConstruction(
            "rays to quad2 do not meet",
        ))?;
    if !rays.iter().all(|r| r.contains(&o2)) {
        return Err(GeomError::InconsistentConstruction(
            "rays to quad2 not concurrent",
        ));
    }
    if o2 == o1 || !collinear3(&embed_drawing(d.center()), &o1, &o2) {
        return Err(GeomError::InconsistentConstruction(
            "centers not collinear with O",
        ));
    }
    Ok(Witness {
        quad,
        o1,
        o2,
        drawing_plane: pi,
    })
}

/// Projects a scene onto the drawing plane from its viewpoint. The shadow
/// becomes the first quadrangle and the spatial quadrangle the second.
pub fn project_scene(s: &SpatialScene) -> Result<PlanarDiagram> {
    let degenerate = |m: &str| GeomError::DegenerateScene(m.to_string());
    let pi = drawing_plane();
    let viewpoint = s.viewpoint.clone().unwrap_or_else(default_viewpoint);
    if s.light.on(s.quad.plane()) || s.light.on(&s.shadow_plane) {
        return Err(degenerate("light lies on a scene plane"));
    }
    if s.quad.plane() == &s.shadow_plane {
        return Err(degenerate("quadrangle lies in the shadow plane"));
    }
    if viewpoint.on(&s.shadow_plane) || viewpoint.on(&pi) {
        return Err(degenerate("viewpoint lies on the shadow or drawing plane"));
    }
    let view = |x: &Point3| -> Result<Point2> {
        let image = central_project(&viewpoint, &pi, x)
            .map_err(|_| degenerate("a scene point coincides with the viewpoint"))?;
        chart_drawing(&image)
    };
    let mut shadow_img = Vec::with_capacity(4);
    let mut quad_img = Vec::with_capacity(4);
    for v in s.quad.vertices() {
        let shadow = central_project(&s.light, &s.shadow_plane, v)?;
        shadow_img.push(view(&shadow)?);
        quad_img.push(view(v)?);
    }
    let to_quad = |pts: Vec<Point2>| {
        Quadrangle::from_array(pts.try_into().expect("four points"))
            .map_err(|e| GeomError::DegenerateScene(format!("projected quadrangle invalid: {e}")))
    };
    let quad1 = to_quad(shadow_img)?;
    let quad2 = to_quad(quad_img)?;
    PlanarDiagram::new(view(&s.light)?, quad1, quad2)
        .map_err(|e| GeomError::DegenerateScene(format!("projected diagram invalid: {e}")))
}

/// One checked property of a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessClause {
    /// The spatial quadrangle is valid and lies in a plane other than the drawing.
    PlanarQuadrangle,
    /// Projecting from `O1` gives the first quadrangle.
    FirstCenter,
    /// Projecting from `O2` gives the second quadrangle.
    SecondCenter,
    /// `O1`, `O2` and the embedded `O` are collinear and `O1 != O2`.
    CentersCollinear,
    /// Diagonal points project to diagonal points from both centers.
    DiagonalCorrespondence,
}

impl WitnessClause {
    pub const ALL: [WitnessClause; 5] = [
        WitnessClause::PlanarQuadrangle,
        WitnessClause::FirstCenter,
        WitnessClause::SecondCenter,
        WitnessClause::CentersCollinear,
        WitnessClause::DiagonalCorrespondence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            WitnessClause::PlanarQuadrangle => "planar-quadrangle",
            WitnessClause::FirstCenter => "first-center",
            WitnessClause::SecondCenter => "second-center",
            WitnessClause::CentersCollinear => "centers-collinear",
            WitnessClause::DiagonalCorrespondence => "diagonal-correspondence",
        }
    }
}

impl fmt::Display for WitnessClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub clauses: [(WitnessClause, bool); 5],
}

impl WitnessReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|(_, ok)| *ok)
    }

    pub fn clause(&self, c: WitnessClause) -> bool {
        self.clauses
            .iter()
            .find(|(k, _)| *k == c)
            .map(|(_, ok)| *ok)
            .unwrap_or(false)
    }

    pub fn failed(&self) -> Vec<WitnessClause> {
        self.clauses
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(c, _)| *c)
            .collect()
    }
}

fn projects_onto(center: &Point3, barred: &Point3, drawn: &Point2) -> bool {
    central_project(center, &drawing_plane(), barred)
        .map(|x| x == embed_drawing(drawn))
        .unwrap_or(false)
}

pub fn verify_witness(d: &PlanarDiagram, w: &Witness) -> WitnessReport {
    let pi = drawing_plane();
    let q = &w.quad;

    let planar = w.drawing_plane == pi
        && check_spatial_vertices(q.vertices()).is_ok()
        && q.vertices().iter().all(|v| v.on(q.plane()))
        && q.plane() != &pi;

    let first = Label::ALL
        .into_iter()
        .all(|l| projects_onto(&w.o1, q.vertex(l), d.quad1().vertex(l)));
    let second = Label::ALL
        .into_iter()
        .all(|l| projects_onto(&w.o2, q.vertex(l), d.quad2().vertex(l)));

    let collinear = w.o1 != w.o2 && collinear3(&w.o1, &w.o2, &embed_drawing(d.center()));

    let (diag1, diag2) = decide_depiction(d).diagonals;
    let diagonal = DiagonalLabel::ALL
        .into_iter()
        .all(|l| match q.diagonal_point(l) {
            Some(x) => {
                projects_onto(&w.o1, &x, diag1.get(l)) && projects_onto(&w.o2, &x, diag2.get(l))
            }
            None => false,
        });

    WitnessReport {
        clauses: [
            (WitnessClause::PlanarQuadrangle, planar),
            (WitnessClause::FirstCenter, first),
            (WitnessClause::SecondCenter, second),
            (WitnessClause::CentersCollinear, collinear),
            (WitnessClause::DiagonalCorrespondence, diagonal),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;

    fn a(x: i64, y: i64) -> Point2 {
        Point2::affine_ints(x, y)
    }
    fn p3(c: [i64; 4]) -> Point3 {
        Point3::from_ints(c).unwrap()
    }

    fn square() -> Quadrangle {
        Quadrangle::new(a(1, 1), a(-1, 1), a(-1, -1), a(1, -1)).unwrap()
    }

    fn dilation() -> PlanarDiagram {
        let q2 = Quadrangle::new(a(-1, 2), a(-5, 2), a(-5, -2), a(-1, -2)).unwrap();
        PlanarDiagram::new(a(3, 0), square(), q2).unwrap()
    }

    fn perturbed() -> PlanarDiagram {
        let q2 = Quadrangle::new(a(-1, 2), a(-9, 3), a(-5, -2), a(-1, -2)).unwrap();
        PlanarDiagram::new(a(3, 0), square(), q2).unwrap()
    }

    fn dilation_witness() -> Witness {
        let (c1, c2) = default_parameters();
        lift_collinear_centers(&dilation(), &c1, &c2).unwrap()
    }

    #[test]
    fn dilation_lift_matches_hand_solution() {
        // Each vertex solves O1 + t(X1 - O1) = O2 + u(X2 - O2); for P this is
        // t = 4/3, u = 2/3, giving (1/3, 4/3, -1/3).
        let w = dilation_witness();
        assert_eq!(w.o1, p3([3, 0, 1, 1]));
        assert_eq!(w.o2, p3([3, 0, -1, 1]));
        assert_eq!(w.quad.vertex(Label::P), &p3([1, 4, -1, 3]));
        assert_eq!(w.quad.vertex(Label::Q), &p3([-7, 4, -1, 3]));
        assert_eq!(w.quad.vertex(Label::R), &p3([-7, -4, -1, 3]));
        assert_eq!(w.quad.vertex(Label::S), &p3([1, -4, -1, 3]));
        assert_eq!(w.quad.plane(), &Plane3::from_ints([0, 0, 3, 1]).unwrap());
    }

    #[test]
    fn lift_errors() {
        let (c1, c2) = default_parameters();
        assert_eq!(
            lift_collinear_centers(&perturbed(), &c1, &c2),
            Err(GeomError::NotCorrectDiagram)
        );
        assert!(matches!(
            lift_collinear_centers(&dilation(), &c1, &c1),
            Err(GeomError::DegenerateParameters(_))
        ));
        assert!(matches!(
            lift_collinear_centers(&dilation(), &rat(0, 1), &c1),
            Err(GeomError::DegenerateParameters(_))
        ));
    }

    #[test]
    fn perturbed_lift_is_not_planar() {
        let (c1, c2) = default_parameters();
        let attempt = attempt_lift(&perturbed(), &c1, &c2).unwrap();
        assert!(!attempt.determinant.is_zero());
    }

    #[test]
    fn dilation_witness_verifies() {
        let report = verify_witness(&dilation(), &dilation_witness());
        assert!(report.passed(), "{:?}", report.failed());
    }

    #[test]
    fn broken_witnesses_fail_the_right_clause() {
        let d = dilation();
        let mut w = dilation_witness();
        w.o2 = p3([3, 1, -1, 1]);
        let report = verify_witness(&d, &w);
        assert!(!report.clause(WitnessClause::CentersCollinear));

        let w = dilation_witness();
        let mut v = w.quad.vertices().clone();
        v[3] = p3([1, -4, 0, 3]);
        let broken = Witness {
            quad: SpatialQuadrangle::from_parts_unchecked(v, w.quad.plane().clone()),
            ..w
        };
        let report = verify_witness(&d, &broken);
        assert!(!report.clause(WitnessClause::PlanarQuadrangle));
    }

    #[test]
    fn scene_round_trip() {
        let w = dilation_witness();
        let back = project_scene(&SpatialScene::from_witness(&w)).unwrap();
        assert_eq!(back, dilation());
    }

    #[test]
    fn viewpoint_on_a_vertex_line_is_degenerate() {
        let w = dilation_witness();
        let mut scene = SpatialScene::from_witness(&w);
        // A point on the line through P̄ and Q̄ (y = 4/3, z = -1/3), off both planes.
        scene.viewpoint = Some(p3([0, 4, -1, 3]));
        assert!(matches!(
            project_scene(&scene),
            Err(GeomError::DegenerateScene(_))
        ));
    }

    #[test]
    fn quadrangle_in_shadow_plane_is_rejected() {
        let quad = SpatialQuadrangle::new([
            p3([1, 1, 0, 1]),
            p3([-1, 1, 0, 1]),
            p3([-1, -1, 0, 1]),
            p3([1, -1, 0, 1]),
        ])
        .unwrap();
        let scene = SpatialScene {
            quad,
            light: p3([0, 0, 5, 1]),
            shadow_plane: drawing_plane(),
            viewpoint: None,
            reading: None,
        };
        assert!(matches!(
            project_scene(&scene),
            Err(GeomError::DegenerateScene(_))
        ));
    }

    #[test]
    fn axis_route_rejects_dilation() {
        assert_eq!(
            lift_via_axis(&dilation()),
            Err(GeomError::NotGeneralPosition)
        );
        assert_eq!(
            lift_via_axis(&perturbed()),
            Err(GeomError::NotCorrectDiagram)
        );
    }

    #[test]
    fn ideal_center_lifts() {
        // Parallel projection: O is the ideal point of the x direction.
        let o = Point2::from_ints([1, 0, 0]).unwrap();
        let q1 = Quadrangle::new(a(0, 0), a(1, 2), a(3, 1), a(2, -2)).unwrap();
        // Translate along x by per-vertex amounts that keep the shape planar:
        // an affine shear x' = x + y + 4 fixes O and the axis y = -4.
        let q2 = q1
            .map(|p| {
                let (x, y) = p.affine_coords().unwrap();
                Point2::affine(&x + &y + rat(4, 1), y)
            })
            .unwrap();
        let d = PlanarDiagram::new(o, q1, q2).unwrap();
        assert!(decide_depiction(&d).correct);
        let (c1, c2) = default_parameters();
        let w = lift_collinear_centers(&d, &c1, &c2).unwrap();
        assert!(w.o1.is_ideal() && w.o2.is_ideal());
        assert!(verify_witness(&d, &w).passed());
    }
}
