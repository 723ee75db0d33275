//! Exact projective calculus for the plane and for space.
//!
//! Every element is stored in a canonical homogeneous form: integer entries
//! with gcd 1 whose first nonzero entry is positive. Two values describe the
//! same projective element exactly when their canonical forms are equal, so
//! the derived `PartialEq` is projective equality.
//!
//! Spatial lines use Plücker coordinates in the order
//! `(p01, p02, p03, p23, p31, p12)` with `p_ij = a_i b_j - a_j b_i` for the
//! line through `a` and `b`. With this order the Grassmann–Plücker relation
//! reads `p01 p23 + p02 p31 + p03 p12 = 0`.
//!
//! The drawing plane is identified with the plane `x2 = 0` of space through
//! [`embed_drawing`] and [`chart_drawing`].

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{GeomError, Result};

/// The exact scalar field.
pub type Rational = BigRational;

/// `n / d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Scales a homogeneous tuple of rationals to its canonical integer form.
pub fn normalize(coords: &[Rational]) -> Result<Vec<BigInt>> {
    let lcm = coords
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = coords
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    canonical_ints(ints)
}

/// Divides out the content and fixes the sign of an integer tuple.
pub fn canonical_ints(mut v: Vec<BigInt>) -> Result<Vec<BigInt>> {
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return Err(GeomError::ZeroVector);
    }
    let negative = v
        .iter()
        .find(|c| !c.is_zero())
        .is_some_and(|c| c.is_negative());
    for c in v.iter_mut() {
        *c = &*c / &g;
        if negative {
            *c = -&*c;
        }
    }
    Ok(v)
}

macro_rules! homogeneous {
    ($(#[$meta:meta])* $name:ident, $n:expr) => {
        $(#[$meta])*
        #[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name([BigInt; $n]);

        impl $name {
            /// Canonicalizes integer coordinates.
            pub fn from_bigints(coords: [BigInt; $n]) -> Result<Self> {
                let v = canonical_ints(coords.to_vec())?;
                Ok(Self(v.try_into().expect("length preserved")))
            }

            pub fn from_ints(coords: [i64; $n]) -> Result<Self> {
                Self::from_bigints(coords.map(BigInt::from))
            }

            pub fn from_rationals(coords: &[Rational; $n]) -> Result<Self> {
                let v = normalize(coords)?;
                Ok(Self(v.try_into().expect("length preserved")))
            }

            /// Canonical integer coordinates.
            pub fn coords(&self) -> &[BigInt; $n] {
                &self.0
            }

            pub fn to_rationals(&self) -> [Rational; $n] {
                self.0.clone().map(Rational::from_integer)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (i, c) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ":")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    };
}

homogeneous!(
    /// A point of the projective plane.
    Point2,
    3
);
homogeneous!(
    /// A line of the projective plane, `l0 x0 + l1 x1 + l2 x2 = 0`.
    Line2,
    3
);
homogeneous!(
    /// A point of projective space.
    Point3,
    4
);
homogeneous!(
    /// A plane of projective space, `a0 x0 + a1 x1 + a2 x2 + a3 x3 = 0`.
    Plane3,
    4
);
homogeneous!(
    /// A line of projective space in Plücker coordinates
    /// `(p01, p02, p03, p23, p31, p12)`.
    Line3,
    6
);

fn dot<const N: usize>(a: &[BigInt; N], b: &[BigInt; N]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn cross(a: &[BigInt; 3], b: &[BigInt; 3]) -> [BigInt; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub(crate) fn det3(rows: [&[BigInt; 3]; 3]) -> BigInt {
    dot(rows[0], &cross(rows[1], rows[2]))
}

fn det4(rows: [&[BigInt; 4]; 4]) -> BigInt {
    // Laplace expansion along the first row.
    let mut total = BigInt::zero();
    for col in 0..4 {
        let minor: Vec<[BigInt; 3]> = rows[1..]
            .iter()
            .map(|r| {
                let v: Vec<BigInt> = (0..4).filter(|&c| c != col).map(|c| r[c].clone()).collect();
                v.try_into().expect("three entries")
            })
            .collect();
        let m = det3([&minor[0], &minor[1], &minor[2]]);
        let term = &rows[0][col] * m;
        if col % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

impl Point2 {
    /// The affine point `(x, y)`, i.e. `(x : y : 1)`.
    pub fn affine(x: Rational, y: Rational) -> Self {
        Self::from_rationals(&[x, y, Rational::one()]).expect("last coordinate is one")
    }

    pub fn affine_ints(x: i64, y: i64) -> Self {
        Self::affine(
            Rational::from_integer(x.into()),
            Rational::from_integer(y.into()),
        )
    }

    pub fn is_ideal(&self) -> bool {
        self.0[2].is_zero()
    }

    /// Affine coordinates, or `None` for a point at infinity.
    pub fn affine_coords(&self) -> Option<(Rational, Rational)> {
        if self.is_ideal() {
            return None;
        }
        let w = &self.0[2];
        Some((
            Rational::new(self.0[0].clone(), w.clone()),
            Rational::new(self.0[1].clone(), w.clone()),
        ))
    }

    pub fn on(&self, line: &Line2) -> bool {
        dot(&self.0, &line.0).is_zero()
    }
}

impl Line2 {
    pub fn contains(&self, p: &Point2) -> bool {
        p.on(self)
    }

    /// The line at infinity `x2 = 0`.
    pub fn at_infinity() -> Self {
        Self::from_ints([0, 0, 1]).expect("nonzero")
    }

    /// Two distinct points on the line, taken from its meets with the
    /// coordinate lines.
    pub fn two_points(&self) -> (Point2, Point2) {
        let mut found: Vec<Point2> = Vec::with_capacity(2);
        for k in 0..3 {
            let mut basis = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
            basis[k] = BigInt::one();
            if let Ok(p) = Point2::from_bigints(cross(&self.0, &basis)) {
                if !found.contains(&p) {
                    found.push(p);
                }
            }
            if found.len() == 2 {
                break;
            }
        }
        let second = found
            .pop()
            .expect("a line meets the coordinate lines twice");
        let first = found
            .pop()
            .expect("a line meets the coordinate lines twice");
        (first, second)
    }
}

impl Point3 {
    pub fn affine(x: Rational, y: Rational, z: Rational) -> Self {
        Self::from_rationals(&[x, y, z, Rational::one()]).expect("last coordinate is one")
    }

    pub fn is_ideal(&self) -> bool {
        self.0[3].is_zero()
    }

    pub fn on(&self, plane: &Plane3) -> bool {
        dot(&self.0, &plane.0).is_zero()
    }
}

impl Plane3 {
    pub fn contains(&self, x: &Point3) -> bool {
        x.on(self)
    }
}

impl Line3 {
    /// Accepts raw Plücker coordinates, rejecting tuples that are not lines.
    pub fn from_pluecker(coords: [BigInt; 6]) -> Result<Self> {
        let line = Self::from_bigints(coords)?;
        if !line.satisfies_pluecker_relation() {
            return Err(GeomError::NotALine);
        }
        Ok(line)
    }

    pub fn pluecker_relation(&self) -> BigInt {
        let p = &self.0;
        &p[0] * &p[3] + &p[1] * &p[4] + &p[2] * &p[5]
    }

    pub fn satisfies_pluecker_relation(&self) -> bool {
        self.pluecker_relation().is_zero()
    }

    /// Antisymmetric matrix with entries `p_ij`.
    fn primal(&self) -> [[BigInt; 4]; 4] {
        let [p01, p02, p03, p23, p31, p12] = self.0.clone();
        let z = BigInt::zero;
        [
            [z(), p01.clone(), p02.clone(), p03.clone()],
            [-p01, z(), p12.clone(), -p31.clone()],
            [-p02, -p12, z(), p23.clone()],
            [-p03, p31, -p23, z()],
        ]
    }

    /// Dual antisymmetric matrix; it annihilates every point of the line.
    fn dual(&self) -> [[BigInt; 4]; 4] {
        let [p01, p02, p03, p23, p31, p12] = self.0.clone();
        let z = BigInt::zero;
        [
            [z(), p23.clone(), p31.clone(), p12.clone()],
            [-p23, z(), p03.clone(), -p02.clone()],
            [-p31, -p03, z(), p01.clone()],
            [-p12, p02, -p01, z()],
        ]
    }

    /// The plane spanned by the line and `x`, as a raw (possibly zero) vector.
    fn plane_with_raw(&self, x: &Point3) -> [BigInt; 4] {
        self.dual().map(|row| dot(&row, &x.0))
    }

    pub fn contains(&self, x: &Point3) -> bool {
        self.plane_with_raw(x).iter().all(Zero::is_zero)
    }

    /// The reciprocal bilinear form; zero exactly for coplanar line pairs.
    pub fn reciprocal(&self, other: &Line3) -> BigInt {
        let p = &self.0;
        let q = &other.0;
        &p[0] * &q[3]
            + &p[1] * &q[4]
            + &p[2] * &q[5]
            + &p[3] * &q[0]
            + &p[4] * &q[1]
            + &p[5] * &q[2]
    }
}

/// The line through two distinct points of the plane.
pub fn join2(p: &Point2, q: &Point2) -> Result<Line2> {
    if p == q {
        return Err(GeomError::CoincidentPoints);
    }
    Line2::from_bigints(cross(&p.0, &q.0))
}

/// The common point of two distinct lines of the plane.
pub fn meet2(l: &Line2, m: &Line2) -> Result<Point2> {
    if l == m {
        return Err(GeomError::CoincidentLines);
    }
    Point2::from_bigints(cross(&l.0, &m.0))
}

/// Whether three points lie on one line. Coincident points count as collinear.
pub fn collinear2(p: &Point2, q: &Point2, r: &Point2) -> bool {
    det3([&p.0, &q.0, &r.0]).is_zero()
}

/// Whether three lines pass through one point.
pub fn concurrent2(l: &Line2, m: &Line2, n: &Line2) -> bool {
    det3([&l.0, &m.0, &n.0]).is_zero()
}

pub fn line3_through(a: &Point3, b: &Point3) -> Result<Line3> {
    if a == b {
        return Err(GeomError::CoincidentPoints);
    }
    let p = |i: usize, j: usize| &a.0[i] * &b.0[j] - &a.0[j] * &b.0[i];
    Line3::from_bigints([p(0, 1), p(0, 2), p(0, 3), p(2, 3), p(3, 1), p(1, 2)])
}

pub fn plane_through(a: &Point3, b: &Point3, c: &Point3) -> Result<Plane3> {
    let line = line3_through(a, b).map_err(|_| GeomError::CollinearPoints)?;
    Plane3::from_bigints(line.plane_with_raw(c)).map_err(|_| GeomError::CollinearPoints)
}

/// Whether three points of space lie on one line.
pub fn collinear3(a: &Point3, b: &Point3, c: &Point3) -> bool {
    match line3_through(a, b) {
        Ok(line) => line.contains(c),
        Err(_) => true,
    }
}

/// The 4×4 determinant of the canonical coordinates. Zero exactly when the
/// four points are coplanar; its sign and size depend on the representatives.
pub fn coplanarity_determinant(pts: [&Point3; 4]) -> BigInt {
    det4([&pts[0].0, &pts[1].0, &pts[2].0, &pts[3].0])
}

pub fn meet_line_plane(line: &Line3, plane: &Plane3) -> Result<Point3> {
    let raw = line.primal().map(|row| dot(&row, &plane.0));
    Point3::from_bigints(raw).map_err(|_| GeomError::LineInPlane)
}

/// Outcome of intersecting two spatial lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineMeet {
    Point(Point3),
    Skew,
}

impl LineMeet {
    pub fn point(self) -> Option<Point3> {
        match self {
            LineMeet::Point(p) => Some(p),
            LineMeet::Skew => None,
        }
    }
}

pub fn meet_lines3(l1: &Line3, l2: &Line3) -> Result<LineMeet> {
    if l1 == l2 {
        return Err(GeomError::CoincidentLines);
    }
    if !l1.reciprocal(l2).is_zero() {
        return Ok(LineMeet::Skew);
    }
    // Cut l1 with a plane through l2 other than the common plane. Of the
    // planes joining l2 to the four basis points at least one qualifies.
    for k in 0..4 {
        let mut basis = [
            BigInt::zero(),
            BigInt::zero(),
            BigInt::zero(),
            BigInt::zero(),
        ];
        basis[k] = BigInt::one();
        let Ok(plane) = Plane3::from_bigints(l2.plane_with_raw(&Point3(basis))) else {
            continue;
        };
        if let Ok(x) = meet_line_plane(l1, &plane) {
            return Ok(LineMeet::Point(x));
        }
    }
    unreachable!("distinct coplanar lines always meet")
}

pub fn central_project(center: &Point3, target: &Plane3, x: &Point3) -> Result<Point3> {
    if center.on(target) {
        return Err(GeomError::CenterOnTarget);
    }
    if x == center {
        return Err(GeomError::ProjectingCenter);
    }
    meet_line_plane(&line3_through(center, x)?, target)
}

/// The plane `x2 = 0` that carries the drawing.
pub fn drawing_plane() -> Plane3 {
    Plane3::from_ints([0, 0, 1, 0]).expect("nonzero")
}

/// `(x0 : x1 : x2) -> (x0 : x1 : 0 : x2)`.
pub fn embed_drawing(p: &Point2) -> Point3 {
    let [a, b, c] = p.0.clone();
    Point3([a, b, BigInt::zero(), c])
}

pub fn chart_drawing(x: &Point3) -> Result<Point2> {
    if !x.0[2].is_zero() {
        return Err(GeomError::NotOnDrawingPlane);
    }
    let [a, b, _, d] = x.0.clone();
    Ok(Point2([a, b, d]))
}

/// The spatial line carried by a line of the drawing.
pub fn embed_line(l: &Line2) -> Line3 {
    let (a, b) = l.two_points();
    line3_through(&embed_drawing(&a), &embed_drawing(&b)).expect("distinct points")
}
