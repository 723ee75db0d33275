//! Seeded test-instance generators.
//!
//! All randomness comes from [`SplitMix64`], a fixed integer recurrence, so
//! the same `(seed, config)` produces the same instance on every platform and
//! in any language that reimplements the recurrence:
//!
//! ```text
//! state  <- state + 0x9E3779B97F4A7C15            (mod 2^64)
//! z      <- state
//! z      <- (z xor (z >> 30)) * 0xBF58476D1CE4E5B9 (mod 2^64)
//! z      <- (z xor (z >> 27)) * 0x94D049BB133111EB (mod 2^64)
//! output <- z xor (z >> 31)
//! ```
//!
//! An integer in `[lo, hi]` is drawn by taking outputs `x` until
//! `x < floor(2^64 / n) * n` with `n = hi - lo + 1`, then returning
//! `lo + x mod n`. A rational coordinate is a numerator in
//! `[-num_bound, num_bound]` followed by a denominator in `[1, den_bound]`.
//! Instance `i` of a batch seeded with `s` uses seed `s + i (mod 2^64)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::checker::{decide_depiction, PlanarDiagram};
use crate::error::{GeomError, Result};
use crate::kernel::{
    collinear2, concurrent2, drawing_plane, join2, meet2, Line2, Plane3, Point2, Point3, Rational,
};
use crate::lift::{project_scene, SceneReading, SpatialQuadrangle, SpatialScene};
use crate::perspectivity::{general_position, Triangle};
use crate::quadrangle::{Label, Quadrangle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seed(pub u64);

impl Seed {
    /// Seed of instance `i` in a batch.
    pub fn nth(self, i: u64) -> Seed {
        Seed(self.0.wrapping_add(i))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenConfig {
    pub num_bound: u32,
    pub den_bound: u32,
    pub max_retries: u32,
}

impl Default for GenConfig {
    fn default() -> Self {
        Self {
            num_bound: 9,
            den_bound: 9,
            max_retries: 1000,
        }
    }
}

impl GenConfig {
    pub fn validate(&self) -> Result<()> {
        if self.num_bound < 1 || self.den_bound < 1 {
            return Err(GeomError::InvalidConfig(
                "coordinate bounds must be at least 1",
            ));
        }
        if self.max_retries < 1 {
            return Err(GeomError::InvalidConfig("retries must be at least 1"));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: Seed) -> Self {
        Self { state: seed.0 }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform integer in `[lo, hi]`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let n = (hi - lo) as u64 + 1;
        let zone = (u64::MAX / n) * n;
        loop {
            let x = self.next_u64();
            if x < zone {
                return lo + (x % n) as i64;
            }
        }
    }
}

/// Draws bounded rationals and the geometric objects built from them.
struct Sampler {
    rng: SplitMix64,
    cfg: GenConfig,
}

impl Sampler {
    fn new(seed: Seed, cfg: GenConfig) -> Result<Self> {
        cfg.validate()?;
        Ok(Self {
            rng: SplitMix64::new(seed),
            cfg,
        })
    }

    fn rational(&mut self) -> Rational {
        let b = self.cfg.num_bound as i64;
        let n = self.rng.range(-b, b);
        let d = self.rng.range(1, self.cfg.den_bound as i64);
        Rational::new(n.into(), d.into())
    }

    fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if !r.is_zero() {
                return r;
            }
        }
    }

    fn affine_point(&mut self) -> Point2 {
        Point2::affine(self.rational(), self.rational())
    }

    fn point3(&mut self) -> Option<Point3> {
        let c = [
            self.rational(),
            self.rational(),
            self.rational(),
            self.rational(),
        ];
        Point3::from_rationals(&c).ok()
    }

    fn plane(&mut self) -> Option<Plane3> {
        let c = [
            self.rational(),
            self.rational(),
            self.rational(),
            self.rational(),
        ];
        Plane3::from_rationals(&c).ok()
    }

    fn point_on_plane(&mut self, plane: &Plane3) -> Option<Point3> {
        let coeffs = plane.to_rationals();
        let k = coeffs.iter().position(|c| !c.is_zero())?;
        let mut x: [Rational; 4] = [0; 4].map(|_| self.rational());
        let rest: Rational = (0..4).filter(|&j| j != k).map(|j| &coeffs[j] * &x[j]).sum();
        x[k] = -rest / &coeffs[k];
        Point3::from_rationals(&x).ok()
    }

    fn quadrangle(&mut self) -> Option<Quadrangle> {
        Quadrangle::from_array([0; 4].map(|_| self.affine_point())).ok()
    }

    fn triangle(&mut self) -> Option<Triangle> {
        let t = [0; 3].map(|_| self.affine_point());
        (!collinear2(&t[0], &t[1], &t[2])).then_some(t)
    }

    /// `o + t (x - o)` for affine `o` and `x`.
    fn along_ray(o: &Point2, x: &Point2, t: &Rational) -> Point2 {
        let (ox, oy) = o.affine_coords().expect("affine center");
        let (xx, xy) = x.affine_coords().expect("affine point");
        Point2::affine(&ox + (xx - &ox) * t, &oy + (xy - &oy) * t)
    }

    /// A ratio other than 0 and 1, so the image differs from both ends.
    fn ray_ratio(&mut self) -> Rational {
        loop {
            let t = self.nonzero_rational();
            if !t.is_one() {
                return t;
            }
        }
    }

    fn retry<T>(&mut self, mut attempt: impl FnMut(&mut Self) -> Option<T>) -> Result<T> {
        for _ in 0..self.cfg.max_retries {
            if let Some(v) = attempt(self) {
                return Ok(v);
            }
        }
        Err(GeomError::RetriesExhausted(self.cfg.max_retries))
    }
}

pub fn gen_quadrangle(seed: Seed, cfg: &GenConfig) -> Result<Quadrangle> {
    Sampler::new(seed, *cfg)?.retry(|s| s.quadrangle())
}

fn correct_attempt(s: &mut Sampler) -> Option<(SpatialScene, PlanarDiagram)> {
    let plane = s.plane()?;
    let vertices = [(); 4].map(|_| s.point_on_plane(&plane));
    let [Some(p), Some(q), Some(r), Some(v)] = vertices else {
        return None;
    };
    let quad = SpatialQuadrangle::with_plane([p, q, r, v], plane.clone()).ok()?;
    let shadow_plane = s.plane().filter(|p| p != &plane)?;
    let light = s
        .point3()
        .filter(|o| !o.on(&plane) && !o.on(&shadow_plane))?;
    let viewpoint = s.point3()?;
    let reading = if shadow_plane == drawing_plane() {
        SceneReading::ShadowInPlace
    } else {
        SceneReading::BothProjected
    };
    let scene = SpatialScene {
        quad,
        light,
        shadow_plane,
        viewpoint: Some(viewpoint),
        reading: Some(reading),
    };
    let diagram = project_scene(&scene).ok()?;
    Some((scene, diagram))
}

/// A random plane quadrangle in space, its shadow on a random plane and a
/// random viewpoint, projected onto the drawing plane.
pub fn gen_correct_diagram(seed: Seed, cfg: &GenConfig) -> Result<(SpatialScene, PlanarDiagram)> {
    Sampler::new(seed, *cfg)?.retry(correct_attempt)
}

fn incorrect_attempt(s: &mut Sampler) -> Option<PlanarDiagram> {
    let o = s.affine_point();
    let quad1 = s.quadrangle()?;
    let ratios = [(); 4].map(|_| s.nonzero_rational());
    if ratios.iter().all(|t| t == &ratios[0]) {
        return None;
    }
    let mut i = 0;
    let quad2 = quad1
        .map(|x| {
            let y = Sampler::along_ray(&o, x, &ratios[i]);
            i += 1;
            y
        })
        .ok()?;
    let d = PlanarDiagram::new(o, quad1, quad2).ok()?;
    let v = decide_depiction(&d);
    (v.applicable && !v.correct).then_some(d)
}

/// A diagram perspective from its center whose diagonal triangles are not.
pub fn gen_incorrect_diagram(seed: Seed, cfg: &GenConfig) -> Result<PlanarDiagram> {
    Sampler::new(seed, *cfg)?.retry(incorrect_attempt)
}

/// A vertex-perspective pair in general position, correct or incorrect as
/// requested.
pub fn gen_general_position_diagram(
    seed: Seed,
    cfg: &GenConfig,
    correct: bool,
) -> Result<PlanarDiagram> {
    Sampler::new(seed, *cfg)?.retry(|s| {
        let d = if correct {
            correct_attempt(s)?.1
        } else {
            incorrect_attempt(s)?
        };
        general_position(d.quad1(), d.quad2()).then_some(d)
    })
}

/// Which vertex pattern a degenerate diagram shares.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegenerateKind {
    /// `P, Q, R` shared.
    Triangle,
    /// `S` and two of `P, Q, R` shared.
    Vertex,
}

/// A perspective diagram in which exactly one homologous vertex pair differs.
pub fn gen_degenerate_diagram(
    seed: Seed,
    cfg: &GenConfig,
    kind: DegenerateKind,
) -> Result<PlanarDiagram> {
    Sampler::new(seed, *cfg)?.retry(|s| {
        let quad1 = s.quadrangle()?;
        let o = s.affine_point();
        let moved = match kind {
            DegenerateKind::Triangle => Label::S,
            DegenerateKind::Vertex => Label::ALL[s.rng.range(0, 2) as usize],
        };
        let t = s.ray_ratio();
        let quad2 = quad1
            .map(|x| {
                if x == quad1.vertex(moved) {
                    Sampler::along_ray(&o, x, &t)
                } else {
                    x.clone()
                }
            })
            .ok()?;
        PlanarDiagram::new(o, quad1, quad2).ok()
    })
}

/// Triangles perspective from a point `O`, with pairwise distinct
/// homologous sides.
pub fn gen_point_perspective_triangles(
    seed: Seed,
    cfg: &GenConfig,
) -> Result<(Point2, Triangle, Triangle)> {
    Sampler::new(seed, *cfg)?.retry(|s| {
        let o = s.affine_point();
        let t1 = s.triangle()?;
        if t1.contains(&o) {
            return None;
        }
        let t2 = t1.clone().map(|x| {
            let t = s.ray_ratio();
            Sampler::along_ray(&o, &x, &t)
        });
        if collinear2(&t2[0], &t2[1], &t2[2]) {
            return None;
        }
        let distinct_sides = (0..3).all(|i| {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            join2(&t1[j], &t1[k]).ok() != join2(&t2[j], &t2[k]).ok()
        });
        distinct_sides.then_some((o, t1, t2))
    })
}

/// Triangles whose homologous sides meet on a common line, the axis.
pub fn gen_axis_perspective_triangles(
    seed: Seed,
    cfg: &GenConfig,
) -> Result<(Line2, Triangle, Triangle)> {
    Sampler::new(seed, *cfg)?.retry(|s| {
        let axis = join2(&s.affine_point(), &s.affine_point()).ok()?;
        let t1 = s.triangle()?;
        if t1.iter().any(|v| v.on(&axis)) {
            return None;
        }
        let side = |t: &Triangle, i: usize| join2(&t[(i + 1) % 3], &t[(i + 2) % 3]);
        let meets: Vec<Point2> = (0..3)
            .map(|i| meet2(&side(&t1, i).ok()?, &axis).ok())
            .collect::<Option<_>>()?;
        // Vertex 0 is free; vertex 1 lies on the line through vertex 0 and the
        // meet of side 2; vertex 2 closes sides 0 and 1 through their meets.
        let v0 = s.affine_point();
        let lam = BigInt::from(s.rng.range(-9, 9));
        let mu = BigInt::from(s.rng.range(-9, 9));
        let v1 = Point2::from_bigints(
            [0, 1, 2].map(|k| &lam * &meets[2].coords()[k] + &mu * &v0.coords()[k]),
        )
        .ok()?;
        let v2 = meet2(&join2(&meets[0], &v1).ok()?, &join2(&meets[1], &v0).ok()?).ok()?;
        let t2 = [v0, v1, v2];
        if collinear2(&t2[0], &t2[1], &t2[2]) || t2.iter().any(|v| v.on(&axis)) {
            return None;
        }
        let distinct_sides = (0..3).all(|i| side(&t1, i).ok() != side(&t2, i).ok());
        distinct_sides.then_some((axis, t1, t2))
    })
}

/// Whether the lines joining homologous vertices pass through one point.
/// Coincident homologous vertices impose no condition.
pub fn point_perspective(t1: &Triangle, t2: &Triangle) -> bool {
    let lines: Vec<Line2> = t1
        .iter()
        .zip(t2)
        .filter_map(|(a, b)| join2(a, b).ok())
        .collect();
    match lines.as_slice() {
        [a, b, c] => concurrent2(a, b, c),
        _ => true,
    }
}
