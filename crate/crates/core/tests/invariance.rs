//! The verdict depends only on the projective configuration: it survives
//! collineations of the drawing, simultaneous relabeling and swapping the
//! two quadrangles.

use depiction::checker::{decide_depiction, PlanarDiagram};
use depiction::generators::{
    gen_correct_diagram, gen_incorrect_diagram, GenConfig, Seed, SplitMix64,
};
use depiction::perspectivity::{
    common_axis, fixes_axis_and_center, perspective_collineation, Collineation,
};
use depiction::quadrangle::Label;

fn random_collineation(rng: &mut SplitMix64) -> Collineation {
    loop {
        let mut rows = [[0i64; 3]; 3];
        for row in rows.iter_mut() {
            for x in row.iter_mut() {
                *x = rng.range(-5, 5);
            }
        }
        if let Ok(h) = Collineation::from_int_rows(rows) {
            return h;
        }
    }
}

fn transformed(d: &PlanarDiagram, h: &Collineation) -> PlanarDiagram {
    PlanarDiagram::new(
        h.apply_point(d.center()),
        h.apply_quadrangle(d.quad1()),
        h.apply_quadrangle(d.quad2()),
    )
    .unwrap()
}

fn sample(n: u64) -> Vec<PlanarDiagram> {
    let cfg = GenConfig::default();
    let mut out = Vec::new();
    for i in 0..n {
        out.push(gen_correct_diagram(Seed(500).nth(i), &cfg).unwrap().1);
        out.push(gen_incorrect_diagram(Seed(900).nth(i), &cfg).unwrap());
    }
    out
}

#[test]
fn verdict_is_invariant_under_collineations() {
    let mut rng = SplitMix64::new(Seed(11));
    for d in sample(60) {
        let v = decide_depiction(&d);
        let h = random_collineation(&mut rng);
        let w = decide_depiction(&transformed(&d, &h));
        assert_eq!(v.applicable, w.applicable);
        assert_eq!(v.correct, w.correct);
        assert_eq!(v.diagonal_pairs, w.diagonal_pairs);
        assert_eq!(w.diagonals.0, diagonal_image(&v.diagonals.0, &h));
    }
}

fn diagonal_image(
    t: &depiction::quadrangle::DiagonalTriangle,
    h: &Collineation,
) -> depiction::quadrangle::DiagonalTriangle {
    depiction::quadrangle::DiagonalTriangle::from_points(
        t.points().clone().map(|p| h.apply_point(&p)),
    )
}

#[test]
fn verdict_is_invariant_under_relabeling_and_swap() {
    use Label::*;
    let perms = [[Q, R, S, P], [S, R, Q, P], [R, P, Q, S], [P, S, R, Q]];
    for d in sample(40) {
        let correct = decide_depiction(&d).correct;
        for perm in perms {
            let r = PlanarDiagram::new(
                d.center().clone(),
                d.quad1().relabel(perm).unwrap(),
                d.quad2().relabel(perm).unwrap(),
            )
            .unwrap();
            assert_eq!(decide_depiction(&r).correct, correct);
        }
        let swapped =
            PlanarDiagram::new(d.center().clone(), d.quad2().clone(), d.quad1().clone()).unwrap();
        assert_eq!(decide_depiction(&swapped).correct, correct);
    }
}

#[test]
fn perspective_collineation_fixes_center_and_axis() {
    let cfg = GenConfig::default();
    for i in 0..50 {
        let (_, d) = gen_correct_diagram(Seed(77).nth(i), &cfg).unwrap();
        let Ok(axis) = common_axis(d.quad1(), d.quad2()) else {
            continue;
        };
        let p1 = d.quad1().vertex(Label::P);
        let p2 = d.quad2().vertex(Label::P);
        let Ok(h) = perspective_collineation(d.center(), &axis, (p1, p2)) else {
            continue;
        };
        assert!(fixes_axis_and_center(&h, d.center(), &axis));
        let back = h.inverse();
        assert_eq!(back.apply_quadrangle(d.quad2()), d.quad1().clone());
        assert_eq!(h.compose(&back).apply_point(p1), p1.clone());
    }
}
