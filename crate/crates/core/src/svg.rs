//! Static SVG figures of planar diagrams.
//!
//! Geometry stays exact until the last step; coordinates are converted to
//! floating point only to place strokes in the picture.

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::checker::PlanarDiagram;
use crate::kernel::{join2, Line2, Point2};
use crate::perspectivity::common_axis;
use crate::quadrangle::{diagonal_triangle, DiagonalLabel, Label, Quadrangle, SideLabel};

const CANVAS: f64 = 600.0;
const PAD: f64 = 0.1;

#[derive(Clone, Copy, Debug)]
struct Viewport {
    x0: f64,
    y0: f64,
    x1: f64,
    y1: f64,
}

impl Viewport {
    fn scale(&self) -> f64 {
        CANVAS / (self.x1 - self.x0).max(self.y1 - self.y0)
    }

    fn width(&self) -> f64 {
        (self.x1 - self.x0) * self.scale()
    }

    fn height(&self) -> f64 {
        (self.y1 - self.y0) * self.scale()
    }

    /// World to canvas; the y axis points up in the world and down on screen.
    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        let k = self.scale();
        ((x - self.x0) * k, (self.y1 - y) * k)
    }

    fn center(&self) -> (f64, f64) {
        ((self.x0 + self.x1) / 2.0, (self.y0 + self.y1) / 2.0)
    }

    /// Parameter at which the ray `from + t·dir` leaves the box.
    fn exit(&self, from: (f64, f64), dir: (f64, f64)) -> f64 {
        let mut t = f64::INFINITY;
        if dir.0 > 0.0 {
            t = t.min((self.x1 - from.0) / dir.0);
        } else if dir.0 < 0.0 {
            t = t.min((self.x0 - from.0) / dir.0);
        }
        if dir.1 > 0.0 {
            t = t.min((self.y1 - from.1) / dir.1);
        } else if dir.1 < 0.0 {
            t = t.min((self.y0 - from.1) / dir.1);
        }
        t.max(0.0)
    }

    /// The part of a finite line inside the box, if any.
    fn clip_line(&self, l: &Line2) -> Option<[(f64, f64); 2]> {
        let [a, b, c] = l.coords().clone().map(|v| v.to_f64().unwrap_or(0.0));
        let n = (a * a + b * b).sqrt();
        if n == 0.0 {
            return None;
        }
        // A long chord centred on the foot from the box center, clipped
        // against the four edges (Liang-Barsky).
        let (cx, cy) = self.center();
        let s = (a * cx + b * cy + c) / (n * n);
        let foot = (cx - a * s, cy - b * s);
        let reach = 2.0 * ((self.x1 - self.x0) + (self.y1 - self.y0));
        let dir = (-b / n * reach, a / n * reach);
        let start = (foot.0 - dir.0, foot.1 - dir.1);
        let delta = (2.0 * dir.0, 2.0 * dir.1);
        let (mut lo, mut hi) = (0.0f64, 1.0f64);
        for (p, q) in [
            (-delta.0, start.0 - self.x0),
            (delta.0, self.x1 - start.0),
            (-delta.1, start.1 - self.y0),
            (delta.1, self.y1 - start.1),
        ] {
            if p == 0.0 {
                if q < 0.0 {
                    return None;
                }
            } else if p < 0.0 {
                lo = lo.max(q / p);
            } else {
                hi = hi.min(q / p);
            }
        }
        (lo < hi).then(|| {
            let at = |t: f64| (start.0 + delta.0 * t, start.1 + delta.1 * t);
            [at(lo), at(hi)]
        })
    }
}

fn affine_f64(p: &Point2) -> Option<(f64, f64)> {
    let (x, y) = p.affine_coords()?;
    Some((x.to_f64()?, y.to_f64()?))
}

fn direction_f64(p: &Point2) -> (f64, f64) {
    let c = p.coords();
    (c[0].to_f64().unwrap_or(0.0), c[1].to_f64().unwrap_or(0.0))
}

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

struct Named<'a> {
    name: String,
    point: &'a Point2,
}

fn viewport(points: &[Named]) -> Viewport {
    let affine: Vec<(f64, f64)> = points.iter().filter_map(|n| affine_f64(n.point)).collect();
    let (mut x0, mut y0, mut x1, mut y1) = match affine.first() {
        Some(&(x, y)) => (x, y, x, y),
        None => (-1.0, -1.0, 1.0, 1.0),
    };
    for &(x, y) in &affine {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    // A flat box would make the scale infinite.
    let span = (x1 - x0).max(y1 - y0).max(1.0);
    if x1 == x0 {
        (x0, x1) = (x0 - span / 2.0, x1 + span / 2.0);
    }
    if y1 == y0 {
        (y0, y1) = (y0 - span / 2.0, y1 + span / 2.0);
    }
    let (px, py) = ((x1 - x0) * PAD, (y1 - y0) * PAD);
    Viewport {
        x0: x0 - px,
        y0: y0 - py,
        x1: x1 + px,
        y1: y1 + py,
    }
}

/// World-space segment from `p` to `q`; an ideal endpoint becomes the box edge.
fn segment(vp: &Viewport, p: &Point2, q: &Point2) -> Option<[(f64, f64); 2]> {
    match (affine_f64(p), affine_f64(q)) {
        (Some(a), Some(b)) => Some([a, b]),
        (Some(a), None) | (None, Some(a)) => {
            let ideal = if p.is_ideal() { p } else { q };
            let d = direction_f64(ideal);
            let t = vp.exit(a, d);
            Some([a, (a.0 + d.0 * t, a.1 + d.1 * t)])
        }
        (None, None) => None,
    }
}

fn push_line(out: &mut String, vp: &Viewport, seg: [(f64, f64); 2], class: &str) {
    let (a, b) = (vp.map(seg[0]), vp.map(seg[1]));
    let _ = writeln!(
        out,
        "    <line class=\"{class}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
        num(a.0),
        num(a.1),
        num(b.0),
        num(b.1)
    );
}

fn sides_layer(out: &mut String, vp: &Viewport, q: &Quadrangle, id: &str) {
    let _ = writeln!(out, "  <g id=\"{id}\">");
    for s in SideLabel::ALL {
        let (a, b) = s.endpoints();
        if let Some(seg) = segment(vp, q.vertex(a), q.vertex(b)) {
            push_line(out, vp, seg, "side");
        }
    }
    out.push_str("  </g>\n");
}

pub fn render_svg(d: &PlanarDiagram) -> String {
    let diag1 = diagonal_triangle(d.quad1());
    let diag2 = diagonal_triangle(d.quad2());

    let mut named = vec![Named {
        name: "O".into(),
        point: d.center(),
    }];
    for (i, q) in [d.quad1(), d.quad2()].into_iter().enumerate() {
        for l in Label::ALL {
            named.push(Named {
                name: format!("{}{}", l.name(), i + 1),
                point: q.vertex(l),
            });
        }
    }
    for (i, t) in [&diag1, &diag2].into_iter().enumerate() {
        for l in DiagonalLabel::ALL {
            named.push(Named {
                name: format!("{}{}", l.name(), i + 1),
                point: t.get(l),
            });
        }
    }
    let vp = viewport(&named);

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
        w = num(vp.width()),
        h = num(vp.height())
    );
    out.push_str(concat!(
        "  <defs>\n",
        "    <marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">\n",
        "      <path d=\"M0,0 L10,5 L0,10 z\"/>\n",
        "    </marker>\n",
        "  </defs>\n",
        "  <style>\n",
        "    line { stroke-width: 1.5; fill: none; }\n",
        "    #quad1-sides line { stroke: #1f5fa8; }\n",
        "    #quad2-sides line { stroke: #b3461f; }\n",
        "    #rays line { stroke: #888; stroke-dasharray: 2 4; }\n",
        "    #diagonal-triangles line { stroke: #2a8a3a; stroke-dasharray: 6 3; }\n",
        "    #axis line { stroke: #000; stroke-width: 2; }\n",
        "    .ideal-arrow { stroke: #000; marker-end: url(#head); }\n",
        "    text { font: 12px sans-serif; }\n",
        "  </style>\n",
    ));

    sides_layer(&mut out, &vp, d.quad1(), "quad1-sides");
    sides_layer(&mut out, &vp, d.quad2(), "quad2-sides");

    out.push_str("  <g id=\"rays\">\n");
    let mut rays: Vec<Line2> = Vec::new();
    for q in [d.quad1(), d.quad2()] {
        for l in Label::ALL {
            if let Ok(ray) = join2(d.center(), q.vertex(l)) {
                if !rays.contains(&ray) {
                    rays.push(ray);
                }
            }
        }
    }
    for ray in &rays {
        if let Some(seg) = vp.clip_line(ray) {
            push_line(&mut out, &vp, seg, "ray");
        }
    }
    out.push_str("  </g>\n");

    out.push_str("  <g id=\"diagonal-triangles\">\n");
    for t in [&diag1, &diag2] {
        let p = t.points();
        for (i, j) in [(0, 1), (1, 2), (2, 0)] {
            if let Some(seg) = segment(&vp, &p[i], &p[j]) {
                push_line(&mut out, &vp, seg, "diagonal");
            }
        }
    }
    out.push_str("  </g>\n");

    if let Ok(axis) = common_axis(d.quad1(), d.quad2()) {
        out.push_str("  <g id=\"axis\">\n");
        if let Some(seg) = vp.clip_line(&axis) {
            push_line(&mut out, &vp, seg, "axis");
        }
        out.push_str("  </g>\n");
    }

    out.push_str("  <g id=\"points\">\n");
    for n in &named {
        let Some(p) = affine_f64(n.point) else {
            continue;
        };
        let (x, y) = vp.map(p);
        let class = match n.name.as_bytes()[0] {
            b'O' => "center",
            b'A' | b'B' | b'C' => "diagonal-point",
            _ => "vertex",
        };
        let _ = writeln!(
            out,
            "    <circle class=\"{class}\" cx=\"{}\" cy=\"{}\" r=\"3\"/>",
            num(x),
            num(y)
        );
        let _ = writeln!(
            out,
            "    <text x=\"{}\" y=\"{}\">{}</text>",
            num(x + 5.0),
            num(y - 5.0),
            n.name
        );
    }
    out.push_str("  </g>\n");

    // One arrow per distinct ideal point, labeled with every name it carries.
    let mut ideal: Vec<(&Point2, Vec<&str>)> = Vec::new();
    for n in named.iter().filter(|n| n.point.is_ideal()) {
        match ideal.iter_mut().find(|(p, _)| *p == n.point) {
            Some((_, names)) => names.push(&n.name),
            None => ideal.push((n.point, vec![&n.name])),
        }
    }
    out.push_str("  <g id=\"ideal-points\">\n");
    for (p, names) in &ideal {
        let c = vp.center();
        let d = direction_f64(p);
        let t = vp.exit(c, d);
        let tip = (c.0 + d.0 * t, c.1 + d.1 * t);
        let tail = (c.0 + d.0 * t * 0.8, c.1 + d.1 * t * 0.8);
        push_line(&mut out, &vp, [tail, tip], "ideal-arrow");
        let (x, y) = vp.map(tail);
        let _ = writeln!(
            out,
            "    <text class=\"ideal-label\" x=\"{}\" y=\"{}\">{}</text>",
            num(x + 5.0),
            num(y - 5.0),
            names.join(",")
        );
    }
    out.push_str("  </g>\n</svg>\n");
    out
}
