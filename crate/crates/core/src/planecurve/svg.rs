//! SVG rendering of plane curves. Rays are clipped to a bounding box.

use std::fmt::Write;

use num_traits::ToPrimitive;

use super::{EdgeKind, PlaneTropicalCurve};
use crate::Rational;

/// Axis-aligned box `[x0, x1] × [y0, y1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundingBox {
    pub x0: Rational,
    pub y0: Rational,
    pub x1: Rational,
    pub y1: Rational,
}

impl BoundingBox {
    /// Box around all vertices, padded by one unit or a quarter of its size.
    pub fn around(c: &PlaneTropicalCurve) -> BoundingBox {
        let xs = c.vertices().iter().map(|p| &p[0]);
        let ys = c.vertices().iter().map(|p| &p[1]);
        let (x0, x1) = (xs.clone().min().cloned().unwrap_or_default(), xs.max().cloned().unwrap_or_default());
        let (y0, y1) = (ys.clone().min().cloned().unwrap_or_default(), ys.max().cloned().unwrap_or_default());
        let span = std::cmp::max(&x1 - &x0, &y1 - &y0);
        let pad = std::cmp::max(Rational::from_integer(1.into()), span / Rational::from_integer(4.into()));
        BoundingBox { x0: x0 - &pad, y0: y0 - &pad, x1: x1 + &pad, y1: y1 + &pad }
    }
}

fn f(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(0.0)
}

/// Liang-Barsky clip of `p + t·d`, `t ∈ [0, t_max]`, to the box.
fn clip(p: [f64; 2], d: [f64; 2], t_max: f64, b: [f64; 4]) -> Option<([f64; 2], [f64; 2])> {
    let (mut lo, mut hi) = (0.0f64, t_max);
    let checks = [(-d[0], p[0] - b[0]), (d[0], b[2] - p[0]), (-d[1], p[1] - b[1]), (d[1], b[3] - p[1])];
    for (pk, qk) in checks {
        if pk == 0.0 {
            if qk < 0.0 {
                return None;
            }
        } else {
            let r = qk / pk;
            if pk < 0.0 {
                lo = lo.max(r);
            } else {
                hi = hi.min(r);
            }
        }
    }
    (lo <= hi).then(|| ([p[0] + lo * d[0], p[1] + lo * d[1]], [p[0] + hi * d[0], p[1] + hi * d[1]]))
}

pub fn render(c: &PlaneTropicalCurve, bbox: &BoundingBox) -> String {
    let b = [f(&bbox.x0), f(&bbox.y0), f(&bbox.x1), f(&bbox.y1)];
    let (w, h) = ((b[2] - b[0]).max(1e-9), (b[3] - b[1]).max(1e-9));
    let size = 600.0;
    let s = size / w.max(h);
    let to_px = |p: [f64; 2]| ((p[0] - b[0]) * s, (b[3] - p[1]) * s);
    let reach = 2.0 * (w + h) + b.iter().map(|v| v.abs()).sum::<f64>();

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{:.0}" height="{:.0}" viewBox="0 0 {:.4} {:.4}">"#,
        w * s,
        h * s,
        w * s,
        h * s
    );
    let _ = writeln!(out, r#"<g stroke="black" stroke-linecap="round" fill="none">"#);
    let mut labels = String::new();
    for e in c.edges() {
        let (p, d, t_max) = match e.kind {
            EdgeKind::Segment { a, b: bb } => {
                let (p, q) = (&c.vertices()[a], &c.vertices()[bb]);
                let p = [f(&p[0]), f(&p[1])];
                (p, [f(&q[0]) - p[0], f(&q[1]) - p[1]], 1.0)
            }
            EdgeKind::Ray { v, dir } => {
                let p = &c.vertices()[v];
                ([f(&p[0]), f(&p[1])], [dir[0] as f64, dir[1] as f64], reach)
            }
        };
        let Some((u, v)) = clip(p, d, t_max, b) else {
            continue;
        };
        let ((x1, y1), (x2, y2)) = (to_px(u), to_px(v));
        let _ = writeln!(
            out,
            r#"<line x1="{x1:.4}" y1="{y1:.4}" x2="{x2:.4}" y2="{y2:.4}" stroke-width="{}"/>"#,
            1.5 * e.weight as f64
        );
        if e.weight >= 2 {
            let _ = writeln!(
                labels,
                r#"<text x="{:.4}" y="{:.4}" font-size="14">{}</text>"#,
                (x1 + x2) / 2.0 + 4.0,
                (y1 + y2) / 2.0 - 4.0,
                e.weight
            );
        }
    }
    let _ = writeln!(out, "</g>");
    for p in c.vertices() {
        let pf = [f(&p[0]), f(&p[1])];
        if pf[0] >= b[0] && pf[0] <= b[2] && pf[1] >= b[1] && pf[1] <= b[3] {
            let (x, y) = to_px(pf);
            let _ = writeln!(out, r#"<circle cx="{x:.4}" cy="{y:.4}" r="3" fill="black"/>"#);
        }
    }
    out.push_str(&labels);
    out.push_str("</svg>\n");
    out
}
