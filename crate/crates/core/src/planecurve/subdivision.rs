//! Corner locus via the regular subdivision induced on the Newton polygon
//! by the upper hull of the lifted exponents.

use std::collections::BTreeMap;

use super::{CurveEdge, PlaneTropicalCurve, Point};
use crate::polynomial::TropicalPolynomial;
use crate::polytope::{affine_dimension, convex_hull_2d, LatticePolytope};
use crate::rational::{int, lattice_length};
use crate::{Error, Rational, Result};

/// One cell of the subdivision: a lattice polygon (or a segment when the
/// Newton polygon is itself a segment) together with every exponent whose
/// lifted point lies on the corresponding upper face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualCell {
    /// Strict hull of the cell, counter-clockwise.
    pub polygon: Vec<[i64; 2]>,
    pub points: Vec<[i64; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualSubdivision {
    pub polygon: LatticePolytope,
    pub cells: Vec<DualCell>,
}

impl DualSubdivision {
    /// Cells of full dimension.
    pub fn two_cells(&self) -> impl Iterator<Item = &DualCell> {
        self.cells.iter().filter(|c| c.polygon.len() >= 3)
    }
}

fn lifted(f: &TropicalPolynomial) -> Vec<([i64; 2], Rational)> {
    f.active_terms()
        .into_iter()
        .map(|t| ([t.exponent[0], t.exponent[1]], t.coefficient))
        .collect()
}

fn dot(j: [i64; 2], x: &Point) -> Rational {
    &x[0] * int(j[0]) + &x[1] * int(j[1])
}

/// Upper faces of the lifted point set, keyed by gradient, each with the
/// exponents lying on it. Walks from one face to its neighbours across cell
/// edges: the neighbour across `p -> q` is the steepest tilt of the current
/// plane about the lifted edge that still supports every point.
fn upper_faces(pts: &[([i64; 2], Rational)]) -> BTreeMap<Point, Vec<[i64; 2]>> {
    let exps: Vec<[i64; 2]> = pts.iter().map(|(e, _)| *e).collect();
    let hull = convex_hull_2d(&exps);
    let cross = |d: [i64; 2], p: [i64; 2], j: [i64; 2]| d[0] * (j[1] - p[1]) - d[1] * (j[0] - p[0]);

    // a first face, through the upper hull over the boundary edge hull[0] -> hull[1]
    let (p, q) = (hull[0], hull[1]);
    let d = {
        let l = lattice_length([q[0] - p[0], q[1] - p[1]]);
        [(q[0] - p[0]) / l, (q[1] - p[1]) / l]
    };
    let a_p = &pts.iter().find(|(e, _)| *e == p).expect("hull point is a term").1;
    let steps = |j: [i64; 2]| ((j[0] - p[0]) * d[0] + (j[1] - p[1]) * d[1]) / (d[0] * d[0] + d[1] * d[1]);
    let sigma = pts
        .iter()
        .filter(|(e, _)| *e != p && cross(d, p, *e) == 0 && steps(*e) > 0)
        .map(|(e, a)| (a - a_p) / int(steps(*e)))
        .max()
        .expect("boundary edge has a far end");
    let norm2 = int(d[0] * d[0] + d[1] * d[1]);
    let along = [&sigma * int(d[0]) / &norm2, &sigma * int(d[1]) / &norm2];
    let base = |j: [i64; 2]| a_p + dot([j[0] - p[0], j[1] - p[1]], &along);
    let tilt = pts
        .iter()
        .filter(|(e, _)| cross(d, p, *e) > 0)
        .map(|(e, a)| (a - base(*e)) / int(cross(d, p, *e)))
        .max()
        .expect("two-dimensional support");
    let g0 = [&along[0] - &tilt * int(d[1]), &along[1] + &tilt * int(d[0])];

    let mut faces: BTreeMap<Point, Vec<[i64; 2]>> = BTreeMap::new();
    let mut queue = vec![g0];
    while let Some(g) = queue.pop() {
        if faces.contains_key(&g) {
            continue;
        }
        let offsets: Vec<Rational> = pts.iter().map(|(e, a)| a - dot(*e, &g)).collect();
        let c0 = offsets.iter().max().expect("nonempty").clone();
        let on: Vec<[i64; 2]> = pts.iter().zip(&offsets).filter(|(_, o)| **o == c0).map(|((e, _), _)| *e).collect();
        let poly = convex_hull_2d(&on);
        for w in 0..poly.len() {
            let (p, q) = (poly[w], poly[(w + 1) % poly.len()]);
            let d = [q[0] - p[0], q[1] - p[1]];
            // outside the cell means cross < 0; tilt by s times mu = -cross
            let s = pts
                .iter()
                .filter(|(e, _)| cross(d, p, *e) < 0)
                .map(|(e, a)| (a - (&c0 + dot(*e, &g))) / int(-cross(d, p, *e)))
                .max();
            if let Some(s) = s {
                let next = [&g[0] + &s * int(d[1]), &g[1] - &s * int(d[0])];
                if !faces.contains_key(&next) {
                    queue.push(next);
                }
            }
        }
        faces.insert(g, on);
    }
    faces
}

/// (cell, ccw start, ccw end) for one side of a subdivision edge.
type CellSide = (usize, [i64; 2], [i64; 2]);

/// The tropical curve `V(f)` of a polynomial in two variables.
///
/// Vertices are dual to the two-dimensional cells of the subdivision, bounded
/// edges to interior subdivision edges and rays to boundary edges; each weight
/// is the lattice length of the dual edge.
pub fn corner_locus(f: &TropicalPolynomial) -> Result<PlaneTropicalCurve> {
    if f.dimension() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: f.dimension() });
    }
    let polygon = LatticePolytope::from_points(&f.exponents());
    match affine_dimension(&f.exponents()) {
        0 => return Err(Error::EmptyCurve),
        1 => {
            let pts = lifted(f);
            if pts.len() < 2 {
                return Err(Error::EmptyCurve);
            }
            return Ok(parallel_lines(&pts, polygon));
        }
        _ => {}
    }
    // inactive terms lie strictly below every upper face, so they never show up
    let all: Vec<([i64; 2], Rational)> = f
        .terms()
        .iter()
        .map(|t| ([t.exponent[0], t.exponent[1]], t.coefficient.clone()))
        .collect();

    let faces = upper_faces(&all);

    let mut vertices: Vec<Point> = Vec::with_capacity(faces.len());
    let mut cells = Vec::with_capacity(faces.len());
    let mut edge_cells: BTreeMap<([i64; 2], [i64; 2]), Vec<CellSide>> = BTreeMap::new();
    for (ci, (g, on)) in faces.into_iter().enumerate() {
        // max over terms of a_j + j·x is attained by the whole cell at x = -g
        vertices.push([-&g[0], -&g[1]]);
        let poly = convex_hull_2d(&on);
        for w in 0..poly.len() {
            let (p, q) = (poly[w], poly[(w + 1) % poly.len()]);
            edge_cells.entry((p.min(q), p.max(q))).or_default().push((ci, p, q));
        }
        let mut points = on;
        points.sort();
        cells.push(DualCell { polygon: poly, points });
    }

    let mut edges = Vec::new();
    for ((p, q), owners) in edge_cells {
        let weight = lattice_length([q[0] - p[0], q[1] - p[1]]) as u64;
        match owners.as_slice() {
            [(a, _, _), (b, _, _)] => edges.push(CurveEdge::segment(*a, *b, weight)),
            [(a, s, t)] => {
                let d = [t[0] - s[0], t[1] - s[1]];
                let l = lattice_length(d);
                edges.push(CurveEdge::ray(*a, [d[1] / l, -d[0] / l], weight));
            }
            _ => {
                return Err(Error::Internal(format!(
                    "subdivision edge {p:?}-{q:?} bounds {} cells",
                    owners.len()
                )))
            }
        }
    }
    let curve = PlaneTropicalCurve::new(vertices, edges)?;
    Ok(curve.with_dual(DualSubdivision { polygon, cells }))
}

/// Corner locus when all active exponents are collinear: a family of
/// parallel lines, each stored as a 2-valent vertex with two opposite rays.
fn parallel_lines(pts: &[([i64; 2], Rational)], polygon: LatticePolytope) -> PlaneTropicalCurve {
    let mut pts = pts.to_vec();
    pts.sort();
    // Group consecutive points lying on a common upper face (equal slope).
    let slope = |a: &([i64; 2], Rational), b: &([i64; 2], Rational)| {
        let len = lattice_length([b.0[0] - a.0[0], b.0[1] - a.0[1]]);
        (&b.1 - &a.1) / int(len)
    };
    let mut groups: Vec<Vec<([i64; 2], Rational)>> = Vec::new();
    let mut current = vec![pts[0].clone()];
    let mut current_slope: Option<Rational> = None;
    for w in pts.windows(2) {
        let s = slope(&w[0], &w[1]);
        match &current_slope {
            Some(cs) if *cs != s => {
                groups.push(std::mem::take(&mut current));
                current.push(w[0].clone());
            }
            _ => {}
        }
        current_slope = Some(s);
        current.push(w[1].clone());
    }
    groups.push(current);

    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut cells = Vec::new();
    for g in groups {
        let (p, ap) = g.first().cloned().expect("nonempty group");
        let (q, aq) = g.last().cloned().expect("nonempty group");
        let d = [q[0] - p[0], q[1] - p[1]];
        let len = lattice_length(d);
        let norm2 = int(d[0] * d[0] + d[1] * d[1]);
        // the tie a_p + p·x = a_q + q·x is the line d·x = a_p - a_q
        let t = (&ap - &aq) / norm2;
        let v = vertices.len();
        vertices.push([&t * int(d[0]), &t * int(d[1])]);
        let perp = [-d[1] / len, d[0] / len];
        edges.push(CurveEdge::ray(v, perp, len as u64));
        edges.push(CurveEdge::ray(v, [-perp[0], -perp[1]], len as u64));
        cells.push(DualCell { polygon: vec![p, q], points: g.iter().map(|(e, _)| *e).collect() });
    }
    PlaneTropicalCurve::new(vertices, edges)
        .expect("parallel lines are well formed")
        .with_dual(DualSubdivision { polygon, cells })
}

#[cfg(test)]
mod tests {
    use super::super::{check_balanced, point, EdgeKind};
    use super::*;
    use crate::rational::ratio;

    fn poly(terms: &[([i64; 2], Rational)]) -> TropicalPolynomial {
        TropicalPolynomial::from_terms(2, terms.iter().map(|(e, c)| (e.to_vec(), c.clone()))).unwrap()
    }

    fn line() -> TropicalPolynomial {
        poly(&[([0, 0], int(0)), ([1, 0], int(0)), ([0, 1], int(0))])
    }

    /// Directions and weights of all rays of a curve.
    fn rays(c: &PlaneTropicalCurve) -> Vec<([i64; 2], u64)> {
        let mut r: Vec<_> = c
            .edges()
            .iter()
            .filter_map(|e| match e.kind {
                EdgeKind::Ray { dir, .. } => Some((dir, e.weight)),
                _ => None,
            })
            .collect();
        r.sort();
        r
    }

    #[test]
    fn standard_line() {
        let c = corner_locus(&line()).unwrap();
        assert_eq!(c.vertices(), &[point(0, 0)]);
        assert_eq!(rays(&c), vec![([-1, 0], 1), ([0, -1], 1), ([1, 1], 1)]);
        assert!(check_balanced(&c));
        assert_eq!(c, PlaneTropicalCurve::standard_line(point(0, 0)));
    }

    #[test]
    fn squared_line_doubles_weights() {
        let f = line();
        let c = corner_locus(&f.trop_product(&f).unwrap()).unwrap();
        assert_eq!(c.vertices(), &[point(0, 0)]);
        assert_eq!(rays(&c), vec![([-1, 0], 2), ([0, -1], 2), ([1, 1], 2)]);
    }

    #[test]
    fn unit_square_with_lowered_corner() {
        let f = poly(&[([0, 0], int(0)), ([1, 0], int(0)), ([0, 1], int(0)), ([1, 1], int(-1))]);
        let c = corner_locus(&f).unwrap().canonical();
        assert_eq!(c.vertices(), &[point(0, 0), point(1, 1)]);
        let mut expected = [
            CurveEdge::segment(0, 1, 1),
            CurveEdge::ray(0, [-1, 0], 1),
            CurveEdge::ray(0, [0, -1], 1),
            CurveEdge::ray(1, [1, 0], 1),
            CurveEdge::ray(1, [0, 1], 1),
        ];
        expected.sort();
        assert_eq!(c.edges(), &expected[..]);
        assert_eq!(c.dual().unwrap().two_cells().count(), 2);
    }

    /// Sampling cross-check: on each bounded edge the interior points see
    /// exactly two maximising terms, and every vertex sees at least three.
    #[test]
    fn corner_locus_matches_ties() {
        let f = poly(&[
            ([0, 0], int(0)),
            ([1, 0], int(0)),
            ([0, 1], int(0)),
            ([1, 1], int(-1)),
            ([2, 0], ratio(-3, 2)),
            ([0, 2], int(-4)),
        ]);
        let c = corner_locus(&f).unwrap();
        for v in c.vertices() {
            assert!(f.maximizing_terms(v).unwrap().len() >= 3);
        }
        for e in c.edges() {
            let probe = match e.kind {
                EdgeKind::Segment { a, b } => {
                    let (p, q) = (&c.vertices()[a], &c.vertices()[b]);
                    [(&p[0] + &q[0]) / int(2), (&p[1] + &q[1]) / int(2)]
                }
                EdgeKind::Ray { v, dir } => {
                    let p = &c.vertices()[v];
                    [&p[0] + int(dir[0]) * ratio(1, 3), &p[1] + int(dir[1]) * ratio(1, 3)]
                }
            };
            assert_eq!(f.maximizing_terms(&probe).unwrap().len(), 2, "{e:?}");
        }
    }

    #[test]
    fn empty_curve_signal() {
        let single = poly(&[([1, 1], int(2))]);
        assert_eq!(corner_locus(&single).unwrap_err(), Error::EmptyCurve);
        let dominated = poly(&[([0, 0], int(0)), ([1, 0], int(-3)), ([2, 0], int(0)), ([1, 1], int(-9))]);
        assert!(corner_locus(&dominated).is_ok());
    }

    #[test]
    fn collinear_support_gives_parallel_lines() {
        // max(0, x + y, 2x + 2y - 3): lines x + y = 0 and x + y = 3
        let f = poly(&[([0, 0], int(0)), ([1, 1], int(0)), ([2, 2], int(-3))]);
        let c = corner_locus(&f).unwrap();
        assert_eq!(c.vertices().len(), 2);
        assert!(check_balanced(&c));
        assert_eq!(rays(&c), vec![([-1, 1], 1), ([-1, 1], 1), ([1, -1], 1), ([1, -1], 1)]);
        for v in c.vertices() {
            assert_eq!(f.maximizing_terms(v).unwrap().len(), 2);
        }
        // all three tie on the same line: one line of weight 2
        let g = poly(&[([0, 0], int(0)), ([1, 0], int(0)), ([2, 0], int(0))]);
        let c = corner_locus(&g).unwrap();
        assert_eq!(c.vertices(), &[point(0, 0)]);
        assert_eq!(rays(&c), vec![([0, -1], 2), ([0, 1], 2)]);
    }

    #[test]
    fn wrong_dimension() {
        let f = TropicalPolynomial::from_terms(1, vec![(vec![0], int(0)), (vec![1], int(0))]).unwrap();
        assert!(matches!(corner_locus(&f), Err(Error::DimensionMismatch { .. })));
    }
}
