//! Stable intersection of plane curves by generic translation, and the
//! degree as intersection number with a translated standard line.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{origin, EdgeKind, PlaneTropicalCurve, Point};
use crate::rational::{int, ratio};
use crate::{Error, Rational, Result};

const MAX_DRAWS: usize = 64;
const MAX_SHRINKS: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionPoint {
    pub point: Point,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionReport {
    pub points: Vec<IntersectionPoint>,
    pub total: u64,
    /// Set when points are reported at the translated positions instead of
    /// their limits.
    pub perturbed: bool,
    /// The generic translate applied to the second curve.
    pub translate: Point,
}

struct EdgeGeom {
    origin: Point,
    dir: Point,
    bounded: bool,
    primitive: [i64; 2],
    weight: u64,
}

fn geometry(c: &PlaneTropicalCurve, shift: &Point) -> Vec<EdgeGeom> {
    let at = |v: usize| [&c.vertices()[v][0] + &shift[0], &c.vertices()[v][1] + &shift[1]];
    c.edges()
        .iter()
        .enumerate()
        .map(|(i, e)| match e.kind {
            EdgeKind::Segment { a, b } => {
                let (p, q) = (at(a), at(b));
                EdgeGeom {
                    dir: [&q[0] - &p[0], &q[1] - &p[1]],
                    origin: p,
                    bounded: true,
                    primitive: c.outgoing_direction(i, a),
                    weight: e.weight,
                }
            }
            EdgeKind::Ray { v, dir } => EdgeGeom {
                origin: at(v),
                dir: [int(dir[0]), int(dir[1])],
                bounded: false,
                primitive: dir,
                weight: e.weight,
            },
        })
        .collect()
}

fn cross(a: &Point, b: &Point) -> Rational {
    &a[0] * &b[1] - &a[1] * &b[0]
}

/// Position of a parameter relative to an edge's closed parameter range.
enum Param {
    Outside,
    Boundary,
    Interior,
}

fn classify(s: &Rational, bounded: bool) -> Param {
    if s.is_negative() || (bounded && *s > Rational::one()) {
        Param::Outside
    } else if s.is_zero() || (bounded && s.is_one()) {
        Param::Boundary
    } else {
        Param::Interior
    }
}

enum Meet {
    Disjoint,
    Transverse(Point, u64),
    Degenerate,
}

fn meet(e: &EdgeGeom, f: &EdgeGeom) -> Meet {
    let delta = [&f.origin[0] - &e.origin[0], &f.origin[1] - &e.origin[1]];
    let det = cross(&e.dir, &f.dir);
    if det.is_zero() {
        if !cross(&delta, &e.dir).is_zero() {
            return Meet::Disjoint;
        }
        // Collinear: compare parameter intervals along e.
        let norm = &e.dir[0] * &e.dir[0] + &e.dir[1] * &e.dir[1];
        let proj = |p: &Point| (&p[0] * &e.dir[0] + &p[1] * &e.dir[1]) / &norm;
        let (e_lo, e_hi) = (Rational::zero(), if e.bounded { Some(Rational::one()) } else { None });
        let f0 = proj(&delta);
        let f1 = &f0 + proj(&f.dir);
        let (f_lo, f_hi) = if f.bounded {
            (f0.clone().min(f1.clone()), Some(f0.max(f1)))
        } else if f1 > f0 {
            (f0, None)
        } else {
            // f runs towards -infinity along e
            return if e_lo <= f0 { Meet::Degenerate } else { Meet::Disjoint };
        };
        let overlaps = e_hi.as_ref().is_none_or(|h| f_lo <= *h) && f_hi.as_ref().is_none_or(|h| e_lo <= *h);
        return if overlaps { Meet::Degenerate } else { Meet::Disjoint };
    }
    let s = cross(&delta, &f.dir) / &det;
    let t = cross(&delta, &e.dir) / &det;
    match (classify(&s, e.bounded), classify(&t, f.bounded)) {
        (Param::Outside, _) | (_, Param::Outside) => Meet::Disjoint,
        (Param::Interior, Param::Interior) => {
            let p = [&e.origin[0] + &s * &e.dir[0], &e.origin[1] + &s * &e.dir[1]];
            let index = (e.primitive[0] * f.primitive[1] - e.primitive[1] * f.primitive[0]).unsigned_abs();
            Meet::Transverse(p, e.weight * f.weight * index)
        }
        _ => Meet::Degenerate,
    }
}

type Crossings = BTreeMap<(usize, usize), (Point, u64)>;

/// All crossings of `c1` with `c2 + tau`, or `None` if some incidence is not
/// transverse (vertex on edge, overlapping edges).
fn crossings(c1: &PlaneTropicalCurve, c2: &PlaneTropicalCurve, tau: &Point) -> Option<Crossings> {
    let g1 = geometry(c1, &[Rational::zero(), Rational::zero()]);
    let g2 = geometry(c2, tau);
    let mut out = BTreeMap::new();
    for (i, e) in g1.iter().enumerate() {
        for (j, f) in g2.iter().enumerate() {
            match meet(e, f) {
                Meet::Disjoint => {}
                Meet::Transverse(p, m) => {
                    out.insert((i, j), (p, m));
                }
                Meet::Degenerate => return None,
            }
        }
    }
    Some(out)
}

/// Smallest positive coordinate gap between vertices, capped at 1.
fn feature_scale(c1: &PlaneTropicalCurve, c2: &PlaneTropicalCurve) -> Rational {
    let mut best = Rational::one();
    for axis in 0..2 {
        let mut xs: Vec<&Rational> = c1.vertices().iter().chain(c2.vertices()).map(|p| &p[axis]).collect();
        xs.sort();
        xs.dedup();
        for w in xs.windows(2) {
            let gap = w[1] - w[0];
            if gap < best {
                best = gap;
            }
        }
    }
    best
}

fn draw_translate(rng: &mut ChaCha8Rng, scale: &Rational) -> Point {
    const DEN: i64 = 1_000_003;
    let mut coord = || loop {
        let n: i64 = rng.gen_range(-DEN + 1..DEN);
        if n != 0 {
            return ratio(n, DEN) * scale;
        }
    };
    [coord(), coord()]
}

fn scale_point(p: &Point, k: &Rational) -> Point {
    [&p[0] * k, &p[1] * k]
}

fn report_from(points: Vec<IntersectionPoint>, perturbed: bool, translate: Point) -> IntersectionReport {
    let total = points.iter().map(|p| p.multiplicity).sum();
    IntersectionReport { points, total, perturbed, translate }
}

/// Limits as the translate shrinks to zero, assuming the crossing
/// trajectories at `tau`, `tau/2`, `tau/4` are affine in the scale.
fn limits(full: &Crossings, half: &Crossings, quarter: &Crossings) -> Option<Vec<IntersectionPoint>> {
    if !full.keys().eq(half.keys()) || !full.keys().eq(quarter.keys()) {
        return None;
    }
    let mut merged: BTreeMap<Point, u64> = BTreeMap::new();
    for (k, (p1, m)) in full {
        let p2 = &half[k].0;
        let p4 = &quarter[k].0;
        let mut limit = [Rational::zero(), Rational::zero()];
        for a in 0..2 {
            if &p1[a] - &p2[a] != (&p2[a] - &p4[a]) * int(2) {
                return None;
            }
            limit[a] = &p2[a] * int(2) - &p1[a];
        }
        *merged.entry(limit).or_insert(0) += m;
    }
    Some(merged.into_iter().map(|(point, multiplicity)| IntersectionPoint { point, multiplicity }).collect())
}

/// Stable intersection of two balanced curves.
///
/// `c2` is translated by a random rational vector drawn from a generator
/// seeded with `seed`; draws that produce a non-transverse configuration are
/// rejected. Each crossing contributes `w1·w2·|det(u1, u2)|`.
pub fn stable_intersection(
    c1: &PlaneTropicalCurve,
    c2: &PlaneTropicalCurve,
    seed: u64,
) -> Result<IntersectionReport> {
    if let Some(v) = c1.first_unbalanced_vertex() {
        return Err(Error::Unbalanced(v));
    }
    if let Some(v) = c2.first_unbalanced_vertex() {
        return Err(Error::Unbalanced(v));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scale = feature_scale(c1, c2) / int(64);
    let half = ratio(1, 2);
    let quarter = ratio(1, 4);
    let shrink = ratio(1, 16);
    for _ in 0..MAX_DRAWS {
        let mut tau = draw_translate(&mut rng, &scale);
        let Some(mut at_tau) = crossings(c1, c2, &tau) else {
            continue;
        };
        for _ in 0..MAX_SHRINKS {
            let h = crossings(c1, c2, &scale_point(&tau, &half));
            let q = crossings(c1, c2, &scale_point(&tau, &quarter));
            let (Some(h), Some(q)) = (h, q) else {
                break;
            };
            if let Some(points) = limits(&at_tau, &h, &q) {
                return Ok(report_from(points, false, tau));
            }
            let smaller = scale_point(&tau, &shrink);
            match crossings(c1, c2, &smaller) {
                Some(c) => {
                    tau = smaller;
                    at_tau = c;
                }
                None => break,
            }
        }
        let points = at_tau
            .into_values()
            .map(|(point, multiplicity)| IntersectionPoint { point, multiplicity })
            .collect();
        return Ok(report_from(points, true, tau));
    }
    Err(Error::NoGenericTranslate(MAX_DRAWS))
}

/// Intersection number with a generically translated standard line.
pub fn degree(c: &PlaneTropicalCurve) -> Result<u64> {
    degree_with_seed(c, 0)
}

pub fn degree_with_seed(c: &PlaneTropicalCurve, seed: u64) -> Result<u64> {
    let line = PlaneTropicalCurve::standard_line(origin());
    Ok(stable_intersection(c, &line, seed)?.total)
}

/// Expected total stable intersection of curves of degrees `d1` and `d2`.
pub fn bezout_total(d1: u64, d2: u64) -> u64 {
    d1 * d2
}
