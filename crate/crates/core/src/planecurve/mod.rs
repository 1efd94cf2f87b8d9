//! Plane tropical curves: corner loci of two-variable polynomials as
//! weighted balanced 1-complexes, with degree and stable intersection.

mod intersection;
mod subdivision;
pub mod svg;

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::rational::primitive_direction;
use crate::{Error, Rational, Result};

pub use intersection::{bezout_total, degree, stable_intersection, IntersectionPoint, IntersectionReport};
pub use subdivision::{corner_locus, DualCell, DualSubdivision};

pub type Point = [Rational; 2];

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    /// Bounded edge between two distinct vertices.
    Segment { a: usize, b: usize },
    /// Unbounded edge leaving vertex `v` along the primitive vector `dir`.
    Ray { v: usize, dir: [i64; 2] },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveEdge {
    pub kind: EdgeKind,
    pub weight: u64,
}

impl CurveEdge {
    pub fn segment(a: usize, b: usize, weight: u64) -> Self {
        CurveEdge { kind: EdgeKind::Segment { a, b }, weight }
    }

    pub fn ray(v: usize, dir: [i64; 2], weight: u64) -> Self {
        CurveEdge { kind: EdgeKind::Ray { v, dir }, weight }
    }
}

/// A weighted rational polyhedral 1-complex in `R^2`.
#[derive(Clone, Debug)]
pub struct PlaneTropicalCurve {
    vertices: Vec<Point>,
    edges: Vec<CurveEdge>,
    dual: Option<DualSubdivision>,
}

impl PartialEq for PlaneTropicalCurve {
    /// Structural equality of the complexes; the dual subdivision is ignored.
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (self.canonical(), other.canonical());
        a.vertices == b.vertices && a.edges == b.edges
    }
}

impl Eq for PlaneTropicalCurve {}

impl PlaneTropicalCurve {
    pub fn new(vertices: Vec<Point>, edges: Vec<CurveEdge>) -> Result<Self> {
        let nv = vertices.len();
        for (i, e) in edges.iter().enumerate() {
            if e.weight == 0 {
                return Err(Error::Input(format!("edge {i} has weight 0")));
            }
            match e.kind {
                EdgeKind::Segment { a, b } => {
                    if a >= nv || b >= nv {
                        return Err(Error::Input(format!("edge {i} references a missing vertex")));
                    }
                    if vertices[a] == vertices[b] {
                        return Err(Error::Input(format!("segment {i} has coincident endpoints")));
                    }
                }
                EdgeKind::Ray { v, dir } => {
                    if v >= nv {
                        return Err(Error::Input(format!("edge {i} references a missing vertex")));
                    }
                    if dir == [0, 0] || crate::rational::lattice_length(dir) != 1 {
                        return Err(Error::Input(format!("ray {i} direction {dir:?} is not primitive")));
                    }
                }
            }
        }
        Ok(PlaneTropicalCurve { vertices, edges, dual: None })
    }

    pub(crate) fn with_dual(mut self, dual: DualSubdivision) -> Self {
        self.dual = Some(dual);
        self
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn edges(&self) -> &[CurveEdge] {
        &self.edges
    }

    pub fn dual(&self) -> Option<&DualSubdivision> {
        self.dual.as_ref()
    }

    /// Primitive direction of edge `e` pointing away from its vertex `from`.
    pub fn outgoing_direction(&self, e: usize, from: usize) -> [i64; 2] {
        match self.edges[e].kind {
            EdgeKind::Ray { dir, .. } => dir,
            EdgeKind::Segment { a, b } => {
                let (p, q) = if from == a { (a, b) } else { (b, a) };
                let d = [&self.vertices[q][0] - &self.vertices[p][0], &self.vertices[q][1] - &self.vertices[p][1]];
                primitive_direction(&d).expect("segment endpoints are distinct")
            }
        }
    }

    /// Weighted sum of outgoing primitive directions at every vertex.
    pub fn balancing_defects(&self) -> Vec<[i64; 2]> {
        let mut sums = vec![[0i64; 2]; self.vertices.len()];
        for (i, e) in self.edges.iter().enumerate() {
            let w = e.weight as i64;
            let ends: Vec<usize> = match e.kind {
                EdgeKind::Segment { a, b } => vec![a, b],
                EdgeKind::Ray { v, .. } => vec![v],
            };
            for v in ends {
                let d = self.outgoing_direction(i, v);
                sums[v][0] += w * d[0];
                sums[v][1] += w * d[1];
            }
        }
        sums
    }

    pub fn first_unbalanced_vertex(&self) -> Option<usize> {
        self.balancing_defects().iter().position(|s| *s != [0, 0])
    }

    pub fn is_balanced(&self) -> bool {
        self.first_unbalanced_vertex().is_none()
    }

    /// Vertices sorted lexicographically, segments oriented from the smaller
    /// vertex index, edges sorted. Two curves are equal iff their canonical
    /// forms coincide.
    pub fn canonical(&self) -> PlaneTropicalCurve {
        let mut order: Vec<usize> = (0..self.vertices.len()).collect();
        order.sort_by(|&i, &j| self.vertices[i].cmp(&self.vertices[j]));
        let mut remap = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new;
        }
        let vertices = order.iter().map(|&i| self.vertices[i].clone()).collect();
        let mut edges: Vec<CurveEdge> = self
            .edges
            .iter()
            .map(|e| match e.kind {
                EdgeKind::Segment { a, b } => {
                    let (a, b) = (remap[a], remap[b]);
                    CurveEdge::segment(a.min(b), a.max(b), e.weight)
                }
                EdgeKind::Ray { v, dir } => CurveEdge::ray(remap[v], dir, e.weight),
            })
            .collect();
        edges.sort();
        PlaneTropicalCurve { vertices, edges, dual: self.dual.clone() }
    }

    pub fn translated(&self, t: &Point) -> PlaneTropicalCurve {
        let vertices = self.vertices.iter().map(|p| [&p[0] + &t[0], &p[1] + &t[1]]).collect();
        PlaneTropicalCurve { vertices, edges: self.edges.clone(), dual: None }
    }

    /// The same support with every weight multiplied by `k`.
    pub fn scaled_weights(&self, k: u64) -> PlaneTropicalCurve {
        let edges = self.edges.iter().map(|e| CurveEdge { kind: e.kind.clone(), weight: e.weight * k }).collect();
        PlaneTropicalCurve { vertices: self.vertices.clone(), edges, dual: None }
    }

    /// The standard tropical line with vertex at `at`.
    pub fn standard_line(at: Point) -> PlaneTropicalCurve {
        PlaneTropicalCurve {
            vertices: vec![at],
            edges: vec![CurveEdge::ray(0, [-1, 0], 1), CurveEdge::ray(0, [0, -1], 1), CurveEdge::ray(0, [1, 1], 1)],
            dual: None,
        }
    }

    /// Total weight of the unbounded edges, grouped by direction.
    pub fn ray_weights(&self) -> BTreeMap<[i64; 2], u64> {
        let mut m = BTreeMap::new();
        for e in &self.edges {
            if let EdgeKind::Ray { dir, .. } = e.kind {
                *m.entry(dir).or_insert(0) += e.weight;
            }
        }
        m
    }
}

pub fn check_balanced(c: &PlaneTropicalCurve) -> bool {
    c.is_balanced()
}

pub(crate) fn origin() -> Point {
    [Rational::zero(), Rational::zero()]
}

#[cfg(test)]
pub(crate) fn point(x: i64, y: i64) -> Point {
    [crate::rational::int(x), crate::rational::int(y)]
}
