//! Tropical curves as metric graphs, and divisor theory on them.

mod chipfiring;
mod divisor;
mod function;
mod modification;

use std::collections::{BTreeSet, VecDeque};

use num_traits::{Signed, Zero};

use crate::{Error, Rational, Result};

pub use chipfiring::{
    linearly_equivalent, rank, rank_with_refinement, reduced_divisor, riemann_roch_check, RankSolver,
};
pub use divisor::Divisor;
pub use function::{divisor_of, RationalFunction};
pub use modification::{contract_leaf, modify, trees_equivalent};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Length {
    Finite(Rational),
    Infinite,
}

impl Length {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Length::Finite(l) => Some(l),
            Length::Infinite => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub length: Length,
}

impl Edge {
    pub fn finite(u: usize, v: usize, length: Rational) -> Self {
        Edge { u, v, length: Length::Finite(length) }
    }

    pub fn infinite(u: usize, v: usize) -> Self {
        Edge { u, v, length: Length::Infinite }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

/// A point of a metric graph: a vertex, or a point strictly inside an edge
/// at the given distance from the edge's `u` end.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphPoint {
    Vertex(usize),
    OnEdge { edge: usize, offset: Rational },
}

/// A connected finite graph with positive rational or infinite edge lengths.
/// Loops and parallel edges are allowed; infinite edges must end in a leaf.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricGraph {
    names: Vec<String>,
    edges: Vec<Edge>,
}

impl MetricGraph {
    pub fn new(names: Vec<String>, edges: Vec<Edge>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::Graph("no vertices".into()));
        }
        let unique: BTreeSet<&String> = names.iter().collect();
        if unique.len() != names.len() {
            return Err(Error::Graph("duplicate vertex names".into()));
        }
        let g = MetricGraph { names, edges };
        for (i, e) in g.edges.iter().enumerate() {
            if e.u >= g.names.len() || e.v >= g.names.len() {
                return Err(Error::Graph(format!("edge {i} references a missing vertex")));
            }
            match &e.length {
                Length::Finite(l) if !l.is_positive() => {
                    return Err(Error::Graph(format!("edge {i} has non-positive length")))
                }
                Length::Infinite if e.is_loop() || (g.valence(e.u) != 1 && g.valence(e.v) != 1) => {
                    return Err(Error::Graph(format!("infinite edge {i} does not end in a leaf")))
                }
                _ => {}
            }
        }
        if !g.is_connected() {
            return Err(Error::Graph("graph is not connected".into()));
        }
        Ok(g)
    }

    /// Convenience constructor from `(u, v, length)` triples with vertices
    /// named `0..n`.
    pub fn from_lengths(n: usize, edges: &[(usize, usize, Rational)]) -> Result<Self> {
        let names = (0..n).map(|i| i.to_string()).collect();
        Self::new(names, edges.iter().map(|(u, v, l)| Edge::finite(*u, *v, l.clone())).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex_id(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Number of edge-ends at `v`; a loop counts twice.
    pub fn valence(&self, v: usize) -> usize {
        self.edges.iter().map(|e| (e.u == v) as usize + (e.v == v) as usize).sum()
    }

    /// Edge ids incident to `v`, a loop listed twice.
    pub fn incident(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.u == v {
                out.push(i);
            }
            if e.v == v {
                out.push(i);
            }
        }
        out
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.names.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(x) = queue.pop_front() {
            for &e in &self.incident(x) {
                let y = self.edges[e].other(x);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn has_infinite_edges(&self) -> bool {
        self.edges.iter().any(|e| e.length == Length::Infinite)
    }

    pub(crate) fn require_finite(&self) -> Result<()> {
        match self.edges.iter().position(|e| e.length == Length::Infinite) {
            Some(i) => Err(Error::InfiniteEdge(i)),
            None => Ok(()),
        }
    }

    pub fn edge_length(&self, e: usize) -> Result<&Rational> {
        self.edges.get(e).ok_or_else(|| Error::Graph(format!("no edge {e}")))?.length.finite().ok_or(Error::InfiniteEdge(e))
    }

    /// First Betti number.
    pub fn genus(&self) -> usize {
        self.edges.len() + 1 - self.names.len()
    }

    pub fn is_tree(&self) -> bool {
        self.genus() == 0
    }

    /// The point at distance `offset` from the `u` end of `edge`, with the
    /// endpoints normalised to vertex form.
    pub fn point_on_edge(&self, edge: usize, offset: Rational) -> Result<GraphPoint> {
        let e = self.edges.get(edge).ok_or_else(|| Error::Graph(format!("no edge {edge}")))?;
        if offset.is_negative() {
            return Err(Error::Graph(format!("negative offset on edge {edge}")));
        }
        if offset.is_zero() {
            return Ok(GraphPoint::Vertex(e.u));
        }
        match &e.length {
            Length::Finite(l) if offset == *l => Ok(GraphPoint::Vertex(e.v)),
            Length::Finite(l) if offset > *l => Err(Error::Graph(format!("offset beyond the end of edge {edge}"))),
            _ => Ok(GraphPoint::OnEdge { edge, offset }),
        }
    }

    pub fn check_point(&self, p: &GraphPoint) -> Result<()> {
        match p {
            GraphPoint::Vertex(v) if *v < self.names.len() => Ok(()),
            GraphPoint::Vertex(v) => Err(Error::Graph(format!("no vertex {v}"))),
            GraphPoint::OnEdge { edge, offset } => match self.point_on_edge(*edge, offset.clone())? {
                GraphPoint::OnEdge { .. } => Ok(()),
                GraphPoint::Vertex(_) => Err(Error::Graph("edge point given at an endpoint".into())),
            },
        }
    }

    /// `K = Σ (val(v) - 2)·v`.
    pub fn canonical_divisor(&self) -> Result<Divisor> {
        self.require_finite()?;
        Ok(Divisor::from_entries(
            (0..self.names.len()).map(|v| (GraphPoint::Vertex(v), self.valence(v) as i64 - 2)),
        ))
    }
}

pub fn genus(g: &MetricGraph) -> usize {
    g.genus()
}

pub fn canonical_divisor(g: &MetricGraph) -> Result<Divisor> {
    g.canonical_divisor()
}
