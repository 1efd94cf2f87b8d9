//! Piecewise-linear functions with integer slopes and their divisors.

use num_traits::Signed;

use super::{Divisor, GraphPoint, MetricGraph};
use crate::rational::{int, to_i64};
use crate::{Error, Rational, Result};

/// A rational function given by its values on a refinement of the host
/// graph: one value per vertex, plus interior breakpoints on each edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    vertex_values: Vec<Rational>,
    /// Per edge, `(offset from u, value)` with strictly increasing offsets.
    breakpoints: Vec<Vec<(Rational, Rational)>>,
}

impl RationalFunction {
    pub fn new(
        g: &MetricGraph,
        vertex_values: Vec<Rational>,
        mut breakpoints: Vec<Vec<(Rational, Rational)>>,
    ) -> Result<Self> {
        g.require_finite()?;
        if vertex_values.len() != g.vertex_count() {
            return Err(Error::Function("one value per vertex required".into()));
        }
        if breakpoints.len() > g.edges().len() {
            return Err(Error::Function("breakpoints given for a missing edge".into()));
        }
        breakpoints.resize(g.edges().len(), Vec::new());
        for bps in breakpoints.iter_mut() {
            bps.sort_by(|a, b| a.0.cmp(&b.0));
        }
        let f = RationalFunction { vertex_values, breakpoints };
        for e in 0..g.edges().len() {
            let len = g.edge_length(e)?;
            let nodes = f.nodes(g, e);
            for w in nodes.windows(2) {
                let dx = &w[1].0 - &w[0].0;
                if !dx.is_positive() || w[1].0 > *len {
                    return Err(Error::Function(format!("breakpoints on edge {e} are not strictly inside")));
                }
                if !((&w[1].1 - &w[0].1) / dx).is_integer() {
                    return Err(Error::Function(format!("non-integer slope on edge {e}")));
                }
            }
        }
        Ok(f)
    }

    /// Constant function.
    pub fn constant(g: &MetricGraph, c: Rational) -> Result<Self> {
        Self::new(g, vec![c; g.vertex_count()], Vec::new())
    }

    pub fn vertex_values(&self) -> &[Rational] {
        &self.vertex_values
    }

    pub fn breakpoints(&self) -> &[Vec<(Rational, Rational)>] {
        &self.breakpoints
    }

    /// `(offset, value)` along edge `e` from its `u` end to its `v` end.
    fn nodes(&self, g: &MetricGraph, e: usize) -> Vec<(Rational, Rational)> {
        let edge = &g.edges()[e];
        let len = edge.length.finite().expect("finite graph").clone();
        let mut nodes = vec![(int(0), self.vertex_values[edge.u].clone())];
        nodes.extend(self.breakpoints[e].iter().cloned());
        nodes.push((len, self.vertex_values[edge.v].clone()));
        nodes
    }

    pub fn value_at(&self, g: &MetricGraph, p: &GraphPoint) -> Rational {
        match p {
            GraphPoint::Vertex(v) => self.vertex_values[*v].clone(),
            GraphPoint::OnEdge { edge, offset } => {
                let nodes = self.nodes(g, *edge);
                let k = nodes.iter().position(|(o, _)| o >= offset).expect("offset inside edge");
                let (o1, v1) = &nodes[k];
                if o1 == offset {
                    return v1.clone();
                }
                let (o0, v0) = &nodes[k - 1];
                v0 + (v1 - v0) * (offset - o0) / (o1 - o0)
            }
        }
    }

    /// Zeros minus poles: the coefficient at a point is the sum of the
    /// outgoing slopes there.
    pub fn divisor(&self, g: &MetricGraph) -> Divisor {
        let mut d = Divisor::zero();
        for e in 0..g.edges().len() {
            let edge = &g.edges()[e];
            let nodes = self.nodes(g, e);
            let slopes: Vec<i64> = nodes
                .windows(2)
                .map(|w| to_i64(&((&w[1].1 - &w[0].1) / (&w[1].0 - &w[0].0))).expect("integer slope"))
                .collect();
            d.add_at(GraphPoint::Vertex(edge.u), slopes[0]);
            d.add_at(GraphPoint::Vertex(edge.v), -slopes[slopes.len() - 1]);
            for (k, (offset, _)) in nodes[1..nodes.len() - 1].iter().enumerate() {
                d.add_at(GraphPoint::OnEdge { edge: e, offset: offset.clone() }, slopes[k + 1] - slopes[k]);
            }
        }
        d
    }
}

pub fn divisor_of(g: &MetricGraph, phi: &RationalFunction) -> Divisor {
    phi.divisor(g)
}
