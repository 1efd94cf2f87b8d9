//! Period matrices, the Jacobian `R^g / Q·Z^g` and the Abel-Jacobi map.
//!
//! A regular 1-form is encoded by the cycle it pairs with under the
//! edge-length inner product, so the period lattice is spanned by the
//! columns of the Gram matrix of a cycle basis. Infinite leaf edges carry no
//! cycles and no form, so they are ignored throughout.

use std::collections::VecDeque;

use num_traits::Zero;

use crate::linalg;
use crate::metricgraph::{Divisor, GraphPoint, Length, MetricGraph};
use crate::rational::int;
use crate::{Error, Rational, Result};

/// `g` independent cycles, one per chord of a fixed spanning tree, each
/// recorded as a signed coefficient per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleBasis {
    pub cycles: Vec<Vec<i64>>,
}

/// Symmetric `g × g` Gram matrix `Q[i][j] = Σ_e len(e)·c_i(e)·c_j(e)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodMatrix {
    pub entries: Vec<Vec<Rational>>,
}

impl PeriodMatrix {
    pub fn genus(&self) -> usize {
        self.entries.len()
    }
}

/// A point of the Jacobian; compare with [`Jacobian::equal`], never
/// coordinatewise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobianPoint {
    pub coords: Vec<Rational>,
}

impl JacobianPoint {
    pub fn zero(g: usize) -> Self {
        JacobianPoint { coords: vec![Rational::zero(); g] }
    }
}

/// Spanning-tree data for a graph: for every vertex, the signed edge path
/// from the root.
struct SpanningTree {
    parent_edge: Vec<Option<(usize, i64)>>,
    parent: Vec<Option<usize>>,
    in_tree: Vec<bool>,
}

impl SpanningTree {
    fn new(g: &MetricGraph) -> Self {
        let n = g.vertex_count();
        let mut parent_edge = vec![None; n];
        let mut parent = vec![None; n];
        let mut in_tree = vec![false; g.edges().len()];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for e in g.incident(x) {
                let edge = &g.edges()[e];
                if edge.length == Length::Infinite || edge.is_loop() {
                    continue;
                }
                let y = edge.other(x);
                if !seen[y] {
                    seen[y] = true;
                    in_tree[e] = true;
                    // walking x -> y along e: +1 if e is oriented u -> v that way
                    let sign = if edge.u == x { 1 } else { -1 };
                    parent_edge[y] = Some((e, sign));
                    parent[y] = Some(x);
                    queue.push_back(y);
                }
            }
        }
        SpanningTree { parent_edge, parent, in_tree }
    }

    /// Signed edge chain from the root to `v`.
    fn chain_to(&self, v: usize, m: usize) -> Vec<i64> {
        let mut c = vec![0; m];
        let mut x = v;
        while let (Some((e, s)), Some(p)) = (self.parent_edge[x], self.parent[x]) {
            c[e] += s;
            x = p;
        }
        c
    }
}

pub struct Jacobian<'g> {
    graph: &'g MetricGraph,
    tree: SpanningTree,
    basis: CycleBasis,
    periods: PeriodMatrix,
    periods_inverse: Vec<Vec<Rational>>,
}

impl<'g> Jacobian<'g> {
    pub fn new(g: &'g MetricGraph) -> Result<Self> {
        let tree = SpanningTree::new(g);
        let m = g.edges().len();
        let mut cycles = Vec::new();
        for (e, edge) in g.edges().iter().enumerate() {
            if tree.in_tree[e] || edge.length == Length::Infinite {
                continue;
            }
            // chord u -> v closed up by the tree path v -> root -> u
            let mut c = vec![0; m];
            c[e] += 1;
            let to_u = tree.chain_to(edge.u, m);
            let to_v = tree.chain_to(edge.v, m);
            for k in 0..m {
                c[k] += to_u[k] - to_v[k];
            }
            cycles.push(c);
        }
        let entries = gram_matrix(g, &cycles).entries;
        let periods_inverse =
            linalg::inverse(&entries).ok_or_else(|| Error::Internal("singular period matrix".into()))?;
        Ok(Jacobian {
            graph: g,
            tree,
            basis: CycleBasis { cycles },
            periods: PeriodMatrix { entries },
            periods_inverse,
        })
    }

    pub fn genus(&self) -> usize {
        self.basis.cycles.len()
    }

    pub fn cycle_basis(&self) -> &CycleBasis {
        &self.basis
    }

    pub fn period_matrix(&self) -> &PeriodMatrix {
        &self.periods
    }

    /// Integrates the basis forms along a signed, length-weighted chain.
    fn integrate(&self, chain: &[Rational]) -> JacobianPoint {
        let coords = self
            .basis
            .cycles
            .iter()
            .map(|c| chain.iter().zip(c).fold(Rational::zero(), |acc, (x, &ci)| acc + x * int(ci)))
            .collect();
        JacobianPoint { coords }
    }

    /// Length-weighted chain from the root to a point.
    fn chain_to_point(&self, p: &GraphPoint) -> Result<Vec<Rational>> {
        let g = self.graph;
        let m = g.edges().len();
        let weigh = |c: Vec<i64>| -> Vec<Rational> {
            c.into_iter()
                .enumerate()
                .map(|(e, k)| match g.edges()[e].length.finite() {
                    Some(l) => l * int(k),
                    None => Rational::zero(),
                })
                .collect()
        };
        match p {
            GraphPoint::Vertex(v) => Ok(weigh(self.tree.chain_to(*v, m))),
            GraphPoint::OnEdge { edge, offset } => {
                g.edge_length(*edge)?;
                let mut c = weigh(self.tree.chain_to(g.edges()[*edge].u, m));
                c[*edge] += offset;
                Ok(c)
            }
        }
    }

    /// Image of a degree-0 divisor, integrating along root-to-point chains.
    pub fn abel_jacobi(&self, d: &Divisor) -> Result<JacobianPoint> {
        if d.degree() != 0 {
            return Err(Error::NonzeroDegree(d.degree()));
        }
        d.check_on(self.graph)?;
        let mut chain = vec![Rational::zero(); self.graph.edges().len()];
        for (p, k) in d.iter() {
            for (acc, x) in chain.iter_mut().zip(self.chain_to_point(p)?) {
                *acc += x * int(k);
            }
        }
        Ok(self.integrate(&chain))
    }

    /// Image of the 1-chain with the given signed, length-weighted edge
    /// amounts. Any chain with boundary `D` maps to `abel_jacobi(D)` modulo
    /// the lattice.
    pub fn integrate_chain(&self, chain: &[Rational]) -> JacobianPoint {
        self.integrate(chain)
    }

    /// Equality modulo the period lattice: `Q⁻¹(a - b)` must be integral.
    pub fn equal(&self, a: &JacobianPoint, b: &JacobianPoint) -> Result<bool> {
        let g = self.genus();
        if a.coords.len() != g || b.coords.len() != g {
            return Err(Error::DimensionMismatch { expected: g, found: a.coords.len().min(b.coords.len()) });
        }
        let diff: Vec<Rational> = a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect();
        Ok(linalg::mat_vec(&self.periods_inverse, &diff).iter().all(|z| z.is_integer()))
    }
}

/// Gram matrix of arbitrary integer edge-cycles under the length pairing.
pub fn gram_matrix(g: &MetricGraph, cycles: &[Vec<i64>]) -> PeriodMatrix {
    let lengths: Vec<Rational> =
        g.edges().iter().map(|e| e.length.finite().cloned().unwrap_or_else(Rational::zero)).collect();
    let entries = cycles
        .iter()
        .map(|ci| {
            cycles
                .iter()
                .map(|cj| lengths.iter().enumerate().fold(Rational::zero(), |acc, (e, l)| acc + l * int(ci[e] * cj[e])))
                .collect()
        })
        .collect();
    PeriodMatrix { entries }
}

pub fn period_matrix(g: &MetricGraph) -> Result<PeriodMatrix> {
    Ok(Jacobian::new(g)?.periods)
}

pub fn abel_jacobi(g: &MetricGraph, d: &Divisor) -> Result<JacobianPoint> {
    Jacobian::new(g)?.abel_jacobi(d)
}

pub fn jac_equal(periods: &PeriodMatrix, a: &JacobianPoint, b: &JacobianPoint) -> Result<bool> {
    let g = periods.genus();
    if a.coords.len() != g || b.coords.len() != g {
        return Err(Error::DimensionMismatch { expected: g, found: a.coords.len().min(b.coords.len()) });
    }
    let inv = linalg::inverse(&periods.entries).ok_or_else(|| Error::Internal("singular period matrix".into()))?;
    let diff: Vec<Rational> = a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect();
    Ok(linalg::mat_vec(&inv, &diff).iter().all(|z| z.is_integer()))
}
