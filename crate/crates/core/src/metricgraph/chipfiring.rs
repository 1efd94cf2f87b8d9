//! Linear equivalence and rank through chip-firing on a uniform discrete
//! model of the metric graph.
//!
//! Every edge is cut into pieces of one common length `h`, chosen so that all
//! edge lengths and all marked points are multiples of `h`. On such a model a
//! rational function with integer slopes is determined by its vertex values,
//! so metric linear equivalence of divisors supported on model vertices is
//! discrete linear equivalence.
//!
//! Rank searches only subtract chips at the original vertices and at the
//! midpoint of every loop: the vertex set of a loopless model is
//! rank-determining, so this small set decides the rank.

use std::collections::{HashMap, VecDeque};

use super::{Divisor, GraphPoint, MetricGraph};
use crate::rational::{int, rational_gcd, to_i64};
use crate::{Error, Rational, Result};

#[derive(Clone, Debug)]
struct DiscreteModel {
    points: Vec<GraphPoint>,
    index: HashMap<GraphPoint, usize>,
    /// Neighbours with multiplicity; the model has no loops.
    adj: Vec<Vec<usize>>,
    /// Rank-determining nodes: graph vertices and loop midpoints.
    anchors: Vec<usize>,
}

impl DiscreteModel {
    fn build<'a>(g: &MetricGraph, marks: impl IntoIterator<Item = &'a GraphPoint>, refine: u32) -> Result<Self> {
        g.require_finite()?;
        let mut quantities: Vec<Rational> = Vec::new();
        for (e, edge) in g.edges().iter().enumerate() {
            let len = g.edge_length(e)?;
            quantities.push(len.clone());
            if edge.is_loop() {
                quantities.push(len / int(2));
            }
        }
        for p in marks {
            g.check_point(p)?;
            if let GraphPoint::OnEdge { offset, .. } = p {
                quantities.push(offset.clone());
            }
        }
        let unit = match rational_gcd(quantities.iter()) {
            Some(h) => h / int(refine.max(1) as i64),
            None => int(1),
        };

        let mut points: Vec<GraphPoint> = (0..g.vertex_count()).map(GraphPoint::Vertex).collect();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
        for (e, edge) in g.edges().iter().enumerate() {
            let pieces = to_i64(&(g.edge_length(e)? / &unit)).expect("lengths are multiples of the unit");
            let mut prev = edge.u;
            for k in 1..pieces {
                let id = points.len();
                points.push(GraphPoint::OnEdge { edge: e, offset: &unit * int(k) });
                adj.push(Vec::new());
                adj[prev].push(id);
                adj[id].push(prev);
                prev = id;
            }
            if prev != edge.v {
                adj[prev].push(edge.v);
                adj[edge.v].push(prev);
            }
        }
        let index: HashMap<GraphPoint, usize> = points.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let mut anchors: Vec<usize> = (0..g.vertex_count()).collect();
        for (e, edge) in g.edges().iter().enumerate() {
            if edge.is_loop() {
                let mid = GraphPoint::OnEdge { edge: e, offset: g.edge_length(e)? / int(2) };
                anchors.push(index[&mid]);
            }
        }
        Ok(DiscreteModel { points, index, adj, anchors })
    }

    fn len(&self) -> usize {
        self.points.len()
    }

    fn node(&self, p: &GraphPoint) -> Result<usize> {
        self.index
            .get(p)
            .copied()
            .ok_or_else(|| Error::Graph(format!("point {p:?} is not a vertex of the discrete model")))
    }

    fn chips(&self, d: &Divisor) -> Result<Vec<i64>> {
        let mut c = vec![0; self.len()];
        for (p, k) in d.iter() {
            c[self.node(p)?] += k;
        }
        Ok(c)
    }

    fn divisor(&self, chips: &[i64]) -> Divisor {
        Divisor::from_entries(chips.iter().enumerate().map(|(i, &c)| (self.points[i].clone(), c)))
    }

    fn distances(&self, q: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.len()];
        dist[q] = 0;
        let mut queue = VecDeque::from([q]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Fires every vertex of `set` `times` times.
    fn fire(&self, chips: &mut [i64], set: &[bool], times: i64) {
        for x in 0..self.len() {
            if !set[x] {
                continue;
            }
            for &y in &self.adj[x] {
                if !set[y] {
                    chips[x] -= times;
                    chips[y] += times;
                }
            }
        }
    }

    /// Replaces `chips` by the equivalent `q`-reduced configuration.
    fn reduce(&self, chips: &mut [i64], q: usize, dist: &[usize]) {
        // Make every vertex other than q non-negative by firing balls around
        // q, working inwards from the farthest layer.
        let max_d = dist.iter().copied().max().unwrap_or(0);
        for k in (1..=max_d).rev() {
            let ball: Vec<bool> = dist.iter().map(|&d| d < k).collect();
            let mut times = 0;
            for v in 0..self.len() {
                if dist[v] == k && chips[v] < 0 {
                    let into_ball = self.adj[v].iter().filter(|&&y| ball[y]).count() as i64;
                    times = times.max((-chips[v] + into_ball - 1) / into_ball);
                }
            }
            if times > 0 {
                self.fire(chips, &ball, times);
            }
        }

        // Dhar's burning algorithm: fire the unburnt set while it is nonempty.
        loop {
            let mut burnt = vec![false; self.len()];
            let mut hits = vec![0i64; self.len()];
            burnt[q] = true;
            let mut queue = VecDeque::from([q]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if burnt[y] {
                        continue;
                    }
                    hits[y] += 1;
                    if hits[y] > chips[y] {
                        burnt[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            if burnt.iter().all(|&b| b) {
                return;
            }
            let unburnt: Vec<bool> = burnt.iter().map(|b| !b).collect();
            let times = (0..self.len())
                .filter(|&v| unburnt[v] && hits[v] > 0)
                .map(|v| chips[v] / hits[v])
                .min()
                .expect("an unburnt vertex borders the fire");
            self.fire(chips, &unburnt, times.max(1));
        }
    }
}

/// Rank computations on one graph, sharing a memo table keyed by reduced
/// divisors.
pub struct RankSolver {
    model: DiscreteModel,
    q: usize,
    dist: Vec<usize>,
    memo: HashMap<Vec<i64>, i64>,
}

impl RankSolver {
    /// `marks` must contain every non-vertex point of the divisors that will
    /// be queried; `refine` further subdivides the model.
    pub fn new<'a>(g: &MetricGraph, marks: impl IntoIterator<Item = &'a GraphPoint>, refine: u32) -> Result<Self> {
        let model = DiscreteModel::build(g, marks, refine)?;
        let q = 0;
        let dist = model.distances(q);
        Ok(RankSolver { model, q, dist, memo: HashMap::new() })
    }

    /// Number of vertices of the underlying discrete model.
    pub fn model_size(&self) -> usize {
        self.model.len()
    }

    fn rank_chips(&mut self, mut chips: Vec<i64>) -> i64 {
        let deg: i64 = chips.iter().sum();
        if deg < 0 {
            return -1;
        }
        self.model.reduce(&mut chips, self.q, &self.dist);
        if chips[self.q] < 0 {
            return -1;
        }
        if let Some(&r) = self.memo.get(&chips) {
            return r;
        }
        // r(D) = 1 + min_v r(D - v) over a rank-determining set, and r(D) <= deg D.
        let mut best = deg;
        for i in 0..self.model.anchors.len() {
            if best == 0 {
                break;
            }
            let v = self.model.anchors[i];
            let mut next = chips.clone();
            next[v] -= 1;
            best = best.min(self.rank_chips(next) + 1);
        }
        self.memo.insert(chips, best);
        best
    }

    pub fn rank(&mut self, d: &Divisor) -> Result<i64> {
        let chips = self.model.chips(d)?;
        Ok(self.rank_chips(chips))
    }

    pub fn reduce(&self, d: &Divisor) -> Result<Divisor> {
        let mut chips = self.model.chips(d)?;
        self.model.reduce(&mut chips, self.q, &self.dist);
        Ok(self.model.divisor(&chips))
    }
}

/// The unique divisor equivalent to `d` that is effective away from `q` and
/// admits no legal firing of a set avoiding `q`.
pub fn reduced_divisor(g: &MetricGraph, d: &Divisor, q: &GraphPoint) -> Result<Divisor> {
    let model = DiscreteModel::build(g, d.support().chain([q]), 1)?;
    let qi = model.node(q)?;
    let dist = model.distances(qi);
    let mut chips = model.chips(d)?;
    model.reduce(&mut chips, qi, &dist);
    Ok(model.divisor(&chips))
}

pub fn linearly_equivalent(g: &MetricGraph, d1: &Divisor, d2: &Divisor) -> Result<bool> {
    if d1.degree() != d2.degree() {
        return Ok(false);
    }
    let solver = RankSolver::new(g, d1.support().chain(d2.support()), 1)?;
    Ok(solver.reduce(d1)? == solver.reduce(d2)?)
}

/// Rank of `d` in the sense of linear systems: the largest `k` such that
/// `d - e` is equivalent to an effective divisor for every effective `e` of
/// degree `k`; `-1` when `d` itself is not.
pub fn rank(g: &MetricGraph, d: &Divisor) -> Result<i64> {
    rank_with_refinement(g, d, 1)
}

pub fn rank_with_refinement(g: &MetricGraph, d: &Divisor, refine: u32) -> Result<i64> {
    RankSolver::new(g, d.support(), refine)?.rank(d)
}

impl RankSolver {
    /// Evaluates `r(D) - r(K - D) = deg D - g + 1`.
    pub fn riemann_roch(&mut self, g: &MetricGraph, d: &Divisor) -> Result<bool> {
        let k = g.canonical_divisor()?;
        let lhs = self.rank(d)? - self.rank(&(&k - d))?;
        Ok(lhs == d.degree() - g.genus() as i64 + 1)
    }
}

pub fn riemann_roch_check(g: &MetricGraph, d: &Divisor) -> Result<bool> {
    RankSolver::new(g, d.support(), 1)?.riemann_roch(g, d)
}
