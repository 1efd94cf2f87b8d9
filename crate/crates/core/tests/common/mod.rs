//! Random inputs and independent oracles shared by the integration tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropkit::metricgraph::{Divisor, GraphPoint, MetricGraph, RationalFunction};
use tropkit::polynomial::{Monomial, TropicalPolynomial};
use tropkit::rational::{ratio, to_i64};
use tropkit::Rational;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(rng: &mut impl Rng, max_num: i64, max_den: i64) -> Rational {
    ratio(rng.gen_range(-max_num..=max_num), rng.gen_range(1..=max_den))
}

/// All lattice points of `d·Δ`.
pub fn triangle(d: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..=d {
        for j in 0..=d - i {
            out.push(vec![i, j]);
        }
    }
    out
}

/// A polynomial with Newton polygon exactly `d·Δ` and random coefficients.
pub fn full_polynomial(rng: &mut impl Rng, d: i64) -> TropicalPolynomial {
    let terms = triangle(d)
        .into_iter()
        .map(|e| Monomial::new(e, rational(rng, 12, 4)))
        .collect();
    TropicalPolynomial::new(2, terms).unwrap()
}

/// Random support inside `d·Δ` spanning the plane, with random coefficients.
pub fn sparse_polynomial(rng: &mut impl Rng, d: i64) -> TropicalPolynomial {
    loop {
        let support: Vec<Vec<i64>> = triangle(d).into_iter().filter(|_| rng.gen_bool(0.5)).collect();
        if tropkit::polytope::affine_dimension(&support) < 2 {
            continue;
        }
        let terms = support
            .into_iter()
            .map(|e| Monomial::new(e, rational(rng, 10, 3)))
            .collect();
        return TropicalPolynomial::new(2, terms).unwrap();
    }
}

/// Random exponent set spanning the plane, in a small box.
pub fn box_polynomial(rng: &mut impl Rng, side: i64) -> TropicalPolynomial {
    loop {
        let mut support = Vec::new();
        for i in 0..=side {
            for j in 0..=side {
                if rng.gen_bool(0.4) {
                    support.push(vec![i, j]);
                }
            }
        }
        if tropkit::polytope::affine_dimension(&support) < 2 {
            continue;
        }
        let terms = support
            .into_iter()
            .map(|e| Monomial::new(e, rational(rng, 10, 3)))
            .collect();
        return TropicalPolynomial::new(2, terms).unwrap();
    }
}

fn length(rng: &mut impl Rng) -> Rational {
    ratio(rng.gen_range(1..=6), rng.gen_range(1..=2))
}

/// A connected finite graph with `genus` independent cycles, possibly with
/// loops and parallel edges.
pub fn random_graph(rng: &mut impl Rng, genus: usize) -> MetricGraph {
    let n = rng.gen_range(1..=4);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v, length(rng)));
    }
    for _ in 0..genus {
        edges.push((rng.gen_range(0..n), rng.gen_range(0..n), length(rng)));
    }
    MetricGraph::from_lengths(n, &edges).unwrap()
}

/// A uniformly drawn model point: a vertex, or an interior point of an edge
/// at an offset with denominator at most 4.
pub fn random_point(rng: &mut impl Rng, g: &MetricGraph) -> GraphPoint {
    if g.edges().is_empty() || rng.gen_bool(0.4) {
        return GraphPoint::Vertex(rng.gen_range(0..g.vertex_count()));
    }
    let e = rng.gen_range(0..g.edges().len());
    let len = g.edge_length(e).unwrap().clone();
    loop {
        let t = ratio(rng.gen_range(1..=7), 8);
        let offset = &len * t;
        if let Ok(p) = g.point_on_edge(e, offset) {
            return p;
        }
    }
}

pub fn random_divisor(rng: &mut impl Rng, g: &MetricGraph, max_abs_degree: i64) -> Divisor {
    let target = rng.gen_range(-max_abs_degree..=max_abs_degree);
    let mut d = Divisor::zero();
    let mut deg = 0;
    for _ in 0..rng.gen_range(0..=3) {
        let c = rng.gen_range(-2..=2);
        d.add_at(random_point(rng, g), c);
        deg += c;
    }
    d.add_at(random_point(rng, g), target - deg);
    d
}

/// A random piecewise linear function with integer slopes: random vertex
/// values, and on every edge two pieces whose slopes straddle the mean
/// slope, meeting at the breakpoint that makes the ends match.
pub fn random_function(rng: &mut impl Rng, g: &MetricGraph) -> RationalFunction {
    let values: Vec<Rational> = (0..g.vertex_count()).map(|_| rational(rng, 6, 2)).collect();
    let mut bps = Vec::new();
    for (i, e) in g.edges().iter().enumerate() {
        let len = g.edge_length(i).unwrap().clone();
        let delta = &values[e.v] - &values[e.u];
        let mean = &delta / &len;
        let s1 = mean.floor().to_integer() + 1 + rng.gen_range(0..2);
        let s2 = mean.ceil().to_integer() - 1 - rng.gen_range(0..2);
        let (s1, s2) = (Rational::from_integer(s1), Rational::from_integer(s2));
        let offset = (&delta - &s2 * &len) / (&s1 - &s2);
        let value = &values[e.u] + &s1 * &offset;
        bps.push(vec![(offset, value)]);
    }
    RationalFunction::new(g, values, bps).unwrap()
}

/// Area of a lattice polygon given by a point cloud, doubled: gift-wrapping
/// hull plus the shoelace formula.
pub fn doubled_hull_area(points: &[[i64; 2]]) -> i64 {
    let mut pts: Vec<[i64; 2]> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return 0;
    }
    let cross = |o: [i64; 2], a: [i64; 2], b: [i64; 2]| (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    let start = pts[0];
    let mut hull = vec![start];
    let mut current = start;
    loop {
        let mut next = if pts[0] == current { pts[1] } else { pts[0] };
        for &p in &pts {
            if p == current {
                continue;
            }
            let c = cross(current, next, p);
            let farther = (p[0] - current[0]).pow(2) + (p[1] - current[1]).pow(2)
                > (next[0] - current[0]).pow(2) + (next[1] - current[1]).pow(2);
            if c < 0 || (c == 0 && farther) {
                next = p;
            }
        }
        if next == start {
            break;
        }
        hull.push(next);
        current = next;
        if hull.len() > pts.len() {
            break;
        }
    }
    let mut area = 0;
    for i in 0..hull.len() {
        let (a, b) = (hull[i], hull[(i + 1) % hull.len()]);
        area += a[0] * b[1] - a[1] * b[0];
    }
    area.abs()
}

/// Mixed area of two Newton polygons, `area(P+Q) - area(P) - area(Q)`.
pub fn mixed_area(p: &TropicalPolynomial, q: &TropicalPolynomial) -> i64 {
    let pts = |f: &TropicalPolynomial| -> Vec<[i64; 2]> { f.exponents().iter().map(|e| [e[0], e[1]]).collect() };
    let (a, b) = (pts(p), pts(q));
    let sum: Vec<[i64; 2]> = a.iter().flat_map(|x| b.iter().map(move |y| [x[0] + y[0], x[1] + y[1]])).collect();
    let twice = doubled_hull_area(&sum) - doubled_hull_area(&a) - doubled_hull_area(&b);
    assert_eq!(twice % 2, 0);
    twice / 2
}

/// Combinatorial graph obtained by cutting every edge into pieces of length
/// `unit`; vertices of the metric graph keep their indices.
pub struct Subdivided {
    pub n: usize,
    pub adj: Vec<Vec<usize>>,
    /// `(edge, step)` -> node, for steps strictly inside the edge.
    pub inner: std::collections::HashMap<(usize, i64), usize>,
    pub unit: Rational,
}

impl Subdivided {
    pub fn new(g: &MetricGraph, unit: &Rational) -> Subdivided {
        let mut n = g.vertex_count();
        let mut adj = vec![Vec::new(); n];
        let mut inner = std::collections::HashMap::new();
        for (i, e) in g.edges().iter().enumerate() {
            let steps = g.edge_length(i).unwrap() / unit;
            assert!(steps.is_integer());
            let steps = to_i64(&steps).unwrap();
            let mut prev = e.u;
            for s in 1..steps {
                adj.push(Vec::new());
                inner.insert((i, s), n);
                adj[prev].push(n);
                adj[n].push(prev);
                prev = n;
                n += 1;
            }
            adj[prev].push(e.v);
            adj[e.v].push(prev);
        }
        Subdivided { n, adj, inner, unit: unit.clone() }
    }

    pub fn node(&self, p: &GraphPoint) -> usize {
        match p {
            GraphPoint::Vertex(v) => *v,
            GraphPoint::OnEdge { edge, offset } => {
                let s = offset / &self.unit;
                assert!(s.is_integer(), "point off the model");
                self.inner[&(*edge, to_i64(&s).unwrap())]
            }
        }
    }

    pub fn chips(&self, d: &Divisor) -> Vec<i64> {
        let mut c = vec![0; self.n];
        for (p, k) in d.iter() {
            c[self.node(p)] += k;
        }
        c
    }

    /// Whether the chip vector is equivalent to an effective one, by the
    /// borrowing algorithm: repeatedly let an in-debt vertex borrow from its
    /// neighbours; the answer is no once every vertex has borrowed.
    pub fn has_effective(&self, chips: &[i64]) -> bool {
        let mut c = chips.to_vec();
        if c.iter().sum::<i64>() < 0 {
            return false;
        }
        let mut borrowed = vec![false; self.n];
        loop {
            let Some(v) = (0..self.n).find(|&v| c[v] < 0) else {
                return true;
            };
            borrowed[v] = true;
            if borrowed.iter().all(|&b| b) {
                return false;
            }
            for &w in &self.adj[v] {
                c[w] -= 1;
                c[v] += 1;
            }
        }
    }

    /// Rank by its definition, quantifying over effective divisors on all
    /// nodes of this model.
    pub fn brute_rank(&self, chips: &[i64]) -> i64 {
        if !self.has_effective(chips) {
            return -1;
        }
        let deg: i64 = chips.iter().sum();
        let mut k = 0;
        while k < deg {
            let mut e = vec![0i64; self.n];
            if !self.all_effective_subtractions(chips, &mut e, 0, k + 1) {
                break;
            }
            k += 1;
        }
        k
    }

    fn all_effective_subtractions(&self, chips: &[i64], e: &mut Vec<i64>, from: usize, left: i64) -> bool {
        if left == 0 {
            let diff: Vec<i64> = chips.iter().zip(e.iter()).map(|(a, b)| a - b).collect();
            return self.has_effective(&diff);
        }
        for v in from..self.n {
            e[v] += 1;
            let r = self.all_effective_subtractions(chips, e, v, left - 1);
            e[v] -= 1;
            if !r {
                return false;
            }
        }
        true
    }

    /// q-reducedness checked over every subset avoiding `q`: the divisor is
    /// effective off `q`, and no such subset can fire legally.
    pub fn is_reduced(&self, chips: &[i64], q: usize) -> bool {
        if (0..self.n).any(|v| v != q && chips[v] < 0) {
            return false;
        }
        let others: Vec<usize> = (0..self.n).filter(|&v| v != q).collect();
        assert!(others.len() < 24);
        for mask in 1u32..(1 << others.len()) {
            let inside = |v: usize| others.iter().position(|&w| w == v).is_some_and(|i| mask & (1 << i) != 0);
            let can_fire = others.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).all(|(_, &v)| {
                let out = self.adj[v].iter().filter(|&&w| !inside(w)).count() as i64;
                chips[v] >= out
            });
            if can_fire {
                return false;
            }
        }
        true
    }
}
