use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

/// Upward edge between floors. Floors are numbered from 0 internally.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FloorEdge {
    pub from: usize,
    pub to: usize,
    pub weight: u64,
}

/// Weighted acyclic graph on floors `0..degree`, edges going upward.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FloorDiagram {
    degree: usize,
    edges: Vec<FloorEdge>,
}

/// Largest genus of a plane curve of degree `d`.
pub fn max_genus(d: usize) -> usize {
    if d < 3 {
        0
    } else {
        (d - 1) * (d - 2) / 2
    }
}

impl FloorDiagram {
    /// Builds a diagram, returning `None` unless every axiom holds for some genus.
    pub fn new(degree: usize, mut edges: Vec<FloorEdge>) -> Option<Self> {
        edges.sort();
        let diagram = FloorDiagram { degree, edges };
        diagram.is_valid().then_some(diagram)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn edges(&self) -> &[FloorEdge] {
        &self.edges
    }

    /// First Betti number of the underlying graph.
    pub fn genus(&self) -> usize {
        (self.edges.len() + 1).saturating_sub(self.degree)
    }

    /// Outgoing minus incoming weight at `floor`.
    pub fn divergence(&self, floor: usize) -> i64 {
        self.edges
            .iter()
            .map(|e| {
                let w = e.weight as i64;
                if e.from == floor {
                    w
                } else if e.to == floor {
                    -w
                } else {
                    0
                }
            })
            .sum()
    }

    fn is_connected(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.degree).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut components = self.degree;
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.from), find(&mut parent, e.to));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        components == 1
    }

    /// Re-checks the floor-diagram axioms.
    pub fn is_valid(&self) -> bool {
        self.degree >= 1
            && self.edges.windows(2).all(|w| w[0] <= w[1])
            && self
                .edges
                .iter()
                .all(|e| e.from < e.to && e.to < self.degree && e.weight >= 1)
            && (0..self.degree).all(|v| self.divergence(v) <= 1)
            && self.edges.len() + 1 >= self.degree
            && self.is_connected()
    }

    /// Product of squared edge weights.
    pub fn multiplicity(&self) -> BigUint {
        self.edges
            .iter()
            .fold(BigUint::one(), |acc, e| acc * e.weight * e.weight)
    }

    /// Number of markings up to automorphism: linear extensions of the poset
    /// on floors, edge midpoints and infinite ends, divided by the symmetries
    /// permuting ends on a floor and parallel edges of equal weight.
    pub fn markings_count(&self) -> BigUint {
        let d = self.degree;
        // predecessors as bitmasks; element ids: floors, then midpoints, then ends
        let mut pred: Vec<u64> = Vec::new();
        for v in 0..d {
            pred.push(if v == 0 { 0 } else { 1 << (v - 1) });
        }
        for e in &self.edges {
            pred.push(1 << e.from);
            let mid = pred.len() - 1;
            pred[e.to] |= 1 << mid;
        }
        let mut symmetry = BigUint::one();
        for v in 0..d {
            let ends = (1 - self.divergence(v)) as usize;
            for _ in 0..ends {
                pred.push(1 << v);
            }
            symmetry *= factorial(ends);
        }
        let mut i = 0;
        while i < self.edges.len() {
            let j = (i..self.edges.len())
                .find(|&j| self.edges[j] != self.edges[i])
                .unwrap_or(self.edges.len());
            symmetry *= factorial(j - i);
            i = j;
        }
        assert!(pred.len() <= 64, "too many marked elements for bitmask search");
        let extensions = linear_extensions(&pred);
        extensions / symmetry
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

fn linear_extensions(pred: &[u64]) -> BigUint {
    fn go(mask: u64, pred: &[u64], full: u64, memo: &mut HashMap<u64, BigUint>) -> BigUint {
        if mask == full {
            return BigUint::one();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for (i, &p) in pred.iter().enumerate() {
            if mask & (1 << i) == 0 && p & !mask == 0 {
                total += go(mask | (1 << i), pred, full, memo);
            }
        }
        memo.insert(mask, total.clone());
        total
    }
    let full = if pred.len() == 64 {
        u64::MAX
    } else {
        (1u64 << pred.len()) - 1
    };
    go(0, pred, full, &mut HashMap::new())
}

/// All floor diagrams of degree `d` and genus `g`, sorted. Empty when `g` is
/// outside `0..=max_genus(d)` or `d == 0`.
pub fn enumerate_floor_diagrams(d: usize, g: usize) -> Vec<FloorDiagram> {
    if d == 0 || g > max_genus(d) {
        return Vec::new();
    }
    let target = d - 1 + g;
    // branches split on the choice of out-edges at floor 0
    let first = out_edge_choices(0, d, 1, target);
    let mut out: Vec<FloorDiagram> = first
        .into_par_iter()
        .flat_map_iter(|choice| {
            let mut incoming = vec![0u64; d];
            for e in &choice {
                incoming[e.to] += e.weight;
            }
            let mut found = Vec::new();
            extend(1, d, target, choice, &mut incoming, &mut found);
            found
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Multisets of out-edges from `v` with total weight at most `capacity` and
/// at most `budget` edges, each listed in nondecreasing order.
fn out_edge_choices(v: usize, d: usize, capacity: u64, budget: usize) -> Vec<Vec<FloorEdge>> {
    let mut slots = Vec::new();
    for to in v + 1..d {
        for w in 1..=capacity {
            slots.push(FloorEdge { from: v, to, weight: w });
        }
    }
    let mut result = Vec::new();
    let mut current = Vec::new();
    fn rec(
        slots: &[FloorEdge],
        start: usize,
        left: u64,
        budget: usize,
        current: &mut Vec<FloorEdge>,
        result: &mut Vec<Vec<FloorEdge>>,
    ) {
        result.push(current.clone());
        if budget == 0 {
            return;
        }
        for i in start..slots.len() {
            if slots[i].weight <= left {
                current.push(slots[i]);
                rec(slots, i, left - slots[i].weight, budget - 1, current, result);
                current.pop();
            }
        }
    }
    rec(&slots, 0, capacity, budget, &mut current, &mut result);
    result
}

fn extend(
    v: usize,
    d: usize,
    target: usize,
    edges: Vec<FloorEdge>,
    incoming: &mut Vec<u64>,
    found: &mut Vec<FloorDiagram>,
) {
    if v == d {
        if edges.len() == target {
            if let Some(diagram) = FloorDiagram::new(d, edges) {
                found.push(diagram);
            }
        }
        return;
    }
    let budget = target - edges.len();
    for choice in out_edge_choices(v, d, 1 + incoming[v], budget) {
        for e in &choice {
            incoming[e.to] += e.weight;
        }
        let mut next = edges.clone();
        next.extend_from_slice(&choice);
        extend(v + 1, d, target, next, incoming, found);
        for e in &choice {
            incoming[e.to] -= e.weight;
        }
    }
}

/// Number of plane curves of degree `d` and genus `g` through `3d - 1 + g`
/// generic points, as a weighted count of marked floor diagrams.
pub fn count_curves(d: usize, g: usize) -> BigUint {
    enumerate_floor_diagrams(d, g)
        .par_iter()
        .map(|fd| fd.markings_count() * fd.multiplicity())
        .reduce(BigUint::zero, |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::kontsevich_n;
    use num_bigint::BigInt;

    fn edge(from: usize, to: usize, weight: u64) -> FloorEdge {
        FloorEdge { from, to, weight }
    }

    #[test]
    fn small_diagram_lists() {
        let one = enumerate_floor_diagrams(1, 0);
        assert_eq!(one.len(), 1);
        assert!(one[0].edges().is_empty());

        let two = enumerate_floor_diagrams(2, 0);
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].edges(), &[edge(0, 1, 1)]);

        let cubic = enumerate_floor_diagrams(3, 1);
        assert_eq!(cubic.len(), 1);
        assert_eq!(cubic[0].edges(), &[edge(0, 1, 1), edge(1, 2, 1), edge(1, 2, 1)]);
    }

    #[test]
    fn rational_cubic_diagrams() {
        let ds = enumerate_floor_diagrams(3, 0);
        assert_eq!(ds.len(), 3);
        let by_count: Vec<(u64, u64)> = ds
            .iter()
            .map(|fd| {
                (
                    fd.markings_count().try_into().unwrap(),
                    fd.multiplicity().try_into().unwrap(),
                )
            })
            .collect();
        assert_eq!(by_count, vec![(5, 1), (1, 4), (3, 1)]);
    }

    #[test]
    fn out_of_range_genus_is_empty() {
        assert!(enumerate_floor_diagrams(3, 2).is_empty());
        assert!(enumerate_floor_diagrams(0, 0).is_empty());
        assert_eq!(count_curves(2, 1), BigUint::zero());
    }

    #[test]
    fn counts_match_recursion() {
        for d in 1..=4 {
            let n = BigInt::from(count_curves(d, 0));
            assert_eq!(n, kontsevich_n(d), "d = {d}");
        }
    }

    #[test]
    fn node_polynomials() {
        let one_node = |d: u64| 3 * (d - 1) * (d - 1);
        let two_nodes = |d: u64| 3 * (d - 1) * (d - 2) * (3 * d * d - 3 * d - 11) / 2;
        assert_eq!(count_curves(3, 0), BigUint::from(one_node(3)));
        assert_eq!(count_curves(4, 2), BigUint::from(one_node(4)));
        assert_eq!(count_curves(4, 1), BigUint::from(two_nodes(4)));
    }

    #[test]
    fn maximal_genus_counts_one() {
        for d in 1..=4 {
            assert_eq!(count_curves(d, max_genus(d)), BigUint::one(), "d = {d}");
        }
    }

    #[test]
    fn enumerated_diagrams_revalidate() {
        for d in 1..=4 {
            for g in 0..=max_genus(d) {
                for fd in enumerate_floor_diagrams(d, g) {
                    assert!(fd.is_valid());
                    assert_eq!(fd.genus(), g);
                    assert!((0..d).all(|v| fd.divergence(v) <= 1));
                }
            }
        }
    }

    #[test]
    fn invalid_diagrams_rejected() {
        assert!(FloorDiagram::new(2, vec![edge(0, 1, 2)]).is_none());
        assert!(FloorDiagram::new(3, vec![edge(0, 1, 1)]).is_none());
        assert!(FloorDiagram::new(2, vec![edge(1, 0, 1)]).is_none());
    }
}
