use std::collections::{BTreeSet, VecDeque};

use num_traits::{Signed, Zero};

use crate::rational::Rational;
use crate::{Error, Result};

/// Rational tropical curve: a tree with finite inner edges and labeled
/// leaves (infinite ends) attached to vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct TropicalTree {
    vertex_count: usize,
    edges: Vec<(usize, usize, Rational)>,
    leaves: Vec<(u32, usize)>,
    parent: Vec<Option<(usize, usize)>>,
    depth: Vec<usize>,
}

/// Cross-ratio of two leaf pairs: the signed length shared by the paths
/// `pairs[0].0 -> pairs[0].1` and `pairs[1].0 -> pairs[1].1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossRatio {
    pub pairs: [(u32, u32); 2],
    pub value: Rational,
}

impl TropicalTree {
    pub fn new(
        vertex_count: usize,
        edges: Vec<(usize, usize, Rational)>,
        leaves: Vec<(u32, usize)>,
    ) -> Result<Self> {
        let bad = |m: &str| Err(Error::Tree(m.to_string()));
        if vertex_count == 0 {
            return bad("tree has no vertices");
        }
        if edges.len() + 1 != vertex_count {
            return bad("inner edge count must be one less than vertex count");
        }
        for (u, v, len) in &edges {
            if *u >= vertex_count || *v >= vertex_count || u == v {
                return bad("inner edge endpoint out of range or loop");
            }
            if !len.is_positive() {
                return bad("inner edge lengths must be positive");
            }
        }
        let mut labels = BTreeSet::new();
        for &(label, at) in &leaves {
            if at >= vertex_count {
                return bad("leaf attached to missing vertex");
            }
            if !labels.insert(label) {
                return Err(Error::Tree(format!("repeated leaf label {label}")));
            }
        }
        let mut adj = vec![Vec::new(); vertex_count];
        for (i, (u, v, _)) in edges.iter().enumerate() {
            adj[*u].push((*v, i));
            adj[*v].push((*u, i));
        }
        let mut valence: Vec<usize> = adj.iter().map(Vec::len).collect();
        for &(_, at) in &leaves {
            valence[at] += 1;
        }
        if leaves.len() > 3 && valence.iter().any(|&k| k < 3) {
            return bad("every vertex needs valence at least 3");
        }
        let mut parent = vec![None; vertex_count];
        let mut depth = vec![usize::MAX; vertex_count];
        depth[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &(y, e) in &adj[x] {
                if depth[y] == usize::MAX {
                    depth[y] = depth[x] + 1;
                    parent[y] = Some((x, e));
                    queue.push_back(y);
                }
            }
        }
        if depth.contains(&usize::MAX) {
            return bad("tree is not connected");
        }
        Ok(TropicalTree {
            vertex_count,
            edges,
            leaves,
            parent,
            depth,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize, Rational)] {
        &self.edges
    }

    pub fn leaves(&self) -> &[(u32, usize)] {
        &self.leaves
    }

    pub fn labels(&self) -> Vec<u32> {
        let mut l: Vec<u32> = self.leaves.iter().map(|&(l, _)| l).collect();
        l.sort_unstable();
        l
    }

    fn vertex_of(&self, label: u32) -> Result<usize> {
        self.leaves
            .iter()
            .find(|&&(l, _)| l == label)
            .map(|&(_, v)| v)
            .ok_or_else(|| Error::Tree(format!("no leaf labelled {label}")))
    }

    /// Edges traversed going from `a` to `b`, each with `true` when walked
    /// in its stored `u -> v` direction.
    fn path(&self, mut a: usize, mut b: usize) -> Vec<(usize, bool)> {
        let mut up = Vec::new();
        let mut down = Vec::new();
        while a != b {
            if self.depth[a] >= self.depth[b] {
                let (p, e) = self.parent[a].expect("non-root vertex has a parent");
                up.push((e, self.edges[e].0 == a));
                a = p;
            } else {
                let (p, e) = self.parent[b].expect("non-root vertex has a parent");
                down.push((e, self.edges[e].0 == p));
                b = p;
            }
        }
        down.reverse();
        up.extend(down);
        up
    }

    /// Signed common length of the paths `i -> j` and `m -> l`; positive
    /// when both traverse the shared segment in the same direction.
    pub fn cross_ratio(&self, i: u32, j: u32, m: u32, l: u32) -> Result<Rational> {
        let ids = [i, j, m, l];
        if ids.iter().collect::<BTreeSet<_>>().len() != 4 {
            return Err(Error::Tree("cross-ratio needs four distinct labels".into()));
        }
        let p1 = self.path(self.vertex_of(i)?, self.vertex_of(j)?);
        let p2 = self.path(self.vertex_of(m)?, self.vertex_of(l)?);
        let mut value = Rational::zero();
        for &(e, dir) in &p1 {
            if let Some(&(_, dir2)) = p2.iter().find(|&&(e2, _)| e2 == e) {
                if dir == dir2 {
                    value += &self.edges[e].2;
                } else {
                    value -= &self.edges[e].2;
                }
            }
        }
        Ok(value)
    }

    /// All cross-ratios, one per unordered configuration of two disjoint
    /// pairs, listed as `(i, j), (m, l)` with `i < j`, `m < l`, `i < m`.
    pub fn cross_ratios(&self) -> Result<Vec<CrossRatio>> {
        let labels = self.labels();
        if labels.len() < 4 {
            return Err(Error::Tree("cross-ratios need at least 4 leaves".into()));
        }
        let mut out = Vec::new();
        for (a, &i) in labels.iter().enumerate() {
            for &j in &labels[a + 1..] {
                for (c, &m) in labels.iter().enumerate().skip(a + 1) {
                    if m == j {
                        continue;
                    }
                    for &l in &labels[c + 1..] {
                        if l == j {
                            continue;
                        }
                        out.push(CrossRatio {
                            pairs: [(i, j), (m, l)],
                            value: self.cross_ratio(i, j, m, l)?,
                        });
                    }
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn caterpillar(len: Rational) -> TropicalTree {
        TropicalTree::new(2, vec![(0, 1, len)], vec![(1, 0), (3, 0), (2, 1), (4, 1)]).unwrap()
    }

    #[test]
    fn shared_edge_sign() {
        let t = caterpillar(ratio(5, 2));
        assert_eq!(t.cross_ratio(1, 2, 3, 4).unwrap(), ratio(5, 2));
        assert_eq!(t.cross_ratio(1, 2, 4, 3).unwrap(), ratio(-5, 2));
        assert_eq!(t.cross_ratio(1, 3, 2, 4).unwrap(), int(0));
    }

    #[test]
    fn canonical_configurations() {
        let t = caterpillar(int(1));
        let cr = t.cross_ratios().unwrap();
        let pairs: Vec<_> = cr.iter().map(|c| c.pairs).collect();
        assert_eq!(pairs, vec![[(1, 2), (3, 4)], [(1, 3), (2, 4)], [(1, 4), (2, 3)]]);
        let values: Vec<_> = cr.iter().map(|c| c.value.clone()).collect();
        assert_eq!(values, vec![int(1), int(0), int(-1)]);
    }

    #[test]
    fn five_leaves() {
        let t = TropicalTree::new(
            3,
            vec![(0, 1, int(1)), (1, 2, int(2))],
            vec![(1, 0), (2, 0), (3, 1), (4, 2), (5, 2)],
        )
        .unwrap();
        assert_eq!(t.cross_ratios().unwrap().len(), 15);
        assert_eq!(t.cross_ratio(1, 4, 2, 5).unwrap(), int(3));
        assert_eq!(t.cross_ratio(1, 3, 2, 4).unwrap(), int(1));
        assert_eq!(t.cross_ratio(1, 2, 4, 5).unwrap(), int(0));
    }

    #[test]
    fn rejects_bad_trees() {
        assert!(TropicalTree::new(1, vec![], vec![(1, 0), (1, 0), (2, 0), (3, 0)]).is_err());
        assert!(TropicalTree::new(2, vec![(0, 1, int(0))], vec![(1, 0), (2, 0), (3, 1), (4, 1)]).is_err());
        assert!(TropicalTree::new(2, vec![(0, 1, int(1))], vec![(1, 0), (2, 0), (3, 0), (4, 1)]).is_err());
        let star = TropicalTree::new(1, vec![], vec![(1, 0), (2, 0), (3, 0)]).unwrap();
        assert!(star.cross_ratios().is_err());
    }
}
