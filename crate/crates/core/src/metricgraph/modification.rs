//! Elementary tropical modifications: attaching and removing leaves.

use super::{Edge, GraphPoint, Length, MetricGraph};
use crate::{Error, Result};

fn fresh_name(g: &MetricGraph, stem: &str) -> String {
    (0..).map(|i| format!("{stem}{i}")).find(|n| g.vertex_id(n).is_none()).expect("unbounded search")
}

/// Attaches an infinite leaf at `p`, subdividing its edge when `p` is an
/// interior point. The piece of the split edge beyond `p` is appended as a
/// new edge, then the leaf edge.
pub fn modify(g: &MetricGraph, p: &GraphPoint) -> Result<MetricGraph> {
    g.check_point(p)?;
    let mut names = g.names().to_vec();
    let mut edges = g.edges().to_vec();
    let anchor = match p {
        GraphPoint::Vertex(v) => *v,
        GraphPoint::OnEdge { edge, offset } => {
            let mid = names.len();
            names.push(fresh_name(g, "m"));
            let old = edges[*edge].clone();
            let len = old.length.finite().ok_or(Error::InfiniteEdge(*edge))?.clone();
            edges[*edge] = Edge::finite(old.u, mid, offset.clone());
            edges.push(Edge::finite(mid, old.v, len - offset));
            mid
        }
    };
    let leaf = names.len();
    let probe = MetricGraph { names: names.clone(), edges: edges.clone() };
    names.push(fresh_name(&probe, "leaf"));
    edges.push(Edge::infinite(anchor, leaf));
    MetricGraph::new(names, edges)
}

/// Removes the leaf edge `e` together with its 1-valent end. If the other
/// end is left 2-valent between two distinct edges it is smoothed away,
/// which undoes [`modify`].
pub fn contract_leaf(g: &MetricGraph, e: usize) -> Result<MetricGraph> {
    let edge = g.edges().get(e).ok_or_else(|| Error::Graph(format!("no edge {e}")))?;
    if edge.is_loop() || g.vertex_count() < 2 {
        return Err(Error::NotLeaf(e));
    }
    let (leaf, anchor) = if g.valence(edge.v) == 1 {
        (edge.v, edge.u)
    } else if g.valence(edge.u) == 1 {
        (edge.u, edge.v)
    } else {
        return Err(Error::NotLeaf(e));
    };
    let mut edges: Vec<Edge> = g.edges().to_vec();
    edges.remove(e);
    let mut names = g.names().to_vec();
    remove_vertex(&mut names, &mut edges, leaf);
    let anchor = if anchor > leaf { anchor - 1 } else { anchor };

    let touching: Vec<usize> = (0..edges.len()).filter(|&i| edges[i].u == anchor || edges[i].v == anchor).collect();
    if let [i, j] = touching[..] {
        let (a, b) = (&edges[i], &edges[j]);
        if !a.is_loop() && !b.is_loop() {
            if let (Length::Finite(la), Length::Finite(lb)) = (&a.length, &b.length) {
                let merged = Edge::finite(a.other(anchor), b.other(anchor), la + lb);
                edges[i] = merged;
                edges.remove(j);
                remove_vertex(&mut names, &mut edges, anchor);
            }
        }
    }
    MetricGraph::new(names, edges)
}

fn remove_vertex(names: &mut Vec<String>, edges: &mut [Edge], v: usize) {
    names.remove(v);
    for e in edges.iter_mut() {
        if e.u > v {
            e.u -= 1;
        }
        if e.v > v {
            e.v -= 1;
        }
    }
}

/// Any two compact trees are related by modifications, and genus is a
/// modification invariant, so equivalence of trees reduces to both being
/// trees.
pub fn trees_equivalent(t1: &MetricGraph, t2: &MetricGraph) -> bool {
    t1.is_tree() && t2.is_tree()
}
