//! Property tests for the structural invariants of each module.

mod common;

use common::*;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::Rng;
use tropkit::enumeration::{count_curves, TropicalTree};
use tropkit::jacobian::{jac_equal, period_matrix, Jacobian};
use tropkit::metricgraph::{
    contract_leaf, divisor_of, modify, rank, reduced_divisor, Divisor, GraphPoint, MetricGraph,
};
use tropkit::planecurve::{check_balanced, corner_locus, degree, stable_intersection, EdgeKind, PlaneTropicalCurve};
use tropkit::polynomial::{Monomial, TropicalPolynomial};
use tropkit::rational::{int, lattice_length, ratio};
use tropkit::Rational;

fn poly_in_triangle(d: i64) -> impl Strategy<Value = TropicalPolynomial> {
    let pts = triangle(d);
    let n = pts.len();
    proptest::collection::vec((any::<bool>(), -20i64..=20, 1i64..=4), n).prop_filter_map("flat support", move |choice| {
        let terms: Vec<Monomial> = pts
            .iter()
            .zip(choice)
            .filter(|(_, (keep, _, _))| *keep)
            .map(|(e, (_, p, q))| Monomial::new(e.clone(), ratio(p, q)))
            .collect();
        let exps: Vec<Vec<i64>> = terms.iter().map(|t| t.exponent.clone()).collect();
        if tropkit::polytope::affine_dimension(&exps) < 2 {
            return None;
        }
        TropicalPolynomial::new(2, terms).ok()
    })
}

fn probe(c: &PlaneTropicalCurve, e: usize) -> [Rational; 2] {
    match &c.edges()[e].kind {
        EdgeKind::Segment { a, b } => {
            let (p, q) = (&c.vertices()[*a], &c.vertices()[*b]);
            [(&p[0] + &q[0]) / int(2), (&p[1] + &q[1]) / int(2)]
        }
        EdgeKind::Ray { v, dir } => {
            let p = &c.vertices()[*v];
            [&p[0] + int(dir[0]), &p[1] + int(dir[1])]
        }
    }
}

/// Weight of `V(f)` at a point in the relative interior of an edge: the
/// lattice length spanned by the maximizing exponents, 0 off the curve.
fn local_weight(f: &TropicalPolynomial, x: &[Rational; 2]) -> i64 {
    let tied = f.maximizing_terms(x).unwrap();
    let exps: Vec<&Vec<i64>> = tied.iter().map(|&t| &f.terms()[t].exponent).collect();
    let (lo, hi) = (exps.iter().min().unwrap(), exps.iter().max().unwrap());
    lattice_length([hi[0] - lo[0], hi[1] - lo[1]])
}

/// True when the maximizing exponents at `x` are collinear.
fn on_edge(f: &TropicalPolynomial, x: &[Rational; 2]) -> bool {
    let tied = f.maximizing_terms(x).unwrap();
    let exps: Vec<Vec<i64>> = tied.iter().map(|&t| f.terms()[t].exponent.clone()).collect();
    tropkit::polytope::affine_dimension(&exps) <= 1
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn corner_loci_are_balanced_and_dual(f in (1i64..=5).prop_flat_map(poly_in_triangle)) {
        let c = corner_locus(&f).unwrap();
        prop_assert!(check_balanced(&c));
        prop_assert_eq!(c.dual().unwrap().two_cells().count(), c.vertices().len());
        for (i, e) in c.edges().iter().enumerate() {
            prop_assert_eq!(e.weight as i64, local_weight(&f, &probe(&c, i)));
        }
    }

    #[test]
    fn product_curve_is_the_sum_of_cycles(f in poly_in_triangle(2), g in poly_in_triangle(2)) {
        let fg = f.trop_product(&g).unwrap();
        let c = corner_locus(&fg).unwrap();
        for i in 0..c.edges().len() {
            let x = probe(&c, i);
            prop_assert_eq!(c.edges()[i].weight as i64, local_weight(&f, &x) + local_weight(&g, &x));
        }
        for h in [&f, &g] {
            let ch = corner_locus(h).unwrap();
            for i in 0..ch.edges().len() {
                let x = probe(&ch, i);
                // the probe may land on a vertex of the product curve
                if on_edge(&fg, &x) {
                    prop_assert!(local_weight(&fg, &x) >= ch.edges()[i].weight as i64);
                }
            }
        }
    }

    #[test]
    fn degree_of_full_triangle_support(d in 1i64..=4, seed in any::<u64>()) {
        let f = full_polynomial(&mut rng(seed), d);
        prop_assert_eq!(degree(&corner_locus(&f).unwrap()).unwrap(), d as u64);
    }

    #[test]
    fn bezout_total_is_translate_independent(d1 in 1i64..=3, d2 in 1i64..=3, seed in any::<u64>()) {
        let mut r = rng(seed);
        let c1 = corner_locus(&full_polynomial(&mut r, d1)).unwrap();
        let c2 = corner_locus(&full_polynomial(&mut r, d2)).unwrap();
        let a = stable_intersection(&c1, &c2, seed).unwrap();
        let b = stable_intersection(&c1, &c2, seed.wrapping_add(1)).unwrap();
        prop_assert_eq!(a.total, (d1 * d2) as u64);
        prop_assert_eq!(b.total, a.total);
        let sum: u64 = a.points.iter().map(|p| p.multiplicity).sum();
        prop_assert_eq!(sum, a.total);
    }

    #[test]
    fn canonical_degree_and_principal_degree(seed in any::<u64>(), genus in 0usize..=3) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, genus);
        prop_assert_eq!(g.canonical_divisor().unwrap().degree(), 2 * g.genus() as i64 - 2);
        let phi = random_function(&mut r, &g);
        prop_assert_eq!(divisor_of(&g, &phi).degree(), 0);
    }

    #[test]
    fn reduction_is_idempotent(seed in any::<u64>(), genus in 0usize..=3) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, genus);
        let d = random_divisor(&mut r, &g, 4);
        let q = GraphPoint::Vertex(r.gen_range(0..g.vertex_count()));
        let once = reduced_divisor(&g, &d, &q).unwrap();
        prop_assert_eq!(reduced_divisor(&g, &once, &q).unwrap(), once.clone());
        prop_assert_eq!(once.degree(), d.degree());
    }

    #[test]
    fn rank_is_a_class_invariant(seed in any::<u64>(), genus in 0usize..=2) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, genus);
        let d = random_divisor(&mut r, &g, 3);
        let phi = random_function(&mut r, &g);
        let moved = &d + &divisor_of(&g, &phi);
        prop_assert_eq!(rank(&g, &d).unwrap(), rank(&g, &moved).unwrap());
    }

    #[test]
    fn modification_keeps_genus(seed in any::<u64>(), genus in 0usize..=3) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, genus);
        let p = random_point(&mut r, &g);
        let m = modify(&g, &p).unwrap();
        prop_assert_eq!(m.genus(), g.genus());
        let leaf = m.edges().len() - 1;
        let back = contract_leaf(&m, leaf).unwrap();
        prop_assert_eq!(back.genus(), g.genus());
    }

    #[test]
    fn period_matrix_is_positive_definite(seed in any::<u64>(), genus in 1usize..=3) {
        let g = random_graph(&mut rng(seed), genus);
        let q = period_matrix(&g).unwrap().entries;
        for i in 0..q.len() {
            for (j, row) in q.iter().enumerate() {
                prop_assert_eq!(&q[i][j], &row[i]);
            }
            let minor: Vec<Vec<Rational>> = q[..=i].iter().map(|row| row[..=i].to_vec()).collect();
            prop_assert!(determinant(minor).is_positive());
        }
    }

    #[test]
    fn abel_jacobi_is_chain_independent(seed in any::<u64>(), genus in 1usize..=3) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, genus);
        let (x, y) = (random_point(&mut r, &g), random_point(&mut r, &g));
        let d = Divisor::from_entries([(x.clone(), 1), (y.clone(), -1)]);
        let jac = Jacobian::new(&g).unwrap();
        let walk = random_walk_chain(&mut r, &g, &y, &x);
        let q = period_matrix(&g).unwrap();
        prop_assert!(jac_equal(&q, &jac.abel_jacobi(&d).unwrap(), &jac.integrate_chain(&walk)).unwrap());
    }

    #[test]
    fn abel_kernel(seed in any::<u64>(), genus in 1usize..=3) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, genus);
        let phi = random_function(&mut r, &g);
        let jac = Jacobian::new(&g).unwrap();
        let image = jac.abel_jacobi(&divisor_of(&g, &phi)).unwrap();
        prop_assert!(jac.equal(&image, &tropkit::jacobian::JacobianPoint::zero(g.genus())).unwrap());
    }

    #[test]
    fn four_leaf_trees_are_told_apart(a in tree4(), b in tree4()) {
        let (ta, tb) = (&a.0, &b.0);
        let same = a.1 == b.1;
        let va: Vec<Rational> = ta.cross_ratios().unwrap().into_iter().map(|c| c.value).collect();
        let vb: Vec<Rational> = tb.cross_ratios().unwrap().into_iter().map(|c| c.value).collect();
        prop_assert_eq!(va == vb, same);
    }
}

/// Four-leaf tree with its isometry class: the split (which leaf sits with
/// leaf 1) and the inner length, or the star.
fn tree4() -> impl Strategy<Value = (TropicalTree, Option<(u32, Rational)>)> {
    prop_oneof![
        Just((TropicalTree::new(1, vec![], vec![(1, 0), (2, 0), (3, 0), (4, 0)]).unwrap(), None)),
        (2u32..=4, 1i64..=6, 1i64..=3).prop_map(|(partner, p, q)| {
            let len = ratio(p, q);
            let rest: Vec<u32> = (2..=4).filter(|&l| l != partner).collect();
            let leaves = vec![(1, 0), (partner, 0), (rest[0], 1), (rest[1], 1)];
            (TropicalTree::new(2, vec![(0, 1, len.clone())], leaves).unwrap(), Some((partner, len)))
        }),
    ]
}

fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = int(1);
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        det *= &m[col][col];
        for r in col + 1..n {
            let factor = &m[r][col] / &m[col][col];
            let pivot = m[col].clone();
            for (x, p) in m[r].iter_mut().zip(pivot).skip(col) {
                *x -= &factor * p;
            }
        }
    }
    det
}

/// A random walk from `from` to `to`, recorded as signed lengths per edge.
fn random_walk_chain(r: &mut impl Rng, g: &MetricGraph, from: &GraphPoint, to: &GraphPoint) -> Vec<Rational> {
    let mut chain = vec![Rational::zero(); g.edges().len()];
    let len = |e: usize| g.edge_length(e).unwrap().clone();
    // leave the start point for a vertex
    let mut at = match from {
        GraphPoint::Vertex(v) => *v,
        GraphPoint::OnEdge { edge, offset } => {
            if r.gen_bool(0.5) {
                chain[*edge] -= offset;
                g.edges()[*edge].u
            } else {
                chain[*edge] += len(*edge) - offset;
                g.edges()[*edge].v
            }
        }
    };
    // the walk must end at a vertex from which `to` is reached directly
    let (target, last_edge) = match to {
        GraphPoint::Vertex(v) => (*v, None),
        GraphPoint::OnEdge { edge, .. } => (g.edges()[*edge].u, Some(*edge)),
    };
    for step in 0.. {
        if at == target && (step > 3 || r.gen_bool(0.5)) {
            break;
        }
        let incident = g.incident(at);
        let e = incident[r.gen_range(0..incident.len())];
        let edge = &g.edges()[e];
        if edge.u == at {
            chain[e] += len(e);
            at = edge.v;
        } else {
            chain[e] -= len(e);
            at = edge.u;
        }
    }
    if let (Some(e), GraphPoint::OnEdge { offset, .. }) = (last_edge, to) {
        chain[e] += offset;
    }
    chain
}

#[test]
fn counts_do_not_depend_on_thread_count() {
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| (1..=4).map(|d| count_curves(d, 0)).collect::<Vec<_>>())
    };
    assert_eq!(run(1), run(4));
}
