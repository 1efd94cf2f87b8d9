//! Lattice polytopes and upper envelopes of lifted point sets.

use num_traits::{Signed, Zero};

use crate::linalg;
use crate::rational::int;
use crate::Rational;

/// Convex hull of finitely many integer points, stored as its extreme
/// points in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePolytope {
    vertices: Vec<Vec<i64>>,
}

impl LatticePolytope {
    pub fn from_points(points: &[Vec<i64>]) -> Self {
        let mut pts: Vec<Vec<i64>> = points.to_vec();
        pts.sort();
        pts.dedup();
        let vertices = match pts.first().map(Vec::len) {
            None => Vec::new(),
            Some(2) => {
                let flat: Vec<[i64; 2]> = pts.iter().map(|p| [p[0], p[1]]).collect();
                let mut v: Vec<Vec<i64>> = convex_hull_2d(&flat).into_iter().map(|p| p.to_vec()).collect();
                v.sort();
                v
            }
            Some(_) => (0..pts.len())
                .filter(|&i| {
                    let others: Vec<Vec<i64>> =
                        pts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.clone()).collect();
                    !in_convex_hull(&others, &pts[i])
                })
                .map(|i| pts[i].clone())
                .collect(),
        };
        LatticePolytope { vertices }
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    /// Affine dimension.
    pub fn dimension(&self) -> usize {
        affine_dimension(&self.vertices)
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        in_convex_hull(&self.vertices, p)
    }
}

pub fn affine_dimension(points: &[Vec<i64>]) -> usize {
    let Some(base) = points.first() else {
        return 0;
    };
    let rows: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| int(a - b)).collect())
        .collect();
    if rows.is_empty() {
        0
    } else {
        linalg::rank(&rows)
    }
}

/// Barycentric coordinates of `target` with respect to the points indexed by
/// `subset`, if they are affinely independent and span `target`.
fn barycentric(points: &[Vec<i64>], subset: &[usize], target: &[i64]) -> Option<Vec<Rational>> {
    let n = target.len();
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|c| subset.iter().map(|&k| int(points[k][c])).collect())
        .collect();
    a.push(subset.iter().map(|_| int(1)).collect());
    let mut b: Vec<Rational> = target.iter().map(|&t| int(t)).collect();
    b.push(int(1));
    linalg::solve_unique(&a, &b)
}

fn for_each_subset(m: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, m, k, cur, f);
            cur.pop();
        }
    }
    rec(0, m, k, &mut Vec::with_capacity(k), f);
}

/// Visits every convex representation of `target` by an affinely
/// independent full-dimensional simplex of `points`.
fn for_each_convex_representation(
    points: &[Vec<i64>],
    target: &[i64],
    mut f: impl FnMut(&[usize], &[Rational]),
) {
    if points.is_empty() {
        return;
    }
    let k = affine_dimension(points) + 1;
    for_each_subset(points.len(), k, &mut |subset| {
        if let Some(lambda) = barycentric(points, subset, target) {
            if lambda.iter().all(|l| !l.is_negative()) {
                f(subset, &lambda);
            }
        }
    });
}

pub fn in_convex_hull(points: &[Vec<i64>], target: &[i64]) -> bool {
    let mut found = false;
    for_each_convex_representation(points, target, |_, _| found = true);
    found
}

/// Value at `target` of the least concave function lying above every lifted
/// point `(points[k], heights[k])`. `None` outside the convex hull.
pub fn upper_envelope(points: &[Vec<i64>], heights: &[Rational], target: &[i64]) -> Option<Rational> {
    let mut best: Option<Rational> = None;
    for_each_convex_representation(points, target, |subset, lambda| {
        let v = subset
            .iter()
            .zip(lambda)
            .fold(Rational::zero(), |acc, (&k, l)| acc + l * &heights[k]);
        if best.as_ref().is_none_or(|b| v > *b) {
            best = Some(v);
        }
    });
    best
}

fn cross(o: [i64; 2], a: [i64; 2], b: [i64; 2]) -> i64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Strict convex hull in counter-clockwise order starting from the
/// lexicographically smallest point. Collinear boundary points are dropped.
/// Degenerate inputs give one point or the two segment endpoints.
pub fn convex_hull_2d(points: &[[i64; 2]]) -> Vec<[i64; 2]> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<[i64; 2]> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<[i64; 2]> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() == 2 && lower[0] == lower[1] {
        lower.pop();
    }
    lower
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn pts(v: &[&[i64]]) -> Vec<Vec<i64>> {
        v.iter().map(|p| p.to_vec()).collect()
    }

    #[test]
    fn triangle_and_square() {
        let t = LatticePolytope::from_points(&pts(&[&[0, 0], &[1, 0], &[0, 1]]));
        assert_eq!(t.vertices(), &pts(&[&[0, 0], &[0, 1], &[1, 0]])[..]);
        let s = LatticePolytope::from_points(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]));
        assert_eq!(s.vertices().len(), 4);
        assert_eq!(s.dimension(), 2);
    }

    #[test]
    fn segment_in_one_dimension() {
        let s = LatticePolytope::from_points(&pts(&[&[0], &[2], &[1]]));
        assert_eq!(s.vertices(), &pts(&[&[0], &[2]])[..]);
        assert!(s.contains(&[1]));
        assert!(!s.contains(&[3]));
    }

    #[test]
    fn three_dimensional_hull_drops_interior_points() {
        let p = LatticePolytope::from_points(&pts(&[
            &[0, 0, 0],
            &[2, 0, 0],
            &[0, 2, 0],
            &[0, 0, 2],
            &[1, 1, 0],
            &[0, 0, 1],
        ]));
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.dimension(), 3);
    }

    #[test]
    fn collinear_points_in_the_plane() {
        let p = LatticePolytope::from_points(&pts(&[&[0, 0], &[1, 1], &[2, 2]]));
        assert_eq!(p.vertices(), &pts(&[&[0, 0], &[2, 2]])[..]);
        assert_eq!(p.dimension(), 1);
    }

    #[test]
    fn envelope_values() {
        let p = pts(&[&[0], &[1], &[2]]);
        let h = [int(0), int(-5), int(0)];
        assert_eq!(upper_envelope(&p, &h, &[1]), Some(int(0)));
        let h = [int(0), int(1), int(3)];
        assert_eq!(upper_envelope(&p, &h, &[1]), Some(ratio(3, 2)));
        assert_eq!(upper_envelope(&p, &h, &[3]), None);
    }
}
