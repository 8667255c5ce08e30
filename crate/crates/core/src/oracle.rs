//! Brute-force ground truth for small polytopes.
//!
//! Every `n`-subset of constraints is solved as a square linear system; the
//! feasible solutions are the vertices. Projecting them and taking a 2D
//! convex hull gives the exact vertex set of a projection. Exponential and
//! deliberately naive; it exists to check the enumerator.

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::polytope::HPolytope;
use crate::support::{PlaneSpec, Point2};

/// Maximum number of candidate bases examined.
pub const MAX_BASES: u128 = 10_000_000;
/// Feasibility tolerance for basic solutions.
pub const FEAS_TOL: f64 = 1e-9;
/// Basic solutions closer than this are the same vertex.
pub const DEDUP_TOL: f64 = 1e-7;
/// Pivots below this magnitude mark a singular subsystem.
pub const SINGULAR_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct VertexCloud {
    pub points: Vec<Vec<f64>>,
}

impl VertexCloud {
    pub fn count(&self) -> usize {
        self.points.len()
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n.saturating_sub(k));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Solves the square system in place by partial-pivot elimination.
#[allow(clippy::needless_range_loop)]
fn solve_square(mut m: Vec<Vec<f64>>, mut rhs: Vec<f64>) -> Option<Vec<f64>> {
    let n = rhs.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))?;
        if m[piv][col].abs() < SINGULAR_TOL {
            return None;
        }
        m.swap(col, piv);
        rhs.swap(col, piv);
        for row in col + 1..n {
            let f = m[row][col] / m[col][col];
            if f != 0.0 {
                for k in col..n {
                    m[row][k] -= f * m[col][k];
                }
                rhs[row] -= f * rhs[col];
            }
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let s: f64 = (row + 1..n).map(|k| m[row][k] * x[k]).sum();
        x[row] = (rhs[row] - s) / m[row][row];
    }
    Some(x)
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

/// All vertices of `p` by basis enumeration.
pub fn brute_force_vertices(p: &HPolytope) -> Result<VertexCloud> {
    let (m, n) = (p.num_constraints(), p.dim());
    let count = binomial(m, n);
    if count > MAX_BASES {
        return Err(Error::TooManyBases { count, limit: MAX_BASES });
    }
    let mut candidates: Vec<Vec<f64>> = (0..m)
        .combinations(n)
        .par_bridge()
        .filter_map(|rows| {
            let sys = rows.iter().map(|&i| p.a()[i].clone()).collect();
            let rhs = rows.iter().map(|&i| p.b()[i]).collect();
            solve_square(sys, rhs).filter(|x| p.contains(x, FEAS_TOL))
        })
        .collect();
    if candidates.is_empty() {
        return Err(Error::UnboundedOrEmpty);
    }
    // parallel collection order is arbitrary; sort before the greedy merge
    candidates.sort_by(|a, b| {
        a.iter().zip(b).map(|(x, y)| x.total_cmp(y)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
    });
    let mut points: Vec<Vec<f64>> = Vec::new();
    for c in candidates {
        if !points.iter().any(|q| dist(q, &c) <= DEDUP_TOL) {
            points.push(c);
        }
    }
    Ok(VertexCloud { points })
}

fn cross(o: Point2, a: Point2, b: Point2) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Strict convex hull (monotone chain), CCW from the lexicographic minimum.
///
/// Points within `1e-9` of each other are merged and turns whose sine is
/// below `1e-10` count as collinear, so noise from floating-point vertices
/// does not leak into the hull.
pub fn convex_hull_2d(points: &[Point2]) -> Vec<Point2> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
    pts.dedup_by(|a, b| (a[0] - b[0]).hypot(a[1] - b[1]) <= 1e-9);
    if pts.len() <= 2 {
        return pts;
    }
    let turns_left = |o: Point2, a: Point2, b: Point2| {
        let la = (a[0] - o[0]).hypot(a[1] - o[1]);
        let lb = (b[0] - o[0]).hypot(b[1] - o[1]);
        cross(o, a, b) > 1e-10 * la * lb
    };
    let mut hull: Vec<Point2> = Vec::with_capacity(2 * pts.len());
    for &p in &pts {
        while hull.len() >= 2 && !turns_left(hull[hull.len() - 2], hull[hull.len() - 1], p) {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len && !turns_left(hull[hull.len() - 2], hull[hull.len() - 1], p) {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

/// Exact vertex set of the projection of `p` onto `plane`, CCW.
pub fn oracle_projection_vertices(p: &HPolytope, plane: PlaneSpec) -> Result<Vec<Point2>> {
    let cloud = brute_force_vertices(p)?;
    let projected: Vec<Point2> = cloud.points.iter().map(|x| plane.project(x)).collect();
    Ok(convex_hull_2d(&projected))
}

/// Result of matching two cyclic vertex sequences.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleComparison {
    /// Same length and equal up to a cyclic rotation within the tolerance.
    pub matched: bool,
    /// Largest distance from a point of either list to the nearest point of the other.
    pub max_distance: f64,
}

/// Compares two CCW vertex cycles up to rotation.
pub fn compare_cycles(found: &[Point2], expected: &[Point2], tol: f64) -> CycleComparison {
    let d = |p: Point2, q: Point2| (p[0] - q[0]).hypot(p[1] - q[1]);
    let nearest = |p: Point2, set: &[Point2]| set.iter().map(|&q| d(p, q)).fold(f64::INFINITY, f64::min);
    let max_distance = found
        .iter()
        .map(|&p| nearest(p, expected))
        .chain(expected.iter().map(|&q| nearest(q, found)))
        .fold(0.0, f64::max);
    let matched = if found.len() != expected.len() {
        false
    } else if found.is_empty() {
        true
    } else {
        let len = found.len();
        (0..len).any(|shift| (0..len).all(|i| d(found[i], expected[(i + shift) % len]) <= tol))
    };
    CycleComparison { matched, max_distance }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{make_cross_polytope, make_hypercube, make_permutahedron};

    #[test]
    fn square_vertices() {
        let v = brute_force_vertices(&make_hypercube(2, 1.0).unwrap()).unwrap();
        assert_eq!(v.count(), 4);
        for p in &v.points {
            assert!(p.iter().all(|x| (x.abs() - 1.0).abs() < 1e-12));
        }
    }

    #[test]
    fn diamond_vertices() {
        let v = brute_force_vertices(&make_cross_polytope(2).unwrap()).unwrap();
        let mut pts: Vec<Point2> = v.points.iter().map(|p| [p[0], p[1]]).collect();
        pts.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
        assert_eq!(pts, vec![[-1.0, 0.0], [0.0, -1.0], [0.0, 1.0], [1.0, 0.0]]);
    }

    #[test]
    fn permutahedron_vertex_counts() {
        for (d, fact) in [(3, 6), (4, 24), (5, 120)] {
            let v = brute_force_vertices(&make_permutahedron(d).unwrap()).unwrap();
            assert_eq!(v.count(), fact, "order {d}");
            for p in &v.points {
                let mut sorted: Vec<f64> = p.iter().map(|x| x.round()).collect();
                sorted.sort_by(f64::total_cmp);
                let want: Vec<f64> = (1..=d).map(|k| k as f64).collect();
                assert_eq!(sorted, want);
                assert!(p.iter().all(|x| (x - x.round()).abs() < 1e-9));
            }
        }
    }

    #[test]
    fn guards() {
        let big = make_cross_polytope(12).unwrap();
        assert!(matches!(brute_force_vertices(&big), Err(Error::TooManyBases { .. })));
        let half = HPolytope::new(vec![vec![1.0, 0.0], vec![2.0, 0.0]], vec![1.0, 1.0]).unwrap();
        assert_eq!(brute_force_vertices(&half), Err(Error::UnboundedOrEmpty));
    }

    #[test]
    fn hull_examples() {
        let h = convex_hull_2d(&[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0], [0.5, 0.5]]);
        assert_eq!(h, vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]);
        assert_eq!(convex_hull_2d(&[[0.0, 0.0]]), vec![[0.0, 0.0]]);
        assert_eq!(convex_hull_2d(&[[0.0, 0.0], [1.0, 1.0], [2.0, 2.0]]), vec![[0.0, 0.0], [2.0, 2.0]]);
        assert_eq!(convex_hull_2d(&[[3.0, 1.0], [3.0, 1.0]]), vec![[3.0, 1.0]]);
        // collinear boundary points dropped
        let h = convex_hull_2d(&[[0.0, 0.0], [1.0, 0.0], [2.0, 0.0], [2.0, 2.0], [0.0, 2.0]]);
        assert_eq!(h, vec![[0.0, 0.0], [2.0, 0.0], [2.0, 2.0], [0.0, 2.0]]);
    }

    #[test]
    fn cube_projects_to_square() {
        let cube = make_hypercube(3, 1.0).unwrap();
        let h = oracle_projection_vertices(&cube, PlaneSpec::new(1, 2, 3).unwrap()).unwrap();
        assert_eq!(h, vec![[-1.0, -1.0], [1.0, -1.0], [1.0, 1.0], [-1.0, 1.0]]);
    }

    #[test]
    fn perm4_projects_to_hexagon() {
        let p = make_permutahedron(4).unwrap();
        let h = oracle_projection_vertices(&p, PlaneSpec::new(1, 2, 4).unwrap()).unwrap();
        // hull of {(i, j) : i != j} from the combinatorial description
        let combinatorial: Vec<Point2> = (1..=4)
            .flat_map(|i| (1..=4).filter(move |&j| j != i).map(move |j| [i as f64, j as f64]))
            .collect();
        let expected = convex_hull_2d(&combinatorial);
        assert_eq!(expected.len(), 6);
        assert!(compare_cycles(&h, &expected, 1e-9).matched, "{h:?}");
    }

    #[test]
    fn cycle_comparison() {
        let a = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]];
        let b = [[1.0, 0.0], [0.0, 1.0], [0.0, 0.0]];
        assert!(compare_cycles(&a, &b, 1e-12).matched);
        let rev = [[0.0, 1.0], [1.0, 0.0], [0.0, 0.0]];
        let c = compare_cycles(&a, &rev, 1e-12);
        assert!(!c.matched);
        assert_eq!(c.max_distance, 0.0);
        let short = compare_cycles(&a, &a[..2], 1e-12);
        assert!(!short.matched);
        assert!((short.max_distance - 1.0).abs() < 1e-15);
    }
}
