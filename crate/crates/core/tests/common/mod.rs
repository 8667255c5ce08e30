#![allow(dead_code)]

use std::path::PathBuf;

use polyproj::{
    make_cross_polytope, make_hypercube, make_permutahedron, make_random_bounded, HPolytope, PlaneSpec,
    Point2,
};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

/// One member of the random sweep: `n ∈ 2..=6`, `m ∈ n+1..=20`.
pub struct RandomCase {
    pub seed: u64,
    pub polytope: HPolytope,
    pub plane: PlaneSpec,
}

pub fn random_case(seed: u64) -> RandomCase {
    let n = 2 + (seed % 5) as usize;
    let m = n + 1 + ((seed / 5) as usize % (20 - n));
    let polytope = make_random_bounded(n, m, seed).expect("valid generator arguments");
    let plane = if seed.is_multiple_of(2) {
        PlaneSpec::new(1, 2, n).unwrap()
    } else {
        PlaneSpec::new(n - 1, n, n).unwrap()
    };
    RandomCase { seed, polytope, plane }
}

/// Named structured polytopes with a projection plane.
pub fn structured_corpus() -> Vec<(String, HPolytope, PlaneSpec)> {
    let mut out = Vec::new();
    for n in 2..=6 {
        out.push((
            format!("hypercube{n}"),
            make_hypercube(n, 1.0).unwrap(),
            PlaneSpec::new(1, 2, n).unwrap(),
        ));
        out.push((format!("cross{n}"), make_cross_polytope(n).unwrap(), PlaneSpec::new(1, n, n).unwrap()));
    }
    for d in 3..=10 {
        out.push((format!("perm{d}"), make_permutahedron(d).unwrap(), PlaneSpec::new(1, 2, d).unwrap()));
    }
    out.push(("perm6_dims_3_5".into(), make_permutahedron(6).unwrap(), PlaneSpec::new(3, 5, 6).unwrap()));
    out
}

/// Combinatorial vertex set of the perm-`d` projection onto `(x1, x2)`.
pub fn perm_pairs(d: usize) -> Vec<Point2> {
    (1..=d).flat_map(|i| (1..=d).filter(move |&j| j != i).map(move |j| [i as f64, j as f64])).collect()
}

pub fn cross(o: Point2, a: Point2, b: Point2) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Strictly convex CCW cycle: every consecutive turn is positive beyond
/// `-tol`, and each vertex lies strictly outside the chord of its neighbours.
pub fn ccw_and_extreme(points: &[Point2], tol: f64) -> Result<(), String> {
    let v = points.len();
    if v < 3 {
        return Ok(());
    }
    for i in 0..v {
        let (a, b, c) = (points[i], points[(i + 1) % v], points[(i + 2) % v]);
        let t = cross(a, b, c);
        if t <= -tol {
            return Err(format!("turn at vertex {} is {t:e}", (i + 1) % v));
        }
    }
    let hull = polyproj::convex_hull_2d(points);
    let cmp = polyproj::oracle::compare_cycles(points, &hull, tol.max(1e-12));
    if !cmp.matched {
        return Err(format!("hull of output has {} vertices, output has {v}", hull.len()));
    }
    Ok(())
}
