//! H-polytope data model and generators for the test and benchmark families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

/// Largest dimension accepted by [`make_cross_polytope`].
pub const MAX_CROSS_DIM: usize = 20;
/// Largest order accepted by [`make_permutahedron`].
pub const MAX_PERM_ORDER: usize = 12;

/// A polytope `{x : Ax <= b}` stored row by row.
///
/// Boundedness and nonemptiness are not checked here; consumers find out
/// lazily through their LPs.
#[derive(Debug, Clone, PartialEq)]
pub struct HPolytope {
    a: Vec<Vec<f64>>,
    b: Vec<f64>,
}

impl HPolytope {
    pub fn new(a: Vec<Vec<f64>>, b: Vec<f64>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::InvalidInput("polytope needs at least one constraint".into()));
        }
        if a.len() != b.len() {
            return Err(Error::InvalidInput(format!("{} constraint rows but {} offsets", a.len(), b.len())));
        }
        let n = a[0].len();
        if n < 2 {
            return Err(Error::InvalidInput(format!("ambient dimension must be at least 2, got {n}")));
        }
        for (i, row) in a.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidInput(format!(
                    "row {i} has {} coefficients, expected {n}",
                    row.len()
                )));
            }
            if !b[i].is_finite() || row.iter().any(|v| !v.is_finite()) {
                return Err(Error::InvalidInput(format!("row {i} has a non-finite entry")));
            }
        }
        Ok(Self { a, b })
    }

    /// Constraint count `m`.
    pub fn num_constraints(&self) -> usize {
        self.a.len()
    }

    /// Ambient dimension `n`.
    pub fn dim(&self) -> usize {
        self.a[0].len()
    }

    pub fn a(&self) -> &[Vec<f64>] {
        &self.a
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    /// Largest violation `max_i (a_i·x - b_i)`, negative when `x` is interior.
    pub fn max_violation(&self, x: &[f64]) -> f64 {
        self.a
            .iter()
            .zip(&self.b)
            .map(|(row, bi)| row.iter().zip(x).map(|(p, q)| p * q).sum::<f64>() - bi)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn contains(&self, x: &[f64], tol: f64) -> bool {
        self.max_violation(x) <= tol
    }
}

/// The box `[-half_width, half_width]^n`.
pub fn make_hypercube(n: usize, half_width: f64) -> Result<HPolytope> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("hypercube dimension must be >= 2, got {n}")));
    }
    if !(half_width > 0.0 && half_width.is_finite()) {
        return Err(Error::InvalidInput(format!("half width must be positive and finite, got {half_width}")));
    }
    let mut a = Vec::with_capacity(2 * n);
    for k in 0..n {
        for sign in [1.0, -1.0] {
            let mut row = vec![0.0; n];
            row[k] = sign;
            a.push(row);
        }
    }
    HPolytope::new(a, vec![half_width; 2 * n])
}

/// The unit cross-polytope `Σ|x_k| <= 1`, one facet per sign vector.
pub fn make_cross_polytope(n: usize) -> Result<HPolytope> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("cross-polytope dimension must be >= 2, got {n}")));
    }
    if n > MAX_CROSS_DIM {
        return Err(Error::DimensionTooLarge { requested: n, max: MAX_CROSS_DIM });
    }
    let a: Vec<Vec<f64>> = (0..1usize << n)
        .map(|mask| (0..n).map(|k| if mask & (1 << k) == 0 { 1.0 } else { -1.0 }).collect())
        .collect();
    let m = a.len();
    HPolytope::new(a, vec![1.0; m])
}

/// The permutahedron of order `d`: convex hull of the permutations of `(1, ..., d)`.
///
/// For every nonempty proper subset `S`, `Σ_{i∈S} x_i` is bounded by the sum
/// of the `|S|` largest values of `1..=d`; the total sum is pinned by two
/// opposing inequalities appended last.
pub fn make_permutahedron(d: usize) -> Result<HPolytope> {
    if d < 3 {
        return Err(Error::InvalidInput(format!("permutahedron order must be >= 3, got {d}")));
    }
    if d > MAX_PERM_ORDER {
        return Err(Error::DimensionTooLarge { requested: d, max: MAX_PERM_ORDER });
    }
    let full = (1usize << d) - 1;
    let mut a = Vec::with_capacity(full + 1);
    let mut b = Vec::with_capacity(full + 1);
    for mask in 1..full {
        let row: Vec<f64> = (0..d).map(|i| if mask & (1 << i) != 0 { 1.0 } else { 0.0 }).collect();
        let size = mask.count_ones() as usize;
        let bound: usize = (d - size + 1..=d).sum();
        a.push(row);
        b.push(bound as f64);
    }
    let total = (d * (d + 1) / 2) as f64;
    a.push(vec![1.0; d]);
    b.push(total);
    a.push(vec![-1.0; d]);
    b.push(-total);
    HPolytope::new(a, b)
}

/// Box half-width appended by [`make_random_bounded`].
pub const RANDOM_BOX: f64 = 10.0;

/// `m` random half-spaces with unit normals and offsets in `[0.1, 1.1)`,
/// intersected with the box `|x_k| <= 10`. Deterministic per seed.
pub fn make_random_bounded(n: usize, m: usize, seed: u64) -> Result<HPolytope> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("dimension must be >= 2, got {n}")));
    }
    if m < n + 1 {
        return Err(Error::InvalidInput(format!(
            "need at least n + 1 = {} random constraints, got {m}",
            n + 1
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = Vec::with_capacity(m + 2 * n);
    let mut b = Vec::with_capacity(m + 2 * n);
    while a.len() < m {
        let row: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
        let norm = row.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm < 1e-6 {
            continue;
        }
        a.push(row.into_iter().map(|v| v / norm).collect());
        b.push(rng.random_range(0.1..1.1));
    }
    for k in 0..n {
        for sign in [1.0, -1.0] {
            let mut row = vec![0.0; n];
            row[k] = sign;
            a.push(row);
            b.push(RANDOM_BOX);
        }
    }
    HPolytope::new(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::{lp_solve, LpStatus};

    #[test]
    fn hypercube_shapes() {
        let sq = make_hypercube(2, 1.0).unwrap();
        assert_eq!((sq.num_constraints(), sq.dim()), (4, 2));
        assert_eq!(sq.a()[0], vec![1.0, 0.0]);
        assert_eq!(sq.a()[1], vec![-1.0, 0.0]);
        let cube = make_hypercube(3, 2.0).unwrap();
        assert_eq!(cube.num_constraints(), 6);
        assert!(cube.b().iter().all(|&v| v == 2.0));
        let big = make_hypercube(10, 1.0).unwrap();
        assert_eq!((big.num_constraints(), big.dim()), (20, 10));
        assert!(make_hypercube(1, 1.0).is_err());
        assert!(make_hypercube(2, 0.0).is_err());
    }

    #[test]
    fn cross_polytope_shapes() {
        let d = make_cross_polytope(2).unwrap();
        assert_eq!(d.num_constraints(), 4);
        assert!(d.contains(&[1.0, 0.0], 0.0));
        assert!(d.contains(&[0.5, -0.5], 0.0));
        assert!(!d.contains(&[0.6, 0.6], 0.0));
        assert_eq!(make_cross_polytope(3).unwrap().num_constraints(), 8);
        assert_eq!(make_cross_polytope(21), Err(Error::DimensionTooLarge { requested: 21, max: 20 }));
    }

    #[test]
    fn permutahedron_shapes() {
        let p3 = make_permutahedron(3).unwrap();
        assert_eq!((p3.dim(), p3.num_constraints()), (3, 8));
        let p4 = make_permutahedron(4).unwrap();
        assert_eq!((p4.dim(), p4.num_constraints()), (4, 16));
        let p10 = make_permutahedron(10).unwrap();
        assert_eq!((p10.dim(), p10.num_constraints()), (10, 1024));
        assert!(matches!(make_permutahedron(13), Err(Error::DimensionTooLarge { .. })));
        assert!(make_permutahedron(2).is_err());
    }

    #[test]
    fn identity_permutation_is_tight_on_total_sum() {
        for d in 3..=8 {
            let p = make_permutahedron(d).unwrap();
            let x: Vec<f64> = (1..=d).map(|v| v as f64).collect();
            assert!(p.contains(&x, 0.0));
            let m = p.num_constraints();
            for row in [m - 2, m - 1] {
                let lhs: f64 = p.a()[row].iter().zip(&x).map(|(a, b)| a * b).sum();
                assert_eq!(lhs, p.b()[row]);
            }
        }
    }

    #[test]
    fn random_counts_and_interior_origin() {
        let p = make_random_bounded(2, 3, 42).unwrap();
        assert_eq!(p.num_constraints(), 7);
        assert!(p.max_violation(&[0.0, 0.0]) <= -0.1 + 1e-15);
        let q = make_random_bounded(6, 20, 7).unwrap();
        assert_eq!((q.dim(), q.num_constraints()), (6, 32));
        assert_eq!(make_random_bounded(6, 20, 7).unwrap(), q);
        assert_ne!(make_random_bounded(6, 20, 8).unwrap(), q);
        assert!(make_random_bounded(3, 3, 1).is_err());
    }

    #[test]
    fn random_outputs_are_bounded() {
        for seed in 0..20 {
            let n = 2 + (seed as usize % 5);
            let p = make_random_bounded(n, n + 3, seed).unwrap();
            for k in 0..n {
                for sign in [1.0, -1.0] {
                    let mut c = vec![0.0; n];
                    c[k] = sign;
                    let res = lp_solve(p.a(), p.b(), &c).unwrap();
                    assert_eq!(res.status(), LpStatus::Optimal, "seed {seed} axis {k}");
                }
            }
        }
    }

    #[test]
    fn constructor_validates() {
        assert!(HPolytope::new(vec![], vec![]).is_err());
        assert!(HPolytope::new(vec![vec![1.0]], vec![1.0]).is_err());
        assert!(HPolytope::new(vec![vec![1.0, 0.0]], vec![1.0, 2.0]).is_err());
        assert!(HPolytope::new(vec![vec![1.0, f64::INFINITY]], vec![1.0]).is_err());
        assert!(HPolytope::new(vec![vec![1.0, 0.0], vec![1.0]], vec![1.0, 1.0]).is_err());
    }
}
