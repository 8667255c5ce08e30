//! Support-function sampling of a polytope along directions of a coordinate plane.
//!
//! A sample at angle `θ` maximizes `v(θ)·x` where `v` has `cos θ` and `sin θ`
//! in the two plane coordinates and zeros elsewhere, so the support function
//! of the 2D projection is read off without ever forming the projection.
//! Ties are broken by a second LP along `θ + 90°`, which makes the reported
//! 2D point the counter-clockwise end of the projected optimal face.

use crate::error::{Error, Result};
use crate::lp::{lexicographic_solve_with, LpResult, LpTolerances};
use crate::polytope::HPolytope;

/// A point of the projection plane.
pub type Point2 = [f64; 2];

/// Two coordinate axes (1-based, `d1 < d2`) of an `n`-dimensional space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct PlaneSpec {
    d1: usize,
    d2: usize,
    n: usize,
}

impl PlaneSpec {
    pub fn new(d1: usize, d2: usize, n: usize) -> Result<Self> {
        if !(1 <= d1 && d1 < d2 && d2 <= n) {
            return Err(Error::InvalidInput(format!(
                "projection dims ({d1}, {d2}) invalid for dimension {n}; need 1 <= d1 < d2 <= n"
            )));
        }
        Ok(Self { d1, d2, n })
    }

    pub fn d1(&self) -> usize {
        self.d1
    }

    pub fn d2(&self) -> usize {
        self.d2
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Projects an `n`-vector onto the plane.
    pub fn project(&self, x: &[f64]) -> Point2 {
        [x[self.d1 - 1], x[self.d2 - 1]]
    }
}

/// Reduces an angle in degrees to `[0, 360)`.
pub fn normalize_deg(theta_deg: f64) -> f64 {
    let t = theta_deg.rem_euclid(360.0);
    // rem_euclid can round up to the modulus for tiny negative inputs
    if t >= 360.0 {
        0.0
    } else {
        t
    }
}

/// `(cos θ, sin θ)` for `θ` in degrees, exact on multiples of 90°.
pub fn cos_sin_deg(theta_deg: f64) -> (f64, f64) {
    let t = normalize_deg(theta_deg);
    match t {
        0.0 => (1.0, 0.0),
        90.0 => (0.0, 1.0),
        180.0 => (-1.0, 0.0),
        270.0 => (0.0, -1.0),
        _ => {
            let (s, c) = t.to_radians().sin_cos();
            (c, s)
        }
    }
}

/// Unit vector with `cos θ` at `d1`, `sin θ` at `d2` and zeros elsewhere.
pub fn direction_from_angle(theta_deg: f64, plane: PlaneSpec) -> Vec<f64> {
    let (c, s) = cos_sin_deg(theta_deg);
    let mut v = vec![0.0; plane.n];
    v[plane.d1 - 1] = c;
    v[plane.d2 - 1] = s;
    v
}

/// One support-function sample.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportSample {
    /// Angle in `[0, 360)`.
    pub theta_deg: f64,
    pub rho: f64,
    /// Full-dimensional optimizer.
    pub witness: Vec<f64>,
    /// `witness` projected onto the plane.
    pub point2d: Point2,
}

/// Samples the support function of `p` at `theta_deg` with default tolerances.
pub fn sample_support(p: &HPolytope, theta_deg: f64, plane: PlaneSpec) -> Result<SupportSample> {
    sample_support_with(p, theta_deg, plane, &LpTolerances::default())
}

pub fn sample_support_with(
    p: &HPolytope,
    theta_deg: f64,
    plane: PlaneSpec,
    tol: &LpTolerances,
) -> Result<SupportSample> {
    if plane.n != p.dim() {
        return Err(Error::InvalidInput(format!(
            "plane is {}-dimensional but polytope has dimension {}",
            plane.n,
            p.dim()
        )));
    }
    let theta = normalize_deg(theta_deg);
    let v = direction_from_angle(theta, plane);
    let w = direction_from_angle(theta + 90.0, plane);
    match lexicographic_solve_with(p.a(), p.b(), &v, &w, tol)? {
        LpResult::Optimal { value, point } => {
            Ok(SupportSample { theta_deg: theta, rho: value, point2d: plane.project(&point), witness: point })
        }
        LpResult::Unbounded => Err(Error::ProjectionUnbounded { theta_deg: theta }),
        LpResult::Infeasible => Err(Error::EmptyPolytope),
    }
}
