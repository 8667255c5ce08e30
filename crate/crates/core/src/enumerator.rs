//! Counter-clockwise vertex enumeration of a 2D projection.
//!
//! The support function of a convex polygon, plotted against the direction
//! angle, is a chain of sinusoids, one per vertex. The enumerator starts from
//! the vertex supported at 0° and repeatedly bisects the angular interval
//! ahead of the current vertex until the junction with the next sinusoid is
//! bracketed to within `epsilon_deg`; the sample just past the junction is
//! the next vertex. It stops when it arrives back at the first vertex.
//!
//! Bisection alone misses a vertex whose normal cone is narrower than the
//! resolution. With `verify_edges` on, every discovered pair `(s, q)` is
//! certified by one extra sample along the outer normal of the chord `s→q`:
//! the sample returns `q` exactly when `s→q` is an edge, and otherwise a
//! vertex lying between them, which is inserted and both halves re-checked.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::lp::LpTolerances;
use crate::polytope::HPolytope;
use crate::support::{sample_support_with, PlaneSpec, Point2, SupportSample};

/// LP solves charged per support sample (primary plus tie-break phase).
pub const LP_CALLS_PER_SAMPLE: u64 = 2;

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct EnumerationParams {
    /// Angular resolution of the junction search, in degrees.
    pub epsilon_deg: f64,
    /// Relative tolerance for treating two projected points as the same vertex.
    pub point_tol: f64,
    pub max_vertices: usize,
    /// Certify each discovered edge with a sample along its outer normal.
    pub verify_edges: bool,
}

impl Default for EnumerationParams {
    fn default() -> Self {
        Self { epsilon_deg: 0.5, point_tol: 1e-9, max_vertices: 100_000, verify_edges: true }
    }
}

impl EnumerationParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.epsilon_deg > 0.0 && self.epsilon_deg < 90.0) {
            return Err(Error::InvalidInput(format!(
                "epsilon must lie in (0, 90) degrees, got {}",
                self.epsilon_deg
            )));
        }
        if !(self.point_tol > 0.0 && self.point_tol.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "point tolerance must be positive, got {}",
                self.point_tol
            )));
        }
        if self.max_vertices < 3 {
            return Err(Error::InvalidInput(format!(
                "max_vertices must be at least 3, got {}",
                self.max_vertices
            )));
        }
        Ok(())
    }

    /// Whether two projected points denote the same vertex.
    pub fn same_point(&self, p: Point2, q: Point2) -> bool {
        let dist = (p[0] - q[0]).hypot(p[1] - q[1]);
        let scale = 1.0 + p[0].hypot(p[1]).max(q[0].hypot(q[1]));
        dist <= self.point_tol * scale
    }
}

/// A projected vertex and the angle at which it was discovered.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct DiscoveredVertex {
    pub theta_deg: f64,
    pub point: Point2,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProjectedVertexList {
    pub vertices: Vec<DiscoveredVertex>,
    pub plane: PlaneSpec,
}

impl ProjectedVertexList {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn points(&self) -> Vec<Point2> {
        self.vertices.iter().map(|v| v.point).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnumerationReport {
    pub result: ProjectedVertexList,
    pub params: EnumerationParams,
    pub lp_calls: u64,
    pub binsearch_iters: u64,
    pub wall_ms: f64,
}

/// Upper bound on LP calls for `vertices` outputs at resolution `epsilon_deg`:
/// `2 (V + 1) (ceil(log2(360 / ε)) + 2)`.
pub fn lp_call_budget(vertices: usize, epsilon_deg: f64) -> u64 {
    let depth = (360.0 / epsilon_deg).log2().ceil() as u64;
    LP_CALLS_PER_SAMPLE * (vertices as u64 + 1) * (depth + 2)
}

/// Counts support samples for one run.
struct Sampler<'a> {
    polytope: &'a HPolytope,
    plane: PlaneSpec,
    tol: LpTolerances,
    samples: u64,
    iters: u64,
}

impl<'a> Sampler<'a> {
    fn new(polytope: &'a HPolytope, plane: PlaneSpec) -> Self {
        Self { polytope, plane, tol: LpTolerances::default(), samples: 0, iters: 0 }
    }

    fn sample(&mut self, theta_deg: f64) -> Result<SupportSample> {
        self.samples += 1;
        sample_support_with(self.polytope, theta_deg, self.plane, &self.tol)
    }

    fn lp_calls(&self) -> u64 {
        self.samples * LP_CALLS_PER_SAMPLE
    }
}

/// Locates the first junction after `lb_deg`.
///
/// Requires the sample at `lb_deg` to be `search_vertex`. Returns the right
/// end of the final bracket, which lies at most `epsilon_deg` past the
/// junction, and the vertex supported there.
pub fn bin_search(
    p: &HPolytope,
    plane: PlaneSpec,
    lb_deg: f64,
    ub_deg: f64,
    search_vertex: Point2,
    params: &EnumerationParams,
) -> Result<(f64, Point2)> {
    params.validate()?;
    let mut sampler = Sampler::new(p, plane);
    bin_search_inner(&mut sampler, lb_deg, ub_deg, search_vertex, params)
}

#[allow(clippy::neg_cmp_op_on_partial_ord)]
fn bin_search_inner(
    sampler: &mut Sampler<'_>,
    lb_deg: f64,
    ub_deg: f64,
    search_vertex: Point2,
    params: &EnumerationParams,
) -> Result<(f64, Point2)> {
    if !(lb_deg < ub_deg) {
        return Err(Error::InvalidInput(format!("search interval [{lb_deg}, {ub_deg}] is empty")));
    }
    let (mut lb, mut ub) = (lb_deg, ub_deg);
    let mut next: Option<Point2> = None;
    // invariant: sample(lb) == search_vertex, and sample(ub) differs once `next` is set
    while ub - lb > params.epsilon_deg {
        let mid = 0.5 * (lb + ub);
        sampler.iters += 1;
        let px = sampler.sample(mid)?.point2d;
        if params.same_point(px, search_vertex) {
            lb = mid;
        } else {
            ub = mid;
            next = Some(px);
        }
    }
    match next {
        Some(px) => Ok((ub, px)),
        None => {
            let px = sampler.sample(ub)?.point2d;
            if params.same_point(px, search_vertex) {
                Err(Error::NoJunctionFound { lb_deg, ub_deg })
            } else {
                Ok((ub, px))
            }
        }
    }
}

/// Vertices strictly between `s` and `q` (CCW), found by sampling along
/// chord normals. Angles are unwrapped into `(lb, lb + 360)`.
fn vertices_between(
    sampler: &mut Sampler<'_>,
    s: Point2,
    q: Point2,
    lb: f64,
    params: &EnumerationParams,
    out: &mut Vec<DiscoveredVertex>,
) -> Result<()> {
    let (ex, ey) = (q[0] - s[0], q[1] - s[1]);
    if params.same_point(s, q) {
        return Ok(());
    }
    let mut phi = ey.atan2(ex).to_degrees() - 90.0;
    phi = lb + (phi - lb).rem_euclid(360.0);
    if phi <= lb {
        phi += 360.0;
    }
    let sample = sampler.sample(phi)?;
    let r = sample.point2d;
    if params.same_point(r, q) || params.same_point(r, s) {
        return Ok(());
    }
    // r must lie strictly beyond the chord, i.e. to its right
    let beyond = ex * (r[1] - s[1]) - ey * (r[0] - s[0]);
    let scale = 1.0 + ex.hypot(ey) * (1.0 + r[0].hypot(r[1]));
    if beyond >= -params.point_tol * scale {
        return Ok(());
    }
    if out.len() >= params.max_vertices {
        return Err(Error::VertexBudgetExceeded { max: params.max_vertices });
    }
    vertices_between(sampler, s, r, lb, params, out)?;
    out.push(DiscoveredVertex { theta_deg: phi, point: r });
    vertices_between(sampler, r, q, lb, params, out)
}

/// Enumerates the vertices of the projection of `p` onto `plane`, CCW from
/// the vertex supported at 0°.
pub fn enumerate_vertices(
    p: &HPolytope,
    plane: PlaneSpec,
    params: &EnumerationParams,
) -> Result<EnumerationReport> {
    params.validate()?;
    let start = Instant::now();
    let mut sampler = Sampler::new(p, plane);

    let first = sampler.sample(0.0)?.point2d;
    let mut vertices = vec![DiscoveredVertex { theta_deg: 0.0, point: first }];
    let mut lb = 0.0;
    let mut current = first;
    loop {
        let (critical, next) = match bin_search_inner(&mut sampler, lb, 360.0, current, params) {
            Ok(found) => found,
            // the whole circle supports one point
            Err(Error::NoJunctionFound { .. }) if vertices.len() == 1 => break,
            Err(e) => return Err(e),
        };
        if params.verify_edges {
            let mut between = Vec::new();
            vertices_between(&mut sampler, current, next, lb, params, &mut between)?;
            for v in between {
                if vertices.len() >= params.max_vertices {
                    return Err(Error::VertexBudgetExceeded { max: params.max_vertices });
                }
                vertices.push(v);
            }
        }
        if params.same_point(next, first) {
            break;
        }
        if vertices.len() >= params.max_vertices {
            return Err(Error::VertexBudgetExceeded { max: params.max_vertices });
        }
        vertices.push(DiscoveredVertex { theta_deg: critical, point: next });
        lb = critical;
        current = next;
    }

    Ok(EnumerationReport {
        result: ProjectedVertexList { vertices, plane },
        params: *params,
        lp_calls: sampler.lp_calls(),
        binsearch_iters: sampler.iters,
        wall_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}
