//! SVG rendering of a projected polygon and `(θ, ρ)` support curves.

use std::fmt::Write as _;

use crate::error::Result;
use crate::lp::{lp_solve, LpResult};
use crate::polytope::HPolytope;
use crate::support::{direction_from_angle, PlaneSpec, Point2};
use crate::Error;

/// Closed CCW path through `vertices` with a marker on each vertex.
///
/// The y axis is flipped so the picture has the usual mathematical
/// orientation; the view box is the bounding box plus a 5% margin.
pub fn polygon_svg(vertices: &[Point2]) -> String {
    let (mut xmin, mut xmax) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut ymin, mut ymax) = (f64::INFINITY, f64::NEG_INFINITY);
    for p in vertices {
        xmin = xmin.min(p[0]);
        xmax = xmax.max(p[0]);
        ymin = ymin.min(-p[1]);
        ymax = ymax.max(-p[1]);
    }
    if vertices.is_empty() {
        (xmin, xmax, ymin, ymax) = (0.0, 0.0, 0.0, 0.0);
    }
    let span = (xmax - xmin).max(ymax - ymin);
    let span = if span > 0.0 { span } else { 1.0 };
    let (mx, my) = (0.05 * span.max(xmax - xmin), 0.05 * span.max(ymax - ymin));
    let (w, h) = (xmax - xmin + 2.0 * mx, ymax - ymin + 2.0 * my);
    let r = 0.01 * span;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        xmin - mx,
        ymin - my,
        w,
        h
    );
    let mut d = String::new();
    for (i, p) in vertices.iter().enumerate() {
        let _ = write!(d, "{}{} {} ", if i == 0 { "M" } else { "L" }, p[0], -p[1]);
    }
    if !vertices.is_empty() {
        d.push('Z');
    }
    let _ = writeln!(
        s,
        r#"  <path d="{}" fill="none" stroke="black" stroke-width="{}"/>"#,
        d.trim_end(),
        0.5 * r
    );
    for p in vertices {
        let _ = writeln!(s, r#"  <circle cx="{}" cy="{}" r="{}" fill="red"/>"#, p[0], -p[1], r);
    }
    s.push_str("</svg>\n");
    s
}

/// `samples` evenly spaced support values `(θ, ρ(θ))` over `[0, 360)`.
pub fn support_curve(p: &HPolytope, plane: PlaneSpec, samples: usize) -> Result<Vec<(f64, f64)>> {
    (0..samples)
        .map(|k| {
            let theta = 360.0 * k as f64 / samples as f64;
            let v = direction_from_angle(theta, plane);
            match lp_solve(p.a(), p.b(), &v)? {
                LpResult::Optimal { value, .. } => Ok((theta, value)),
                LpResult::Unbounded => Err(Error::ProjectionUnbounded { theta_deg: theta }),
                LpResult::Infeasible => Err(Error::EmptyPolytope),
            }
        })
        .collect()
}

pub fn curve_csv(curve: &[(f64, f64)]) -> String {
    let mut s = String::from("theta_deg,rho\n");
    for (t, r) in curve {
        let _ = writeln!(s, "{t:.16e},{r:.16e}");
    }
    s
}
