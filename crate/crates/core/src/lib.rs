//! Vertex enumeration of two-dimensional projections of H-polytopes.
//!
//! The polytope `{x : Ax <= b}` is never projected explicitly. Instead its
//! support function is sampled along directions lying in the chosen
//! coordinate plane, and an angular bisection finds each angle where the
//! supporting vertex changes. Vertices come out in counter-clockwise order.
//!
//! ```
//! use polyproj::{enumerate_vertices, make_permutahedron, EnumerationParams, PlaneSpec};
//!
//! let perm = make_permutahedron(5).unwrap();
//! let plane = PlaneSpec::new(1, 2, 5).unwrap();
//! let report = enumerate_vertices(&perm, plane, &EnumerationParams::default()).unwrap();
//! assert_eq!(report.result.len(), 6);
//! ```

pub mod cli;
pub mod enumerator;
pub mod error;
pub mod io;
pub mod lp;
pub mod oracle;
pub mod plot;
pub mod polytope;
pub mod support;

pub use enumerator::{
    bin_search, enumerate_vertices, lp_call_budget, DiscoveredVertex, EnumerationParams, EnumerationReport,
    ProjectedVertexList,
};
pub use error::{Error, Result};
pub use io::{parse_ine, write_ine, write_vertices, VertexFormat};
pub use lp::{lexicographic_solve, lp_solve, LpResult, LpStatus, LpTolerances};
pub use oracle::{brute_force_vertices, convex_hull_2d, oracle_projection_vertices, VertexCloud};
pub use polytope::{make_cross_polytope, make_hypercube, make_permutahedron, make_random_bounded, HPolytope};
pub use support::{direction_from_angle, sample_support, PlaneSpec, Point2, SupportSample};
