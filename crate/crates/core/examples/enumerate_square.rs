//! Enumerate the projection of a small polytope and print it as CSV.
//!
//! Run with `cargo run --example enumerate_square`.

use polyproj::{
    enumerate_vertices, make_hypercube, write_vertices, EnumerationParams, PlaneSpec, VertexFormat,
};

fn main() -> polyproj::Result<()> {
    let cube = make_hypercube(3, 1.0)?;
    let plane = PlaneSpec::new(1, 3, cube.dim())?;
    let report = enumerate_vertices(&cube, plane, &EnumerationParams::default())?;

    print!("{}", write_vertices(&report, VertexFormat::Csv));
    eprintln!("{} vertices, {} LP solves", report.result.len(), report.lp_calls);
    Ok(())
}
