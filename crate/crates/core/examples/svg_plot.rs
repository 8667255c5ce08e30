//! Render a projection to SVG alongside its support curve.
//!
//! Run with `cargo run --example svg_plot -- out_dir`.

use std::path::PathBuf;

use polyproj::plot::{curve_csv, polygon_svg, support_curve};
use polyproj::{enumerate_vertices, make_random_bounded, EnumerationParams, PlaneSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    let p = make_random_bounded(6, 40, 7)?;
    let plane = PlaneSpec::new(3, 5, 6)?;

    let report = enumerate_vertices(&p, plane, &EnumerationParams::default())?;
    let svg = dir.join("projection.svg");
    std::fs::write(&svg, polygon_svg(&report.result.points()))?;

    let csv = dir.join("support.csv");
    std::fs::write(&csv, curve_csv(&support_curve(&p, plane, 360)?))?;

    println!("{} vertices -> {}", report.result.len(), svg.display());
    println!("support curve -> {}", csv.display());
    Ok(())
}
