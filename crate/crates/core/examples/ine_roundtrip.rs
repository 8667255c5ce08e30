//! Read a polytope in `.ine` format, enumerate it, and write it back out.
//!
//! Run with `cargo run --example ine_roundtrip [-- path/to/file.ine]`.

use polyproj::{enumerate_vertices, parse_ine, write_ine, EnumerationParams, PlaneSpec};

const SEGMENT: &str = "\
* a segment in R^3, with x3 pinned to zero
segment
H-representation
linearity 1 3
begin
5 4 rational
1 1 0 0
3 -1 0 0
1/2 0 -1 0
1 0 0 -1
1 0 0 1
end
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => SEGMENT.to_string(),
    };
    let p = parse_ine(&text)?;
    println!("read {} constraints in dimension {}", p.num_constraints(), p.dim());

    let report = enumerate_vertices(&p, PlaneSpec::new(1, 2, p.dim())?, &EnumerationParams::default())?;
    for v in &report.result.vertices {
        println!("  theta={:>8.3}  ({}, {})", v.theta_deg, v.point[0], v.point[1]);
    }

    let written = write_ine(&p, "roundtrip");
    let again = parse_ine(&written)?;
    assert_eq!(again, p, "write/parse must be lossless");
    print!("{written}");
    Ok(())
}
