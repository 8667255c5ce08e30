//! Large constraint counts, tiny shadows: the permutahedron of order `d` has
//! `2^d` facet inequalities, but every coordinate-plane projection is a hexagon.
//!
//! Run with `cargo run --release --example permutahedron -- 12`.

use polyproj::{enumerate_vertices, lp_call_budget, make_permutahedron, EnumerationParams, PlaneSpec};

fn main() -> polyproj::Result<()> {
    let max_order: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let params = EnumerationParams::default();

    println!("{:>5} {:>6} {:>3} {:>8} {:>8} {:>10}", "order", "m", "V", "lp", "budget", "ms");
    for d in 3..=max_order {
        let perm = make_permutahedron(d)?;
        let report = enumerate_vertices(&perm, PlaneSpec::new(1, 2, d)?, &params)?;
        let v = report.result.len();
        println!(
            "{d:>5} {:>6} {v:>3} {:>8} {:>8} {:>10.2}",
            perm.num_constraints(),
            report.lp_calls,
            lp_call_budget(v, params.epsilon_deg),
            report.wall_ms
        );
    }
    Ok(())
}
