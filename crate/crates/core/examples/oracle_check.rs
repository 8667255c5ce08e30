//! Cross-check the enumerator against brute-force basis enumeration on
//! random polytopes.
//!
//! Run with `cargo run --release --example oracle_check -- 50`.

use polyproj::cli::check_polytope;
use polyproj::{make_random_bounded, EnumerationParams, PlaneSpec};

fn main() -> polyproj::Result<()> {
    let cases: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(20);
    let params = EnumerationParams::default();
    let mut failures = 0;

    for seed in 0..cases {
        let n = 2 + (seed % 4) as usize;
        let m = n + 4 + (seed % 7) as usize;
        let p = make_random_bounded(n, m, seed)?;
        let outcome = check_polytope(&p, PlaneSpec::new(1, n, n)?, &params)?;
        let status = if outcome.matched { "ok" } else { "MISMATCH" };
        if !outcome.matched {
            failures += 1;
        }
        println!(
            "seed={seed:<4} n={n} m={m:<3} V={:<3} oracle={:<3} max_dist={:.2e} {status}",
            outcome.report.result.len(),
            outcome.oracle.len(),
            outcome.max_distance
        );
    }
    println!("{} of {cases} matched", cases - failures);
    Ok(())
}
