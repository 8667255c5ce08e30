//! The dense simplex solver on its own.
//!
//! Run with `cargo run --example lp_solve`.

use polyproj::{lexicographic_solve, lp_solve, LpResult};

fn show(label: &str, r: &LpResult) {
    match r {
        LpResult::Optimal { value, point } => println!("{label}: optimal {value} at {point:?}"),
        other => println!("{label}: {:?}", other.status()),
    }
}

fn main() -> polyproj::Result<()> {
    // max x + y  s.t.  x <= 1, y <= 1, x + y <= 1.5, with x, y free
    let a = vec![vec![1.0, 0.0], vec![0.0, 1.0], vec![1.0, 1.0]];
    let b = vec![1.0, 1.0, 1.5];
    show("max x+y", &lp_solve(&a, &b, &[1.0, 1.0])?);

    // the optimal face is the edge from (0.5, 1) to (1, 0.5); pick its larger-x end
    show("max x+y, then x", &lexicographic_solve(&a, &b, &[1.0, 1.0], &[1.0, 0.0])?);

    // nothing bounds x from below
    show("min x", &lp_solve(&a, &b, &[-1.0, 0.0])?);

    // x <= -1 and x >= 1
    let empty = vec![vec![1.0, 0.0], vec![-1.0, 0.0]];
    show("empty", &lp_solve(&empty, &[-1.0, -1.0], &[1.0, 0.0])?);
    Ok(())
}
