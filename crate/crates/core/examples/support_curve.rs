//! Sample the support function of a projection and show how the supporting
//! point changes with the direction.
//!
//! Run with `cargo run --example support_curve`.

use polyproj::{make_cross_polytope, sample_support, PlaneSpec};

fn main() -> polyproj::Result<()> {
    let cross = make_cross_polytope(4)?;
    let plane = PlaneSpec::new(2, 4, 4)?;

    println!("theta_deg,rho,x,y");
    for k in 0..24 {
        let theta = k as f64 * 15.0;
        let s = sample_support(&cross, theta, plane)?;
        println!("{theta},{:.6},{},{}", s.rho, s.point2d[0], s.point2d[1]);
    }
    Ok(())
}
