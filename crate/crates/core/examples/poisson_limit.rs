//! The boundary limit law and its rank-one Poisson case.

use spinorpow::limitlaw::{limit_density, limit_normalization, ThetaVector};
use spinorpow::rootsys::SVector;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let theta = ThetaVector::new(vec![2.0])?;
    println!("n = 1, theta = 2: limit vs Poisson");
    let mut factorial = 1.0;
    for s in 0..8u64 {
        if s > 0 {
            factorial *= s as f64;
        }
        let poisson = 2f64.powi(s as i32) * (-2f64).exp() / factorial;
        let p = limit_density(&SVector::new(vec![s])?, &theta)?;
        println!("  s = {s}: {p:.10} {poisson:.10}");
    }

    let theta = ThetaVector::new(vec![1.0, 2.0])?;
    println!("n = 2, theta = (1, 2):");
    for s in [[0, 0], [0, 1], [1, 1], [0, 2], [1, 2]] {
        let p = limit_density(&SVector::new(s.to_vec())?, &theta)?;
        println!("  s = {s:?}: {p:.8}");
    }
    println!("  mass with s_n <= 40: {:.12}", limit_normalization(&theta, 40)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example failed");
}
