//! Multiplicities of irreducibles in the N-th tensor power of the spinor.
//!
//! Prints the closed-form multiplicities for `so(5)` and `N = 6`, checks them
//! against a direct tensor-product decomposition, and shows how the
//! large-N approximation closes in on the exact values.

use spinorpow::characters::dim_weyl;
use spinorpow::multiplicities::{
    multiplicity_asymptotic, multiplicity_exact, offsets, tensor_decompose_oracle,
};
use spinorpow::rootsys::{lambda_from_s, SVector};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let (n, power) = (2, 6);
    let oracle = tensor_decompose_oracle(n, power)?;
    println!("s        lambda     mult   dim    oracle");
    for s in offsets(n, power) {
        let lambda = lambda_from_s(power, &s)?;
        let m = multiplicity_exact(power, &s)?;
        println!(
            "{:<8} {:<10} {:<6} {:<6} {}",
            format!("{:?}", s.as_slice()),
            format!("{:?}", lambda.coords()),
            m,
            dim_weyl(&lambda)?,
            oracle.get(&s)
        );
        assert_eq!(m, oracle.get(&s));
    }
    println!("total dimension {} = 2^{}", oracle.total_dimension(), n as u64 * power);

    let s = SVector::new(vec![0, 1])?;
    println!("\nexact / asymptotic for s = {:?}", s.as_slice());
    for power in [16u64, 64, 256, 1024] {
        let exact = multiplicity_exact(power, &s)?;
        let approx = multiplicity_asymptotic(power, &s)?;
        let ratio = exact.to_string().parse::<f64>()? / approx;
        println!("N = {power:<5} ratio = {ratio:.6}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example failed");
}
