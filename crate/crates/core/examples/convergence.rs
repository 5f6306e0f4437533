//! Pre-limit probabilities along the critical drift against the limit law.

use spinorpow::limitlaw::{convergence_csv_table, convergence_table, ThetaVector};
use spinorpow::rootsys::SVector;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let theta = ThetaVector::new(vec![1.0, 2.0])?;
    let s_list = vec![SVector::new(vec![0, 0])?, SVector::new(vec![0, 1])?];
    let records = convergence_table(&theta, &s_list, &[32, 64, 128, 256, 512, 1024])?;
    convergence_csv_table(&records).write_csv(std::io::stdout().lock(), &[])?;
    for pair in records.windows(2).filter(|w| w[0].s == w[1].s) {
        if let (Some(a), Some(b)) = (pair[0].rel_err, pair[1].rel_err) {
            println!("N {:>4} -> {:>4}: error ratio {:.3}", pair[0].power, pair[1].power, b / a);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example failed");
}
