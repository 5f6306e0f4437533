//! Seeded sampling from the exact character measure.

use spinorpow::exactalg::TorusPoint;
use spinorpow::measure::{EvalPoint, MeasureTable};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let point = TorusPoint::from_ratios(&[(7, 2), (5, 2)])?;
    let table = MeasureTable::build(2, 20, EvalPoint::Exact(point))?;
    let draws = table.sample(42, 50_000);
    let counts = table.frequencies(&draws);

    println!("s         exact      empirical");
    for (row, count) in table.rows().iter().zip(&counts).filter(|(_, c)| **c > 500) {
        println!(
            "{:<9} {:.5}    {:.5}",
            format!("{:?}", row.s.as_slice()),
            row.probability.to_f64(),
            *count as f64 / draws.len() as f64
        );
    }
    println!("total variation: {:.4}", table.total_variation(&draws));
    assert_eq!(draws, table.sample(42, 50_000));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example failed");
}
