//! The character measure at a rational point and the Plancherel measure.
//!
//! Writes both tables as CSV to stdout; the exact probabilities sum to one.

use spinorpow::exactalg::{BigRat, TorusPoint};
use spinorpow::measure::{EvalPoint, MeasureTable, Probability};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let point = TorusPoint::from_ratios(&[(2, 1), (3, 2)])?;
    let table = MeasureTable::build(2, 4, EvalPoint::Exact(point.clone()))?;
    let total = table.total();
    let mut out = std::io::stdout().lock();
    table.to_table().write_csv(&mut out, &[format!("character measure at y = ({point})")])?;
    assert_eq!(total, Probability::Exact(BigRat::from_integer(1.into())));

    let plancherel = MeasureTable::build(2, 4, EvalPoint::Dimension)?;
    plancherel.to_table().write_csv(&mut out, &["Plancherel measure".to_string()])?;

    let mode = plancherel
        .rows()
        .iter()
        .max_by(|a, b| a.probability.to_f64().total_cmp(&b.probability.to_f64()))
        .expect("non-empty support");
    println!("most likely under Plancherel: s = {:?}", mode.s.as_slice());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example failed");
}
