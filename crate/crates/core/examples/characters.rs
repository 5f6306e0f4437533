//! Characters of `so(2n+1)` and `sl_n` irreducibles at rational torus points.

use spinorpow::characters::{
    character_an, character_an_expanded, character_bn, dim_an, dim_weyl, freudenthal_weights,
    spinor_character, AnHighestWeight,
};
use spinorpow::exactalg::TorusPoint;
use spinorpow::rootsys::RescaledWeight;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let y = TorusPoint::from_ratios(&[(3, 1), (1, 2)])?;

    let spinor = spinor_character(2);
    println!("spinor character of so(5): {} monomials", spinor.len());
    println!("  at y = ({y}): {}", spinor.eval(&y)?);

    // The adjoint of so(5), highest weight (1, 1) in the usual coordinates.
    let adjoint = RescaledWeight::new(vec![2, 2])?;
    let weights = freudenthal_weights(&adjoint)?;
    println!("adjoint: dim {} with {} distinct weights", dim_weyl(&adjoint)?, weights.len());
    let by_ratio = character_bn(&adjoint, &y)?;
    let by_weights = weights.to_poly().eval(&y)?;
    println!("  Weyl formula {by_ratio}, weight sum {by_weights}");
    assert_eq!(by_ratio, by_weights);

    let gamma = AnHighestWeight::from_integers(&[2, 0, -2])?;
    let z = TorusPoint::from_ratios(&[(2, 1), (3, 1), (5, 1)])?;
    let bialternant = character_an(&gamma, &z)?;
    let branching = character_an_expanded(&gamma, &z)?;
    println!("sl_3 weight {gamma}: dim {}", dim_an(&gamma));
    println!("  at ({z}): {bialternant} (branching rule: {branching})");
    assert_eq!(bialternant, branching);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example failed");
}
