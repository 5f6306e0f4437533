//! Characters of `so(2n+1)` and of the `sl_n` subalgebra spanned by the
//! simple roots `α_1, …, α_{n-1}`.
//!
//! `B_n` characters are evaluated as ratios of Weyl alternants
//! `det[y_j^{a_i} - y_j^{-a_i}] / det[y_j^{ρ_i} - y_j^{-ρ_i}]` with
//! `a = λ + ρ`. There is an exact rational path and a log-space floating path
//! for the large exponents of the critical-drift regime. The Freudenthal
//! recursion in [`freudenthal`] is an independent route to the same numbers.

mod an;
mod freudenthal;

pub use an::{
    character_an, character_an_at_tau, character_an_expanded, dim_an, ln_character_an,
    AnHighestWeight,
};
pub use freudenthal::{freudenthal_weights, WeightMultiplicityMap};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{det_exact, log_det, rat_pow, BigRat, LaurentPoly, TorusPoint};
use crate::rootsys::{rho, RescaledWeight};

/// `Π_i (y_i + y_i^{-1})`: weights at the vertices of the cube `{±1}^n`.
pub fn spinor_character(n: usize) -> LaurentPoly {
    let factor = |i: usize| {
        let mut up = vec![0; n];
        let mut down = vec![0; n];
        up[i] = 1;
        down[i] = -1;
        LaurentPoly::from_terms(n, [(up, BigInt::one()), (down, BigInt::one())])
            .expect("consistent lengths")
    };
    (0..n).fold(LaurentPoly::one(n), |acc, i| acc.mul(&factor(i)).expect("same rank"))
}

fn require_dominant(lambda: &RescaledWeight) -> Result<()> {
    if !lambda.in_weight_lattice() {
        Err(Error::MixedParity(lambda.coords().to_vec()))
    } else if !lambda.is_dominant() {
        Err(Error::NonDominant(lambda.coords().to_vec()))
    } else {
        Ok(())
    }
}

/// Weyl dimension formula over the positive roots `e_i ± e_j`, `e_i`.
pub fn dim_weyl(lambda: &RescaledWeight) -> Result<BigUint> {
    require_dominant(lambda)?;
    let a = lambda.shifted();
    let r = rho(lambda.rank()).into_coords();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..a.len() {
        num *= a[i] as u64;
        den *= r[i] as u64;
        for j in i + 1..a.len() {
            num *= ((a[i] - a[j]) * (a[i] + a[j])) as u64;
            den *= ((r[i] - r[j]) * (r[i] + r[j])) as u64;
        }
    }
    let (q, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero(), "Weyl dimension must be an integer");
    Ok(q)
}

fn alternant_exact(exponents: &[i64], pt: &TorusPoint) -> BigRat {
    let m = exponents
        .iter()
        .map(|&e| pt.coords().iter().map(|y| rat_pow(y, e) - rat_pow(y, -e)).collect())
        .collect();
    det_exact(m)
}

/// Exact `χ_λ(y) = Σ_μ m^λ_μ Π y_i^{μ_i}` via the alternant ratio.
///
/// Fails with [`Error::SingularPoint`] when the denominator alternant vanishes
/// (some `y_i = 1` or `y_i = y_j^{±1}`); use [`dim_weyl`] at `y = 1`.
pub fn character_bn(lambda: &RescaledWeight, pt: &TorusPoint) -> Result<BigRat> {
    require_dominant(lambda)?;
    let n = lambda.rank();
    if pt.rank() != n {
        return Err(Error::LengthMismatch { expected: n, got: pt.rank() });
    }
    let den = alternant_exact(rho(n).coords(), pt);
    if den.is_zero() {
        return Err(Error::SingularPoint(format!(
            "B_{n} Weyl denominator vanishes at y = ({pt})"
        )));
    }
    Ok(alternant_exact(&lambda.shifted(), pt) / den)
}

/// `(sign, ln|det[e^{a_i t_j} - e^{-a_i t_j}]|)`, with each row rescaled by
/// `e^{-a_i U}`, `U = max |t_j|`, so every entry lies in `[-1, 1]`.
fn alternant_log(exponents: &[i64], t: &[f64]) -> (f64, f64) {
    let big_u = t.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let m = exponents
        .iter()
        .map(|&e| {
            let e = e as f64;
            t.iter()
                .map(|&tj| (e * (tj - big_u)).exp() - (-e * (tj + big_u)).exp())
                .collect()
        })
        .collect();
    let (sign, ln_abs) = log_det(m);
    let shift: f64 = exponents.iter().map(|&e| e as f64 * big_u).sum();
    (sign, ln_abs + shift)
}

/// `ln χ_λ(e^t)` in floating point, stable for large `λ` and `t`.
pub fn ln_character_bn(lambda: &RescaledWeight, t: &[f64]) -> Result<f64> {
    require_dominant(lambda)?;
    let n = lambda.rank();
    if t.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: t.len() });
    }
    let (ds, dl) = alternant_log(rho(n).coords(), t);
    if ds == 0.0 || !dl.is_finite() {
        return Err(Error::SingularPoint(format!(
            "B_{n} Weyl denominator vanishes at t = {t:?}"
        )));
    }
    let (ns, nl) = alternant_log(&lambda.shifted(), t);
    if ns * ds <= 0.0 {
        return Err(Error::Numerical(format!(
            "alternant ratio lost its sign at t = {t:?}; the point is too close to a wall"
        )));
    }
    Ok(nl - dl)
}

/// `ln Π_i (y_i + y_i^{-1})` at `y = e^t`.
pub fn ln_spinor_character(t: &[f64]) -> f64 {
    t.iter()
        .map(|&x| {
            let a = x.abs();
            a + (-2.0 * a).exp().ln_1p()
        })
        .sum()
}

/// Exact spinor character value `Π (y_i + y_i^{-1})`.
pub fn spinor_value(pt: &TorusPoint) -> BigRat {
    pt.coords()
        .iter()
        .map(|y| y + y.recip())
        .fold(BigRat::one(), |acc, v| acc * v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> RescaledWeight {
        RescaledWeight::new(c.to_vec()).unwrap()
    }

    fn r(p: i64, q: i64) -> BigRat {
        BigRat::new(p.into(), q.into())
    }

    #[test]
    fn spinor_character_shape() {
        let s1 = spinor_character(1);
        assert_eq!(s1.len(), 2);
        assert_eq!(s1.coeff(&[1]), BigInt::one());
        assert_eq!(s1.coeff(&[-1]), BigInt::one());
        let s2 = spinor_character(2);
        assert_eq!(s2.eval(&TorusPoint::ones(2)).unwrap(), r(4, 1));
        let s3 = spinor_character(3);
        assert_eq!(s3.len(), 8);
        assert!(s3.terms().all(|(e, c)| c.is_one() && e.iter().all(|x| x.abs() == 1)));
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dim_weyl(&w(&[0, 0, 0])).unwrap(), BigUint::one());
        for n in 1..=6 {
            assert_eq!(dim_weyl(&RescaledWeight::spinor(n)).unwrap(), BigUint::from(1u64 << n));
        }
        assert_eq!(dim_weyl(&w(&[2, 0])).unwrap(), BigUint::from(5u32));
        // adjoint of so_5 and so_7
        assert_eq!(dim_weyl(&w(&[2, 2])).unwrap(), BigUint::from(10u32));
        assert_eq!(dim_weyl(&w(&[2, 2, 0])).unwrap(), BigUint::from(21u32));
        assert!(dim_weyl(&w(&[0, 2])).is_err());
    }

    #[test]
    fn character_bn_examples() {
        let pt2 = TorusPoint::from_ratios(&[(2, 1)]).unwrap();
        assert_eq!(character_bn(&w(&[0]), &pt2).unwrap(), r(1, 1));
        assert_eq!(character_bn(&w(&[2]), &pt2).unwrap(), r(21, 4));
        let pt = TorusPoint::from_ratios(&[(2, 1), (3, 1)]).unwrap();
        assert_eq!(character_bn(&w(&[1, 1]), &pt).unwrap(), r(25, 3));
        assert_eq!(character_bn(&w(&[0, 0]), &pt).unwrap(), r(1, 1));
    }

    #[test]
    fn singular_points_are_rejected() {
        let lam = w(&[1, 1]);
        for bad in [[(1, 1), (3, 1)], [(2, 1), (2, 1)], [(2, 1), (1, 2)]] {
            let pt = TorusPoint::from_ratios(&bad).unwrap();
            assert!(matches!(character_bn(&lam, &pt), Err(Error::SingularPoint(_))));
        }
        assert!(matches!(
            ln_character_bn(&lam, &[0.5, 0.5]),
            Err(Error::SingularPoint(_)) | Err(Error::Numerical(_))
        ));
    }

    #[test]
    fn log_space_matches_exact() {
        let pt = TorusPoint::from_ratios(&[(7, 2), (5, 3), (1, 4)]).unwrap();
        let t = pt.log_coords();
        for lam in [[1, 1, 1], [4, 2, 0], [9, 5, 3], [6, 6, 6]] {
            let lam = w(&lam);
            let exact = character_bn(&lam, &pt).unwrap();
            let ln = ln_character_bn(&lam, &t).unwrap();
            let rel = (ln - crate::exactalg::rat_ln(&exact)).abs();
            assert!(rel < 1e-12, "{lam:?}: {rel}");
        }
        let s = spinor_value(&pt);
        assert!((ln_spinor_character(&t) - crate::exactalg::rat_ln(&s)).abs() < 1e-13);
    }

    #[test]
    fn log_space_handles_huge_exponents() {
        let t = [0.5 * (512f64).ln(), 0.5 * (256f64).ln()];
        let v = ln_character_bn(&w(&[512, 510]), &t).unwrap();
        // leading monomial y^λ dominates
        let lead = 512.0 * t[0] + 510.0 * t[1];
        assert!(v > lead && v < lead + 1.0);
    }
}
