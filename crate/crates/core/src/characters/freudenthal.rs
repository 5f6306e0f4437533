//! Weight multiplicities of `B_n` irreducibles by the Freudenthal recursion.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::LaurentPoly;
use crate::rootsys::{dominant_representative, rho, weyl_elements, RescaledWeight, WeylKind};

/// The weight diagram of `L^λ` with multiplicities `dim V_μ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMultiplicityMap {
    highest: RescaledWeight,
    weights: BTreeMap<Vec<i64>, BigUint>,
}

impl WeightMultiplicityMap {
    pub fn highest(&self) -> &RescaledWeight {
        &self.highest
    }

    pub fn get(&self, mu: &[i64]) -> BigUint {
        self.weights.get(mu).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, &BigUint)> {
        self.weights.iter()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// `Σ_μ dim V_μ`, which equals `dim L^λ`.
    pub fn total(&self) -> BigUint {
        self.weights.values().sum()
    }

    /// The character as a Laurent polynomial `Σ_μ m_μ y^μ`.
    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.highest.rank(),
            self.weights.iter().map(|(mu, m)| (mu.clone(), BigInt::from(m.clone()))),
        )
        .expect("consistent rank")
    }
}

fn positive_roots(n: usize) -> Vec<Vec<i64>> {
    let mut roots = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut minus = vec![0; n];
            minus[i] = 2;
            minus[j] = -2;
            roots.push(minus);
            let mut plus = vec![0; n];
            plus[i] = 2;
            plus[j] = 2;
            roots.push(plus);
        }
        let mut short = vec![0; n];
        short[i] = 2;
        roots.push(short);
    }
    roots
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dominant `μ ≤ λ`: same parity as `λ`, and `λ - μ` a non-negative
/// combination of simple roots (all partial sums of `λ - μ` non-negative).
fn dominant_weights_below(lambda: &[i64]) -> Vec<Vec<i64>> {
    fn rec(lambda: &[i64], prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let i = prefix.len();
        if i == lambda.len() {
            out.push(prefix.clone());
            return;
        }
        let upper = prefix.last().copied().unwrap_or(lambda[0]);
        let mut c = upper;
        while c >= 0 {
            if (lambda[i] - c).rem_euclid(2) == 0 {
                let partial: i64 = lambda[..=i].iter().sum::<i64>() - prefix.iter().sum::<i64>() - c;
                if partial >= 0 {
                    prefix.push(c);
                    rec(lambda, prefix, out);
                    prefix.pop();
                }
            }
            c -= 1;
        }
    }
    let mut out = Vec::new();
    rec(lambda, &mut Vec::new(), &mut out);
    out
}

/// Height of `λ - μ` in the simple-root basis.
fn depth(lambda: &[i64], mu: &[i64]) -> i64 {
    let mut partial = 0;
    let mut total = 0;
    for (l, m) in lambda.iter().zip(mu) {
        partial += (l - m) / 2;
        total += partial;
    }
    total
}

/// Full weight diagram of `L^λ` with exact multiplicities.
///
/// Multiplicities of dominant weights come from the Freudenthal recursion,
/// processed in order of increasing depth below `λ`; the rest of the diagram
/// is filled in by Weyl-group orbits.
pub fn freudenthal_weights(lambda: &RescaledWeight) -> Result<WeightMultiplicityMap> {
    if !lambda.in_weight_lattice() {
        return Err(Error::MixedParity(lambda.coords().to_vec()));
    }
    if !lambda.is_dominant() {
        return Err(Error::NonDominant(lambda.coords().to_vec()));
    }
    let n = lambda.rank();
    let lam = lambda.coords();
    let rho = rho(n).into_coords();
    let roots = positive_roots(n);
    let shifted: Vec<i64> = lam.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let norm_top = dot(&shifted, &shifted);
    let bound = lam[0];

    let mut dominant = dominant_weights_below(lam);
    dominant.sort_by_key(|mu| depth(lam, mu));

    let mut mult: HashMap<Vec<i64>, BigInt> = HashMap::new();
    for mu in dominant {
        if mu == lam {
            mult.insert(mu, BigInt::one());
            continue;
        }
        let mut acc = BigInt::zero();
        for alpha in &roots {
            let mut k = 1;
            loop {
                let nu: Vec<i64> = mu.iter().zip(alpha).map(|(m, a)| m + k * a).collect();
                if nu.iter().any(|c| c.abs() > bound) {
                    break;
                }
                if let Some(m) = mult.get(&dominant_representative(&nu)) {
                    acc += m * dot(&nu, alpha);
                }
                k += 1;
            }
        }
        let mu_shift: Vec<i64> = mu.iter().zip(&rho).map(|(a, b)| a + b).collect();
        let gap = norm_top - dot(&mu_shift, &mu_shift);
        debug_assert!(gap > 0);
        let (q, r) = (acc * BigInt::from(2)).div_rem(&BigInt::from(gap));
        debug_assert!(r.is_zero(), "Freudenthal quotient must be exact");
        if q.is_positive() {
            mult.insert(mu, q);
        }
    }

    let group: Vec<_> = weyl_elements(WeylKind::B, n).collect();
    let mut weights = BTreeMap::new();
    for (mu, m) in mult {
        let orbit: BTreeSet<Vec<i64>> = group.iter().map(|w| w.act(&mu)).collect();
        let m = m.to_biguint().expect("positive");
        for nu in orbit {
            weights.insert(nu, m.clone());
        }
    }
    Ok(WeightMultiplicityMap { highest: lambda.clone(), weights })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::dim_weyl;

    fn w(c: &[i64]) -> RescaledWeight {
        RescaledWeight::new(c.to_vec()).unwrap()
    }

    #[test]
    fn so3_vector() {
        let m = freudenthal_weights(&w(&[2])).unwrap();
        assert_eq!(m.len(), 3);
        for mu in [[2], [0], [-2]] {
            assert_eq!(m.get(&mu), BigUint::one());
        }
    }

    #[test]
    fn trivial() {
        let m = freudenthal_weights(&w(&[0, 0, 0])).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m.get(&[0, 0, 0]), BigUint::one());
    }

    #[test]
    fn so5_vector() {
        let m = freudenthal_weights(&w(&[2, 0])).unwrap();
        assert_eq!(m.len(), 5);
        for mu in [[2, 0], [-2, 0], [0, 2], [0, -2], [0, 0]] {
            assert_eq!(m.get(&mu), BigUint::one());
        }
    }

    #[test]
    fn so5_adjoint_has_zero_weight_of_multiplicity_two() {
        let m = freudenthal_weights(&w(&[2, 2])).unwrap();
        assert_eq!(m.get(&[0, 0]), BigUint::from(2u32));
        assert_eq!(m.total(), BigUint::from(10u32));
    }

    #[test]
    fn totals_match_weyl_dimension() {
        for lam in [[4, 2, 0], [3, 3, 1], [5, 1, 1], [6, 4, 2], [2, 2, 2]] {
            let lam = w(&lam);
            let m = freudenthal_weights(&lam).unwrap();
            assert_eq!(m.total(), dim_weyl(&lam).unwrap(), "{lam:?}");
            assert_eq!(m.get(lam.coords()), BigUint::one());
        }
    }

    #[test]
    fn spinor_weights_are_cube_vertices() {
        let m = freudenthal_weights(&RescaledWeight::spinor(3)).unwrap();
        assert_eq!(m.len(), 8);
        assert!(m.iter().all(|(mu, k)| k.is_one() && mu.iter().all(|c| c.abs() == 1)));
    }

    #[test]
    fn dominant_enumeration_respects_root_order() {
        let d = dominant_weights_below(&[2, 0]);
        assert_eq!(d, vec![vec![2, 0], vec![0, 0]]);
        let d = dominant_weights_below(&[3, 1]);
        assert_eq!(d, vec![vec![3, 1], vec![1, 1]]);
    }
}
