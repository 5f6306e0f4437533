//! Multiplicities `M_λ^N` of irreducibles in `(L^{ω_n})^{⊗N}`.
//!
//! The closed form is evaluated in the boundary offsets `s` (with
//! `λ_i = N - 2 s_i`):
//!
//! ```text
//! M = 2^{-n(n-1)} Π_k (N+2k-2)! / ((N - s_k + 2n - k)! (s_k + k - 1)!)
//!       · Π_l a_l · Π_{i<j} (a_i² - a_j²),        a = λ + ρ
//! ```
//!
//! [`multiplicity_shifted`] is a literal transcription of the same formula
//! written in `a` with half-integer-looking factorial arguments, kept as a
//! cross-check. [`tensor_decompose_oracle`] computes the decomposition
//! independently by tensoring with the spinor one factor at a time.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::characters::dim_weyl;
use crate::error::{Error, Result};
use crate::exactalg::{factorial, falling_range_product, BigRat};
use crate::rootsys::{
    lambda_from_s, rho, s_from_lambda, sorting_sign, RescaledWeight, SVector,
};

/// `a = λ + ρ`: strictly decreasing positive integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedCoords(Vec<i64>);

impl ShiftedCoords {
    pub fn new(a: Vec<i64>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::ZeroRank);
        }
        let ok = a.windows(2).all(|w| w[0] > w[1]) && *a.last().unwrap() >= 1;
        if !ok {
            return Err(Error::NonDominant(a));
        }
        Ok(Self(a))
    }

    pub fn from_s(power: u64, s: &SVector) -> Result<Self> {
        Self::new(lambda_from_s(power, s)?.shifted())
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Checks `a_i ≡ N + 1 (mod 2)`.
    pub fn check_parity(&self, power: u64) -> Result<()> {
        let want = ((power + 1) % 2) as i64;
        if self.0.iter().all(|a| a.rem_euclid(2) == want) {
            Ok(())
        } else {
            Err(Error::Parity { weight: self.0.clone(), power })
        }
    }
}

fn validate(power: u64, s: &SVector) -> Result<Vec<i64>> {
    Ok(lambda_from_s(power, s)?.shifted())
}

/// Exact `M_λ^N` for `λ = N - 2s`.
pub fn multiplicity_exact(power: u64, s: &SVector) -> Result<BigUint> {
    let a = validate(power, s)?;
    let n = s.rank() as u64;
    let mut num = BigUint::one();
    let mut den = BigUint::one() << (n * (n - 1)) as usize;
    for (idx, &sk) in s.as_slice().iter().enumerate() {
        let k = idx as u64 + 1;
        let top = power + 2 * (k - 1);
        let bottom = power - sk + 2 * n - k;
        if top >= bottom {
            num *= falling_range_product(bottom + 1, top);
        } else {
            den *= falling_range_product(top + 1, bottom);
        }
        den *= factorial(sk + k - 1);
    }
    for i in 0..a.len() {
        num *= a[i] as u64;
        for j in i + 1..a.len() {
            num *= ((a[i] - a[j]) * (a[i] + a[j])) as u64;
        }
    }
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "multiplicity formula produced a non-integer for s = {s:?}, N = {power}");
    Ok(q)
}

/// Literal evaluation in the shifted coordinates `a`, in exact rationals.
pub fn multiplicity_shifted(power: u64, a: &ShiftedCoords) -> Result<BigRat> {
    a.check_parity(power)?;
    let a = a.coords();
    let n = a.len() as i64;
    let big_n = power as i64;
    let fact = |x: i64| -> Result<BigRat> {
        if x < 0 {
            return Err(Error::NonDominant(a.to_vec()));
        }
        Ok(BigRat::from_integer(factorial(x as u64).into()))
    };
    let mut value = BigRat::one();
    for k in 0..n {
        let ak = a[k as usize];
        let plus = big_n + ak + 2 * n - 1;
        let minus = big_n - ak + 2 * n - 1;
        debug_assert!(plus % 2 == 0 && minus % 2 == 0);
        let pow4 = BigRat::from_integer(BigInt::one() << (2 * k) as usize);
        value *= fact(big_n + 2 * k)? / (pow4 * fact(plus / 2)? * fact(minus / 2)?);
    }
    for i in 0..a.len() {
        value *= BigRat::from_integer(a[i].into());
        for j in i + 1..a.len() {
            value *= BigRat::from_integer((a[i] * a[i] - a[j] * a[j]).into());
        }
    }
    Ok(value)
}

fn ln_factorial_ratio(top: u64, bottom: u64) -> f64 {
    // ln(top! / bottom!)
    if top >= bottom {
        (bottom + 1..=top).map(|k| (k as f64).ln()).sum()
    } else {
        -(top + 1..=bottom).map(|k| (k as f64).ln()).sum::<f64>()
    }
}

/// `ln M_λ^N`, accumulated term by term so large `N` stays accurate.
pub fn ln_multiplicity(power: u64, s: &SVector) -> Result<f64> {
    let a = validate(power, s)?;
    let n = s.rank() as u64;
    let mut acc = -((n * (n - 1)) as f64) * std::f64::consts::LN_2;
    for (idx, &sk) in s.as_slice().iter().enumerate() {
        let k = idx as u64 + 1;
        acc += ln_factorial_ratio(power + 2 * (k - 1), power - sk + 2 * n - k);
        acc -= ln_factorial_ratio(sk + k - 1, 0);
    }
    for i in 0..a.len() {
        acc += (a[i] as f64).ln();
        for j in i + 1..a.len() {
            acc += ((a[i] - a[j]) as f64).ln() + ((a[i] + a[j]) as f64).ln();
        }
    }
    Ok(acc)
}

/// `ln` of the large-`N` approximation
/// `Π_k N^{s_k} / (s_k + k - 1)! · Π_{i<j} (s_j + j - s_i - i)`.
pub fn ln_multiplicity_asymptotic(power: u64, s: &SVector) -> Result<f64> {
    validate(power, s)?;
    let s = s.as_slice();
    let ln_n = (power as f64).ln();
    let mut acc = 0.0;
    for (idx, &sk) in s.iter().enumerate() {
        acc += sk as f64 * ln_n - ln_factorial_ratio(sk + idx as u64, 0);
        for (jdx, &sj) in s.iter().enumerate().skip(idx + 1) {
            acc += ((sj + jdx as u64 - sk - idx as u64) as f64).ln();
        }
    }
    Ok(acc)
}

pub fn multiplicity_asymptotic(power: u64, s: &SVector) -> Result<f64> {
    Ok(ln_multiplicity_asymptotic(power, s)?.exp())
}

/// All `s` with `0 ≤ s_1 ≤ … ≤ s_n ≤ N/2`, in lexicographic order.
pub fn offsets(n: usize, power: u64) -> Vec<SVector> {
    fn rec(n: usize, cap: u64, prefix: &mut Vec<u64>, out: &mut Vec<SVector>) {
        if prefix.len() == n {
            out.push(SVector::new(prefix.clone()).expect("increasing by construction"));
            return;
        }
        let lo = prefix.last().copied().unwrap_or(0);
        for v in lo..=cap {
            prefix.push(v);
            rec(n, cap, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, power / 2, &mut Vec::new(), &mut out);
    }
    out
}

/// The decomposition of `(L^{ω_n})^{⊗N}` keyed by boundary offsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionTable {
    rank: usize,
    power: u64,
    entries: BTreeMap<SVector, BigUint>,
}

impl DecompositionTable {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn power(&self) -> u64 {
        self.power
    }

    pub fn get(&self, s: &SVector) -> BigUint {
        self.entries.get(s).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SVector, &BigUint)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ_λ M_λ · dim L^λ`, which must equal `2^{nN}`.
    pub fn total_dimension(&self) -> BigUint {
        self.entries
            .iter()
            .map(|(s, m)| {
                let lam = lambda_from_s(self.power, s).expect("valid entry");
                m * dim_weyl(&lam).expect("dominant")
            })
            .sum()
    }
}

pub const ORACLE_MAX_RANK: usize = 6;
pub const ORACLE_MAX_POWER: u64 = 48;

/// Iterated Brauer–Klimyk tensoring with the spinor.
///
/// For each component `L^μ` and spinor weight `ε ∈ {±1}^n`, the vector
/// `μ + ε + ρ` is reflected into the dominant chamber. A zero coordinate or a
/// tie in absolute values contributes nothing; otherwise the contribution is
/// `L^{sorted - ρ}` with the sign of the signed permutation.
pub fn tensor_decompose_oracle(n: usize, power: u64) -> Result<DecompositionTable> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if n > ORACLE_MAX_RANK || power > ORACLE_MAX_POWER {
        return Err(Error::ScaleGuard(format!(
            "Brauer-Klimyk oracle limited to n <= {ORACLE_MAX_RANK}, N <= {ORACLE_MAX_POWER}"
        )));
    }
    let rho = rho(n).into_coords();
    let spinor_weights: Vec<Vec<i64>> = (0..1u64 << n)
        .map(|mask| (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect())
        .collect();

    let mut table: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
    table.insert(vec![0; n], BigInt::one());
    for _ in 0..power {
        let mut next: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (mu, m) in &table {
            for eps in &spinor_weights {
                let v: Vec<i64> = (0..n).map(|i| mu[i] + eps[i] + rho[i]).collect();
                if v.iter().any(|&c| c == 0) {
                    continue;
                }
                let abs: Vec<i64> = v.iter().map(|c| c.abs()).collect();
                let mut sorted = abs.clone();
                sorted.sort_unstable_by(|a, b| b.cmp(a));
                if sorted.windows(2).any(|w| w[0] == w[1]) {
                    continue;
                }
                let flips = v.iter().filter(|&&c| c < 0).count();
                let mut sign = sorting_sign(&abs);
                if flips % 2 == 1 {
                    sign = -sign;
                }
                let target: Vec<i64> = sorted.iter().zip(&rho).map(|(a, r)| a - r).collect();
                *next.entry(target).or_default() += m * sign;
            }
        }
        next.retain(|_, m| !m.is_zero());
        table = next;
    }

    let mut entries = BTreeMap::new();
    for (lam, m) in table {
        if !m.is_positive() {
            return Err(Error::Numerical(format!("negative multiplicity {m} at {lam:?}")));
        }
        let s = s_from_lambda(power, &RescaledWeight::new(lam)?)?;
        entries.insert(s, m.to_biguint().expect("positive"));
    }
    Ok(DecompositionTable { rank: n, power, entries })
}
