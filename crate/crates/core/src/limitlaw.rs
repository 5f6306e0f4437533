//! The boundary limit of the character measure.
//!
//! Along the critical drift `t_i = ½ ln(N / Θ_i)` with `Θ` fixed, the
//! character measure at `λ = N - 2s` tends to
//!
//! ```text
//! P_s(Θ) = Π_{i<j} (s_j + j - s_i - i) · Π_k Θ_k^{|s|/n} e^{-Θ_k} / (s_k + k - 1)! · χ_γ(e^τ)
//! ```
//!
//! with `γ_i = 2|s|/n - 2 s_i` an `sl_n` highest weight and `τ_i = t_{i+1} - t_i`.
//! For `n = 1` this is the Poisson law with mean `Θ`.

use num_rational::Rational64;
use rayon::prelude::*;

use crate::characters::{character_an_at_tau, ln_character_an, AnHighestWeight};
use crate::error::{Error, Result};
use crate::measure::ln_character_measure;
use crate::multiplicities::offsets;
use crate::output::{fmt_f64, indexed, Table};
use crate::rootsys::SVector;

/// `Θ_i = N e^{-2 t_i}`, all finite and strictly positive.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaVector(Vec<f64>);

impl ThetaVector {
    pub fn new(theta: Vec<f64>) -> Result<Self> {
        if theta.is_empty() {
            return Err(Error::ZeroRank);
        }
        if theta.iter().any(|t| !(t.is_finite() && *t > 0.0)) {
            return Err(Error::InvalidTheta(theta));
        }
        Ok(Self(theta))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

/// `t_i = ½ ln(N / Θ_i)`.
pub fn t_from_theta(power: u64, theta: &ThetaVector) -> Result<Vec<f64>> {
    if power == 0 {
        return Err(Error::Numerical("the critical drift needs N >= 1".into()));
    }
    let ln_n = (power as f64).ln();
    Ok(theta.0.iter().map(|th| 0.5 * (ln_n - th.ln())).collect())
}

/// `Θ_i = N e^{-2 t_i}`.
pub fn theta_from_t(power: u64, t: &[f64]) -> Result<ThetaVector> {
    ThetaVector::new(t.iter().map(|ti| power as f64 * (-2.0 * ti).exp()).collect())
}

/// `γ_i = 2|s|/n - 2 s_i`.
pub fn gamma_from_s(s: &SVector) -> AnHighestWeight {
    let n = s.rank() as i64;
    let total = 2 * s.sum() as i64;
    let gamma = s
        .as_slice()
        .iter()
        .map(|&si| Rational64::new(total, n) - Rational64::from_integer(2 * si as i64))
        .collect();
    AnHighestWeight::new(gamma).expect("s is weakly increasing")
}

/// `τ_i = t_{i+1} - t_i = ½ ln(Θ_i / Θ_{i+1})`; independent of `N`.
pub fn tau_from_theta(theta: &ThetaVector) -> Vec<f64> {
    theta.0.windows(2).map(|w| 0.5 * (w[0] / w[1]).ln()).collect()
}

/// `Π_{i<j} (s_j + j - s_i - i)`, for any integer vector (zero on ties of
/// `s_i + i`).
pub fn boundary_prefactor(s: &[i64]) -> i64 {
    let mut acc = 1;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            acc *= s[j] + j as i64 - s[i] - i as i64;
        }
    }
    acc
}

fn ln_factorial(k: u64) -> f64 {
    (2..=k).map(|i| (i as f64).ln()).sum()
}

/// `ln P_s(Θ)`.
pub fn ln_limit_density(s: &SVector, theta: &ThetaVector) -> Result<f64> {
    let n = s.rank();
    if theta.rank() != n {
        return Err(Error::LengthMismatch { expected: n, got: theta.rank() });
    }
    let signed: Vec<i64> = s.as_slice().iter().map(|&v| v as i64).collect();
    let pre = boundary_prefactor(&signed);
    debug_assert!(pre > 0, "weakly increasing s keeps s_i + i strictly increasing");
    let mean = s.sum() as f64 / n as f64;
    let mut acc = (pre as f64).ln();
    for (k, (&sk, &th)) in s.as_slice().iter().zip(&theta.0).enumerate() {
        acc += mean * th.ln() - th - ln_factorial(sk + k as u64);
    }
    let t: Vec<f64> = theta.0.iter().map(|th| -0.5 * th.ln()).collect();
    acc += ln_character_an(&gamma_from_s(s), &t)?;
    Ok(acc)
}

pub fn limit_density(s: &SVector, theta: &ThetaVector) -> Result<f64> {
    Ok(ln_limit_density(s, theta)?.exp())
}

/// Same density with the `sl_n` character evaluated from `τ` instead of `Θ`.
pub fn limit_density_via_tau(s: &SVector, theta: &ThetaVector) -> Result<f64> {
    let n = s.rank();
    let signed: Vec<i64> = s.as_slice().iter().map(|&v| v as i64).collect();
    let mean = s.sum() as f64 / n as f64;
    let mut value = boundary_prefactor(&signed) as f64;
    for (k, (&sk, &th)) in s.as_slice().iter().zip(&theta.0).enumerate() {
        value *= (mean * th.ln() - th - ln_factorial(sk + k as u64)).exp();
    }
    Ok(value * character_an_at_tau(&gamma_from_s(s), &tau_from_theta(theta))?)
}

/// `Σ_{s_n ≤ s_cap} P_s(Θ)`: a truncated total mass of the limit law.
pub fn limit_normalization(theta: &ThetaVector, s_cap: u64) -> Result<f64> {
    offsets(theta.rank(), 2 * s_cap)
        .par_iter()
        .map(|s| limit_density(s, theta))
        .sum()
}

/// One row of a convergence study.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRecord {
    pub power: u64,
    pub s: SVector,
    pub theta: ThetaVector,
    pub p_exact: f64,
    pub p_limit: f64,
    /// `|p_exact / p_limit - 1|`, absent when the limit vanishes.
    pub rel_err: Option<f64>,
}

/// Pre-limit probability `P^N(λ)` along the critical drift, in log space.
pub fn pre_limit_probability(power: u64, s: &SVector, theta: &ThetaVector) -> Result<f64> {
    let t = t_from_theta(power, theta)?;
    Ok(ln_character_measure(power, s, &t)?.exp())
}

/// Compares `P^N` with the limit for every `(s, N)`. Rows are ordered by `s`
/// as given, then by ascending `N`.
pub fn convergence_table(
    theta: &ThetaVector,
    s_list: &[SVector],
    powers: &[u64],
) -> Result<Vec<ConvergenceRecord>> {
    let mut sorted_powers = powers.to_vec();
    sorted_powers.sort_unstable();
    sorted_powers.dedup();
    let pairs: Vec<(SVector, u64)> = s_list
        .iter()
        .flat_map(|s| sorted_powers.iter().map(move |&p| (s.clone(), p)))
        .collect();
    pairs
        .into_par_iter()
        .map(|(s, power)| {
            let p_limit = limit_density(&s, theta)?;
            let p_exact = pre_limit_probability(power, &s, theta)?;
            let rel_err = (p_limit != 0.0).then(|| (p_exact / p_limit - 1.0).abs());
            Ok(ConvergenceRecord { power, s, theta: theta.clone(), p_exact, p_limit, rel_err })
        })
        .collect()
}

/// Columns `N, s_1..s_n, theta_1..theta_n, p_exact, p_limit, rel_err`.
pub fn convergence_csv_table(records: &[ConvergenceRecord]) -> Table {
    let n = records.first().map_or(0, |r| r.s.rank());
    let mut header = vec!["N".to_string()];
    header.extend(indexed("s", n));
    header.extend(indexed("theta", n));
    header.extend(["p_exact", "p_limit", "rel_err"].map(String::from));
    let mut table = Table::new(header);
    for r in records {
        let mut row = vec![r.power.to_string()];
        row.extend(r.s.as_slice().iter().map(|v| v.to_string()));
        row.extend(r.theta.as_slice().iter().map(|&v| fmt_f64(v)));
        row.push(fmt_f64(r.p_exact));
        row.push(fmt_f64(r.p_limit));
        row.push(r.rel_err.map(fmt_f64).unwrap_or_default());
        table.push(row);
    }
    table
}
