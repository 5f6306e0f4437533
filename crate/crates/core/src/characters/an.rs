//! Characters of the `sl_n ⊂ so(2n+1)` subalgebra generated by `α_1, …, α_{n-1}`.
//!
//! Highest weights live in the sum-zero hyperplane of the doubled orthogonal
//! coordinates, so consecutive differences are even integers while the
//! coordinates themselves may be fractions with denominator `n`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_rational::Rational64;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{det_exact, rat_pow, BigRat, TorusPoint};

/// Highest weight `γ` of an irreducible `sl_n` module, in doubled coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnHighestWeight(Vec<Rational64>);

impl AnHighestWeight {
    /// Requires `Σγ = 0`, `γ_1 ≥ … ≥ γ_n` and even integer differences.
    pub fn new(gamma: Vec<Rational64>) -> Result<Self> {
        if gamma.is_empty() {
            return Err(Error::ZeroRank);
        }
        let sum: Rational64 = gamma.iter().sum();
        if !sum.is_zero() {
            return Err(Error::InvalidAnWeight(format!("coordinates sum to {sum}, not 0")));
        }
        for pair in gamma.windows(2) {
            let d = pair[0] - pair[1];
            if !d.is_integer() || d.to_integer() < 0 || d.to_integer() % 2 != 0 {
                return Err(Error::InvalidAnWeight(format!(
                    "difference {d} is not a non-negative even integer"
                )));
            }
        }
        Ok(Self(gamma))
    }

    pub fn from_integers(gamma: &[i64]) -> Result<Self> {
        Self::new(gamma.iter().map(|&g| Rational64::from_integer(g)).collect())
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![Rational64::zero(); n])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational64] {
        &self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|g| g.is_integer())
    }

    /// The partition `(γ_i - γ_n) / 2` of the corresponding `gl_n` module.
    pub fn partition(&self) -> Vec<u64> {
        let last = *self.0.last().expect("non-empty");
        self.0
            .iter()
            .map(|g| ((g - last) / 2).to_integer() as u64)
            .collect()
    }

    fn last(&self) -> Rational64 {
        *self.0.last().expect("non-empty")
    }

    fn integer_coords(&self) -> Result<Vec<i64>> {
        if !self.is_integral() {
            return Err(Error::NonIntegralWeight(self.0.iter().map(|g| g.to_string()).collect()));
        }
        Ok(self.0.iter().map(|g| g.to_integer()).collect())
    }
}

impl fmt::Display for AnHighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Dimension of the `sl_n` module: `Π_{i<j} (γ_i - γ_j + 2(j-i)) / (2(j-i))`.
pub fn dim_an(gamma: &AnHighestWeight) -> BigUint {
    let mu = gamma.partition();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..mu.len() {
        for j in i + 1..mu.len() {
            num *= mu[i] - mu[j] + (j - i) as u64;
            den *= (j - i) as u64;
        }
    }
    num / den
}

/// Exact bialternant `det[y_j^{γ_i + 2(n-i)}] / det[y_j^{2(n-i)}]`.
///
/// Needs integral `γ` and pairwise distinct `y_i`; see
/// [`character_an_expanded`] for the fallback at coincident coordinates.
pub fn character_an(gamma: &AnHighestWeight, pt: &TorusPoint) -> Result<BigRat> {
    let n = gamma.rank();
    if pt.rank() != n {
        return Err(Error::LengthMismatch { expected: n, got: pt.rank() });
    }
    let g = gamma.integer_coords()?;
    let rows = |shift: &dyn Fn(usize) -> i64| -> Vec<Vec<BigRat>> {
        (0..n)
            .map(|i| pt.coords().iter().map(|y| rat_pow(y, shift(i))).collect())
            .collect()
    };
    let staircase = |i: usize| 2 * (n - 1 - i) as i64;
    let den = det_exact(rows(&staircase));
    if den.is_zero() {
        return Err(Error::SingularPoint(format!(
            "sl_{n} Vandermonde vanishes at y = ({pt}); coordinates must be distinct"
        )));
    }
    let num = det_exact(rows(&|i| g[i] + staircase(i)));
    Ok(num / den)
}

/// Exact weight sum `Σ_ν m_ν Π y_i^{ν_i}` over the `sl_n` weight diagram,
/// computed by Gelfand–Tsetlin branching. Valid at every positive point.
pub fn character_an_expanded(gamma: &AnHighestWeight, pt: &TorusPoint) -> Result<BigRat> {
    let n = gamma.rank();
    if pt.rank() != n {
        return Err(Error::LengthMismatch { expected: n, got: pt.rank() });
    }
    let shift = gamma.integer_coords()?[n - 1];
    let x: Vec<BigRat> = pt.coords().iter().map(|y| y * y).collect();
    let prod: BigRat = pt.coords().iter().fold(BigRat::one(), |acc, y| acc * y);
    Ok(schur(&gamma.partition(), &x) * rat_pow(&prod, shift))
}

/// `ln χ_γ(e^t)` in floating point via Gelfand–Tsetlin branching on
/// `x_i = e^{2(t_i - max t)} ≤ 1`. Works for non-integral `γ`.
pub fn ln_character_an(gamma: &AnHighestWeight, t: &[f64]) -> Result<f64> {
    let n = gamma.rank();
    if t.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: t.len() });
    }
    let t_max = t.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let x: Vec<f64> = t.iter().map(|ti| (2.0 * (ti - t_max)).exp()).collect();
    let mu = gamma.partition();
    let size: u64 = mu.iter().sum();
    let s = schur(&mu, &x);
    if !(s > 0.0) {
        return Err(Error::Numerical(format!("Schur value {s} underflowed at t = {t:?}")));
    }
    let last = gamma.last().to_f64().expect("small rational");
    Ok(s.ln() + 2.0 * t_max * size as f64 + last * t.iter().sum::<f64>())
}

/// `χ_γ(e^τ)` from the projected coordinates `τ_i = t_{i+1} - t_i`.
///
/// The character is invariant under a common shift of `t`, so `t_1 = 0` is
/// chosen and the rest accumulated from `τ`.
pub fn character_an_at_tau(gamma: &AnHighestWeight, tau: &[f64]) -> Result<f64> {
    let n = gamma.rank();
    if tau.len() + 1 != n {
        return Err(Error::LengthMismatch { expected: n - 1, got: tau.len() });
    }
    let mut t = Vec::with_capacity(n);
    t.push(0.0);
    for &step in tau {
        t.push(t.last().unwrap() + step);
    }
    Ok(ln_character_an(gamma, &t)?.exp())
}

/// Schur polynomial `s_μ(x_1, …, x_m)` by branching `gl_m ↓ gl_{m-1}`: a sum
/// over interlacing `ν` of `s_ν(x_1, …, x_{m-1}) · x_m^{|μ| - |ν|}`.
/// Every term is a product of coordinates, so no cancellation occurs.
fn schur<T>(mu: &[u64], x: &[T]) -> T
where
    T: Clone + Zero + One + std::ops::Mul<Output = T>,
{
    let mut memo: Vec<HashMap<Vec<u64>, T>> = vec![HashMap::new(); x.len() + 1];
    schur_rec(mu, x, &mut memo)
}

fn schur_rec<T>(mu: &[u64], x: &[T], memo: &mut [HashMap<Vec<u64>, T>]) -> T
where
    T: Clone + Zero + One + std::ops::Mul<Output = T>,
{
    let m = x.len();
    debug_assert_eq!(mu.len(), m);
    if m == 1 {
        return num_traits::pow(x[0].clone(), mu[0] as usize);
    }
    if let Some(v) = memo[m].get(mu) {
        return v.clone();
    }
    let size: u64 = mu.iter().sum();
    let mut total = T::zero();
    let mut nu: Vec<u64> = mu[1..].to_vec();
    // odometer over μ_{i+1} ≤ ν_i ≤ μ_i
    loop {
        let nu_size: u64 = nu.iter().sum();
        let sub = schur_rec(&nu, &x[..m - 1], memo);
        total = total + sub * num_traits::pow(x[m - 1].clone(), (size - nu_size) as usize);
        let mut i = 0;
        loop {
            if i == nu.len() {
                memo[m].insert(mu.to_vec(), total.clone());
                return total;
            }
            if nu[i] < mu[i] {
                nu[i] += 1;
                break;
            }
            nu[i] = mu[i + 1];
            i += 1;
        }
    }
}
