//! Exact arithmetic: factorials, rationals, sparse Laurent polynomials in the
//! torus variables `y_i = e^{t_i}`, and determinants.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type BigRat = BigRational;

/// `k!` as an exact integer.
pub fn factorial(k: u64) -> BigUint {
    falling_range_product(1, k)
}

/// `lo · (lo+1) ⋯ hi`, or 1 for an empty range.
pub fn falling_range_product(lo: u64, hi: u64) -> BigUint {
    let mut acc = BigUint::one();
    let mut i = lo.max(1);
    while i <= hi {
        acc *= i;
        i += 1;
    }
    acc
}

/// `k!` for a signed argument; negative input is a domain error.
pub fn factorial_checked(k: i64) -> Result<BigUint> {
    if k < 0 {
        return Err(Error::Numerical(format!("factorial of negative number {k}")));
    }
    Ok(factorial(k as u64))
}

/// `x^e` for a possibly negative exponent.
pub fn rat_pow(x: &BigRat, e: i64) -> BigRat {
    if e >= 0 {
        Pow::pow(x, e as u64)
    } else {
        Pow::pow(x.recip(), e.unsigned_abs())
    }
}

/// `ln x` for a positive rational, accurate for huge numerators/denominators.
pub fn rat_ln(x: &BigRat) -> f64 {
    debug_assert!(x.is_positive());
    big_ln(&x.numer().magnitude().clone()) - big_ln(&x.denom().magnitude().clone())
}

/// `ln n` for a positive big integer without overflowing `f64`.
pub fn big_ln(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().expect("finite for < 1000 bits").ln();
    }
    let shift = bits - 64;
    let top: BigUint = n >> shift;
    let top = top.iter_u64_digits().next().unwrap_or(0) as f64;
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Nearest `f64` to a rational, safe when numerator and denominator overflow.
pub fn rat_to_f64(x: &BigRat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let sign = if x.is_negative() { -1.0 } else { 1.0 };
    let (n, d) = (x.numer().magnitude(), x.denom().magnitude());
    if n.bits() < 1000 && d.bits() < 1000 {
        return x.to_f64().expect("finite for < 1000 bits");
    }
    sign * rat_ln(&x.abs()).exp()
}

/// A point `y = (y_1, …, y_n)` of the compact torus's complexification with
/// strictly positive rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusPoint(Vec<BigRat>);

impl TorusPoint {
    pub fn new(y: Vec<BigRat>) -> Result<Self> {
        if y.is_empty() {
            return Err(Error::ZeroRank);
        }
        for (index, v) in y.iter().enumerate() {
            if !v.is_positive() {
                return Err(Error::NonPositiveCoordinate { index });
            }
        }
        Ok(Self(y))
    }

    /// The identity point `y_i = 1` (`t = 0`).
    pub fn ones(n: usize) -> Self {
        Self(vec![BigRat::one(); n])
    }

    pub fn from_ratios(pairs: &[(i64, i64)]) -> Result<Self> {
        Self::new(
            pairs
                .iter()
                .map(|&(p, q)| BigRat::new(p.into(), q.into()))
                .collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigRat] {
        &self.0
    }

    /// Log coordinates `t_i = ln y_i`.
    pub fn log_coords(&self) -> Vec<f64> {
        self.0.iter().map(rat_ln).collect()
    }

    /// Multiplies every coordinate by `c`.
    pub fn scaled(&self, c: &BigRat) -> Result<Self> {
        Self::new(self.0.iter().map(|y| y * c).collect())
    }
}

impl FromStr for TorusPoint {
    type Err = Error;

    /// Comma-separated list of `p/q` or integer entries.
    fn from_str(s: &str) -> Result<Self> {
        let y = s
            .split(',')
            .map(|tok| {
                BigRat::from_str(tok.trim())
                    .map_err(|_| Error::Numerical(format!("cannot parse rational {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(y)
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Sparse Laurent polynomial in `n` variables with big-integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], BigInt::one())
    }

    pub fn monomial(exponents: Vec<i64>, coeff: BigInt) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, coeff);
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i64>, BigInt)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::LengthMismatch { expected: nvars, got: e.len() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponents: &[i64]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, exponents: Vec<i64>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::LengthMismatch { expected: self.nvars, got: other.nvars });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut acc: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *acc.entry(e).or_default() += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Self { nvars: self.nvars, terms: acc })
    }

    /// `self^power` by binary exponentiation.
    pub fn pow(&self, mut power: u64) -> Self {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        while power > 0 {
            if power & 1 == 1 {
                result = result.mul(&base).expect("same variable count");
            }
            power >>= 1;
            if power > 0 {
                base = base.mul(&base).expect("same variable count");
            }
        }
        result
    }

    /// Exact value at a torus point.
    pub fn eval(&self, pt: &TorusPoint) -> Result<BigRat> {
        if pt.rank() != self.nvars {
            return Err(Error::LengthMismatch { expected: self.nvars, got: pt.rank() });
        }
        let mut cache: Vec<BTreeMap<i64, BigRat>> = vec![BTreeMap::new(); self.nvars];
        let mut total = BigRat::zero();
        for (e, c) in &self.terms {
            let mut term = BigRat::from_integer(c.clone());
            for (i, &k) in e.iter().enumerate() {
                let y = &pt.coords()[i];
                let p = cache[i].entry(k).or_insert_with(|| rat_pow(y, k));
                term *= &*p;
            }
            total += term;
        }
        Ok(total)
    }

    /// Sum of coefficients, i.e. the value at `y = (1, …, 1)`.
    pub fn coeff_sum(&self) -> BigInt {
        self.terms.values().sum()
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
pub fn det_exact(mut m: Vec<Vec<BigRat>>) -> BigRat {
    let n = m.len();
    if n == 0 {
        return BigRat::one();
    }
    let mut sign = BigRat::one();
    let mut prev = BigRat::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigRat::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// `(sign, ln|det|)` of a real matrix via LU with partial pivoting.
/// A zero determinant returns sign 0.
pub fn log_det(mut m: Vec<Vec<f64>>) -> (f64, f64) {
    let n = m.len();
    let mut sign = 1.0;
    let mut log_abs = 0.0;
    for k in 0..n {
        let pivot = (k..n)
            .max_by(|&a, &b| m[a][k].abs().total_cmp(&m[b][k].abs()))
            .expect("non-empty");
        if m[pivot][k] == 0.0 {
            return (0.0, f64::NEG_INFINITY);
        }
        if pivot != k {
            m.swap(pivot, k);
            sign = -sign;
        }
        let p = m[k][k];
        if p < 0.0 {
            sign = -sign;
        }
        log_abs += p.abs().ln();
        for i in k + 1..n {
            let f = m[i][k] / p;
            for j in k + 1..n {
                m[i][j] -= f * m[k][j];
            }
        }
    }
    (sign, log_abs)
}
