//! Probability measures on the irreducible components of `(L^{ω_n})^{⊗N}`:
//!
//! - Plancherel-type: `P(λ) = M_λ · dim L^λ / 2^{nN}`;
//! - character measure: `P(λ; y) = M_λ · χ_λ(y) / χ_{ω_n}(y)^N`.
//!
//! Exact rational points give exact probabilities that sum to exactly 1.
//! Log-coordinate points (`t = ln y`, possibly irrational) use the floating
//! log-space path.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::characters::{character_bn, dim_weyl, ln_character_bn, ln_spinor_character, spinor_value};
use crate::error::{Error, Result};
use crate::exactalg::{rat_pow, rat_to_f64, BigRat, TorusPoint};
use crate::multiplicities::{ln_multiplicity, multiplicity_exact, offsets};
use crate::output::{fmt_f64, indexed, Table};
use crate::rootsys::{lambda_from_s, RescaledWeight, SVector};

/// Where the measure is evaluated.
#[derive(Debug, Clone, PartialEq)]
pub enum EvalPoint {
    /// `t = 0`: the Plancherel-type measure.
    Dimension,
    /// An exact rational torus point.
    Exact(TorusPoint),
    /// Log coordinates `t_i = ln y_i`, floating mode.
    Log(Vec<f64>),
}

impl EvalPoint {
    pub fn is_exact(&self) -> bool {
        !matches!(self, EvalPoint::Log(_))
    }

    fn rank(&self) -> Option<usize> {
        match self {
            EvalPoint::Dimension => None,
            EvalPoint::Exact(pt) => Some(pt.rank()),
            EvalPoint::Log(t) => Some(t.len()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Probability {
    Exact(BigRat),
    Float(f64),
}

impl Probability {
    pub fn to_f64(&self) -> f64 {
        match self {
            Probability::Exact(p) => rat_to_f64(p),
            Probability::Float(p) => *p,
        }
    }

    pub fn exact(&self) -> Option<&BigRat> {
        match self {
            Probability::Exact(p) => Some(p),
            Probability::Float(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MeasurePoint {
    pub s: SVector,
    pub lambda: RescaledWeight,
    pub multiplicity: BigUint,
    pub probability: Probability,
}

/// The measure over the full support for fixed `(n, N)` and evaluation point.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureTable {
    rank: usize,
    power: u64,
    point: EvalPoint,
    rows: Vec<MeasurePoint>,
}

/// Offsets `s` with strictly positive multiplicity, in lexicographic order.
pub fn support(n: usize, power: u64) -> Vec<SVector> {
    offsets(n, power)
        .into_iter()
        .filter(|s| !multiplicity_exact(power, s).expect("valid offset").is_zero())
        .collect()
}

/// Exact `M_λ χ_λ(y) / χ_{ω_n}(y)^N`.
pub fn character_measure(power: u64, s: &SVector, pt: &TorusPoint) -> Result<BigRat> {
    let spinor_pow = rat_pow(&spinor_value(pt), power as i64);
    character_measure_with(power, s, pt, &spinor_pow)
}

fn character_measure_with(
    power: u64,
    s: &SVector,
    pt: &TorusPoint,
    spinor_pow: &BigRat,
) -> Result<BigRat> {
    let lambda = lambda_from_s(power, s)?;
    let m = BigRat::from_integer(multiplicity_exact(power, s)?.into());
    Ok(m * character_bn(&lambda, pt)? / spinor_pow)
}

/// `ln P(λ; e^t)` in floating point.
pub fn ln_character_measure(power: u64, s: &SVector, t: &[f64]) -> Result<f64> {
    let lambda = lambda_from_s(power, s)?;
    Ok(ln_multiplicity(power, s)? + ln_character_bn(&lambda, t)?
        - power as f64 * ln_spinor_character(t))
}

/// Exact `M_λ · dim L^λ / 2^{nN}`.
pub fn plancherel_measure(power: u64, s: &SVector) -> Result<BigRat> {
    let lambda = lambda_from_s(power, s)?;
    let num = multiplicity_exact(power, s)? * dim_weyl(&lambda)?;
    let den = BigUint::one() << (s.rank() as u64 * power) as usize;
    Ok(BigRational::new(num.into(), den.into()))
}

impl MeasureTable {
    /// Evaluates the measure on every support point; rows are independent
    /// and computed in parallel, but always returned in lexicographic order.
    pub fn build(n: usize, power: u64, point: EvalPoint) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        if let Some(r) = point.rank() {
            if r != n {
                return Err(Error::LengthMismatch { expected: n, got: r });
            }
        }
        let spinor_pow = match &point {
            EvalPoint::Exact(pt) => Some(rat_pow(&spinor_value(pt), power as i64)),
            _ => None,
        };
        let rows = support(n, power)
            .into_par_iter()
            .map(|s| {
                let lambda = lambda_from_s(power, &s)?;
                let multiplicity = multiplicity_exact(power, &s)?;
                let probability = match &point {
                    EvalPoint::Dimension => Probability::Exact(plancherel_measure(power, &s)?),
                    EvalPoint::Exact(pt) => Probability::Exact(character_measure_with(
                        power,
                        &s,
                        pt,
                        spinor_pow.as_ref().expect("computed above"),
                    )?),
                    EvalPoint::Log(t) => {
                        Probability::Float(ln_character_measure(power, &s, t)?.exp())
                    }
                };
                Ok(MeasurePoint { s, lambda, multiplicity, probability })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { rank: n, power, point, rows })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn power(&self) -> u64 {
        self.power
    }

    pub fn point(&self) -> &EvalPoint {
        &self.point
    }

    pub fn rows(&self) -> &[MeasurePoint] {
        &self.rows
    }

    /// Total mass: exact for exact points, a float sum otherwise.
    pub fn total(&self) -> Probability {
        if self.point.is_exact() {
            let sum = self
                .rows
                .iter()
                .map(|r| r.probability.exact().expect("exact table").clone())
                .fold(BigRat::zero(), |a, b| a + b);
            Probability::Exact(sum)
        } else {
            Probability::Float(self.rows.iter().map(|r| r.probability.to_f64()).sum())
        }
    }

    pub fn probability_of(&self, s: &SVector) -> Option<&Probability> {
        self.rows.iter().find(|r| &r.s == s).map(|r| &r.probability)
    }

    /// Cumulative distribution as floats, computed from exact partial sums
    /// when available. The last entry is pinned to 1.
    fn cdf(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.rows.len());
        if self.point.is_exact() {
            let mut acc = BigRat::zero();
            for r in &self.rows {
                acc += r.probability.exact().expect("exact table");
                out.push(rat_to_f64(&acc));
            }
        } else {
            let total: f64 = self.rows.iter().map(|r| r.probability.to_f64()).sum();
            let mut acc = 0.0;
            for r in &self.rows {
                acc += r.probability.to_f64() / total;
                out.push(acc);
            }
        }
        if let Some(last) = out.last_mut() {
            *last = 1.0;
        }
        out
    }

    /// `count` i.i.d. draws by inverse CDF, reproducible for a given seed.
    pub fn sample(&self, seed: u64, count: usize) -> Vec<SVector> {
        let cdf = self.cdf();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|_| {
                let u: f64 = rng.gen();
                let idx = cdf.partition_point(|&c| c <= u).min(cdf.len() - 1);
                self.rows[idx].s.clone()
            })
            .collect()
    }

    /// Empirical frequency of each support point, aligned with `rows()`.
    pub fn frequencies(&self, draws: &[SVector]) -> Vec<usize> {
        let mut counts = vec![0usize; self.rows.len()];
        for d in draws {
            if let Ok(i) = self.rows.binary_search_by(|r| r.s.cmp(d)) {
                counts[i] += 1;
            }
        }
        counts
    }

    /// Total-variation distance between the empirical law of `draws` and the table.
    pub fn total_variation(&self, draws: &[SVector]) -> f64 {
        let counts = self.frequencies(draws);
        let total = draws.len().max(1) as f64;
        0.5 * self
            .rows
            .iter()
            .zip(counts)
            .map(|(r, c)| (c as f64 / total - r.probability.to_f64()).abs())
            .sum::<f64>()
    }

    /// Columns `s_1..s_n, lambda_1..lambda_n, multiplicity, probability_num,
    /// probability_den, probability_float`; the rational columns are empty
    /// in floating mode.
    pub fn to_table(&self) -> Table {
        let mut header = indexed("s", self.rank);
        header.extend(indexed("lambda", self.rank));
        header.extend(
            ["multiplicity", "probability_num", "probability_den", "probability_float"]
                .map(String::from),
        );
        let mut table = Table::new(header);
        for r in &self.rows {
            let mut row: Vec<String> = r.s.as_slice().iter().map(|v| v.to_string()).collect();
            row.extend(r.lambda.coords().iter().map(|v| v.to_string()));
            row.push(r.multiplicity.to_string());
            match &r.probability {
                Probability::Exact(p) => {
                    row.push(p.numer().to_string());
                    row.push(p.denom().to_string());
                }
                Probability::Float(_) => {
                    row.push(String::new());
                    row.push(String::new());
                }
            }
            row.push(fmt_f64(r.probability.to_f64()));
            table.push(row);
        }
        table
    }
}

/// Exact total mass of the measure; equals 1 by the decomposition identity.
pub fn normalization_check(n: usize, power: u64, point: EvalPoint) -> Result<BigRat> {
    if !point.is_exact() {
        return Err(Error::Numerical(
            "exact normalization needs a rational point or the dimension point".into(),
        ));
    }
    match MeasureTable::build(n, power, point)?.total() {
        Probability::Exact(p) => Ok(p),
        Probability::Float(_) => unreachable!("exact point"),
    }
}

/// Convenience wrapper: build the exact table at `pt` and draw from it.
pub fn sample(n: usize, power: u64, pt: &TorusPoint, seed: u64, count: usize) -> Result<Vec<SVector>> {
    Ok(MeasureTable::build(n, power, EvalPoint::Exact(pt.clone()))?.sample(seed, count))
}
