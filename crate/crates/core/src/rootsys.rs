//! Root-system bookkeeping for `B_n` and its `A_{n-1}` subsystem.
//!
//! Weights are integer vectors in doubled orthogonal coordinates. In this
//! scale the simple roots of `B_n` are `2(e_i - e_{i+1})` and `2e_n`, the
//! spinor highest weight is `(1, …, 1)` and the Weyl vector is
//! `ρ = (2n-1, 2n-3, …, 1)`.

use itertools::Itertools;

use crate::error::{Error, Result};

/// A weight of `B_n` in doubled orthogonal coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RescaledWeight(Vec<i64>);

impl RescaledWeight {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroRank);
        }
        Ok(Self(coords))
    }

    /// The zero weight of rank `n`.
    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// The spinor highest weight `ω_n`, i.e. `(1, …, 1)`.
    pub fn spinor(n: usize) -> Self {
        Self(vec![1; n])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn is_dominant(&self) -> bool {
        is_dominant(&self.0)
    }

    /// Integral weights of `B_n` have all doubled coordinates even (tensor
    /// representations) or all odd (spin representations).
    pub fn in_weight_lattice(&self) -> bool {
        self.0.iter().map(|c| c.rem_euclid(2)).all_equal()
    }

    /// Checks that every coordinate has the parity of `power`, which is the
    /// lattice condition for weights of the `power`-th spinor tensor power.
    pub fn check_parity(&self, power: u64) -> Result<()> {
        let p = (power % 2) as i64;
        if self.0.iter().all(|c| c.rem_euclid(2) == p) {
            Ok(())
        } else {
            Err(Error::Parity { weight: self.0.clone(), power })
        }
    }

    /// `λ + ρ`, the strictly decreasing shifted coordinates.
    pub fn shifted(&self) -> Vec<i64> {
        self.0.iter().zip(rho(self.rank()).0).map(|(l, r)| l + r).collect()
    }
}

/// Boundary offsets `s` with `λ_i = N - 2 s_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SVector(Vec<u64>);

impl SVector {
    /// Builds an offset vector, enforcing `s_1 ≤ s_2 ≤ … ≤ s_n`.
    pub fn new(s: Vec<u64>) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::ZeroRank);
        }
        if s.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotIncreasing(s));
        }
        Ok(Self(s))
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Checks `s_n ≤ N/2`, i.e. `λ_n ≥ 0`.
    pub fn check_power(&self, power: u64) -> Result<()> {
        let last = *self.0.last().expect("non-empty");
        if 2 * last > power {
            return Err(Error::OffsetTooLarge { s_last: last, power });
        }
        Ok(())
    }
}

/// Weyl vector in doubled coordinates: `ρ_i = 2(n-i) + 1`.
pub fn rho(n: usize) -> RescaledWeight {
    RescaledWeight((0..n).map(|i| 2 * (n - i) as i64 - 1).collect())
}

/// `λ_i = N - 2 s_i`.
pub fn lambda_from_s(power: u64, s: &SVector) -> Result<RescaledWeight> {
    s.check_power(power)?;
    let n = power as i64;
    Ok(RescaledWeight(s.0.iter().map(|&si| n - 2 * si as i64).collect()))
}

/// Inverse of [`lambda_from_s`]: `s_i = (N - λ_i) / 2`.
pub fn s_from_lambda(power: u64, lambda: &RescaledWeight) -> Result<SVector> {
    if !lambda.is_dominant() {
        return Err(Error::NonDominant(lambda.0.clone()));
    }
    lambda.check_parity(power)?;
    let n = power as i64;
    let s = lambda
        .0
        .iter()
        .map(|&l| {
            if l > n {
                Err(Error::NonDominant(lambda.0.clone()))
            } else {
                Ok(((n - l) / 2) as u64)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    SVector::new(s)
}

/// `w_1 ≥ w_2 ≥ … ≥ w_n ≥ 0`.
pub fn is_dominant(w: &[i64]) -> bool {
    w.windows(2).all(|p| p[0] >= p[1]) && w.last().map_or(true, |&l| l >= 0)
}

/// Maps a weight to the dominant chamber of `B_n` (absolute values, sorted
/// decreasingly).
pub fn dominant_representative(w: &[i64]) -> Vec<i64> {
    let mut d: Vec<i64> = w.iter().map(|c| c.abs()).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

/// Sign of the permutation that sorts `v` (which must have distinct entries)
/// into decreasing order.
pub(crate) fn sorting_sign(v: &[i64]) -> i32 {
    let mut inversions = 0usize;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] < v[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeylKind {
    /// Signed permutations, order `2^n n!`.
    B,
    /// Permutations, order `n!`.
    A,
}

/// A signed permutation `e_i ↦ signs[i]·e_{perm[i]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl WeylElement {
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// `(-1)^{length}`, the determinant of the signed permutation matrix.
    pub fn sign(&self) -> i32 {
        let perm_sign = {
            let as_i64: Vec<i64> = self.perm.iter().map(|&p| -(p as i64)).collect();
            sorting_sign(&as_i64)
        };
        let flips = self.signs.iter().filter(|&&s| s < 0).count();
        if flips % 2 == 0 {
            perm_sign
        } else {
            -perm_sign
        }
    }

    pub fn act(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (i, &x) in v.iter().enumerate() {
            out[self.perm[i]] = self.signs[i] as i64 * x;
        }
        out
    }
}

/// Enumerates the Weyl group in lexicographic order on
/// `(permutation, sign vector)`, with `+1` ordered before `-1`.
pub fn weyl_elements(kind: WeylKind, n: usize) -> impl Iterator<Item = WeylElement> {
    let sign_vectors: Vec<Vec<i8>> = match kind {
        WeylKind::A => vec![vec![1; n]],
        WeylKind::B => (0..1u64 << n)
            .map(|mask| {
                (0..n)
                    .map(|i| if mask >> (n - 1 - i) & 1 == 1 { -1 } else { 1 })
                    .collect()
            })
            .collect(),
    };
    (0..n).permutations(n).flat_map(move |perm| {
        sign_vectors
            .clone()
            .into_iter()
            .map(move |signs| WeylElement { perm: perm.clone(), signs })
    })
}
