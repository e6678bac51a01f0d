//! Torus orbit closures in the type A flag variety.
//!
//! A point of `SL_n/B` is an invertible matrix `x`; its flag is spanned by
//! the leading columns. The torus acts on rows, so the Plücker coordinate
//! `p_I` of `λ(t)·x` is `t^{Σ_{i∈I} λ_i} p_I(x)`. The limit as `t → 0`
//! therefore selects, for each `d`, the nonzero `d`-minor of least weight.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Result, WeylError};
use crate::geometry::{rat, ratio, Rational, RationalMatrix};
use crate::retraction::{Provenance, RetractionTable, SubsetM};
use crate::weyl::{GroupDescriptor, SignedPermutation};

/// `I_d(x)` for `d = 1..=n`: the ascending 1-based row tuples whose minor on
/// the first `d` columns is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerSupport {
    n: usize,
    sets: Vec<BTreeSet<Vec<usize>>>,
}

impl PluckerSupport {
    pub fn rank(&self) -> usize {
        self.n
    }

    /// `I_d(x)`, for `1 ≤ d ≤ n`.
    pub fn get(&self, d: usize) -> &BTreeSet<Vec<usize>> {
        &self.sets[d - 1]
    }

    pub fn contains(&self, tuple: &[usize]) -> bool {
        !tuple.is_empty() && tuple.len() <= self.n && self.sets[tuple.len() - 1].contains(tuple)
    }
}

fn combinations(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..d).collect();
    loop {
        out.push(idx.clone());
        let Some(pos) = (0..d).rev().find(|&p| idx[p] != p + n - d) else {
            return out;
        };
        idx[pos] += 1;
        for q in pos + 1..d {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

pub fn plucker_support(x: &RationalMatrix) -> Result<PluckerSupport> {
    if !x.is_square() {
        return Err(WeylError::NotSquare);
    }
    let n = x.nrows();
    if n == 0 || x.det()?.is_zero() {
        return Err(WeylError::SingularMatrix);
    }
    let mut sets = Vec::with_capacity(n);
    for d in 1..=n {
        let cols: Vec<usize> = (0..d).collect();
        let mut set = BTreeSet::new();
        for rows in combinations(n, d) {
            if !x.minor(&rows, &cols)?.is_zero() {
                set.insert(rows.iter().map(|r| r + 1).collect());
            }
        }
        sets.push(set);
    }
    Ok(PluckerSupport { n, sets })
}

/// The torus-fixed points of the orbit closure of `x`.
#[derive(Clone, Debug)]
pub struct OrbitFixedPoints {
    pub support: PluckerSupport,
    pub points: SubsetM,
}

/// `{w ∈ S_n : sorted(w(1), …, w(d)) ∈ I_d(x) for every d}`.
pub fn fixed_points_from_support(support: &PluckerSupport) -> Result<SubsetM> {
    fn rec(
        support: &PluckerSupport,
        prefix: &mut Vec<i32>,
        used: &mut [bool],
        out: &mut Vec<SignedPermutation>,
    ) {
        let n = support.n;
        if prefix.len() == n {
            out.push(SignedPermutation::new(prefix));
            return;
        }
        for a in 1..=n {
            if used[a - 1] {
                continue;
            }
            prefix.push(a as i32);
            let mut set: Vec<usize> = prefix.iter().map(|&b| b as usize).collect();
            set.sort_unstable();
            if support.contains(&set) {
                used[a - 1] = true;
                rec(support, prefix, used, out);
                used[a - 1] = false;
            }
            prefix.pop();
        }
    }
    let group = GroupDescriptor::symmetric(support.n)?;
    let mut out = Vec::new();
    rec(
        support,
        &mut Vec::new(),
        &mut vec![false; support.n],
        &mut out,
    );
    SubsetM::new(&group, out)
}

pub fn fixed_points(x: &RationalMatrix) -> Result<OrbitFixedPoints> {
    let support = plucker_support(x)?;
    let points = fixed_points_from_support(&support)?;
    Ok(OrbitFixedPoints { support, points })
}

/// `lim_{t→0} λ(t)·x` for the cocharacter `λ`, as a permutation.
pub fn limit_point(x: &RationalMatrix, lambda: &[i128]) -> Result<SignedPermutation> {
    limit_from_support(&plucker_support(x)?, lambda)
}

pub fn limit_from_support(support: &PluckerSupport, lambda: &[i128]) -> Result<SignedPermutation> {
    let n = support.n;
    if lambda.len() != n {
        return Err(WeylError::DimensionMismatch {
            expected: n,
            found: lambda.len(),
        });
    }
    let mut window = Vec::with_capacity(n);
    let mut previous: Vec<usize> = Vec::new();
    for d in 1..=n {
        let mut best: Option<(i128, &Vec<usize>)> = None;
        let mut tied = false;
        for tuple in support.get(d) {
            let weight: i128 = tuple.iter().map(|&i| lambda[i - 1]).sum();
            match best {
                Some((b, _)) if weight > b => {}
                Some((b, _)) if weight == b => tied = true,
                _ => {
                    best = Some((weight, tuple));
                    tied = false;
                }
            }
        }
        if tied {
            return Err(WeylError::TieDetected { size: d });
        }
        let (_, chosen) = best.expect("I_d(x) is nonempty for invertible x");
        let fresh: Vec<usize> = chosen
            .iter()
            .copied()
            .filter(|i| !previous.contains(i))
            .collect();
        if fresh.len() != 1 || previous.iter().any(|i| !chosen.contains(i)) {
            return Err(WeylError::NotNested { size: d });
        }
        window.push(fresh[0] as i32);
        previous = chosen.clone();
    }
    Ok(SignedPermutation::from(window))
}

/// An integer point in the interior of the chamber `C(u)` of `S_n` whose
/// `d`-subset sums are pairwise distinct for every `d`, so the limit never
/// ties: `λ_{u(j)} = n·B^j − Σ_k B^k` with `B = n·max_d C(n,d) + 1`.
pub fn chamber_weights(u: &SignedPermutation) -> Vec<i128> {
    let n = u.len();
    let max_binom = (0..=n).map(|d| binomial(n, d)).max().unwrap_or(1) as i128;
    let base = n as i128 * max_binom + 1;
    let powers: Vec<i128> = (1..=n as u32).map(|j| base.pow(j)).collect();
    let total: i128 = powers.iter().sum();
    let mut lambda = vec![0i128; n];
    for (j, &a) in u.window().iter().enumerate() {
        lambda[a as usize - 1] = n as i128 * powers[j] - total;
    }
    lambda
}

/// The geometric retraction table `u ↦ lim λ_u(t)·x` over all of `S_n`.
pub fn geometric_table(x: &RationalMatrix) -> Result<RetractionTable> {
    let support = plucker_support(x)?;
    geometric_table_from_support(&support)
}

pub fn geometric_table_from_support(support: &PluckerSupport) -> Result<RetractionTable> {
    let group = GroupDescriptor::symmetric(support.n)?;
    let mut entries = alloc::collections::BTreeMap::new();
    for u in group.elements()? {
        let r = limit_from_support(support, &chamber_weights(&u))?;
        entries.insert(u, r);
    }
    Ok(RetractionTable::new(Provenance::GeometricLimit, entries))
}

/// How [`sample_rational_point`] draws a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SampleProfile {
    /// Dense small-integer entries with occasional fractions.
    Generic,
    /// Retry until the fixed-point set is the Bruhat interval `[v, w]`.
    Interval(SignedPermutation, SignedPermutation),
    /// Each entry is nonzero with the given probability (in percent).
    Sparse { density_percent: u8 },
}

/// Attempts made before [`WeylError::GiveUp`].
pub const DEFAULT_SAMPLE_ATTEMPTS: usize = 10_000;

fn random_entry(rng: &mut ChaCha8Rng) -> Rational {
    if rng.gen_bool(0.15) {
        let p: i64 = rng.gen_range(-7..=7);
        let q: i64 = rng.gen_range(2..=5);
        ratio(p, q)
    } else {
        rat(rng.gen_range(-5..=5))
    }
}

fn random_nonzero(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let e = random_entry(rng);
        if !e.is_zero() {
            return e;
        }
    }
}

fn random_upper(rng: &mut ChaCha8Rng, n: usize, density: f64, unit: bool) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = if unit {
            Rational::one()
        } else {
            random_nonzero(rng)
        };
        for j in i + 1..n {
            if rng.gen_bool(density) {
                m[(i, j)] = random_nonzero(rng);
            }
        }
    }
    m
}

/// A reproducible random invertible `n × n` matrix.
pub fn sample_rational_point(
    n: usize,
    seed: u64,
    profile: &SampleProfile,
) -> Result<RationalMatrix> {
    sample_rational_point_with(n, seed, profile, DEFAULT_SAMPLE_ATTEMPTS)
}

pub fn sample_rational_point_with(
    n: usize,
    seed: u64,
    profile: &SampleProfile,
    attempts: usize,
) -> Result<RationalMatrix> {
    let group = GroupDescriptor::symmetric(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let target = match profile {
        SampleProfile::Interval(v, w) => Some(crate::matroid::bruhat_interval(&group, v, w)?),
        _ => None,
    };
    for _ in 0..attempts {
        let x = match profile {
            SampleProfile::Generic => {
                let mut x = RationalMatrix::zeros(n, n);
                for i in 0..n {
                    for j in 0..n {
                        x[(i, j)] = random_entry(&mut rng);
                    }
                }
                x
            }
            SampleProfile::Sparse { density_percent } => {
                let p = f64::from((*density_percent).min(100)) / 100.0;
                let mut x = RationalMatrix::zeros(n, n);
                for i in 0..n {
                    for j in 0..n {
                        if rng.gen_bool(p) {
                            x[(i, j)] = random_nonzero(&mut rng);
                        }
                    }
                }
                x
            }
            SampleProfile::Interval(_, w) => {
                // A point of the Schubert cell of w, thinned at random so that
                // it may fall into a smaller opposite cell, then moved by a
                // random Borel element on the right (which fixes the flag).
                let density = rng.gen_range(0.0..=1.0);
                let left = random_upper(&mut rng, n, density, true);
                let right = random_upper(&mut rng, n, 0.7, false);
                left.mul(&RationalMatrix::permutation(w))?.mul(&right)?
            }
        };
        if x.det()?.is_zero() {
            continue;
        }
        match &target {
            None => return Ok(x),
            Some(interval) => {
                if fixed_points(&x)?.points == *interval {
                    return Ok(x);
                }
            }
        }
    }
    Err(WeylError::GiveUp { attempts })
}
