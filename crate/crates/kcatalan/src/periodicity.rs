//! Modular periodicity of the counting sequences.
//!
//! Every bounded system is a linear map on a finite vector space modulo
//! m, so its orbit from `e1` is eventually periodic; `detect_cycle`
//! finds the exact preperiod and period by hashing first visits of the
//! full state vector. For unbounded weighted counts the divisibility
//! hypotheses below license a reduction to a finite bounded system that
//! agrees with the original sequence modulo m.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::transfer::{build_transfer_matrix, TransferMatrix};
use crate::weights::WeightVector;

/// Default number of indices scanned by the divisibility hypotheses.
pub const DEFAULT_HYPOTHESIS_LIMIT: usize = 64;

/// Preperiod and period of a state-vector orbit and of its first
/// coordinate. `confirmed` is true when the numbers come from an exact
/// finite-state orbit rather than a scalar window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodReport {
    pub modulus: u64,
    pub vector_preperiod: u64,
    pub vector_period: u64,
    pub scalar_preperiod: u64,
    pub scalar_period: u64,
    pub confirmed: bool,
}

/// Which reduction licensed a finite system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    Consecutive,
    Pair,
    Product,
}

impl Hypothesis {
    pub fn name(self) -> &'static str {
        match self {
            Hypothesis::Consecutive => "consecutive",
            Hypothesis::Pair => "pair",
            Hypothesis::Product => "product",
        }
    }
}

/// A finite system whose first-coordinate sequence agrees with the
/// weighted count modulo m.
#[derive(Debug, Clone)]
pub struct PeriodicForm {
    pub hypothesis: Hypothesis,
    pub cap: i64,
    pub weights: WeightVector,
    pub matrix: TransferMatrix,
}

fn entries_mod(matrix: &TransferMatrix, m: u64) -> Vec<Vec<u64>> {
    let mb = BigInt::from(m);
    matrix
        .entries()
        .iter()
        .map(|row| row.iter().map(|v| v.mod_floor(&mb).to_u64().unwrap()).collect())
        .collect()
}

fn mul_mod(entries: &[Vec<u64>], v: &[u64], m: u64) -> Vec<u64> {
    entries
        .iter()
        .map(|row| {
            let mut acc: u128 = 0;
            for (w, x) in row.iter().zip(v) {
                acc = (acc + u128::from(*w) * u128::from(*x)) % u128::from(m);
            }
            acc as u64
        })
        .collect()
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|&d| n.is_multiple_of(d)).collect()
}

/// Minimal scalar period and preperiod inside an orbit already known to
/// satisfy `a(n + lambda) = a(n)` for `n >= mu`. The scalar period may
/// properly divide the vector period.
fn scalar_within(scalars: &[u64], mu: u64, lambda: u64) -> (u64, u64) {
    let mu = mu as usize;
    let lambda = lambda as usize;
    let at = |n: usize| -> u64 {
        if n < scalars.len() {
            scalars[n]
        } else {
            scalars[mu + (n - mu) % lambda]
        }
    };
    let mut scalar_period = lambda as u64;
    for d in divisors(lambda as u64) {
        if (0..lambda).all(|i| at(mu + i + d as usize) == at(mu + i)) {
            scalar_period = d;
            break;
        }
    }
    let mut scalar_preperiod = mu;
    while scalar_preperiod > 0
        && at(scalar_preperiod - 1 + scalar_period as usize) == at(scalar_preperiod - 1)
    {
        scalar_preperiod -= 1;
    }
    (scalar_preperiod as u64, scalar_period)
}

/// Iterates `v <- M*v (mod m)` from `v = e1`, hashing each full vector's
/// first visit; the first revisit pins the minimal `(mu, lambda)`
/// exactly, and the scalar pair is extracted from the first coordinates.
///
/// A budget of more than `m^dim` steps can never be exhausted; smaller
/// budgets may end in an `Undetermined` error.
pub fn detect_cycle(matrix: &TransferMatrix, m: u64, max_steps: u64) -> Result<PeriodReport> {
    if m < 2 {
        return Err(Error::ModulusTooSmall { got: m, min: 2 });
    }
    let entries = entries_mod(matrix, m);
    let mut v = vec![0u64; matrix.dim()];
    v[0] = 1 % m;
    let mut seen: HashMap<Vec<u64>, u64> = HashMap::new();
    seen.insert(v.clone(), 0);
    let mut scalars = vec![v[0]];
    for step in 1..=max_steps {
        v = mul_mod(&entries, &v, m);
        if let Some(&first) = seen.get(&v) {
            let mu = first;
            let lambda = step - first;
            let (scalar_preperiod, scalar_period) = scalar_within(&scalars, mu, lambda);
            return Ok(PeriodReport {
                modulus: m,
                vector_preperiod: mu,
                vector_period: lambda,
                scalar_preperiod,
                scalar_period,
                confirmed: true,
            });
        }
        seen.insert(v.clone(), step);
        scalars.push(v[0]);
    }
    Err(Error::Undetermined { steps: max_steps })
}

/// Minimal period of a scalar window known to be eventually periodic
/// with preperiod at most `mu_bound` and period dividing `lambda_bound`.
/// The window must cover `mu_bound + 2 * lambda_bound` values. The
/// resulting report carries the bounds as its vector pair and is marked
/// unconfirmed.
pub fn scalar_window_report(
    values: &[u64],
    modulus: u64,
    mu_bound: u64,
    lambda_bound: u64,
) -> PeriodReport {
    assert!(
        values.len() as u64 >= mu_bound + 2 * lambda_bound,
        "window too short for the stated bounds"
    );
    let (scalar_preperiod, scalar_period) = scalar_within(values, mu_bound, lambda_bound);
    PeriodReport {
        modulus,
        vector_preperiod: mu_bound,
        vector_period: lambda_bound,
        scalar_preperiod,
        scalar_period,
        confirmed: false,
    }
}

fn residue(wv: &WeightVector, h: usize, m: u64) -> u64 {
    wv.weight_at(h).mod_floor(&BigInt::from(m)).to_u64().unwrap()
}

/// Minimal t <= limit with `m | b0*b1*..*bt`, if any.
pub fn product_hypothesis(wv: &WeightVector, m: u64, limit: usize) -> Option<usize> {
    if m == 0 {
        return None;
    }
    let mut prod: u64 = 1 % m;
    for t in 0..=limit {
        prod = ((u128::from(prod) * u128::from(residue(wv, t, m))) % u128::from(m)) as u64;
        if prod == 0 {
            return Some(t);
        }
    }
    None
}

/// Minimal s <= limit with every one of `b_s .. b_{s+k-2}` divisible by
/// m, if any.
pub fn consecutive_hypothesis(wv: &WeightVector, m: u64, k: usize, limit: usize) -> Option<usize> {
    if m == 0 {
        return None;
    }
    (0..=limit).find(|&s| (0..k - 1).all(|i| residue(wv, s + i, m) == 0))
}

/// Minimal s <= limit with `m | b_{s-j} * b_{s+k-j'}` for every
/// `j in 0..k` and `j' in j..k`; indices with `s - j < 0` cannot occur
/// on a path and are skipped.
pub fn pair_hypothesis(wv: &WeightVector, m: u64, k: usize, limit: usize) -> Option<usize> {
    if m == 0 {
        return None;
    }
    (0..=limit).find(|&s| {
        (0..k).filter(|&j| j <= s).all(|j| {
            (j..k).all(|jp| {
                let lo = residue(wv, s - j, m);
                let hi = residue(wv, s + k - jp, m);
                (u128::from(lo) * u128::from(hi)) % u128::from(m) == 0
            })
        })
    })
}

/// Tries the divisibility hypotheses and, on success, returns the height
/// cap, the zero_from-reduced weights modulo m, and the finite transfer
/// matrix whose first-coordinate sequence agrees with
/// `weighted_catalan(k, n, wv)` modulo m for all n.
///
/// Candidates are ranked by the size of the system they yield (smallest
/// cap wins); on ties the product reduction is preferred over
/// consecutive over pair. `None` means no hypothesis applies within the
/// scan limit — a value, not a failure.
pub fn periodic_form(k: usize, wv: &WeightVector, m: u64) -> Result<Option<PeriodicForm>> {
    periodic_form_with_limit(k, wv, m, DEFAULT_HYPOTHESIS_LIMIT)
}

pub fn periodic_form_with_limit(
    k: usize,
    wv: &WeightVector,
    m: u64,
    limit: usize,
) -> Result<Option<PeriodicForm>> {
    if k < 2 {
        return Err(Error::DimensionTooSmall(k));
    }
    if m < 2 {
        return Err(Error::ModulusTooSmall { got: m, min: 2 });
    }
    // (cap, preference, hypothesis, zero_from index)
    let mut candidates: Vec<(i64, u8, Hypothesis, usize)> = Vec::new();
    if let Some(s) = consecutive_hypothesis(wv, m, k, limit) {
        candidates.push((s as i64 + k as i64 - 2, 1, Hypothesis::Consecutive, s));
    }
    if let Some(s) = pair_hypothesis(wv, m, k, limit) {
        candidates.push((s as i64 + k as i64 - 1, 2, Hypothesis::Pair, s + 1));
    }
    if k == 2 {
        if let Some(t) = product_hypothesis(wv, m, limit) {
            candidates.push((t as i64, 0, Hypothesis::Product, t));
        }
    }
    candidates.sort_by_key(|&(cap, pref, _, _)| (cap, pref));
    let Some(&(cap, _, hypothesis, reduce_at)) = candidates.first() else {
        return Ok(None);
    };
    // A cap below k-1 only happens when the weights at all reachable
    // heights vanish mod m; the k-1 system then counts the same
    // (everything 0 for n >= 1).
    let cap = cap.max(k as i64 - 1);
    let weights = wv.zero_from(reduce_at).reduce_mod(m);
    let matrix = build_transfer_matrix(k, cap, &weights, Some(m))?;
    Ok(Some(PeriodicForm { hypothesis, cap, weights, matrix }))
}
