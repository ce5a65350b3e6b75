//! Brute-force checks by exhaustive path enumeration.
//!
//! Every count the DP and matrix machinery produce can be recomputed at
//! small scale by walking all paths and tallying their stats. The only
//! code shared with the counting side is the path primitives; no
//! counting logic is shared, so agreement is meaningful.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::counting::{
    catalan_exact, height_triangle, narayana_triangle, weighted_catalan,
};
use crate::error::{Error, Result};
use crate::lattice::{enumerate_paths, path_stats, path_weight};
use crate::weights::WeightVector;

/// Default ceiling on the number of paths a brute-force call will walk.
pub const DEFAULT_PATH_CAP: u64 = 100_000;

/// Tallies from one full enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteReport {
    pub total: u64,
    pub weighted_total: BigInt,
    pub by_max_height: BTreeMap<i64, u64>,
    pub by_peaks: BTreeMap<usize, u64>,
}

/// Walks every path for `(k, n)` once, accumulating the weighted total
/// (all-ones when no weights are given) and the distributions by maximum
/// height and by peak count. Refuses when the closed form predicts more
/// than `cap` paths.
pub fn brute_count_capped(
    k: usize,
    n: u32,
    wv: Option<&WeightVector>,
    cap: u64,
) -> Result<BruteReport> {
    let estimate = catalan_exact(k, n, None)?;
    if estimate > BigInt::from(cap) {
        return Err(Error::CapExceeded { estimate: estimate.to_string(), cap });
    }
    let ones = WeightVector::ones();
    let weights = wv.unwrap_or(&ones);
    let mut total = 0u64;
    let mut weighted_total = BigInt::zero();
    let mut by_max_height = BTreeMap::new();
    let mut by_peaks = BTreeMap::new();
    for path in enumerate_paths(k, n, None)? {
        let stats = path_stats(&path);
        total += 1;
        weighted_total += path_weight(&path, weights);
        *by_max_height.entry(stats.max_height).or_insert(0u64) += 1;
        *by_peaks.entry(stats.peak_count).or_insert(0u64) += 1;
    }
    Ok(BruteReport { total, weighted_total, by_max_height, by_peaks })
}

/// `brute_count_capped` at the default cap.
pub fn brute_count(k: usize, n: u32, wv: Option<&WeightVector>) -> Result<BruteReport> {
    brute_count_capped(k, n, wv, DEFAULT_PATH_CAP)
}

/// One disagreement between the enumeration and a computed quantity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub quantity: String,
    pub enumerated: String,
    pub computed: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub k: usize,
    pub n: u32,
    pub total: u64,
    pub mismatches: Vec<Mismatch>,
}

impl CrossCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares one enumeration against the closed form, the weighted DP,
/// and the two triangle rows; every disagreement is reported with both
/// values.
pub fn cross_check(k: usize, n: u32, wv: &WeightVector, cap: u64) -> Result<CrossCheck> {
    let report = brute_count_capped(k, n, Some(wv), cap)?;
    let mut mismatches = Vec::new();
    let mut push = |quantity: &str, enumerated: String, computed: String| {
        if enumerated != computed {
            mismatches.push(Mismatch { quantity: quantity.to_string(), enumerated, computed });
        }
    };

    let closed = catalan_exact(k, n, None)?;
    push("total", report.total.to_string(), closed.to_string());

    let weighted = weighted_catalan(k, n, wv, None)?;
    push("weighted_total", report.weighted_total.to_string(), weighted.to_string());

    if n >= 1 {
        let heights = height_triangle(k, n, None)?;
        let computed_row = heights.row(n);
        let lo = k as i64 - 1;
        for (offset, computed) in computed_row.iter().enumerate() {
            let s = lo + offset as i64;
            let enumerated = report.by_max_height.get(&s).copied().unwrap_or(0);
            push(
                &format!("by_max_height[{s}]"),
                enumerated.to_string(),
                computed.to_string(),
            );
        }
        for (&s, &count) in &report.by_max_height {
            if s < lo || s > lo + computed_row.len() as i64 - 1 {
                push(&format!("by_max_height[{s}]"), count.to_string(), "0".to_string());
            }
        }

        let peaks = narayana_triangle(k, n, None)?;
        let computed_row = peaks.row(n);
        for (offset, computed) in computed_row.iter().enumerate() {
            let p = offset + 1;
            let enumerated = report.by_peaks.get(&p).copied().unwrap_or(0);
            push(&format!("by_peaks[{p}]"), enumerated.to_string(), computed.to_string());
        }
        for (&p, &count) in &report.by_peaks {
            if p < 1 || p > computed_row.len() {
                push(&format!("by_peaks[{p}]"), count.to_string(), "0".to_string());
            }
        }
    }

    Ok(CrossCheck { k, n, total: report.total, mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_case() {
        let r = brute_count(3, 1, None).unwrap();
        assert_eq!(r.total, 1);
        assert_eq!(r.by_peaks, BTreeMap::from([(1, 1)]));
        assert_eq!(r.by_max_height, BTreeMap::from([(2, 1)]));
    }

    #[test]
    fn weighted_total_matches_figure_polynomial() {
        let wv = WeightVector::from_prefix(vec![1.into(), 2.into(), 3.into()]);
        let r = brute_count(2, 3, Some(&wv)).unwrap();
        assert_eq!(r.weighted_total, BigInt::from(15));
    }

    #[test]
    fn distributions_sum_to_total() {
        let r = brute_count(3, 4, None).unwrap();
        assert_eq!(r.by_max_height.values().sum::<u64>(), r.total);
        assert_eq!(r.by_peaks.values().sum::<u64>(), r.total);
        assert_eq!(BigInt::from(r.total), catalan_exact(3, 4, None).unwrap());
    }

    #[test]
    fn cap_refusal_names_the_estimate() {
        match brute_count_capped(3, 6, None, 1000) {
            Err(Error::CapExceeded { estimate, cap }) => {
                assert_eq!(estimate, "87516");
                assert_eq!(cap, 1000);
            }
            other => panic!("expected refusal, got {other:?}"),
        }
    }

    #[test]
    fn cross_check_passes_on_small_cases() {
        assert!(cross_check(3, 4, &WeightVector::ones(), DEFAULT_PATH_CAP).unwrap().passed());
        assert!(cross_check(2, 6, &WeightVector::odd_squares(), DEFAULT_PATH_CAP)
            .unwrap()
            .passed());
        let r = cross_check(4, 2, &WeightVector::ones(), DEFAULT_PATH_CAP).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn four_dim_two_round_height_distribution() {
        let r = brute_count(4, 2, None).unwrap();
        assert_eq!(r.by_max_height, BTreeMap::from([(3, 1), (4, 3), (5, 5), (6, 5)]));
    }

    #[test]
    fn cross_check_handles_n_zero() {
        let r = cross_check(3, 0, &WeightVector::ones(), DEFAULT_PATH_CAP).unwrap();
        assert!(r.passed());
        assert_eq!(r.total, 1);
    }

    mod properties {
        use super::super::*;
        use num_bigint::BigInt;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            // the DP and the enumeration walk completely different code;
            // they must agree for any integer weights, negatives included
            #[test]
            fn dp_matches_enumeration(
                k in 2usize..=4,
                n in 0u32..=3,
                prefix in proptest::collection::vec(-9i64..=9, 0..8),
            ) {
                let wv = WeightVector::from_prefix(
                    prefix.into_iter().map(BigInt::from).collect(),
                );
                let report = brute_count(k, n, Some(&wv)).unwrap();
                prop_assert_eq!(
                    report.weighted_total,
                    weighted_catalan(k, n, &wv, None).unwrap()
                );
            }
        }
    }
}
