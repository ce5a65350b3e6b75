//! Exact counting of balanced ballot paths: the closed form, weighted and
//! bounded weighted counts by dynamic programming over the dominance
//! lattice, exact-height counts, peak (Narayana) counts, and the two
//! triangle families. Every operation takes an optional modulus; residues
//! are always least nonnegative.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::height_of;
use crate::weights::WeightVector;

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::DimensionTooSmall(k));
    }
    Ok(())
}

fn check_modulus(modulus: Option<u64>) -> Result<Option<BigInt>> {
    match modulus {
        None => Ok(None),
        Some(0) => Err(Error::ModulusTooSmall { got: 0, min: 1 }),
        Some(m) => Ok(Some(BigInt::from(m))),
    }
}

fn reduced(v: BigInt, m: Option<&BigInt>) -> BigInt {
    match m {
        Some(m) => v.mod_floor(m),
        None => v,
    }
}

/// The closed form
/// `C(k,n) = 0!1!..(n-1)! * (kn)! / (k!(k+1)!..(k+n-1)!)`,
/// evaluated with unbounded integers. The division is asserted exact.
pub fn catalan_exact(k: usize, n: u32, modulus: Option<u64>) -> Result<BigInt> {
    check_k(k)?;
    let m = check_modulus(modulus)?;
    let mut numerator = factorial(k as u64 * u64::from(n));
    let mut denominator = BigInt::one();
    for i in 0..u64::from(n) {
        numerator *= factorial(i);
        denominator *= factorial(k as u64 + i);
    }
    let (q, r) = numerator.div_rem(&denominator);
    if !r.is_zero() {
        return Err(Error::InexactDivision { k, n });
    }
    Ok(reduced(q, m.as_ref()))
}

fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Weighted path counts to every diagonal point `(j,..,j)`, `j <= n_max`,
/// optionally restricted to points of height at most `cap`.
///
/// One pass in increasing coordinate-sum order: `f(origin) = 1`, and
/// `f(x)` accumulates `f(x - e_i) * w` over valid predecessors, where `w`
/// is the weight at the predecessor's height for `i = 1` and 1 otherwise.
fn diagonal_counts(
    k: usize,
    n_max: u32,
    cap: Option<i64>,
    wv: &WeightVector,
    m: Option<&BigInt>,
) -> Vec<BigInt> {
    if cap.is_some_and(|c| c < 0) {
        return vec![BigInt::zero(); n_max as usize + 1];
    }
    let mut out = Vec::with_capacity(n_max as usize + 1);
    out.push(reduced(BigInt::one(), m));
    let mut layer: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    layer.insert(vec![0u32; k], BigInt::one());
    for total in 1..=(k as u64 * u64::from(n_max)) {
        let mut next: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (point, value) in &layer {
            let h = height_of(point);
            for i in 0..k {
                if point[i] >= n_max || (i > 0 && point[i - 1] <= point[i]) {
                    continue;
                }
                if i == 0 && cap.is_some_and(|c| h + k as i64 - 1 > c) {
                    continue;
                }
                let contribution = if i == 0 {
                    value * wv.weight_at(h as usize)
                } else {
                    value.clone()
                };
                let mut key = point.clone();
                key[i] += 1;
                let slot = next.entry(key).or_insert_with(BigInt::zero);
                *slot += contribution;
                if let Some(m) = m {
                    *slot = slot.mod_floor(m);
                }
            }
        }
        layer = next;
        if total % k as u64 == 0 {
            let j = (total / k as u64) as u32;
            let diag = vec![j; k];
            out.push(layer.get(&diag).cloned().unwrap_or_else(BigInt::zero));
        }
    }
    out
}

/// Sum of path weights over all balanced ballot paths for `(k, n)`.
pub fn weighted_catalan(
    k: usize,
    n: u32,
    wv: &WeightVector,
    modulus: Option<u64>,
) -> Result<BigInt> {
    check_k(k)?;
    let m = check_modulus(modulus)?;
    Ok(diagonal_counts(k, n, None, wv, m.as_ref()).pop().unwrap())
}

/// Same sum restricted to paths whose every point has height at most `s`.
/// With all-ones weights this is the s-bounded count `C(k,s,n)`.
pub fn bounded_weighted_catalan(
    k: usize,
    s: i64,
    n: u32,
    wv: &WeightVector,
    modulus: Option<u64>,
) -> Result<BigInt> {
    check_k(k)?;
    let m = check_modulus(modulus)?;
    Ok(diagonal_counts(k, n, Some(s), wv, m.as_ref()).pop().unwrap())
}

/// The whole weighted sequence `n = 0..=n_max` from one DP sweep.
pub fn weighted_sequence(
    k: usize,
    n_max: u32,
    wv: &WeightVector,
    modulus: Option<u64>,
) -> Result<Vec<BigInt>> {
    check_k(k)?;
    let m = check_modulus(modulus)?;
    Ok(diagonal_counts(k, n_max, None, wv, m.as_ref()))
}

/// The whole bounded sequence `n = 0..=n_max` from one DP sweep.
pub fn bounded_sequence(
    k: usize,
    s: i64,
    n_max: u32,
    wv: &WeightVector,
    modulus: Option<u64>,
) -> Result<Vec<BigInt>> {
    check_k(k)?;
    let m = check_modulus(modulus)?;
    Ok(diagonal_counts(k, n_max, Some(s), wv, m.as_ref()))
}

/// Paths of maximum height exactly `s`: the bounded count at `s` minus
/// the bounded count at `s - 1`.
pub fn exact_height_count(k: usize, s: i64, n: u32, modulus: Option<u64>) -> Result<BigInt> {
    check_k(k)?;
    let m = check_modulus(modulus)?;
    let ones = WeightVector::ones();
    let hi = diagonal_counts(k, n, Some(s), &ones, m.as_ref()).pop().unwrap();
    let lo = diagonal_counts(k, n, Some(s - 1), &ones, m.as_ref()).pop().unwrap();
    Ok(reduced(hi - lo, m.as_ref()))
}

/// Number of paths with exactly `p` peaks, by a DP over records
/// `(point, last step was an up-step, peaks so far)`.
pub fn narayana_count(k: usize, p: usize, n: u32, modulus: Option<u64>) -> Result<BigInt> {
    check_k(k)?;
    let m = check_modulus(modulus)?;
    let rows = narayana_rows(k, n, m.as_ref());
    if n == 0 {
        return Ok(reduced(if p == 0 { BigInt::one() } else { BigInt::zero() }, m.as_ref()));
    }
    let row = &rows[n as usize - 1];
    Ok(row.get(p.wrapping_sub(1)).cloned().unwrap_or_else(BigInt::zero))
}

/// Peak-count distributions for every `n = 1..=n_max`; row `n` holds
/// counts for `p = 1..=n` (the largest peak count attained is always n).
fn narayana_rows(k: usize, n_max: u32, m: Option<&BigInt>) -> Vec<Vec<BigInt>> {
    // key: (point, last-was-up, peaks)
    let mut layer: BTreeMap<(Vec<u32>, bool, u32), BigInt> = BTreeMap::new();
    layer.insert((vec![0u32; k], false, 0), BigInt::one());
    let mut rows = Vec::new();
    for total in 1..=(k as u64 * u64::from(n_max)) {
        let mut next: BTreeMap<(Vec<u32>, bool, u32), BigInt> = BTreeMap::new();
        for ((point, last_up, peaks), value) in &layer {
            for i in 0..k {
                if point[i] >= n_max || (i > 0 && point[i - 1] <= point[i]) {
                    continue;
                }
                let mut key = point.clone();
                key[i] += 1;
                let entry = if i == 0 {
                    (key, true, *peaks)
                } else {
                    (key, false, peaks + u32::from(*last_up))
                };
                let slot = next.entry(entry).or_insert_with(BigInt::zero);
                *slot += value;
                if let Some(m) = m {
                    *slot = slot.mod_floor(m);
                }
            }
        }
        layer = next;
        if total % k as u64 == 0 {
            let j = (total / k as u64) as u32;
            let diag = vec![j; k];
            let mut row = vec![BigInt::zero(); j as usize];
            for ((point, _, peaks), value) in &layer {
                if *point == diag && *peaks >= 1 {
                    let slot = &mut row[*peaks as usize - 1];
                    *slot += value;
                    if let Some(m) = m {
                        *slot = slot.mod_floor(m);
                    }
                }
            }
            rows.push(row);
        }
    }
    rows
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleKind {
    Height,
    Narayana,
}

impl TriangleKind {
    pub fn name(self) -> &'static str {
        match self {
            TriangleKind::Height => "height",
            TriangleKind::Narayana => "narayana",
        }
    }
}

/// Rows `n = 1..` of one of the two triangle families. Height rows are
/// indexed by `s = k-1 .. (k-1)n`; Narayana rows by `p = 1 .. n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    pub kind: TriangleKind,
    pub k: usize,
    pub rows: Vec<Vec<BigInt>>,
}

impl Triangle {
    /// 1-based row access.
    pub fn row(&self, n: u32) -> &[BigInt] {
        &self.rows[n as usize - 1]
    }

    /// Column index of the first entry of each row.
    pub fn col_start(&self) -> i64 {
        match self.kind {
            TriangleKind::Height => self.k as i64 - 1,
            TriangleKind::Narayana => 1,
        }
    }
}

/// Exact-height counts `D(k,s,n)` for `n = 1..=n_max`, one bounded-DP
/// sweep per s value.
pub fn height_triangle(k: usize, n_max: u32, modulus: Option<u64>) -> Result<Triangle> {
    check_k(k)?;
    let m = check_modulus(modulus)?;
    let ones = WeightVector::ones();
    let s_max = (k as i64 - 1) * i64::from(n_max);
    let mut by_bound = Vec::new();
    for s in (k as i64 - 2)..=s_max {
        by_bound.push(diagonal_counts(k, n_max, Some(s), &ones, m.as_ref()));
    }
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let mut row = Vec::new();
        for s in (k as i64 - 1)..=((k as i64 - 1) * i64::from(n)) {
            let idx = (s - (k as i64 - 2)) as usize;
            let hi = &by_bound[idx][n as usize];
            let lo = &by_bound[idx - 1][n as usize];
            row.push(reduced(hi - lo, m.as_ref()));
        }
        rows.push(row);
    }
    Ok(Triangle { kind: TriangleKind::Height, k, rows })
}

/// Peak-count rows, trailing zeros trimmed (row n keeps `p = 1..=n`).
pub fn narayana_triangle(k: usize, n_max: u32, modulus: Option<u64>) -> Result<Triangle> {
    check_k(k)?;
    let m = check_modulus(modulus)?;
    let rows = narayana_rows(k, n_max, m.as_ref());
    Ok(Triangle { kind: TriangleKind::Narayana, k, rows })
}

/// Same rows padded with zeros to a rectangle of width `n_max`.
pub fn narayana_triangle_padded(k: usize, n_max: u32, modulus: Option<u64>) -> Result<Triangle> {
    let mut tri = narayana_triangle(k, n_max, modulus)?;
    for row in &mut tri.rows {
        row.resize(n_max as usize, BigInt::zero());
    }
    Ok(tri)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn ones() -> WeightVector {
        WeightVector::ones()
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(catalan_exact(3, 3, None).unwrap(), big(42));
        assert_eq!(catalan_exact(4, 2, None).unwrap(), big(14));
        assert_eq!(catalan_exact(2, 4, None).unwrap(), big(14));
        for k in 2..=6 {
            assert_eq!(catalan_exact(k, 0, None).unwrap(), big(1));
        }
        assert!(matches!(catalan_exact(1, 3, None), Err(Error::DimensionTooSmall(1))));
    }

    #[test]
    fn closed_form_symmetry() {
        for k in 2..=6 {
            for n in 2..=6 {
                assert_eq!(
                    catalan_exact(k, n, None).unwrap(),
                    catalan_exact(n as usize, k as u32, None).unwrap()
                );
            }
        }
    }

    #[test]
    fn weighted_examples() {
        let wv = WeightVector::from_prefix(vec![big(1), big(2), big(3)]);
        assert_eq!(weighted_catalan(2, 3, &wv, None).unwrap(), big(15));
        assert_eq!(weighted_catalan(3, 2, &ones(), None).unwrap(), big(5));
        let zero_first = WeightVector::new(vec![big(0)], crate::weights::Tail::Constant(big(1)));
        for n in 1..=4 {
            assert_eq!(weighted_catalan(3, n, &zero_first, None).unwrap(), big(0));
        }
    }

    #[test]
    fn bounded_examples() {
        assert_eq!(bounded_weighted_catalan(3, 4, 3, &ones(), None).unwrap(), big(27));
        for k in 2..=5usize {
            for n in 0..=6 {
                assert_eq!(
                    bounded_weighted_catalan(k, k as i64 - 1, n, &ones(), None).unwrap(),
                    big(1)
                );
            }
        }
        assert_eq!(bounded_weighted_catalan(3, 3, 4, &ones(), None).unwrap(), big(27));
    }

    #[test]
    fn bounded_saturates_to_the_closed_form() {
        for k in 2..=4usize {
            for n in 0..=4u32 {
                let s = (k as i64 - 1) * i64::from(n);
                for extra in [0, 1, 5] {
                    assert_eq!(
                        bounded_weighted_catalan(k, s + extra, n, &ones(), None).unwrap(),
                        catalan_exact(k, n, None).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn bounded_is_monotone_in_s() {
        for n in 1..=4u32 {
            let mut prev = big(0);
            for s in 0..=10 {
                let v = bounded_weighted_catalan(3, s, n, &ones(), None).unwrap();
                assert!(v >= prev);
                prev = v;
            }
        }
    }

    #[test]
    fn exact_height_examples() {
        assert_eq!(exact_height_count(3, 4, 3, None).unwrap(), big(18));
        assert_eq!(exact_height_count(3, 8, 4, None).unwrap(), big(14));
        for n in 1..=3 {
            assert_eq!(exact_height_count(3, 1, n, None).unwrap(), big(0));
            assert_eq!(exact_height_count(4, 2, n, None).unwrap(), big(0));
            assert_eq!(exact_height_count(3, 0, n, None).unwrap(), big(0));
        }
    }

    #[test]
    fn narayana_examples() {
        assert_eq!(narayana_count(3, 2, 3, None).unwrap(), big(23));
        assert_eq!(narayana_count(4, 3, 3, None).unwrap(), big(184));
        assert_eq!(narayana_count(4, 1, 4, None).unwrap(), big(462));
        assert_eq!(narayana_count(4, 1, 4, None).unwrap(), catalan_exact(3, 4, None).unwrap());
    }

    #[test]
    fn triangle_rows() {
        let t = height_triangle(3, 3, None).unwrap();
        assert_eq!(t.row(3), &[big(1), big(8), big(18), big(10), big(5)]);
        assert_eq!(t.row(1), &[big(1)]);
        let t = height_triangle(4, 2, None).unwrap();
        assert_eq!(t.row(2), &[big(1), big(3), big(5), big(5)]);

        let t = narayana_triangle(3, 4, None).unwrap();
        assert_eq!(t.row(4), &[big(14), big(131), big(233), big(84)]);
        assert_eq!(t.row(1), &[big(1)]);
        let t = narayana_triangle(4, 2, None).unwrap();
        assert_eq!(t.row(2), &[big(5), big(9)]);
    }

    #[test]
    fn triangle_row_shapes_and_sums() {
        for k in 2..=5usize {
            let n_max = 6;
            let ht = height_triangle(k, n_max, None).unwrap();
            let nt = narayana_triangle(k, n_max, None).unwrap();
            for n in 1..=n_max {
                let c = catalan_exact(k, n, None).unwrap();
                let hrow = ht.row(n);
                assert_eq!(hrow.len(), (k - 1) * (n as usize - 1) + 1);
                assert_eq!(hrow.iter().sum::<BigInt>(), c);
                assert!(hrow.iter().all(|v| v >= &big(0)));
                let nrow = nt.row(n);
                assert_eq!(nrow.len(), n as usize);
                assert_eq!(nrow.iter().sum::<BigInt>(), c);
            }
        }
    }

    #[test]
    fn padded_narayana_is_rectangular() {
        let t = narayana_triangle_padded(3, 4, None).unwrap();
        for row in &t.rows {
            assert_eq!(row.len(), 4);
        }
        assert_eq!(t.row(2), &[big(2), big(3), big(0), big(0)]);
    }

    #[test]
    fn weighted_bounded_identity() {
        // zeroing weights from index t makes the count agree with the
        // (t+k-2)-bounded one: up-steps cannot cross above t+k-2 with a
        // nonzero weight.
        let wv = WeightVector::from_prefix(vec![big(2), big(-1), big(3), big(5), big(1)]);
        for k in 2..=4usize {
            for t in 1..=3i64 {
                let z = wv.zero_from(t as usize);
                for n in 0..=4u32 {
                    assert_eq!(
                        weighted_catalan(k, n, &z, None).unwrap(),
                        bounded_weighted_catalan(k, t + k as i64 - 2, n, &z, None).unwrap(),
                        "k={k} t={t} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn unweighted_bound_matches_unit_prefix_of_length_s_minus_k_plus_2() {
        // the bounded count equals the weighted count whose weights are 1
        // on exactly the s-k+2 reachable up-step heights and 0 beyond
        for k in 2..=4usize {
            for s in (k as i64 - 1)..=6 {
                let t = (s - k as i64 + 2) as usize;
                let unit_prefix = WeightVector::ones().zero_from(t);
                for n in 0..=4u32 {
                    assert_eq!(
                        bounded_weighted_catalan(k, s, n, &ones(), None).unwrap(),
                        weighted_catalan(k, n, &unit_prefix, None).unwrap(),
                        "k={k} s={s} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn modulus_consistency() {
        let wv = WeightVector::from_prefix(vec![big(3), big(-2), big(7)]);
        for m in [2u64, 3, 5, 27, 97] {
            let mb = BigInt::from(m);
            for n in 0..=4u32 {
                let exact = catalan_exact(3, n, None).unwrap();
                assert_eq!(catalan_exact(3, n, Some(m)).unwrap(), exact.mod_floor(&mb));
                let exact = weighted_catalan(3, n, &wv, None).unwrap();
                assert_eq!(weighted_catalan(3, n, &wv, Some(m)).unwrap(), exact.mod_floor(&mb));
                let exact = bounded_weighted_catalan(3, 4, n, &wv, None).unwrap();
                assert_eq!(
                    bounded_weighted_catalan(3, 4, n, &wv, Some(m)).unwrap(),
                    exact.mod_floor(&mb)
                );
                if n >= 1 {
                    let exact = exact_height_count(3, 4, n, None).unwrap();
                    assert_eq!(
                        exact_height_count(3, 4, n, Some(m)).unwrap(),
                        exact.mod_floor(&mb)
                    );
                    let exact = narayana_count(3, 2, n, None).unwrap();
                    assert_eq!(narayana_count(3, 2, n, Some(m)).unwrap(), exact.mod_floor(&mb));
                }
            }
        }
    }

    #[test]
    fn modulus_one_gives_zero() {
        assert_eq!(catalan_exact(3, 3, Some(1)).unwrap(), big(0));
        assert_eq!(weighted_catalan(2, 3, &ones(), Some(1)).unwrap(), big(0));
        assert!(matches!(
            catalan_exact(3, 3, Some(0)),
            Err(Error::ModulusTooSmall { got: 0, min: 1 })
        ));
    }

    #[test]
    fn counts_match_full_enumeration() {
        for (k, n) in [(2usize, 6u32), (3, 3), (4, 2)] {
            let total = crate::lattice::enumerate_paths(k, n, None).unwrap().count();
            assert_eq!(BigInt::from(total), catalan_exact(k, n, None).unwrap());
        }
    }
}
