//! Pinned reference data for the verification suites: published triangle
//! rows for the 3- and 4-dimensional families, and the small bounded
//! systems re-derived by hand from their step-by-step transition counts.

use num_bigint::BigInt;

use crate::weights::WeightVector;

/// Published rows of the 3-dimensional height triangle, n = 1..6,
/// columns s = 2..2n. Row 5 carries a known transcription error: the
/// entry at height 5 reads 1481 where exhaustive enumeration gives 1480
/// (the row must sum to 6006).
pub const HEIGHT3_ROWS: [&[u64]; 6] = [
    &[1],
    &[1, 2, 2],
    &[1, 8, 18, 10, 5],
    &[1, 26, 120, 142, 117, 42, 14],
    &[1, 80, 720, 1481, 1789, 1130, 596, 168, 42],
    &[1, 242, 4122, 13680, 23205, 20940, 14817, 6936, 2781, 660, 132],
];

/// Row 5 with the enumeration-verified entry at height 5.
pub const HEIGHT3_ROW5_VERIFIED: &[u64] = &[1, 80, 720, 1480, 1789, 1130, 596, 168, 42];

/// Published rows of the 4-dimensional height triangle, n = 1..4,
/// columns s = 3..3n.
pub const HEIGHT4_ROWS: [&[u64]; 4] = [
    &[1],
    &[1, 3, 5, 5],
    &[1, 15, 68, 147, 105, 84, 42],
    &[1, 63, 722, 3098, 4720, 5940, 5112, 2520, 1386, 462],
];

/// Published rows of the 3-dimensional Narayana triangle, n = 1..6,
/// columns p = 1..n.
pub const NARAYANA3_ROWS: [&[u64]; 6] = [
    &[1],
    &[2, 3],
    &[5, 23, 14],
    &[14, 131, 233, 84],
    &[42, 664, 2339, 2367, 594],
    &[132, 3166, 18520, 36265, 24714, 4719],
];

/// Published rows of the 4-dimensional Narayana triangle, n = 1..6.
pub const NARAYANA4_ROWS: [&[u64]; 6] = [
    &[1],
    &[5, 9],
    &[42, 236, 184],
    &[462, 5354, 12268, 5940],
    &[6006, 118914, 543119, 737129, 257636],
    &[87516, 2653224, 20245479, 53243052, 50245691, 13754842],
];

fn b(wv: &WeightVector, h: usize) -> BigInt {
    wv.weight_at(h)
}

/// The k-bounded two-state system over the diagonal class and
/// `(2,1,..,1,0)`:
///
/// ```text
/// [ b0    b0*b1      ]
/// [ k-1   (k-1)*b1   ]
/// ```
pub fn k_bounded_matrix(k: usize, wv: &WeightVector) -> Vec<Vec<BigInt>> {
    let km1 = BigInt::from(k as u64 - 1);
    vec![
        vec![b(wv, 0), b(wv, 0) * b(wv, 1)],
        vec![km1.clone(), km1 * b(wv, 1)],
    ]
}

/// The 4-bounded 3-dimensional system over (0,0,0), (2,1,0), (3,3,0).
pub fn four_bounded_matrix(wv: &WeightVector) -> Vec<Vec<BigInt>> {
    let (b0, b1, b2) = (b(wv, 0), b(wv, 1), b(wv, 2));
    vec![
        vec![b0.clone(), &b0 * (&b1 + &b2), BigInt::from(0)],
        vec![BigInt::from(2), 2 * (&b1 + &b2), b2.clone()],
        vec![BigInt::from(1), &b1 + &b2, b2.clone()],
    ]
}

/// The 5-bounded 3-dimensional system over the same three states. The
/// bottom-right entry is 2*b3 + b2: of the three admissible
/// continuations from the (3,3,0) class back to itself, two start their
/// up-step at height 3 and one at height 2. (A published form of this
/// system shows 2*(b1+b2+b3) there, which contradicts both the
/// transition count and the bounded sequence 1, 5, 37, 289, ..)
pub fn five_bounded_matrix(wv: &WeightVector) -> Vec<Vec<BigInt>> {
    let (b0, b1, b2, b3) = (b(wv, 0), b(wv, 1), b(wv, 2), b(wv, 3));
    vec![
        vec![b0.clone(), &b0 * (&b1 + &b2), BigInt::from(0)],
        vec![BigInt::from(2), 2 * (&b1 + &b2 + &b3), &b2 + &b3],
        vec![BigInt::from(1), &b1 + &b2 + &b3, 2 * &b3 + &b2],
    ]
}

/// The unweighted 6-bounded 3-dimensional system over the six classes
/// (0,0,0), (2,1,0), (3,3,0), (3,0,0), (4,2,0), (5,4,0), in that order.
/// Re-derived by counting admissible 3-step continuations; its sequence
/// 1, 5, 42, 406, 4070, 41250 reproduces the 6-bounded counts, which
/// pins the handful of entries that published forms misprint.
pub fn six_bounded_ones_matrix() -> Vec<Vec<BigInt>> {
    [
        [1, 2, 0, 1, 0, 0],
        [2, 6, 2, 2, 2, 0],
        [1, 3, 3, 0, 2, 1],
        [0, 2, 1, 1, 1, 0],
        [0, 3, 3, 1, 2, 1],
        [0, 1, 3, 0, 1, 2],
    ]
    .iter()
    .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
    .collect()
}

/// `C(2,3)` as a polynomial in the first three weights:
/// `b0^3 + 2 b0^2 b1 + b0 b1^2 + b0 b1 b2`.
pub fn weighted_two_dim_three_polynomial(b0: &BigInt, b1: &BigInt, b2: &BigInt) -> BigInt {
    b0 * b0 * b0 + 2 * (b0 * b0 * b1) + b0 * (b1 * b1) + b0 * b1 * b2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_rows_sum_to_the_closed_form_except_the_erratum() {
        use crate::counting::catalan_exact;
        for (i, row) in HEIGHT3_ROWS.iter().enumerate() {
            let n = i as u32 + 1;
            let sum: u64 = row.iter().sum();
            let c = catalan_exact(3, n, None).unwrap();
            if n == 5 {
                assert_eq!(BigInt::from(sum), &c + 1);
                assert_eq!(
                    BigInt::from(HEIGHT3_ROW5_VERIFIED.iter().sum::<u64>()),
                    c
                );
            } else {
                assert_eq!(BigInt::from(sum), c);
            }
        }
        for (i, row) in HEIGHT4_ROWS.iter().enumerate() {
            let sum: u64 = row.iter().sum();
            assert_eq!(BigInt::from(sum), catalan_exact(4, i as u32 + 1, None).unwrap());
        }
        for (i, row) in NARAYANA3_ROWS.iter().enumerate() {
            let sum: u64 = row.iter().sum();
            assert_eq!(BigInt::from(sum), catalan_exact(3, i as u32 + 1, None).unwrap());
        }
        for (i, row) in NARAYANA4_ROWS.iter().enumerate() {
            let sum: u64 = row.iter().sum();
            assert_eq!(BigInt::from(sum), catalan_exact(4, i as u32 + 1, None).unwrap());
        }
    }
}
