//! Transfer matrices for bounded weighted counts.
//!
//! After every k steps a bounded path sits on a boundary point whose
//! diagonal-translation class determines everything that can still
//! happen: height and dominance are invariant under adding `(1,..,1)`.
//! States are those classes, represented with minimum coordinate 0.
//! Entry `[i][j]` is the total weight of admissible k-step continuations
//! from state i whose endpoint normalizes to state j, so the first
//! coordinate of `M^n * e1` is the n-th bounded weighted count.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{height_of, is_dominant};
use crate::weights::WeightVector;

/// A square exact-integer matrix over normalized boundary states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferMatrix {
    states: Vec<Vec<u32>>,
    entries: Vec<Vec<BigInt>>,
}

impl TransferMatrix {
    pub fn states(&self) -> &[Vec<u32>] {
        &self.states
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.states.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }
}

fn reduce_entry(v: &mut BigInt, m: Option<&BigInt>) {
    if let Some(m) = m {
        *v = v.mod_floor(m);
    }
}

/// Discovers the state classes reachable from the origin under repeated
/// k-step transitions that keep every intermediate point dominance-valid
/// and of height at most `s`, and fills in the transition weights.
///
/// States are presented in lexicographic order of their normalized
/// tuples, so the origin class is always index 0. Reachability is a
/// property of admissible step sequences alone; weights only scale the
/// entries (possibly to zero).
pub fn build_transfer_matrix(
    k: usize,
    s: i64,
    wv: &WeightVector,
    modulus: Option<u64>,
) -> Result<TransferMatrix> {
    if k < 2 {
        return Err(Error::DimensionTooSmall(k));
    }
    if s < k as i64 - 1 {
        return Err(Error::BoundBelowMinimum { k, bound: s, min: k as i64 - 1 });
    }
    let m = match modulus {
        None => None,
        Some(0) => return Err(Error::ModulusTooSmall { got: 0, min: 1 }),
        Some(m) => Some(BigInt::from(m)),
    };

    let walker = Walker { k, bound: s, wv, modulus: m };
    let origin = vec![0u32; k];
    let mut discovered: Vec<Vec<u32>> = vec![origin];
    let mut transitions: BTreeMap<Vec<u32>, BTreeMap<Vec<u32>, BigInt>> = BTreeMap::new();
    let mut frontier = 0;
    while frontier < discovered.len() {
        let src = discovered[frontier].clone();
        frontier += 1;
        let mut row: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        let mut point = src.clone();
        walker.walk(&mut point, k, BigInt::one(), &mut row);
        for target in row.keys() {
            if !discovered.contains(target) {
                discovered.push(target.clone());
            }
        }
        transitions.insert(src, row);
    }

    discovered.sort();
    let index: BTreeMap<&Vec<u32>, usize> =
        discovered.iter().enumerate().map(|(i, st)| (st, i)).collect();
    let dim = discovered.len();
    let mut entries = vec![vec![BigInt::zero(); dim]; dim];
    for (src, row) in &transitions {
        let i = index[src];
        for (dst, w) in row {
            entries[i][index[dst]] = w.clone();
        }
    }
    Ok(TransferMatrix { states: discovered, entries })
}

struct Walker<'a> {
    k: usize,
    bound: i64,
    wv: &'a WeightVector,
    modulus: Option<BigInt>,
}

impl Walker<'_> {
    /// Walks every admissible continuation of `steps_left` steps, adding
    /// the accumulated weight to the bucket of the endpoint's normalized
    /// class.
    fn walk(
        &self,
        point: &mut Vec<u32>,
        steps_left: usize,
        weight: BigInt,
        acc: &mut BTreeMap<Vec<u32>, BigInt>,
    ) {
        if steps_left == 0 {
            let min = *point.iter().min().unwrap();
            let class: Vec<u32> = point.iter().map(|&c| c - min).collect();
            let slot = acc.entry(class).or_insert_with(BigInt::zero);
            *slot += weight;
            reduce_entry(slot, self.modulus.as_ref());
            return;
        }
        let h = height_of(point);
        for i in 0..self.k {
            point[i] += 1;
            if is_dominant(point) && height_of(point) <= self.bound {
                let w = if i == 0 {
                    &weight * self.wv.weight_at(h as usize)
                } else {
                    weight.clone()
                };
                self.walk(point, steps_left - 1, w, acc);
            }
            point[i] -= 1;
        }
    }
}

/// The explicit truncated tridiagonal matrix of the two-dimensional
/// recurrence: row 0 is `[b0, b0*b1, 0, ..]` and row i is
/// `[.., 1, b(2i-1)+b(2i), b(2i)*b(2i+1), ..]`. Coded independently of
/// the general builder so the two can cross-check each other at k = 2.
pub fn two_dim_lemma_matrix(wv: &WeightVector, size: usize, modulus: Option<u64>) -> TransferMatrix {
    let m = modulus.map(BigInt::from);
    let states: Vec<Vec<u32>> = (0..size).map(|i| vec![2 * i as u32, 0]).collect();
    let mut entries = vec![vec![BigInt::zero(); size]; size];
    if size == 0 {
        return TransferMatrix { states, entries };
    }
    entries[0][0] = wv.weight_at(0);
    if size > 1 {
        entries[0][1] = wv.weight_at(0) * wv.weight_at(1);
    }
    for i in 1..size {
        entries[i][i - 1] = BigInt::one();
        entries[i][i] = wv.weight_at(2 * i - 1) + wv.weight_at(2 * i);
        if i + 1 < size {
            entries[i][i + 1] = wv.weight_at(2 * i) * wv.weight_at(2 * i + 1);
        }
    }
    for row in &mut entries {
        for v in row.iter_mut() {
            reduce_entry(v, m.as_ref());
        }
    }
    TransferMatrix { states, entries }
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>], m: Option<&BigInt>) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for l in 0..n {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][l] * &b[l][j];
            }
        }
        for v in &mut out[i] {
            reduce_entry(v, m);
        }
    }
    out
}

/// `M^n` by binary exponentiation, over the same state list.
pub fn mat_pow(matrix: &TransferMatrix, n: u32, modulus: Option<u64>) -> TransferMatrix {
    let m = modulus.map(BigInt::from);
    let dim = matrix.dim();
    let mut result: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    if let Some(mb) = m.as_ref() {
        for row in &mut result {
            for v in row.iter_mut() {
                reduce_entry(v, Some(mb));
            }
        }
    }
    let mut base = matrix.entries.clone();
    if let Some(mb) = m.as_ref() {
        for row in &mut base {
            for v in row.iter_mut() {
                reduce_entry(v, Some(mb));
            }
        }
    }
    let mut exp = n;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mat_mul(&result, &base, m.as_ref());
        }
        exp >>= 1;
        if exp > 0 {
            base = mat_mul(&base, &base, m.as_ref());
        }
    }
    TransferMatrix { states: matrix.states.clone(), entries: result }
}

/// First coordinates of `M^n * e1` for `n = 0..=n_max`, by iterated
/// matrix-vector products.
pub fn sequence_from_matrix(
    matrix: &TransferMatrix,
    n_max: u32,
    modulus: Option<u64>,
) -> Vec<BigInt> {
    let m = modulus.map(BigInt::from);
    let dim = matrix.dim();
    let mut v = vec![BigInt::zero(); dim];
    v[0] = BigInt::one();
    if let Some(mb) = m.as_ref() {
        v[0] = v[0].mod_floor(mb);
    }
    let mut out = Vec::with_capacity(n_max as usize + 1);
    out.push(v[0].clone());
    for _ in 0..n_max {
        let mut next = vec![BigInt::zero(); dim];
        for (i, row) in matrix.entries.iter().enumerate() {
            for (j, w) in row.iter().enumerate() {
                if !w.is_zero() && !v[j].is_zero() {
                    next[i] += w * &v[j];
                }
            }
            reduce_entry(&mut next[i], m.as_ref());
        }
        v = next;
        out.push(v[0].clone());
    }
    out
}

/// True when `seq[n] = sum coeffs[j] * seq[n-1-j]` for every index
/// from `burn_in + coeffs.len()` on. Vacuously true when the sequence is
/// too short to check anything.
pub fn check_scalar_recurrence(seq: &[BigInt], coeffs: &[BigInt], burn_in: usize) -> bool {
    let order = coeffs.len();
    for n in (burn_in + order)..seq.len() {
        let mut acc = BigInt::zero();
        for (j, c) in coeffs.iter().enumerate() {
            acc += c * &seq[n - 1 - j];
        }
        if acc != seq[n] {
            return false;
        }
    }
    true
}

/// Whether some simultaneous row/column permutation carries `a` onto `b`.
pub fn permutation_equivalent(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> bool {
    let n = a.len();
    if b.len() != n {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    permute_search(a, b, &mut perm, 0)
}

fn permute_search(a: &[Vec<BigInt>], b: &[Vec<BigInt>], perm: &mut Vec<usize>, depth: usize) -> bool {
    let n = a.len();
    if depth == n {
        return (0..n).all(|i| (0..n).all(|j| a[i][j] == b[perm[i]][perm[j]]));
    }
    for i in depth..n {
        perm.swap(depth, i);
        // prune on the already-fixed top-left block
        let consistent = (0..=depth).all(|r| {
            (0..=depth).all(|c| a[r][c] == b[perm[r]][perm[c]])
        });
        if consistent && permute_search(a, b, perm, depth + 1) {
            perm.swap(depth, i);
            return true;
        }
        perm.swap(depth, i);
    }
    false
}
