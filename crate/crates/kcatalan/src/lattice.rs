//! Points, steps, and balanced ballot paths in the dominance lattice.
//!
//! A balanced ballot path of `k*n` unit steps runs from the origin to
//! `(n, .., n)` in `Z^k` so that every visited point `x` satisfies the
//! dominance chain `x1 >= x2 >= .. >= xk`. The height of a point is
//! `(k-1)*x1 - (x2 + .. + xk)`, the Manhattan distance from `x` to the
//! diagonal point `(x1, .., x1)`. A step in direction `e1` (an up-step)
//! raises the height by `k-1`; every other step lowers it by 1.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::weights::WeightVector;

/// A point of the k-dimensional lattice, k >= 2.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    coords: Vec<u32>,
}

impl LatticePoint {
    pub fn new(coords: Vec<u32>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::DimensionTooSmall(coords.len()));
        }
        Ok(Self { coords })
    }

    pub fn k(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    /// `(k-1)*x1 - sum(x2..xk)`; nonnegative whenever the point is
    /// dominance-valid.
    pub fn height(&self) -> i64 {
        height_of(&self.coords)
    }

    /// Whether the dominance chain `x1 >= x2 >= .. >= xk` holds.
    pub fn is_dominant(&self) -> bool {
        is_dominant(&self.coords)
    }
}

pub(crate) fn height_of(coords: &[u32]) -> i64 {
    let k = coords.len() as i64;
    let rest: i64 = coords[1..].iter().map(|&c| i64::from(c)).sum();
    (k - 1) * i64::from(coords[0]) - rest
}

pub(crate) fn is_dominant(coords: &[u32]) -> bool {
    coords.windows(2).all(|w| w[0] >= w[1])
}

/// Computes the height of a point given as raw coordinates.
pub fn height(p: &LatticePoint) -> i64 {
    p.height()
}

/// Outcome of checking a raw step sequence against the path conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathDiagnostics {
    pub valid: bool,
    /// 1-based length of the shortest offending prefix, when dominance
    /// fails somewhere. `None` for valid paths and for sequences that
    /// keep dominance but end unbalanced.
    pub first_violation: Option<usize>,
    pub reason: Option<String>,
}

impl PathDiagnostics {
    fn ok() -> Self {
        PathDiagnostics { valid: true, first_violation: None, reason: None }
    }
}

/// Checks that every prefix of `steps` is dominance-valid and that each
/// direction is used equally often. Directions are 1-based indices.
pub fn validate_path(k: usize, steps: &[u8]) -> Result<PathDiagnostics> {
    if k < 2 {
        return Err(Error::DimensionTooSmall(k));
    }
    for &d in steps {
        if d == 0 || usize::from(d) > k {
            return Err(Error::DirectionOutOfRange { direction: usize::from(d), k });
        }
    }
    let mut point = vec![0u32; k];
    for (i, &d) in steps.iter().enumerate() {
        let dir = usize::from(d) - 1;
        point[dir] += 1;
        if dir > 0 && point[dir - 1] < point[dir] {
            return Ok(PathDiagnostics {
                valid: false,
                first_violation: Some(i + 1),
                reason: Some(format!(
                    "dominance violated after step {} (coordinate {} exceeds coordinate {})",
                    i + 1,
                    dir + 1,
                    dir
                )),
            });
        }
    }
    if !steps.len().is_multiple_of(k) || point.iter().any(|&c| c != point[0]) {
        return Ok(PathDiagnostics {
            valid: false,
            first_violation: None,
            reason: Some("unbalanced: direction counts differ".to_string()),
        });
    }
    Ok(PathDiagnostics::ok())
}

/// A validated balanced ballot path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallotPath {
    k: usize,
    steps: Vec<u8>,
}

impl BallotPath {
    pub fn new(k: usize, steps: Vec<u8>) -> Result<Self> {
        let diag = validate_path(k, &steps)?;
        if !diag.valid {
            return Err(Error::InvalidPath {
                reason: diag.reason.unwrap_or_else(|| "unknown".to_string()),
            });
        }
        Ok(Self { k, steps })
    }

    /// Skips validation; the enumerator only produces valid paths.
    fn new_unchecked(k: usize, steps: Vec<u8>) -> Self {
        Self { k, steps }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of round trips: `steps.len() / k`.
    pub fn n(&self) -> u32 {
        (self.steps.len() / self.k) as u32
    }

    pub fn steps(&self) -> &[u8] {
        &self.steps
    }
}

/// Per-path statistics: the maximum height over all visited points, the
/// number of peaks (an up-step immediately followed by a down-step), and
/// the height at the start of each up-step, in path order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathStats {
    pub max_height: i64,
    pub peak_count: usize,
    pub up_step_start_heights: Vec<i64>,
}

/// Walks the path once, accumulating stats incrementally.
pub fn path_stats(path: &BallotPath) -> PathStats {
    let k = path.k as i64;
    let mut h: i64 = 0;
    let mut max_height = 0;
    let mut peak_count = 0;
    let mut ups = Vec::new();
    let mut last_was_up = false;
    for &d in &path.steps {
        if d == 1 {
            ups.push(h);
            h += k - 1;
            last_was_up = true;
        } else {
            if last_was_up {
                peak_count += 1;
            }
            h -= 1;
            last_was_up = false;
        }
        max_height = max_height.max(h);
    }
    PathStats { max_height, peak_count, up_step_start_heights: ups }
}

/// Product of the weight at the starting height of each up-step.
/// The empty path has weight 1.
pub fn path_weight(path: &BallotPath, wv: &WeightVector) -> BigInt {
    let k = path.k as i64;
    let mut h: i64 = 0;
    let mut acc = BigInt::one();
    for &d in &path.steps {
        if d == 1 {
            acc *= wv.weight_at(h as usize);
            h += k - 1;
        } else {
            h -= 1;
        }
    }
    acc
}

/// Lexicographic stream of all balanced ballot paths for `(k, n)`,
/// optionally restricted to points of height at most `height_cap`.
///
/// Backtracking over step prefixes with incremental dominance and height
/// checks; memory stays O(k*n).
pub fn enumerate_paths(k: usize, n: u32, height_cap: Option<i64>) -> Result<PathIter> {
    if k < 2 {
        return Err(Error::DimensionTooSmall(k));
    }
    if let Some(cap) = height_cap {
        if cap < 0 {
            return Err(Error::NegativeHeightCap(cap));
        }
    }
    Ok(PathIter {
        k,
        n,
        cap: height_cap,
        steps: Vec::with_capacity(k * n as usize),
        point: vec![0u32; k],
        height: 0,
        state: IterState::Fresh,
    })
}

enum IterState {
    Fresh,
    Running,
    Done,
}

pub struct PathIter {
    k: usize,
    n: u32,
    cap: Option<i64>,
    steps: Vec<u8>,
    point: Vec<u32>,
    height: i64,
    state: IterState,
}

impl PathIter {
    /// Tries to append direction `d` (0-based); true on success.
    fn try_push(&mut self, d: usize) -> bool {
        if self.point[d] >= self.n {
            return false;
        }
        if d > 0 && self.point[d - 1] <= self.point[d] {
            return false;
        }
        if d == 0 {
            let new_h = self.height + self.k as i64 - 1;
            if let Some(cap) = self.cap {
                if new_h > cap {
                    return false;
                }
            }
            self.height = new_h;
        } else {
            self.height -= 1;
        }
        self.point[d] += 1;
        self.steps.push(d as u8 + 1);
        true
    }

    /// Removes the last step and returns its 0-based direction.
    fn pop(&mut self) -> usize {
        let d = usize::from(self.steps.pop().expect("pop on empty prefix")) - 1;
        self.point[d] -= 1;
        if d == 0 {
            self.height -= self.k as i64 - 1;
        } else {
            self.height += 1;
        }
        d
    }

    /// Extends the current prefix greedily with the smallest valid
    /// direction until the path is complete. False if stuck.
    fn extend_to_leaf(&mut self) -> bool {
        let total = self.k * self.n as usize;
        while self.steps.len() < total {
            let mut pushed = false;
            for d in 0..self.k {
                if self.try_push(d) {
                    pushed = true;
                    break;
                }
            }
            if !pushed {
                return false;
            }
        }
        true
    }

    /// Backtracks to the next unexplored branch and descends; false when
    /// the whole tree is exhausted.
    fn advance(&mut self) -> bool {
        loop {
            // Pop until some popped direction has a larger valid sibling.
            loop {
                if self.steps.is_empty() {
                    return false;
                }
                let d = self.pop();
                let mut moved = false;
                for nd in d + 1..self.k {
                    if self.try_push(nd) {
                        moved = true;
                        break;
                    }
                }
                if moved {
                    break;
                }
            }
            if self.extend_to_leaf() {
                return true;
            }
        }
    }
}

impl Iterator for PathIter {
    type Item = BallotPath;

    fn next(&mut self) -> Option<BallotPath> {
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => {
                self.state = IterState::Running;
                if !self.extend_to_leaf() {
                    // A dead end before the first leaf can only happen for
                    // n >= 1 with an over-tight cap; n = 0 yields the empty path.
                    if !self.advance() {
                        self.state = IterState::Done;
                        return None;
                    }
                }
            }
            IterState::Running => {
                if !self.advance() {
                    self.state = IterState::Done;
                    return None;
                }
            }
        }
        Some(BallotPath::new_unchecked(self.k, self.steps.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::WeightVector;
    use num_bigint::BigInt;

    fn pt(coords: &[u32]) -> LatticePoint {
        LatticePoint::new(coords.to_vec()).unwrap()
    }

    #[test]
    fn height_examples() {
        assert_eq!(pt(&[0, 0, 0]).height(), 0);
        assert_eq!(pt(&[2, 1, 0]).height(), 3);
        assert_eq!(pt(&[3, 3, 0]).height(), 3);
    }

    #[test]
    fn height_rejects_k_below_two() {
        assert_eq!(LatticePoint::new(vec![1]), Err(Error::DimensionTooSmall(1)));
    }

    #[test]
    fn validate_examples() {
        let d = validate_path(3, &[1, 2, 3]).unwrap();
        assert!(d.valid);
        let d = validate_path(2, &[2, 1]).unwrap();
        assert!(!d.valid);
        assert_eq!(d.first_violation, Some(1));
        let d = validate_path(3, &[1, 1, 2, 3, 2, 3]).unwrap();
        assert!(d.valid);
    }

    #[test]
    fn validate_rejects_bad_direction() {
        assert_eq!(
            validate_path(2, &[1, 3]),
            Err(Error::DirectionOutOfRange { direction: 3, k: 2 })
        );
    }

    #[test]
    fn validate_flags_unbalanced() {
        let d = validate_path(2, &[1, 1, 2]).unwrap();
        assert!(!d.valid);
        assert_eq!(d.first_violation, None);
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate_paths(2, 3, None).unwrap().count(), 5);
        let only: Vec<_> = enumerate_paths(3, 1, None).unwrap().collect();
        assert_eq!(only.len(), 1);
        assert_eq!(only[0].steps(), &[1, 2, 3]);
        assert_eq!(enumerate_paths(3, 2, None).unwrap().count(), 5);
    }

    #[test]
    fn enumerate_n_zero_yields_empty_path() {
        let paths: Vec<_> = enumerate_paths(4, 0, None).unwrap().collect();
        assert_eq!(paths.len(), 1);
        assert!(paths[0].steps().is_empty());
    }

    #[test]
    fn enumerate_is_lexicographic_and_valid() {
        let paths: Vec<_> = enumerate_paths(3, 3, None).unwrap().collect();
        for w in paths.windows(2) {
            assert!(w[0].steps() < w[1].steps());
        }
        for p in &paths {
            assert!(validate_path(3, p.steps()).unwrap().valid);
        }
    }

    #[test]
    fn enumerate_with_cap_filters_by_max_height() {
        let all: Vec<_> = enumerate_paths(3, 3, None).unwrap().collect();
        let capped: Vec<_> = enumerate_paths(3, 3, Some(4)).unwrap().collect();
        let expected: Vec<_> =
            all.iter().filter(|p| path_stats(p).max_height <= 4).cloned().collect();
        assert_eq!(capped, expected);
    }

    #[test]
    fn loose_cap_changes_nothing() {
        let all: Vec<_> = enumerate_paths(3, 3, None).unwrap().collect();
        let capped: Vec<_> = enumerate_paths(3, 3, Some(6)).unwrap().collect();
        assert_eq!(all, capped);
    }

    #[test]
    fn stats_examples() {
        let p = BallotPath::new(2, vec![1, 1, 2, 1, 2, 2, 1, 2]).unwrap();
        assert_eq!(path_stats(&p).peak_count, 3);

        let p = BallotPath::new(3, vec![1, 2, 3, 1, 2, 3]).unwrap();
        let s = path_stats(&p);
        assert_eq!(s.peak_count, 2);
        assert_eq!(s.max_height, 2);
        assert_eq!(s.up_step_start_heights, vec![0, 0]);

        let p = BallotPath::new(3, vec![1, 1, 1, 2, 2, 2, 3, 3, 3]).unwrap();
        let s = path_stats(&p);
        assert_eq!(s.peak_count, 1);
        assert_eq!(s.max_height, 6);
    }

    #[test]
    fn weight_examples() {
        let p = BallotPath::new(2, vec![1, 1, 2, 1, 2, 2, 1, 2]).unwrap();
        let wv = WeightVector::from_prefix(vec![2.into(), 3.into()]);
        // shape b0^2 b1^2 -> 4 * 9
        assert_eq!(path_weight(&p, &wv), BigInt::from(36));

        let staircase = BallotPath::new(3, vec![1, 2, 3, 1, 2, 3, 1, 2, 3]).unwrap();
        let wv = WeightVector::from_prefix(vec![5.into()]);
        assert_eq!(path_weight(&staircase, &wv), BigInt::from(125));

        // third path of the 5-path family for (2,3): shape b0^2 b1
        let p = BallotPath::new(2, vec![1, 1, 2, 2, 1, 2]).unwrap();
        let wv = WeightVector::from_prefix(vec![1.into(), 2.into(), 3.into()]);
        assert_eq!(path_weight(&p, &wv), BigInt::from(2));

        let empty = BallotPath::new(2, vec![]).unwrap();
        assert_eq!(path_weight(&empty, &wv), BigInt::from(1));
    }

    #[test]
    fn heights_step_by_k_minus_one_up_and_one_down() {
        for (k, n) in [(2usize, 4u32), (3, 3), (4, 2)] {
            for p in enumerate_paths(k, n, None).unwrap() {
                let mut point = vec![0u32; k];
                let mut prev = 0i64;
                for &d in p.steps() {
                    point[usize::from(d) - 1] += 1;
                    let h = height_of(&point);
                    if d == 1 {
                        assert_eq!(h - prev, k as i64 - 1);
                    } else {
                        assert_eq!(h - prev, -1);
                    }
                    prev = h;
                }
            }
        }
    }

    #[test]
    fn every_nonempty_path_reaches_k_minus_one_and_has_a_peak() {
        for (k, n) in [(2usize, 5u32), (3, 3), (4, 2), (5, 2), (6, 1)] {
            for p in enumerate_paths(k, n, None).unwrap() {
                let s = path_stats(&p);
                assert!(s.max_height >= k as i64 - 1);
                assert!(s.peak_count >= 1);
            }
        }
    }
}
