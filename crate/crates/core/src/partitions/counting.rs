use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `p(k, j, n)`: partitions of `n` into at most `j` parts, each at most `k`.
pub fn count_bounded_partitions(k: usize, j: usize, n: usize) -> BigUint {
    count_bounded_partitions_batch(&[(k, j, n)]).swap_remove(0)
}

/// Evaluates many `p(k, j, n)` queries with a single sweep over the largest
/// allowed part.
///
/// Writing `P_i(t, n)` for partitions of `n` into at most `i` parts each at
/// most `t`, the sweep keeps one vector `P_i(t, ·)` per `i ≤ j_max` and
/// advances `t` with
///
/// ```text
/// P_i(t, n) = P_i(t−1, n) + P_{i−1}(t, n−t)
/// ```
///
/// (either no part equals `t`, or strip one part of size `t`). A query with
/// largest-part bound `k` is answered once the sweep reaches `t = k`.
pub fn count_bounded_partitions_batch(queries: &[(usize, usize, usize)]) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); queries.len()];
    let mut pending: Vec<usize> = Vec::new();
    for (qi, &(k, j, n)) in queries.iter().enumerate() {
        // saturating: n > jk has no partitions in the box
        if (n as u128) > (j as u128) * (k as u128) {
            continue;
        }
        if n == 0 {
            out[qi] = BigUint::one();
            continue;
        }
        pending.push(qi);
    }
    if pending.is_empty() {
        return out;
    }
    pending.sort_by_key(|&qi| queries[qi].0);

    let j_max = pending.iter().map(|&qi| queries[qi].1).max().unwrap_or(0);
    let n_max = pending.iter().map(|&qi| queries[qi].2).max().unwrap_or(0);
    let t_max = queries[*pending.last().unwrap()].0;

    // t = 0: only the empty partition
    let mut table: Vec<Vec<BigUint>> = (0..=j_max)
        .map(|_| {
            let mut v = vec![BigUint::zero(); n_max + 1];
            v[0] = BigUint::one();
            v
        })
        .collect();

    let mut next = 0;
    for t in 0..=t_max {
        if t > 0 {
            for i in 1..=j_max {
                let (lower, upper) = table.split_at_mut(i);
                let prev = &lower[i - 1];
                let cur = &mut upper[0];
                for n in t..=n_max {
                    if !prev[n - t].is_zero() {
                        cur[n] += &prev[n - t];
                    }
                }
            }
        }
        while next < pending.len() && queries[pending[next]].0 == t {
            let qi = pending[next];
            let (_, j, n) = queries[qi];
            out[qi] = table[j][n].clone();
            next += 1;
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryRow {
    pub ell: usize,
    /// `p(4ℓ, 3, 6ℓ)` and `p(4ℓ, 3, 6ℓ−1)`.
    pub upper: [String; 2],
    /// `p(4ℓ−2, 3, 6ℓ−3)` and `p(4ℓ−2, 3, 6ℓ−4)`.
    pub lower: [String; 2],
    /// `p(4ℓ, 3, 6ℓ) − p(4ℓ, 3, 6ℓ−1) = 1`
    pub difference_is_one: bool,
    /// `p(4ℓ−2, 3, 6ℓ−3) = p(4ℓ−2, 3, 6ℓ−4)`
    pub equal_counts: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryReport {
    pub ell_max: usize,
    pub rows: Vec<CorollaryRow>,
    /// `ℓ` values where either identity fails.
    pub failing: Vec<usize>,
}

impl CorollaryReport {
    pub fn passed(&self) -> bool {
        self.failing.is_empty()
    }

    pub fn checked_identities(&self) -> usize {
        2 * self.rows.len()
    }
}

/// Checks, for every `1 ≤ ℓ ≤ ell_max`,
/// `p(4ℓ, 3, 6ℓ) − p(4ℓ, 3, 6ℓ−1) = 1` and `p(4ℓ−2, 3, 6ℓ−3) = p(4ℓ−2, 3, 6ℓ−4)`.
pub fn verify_corollary_identities(ell_max: usize) -> Result<CorollaryReport> {
    if ell_max == 0 {
        return Err(Error::InvalidArgument("ell_max must be at least 1".into()));
    }
    let mut queries = Vec::with_capacity(4 * ell_max);
    for ell in 1..=ell_max {
        queries.push((4 * ell, 3, 6 * ell));
        queries.push((4 * ell, 3, 6 * ell - 1));
        queries.push((4 * ell - 2, 3, 6 * ell - 3));
        queries.push((4 * ell - 2, 3, 6 * ell - 4));
    }
    let values = count_bounded_partitions_batch(&queries);
    let mut rows = Vec::with_capacity(ell_max);
    let mut failing = Vec::new();
    for (idx, chunk) in values.chunks(4).enumerate() {
        let ell = idx + 1;
        let difference_is_one = chunk[0] == &chunk[1] + 1u32;
        let equal_counts = chunk[2] == chunk[3];
        if !(difference_is_one && equal_counts) {
            failing.push(ell);
        }
        rows.push(CorollaryRow {
            ell,
            upper: [chunk[0].to_string(), chunk[1].to_string()],
            lower: [chunk[2].to_string(), chunk[3].to_string()],
            difference_is_one,
            equal_counts,
        });
    }
    Ok(CorollaryReport {
        ell_max,
        rows,
        failing,
    })
}
