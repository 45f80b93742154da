use std::collections::HashMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::character::{Character, SizeCap};
use crate::error::{Error, Result};
use crate::lie::{Group, Weight};
use crate::partitions::Partition;

/// Hook-content formula: `dim S_λ(C^m) = Π (m + c − r) / hook(r, c)`.
pub fn schur_dimension(lambda: &Partition, m: usize) -> Result<BigUint> {
    lambda.check_rank(m)?;
    let conj = lambda.conjugate();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for r in 0..lambda.length() {
        for c in 0..lambda.part(r) as usize {
            num *= (m + c - r) as u64;
            let arm = lambda.part(r) as usize - c - 1;
            let leg = conj.part(c) as usize - r - 1;
            den *= (arm + leg + 1) as u64;
        }
    }
    let (q, rem) = num.div_rem(&den);
    debug_assert!(rem == BigUint::default());
    Ok(q)
}

/// Weight multiset of `S_λ(C^m)` as an `SL_m` character, read off the
/// contents of all semistandard tableaux of shape `λ` with entries `1..=m`.
/// A content vector `c` gives the Dynkin weight `(c₁−c₂, …, c_{m−1}−c_m)`.
///
/// The cap bounds the number of tableaux visited (the dimension), which
/// also bounds the number of distinct weights.
pub fn kostka_weights(lambda: &Partition, m: usize, cap: SizeCap) -> Result<Character> {
    let group = Group::special_linear(m)?;
    let dim = schur_dimension(lambda, m)?;
    if dim > BigUint::from(cap.0) {
        return Err(Error::SizeCap {
            what: "semistandard tableaux enumeration",
            cap: cap.0,
        });
    }
    let shape: Vec<usize> = lambda.nonzero_parts().iter().map(|&p| p as usize).collect();
    let mut state = Ssyt {
        m: m as u32,
        shape: &shape,
        rows: shape.iter().map(|&len| vec![0u32; len]).collect(),
        content: vec![0i32; m],
        counts: HashMap::new(),
    };
    state.fill(0, 0);
    let weights = state.counts.into_iter().map(|(c, n)| {
        let dynkin: Vec<i32> = c.windows(2).map(|w| w[0] - w[1]).collect();
        (Weight(dynkin), BigUint::from(n))
    });
    Character::new(group, weights)
}

struct Ssyt<'a> {
    m: u32,
    shape: &'a [usize],
    rows: Vec<Vec<u32>>,
    content: Vec<i32>,
    counts: HashMap<Vec<i32>, u64>,
}

impl Ssyt<'_> {
    fn fill(&mut self, r: usize, c: usize) {
        if r == self.shape.len() {
            *self.counts.entry(self.content.clone()).or_default() += 1;
            return;
        }
        if c == self.shape[r] {
            self.fill(r + 1, 0);
            return;
        }
        let left = if c > 0 { self.rows[r][c - 1] } else { 1 };
        let above = if r > 0 { self.rows[r - 1][c] + 1 } else { 1 };
        // room for the cells below in this column
        let below = self.shape[r + 1..]
            .iter()
            .take_while(|&&len| len > c)
            .count() as u32;
        let lo = left.max(above);
        let hi = self.m.saturating_sub(below);
        for v in lo..=hi {
            self.rows[r][c] = v;
            self.content[(v - 1) as usize] += 1;
            self.fill(r, c + 1);
            self.content[(v - 1) as usize] -= 1;
        }
    }
}
