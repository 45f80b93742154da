//! Littlewood–Richardson coefficients, tensor products of Schur functors of
//! `GL_m`/`SL_m`, the row case of Pieri's rule, and weight multisets of Schur
//! functors from semistandard tableaux.

mod kostka;

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::character::Decomposition;
use crate::error::{Error, Result};
use crate::lie::{Group, Weight};
use crate::partitions::{partitions_of, Partition};

pub use kostka::{kostka_weights, schur_dimension};

/// Number of LR tableaux of shape `ν/λ` and content `μ`: semistandard
/// fillings whose reverse reading word (rows top to bottom, each right to
/// left) is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size()
        || !lambda.is_contained_in(nu)
        || !mu.is_contained_in(nu)
    {
        return 0;
    }
    let rows = nu.length();
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| {
            (lambda.part(r) as usize..nu.part(r) as usize)
                .rev()
                .map(move |c| (r, c))
        })
        .collect();
    let mut search = LrSearch {
        lambda,
        nu,
        content: mu.nonzero_parts().to_vec(),
        used: vec![0; mu.length()],
        grid: (0..rows).map(|r| vec![0u32; nu.part(r) as usize]).collect(),
        cells,
    };
    search.count(0)
}

struct LrSearch<'a> {
    lambda: &'a Partition,
    nu: &'a Partition,
    content: Vec<u32>,
    used: Vec<u32>,
    grid: Vec<Vec<u32>>,
    cells: Vec<(usize, usize)>,
}

impl LrSearch<'_> {
    fn count(&mut self, idx: usize) -> u64 {
        let Some(&(r, c)) = self.cells.get(idx) else {
            return 1;
        };
        // weakly increasing along the row: bounded by the cell to the right
        let mut hi = self.content.len() as u32;
        if c + 1 < self.nu.part(r) as usize {
            hi = hi.min(self.grid[r][c + 1]);
        }
        // lattice words put at most r+1 in row r
        hi = hi.min(r as u32 + 1);
        // strictly increasing down columns
        let lo = if r > 0 && c >= self.lambda.part(r - 1) as usize {
            self.grid[r - 1][c] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in lo..=hi {
            let i = (v - 1) as usize;
            if self.used[i] == self.content[i] || (i > 0 && self.used[i] + 1 > self.used[i - 1]) {
                continue;
            }
            self.used[i] += 1;
            self.grid[r][c] = v;
            total += self.count(idx + 1);
            self.used[i] -= 1;
        }
        self.grid[r][c] = 0;
        total
    }
}

/// Schur functors of the standard `m`-dimensional representation, with
/// multiplicities. Shapes are stored in `SL_m`-normalized form (full columns
/// of height `m` removed) and ordered decreasingly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionDecomposition {
    rank: usize,
    terms: Vec<(Partition, BigUint)>,
}

impl PartitionDecomposition {
    fn from_map(rank: usize, map: BTreeMap<Partition, BigUint>) -> Self {
        Self {
            rank,
            terms: map
                .into_iter()
                .rev()
                .filter(|(_, m)| !m.is_zero())
                .collect(),
        }
    }

    /// The `m` of `SL_m`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &[(Partition, BigUint)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, nu: &Partition) -> BigUint {
        let key = nu.normalize_sl(self.rank).unwrap_or_else(|_| nu.clone());
        self.terms
            .iter()
            .find(|(p, _)| *p == key)
            .map(|(_, m)| m.clone())
            .unwrap_or_default()
    }

    /// Σ multiplicity × dim `S_ν(C^m)`.
    pub fn dimension(&self) -> BigUint {
        self.terms
            .iter()
            .map(|(p, m)| m * schur_dimension(p, self.rank).expect("shape fits"))
            .sum()
    }

    /// The same data as highest weights of `SL_m` in Dynkin coordinates.
    pub fn to_decomposition(&self) -> Result<Decomposition> {
        let group = Group::special_linear(self.rank)?;
        let terms = self
            .terms
            .iter()
            .map(|(p, m)| Ok((Weight(p.dynkin_label(self.rank)?), m.clone())))
            .collect::<Result<Vec<_>>>()?;
        Decomposition::from_terms(group, terms)
    }
}

/// `S_λ ⊗ S_μ` for `SL_m` by the Littlewood–Richardson rule.
pub fn tensor_decompose_lr(
    lambda: &Partition,
    mu: &Partition,
    m: usize,
) -> Result<PartitionDecomposition> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "rank m must be positive".to_string(),
        ));
    }
    lambda.check_rank(m)?;
    mu.check_rank(m)?;
    let n = lambda.size() + mu.size();
    let max_rows = m.min(lambda.length() + mu.length());
    let max_part = lambda.part(0) + mu.part(0);
    let mut out: BTreeMap<Partition, BigUint> = BTreeMap::new();
    for nu in partitions_of(n as u32, max_rows, max_part) {
        let c = lr_coefficient(lambda, mu, &nu);
        if c > 0 {
            *out.entry(nu.normalize_sl(m)?).or_default() += c;
        }
    }
    Ok(PartitionDecomposition::from_map(m, out))
}

/// `S_λ ⊗ Sym^k` by Pieri's rule: one copy of every `ν ⊇ λ` with `ν/λ` a
/// horizontal strip of `k` boxes, at most `m` rows. For `λ = (k)` this is
/// `⊕_{i=0}^{k} S_{(k+i,k−i)}`.
pub fn pieri_row(lambda: &Partition, k: u32, m: usize) -> Result<PartitionDecomposition> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "Pieri row length k must be positive".to_string(),
        ));
    }
    if m < 2 {
        return Err(Error::InvalidArgument(format!(
            "Pieri rule needs m >= 2, got {m}"
        )));
    }
    lambda.check_rank(m)?;
    let rows = (lambda.length() + 1).min(m);
    let mut out = BTreeMap::new();
    let mut added = vec![0u32; rows];
    horizontal_strips(lambda, 0, k, &mut added, &mut |added| {
        let parts: Vec<u32> = (0..rows).map(|r| lambda.part(r) + added[r]).collect();
        let nu = Partition::new(parts).expect("horizontal strip keeps a partition");
        *out.entry(nu.normalize_sl(m).expect("fits")).or_default() += 1u32;
    });
    Ok(PartitionDecomposition::from_map(m, out))
}

/// Row `r` of a horizontal strip may grow by at most `λ_{r−1} − λ_r`.
fn horizontal_strips(
    lambda: &Partition,
    r: usize,
    left: u32,
    added: &mut Vec<u32>,
    emit: &mut impl FnMut(&[u32]),
) {
    if r == added.len() {
        if left == 0 {
            emit(added);
        }
        return;
    }
    let room = if r == 0 {
        left
    } else {
        lambda.part(r - 1) - lambda.part(r)
    };
    for a in 0..=room.min(left) {
        added[r] = a;
        horizontal_strips(lambda, r + 1, left - a, added, emit);
    }
    added[r] = 0;
}

#[cfg(test)]
mod tests;
