use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of nonnegative integers.
///
/// The stored length is kept (fixed-length `m`-tuples are common when working
/// over `SL_m`), but equality, ordering and hashing only look at the nonzero
/// parts, so `(2,1,0,0) == (2,1)`.
#[derive(Clone, Debug, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing ({} < {})",
                w[0], w[1]
            )));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// A single row `(k)`.
    pub fn row(k: u32) -> Self {
        Self { parts: vec![k] }
    }

    /// A single column `(1^k)`.
    pub fn column(k: usize) -> Self {
        Self { parts: vec![1; k] }
    }

    /// Parts as stored, including any trailing zeros.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn nonzero_parts(&self) -> &[u32] {
        &self.parts[..self.length()]
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.length() == 0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn normalized(&self) -> Self {
        Self {
            parts: self.nonzero_parts().to_vec(),
        }
    }

    /// The same shape stored with exactly `m` entries.
    pub fn padded(&self, m: usize) -> Result<Self> {
        self.check_rank(m)?;
        Ok(Self {
            parts: (0..m).map(|i| self.part(i)).collect(),
        })
    }

    pub fn check_rank(&self, m: usize) -> Result<()> {
        let parts = self.length();
        if parts > m {
            return Err(Error::TooManyParts {
                partition: self.to_string(),
                parts,
                max: m,
            });
        }
        Ok(())
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Self {
        let first = self.part(0);
        let parts = (0..first)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count() as u32)
            .collect();
        Self { parts }
    }

    /// Highest weight of the contragredient of `S_λ` over `SL_m`, as an
    /// `m`-entry partition `(λ₁−λ_m, λ₁−λ_{m−1}, …, 0)`.
    pub fn dual_sl(&self, m: usize) -> Result<Self> {
        self.check_rank(m)?;
        let top = self.part(0);
        Ok(Self {
            parts: (0..m).map(|i| top - self.part(m - 1 - i)).collect(),
        })
    }

    /// Removes full columns of height `m`: the canonical representative of
    /// the `SL_m` class `{λ + b}`.
    pub fn normalize_sl(&self, m: usize) -> Result<Self> {
        self.check_rank(m)?;
        let last = if m == 0 { 0 } else { self.part(m - 1) };
        let parts: Vec<u32> = (0..m).map(|i| self.part(i) - last).collect();
        Ok(Self { parts }.normalized())
    }

    /// Dynkin label `(λ₁−λ₂, …, λ_{m−1}−λ_m)` of `S_λ` as an `SL_m` weight.
    pub fn dynkin_label(&self, m: usize) -> Result<Vec<i32>> {
        self.check_rank(m)?;
        Ok((0..m.saturating_sub(1))
            .map(|i| (self.part(i) - self.part(i + 1)) as i32)
            .collect())
    }

    /// Inverse of [`Partition::dynkin_label`] with last part zero.
    pub fn from_dynkin(label: &[i32]) -> Result<Self> {
        if let Some(&a) = label.iter().find(|&&a| a < 0) {
            return Err(Error::NotDominant {
                weight: format!("{label:?} (coordinate {a})"),
            });
        }
        let mut parts = vec![0u32; label.len() + 1];
        for i in (0..label.len()).rev() {
            parts[i] = parts[i + 1] + label[i] as u32;
        }
        Ok(Self { parts }.normalized())
    }

    /// Diagram containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        (0..self.length()).all(|i| self.part(i) <= other.part(i))
    }
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.nonzero_parts() == other.nonzero_parts()
    }
}

impl Eq for Partition {}

impl Hash for Partition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.nonzero_parts().hash(state);
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.nonzero_parts().cmp(other.nonzero_parts())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.nonzero_parts().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `(3,1)`, `[3,1]`, `3,1`, `()` and the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        let mut parts = Vec::new();
        for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let p = tok
                .parse::<u32>()
                .map_err(|e| Error::Parse(format!("partition part `{tok}`: {e}")))?;
            parts.push(p);
        }
        Partition::new(parts)
    }
}

impl From<&[u32]> for Partition {
    /// Sorts the input, so any multiset of parts is accepted.
    fn from(parts: &[u32]) -> Self {
        let mut parts = parts.to_vec();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.nonzero_parts().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n` with at most `max_parts` parts, each at most
/// `max_part`, in reverse lexicographic order.
pub fn partitions_of(n: u32, max_parts: usize, max_part: u32) -> Vec<Partition> {
    fn rec(rem: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(rem)).rev() {
            // the remaining slots must be able to absorb what is left
            if u64::from(p).saturating_mul(slots as u64) < u64::from(rem) {
                break;
            }
            cur.push(p);
            rec(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, max_parts, &mut Vec::new(), &mut out);
    out
}
