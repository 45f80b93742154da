use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::Zero;

use super::{Character, Decomposition, SizeCap};
use crate::error::Result;
use crate::lie::{Group, Weight};

/// Dominant-chamber restriction of a Weyl-invariant character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominantCharacter {
    group: Group,
    weights: BTreeMap<Weight, BigUint>,
}

impl DominantCharacter {
    /// Wraps a map whose keys are all dominant. Zero multiplicities are dropped.
    pub fn from_dominant_map(group: Group, mut weights: BTreeMap<Weight, BigUint>) -> Self {
        debug_assert!(weights.keys().all(Weight::is_dominant));
        weights.retain(|_, m| !m.is_zero());
        Self { group, weights }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &BigUint)> {
        self.weights.iter()
    }

    pub fn num_weights(&self) -> usize {
        self.weights.len()
    }

    /// Multiplicity of an arbitrary weight, read off its dominant representative.
    pub fn multiplicity(&self, w: &Weight) -> BigUint {
        let dom = self.group.dominant_representative(w.coords());
        self.weights.get(&dom).cloned().unwrap_or_default()
    }

    /// Total multiplicity of the full character (each dominant weight counts
    /// with its orbit size).
    pub fn dimension(&self) -> BigUint {
        self.weights
            .iter()
            .map(|(w, m)| m * self.group.orbit_size(w.coords()))
            .sum()
    }

    /// Number of distinct weights of the full character.
    pub fn full_size(&self) -> BigUint {
        self.weights
            .keys()
            .map(|w| self.group.orbit_size(w.coords()))
            .sum()
    }

    /// Expands every dominant weight to its Weyl orbit.
    pub fn orbit_expand(&self, cap: SizeCap) -> Result<Character> {
        let size = self.full_size();
        let entries = usize::try_from(size).unwrap_or(usize::MAX);
        cap.check(entries, "Weyl orbit expansion")?;
        let mut weights = BTreeMap::new();
        for (w, m) in &self.weights {
            for v in self.group.orbit(w.coords()) {
                weights.insert(v, m.clone());
            }
        }
        Ok(Character::from_map_unchecked(self.group.clone(), weights))
    }

    /// Dominant part of `self · other` for a Weyl-invariant full character
    /// `other`:
    ///
    /// ```text
    /// (A·B)(ν) = Σ_x B(x) · A(dom(ν − x))     for dominant ν
    /// ```
    ///
    /// Every dominant weight of the product is `dom(x + y)` with `x` a weight
    /// of `B` and `y` a dominant weight of `A`, since `B` is Weyl-invariant.
    pub fn multiply_full(&self, other: &Character, cap: SizeCap) -> Result<DominantCharacter> {
        let group = &self.group;
        let mut candidates: BTreeSet<Weight> = BTreeSet::new();
        let mut buf = vec![0i32; group.rank()];
        for (x, _) in other.iter() {
            for y in self.weights.keys() {
                for (k, slot) in buf.iter_mut().enumerate() {
                    *slot = x.0[k] + y.0[k];
                }
                group.make_dominant(&mut buf);
                if !candidates.contains(buf.as_slice()) {
                    candidates.insert(Weight(buf.clone()));
                    cap.check(candidates.len(), "dominant product")?;
                }
            }
        }
        let mut out = BTreeMap::new();
        for nu in candidates {
            let mut total = BigUint::zero();
            for (x, b) in other.iter() {
                for (k, slot) in buf.iter_mut().enumerate() {
                    *slot = nu.0[k] - x.0[k];
                }
                group.make_dominant(&mut buf);
                if let Some(a) = self.weights.get(buf.as_slice()) {
                    total += a * b;
                }
            }
            if !total.is_zero() {
                out.insert(nu, total);
            }
        }
        Ok(Self {
            group: group.clone(),
            weights: out,
        })
    }

    pub fn decompose(&self) -> Result<Decomposition> {
        super::decompose::strip(self)
    }

    pub fn trivial_multiplicity(&self) -> Result<BigUint> {
        Ok(self
            .decompose()?
            .multiplicity(&Weight::zero(self.group.rank())))
    }
}

impl std::borrow::Borrow<[i32]> for Weight {
    fn borrow(&self) -> &[i32] {
        &self.0
    }
}
