//! Exact character calculus.
//!
//! A [`Character`] is a finite multiset of weights of a product group with
//! arbitrary-precision multiplicities. For Weyl-invariant characters the
//! dominant chamber already determines everything, and
//! [`DominantCharacter`] keeps only that part; power functors and
//! decompositions of large characters run there.

mod decompose;
mod dominant;
mod functor;

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{Group, Weight};

pub use decompose::{Decomposition, Term, TermList};
pub use dominant::DominantCharacter;
pub use functor::Functor;

/// Environment variable consulted by the CLI for the size cap.
pub const SIZE_CAP_ENV: &str = "INVLINE_SIZE_CAP";

/// Upper bound on the number of distinct weights a computed character may hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeCap(pub usize);

impl SizeCap {
    pub const DEFAULT: SizeCap = SizeCap(10_000_000);

    pub(crate) fn check(self, entries: usize, what: &'static str) -> Result<()> {
        if entries > self.0 {
            return Err(Error::SizeCap { what, cap: self.0 });
        }
        Ok(())
    }
}

impl Default for SizeCap {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Weight multiset of a (virtual-free) representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    group: Group,
    weights: BTreeMap<Weight, BigUint>,
}

impl Character {
    /// Builds a character, dropping zero multiplicities.
    pub fn new(group: Group, weights: impl IntoIterator<Item = (Weight, BigUint)>) -> Result<Self> {
        let mut map: BTreeMap<Weight, BigUint> = BTreeMap::new();
        for (w, m) in weights {
            group.check_weight(w.coords())?;
            if !m.is_zero() {
                *map.entry(w).or_default() += m;
            }
        }
        Ok(Self {
            group,
            weights: map,
        })
    }

    pub(crate) fn from_map_unchecked(group: Group, weights: BTreeMap<Weight, BigUint>) -> Self {
        Self { group, weights }
    }

    /// `n` copies of the trivial representation.
    pub fn trivial(group: Group, n: u32) -> Self {
        let mut weights = BTreeMap::new();
        if n > 0 {
            weights.insert(Weight::zero(group.rank()), BigUint::from(n));
        }
        Self { group, weights }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &BigUint)> {
        self.weights.iter()
    }

    pub fn multiplicity(&self, w: &Weight) -> BigUint {
        self.weights.get(w).cloned().unwrap_or_default()
    }

    /// Number of distinct weights.
    pub fn num_weights(&self) -> usize {
        self.weights.len()
    }

    /// Total multiplicity.
    pub fn dimension(&self) -> BigUint {
        self.weights.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.weights.is_empty()
    }

    fn same_group(&self, other: &Character) -> Result<()> {
        if self.group != other.group {
            return Err(Error::AmbientMismatch {
                left: self.group.to_string(),
                right: other.group.to_string(),
            });
        }
        Ok(())
    }

    /// Direct sum.
    pub fn add(&self, other: &Character) -> Result<Character> {
        self.same_group(other)?;
        let mut weights = self.weights.clone();
        for (w, m) in &other.weights {
            *weights.entry(w.clone()).or_default() += m;
        }
        Ok(Self::from_map_unchecked(self.group.clone(), weights))
    }

    /// Tensor product: convolution of the weight multisets.
    pub fn tensor(&self, other: &Character, cap: SizeCap) -> Result<Character> {
        self.same_group(other)?;
        let mut out: HashMap<Weight, BigUint> = HashMap::new();
        for (x, a) in &self.weights {
            for (y, b) in &other.weights {
                let w = x + y;
                match out.get_mut(&w) {
                    Some(m) => *m += a * b,
                    None => {
                        out.insert(w, a * b);
                        cap.check(out.len(), "tensor product")?;
                    }
                }
            }
        }
        Ok(Self::from_map_unchecked(
            self.group.clone(),
            out.into_iter().collect(),
        ))
    }

    /// External tensor product over the product group `G × H`.
    pub fn external_tensor(&self, other: &Character, cap: SizeCap) -> Result<Character> {
        cap.check(
            self.weights.len().saturating_mul(other.weights.len()),
            "external tensor product",
        )?;
        let group = self.group.times(&other.group);
        let weights = self
            .weights
            .iter()
            .flat_map(|(x, a)| other.weights.iter().map(move |(y, b)| (x.concat(y), a * b)))
            .collect();
        Ok(Self::from_map_unchecked(group, weights))
    }

    /// Contragredient: every weight negated.
    pub fn dual(&self) -> Character {
        let weights = self.weights.iter().map(|(w, m)| (-w, m.clone())).collect();
        Self::from_map_unchecked(self.group.clone(), weights)
    }

    /// Adams operation `ψ^k`: every weight scaled by `k`.
    pub fn adams(&self, k: u32) -> Character {
        assert!(k >= 1, "adams operation needs k >= 1");
        let weights = self
            .weights
            .iter()
            .map(|(w, m)| (w.scaled(k as i32), m.clone()))
            .collect();
        Self::from_map_unchecked(self.group.clone(), weights)
    }

    pub fn sym_power(&self, d: u32, cap: SizeCap) -> Result<Character> {
        Functor::Sym(d).apply(self, cap)
    }

    pub fn ext_power(&self, d: u32, cap: SizeCap) -> Result<Character> {
        Functor::Ext(d).apply(self, cap)
    }

    pub fn tensor_power(&self, d: u32, cap: SizeCap) -> Result<Character> {
        Functor::Tensor(d).apply(self, cap)
    }

    /// Character of `S_{(2,1)}`, i.e. `(p₁³ − p₃)/3`.
    pub fn hook21(&self, cap: SizeCap) -> Result<Character> {
        functor::hook21(self, cap)
    }

    /// True when every simple reflection permutes the weight multiset.
    pub fn is_weyl_invariant(&self) -> bool {
        (0..self.group.num_reflections()).all(|k| {
            self.weights.iter().all(|(w, m)| {
                let mut image = w.0.clone();
                self.group.reflect(&mut image, k);
                self.weights.get(&Weight(image)) == Some(m)
            })
        })
    }

    /// Restriction to the dominant chamber. Only meaningful for
    /// Weyl-invariant characters.
    pub fn dominant_part(&self) -> DominantCharacter {
        let weights = self
            .weights
            .iter()
            .filter(|(w, _)| w.is_dominant())
            .map(|(w, m)| (w.clone(), m.clone()))
            .collect();
        DominantCharacter::from_dominant_map(self.group.clone(), weights)
    }

    /// Decomposition into irreducibles by highest-weight stripping.
    pub fn decompose(&self) -> Result<Decomposition> {
        if !self.is_weyl_invariant() {
            return Err(Error::NotACharacter(
                "weight multiset is not Weyl-invariant".to_string(),
            ));
        }
        self.dominant_part().decompose()
    }

    /// Multiplicity of the trivial representation.
    pub fn trivial_multiplicity(&self) -> Result<BigUint> {
        Ok(self
            .decompose()?
            .multiplicity(&Weight::zero(self.group.rank())))
    }
}
