use std::cmp::Reverse;
use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{Character, DominantCharacter, SizeCap};
use crate::error::{Error, Result};
use crate::lie::{
    group_dimension, group_dominant_multiplicities, group_irreducible_character, Group, Weight,
};

/// A representation written as a sum of irreducibles, kept in stripping
/// order: height descending, then Dynkin coordinates lexicographically
/// descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    group: Group,
    terms: Vec<(Weight, BigUint)>,
}

impl Decomposition {
    /// Collects highest weights with multiplicities, merging repeats and
    /// dropping zeros.
    pub fn from_terms(
        group: Group,
        terms: impl IntoIterator<Item = (Weight, BigUint)>,
    ) -> Result<Self> {
        let mut merged: BTreeMap<Weight, BigUint> = BTreeMap::new();
        for (w, m) in terms {
            group.check_weight(w.coords())?;
            if !w.is_dominant() {
                return Err(Error::NotDominant {
                    weight: w.to_string(),
                });
            }
            *merged.entry(w).or_default() += m;
        }
        let mut terms: Vec<(Weight, BigUint)> =
            merged.into_iter().filter(|(_, m)| !m.is_zero()).collect();
        terms.sort_by_key(|(w, _)| Reverse((group.height(w.coords()), w.clone())));
        Ok(Self { group, terms })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn terms(&self) -> &[(Weight, BigUint)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, w: &Weight) -> BigUint {
        self.terms
            .iter()
            .find(|(v, _)| v == w)
            .map(|(_, m)| m.clone())
            .unwrap_or_default()
    }

    /// Σ multiplicity × Weyl dimension.
    pub fn dimension(&self) -> BigUint {
        self.terms
            .iter()
            .map(|(w, m)| m * group_dimension(&self.group, w.coords()).expect("dominant term"))
            .sum()
    }

    /// Σ multiplicity × irreducible character.
    pub fn reconstruct(&self, cap: SizeCap) -> Result<Character> {
        let mut acc = Character::trivial(self.group.clone(), 0);
        for (w, m) in &self.terms {
            let irr = group_irreducible_character(&self.group, w.coords(), cap)?;
            let scaled = irr.iter().map(|(v, k)| (v.clone(), k * m));
            acc = acc.add(&Character::new(self.group.clone(), scaled)?)?;
            cap.check(acc.num_weights(), "reconstruction")?;
        }
        Ok(acc)
    }

    pub fn to_term_list(&self) -> TermList {
        TermList {
            terms: self
                .terms
                .iter()
                .map(|(w, m)| Term {
                    weight: w.0.clone(),
                    mult: m.to_string(),
                })
                .collect(),
        }
    }

    /// Canonical JSON: `{"terms":[{"weight":[..],"mult":".."},..]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_term_list()).expect("serializable")
    }
}

/// Serialized form of a decomposition. Multiplicities are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermList {
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub weight: Vec<i32>,
    pub mult: String,
}

impl TermList {
    /// Rebuilds the decomposition over `group`.
    pub fn to_decomposition(&self, group: &Group) -> Result<Decomposition> {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let m: BigUint = t
                    .mult
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad multiplicity {:?}", t.mult)))?;
                Ok((Weight(t.weight.clone()), m))
            })
            .collect::<Result<Vec<_>>>()?;
        Decomposition::from_terms(group.clone(), terms)
    }
}

/// Highest-weight stripping on the dominant chamber.
pub(super) fn strip(ch: &DominantCharacter) -> Result<Decomposition> {
    let group = ch.group();
    let mut remaining: BTreeMap<(i64, Weight), BigInt> = ch
        .iter()
        .map(|(w, m)| {
            (
                (group.height(w.coords()), w.clone()),
                BigInt::from_biguint(Sign::Plus, m.clone()),
            )
        })
        .collect();
    let mut terms = Vec::new();
    while let Some(((_, lambda), m)) = remaining.pop_last() {
        if m.is_zero() {
            continue;
        }
        if m.is_negative() {
            return Err(Error::NotACharacter(format!(
                "stripping reached multiplicity {m} at highest weight {lambda}"
            )));
        }
        for (mu, k) in group_dominant_multiplicities(group, lambda.coords())? {
            if mu == lambda {
                continue;
            }
            let key = (group.height(mu.coords()), mu);
            let delta = BigInt::from_biguint(Sign::Plus, k) * &m;
            match remaining.get_mut(&key) {
                Some(v) => {
                    *v -= delta;
                    if v.is_zero() {
                        remaining.remove(&key);
                    }
                }
                None => {
                    remaining.insert(key, -delta);
                }
            }
        }
        terms.push((lambda, m.to_biguint().expect("positive")));
    }
    Ok(Decomposition {
        group: group.clone(),
        terms,
    })
}
