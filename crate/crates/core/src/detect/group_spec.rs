use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::character::{Character, SizeCap};
use crate::error::{Error, Result};
use crate::lie::{
    group_dimension, group_irreducible_character, CartanType, Family, Group, IrrepEntry, Weight,
};
use crate::lr::{kostka_weights, schur_dimension};
use crate::partitions::Partition;

/// One tensor factor of a represented group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    /// Irreducible of a simple group with the given dominant highest weight.
    Highest { ty: CartanType, weight: Weight },
    /// `S_λ` of the standard representation of `SL_m`.
    Schur { m: usize, shape: Partition },
}

impl Factor {
    pub fn highest(ty: CartanType, weight: impl Into<Weight>) -> Result<Self> {
        let weight = weight.into();
        let group = Group::simple(ty);
        group.check_weight(weight.coords())?;
        if !weight.is_dominant() {
            return Err(Error::NotDominant {
                weight: weight.to_string(),
            });
        }
        Ok(Factor::Highest { ty, weight })
    }

    pub fn schur(m: usize, shape: Partition) -> Result<Self> {
        shape.check_rank(m)?;
        Group::special_linear(m)?;
        Ok(Factor::Schur { m, shape })
    }

    pub fn group(&self) -> Group {
        match self {
            Factor::Highest { ty, .. } => Group::simple(*ty),
            Factor::Schur { m, .. } => Group::special_linear(*m).expect("validated rank"),
        }
    }

    /// Highest weight in Dynkin coordinates of the factor group.
    pub fn dynkin_weight(&self) -> Weight {
        match self {
            Factor::Highest { weight, .. } => weight.clone(),
            Factor::Schur { m, shape } => Weight(shape.dynkin_label(*m).expect("validated shape")),
        }
    }

    pub fn dimension(&self) -> BigUint {
        match self {
            Factor::Highest { ty, weight } => {
                group_dimension(&Group::simple(*ty), weight.coords()).expect("validated weight")
            }
            Factor::Schur { m, shape } => schur_dimension(shape, *m).expect("validated shape"),
        }
    }

    pub fn character(&self, cap: SizeCap) -> Result<Character> {
        match self {
            Factor::Highest { ty, weight } => {
                group_irreducible_character(&Group::simple(*ty), weight.coords(), cap)
            }
            Factor::Schur { m, shape } => kostka_weights(shape, *m, cap),
        }
    }

    /// The contragredient factor.
    pub fn dual(&self) -> Factor {
        match self {
            Factor::Highest { ty, weight } => Factor::Highest {
                ty: *ty,
                weight: Group::simple(*ty).dual_weight(weight.coords()),
            },
            Factor::Schur { m, shape } => Factor::Schur {
                m: *m,
                shape: shape
                    .dual_sl(*m)
                    .expect("validated shape")
                    .normalize_sl(*m)
                    .expect("fits"),
            },
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Highest { ty, weight } => write!(f, "{ty}:{weight}"),
            Factor::Schur { m, shape } => write!(f, "A{}:schur={shape}", m - 1),
        }
    }
}

impl FromStr for Factor {
    type Err = Error;

    /// `A<r>:[coords]`, `A<r>:schur=(λ)`, `B<r>:[coords]`, and likewise for
    /// the other families. `A0:schur=(λ)` is `SL_1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (ty, rest) = s.split_once(':').ok_or_else(|| {
            Error::Parse(format!(
                "factor `{s}` must look like `B4:[1,0,0,0]` or `A2:schur=(2)`"
            ))
        })?;
        let ty = ty.trim();
        let rest = rest.trim();
        if let Some(shape) = rest.strip_prefix("schur=") {
            let rank: usize = ty
                .strip_prefix(['A', 'a'])
                .and_then(|r| r.parse().ok())
                .ok_or_else(|| {
                    Error::Parse(format!("schur factors need a type A<r>, got `{ty}`"))
                })?;
            let shape: Partition = shape.parse()?;
            return Factor::schur(rank + 1, shape);
        }
        let ty: CartanType = ty.parse()?;
        let weight: Weight = rest.parse()?;
        Factor::highest(ty, weight)
    }
}

/// A product of derived groups acting by the external tensor product of
/// irreducible factors. No factors means the trivial group on a line.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GroupSpec {
    pub factors: Vec<Factor>,
}

impl GroupSpec {
    pub fn new(factors: Vec<Factor>) -> Self {
        Self { factors }
    }

    pub fn group(&self) -> Group {
        self.factors
            .iter()
            .fold(Group::trivial(), |g, f| g.times(&f.group()))
    }

    pub fn highest_weight(&self) -> Weight {
        Weight(
            self.factors
                .iter()
                .flat_map(|f| f.dynkin_weight().0)
                .collect(),
        )
    }

    pub fn dimension(&self) -> BigUint {
        self.factors.iter().map(Factor::dimension).product()
    }

    pub fn dual(&self) -> GroupSpec {
        GroupSpec::new(self.factors.iter().map(Factor::dual).collect())
    }

    /// Exactly two factors, each of dimension 3: the image lies in the
    /// tensor-product embedding `GL₃ × GL₃ → GL₉`.
    pub fn is_three_by_three(&self) -> bool {
        self.factors.len() == 2
            && self
                .factors
                .iter()
                .all(|f| f.dimension() == BigUint::from(3u32))
    }

    /// A single factor of type `A₁`.
    pub fn is_sl2(&self) -> bool {
        match self.factors.as_slice() {
            [Factor::Highest { ty, .. }] => ty.family == Family::A && ty.rank == 1,
            [Factor::Schur { m, .. }] => *m == 2,
            _ => false,
        }
    }
}

impl From<&IrrepEntry> for GroupSpec {
    fn from(e: &IrrepEntry) -> Self {
        GroupSpec::new(
            e.factors
                .iter()
                .map(|(ty, w)| Factor::Highest {
                    ty: *ty,
                    weight: w.clone(),
                })
                .collect(),
        )
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "trivial");
        }
        for (i, x) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "trivial" {
            return Ok(GroupSpec::default());
        }
        let factors = s
            .split(';')
            .map(str::parse)
            .collect::<Result<Vec<Factor>>>()?;
        Ok(GroupSpec::new(factors))
    }
}

/// Character of the represented space: external tensor product of the
/// factor characters.
pub fn build_rep_character(spec: &GroupSpec, cap: SizeCap) -> Result<Character> {
    let mut acc = Character::trivial(Group::trivial(), 1);
    for f in &spec.factors {
        acc = acc.external_tensor(&f.character(cap)?, cap)?;
    }
    Ok(acc)
}
