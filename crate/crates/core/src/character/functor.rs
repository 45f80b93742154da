//! Symmetric, exterior and tensor powers through power sums.
//!
//! With `p_k` the Adams operation, `d!·h_d = Σ_ρ (d!/z_ρ) p_ρ` and
//! `d!·e_d = Σ_ρ (−1)^{d−ℓ(ρ)} (d!/z_ρ) p_ρ`, the sum running over partitions
//! `ρ` of `d`. The final division by `d!` is exact for genuine characters.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{Character, DominantCharacter, SizeCap};
use crate::error::{Error, Result};
use crate::lie::Weight;

/// A polynomial functor of degree at most four.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Functor {
    Tensor(u32),
    Sym(u32),
    Ext(u32),
}

pub const MAX_FUNCTOR_DEGREE: u32 = 4;

impl Functor {
    pub fn degree(self) -> u32 {
        match self {
            Functor::Tensor(d) | Functor::Sym(d) | Functor::Ext(d) => d,
        }
    }

    fn check(self) -> Result<()> {
        let d = self.degree();
        if d == 0 || d > MAX_FUNCTOR_DEGREE {
            return Err(Error::UnsupportedFunctor(self.to_string()));
        }
        Ok(())
    }

    /// `(coefficient, ρ)` pairs with `d!·F = Σ coefficient · p_ρ`.
    fn power_sum_expansion(self) -> Vec<(i64, Vec<u32>)> {
        let d = self.degree();
        if let Functor::Tensor(_) = self {
            return vec![(factorial(d), vec![1; d as usize])];
        }
        let sign_twist = matches!(self, Functor::Ext(_));
        cycle_types(d)
            .into_iter()
            .map(|rho| {
                let mut c = factorial(d) / z(&rho);
                if sign_twist && (d as usize - rho.len()) % 2 == 1 {
                    c = -c;
                }
                (c, rho)
            })
            .collect()
    }

    /// Full character of the functor applied to `a`.
    pub fn apply(self, a: &Character, cap: SizeCap) -> Result<Character> {
        self.check()?;
        let terms = self.power_sum_expansion();
        let mut acc: BTreeMap<Weight, BigInt> = BTreeMap::new();
        for (c, rho) in &terms {
            let p = power_product_full(a, rho, cap)?;
            accumulate(&mut acc, p.iter(), *c);
        }
        let weights = divide_exact(acc, factorial(self.degree()), self)?;
        Ok(Character::from_map_unchecked(a.group().clone(), weights))
    }

    /// Dominant part of the functor applied to a Weyl-invariant `a`. Much
    /// cheaper than [`Functor::apply`] when the full result is large.
    pub fn apply_dominant(self, a: &Character, cap: SizeCap) -> Result<DominantCharacter> {
        self.check()?;
        let terms = self.power_sum_expansion();
        let mut acc: BTreeMap<Weight, BigInt> = BTreeMap::new();
        for (c, rho) in &terms {
            let p = power_product_dominant(a, rho, cap)?;
            accumulate(&mut acc, p.iter(), *c);
        }
        let weights = divide_exact(acc, factorial(self.degree()), self)?;
        Ok(DominantCharacter::from_dominant_map(
            a.group().clone(),
            weights,
        ))
    }
}

impl fmt::Display for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Functor::Tensor(d) => write!(f, "tensor{d}"),
            Functor::Sym(d) => write!(f, "sym{d}"),
            Functor::Ext(d) => write!(f, "ext{d}"),
        }
    }
}

impl FromStr for Functor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let split = s
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(|| Error::Parse(format!("functor {s:?} has no degree")))?;
        let (name, deg) = s.split_at(split);
        let d: u32 = deg
            .parse()
            .map_err(|_| Error::Parse(format!("bad functor degree in {s:?}")))?;
        let f = match name {
            "tensor" | "otimes" => Functor::Tensor(d),
            "sym" => Functor::Sym(d),
            "ext" | "wedge" | "lambda" => Functor::Ext(d),
            _ => {
                return Err(Error::Parse(format!(
                    "unknown functor {s:?}; expected sym<d>, ext<d> or tensor<d>"
                )))
            }
        };
        f.check()?;
        Ok(f)
    }
}

/// `(p₁³ − p₃)/3`, the character of `S_{(2,1)}` applied to `a`.
pub(super) fn hook21(a: &Character, cap: SizeCap) -> Result<Character> {
    let mut acc: BTreeMap<Weight, BigInt> = BTreeMap::new();
    accumulate(&mut acc, power_product_full(a, &[1, 1, 1], cap)?.iter(), 1);
    accumulate(&mut acc, a.adams(3).iter(), -1);
    let weights = divide_exact(acc, 3, "S_(2,1)")?;
    Ok(Character::from_map_unchecked(a.group().clone(), weights))
}

fn factorial(d: u32) -> i64 {
    (1..=i64::from(d)).product()
}

/// Partitions of `d`, largest part first.
fn cycle_types(d: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    out
}

/// Centralizer order `z_ρ = Π_i i^{m_i} m_i!`.
fn z(rho: &[u32]) -> i64 {
    let mut counts: BTreeMap<u32, i64> = BTreeMap::new();
    for &p in rho {
        *counts.entry(p).or_default() += 1;
    }
    counts
        .into_iter()
        .map(|(i, m)| i64::from(i).pow(m as u32) * (1..=m).product::<i64>())
        .product()
}

fn power_product_full(a: &Character, rho: &[u32], cap: SizeCap) -> Result<Character> {
    let mut it = rho.iter();
    let first = *it.next().expect("nonempty cycle type");
    let mut acc = a.adams(first);
    for &k in it {
        acc = acc.tensor(&a.adams(k), cap)?;
    }
    Ok(acc)
}

fn power_product_dominant(a: &Character, rho: &[u32], cap: SizeCap) -> Result<DominantCharacter> {
    let mut it = rho.iter();
    let first = *it.next().expect("nonempty cycle type");
    // scaling by a positive integer preserves dominance, so the dominant part
    // of p_k(a) is the scaled dominant part of a
    let mut acc = a.adams(first).dominant_part();
    for &k in it {
        acc = acc.multiply_full(&a.adams(k), cap)?;
    }
    Ok(acc)
}

fn accumulate<'a>(
    acc: &mut BTreeMap<Weight, BigInt>,
    terms: impl Iterator<Item = (&'a Weight, &'a BigUint)>,
    c: i64,
) {
    let c = BigInt::from(c);
    for (w, m) in terms {
        let v = BigInt::from_biguint(Sign::Plus, m.clone()) * &c;
        match acc.get_mut(w) {
            Some(x) => *x += v,
            None => {
                acc.insert(w.clone(), v);
            }
        }
    }
}

fn divide_exact(
    acc: BTreeMap<Weight, BigInt>,
    divisor: i64,
    what: impl fmt::Display,
) -> Result<BTreeMap<Weight, BigUint>> {
    let divisor = BigInt::from(divisor);
    let mut out = BTreeMap::new();
    for (w, v) in acc {
        if v.is_zero() {
            continue;
        }
        let (q, r) = v.div_rem(&divisor);
        if !r.is_zero() || q.is_negative() {
            return Err(Error::NotACharacter(format!(
                "{what}: coefficient {v}/{divisor} at weight {w} is not a nonnegative integer"
            )));
        }
        out.insert(w, q.to_biguint().expect("nonnegative"));
    }
    Ok(out)
}
