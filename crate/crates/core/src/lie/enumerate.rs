use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::dimension::weyl_dimension;
use super::root_system::{CartanType, Family, RootSystem};
use super::weight::Weight;
use crate::error::{Error, Result};

/// Largest dimension accepted by [`enumerate_irreps_of_dim`].
pub const MAX_ENUMERATION_DIMENSION: u64 = 1000;

/// Products with more than this many nontrivial factors are not enumerated.
pub const MAX_PRODUCT_FACTORS: usize = 2;

/// One irreducible representation of a (semi)simple group: each factor is a
/// simple type with a dominant highest weight. An empty factor list is the
/// trivial representation of the trivial group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IrrepEntry {
    pub factors: Vec<(CartanType, Weight)>,
}

impl IrrepEntry {
    pub fn dimension(&self) -> BigUint {
        self.factors
            .iter()
            .map(|(t, w)| weyl_dimension(&RootSystem::new(*t), w.coords()).expect("dominant"))
            .product()
    }
}

impl fmt::Display for IrrepEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "trivial");
        }
        for (i, (t, w)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{t}:{w}")?;
        }
        Ok(())
    }
}

/// Types scanned by the enumeration. `C2` is skipped since it is `B2`.
fn scanned_types() -> Vec<CartanType> {
    CartanType::all_supported()
        .into_iter()
        .filter(|t| !(t.family == Family::C && t.rank == 2))
        .collect()
}

/// Nontrivial dominant weights of `rs` whose irreducible has dimension `d`.
///
/// The dimension strictly increases in every Dynkin coordinate, so a
/// coordinate can stop growing as soon as the dimension (with all later
/// coordinates zero) exceeds `d`.
fn simple_irreps_of_dim(rs: &RootSystem, d: u64) -> Vec<Weight> {
    fn rec(rs: &RootSystem, d: &BigUint, i: usize, cur: &mut Vec<i32>, out: &mut Vec<Weight>) {
        if i == cur.len() {
            if cur.iter().any(|&c| c != 0) && &weyl_dimension(rs, cur).unwrap() == d {
                out.push(Weight(cur.clone()));
            }
            return;
        }
        let bound = i32::try_from(d.clone())
            .unwrap_or(i32::MAX)
            .saturating_sub(1);
        for v in 0..=bound.max(0) {
            cur[i] = v;
            // the remaining coordinates are still zero here
            if &weyl_dimension(rs, cur).unwrap() > d {
                break;
            }
            rec(rs, d, i + 1, cur, out);
        }
        cur[i] = 0;
    }
    let target = BigUint::from(d);
    let mut out = Vec::new();
    rec(rs, &target, 0, &mut vec![0; rs.rank()], &mut out);
    out
}

/// Every irreducible of dimension `d` of a supported simple algebra, plus
/// every two-factor product of nontrivial irreducibles with dimensions
/// multiplying to `d`. Products are listed once, with factors in canonical
/// (sorted) order.
pub fn enumerate_irreps_of_dim(d: u64) -> Result<Vec<IrrepEntry>> {
    if d == 0 || d > MAX_ENUMERATION_DIMENSION {
        return Err(Error::InvalidArgument(format!(
            "enumeration dimension must be in 1..={MAX_ENUMERATION_DIMENSION}, got {d}"
        )));
    }
    if d == 1 {
        return Ok(vec![IrrepEntry {
            factors: Vec::new(),
        }]);
    }
    let systems: Vec<RootSystem> = scanned_types().into_iter().map(RootSystem::new).collect();
    let simple_of = |dim: u64| -> Vec<(CartanType, Weight)> {
        systems
            .iter()
            .flat_map(|rs| {
                simple_irreps_of_dim(rs, dim)
                    .into_iter()
                    .map(move |w| (rs.cartan_type(), w))
            })
            .collect()
    };

    let mut out: Vec<IrrepEntry> = simple_of(d)
        .into_iter()
        .map(|f| IrrepEntry { factors: vec![f] })
        .collect();

    let mut products = Vec::new();
    for d1 in 2..d {
        let d2 = d / d1;
        if !d.is_multiple_of(d1) || d1 > d2 {
            continue;
        }
        let left = simple_of(d1);
        let right = if d1 == d2 {
            left.clone()
        } else {
            simple_of(d2)
        };
        for a in &left {
            for b in &right {
                let mut pair = vec![a.clone(), b.clone()];
                pair.sort();
                products.push(IrrepEntry { factors: pair });
            }
        }
    }
    products.sort();
    products.dedup();
    out.extend(products);
    Ok(out)
}
