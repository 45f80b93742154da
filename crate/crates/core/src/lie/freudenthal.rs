//! Weight multiplicities of irreducible representations via Freudenthal's
//! recursion.
//!
//! Only dominant weights are computed directly. Writing `λ − μ = Σ n_i α_i`,
//! the recursion reads
//!
//! ```text
//! (λ+μ+2ρ, λ−μ) · m(μ) = 2 Σ_{α>0} Σ_{k≥1} (μ+kα, α) · m(μ+kα)
//! ```
//!
//! With the symmetrized form every pairing above is an integer, so the whole
//! recursion runs over exact integers; each step ends in an exact division
//! which is asserted.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::group::Group;
use super::root_system::RootSystem;
use super::weight::Weight;
use crate::character::{Character, SizeCap};
use crate::error::{Error, Result};

/// Dominant weights of the irreducible `V_λ` paired with `λ − μ` in simple-root
/// coordinates, ordered by depth (height of `λ − μ`).
fn dominant_weights_below(rs: &RootSystem, lambda: &[i32]) -> Vec<(Weight, Vec<i32>)> {
    let r = rs.rank();
    let start = Weight::from(lambda);
    let mut seen: HashSet<Weight> = HashSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::new();
    queue.push_back((start, vec![0i32; r]));
    let mut out = Vec::new();
    // Dominant weights below λ are connected through subtraction of positive
    // roots without leaving the dominant chamber.
    while let Some((mu, depth)) = queue.pop_front() {
        for (root, coeffs) in rs.positive_root_weights().iter().zip(rs.positive_roots()) {
            let nu = &mu - root;
            if nu.is_dominant() && !seen.contains(&nu) {
                seen.insert(nu.clone());
                let d: Vec<i32> = depth.iter().zip(coeffs).map(|(a, b)| a + b).collect();
                queue.push_back((nu, d));
            }
        }
        out.push((mu, depth));
    }
    out.sort_by_key(|(_, d)| d.iter().sum::<i32>());
    out
}

/// Multiplicities of the dominant weights of `V_λ`.
pub fn dominant_multiplicities(
    rs: &RootSystem,
    lambda: &[i32],
) -> Result<BTreeMap<Weight, BigUint>> {
    rs.check_weight(lambda)?;
    if lambda.iter().any(|&c| c < 0) {
        return Err(Error::NotDominant {
            weight: Weight::from(lambda).to_string(),
        });
    }
    let weights = dominant_weights_below(rs, lambda);
    let mut mult: HashMap<Weight, BigInt> = HashMap::with_capacity(weights.len());
    let in_support: HashSet<&Weight> = weights.iter().map(|(w, _)| w).collect();

    for (mu, depth) in &weights {
        if depth.iter().all(|&n| n == 0) {
            mult.insert(mu.clone(), BigInt::one());
            continue;
        }
        let sum: Vec<i32> = lambda
            .iter()
            .zip(mu.coords())
            .map(|(l, m)| l + m + 2)
            .collect();
        let denom = rs.pair_with_root_combination(&sum, depth);
        debug_assert!(denom > 0);

        let mut numer = BigInt::zero();
        for (idx, root) in rs.positive_root_weights().iter().enumerate() {
            let mut x = mu.clone();
            loop {
                x.add_assign_slice(root.coords(), 1);
                let dom = rs.dominant_representative(x.coords());
                let Some(m) = mult.get(&dom) else {
                    // α-strings are unbroken: once we leave the weights we are done
                    debug_assert!(!in_support.contains(&dom), "freudenthal order violated");
                    break;
                };
                numer += m * BigInt::from(rs.pair_with_root(x.coords(), idx));
            }
        }
        numer *= 2;
        let (q, rem) = numer.div_rem(&BigInt::from(denom));
        assert!(
            rem.is_zero() && !q.is_negative(),
            "freudenthal recursion produced a non-integral multiplicity at {mu}"
        );
        mult.insert(mu.clone(), q);
    }

    Ok(weights
        .into_iter()
        .map(|(w, _)| {
            let m = mult.remove(&w).unwrap_or_default();
            (w, m.to_biguint().expect("nonnegative multiplicity"))
        })
        .collect())
}

/// Dominant multiplicities of the irreducible of a product group with
/// highest weight `λ` (products of the factor multiplicities).
pub fn group_dominant_multiplicities(
    group: &Group,
    lambda: &[i32],
) -> Result<BTreeMap<Weight, BigUint>> {
    group.check_weight(lambda)?;
    let mut acc: BTreeMap<Weight, BigUint> = BTreeMap::new();
    acc.insert(Weight(Vec::new()), BigUint::one());
    for (f, x) in group.split(lambda) {
        let part = dominant_multiplicities(f, x)?;
        let mut next = BTreeMap::new();
        for (w, m) in &acc {
            for (v, n) in &part {
                next.insert(w.concat(v), m * n);
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// Full weight multiset of the irreducible with highest weight `λ`.
pub fn irreducible_character(rs: &RootSystem, lambda: &[i32], cap: SizeCap) -> Result<Character> {
    let group = Group::from_root_systems(vec![std::sync::Arc::new(rs.clone())]);
    group_irreducible_character(&group, lambda, cap)
}

/// Full weight multiset of an irreducible of a product group.
pub fn group_irreducible_character(
    group: &Group,
    lambda: &[i32],
    cap: SizeCap,
) -> Result<Character> {
    let dominant = group_dominant_multiplicities(group, lambda)?;
    crate::character::DominantCharacter::from_dominant_map(group.clone(), dominant)
        .orbit_expand(cap)
}
