//! `Sym^j(Sym^k V)` for `dim V = 2` in closed form.
//!
//! The multiplicity of `Sym^{jk−2w} V` is `N(j,k,w)`, the coefficient of
//! `q^w` in `(1 − q)·[j+k choose k]_q`. Determinant twists are dropped: the
//! answer is reported for `SL₂`.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::character::Decomposition;
use crate::error::{Error, Result};
use crate::lie::{Group, Weight};
use crate::partitions::{gaussian_polynomial, IntPolynomial};

fn first_difference(g: &IntPolynomial, w: usize) -> BigUint {
    let prev = if w == 0 {
        BigInt::zero()
    } else {
        g.coeff(w - 1)
    };
    let n = g.coeff(w) - prev;
    assert!(!n.is_negative(), "Gaussian coefficients are unimodal");
    n.to_biguint().expect("nonnegative")
}

/// `N(j,k,w)` for `0 ≤ w ≤ ⌊jk/2⌋`.
pub fn plethysm_coefficient(j: u32, k: u32, w: usize) -> Result<BigUint> {
    let max = (j as usize * k as usize) / 2;
    if w > max {
        return Err(Error::PlethysmRange { w, max });
    }
    let g = gaussian_polynomial((j + k) as usize, k as usize)?;
    Ok(first_difference(&g, w))
}

/// `Sym^j(Sym^k V)` as a sum of `Sym^{jk−2w} V`, as `SL₂` highest weights.
pub fn sym_of_sym_sl2(j: u32, k: u32) -> Result<Decomposition> {
    if j == 0 {
        return Err(Error::InvalidArgument(
            "sym_of_sym_sl2 needs j >= 1".to_string(),
        ));
    }
    let g = gaussian_polynomial((j + k) as usize, k as usize)?;
    let jk = j as usize * k as usize;
    let terms = (0..=jk / 2).map(|w| (Weight(vec![(jk - 2 * w) as i32]), first_difference(&g, w)));
    Decomposition::from_terms(Group::special_linear(2)?, terms)
}

/// Whether `Sym³` detects `Sym^{n−1}(SL₂) ⊂ GL_n`: a trivial summand exists
/// iff `n` is odd and `N(3, n−1, 3(n−1)/2) ≥ 1`.
pub fn detects_sym3_sl2(n: u32) -> Result<bool> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "detects_sym3_sl2 needs n >= 2, got {n}"
        )));
    }
    let k = n - 1;
    if (3 * k) % 2 == 1 {
        return Ok(false);
    }
    Ok(!plethysm_coefficient(3, k, 3 * k as usize / 2)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::SizeCap;
    use crate::lie::irreducible_character;
    use crate::lie::{CartanType, RootSystem};
    use num_traits::One;

    fn n(j: u32, k: u32, w: usize) -> u64 {
        plethysm_coefficient(j, k, w).unwrap().try_into().unwrap()
    }

    fn binomial(a: u64, b: u64) -> u64 {
        (0..b).fold(1, |acc, i| acc * (a - i) / (i + 1))
    }

    #[test]
    fn coefficient_examples() {
        for j in 1..5 {
            for k in 0..6 {
                assert_eq!(n(j, k, 0), 1);
            }
        }
        assert_eq!(
            (0..=6).map(|w| n(3, 4, w)).collect::<Vec<_>>(),
            vec![1, 0, 1, 1, 1, 0, 1]
        );
        assert_eq!(n(3, 2, 3), 0);
        assert!(matches!(
            plethysm_coefficient(3, 2, 4),
            Err(Error::PlethysmRange { w: 4, max: 3 })
        ));
    }

    #[test]
    fn sym_squared_pattern() {
        for k in 0..=40u32 {
            for w in 0..=k as usize {
                assert_eq!(n(2, k, w), u64::from(w % 2 == 0), "k={k} w={w}");
            }
        }
    }

    #[test]
    fn dimensions_add_up() {
        for j in 1..=4u32 {
            for k in 0..=12u32 {
                let d = sym_of_sym_sl2(j, k).unwrap();
                let total: u64 = d
                    .terms()
                    .iter()
                    .map(|(w, m)| u64::try_from(m).unwrap() * (w.0[0] as u64 + 1))
                    .sum();
                assert_eq!(
                    total,
                    binomial(u64::from(j + k), u64::from(j)),
                    "j={j} k={k}"
                );
                assert_eq!(d.dimension(), BigUint::from(total));
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let as_pairs = |d: Decomposition| -> Vec<(i32, u64)> {
            d.terms()
                .iter()
                .map(|(w, m)| (w.0[0], m.try_into().unwrap()))
                .collect()
        };
        assert_eq!(
            as_pairs(sym_of_sym_sl2(2, 2).unwrap()),
            vec![(4, 1), (0, 1)]
        );
        assert_eq!(
            as_pairs(sym_of_sym_sl2(3, 4).unwrap()),
            vec![(12, 1), (8, 1), (6, 1), (4, 1), (0, 1)]
        );
        for k in 0..8 {
            assert_eq!(as_pairs(sym_of_sym_sl2(1, k).unwrap()), vec![(k as i32, 1)]);
        }
    }

    #[test]
    fn agrees_with_character_pipeline() {
        let a1 = RootSystem::new(CartanType::new(crate::lie::Family::A, 1).unwrap());
        let cap = SizeCap::default();
        for j in [2u32, 3] {
            for k in 0..=8u32 {
                let v = irreducible_character(&a1, &[k as i32], cap).unwrap();
                let pipeline = v.sym_power(j, cap).unwrap().decompose().unwrap();
                assert_eq!(pipeline, sym_of_sym_sl2(j, k).unwrap(), "j={j} k={k}");
            }
        }
    }

    #[test]
    fn sym_cube_detection() {
        let a1 = RootSystem::new(CartanType::new(crate::lie::Family::A, 1).unwrap());
        let cap = SizeCap::default();
        for n in 2..=13u32 {
            let closed = detects_sym3_sl2(n).unwrap();
            assert_eq!(closed, n % 4 == 1, "n={n}");
            let v = irreducible_character(&a1, &[n as i32 - 1], cap).unwrap();
            let mult = v.sym_power(3, cap).unwrap().trivial_multiplicity().unwrap();
            assert_eq!(!mult.is_zero(), closed, "n={n}");
            if closed {
                assert!(mult.is_one());
            }
        }
        assert!(detects_sym3_sl2(1).is_err());
    }
}
