use num_bigint::BigUint;
use num_traits::One;

use super::group::Group;
use super::root_system::RootSystem;
use super::weight::Weight;
use crate::error::{Error, Result};

/// Weyl dimension formula `Π_{α>0} (λ+ρ, α) / (ρ, α)`, evaluated exactly.
pub fn weyl_dimension(rs: &RootSystem, lambda: &[i32]) -> Result<BigUint> {
    rs.check_weight(lambda)?;
    if lambda.iter().any(|&c| c < 0) {
        return Err(Error::NotDominant {
            weight: Weight::from(lambda).to_string(),
        });
    }
    let shifted: Vec<i32> = lambda.iter().map(|c| c + 1).collect();
    let rho = vec![1; rs.rank()];
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for idx in 0..rs.positive_roots().len() {
        num *= rs.pair_with_root(&shifted, idx) as u64;
        den *= rs.pair_with_root(&rho, idx) as u64;
    }
    debug_assert!((&num % &den) == BigUint::default());
    Ok(num / den)
}

/// Dimension of the irreducible of a product group (product over factors).
pub fn group_dimension(group: &Group, lambda: &[i32]) -> Result<BigUint> {
    group.check_weight(lambda)?;
    group.split(lambda).try_fold(
        BigUint::one(),
        |acc, (f, x)| Ok(acc * weyl_dimension(f, x)?),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::CartanType;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse::<CartanType>().unwrap())
    }

    fn dim(s: &str, w: &[i32]) -> u64 {
        weyl_dimension(&rs(s), w).unwrap().try_into().unwrap()
    }

    #[test]
    fn classical_examples() {
        assert_eq!(dim("A1", &[8]), 9);
        for k in 0..10 {
            assert_eq!(dim("A2", &[k, 0]), ((k + 1) * (k + 2) / 2) as u64);
        }
        assert_eq!(dim("B4", &[1, 0, 0, 0]), 9);
        assert_eq!(dim("B4", &[0, 0, 0, 1]), 16);
        assert_eq!(dim("B4", &[0, 1, 0, 0]), 36);
        assert_eq!(dim("B4", &[2, 0, 0, 0]), 44);
        assert_eq!(dim("B4", &[3, 0, 0, 0]), 156);
        assert_eq!(dim("C2", &[1, 0]), 4);
        assert_eq!(dim("C3", &[0, 1, 0]), 14);
        assert_eq!(dim("D4", &[1, 0, 0, 0]), 8);
        assert_eq!(dim("D4", &[0, 1, 0, 0]), 28);
        assert_eq!(dim("G2", &[1, 0]), 7);
        assert_eq!(dim("G2", &[0, 1]), 14);
        assert_eq!(dim("A8", &[1, 0, 0, 0, 0, 0, 0, 0]), 9);
        assert_eq!(dim("A3", &[0, 1, 0]), 6);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            weyl_dimension(&rs("A2"), &[1, -1]),
            Err(Error::NotDominant { .. })
        ));
        assert!(matches!(
            weyl_dimension(&rs("A2"), &[1]),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn strictly_increasing_in_each_coordinate() {
        for t in CartanType::all_supported()
            .into_iter()
            .filter(|t| t.rank <= 4)
        {
            let r = rs(&t.to_string());
            let base = vec![1; t.rank];
            let d0 = weyl_dimension(&r, &base).unwrap();
            for i in 0..t.rank {
                let mut up = base.clone();
                up[i] += 1;
                assert!(weyl_dimension(&r, &up).unwrap() > d0);
            }
        }
    }

    #[test]
    fn product_dimension() {
        let g = Group::product(&["A1".parse().unwrap(), "A2".parse().unwrap()]);
        assert_eq!(
            group_dimension(&g, &[2, 1, 0]).unwrap(),
            BigUint::from(9u32)
        );
        assert_eq!(
            group_dimension(&Group::trivial(), &[]).unwrap(),
            BigUint::from(1u32)
        );
    }
}
