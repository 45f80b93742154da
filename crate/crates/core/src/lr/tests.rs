use num_bigint::BigUint;
use num_traits::One;

use super::*;
use crate::character::SizeCap;
use crate::lie::{group_irreducible_character, Group};

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn terms(d: &PartitionDecomposition) -> Vec<(Vec<u32>, u64)> {
    d.terms()
        .iter()
        .map(|(p, m)| (p.nonzero_parts().to_vec(), u64::try_from(m).unwrap()))
        .collect()
}

/// Tries every filling of `ν/λ` with values `1..=ℓ(μ)` and keeps the LR ones.
fn lr_brute(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !lambda.is_contained_in(nu) {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..nu.length())
        .flat_map(|r| (lambda.part(r) as usize..nu.part(r) as usize).map(move |c| (r, c)))
        .collect();
    let k = mu.length().max(1) as u32;
    let total = (k as u64).pow(cells.len() as u32);
    let mut count = 0;
    for code in 0..total {
        let mut x = code;
        let mut fill = std::collections::HashMap::new();
        for &cell in &cells {
            fill.insert(cell, (x % k as u64) as u32 + 1);
            x /= k as u64;
        }
        let content_ok = (1..=k)
            .all(|v| fill.values().filter(|&&e| e == v).count() as u32 == mu.part(v as usize - 1));
        let rows_ok = cells.iter().all(|&(r, c)| match fill.get(&(r, c + 1)) {
            Some(&right) => fill[&(r, c)] <= right,
            None => true,
        });
        let cols_ok = cells.iter().all(|&(r, c)| match fill.get(&(r + 1, c)) {
            Some(&down) => fill[&(r, c)] < down,
            None => true,
        });
        let mut seen = vec![0u32; k as usize + 1];
        let mut lattice_ok = true;
        for r in 0..nu.length() {
            for c in (lambda.part(r) as usize..nu.part(r) as usize).rev() {
                let v = fill[&(r, c)] as usize;
                seen[v] += 1;
                if v > 1 && seen[v] > seen[v - 1] {
                    lattice_ok = false;
                }
            }
        }
        if content_ok && rows_ok && cols_ok && lattice_ok {
            count += 1;
        }
    }
    count
}

fn all_partitions(max_size: u32) -> Vec<Partition> {
    (0..=max_size)
        .flat_map(|n| partitions_of(n, usize::MAX, u32::MAX))
        .collect()
}

#[test]
fn coefficient_examples() {
    assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), 1);
    assert_eq!(lr_coefficient(&p(&[2]), &p(&[2]), &p(&[3, 1])), 1);
    assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
    assert_eq!(lr_coefficient(&p(&[2]), &p(&[2]), &p(&[2, 1])), 0);
    assert_eq!(lr_coefficient(&p(&[1, 1]), &p(&[1]), &p(&[3])), 0);
}

#[test]
fn coefficients_match_brute_force() {
    let small = all_partitions(3);
    for lambda in &small {
        for mu in &small {
            let n = (lambda.size() + mu.size()) as u32;
            for nu in partitions_of(n, usize::MAX, u32::MAX) {
                assert_eq!(
                    lr_coefficient(lambda, mu, &nu),
                    lr_brute(lambda, mu, &nu),
                    "{lambda} {mu} {nu}"
                );
            }
        }
    }
}

#[test]
fn symmetry_in_lambda_and_mu() {
    let small = all_partitions(4);
    for lambda in &small {
        for mu in &small {
            let n = (lambda.size() + mu.size()) as u32;
            for nu in partitions_of(n, usize::MAX, u32::MAX) {
                assert_eq!(
                    lr_coefficient(lambda, mu, &nu),
                    lr_coefficient(mu, lambda, &nu)
                );
            }
        }
    }
}

#[test]
fn tensor_examples() {
    for m in 3..6 {
        assert_eq!(
            terms(&tensor_decompose_lr(&p(&[1]), &p(&[1]), m).unwrap()),
            vec![(vec![2], 1), (vec![1, 1], 1)]
        );
    }
    assert_eq!(
        terms(&tensor_decompose_lr(&p(&[2]), &p(&[2]), 3).unwrap()),
        vec![(vec![4], 1), (vec![3, 1], 1), (vec![2, 2], 1)]
    );
    assert_eq!(
        terms(&tensor_decompose_lr(&p(&[1]), &p(&[1]), 2).unwrap()),
        vec![(vec![2], 1), (vec![], 1)]
    );
    assert!(tensor_decompose_lr(&p(&[1, 1, 1]), &p(&[1]), 2).is_err());
}

#[test]
fn dimension_is_conserved() {
    let small = all_partitions(4);
    for m in 1..=5 {
        for lambda in small.iter().filter(|l| l.length() <= m) {
            for mu in small.iter().filter(|l| l.length() <= m) {
                let d = tensor_decompose_lr(lambda, mu, m).unwrap();
                let expected =
                    schur_dimension(lambda, m).unwrap() * schur_dimension(mu, m).unwrap();
                assert_eq!(d.dimension(), expected, "{lambda} {mu} m={m}");
            }
        }
    }
}

#[test]
fn squares_have_at_most_twice_the_rows() {
    for lambda in all_partitions(5) {
        let ell = lambda.length();
        let n = 2 * lambda.size() as u32;
        for nu in partitions_of(n, usize::MAX, u32::MAX) {
            if lr_coefficient(&lambda, &lambda, &nu) > 0 {
                assert!(nu.length() <= 2 * ell, "{lambda} ⊗ {lambda} ∋ {nu}");
            }
        }
    }
}

#[test]
fn pieri_examples() {
    assert_eq!(
        terms(&pieri_row(&p(&[1]), 1, 3).unwrap()),
        vec![(vec![2], 1), (vec![1, 1], 1)]
    );
    assert_eq!(
        terms(&pieri_row(&p(&[2]), 2, 3).unwrap()),
        vec![(vec![4], 1), (vec![3, 1], 1), (vec![2, 2], 1)]
    );
    assert_eq!(
        terms(&pieri_row(&p(&[3]), 3, 3).unwrap()),
        vec![
            (vec![6], 1),
            (vec![5, 1], 1),
            (vec![4, 2], 1),
            (vec![3, 3], 1)
        ]
    );
    assert!(pieri_row(&p(&[1]), 0, 3).is_err());
    assert!(pieri_row(&p(&[1]), 1, 1).is_err());
}

#[test]
fn pieri_agrees_with_lr() {
    for lambda in all_partitions(4) {
        for k in 1..=3 {
            for m in 2..=5 {
                if lambda.length() > m {
                    continue;
                }
                let lr = tensor_decompose_lr(&lambda, &p(&[k]), m).unwrap();
                assert_eq!(
                    pieri_row(&lambda, k, m).unwrap(),
                    lr,
                    "{lambda} k={k} m={m}"
                );
            }
        }
    }
}

#[test]
fn kostka_examples() {
    let cap = SizeCap::default();
    let std2 = kostka_weights(&p(&[1]), 2, cap).unwrap();
    let w: Vec<_> = std2.iter().map(|(w, m)| (w.0.clone(), m.clone())).collect();
    assert_eq!(
        w,
        vec![(vec![-1], BigUint::one()), (vec![1], BigUint::one())]
    );

    let dual3 = kostka_weights(&p(&[1, 1]), 3, cap).unwrap();
    assert_eq!(dual3.num_weights(), 3);
    assert!(dual3.iter().all(|(_, m)| m.is_one()));
    assert_eq!(dual3, kostka_weights(&p(&[1]), 3, cap).unwrap().dual());

    let sym2 = kostka_weights(&p(&[2]), 3, cap).unwrap();
    assert_eq!(sym2.num_weights(), 6);
    assert_eq!(sym2.dimension(), BigUint::from(6u32));

    let sl1 = kostka_weights(&p(&[3, 0]), 1, cap).unwrap();
    assert_eq!(sl1.dimension(), BigUint::one());
    assert!(kostka_weights(&p(&[1, 1, 1]), 2, cap).is_err());
    assert!(matches!(
        kostka_weights(&p(&[4, 2]), 6, SizeCap(10)),
        Err(Error::SizeCap { .. })
    ));
}

#[test]
fn kostka_matches_freudenthal() {
    let cap = SizeCap::default();
    for m in 2..=5usize {
        let group = Group::special_linear(m).unwrap();
        for lambda in all_partitions(5).into_iter().filter(|l| l.length() <= m) {
            let via_tableaux = kostka_weights(&lambda, m, cap).unwrap();
            let label = lambda.dynkin_label(m).unwrap();
            let via_roots = group_irreducible_character(&group, &label, cap).unwrap();
            assert_eq!(via_tableaux, via_roots, "{lambda} m={m}");
            assert_eq!(
                via_tableaux.dimension(),
                schur_dimension(&lambda, m).unwrap()
            );
        }
    }
}

#[test]
fn lr_matches_character_stripping() {
    let cap = SizeCap::default();
    let small = all_partitions(3);
    for m in 2..=4 {
        for lambda in small.iter().filter(|l| l.length() <= m) {
            for mu in small.iter().filter(|l| l.length() <= m) {
                let a = kostka_weights(lambda, m, cap).unwrap();
                let b = kostka_weights(mu, m, cap).unwrap();
                let via_chars = a.tensor(&b, cap).unwrap().decompose().unwrap();
                let via_lr = tensor_decompose_lr(lambda, mu, m)
                    .unwrap()
                    .to_decomposition()
                    .unwrap();
                assert_eq!(via_chars, via_lr, "{lambda} {mu} m={m}");
            }
        }
    }
}
