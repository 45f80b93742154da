use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{One, Zero};
use proptest::prelude::*;

use invline_core::lie::{group_dimension, group_irreducible_character, CartanType};
use invline_core::lr::{lr_coefficient, pieri_row, schur_dimension, tensor_decompose_lr};
use invline_core::partitions::{count_bounded_partitions, gaussian_polynomial, partitions_of};
use invline_core::plethysm::{plethysm_coefficient, sym_of_sym_sl2};
use invline_core::{Functor, Group, Partition, SizeCap};

fn partition(max_len: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn small_type() -> impl Strategy<Value = CartanType> {
    prop::sample::select(vec!["A1", "A2", "A3", "B2", "B3", "C3", "G2"])
        .prop_map(|s| s.parse().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_is_an_involution(lambda in partition(6, 6)) {
        let c = lambda.conjugate();
        prop_assert_eq!(c.size(), lambda.size());
        prop_assert_eq!(c.length() as u32, lambda.part(0));
        prop_assert_eq!(c.conjugate(), lambda.normalized());
    }

    #[test]
    fn dynkin_labels_round_trip(lambda in partition(5, 6), extra in 0usize..3) {
        let m = lambda.length().max(1) + extra;
        let label = lambda.dynkin_label(m).unwrap();
        prop_assert_eq!(Partition::from_dynkin(&label).unwrap(), lambda.normalize_sl(m).unwrap());
    }

    #[test]
    fn sl_dual_is_an_involution_up_to_columns(lambda in partition(4, 5), extra in 1usize..3) {
        let m = lambda.length() + extra;
        let twice = lambda.dual_sl(m).unwrap().dual_sl(m).unwrap();
        prop_assert_eq!(twice.normalize_sl(m).unwrap(), lambda.normalize_sl(m).unwrap());
        prop_assert_eq!(schur_dimension(&lambda.dual_sl(m).unwrap(), m).unwrap(), schur_dimension(&lambda, m).unwrap());
    }

    #[test]
    fn bounded_partitions_are_symmetric(k in 0usize..9, j in 0usize..9, n in 0usize..40) {
        let p = count_bounded_partitions(k, j, n);
        prop_assert_eq!(&p, &count_bounded_partitions(j, k, n));
        if n <= k * j {
            prop_assert_eq!(&p, &count_bounded_partitions(k, j, k * j - n));
        } else {
            prop_assert!(p.is_zero());
        }
    }

    #[test]
    fn bounded_partitions_match_enumeration(k in 0usize..6, j in 0u32..6, n in 0u32..20) {
        let listed = partitions_of(n, k, j).len();
        prop_assert_eq!(count_bounded_partitions(k, j as usize, n as usize), BigUint::from(listed));
    }

    #[test]
    fn gaussian_at_one_is_binomial(a in 0usize..30, b in 0usize..30) {
        prop_assume!(b <= a);
        let g = gaussian_polynomial(a, b).unwrap();
        prop_assert_eq!(g.eval_at_one(), binomial(BigInt::from(a), BigInt::from(b)));
        prop_assert_eq!(g.degree(), Some(b * (a - b)));
        prop_assert!(g.is_palindromic());
    }

    #[test]
    fn plethysm_coefficients_are_reciprocal(j in 1u32..10, k in 1u32..10) {
        for w in 0..=(j * k / 2) as usize {
            prop_assert_eq!(plethysm_coefficient(j, k, w).unwrap(), plethysm_coefficient(k, j, w).unwrap());
        }
    }

    #[test]
    fn lr_coefficients_are_symmetric_and_graded(lambda in partition(3, 3), mu in partition(3, 3), nu in partition(4, 5)) {
        let c = lr_coefficient(&lambda, &mu, &nu);
        prop_assert_eq!(c, lr_coefficient(&mu, &lambda, &nu));
        prop_assert_eq!(c, lr_coefficient(&lambda.conjugate(), &mu.conjugate(), &nu.conjugate()));
        if nu.size() != lambda.size() + mu.size() || !lambda.is_contained_in(&nu) {
            prop_assert_eq!(c, 0);
        }
    }

    #[test]
    fn lr_product_conserves_dimension(lambda in partition(3, 3), mu in partition(3, 3), extra in 0usize..3) {
        let m = lambda.length().max(mu.length()).max(1) + extra;
        let d = tensor_decompose_lr(&lambda, &mu, m).unwrap();
        let product = schur_dimension(&lambda, m).unwrap() * schur_dimension(&mu, m).unwrap();
        prop_assert_eq!(d.dimension(), product);
    }

    #[test]
    fn pieri_agrees_with_lr(lambda in partition(3, 4), k in 1u32..4, extra in 0usize..3) {
        let m = (lambda.length() + extra).max(2);
        prop_assert_eq!(pieri_row(&lambda, k, m).unwrap(), tensor_decompose_lr(&lambda, &Partition::row(k), m).unwrap());
    }

    #[test]
    fn irreducible_characters_have_weyl_dimension(ty in small_type(), coords in prop::collection::vec(0i32..3, 4)) {
        let group = Group::simple(ty);
        let w = &coords[..group.rank()];
        let ch = group_irreducible_character(&group, w, SizeCap::default()).unwrap();
        prop_assert_eq!(ch.dimension(), group_dimension(&group, w).unwrap());
        prop_assert!(ch.is_weyl_invariant());
        prop_assert_eq!(&ch.dual().dual(), &ch);
        let d = ch.decompose().unwrap();
        prop_assert_eq!(d.len(), 1);
        prop_assert!(d.multiplicity(&invline_core::Weight(w.to_vec())).is_one());
    }

    #[test]
    fn decompositions_reconstruct(ty in small_type(), a in prop::collection::vec(0i32..2, 4), b in prop::collection::vec(0i32..2, 4)) {
        let cap = SizeCap::default();
        let group = Group::simple(ty);
        let r = group.rank();
        let x = group_irreducible_character(&group, &a[..r], cap).unwrap();
        let y = group_irreducible_character(&group, &b[..r], cap).unwrap();
        let product = x.tensor(&y, cap).unwrap();
        let d = product.decompose().unwrap();
        prop_assert_eq!(d.reconstruct(cap).unwrap(), product.clone());
        prop_assert_eq!(d.dimension(), x.dimension() * y.dimension());
        // Schur: <x (x) y, trivial> = [y = dual x]
        let expect = u32::from(y == x.dual());
        prop_assert_eq!(product.trivial_multiplicity().unwrap(), BigUint::from(expect));
    }

    #[test]
    fn sl2_sym_power_matches_closed_form(j in 1u32..5, k in 0i32..9) {
        let cap = SizeCap::default();
        let group = Group::special_linear(2).unwrap();
        let v = group_irreducible_character(&group, &[k], cap).unwrap();
        let via_chars = Functor::Sym(j).apply(&v, cap).unwrap().decompose().unwrap();
        prop_assert_eq!(via_chars, sym_of_sym_sl2(j, k as u32).unwrap());
    }

    #[test]
    fn dominant_path_matches_full_path(ty in small_type(), coords in prop::collection::vec(0i32..2, 4), f in prop::sample::select(vec!["sym2", "ext2", "sym3", "ext3", "tensor2", "tensor3"])) {
        let cap = SizeCap::default();
        let group = Group::simple(ty);
        let v = group_irreducible_character(&group, &coords[..group.rank()], cap).unwrap();
        prop_assume!(v.dimension() <= BigUint::from(30u32));
        let functor: Functor = f.parse().unwrap();
        let full = functor.apply(&v, cap).unwrap().decompose().unwrap();
        let fast = functor.apply_dominant(&v, cap).unwrap().decompose().unwrap();
        prop_assert_eq!(full, fast);
    }
}
