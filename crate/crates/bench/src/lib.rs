//! Benchmark fixtures shared by the criterion targets.

use invline_core::detect::Factor;
use invline_core::{CartanType, GroupSpec, Partition, Weight};

/// `Sym^k(C^3)` as a representation of `SL_3`.
pub fn sl3_sym(k: i32) -> GroupSpec {
    let ty: CartanType = "A2".parse().expect("A2");
    GroupSpec::new(vec![Factor::Highest {
        ty,
        weight: Weight(vec![k, 0]),
    }])
}

/// `Sym^{n-1}(C^2)` as a representation of `SL_2`.
pub fn sl2_sym(n: i32) -> GroupSpec {
    let ty: CartanType = "A1".parse().expect("A1");
    GroupSpec::new(vec![Factor::Highest {
        ty,
        weight: Weight(vec![n - 1]),
    }])
}

/// Shapes with `|λ| = n` used by the LR benchmark.
pub fn shapes(n: u32) -> Vec<Partition> {
    invline_core::partitions::partitions_of(n, usize::MAX, u32::MAX)
}
