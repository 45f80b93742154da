//! Integer partitions, Gaussian polynomials and bounded partition counts.

mod counting;
mod partition;
mod poly;

pub use counting::{
    count_bounded_partitions, count_bounded_partitions_batch, verify_corollary_identities,
    CorollaryReport, CorollaryRow,
};
pub use partition::{partitions_of, Partition};
pub use poly::{gaussian_polynomial, IntPolynomial};
