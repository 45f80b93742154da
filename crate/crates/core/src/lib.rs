//! Exact representation-theoretic computations: partitions and Gaussian
//! polynomials, Littlewood–Richardson coefficients, root systems and
//! Freudenthal characters, power functors, and invariant-line detection for
//! subgroups given by irreducible representations.

pub mod character;
pub mod detect;
pub mod error;
pub mod lie;
pub mod lr;
pub mod partitions;
pub mod plethysm;
pub mod report;

pub use character::{Character, Decomposition, DominantCharacter, Functor, SizeCap};
pub use detect::{detect, DetectionReport, GroupSpec};
pub use error::{Error, Result};
pub use lie::{CartanType, Group, RootSystem, Weight};
pub use lr::PartitionDecomposition;
pub use partitions::{IntPolynomial, Partition};
pub use report::{Report, Table};
