//! Root systems, Weyl dimensions, Freudenthal multiplicities and the
//! dimension-`d` irreducible scan.

mod dimension;
mod enumerate;
mod freudenthal;
mod group;
mod root_system;
mod weight;

pub use dimension::{group_dimension, weyl_dimension};
pub use enumerate::{
    enumerate_irreps_of_dim, IrrepEntry, MAX_ENUMERATION_DIMENSION, MAX_PRODUCT_FACTORS,
};
pub use freudenthal::{
    dominant_multiplicities, group_dominant_multiplicities, group_irreducible_character,
    irreducible_character,
};
pub use group::Group;
pub use root_system::{
    root_system, CartanType, Family, RootSystem, EXCLUDED_MIN_DIMENSIONS, MAX_TYPE_A_RANK,
};
pub use weight::Weight;
