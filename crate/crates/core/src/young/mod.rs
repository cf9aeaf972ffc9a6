//! Partitions of `n` and the symmetric-group data attached to them.

mod character;
mod diagram;
mod enumerate;
mod irrep;
mod rsk;

pub use character::{character, CHARACTER_CAP};
pub use diagram::YoungDiagram;
pub use enumerate::{
    enumerate_partitions, enumerate_partitions_with_cap, partition_count, partition_counts_through,
    Partitions, DEFAULT_ENUMERATION_CAP,
};
pub(crate) use enumerate::check_cap;
pub use irrep::{
    dim_irrep, dim_irrep_with, dim_mult_ratio, factorial, log_dim, log_mult, log_mult_over_dim,
    multiplicity, IrrepStats, MinSide,
};
pub use rsk::{
    rsk_shape, sample_plancherel, sample_plancherel_with, sample_schur_weyl,
    sample_schur_weyl_with, seeded_rng,
};
