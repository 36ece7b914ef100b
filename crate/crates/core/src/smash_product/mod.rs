//! The naive smash product of spectra along a partition function.

pub mod compare;
pub mod naive;
pub mod partition;

pub use compare::{commute_check, kunneth_compare, HomologyComparison};
pub use naive::{iso_to_sphere, naive_smash, naive_smash_truncated, twist_iso, NaiveSmash, Twist};
pub use partition::{make_partition, PartitionFunction, PartitionSpec};
