//! Integer chain complexes, Smith normal form and homology.

pub mod chains;
pub mod complex;
pub mod matrix;
pub mod snf;

pub use chains::{chain_map, reduced_chain_complex, reduced_homology};
pub use complex::{
    homology, induced_homology_map, is_homology_iso, tensor, ChainComplex, ChainMap, Homology, HomologyGroup,
    InducedMap,
};
pub use matrix::{Matrix, SparseMatrix};
pub use snf::{invariant_factors, is_divisor_chain, smith_normal_form, SnfResult};
