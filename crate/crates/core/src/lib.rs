//! Sequential spectra of finite pointed simplicial sets, computed exactly.
//!
//! The crate builds truncated spectra (finitely many stored levels, freely
//! suspended above the truncation), their colimits and smash products, and
//! measures them with integer homology computed through Smith normal form.

pub mod corpus;
pub mod cospectrum;
pub mod error;
pub mod homology;
pub mod json;
pub mod limits;
pub mod simplicial;
pub mod smash_product;
pub mod spectra;

pub use error::{Error, Result};
