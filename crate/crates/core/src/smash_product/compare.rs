//! Homology-level comparisons of naive smash products.

use crate::error::Result;
use crate::homology::{tensor, Homology};
use crate::spectra::{stable_chains, stable_homology, Spectrum};

use super::naive::naive_smash;
use super::partition::PartitionFunction;

/// Two homology computations and whether they agree in every degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyComparison {
    pub left: Homology,
    pub right: Homology,
    pub equal: bool,
}

impl HomologyComparison {
    fn of(left: Homology, right: Homology) -> Self {
        let equal = left == right;
        HomologyComparison { left, right, equal }
    }
}

/// `H(A ∧_q B)` against `H(C(A) ⊗ C(B))` for the stable chains `C`.
pub fn kunneth_compare(a: &Spectrum, b: &Spectrum, q: &PartitionFunction) -> Result<HomologyComparison> {
    let left = stable_homology(naive_smash(a, b, q)?.spectrum())?;
    let right = tensor(&stable_chains(a)?, &stable_chains(b)?).homology();
    Ok(HomologyComparison::of(left, right))
}

/// `H(A ∧_q B)` against `H(B ∧_{q'} A)`.
pub fn commute_check(
    a: &Spectrum,
    b: &Spectrum,
    q: &PartitionFunction,
    q2: &PartitionFunction,
) -> Result<HomologyComparison> {
    let left = stable_homology(naive_smash(a, b, q)?.spectrum())?;
    let right = stable_homology(naive_smash(b, a, q2)?.spectrum())?;
    Ok(HomologyComparison::of(left, right))
}
