//! Normalized reduced chains of pointed simplicial sets.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;

use super::complex::{ChainComplex, ChainMap};
use super::matrix::SparseMatrix;
use crate::error::{Error, Result};
use crate::simplicial::{FiniteSimplicialSet, FormalSimplex, SimplicialMap};

/// Position of a nondegenerate simplex in the reduced basis, `None` for the basepoint.
fn basis_index(x: &FiniteSimplicialSet, s: &FormalSimplex) -> Option<usize> {
    if s.is_degenerate() {
        return None;
    }
    match (s.dim(), x.basepoint()) {
        (0, Some(b)) if s.target() == b => None,
        (0, Some(b)) if s.target() > b => Some(s.target() - 1),
        _ => Some(s.target()),
    }
}

/// Chains on nondegenerate simplices modulo the basepoint, in degrees `0..=dim X`.
pub fn reduced_chain_complex(x: &FiniteSimplicialSet) -> Result<ChainComplex> {
    x.require_pointed("reduced chains")?;
    let dims = x.dims();
    let ranks: Vec<usize> = dims.iter().enumerate().map(|(d, &n)| if d == 0 { n - 1 } else { n }).collect();
    let mut boundaries = vec![SparseMatrix::zeros(0, ranks[0])];
    for d in 1..dims.len() {
        let columns = (0..dims[d])
            .map(|id| {
                x.faces_of(d, id)
                    .iter()
                    .enumerate()
                    .filter_map(|(i, f)| {
                        let sign = if i % 2 == 0 { 1 } else { -1 };
                        basis_index(x, f).map(|k| (k, BigInt::from(sign)))
                    })
                    .collect()
            })
            .collect();
        boundaries.push(SparseMatrix::from_columns(ranks[d - 1], columns));
    }
    Ok(ChainComplex::from_parts(0, ranks, boundaries))
}

/// The map on reduced chains; a simplex goes to its image when that is
/// nondegenerate and off the basepoint, and to zero otherwise.
pub fn chain_map(f: &SimplicialMap) -> Result<ChainMap> {
    if !f.is_valid() {
        return Err(Error::InvalidMap("chain map of an invalid simplicial map".into()));
    }
    let (s, t) = (f.source(), f.target());
    let source = Arc::new(reduced_chain_complex(s)?);
    let target = Arc::new(reduced_chain_complex(t)?);
    let mut maps = BTreeMap::new();
    for (d, imgs) in f.images().iter().enumerate() {
        let columns = imgs
            .iter()
            .enumerate()
            .filter(|(id, _)| basis_index(s, &FormalSimplex::nondegenerate(d, *id)).is_some())
            .map(|(_, img)| basis_index(t, img).map(|k| (k, BigInt::from(1))).into_iter().collect())
            .collect();
        maps.insert(d as i64, SparseMatrix::from_columns(target.rank(d as i64), columns));
    }
    ChainMap::new(source, target, maps)
}

/// Reduced homology of a pointed simplicial set.
pub fn reduced_homology(x: &FiniteSimplicialSet) -> Result<super::Homology> {
    Ok(reduced_chain_complex(x)?.homology())
}
