//! Maps out of a realized left adjoint against compatible families of maps out of its summands.

use std::collections::HashMap;
use std::sync::Arc;

use super::realize::realize_left_adjoint;
use super::TruncatedCospectrum;
use crate::error::Result;
use crate::simplicial::{Budget, FormalSimplex};
use crate::spectra::{enumerate_spectrum_maps, Spectrum, SpectrumMap};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionProbe {
    /// `|Hom(L(A), B)|`
    pub left_maps: usize,
    /// families `g_n : X_n ∧ A_n -> B` with `g_n ∘ (X_n ∧ σ_{n-1}) = g_{n-1} ∘ (τ_n ∧ A_{n-1})`
    pub families: usize,
    /// for each map out of `L(A)`, its family as indices into the per-summand hom-sets
    pub restriction: Vec<Vec<usize>>,
    pub bijective: bool,
}

type Key = Vec<Vec<Vec<FormalSimplex>>>;

fn key(f: &SpectrumMap) -> Key {
    f.components().iter().map(|c| c.images().to_vec()).collect()
}

fn agree(f: &SpectrumMap, g: &SpectrumMap) -> bool {
    f.components().iter().zip(g.components()).all(|(a, b)| a.images() == b.images())
}

pub fn adjunction_bijection_probe(
    x: &TruncatedCospectrum,
    a: &Spectrum,
    b: &Arc<Spectrum>,
    budget: &mut Budget,
) -> Result<BijectionProbe> {
    let r = realize_left_adjoint(x, a)?;
    let left = enumerate_spectrum_maps(r.spectrum(), b, budget)?;
    let t = r.spectrum().truncation().max(b.truncation());
    let candidates = r
        .target
        .summands()
        .iter()
        .map(|s| enumerate_spectrum_maps(s, b, budget))
        .collect::<Result<Vec<_>>>()?;
    let index: Vec<HashMap<Key, usize>> =
        candidates.iter().map(|c| c.iter().enumerate().map(|(i, f)| (key(f), i)).collect()).collect();
    let sigma = r.sigma_parts.iter().map(|f| f.retruncate(t)).collect::<Result<Vec<_>>>()?;
    let tau = r.tau_parts.iter().map(|f| f.retruncate(t)).collect::<Result<Vec<_>>>()?;
    let compatible = |n: usize, hi: usize, lo: usize| -> Result<bool> {
        Ok(agree(&sigma[n - 1].then(&candidates[n][hi])?, &tau[n - 1].then(&candidates[n - 1][lo])?))
    };

    let mut families = 0;
    let mut stack: Vec<Vec<usize>> = (0..candidates[0].len()).map(|i| vec![i]).collect();
    while let Some(partial) = stack.pop() {
        budget.spend(1)?;
        let n = partial.len();
        if n == candidates.len() {
            families += 1;
            continue;
        }
        for i in 0..candidates[n].len() {
            if compatible(n, i, partial[n - 1])? {
                let mut next = partial.clone();
                next.push(i);
                stack.push(next);
            }
        }
    }

    let mut restriction = Vec::with_capacity(left.len());
    let mut seen = HashMap::new();
    let mut bijective = left.len() == families;
    for g in &left {
        let mut family = Vec::with_capacity(candidates.len());
        for n in 0..candidates.len() {
            let gn = r.summand_map(n)?.retruncate(t)?.then(g)?;
            family.push(index[n].get(&key(&gn)).copied().unwrap_or(usize::MAX));
        }
        let valid = family.iter().all(|&i| i != usize::MAX)
            && (1..family.len()).try_fold(true, |ok, n| Ok::<_, crate::Error>(ok && compatible(n, family[n], family[n - 1])?))?;
        bijective &= valid && seen.insert(family.clone(), ()).is_none();
        restriction.push(family);
    }
    Ok(BijectionProbe { left_maps: left.len(), families, restriction, bijective })
}
