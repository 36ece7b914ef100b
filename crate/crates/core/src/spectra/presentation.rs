//! Every spectrum as a coequalizer of wedges of free spectra:
//! `⋁_{n>=1} F_n(A_{n-1} ∧ S^1) ⇉ ⋁_{n>=0} F_n A_n -> A`.

use std::sync::Arc;

use super::colimits::{coequalizer_spectra, SpectrumQuotient, SpectrumWedge};
use super::map::{free_map, retruncated, SpectrumMap};
use super::spectrum::{free_spectrum, suspend, Spectrum};
use crate::error::{Error, Result};
use crate::simplicial::standard::{sphere_coords, sphere_simplex};
use crate::simplicial::{FormalSimplex, SimplicialMap};

#[derive(Clone, Debug)]
pub struct CoequalizerPresentation {
    /// `⋁ F_n(A_{n-1} ∧ S^1)`, summand `k` is `n = k + 1`
    pub source: SpectrumWedge,
    /// `⋁ F_n A_n`, summand `k` is `n = k`
    pub target: SpectrumWedge,
    /// induced by the structure maps of `A`
    pub head: SpectrumMap,
    /// adjoint to the identities of `A_{n-1} ∧ S^1`
    pub tail: SpectrumMap,
    pub quotient: SpectrumQuotient,
    /// the comparison map from the coequalizer to `A`
    pub witness: SpectrumMap,
}

impl CoequalizerPresentation {
    pub fn is_iso(&self) -> bool {
        self.witness.is_levelwise_iso()
    }
}

/// `F_n A_n -> A`, adjoint to the identity of `A_n`, at the truncation of `A`.
fn counit(a: &Arc<Spectrum>, n: usize) -> Result<SpectrumMap> {
    let top = a.truncation();
    let free = retruncated(&Arc::new(free_spectrum(n, &a.levels()[n])?), top)?;
    let mut components = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let (src, tgt) = (free.levels()[k].clone(), a.levels()[k].clone());
        let f = if k < n {
            SimplicialMap::constant(src, tgt)?
        } else if k == n {
            SimplicialMap::identity(tgt)
        } else {
            let ext = Spectrum::extension(&a.levels()[n], k - n)?;
            ext.map_out(tgt, |c| {
                let mut x = c[0].clone();
                let coords = sphere_coords(k - n, &c[1])?.expect("non-basepoint component");
                for (j, t) in coords.iter().enumerate() {
                    x = a.sigma(n + j, &x, t)?;
                }
                Ok(x)
            })?
        };
        components.push(f);
    }
    SpectrumMap::new(free, a.clone(), components)
}

/// `F_n(A_{n-1} ∧ S^1) -> F_{n-1} A_{n-1}`: the identity at level `n` and
/// `((a, y), u) -> (a, y u)` above, at truncation `top`.
fn tail_component(a: &Arc<Spectrum>, n: usize, top: usize) -> Result<SpectrumMap> {
    let below = a.levels()[n - 1].clone();
    let x = suspend(&below)?;
    let source = retruncated(&Arc::new(free_spectrum(n, x.set())?), top)?;
    let target = retruncated(&Arc::new(free_spectrum(n - 1, &below)?), top)?;
    let mut components = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let (src, tgt) = (source.levels()[k].clone(), target.levels()[k].clone());
        let f = if k < n {
            SimplicialMap::constant(src, tgt)?
        } else if k == n {
            SimplicialMap::identity(tgt)
        } else {
            let from = Spectrum::extension(x.set(), k - n)?;
            let to = Spectrum::extension(&below, k - n + 1)?;
            from.map_out(tgt, |c| {
                let Some(ay) = x.components(&c[0]) else {
                    return Ok(FormalSimplex::on_vertex(c[0].dim(), 0));
                };
                let mut coords = vec![ay[1].clone()];
                coords.extend(sphere_coords(k - n, &c[1])?.expect("non-basepoint component"));
                Ok(to.normalize(&[ay[0].clone(), sphere_simplex(&coords)?]))
            })?
        };
        components.push(f);
    }
    SpectrumMap::new(source, target, components)
}

pub fn coequalizer_presentation(a: &Arc<Spectrum>) -> Result<CoequalizerPresentation> {
    let top = a.truncation();
    let targets = (0..=top)
        .map(|n| retruncated(&Arc::new(free_spectrum(n, &a.levels()[n])?), top))
        .collect::<Result<Vec<_>>>()?;
    let sources = (1..=top)
        .map(|n| retruncated(&Arc::new(free_spectrum(n, suspend(&a.levels()[n - 1])?.set())?), top))
        .collect::<Result<Vec<_>>>()?;
    let source = SpectrumWedge::with_truncation(&sources, top)?;
    let target = SpectrumWedge::with_truncation(&targets, top)?;

    let mut heads = Vec::with_capacity(top);
    let mut tails = Vec::with_capacity(top);
    for n in 1..=top {
        let h = free_map(n, &a.structure_maps()[n - 1])?.retruncate(top)?;
        heads.push(h.then(&target.inclusion(n))?);
        tails.push(tail_component(a, n, top)?.then(&target.inclusion(n - 1))?);
    }
    let head = source.copair(&heads, target.spectrum().clone())?;
    let tail = source.copair(&tails, target.spectrum().clone())?;
    let quotient = coequalizer_spectra(&head, &tail)?;

    let counits = (0..=top).map(|n| counit(a, n)).collect::<Result<Vec<_>>>()?;
    let joint = target.copair(&counits, a.clone())?;
    let witness = quotient.descend(&joint).map_err(|e| Error::Construction(format!("comparison map: {e}")))?;
    Ok(CoequalizerPresentation { source, target, head, tail, quotient, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::standard::{circle_arc, degree_two_map, sphere};
    use crate::spectra::colimits::{mapping_cone, wedge_spectra};
    use crate::spectra::spectrum::sphere_spectrum;

    fn check(a: Spectrum) {
        let p = coequalizer_presentation(&Arc::new(a)).unwrap();
        assert!(p.is_iso());
    }

    #[test]
    fn sphere_spectra() {
        check(sphere_spectrum());
        check(sphere_spectrum().retruncate(2).unwrap());
    }

    #[test]
    fn free_ones() {
        check(free_spectrum(1, &sphere(0)).unwrap());
        check(free_spectrum(2, &circle_arc()).unwrap());
    }

    #[test]
    fn wedge_and_moore() {
        let w = wedge_spectra(&Arc::new(sphere_spectrum()), &Arc::new(free_spectrum(1, &sphere(0)).unwrap())).unwrap();
        check((**w.spectrum()).clone());
        check(mapping_cone(&free_map(1, &degree_two_map()).unwrap()).unwrap());
    }
}
