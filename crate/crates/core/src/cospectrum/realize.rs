//! `L(A) = coeq(⋁_{n>=1} X_n ∧ (A_{n-1} ∧ S^1) ⇉ ⋁_{n>=0} X_n ∧ A_n)`.

use std::sync::Arc;

use super::TruncatedCospectrum;
use crate::error::{Error, Result};
use crate::simplicial::standard::{circle_arc, sphere, sphere_coords};
use crate::simplicial::{FiniteSimplicialSet, FormalSimplex, SmashProduct};
use crate::spectra::spectrum::suspend;
use crate::spectra::{
    coequalizer_spectra, retruncated, smash_map_with_sset, smash_with_sset, spectrum_map_from_fn, Spectrum,
    SpectrumMap, SpectrumQuotient, SpectrumWedge,
};

#[derive(Clone, Debug)]
pub struct Realization {
    /// summand `n - 1` is `X_n ∧ (A_{n-1} ∧ S^1)`
    pub source: SpectrumWedge,
    /// summand `n` is `X_n ∧ A_n`
    pub target: SpectrumWedge,
    /// `X_n ∧ σ_{n-1}` into summand `n`
    pub sigma_leg: SpectrumMap,
    /// `τ_n ∧ A_{n-1}` into summand `n - 1`
    pub tau_leg: SpectrumMap,
    pub quotient: SpectrumQuotient,
    pub(crate) sigma_parts: Vec<SpectrumMap>,
    pub(crate) tau_parts: Vec<SpectrumMap>,
}

impl Realization {
    pub fn spectrum(&self) -> &Arc<Spectrum> {
        self.quotient.spectrum()
    }

    /// The number of levels of `A` that were used.
    pub fn top(&self) -> usize {
        self.target.summands().len() - 1
    }

    /// `X_n ∧ A_n -> L(A)`.
    pub fn summand_map(&self, n: usize) -> Result<SpectrumMap> {
        self.target.inclusion(n).then(self.quotient.projection())
    }

    /// `L(f) : L(A) -> L(A')` for `f : A -> A'`, where `other` realizes `A'`
    /// over the same cospectrum.
    pub fn induced(&self, other: &Realization, x: &TruncatedCospectrum, f: &SpectrumMap) -> Result<SpectrumMap> {
        if other.top() < self.top() {
            return Err(Error::Precondition("the target of the map is realized over fewer levels".into()));
        }
        let legs = (0..=self.top())
            .map(|n| {
                let g = smash_map_with_sset(&SpectrumMap::identity(x.objects()[n].clone()), &f.component(n)?)?;
                g.then(&other.summand_map(n)?)
            })
            .collect::<Result<Vec<_>>>()?;
        let joint = self.target.copair(&legs, other.spectrum().clone())?;
        self.quotient.descend(&joint)
    }
}

/// Needs the truncation of `A` to be at most the degree of `X`; the result is at
/// the truncation of `X`.
pub fn realize_left_adjoint(x: &TruncatedCospectrum, a: &Spectrum) -> Result<Realization> {
    let top = a.truncation();
    if top > x.degree() {
        return Err(Error::Precondition(format!("truncation {top} exceeds the cospectrum degree {}", x.degree())));
    }
    let t = x.truncation();
    let targets = (0..=top)
        .map(|n| Ok(Arc::new(smash_with_sset(&x.objects()[n], &a.levels()[n])?)))
        .collect::<Result<Vec<_>>>()?;
    let sources = (1..=top)
        .map(|n| Ok(Arc::new(smash_with_sset(&x.objects()[n], suspend(&a.levels()[n - 1])?.set())?)))
        .collect::<Result<Vec<_>>>()?;
    let source = SpectrumWedge::with_truncation(&sources, t)?;
    let target = SpectrumWedge::with_truncation(&targets, t)?;

    let mut sigma_parts = Vec::with_capacity(top);
    let mut tau_parts = Vec::with_capacity(top);
    for n in 1..=top {
        let s = smash_map_with_sset(&SpectrumMap::identity(x.objects()[n].clone()), &a.structure_maps()[n - 1])?;
        sigma_parts.push(s);
        tau_parts.push(tau_smash(x, n, &sources[n - 1], &targets[n - 1], &a.levels()[n - 1])?);
    }
    let sigma_legs = (0..top).map(|i| sigma_parts[i].then(&target.inclusion(i + 1))).collect::<Result<Vec<_>>>()?;
    let tau_legs = (0..top).map(|i| tau_parts[i].then(&target.inclusion(i))).collect::<Result<Vec<_>>>()?;
    let sigma_leg = source.copair(&sigma_legs, target.spectrum().clone())?;
    let tau_leg = source.copair(&tau_legs, target.spectrum().clone())?;
    let quotient = coequalizer_spectra(&sigma_leg, &tau_leg)?;
    Ok(Realization { source, target, sigma_leg, tau_leg, quotient, sigma_parts, tau_parts })
}

/// `X_n ∧ (K ∧ S^1) -> X_{n-1} ∧ K`, `(x, (a, t)) -> (τ_n(x, t), a)`.
fn tau_smash(
    x: &TruncatedCospectrum,
    n: usize,
    source: &Arc<Spectrum>,
    target: &Arc<Spectrum>,
    k: &Arc<FiniteSimplicialSet>,
) -> Result<SpectrumMap> {
    let tau = &x.structure_maps()[n - 1];
    let (xn, below) = (&x.objects()[n], &x.objects()[n - 1]);
    let suspended = suspend(k)?;
    spectrum_map_from_fn(source.clone(), target.clone(), |j, z| {
        let outer = SmashProduct::pair(&xn.levels()[j], suspended.set())?;
        let Some(c) = outer.components(z) else {
            return Ok(FormalSimplex::on_vertex(z.dim(), 0));
        };
        let Some(at) = suspended.components(&c[1]) else {
            return Ok(FormalSimplex::on_vertex(z.dim(), 0));
        };
        let xt = SmashProduct::pair(&xn.levels()[j], &circle_arc())?.normalize(&[c[0].clone(), at[1].clone()]);
        let image = tau.components()[j].apply(&xt);
        Ok(SmashProduct::pair(&below.levels()[j], k)?.normalize(&[image, at[0].clone()]))
    })
}

/// For the standard frame, the map `L(A) -> A` induced by
/// `F_n S^0 ∧ A_n -> A`, `((x, u), a) -> σ^u(a)`.
pub fn standard_frame_comparison(x: &TruncatedCospectrum, r: &Realization, a: &Arc<Spectrum>) -> Result<SpectrumMap> {
    let t = r.spectrum().truncation();
    let a_t = retruncated(a, t)?;
    let legs = r
        .target
        .summands()
        .iter()
        .enumerate()
        .map(|(n, summand)| {
            spectrum_map_from_fn(summand.clone(), a_t.clone(), |j, z| {
                let base = FormalSimplex::on_vertex(z.dim(), a_t.levels()[j].basepoint().unwrap_or(0));
                if j < n {
                    return Ok(base);
                }
                let pair = SmashProduct::pair(&x.objects()[n].levels()[j], &a.levels()[n])?;
                let Some(c) = pair.components(z) else {
                    return Ok(base);
                };
                let mut image = c[1].clone();
                if j > n {
                    let su = Spectrum::extension(&sphere(0), j - n)?.components(&c[0]).expect("non-basepoint component");
                    let coords = sphere_coords(j - n, &su[1])?.expect("non-basepoint component");
                    for (i, u) in coords.iter().enumerate() {
                        image = a_t.sigma(n + i, &image, u)?;
                    }
                }
                Ok(image)
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let joint = r.target.copair(&legs, a_t)?;
    r.quotient.descend(&joint)
}

/// The canonical `L(A) ∨ L(B) -> L(A ∨ B)` induced by the two wedge inclusions.
pub fn wedge_comparison(x: &TruncatedCospectrum, a: &Arc<Spectrum>, b: &Arc<Spectrum>) -> Result<SpectrumMap> {
    let w = crate::spectra::wedge_spectra(a, b)?;
    let whole = realize_left_adjoint(x, w.spectrum())?;
    let parts = [realize_left_adjoint(x, a)?, realize_left_adjoint(x, b)?];
    let legs = parts
        .iter()
        .enumerate()
        .map(|(i, r)| r.induced(&whole, x, &w.inclusion(i)))
        .collect::<Result<Vec<_>>>()?;
    let both = SpectrumWedge::of(&[parts[0].spectrum().clone(), parts[1].spectrum().clone()])?;
    both.copair(&legs, whole.spectrum().clone())
}
