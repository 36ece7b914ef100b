//! Maps of truncated spectra.

use std::sync::Arc;

use super::spectrum::{free_spectrum, same, suspend, Spectrum};
use crate::error::{Error, Result};
use crate::limits::limits;
use crate::simplicial::{FiniteSimplicialSet, FormalSimplex, SimplicialMap};

/// Levelwise maps `f_n : X_n -> Y_n`, `n <= N`, between spectra of the common
/// truncation `N`; above `N` the map is `f_N ∧ S^k`.
#[derive(Clone, Debug)]
pub struct SpectrumMap {
    source: Arc<Spectrum>,
    target: Arc<Spectrum>,
    components: Vec<SimplicialMap>,
}

impl SpectrumMap {
    pub fn new(source: Arc<Spectrum>, target: Arc<Spectrum>, components: Vec<SimplicialMap>) -> Result<Self> {
        let n = source.truncation();
        if target.truncation() != n {
            return Err(Error::Mismatch(format!(
                "truncations {} and {} differ; align the spectra first",
                n,
                target.truncation()
            )));
        }
        if components.len() != n + 1 {
            return Err(Error::InvalidMap(format!("{} components for truncation {n}", components.len())));
        }
        for (m, f) in components.iter().enumerate() {
            if !same(f.source(), &source.levels()[m]) || !same(f.target(), &target.levels()[m]) {
                return Err(Error::InvalidMap(format!("component {m} has the wrong source or target")));
            }
            if let Some(p) = f.problems().first() {
                return Err(Error::InvalidMap(format!("component {m}: {p}")));
            }
        }
        let map = SpectrumMap { source, target, components };
        if let Some(p) = map.square_problems()?.first() {
            return Err(Error::InvalidMap(p.clone()));
        }
        Ok(map)
    }

    pub(crate) fn from_parts(source: Arc<Spectrum>, target: Arc<Spectrum>, components: Vec<SimplicialMap>) -> Self {
        SpectrumMap { source, target, components }
    }

    pub fn identity(x: Arc<Spectrum>) -> Self {
        let components = x.levels().iter().map(|l| SimplicialMap::identity(l.clone())).collect();
        SpectrumMap { source: x.clone(), target: x, components }
    }

    /// The map through the basepoint; the spectra must share a truncation.
    pub fn zero(source: Arc<Spectrum>, target: Arc<Spectrum>) -> Result<Self> {
        if source.truncation() != target.truncation() {
            return Err(Error::Mismatch("zero map between misaligned spectra".into()));
        }
        let components = source
            .levels()
            .iter()
            .zip(target.levels())
            .map(|(a, b)| SimplicialMap::constant(a.clone(), b.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(SpectrumMap { source, target, components })
    }

    pub fn source(&self) -> &Arc<Spectrum> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Spectrum> {
        &self.target
    }

    pub fn truncation(&self) -> usize {
        self.components.len() - 1
    }

    pub fn components(&self) -> &[SimplicialMap] {
        &self.components
    }

    /// `f_m` for any `m`.
    pub fn component(&self, m: usize) -> Result<SimplicialMap> {
        let n = self.truncation();
        if m <= n {
            return Ok(self.components[m].clone());
        }
        let from = Spectrum::extension(self.source.top(), m - n)?;
        let to = Spectrum::extension(self.target.top(), m - n)?;
        let top = &self.components[n];
        from.map_out(to.set().clone(), |c| Ok(to.normalize(&[top.apply(&c[0]), c[1].clone()])))
    }

    /// Every square `σ ∘ (f_n ∧ S^1) = f_{n+1} ∘ σ` that fails, `n < N`.
    pub fn square_problems(&self) -> Result<Vec<String>> {
        let mut out = Vec::new();
        for n in 0..self.truncation() {
            let pair = suspend(&self.source.levels()[n])?;
            let (f, g) = (&self.components[n], &self.components[n + 1]);
            for (d, id) in pair.set().cells() {
                let s = FormalSimplex::nondegenerate(d, id);
                let Some(c) = pair.components(&s) else { continue };
                let lhs = self.target.sigma(n, &f.apply(&c[0]), &c[1])?;
                let rhs = g.apply(&self.source.sigma(n, &c[0], &c[1])?);
                if lhs != rhs {
                    out.push(format!("structure square at level {n} fails on simplex ({d}, {id})"));
                    break;
                }
            }
        }
        Ok(out)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SpectrumMap) -> Result<SpectrumMap> {
        if !Arc::ptr_eq(&self.target, &other.source) && *self.target != *other.source {
            return Err(Error::Mismatch("composable spectrum maps must share the middle spectrum".into()));
        }
        let components =
            self.components.iter().zip(&other.components).map(|(f, g)| f.then(g)).collect::<Result<Vec<_>>>()?;
        Ok(SpectrumMap { source: self.source.clone(), target: other.target.clone(), components })
    }

    /// The same map between the retruncated spectra.
    pub fn retruncate(&self, n: usize) -> Result<SpectrumMap> {
        let source = Arc::new(self.source.retruncate(n)?);
        let target = Arc::new(self.target.retruncate(n)?);
        let components = (0..=n).map(|m| self.component(m)).collect::<Result<Vec<_>>>()?;
        Ok(SpectrumMap { source, target, components })
    }

    pub fn is_levelwise_iso(&self) -> bool {
        self.components.iter().all(SimplicialMap::is_iso)
    }

    pub fn inverse(&self) -> Result<SpectrumMap> {
        let components = self.components.iter().map(SimplicialMap::inverse).collect::<Result<Vec<_>>>()?;
        Ok(SpectrumMap { source: self.target.clone(), target: self.source.clone(), components })
    }

    pub fn is_identity(&self) -> bool {
        self.components.iter().all(|f| same(f.source(), f.target()) && *f == SimplicialMap::identity(f.source().clone()))
    }
}

/// Both spectra retruncated to the larger truncation.
pub fn align(a: &Arc<Spectrum>, b: &Arc<Spectrum>) -> Result<(Arc<Spectrum>, Arc<Spectrum>)> {
    let n = a.truncation().max(b.truncation());
    Ok((retruncated(a, n)?, retruncated(b, n)?))
}

/// `a` itself when already at truncation `n`.
pub fn retruncated(a: &Arc<Spectrum>, n: usize) -> Result<Arc<Spectrum>> {
    if a.truncation() == n {
        Ok(a.clone())
    } else {
        Ok(Arc::new(a.retruncate(n)?))
    }
}

/// `F_n g : F_n K -> F_n L`.
pub fn free_map(n: usize, g: &SimplicialMap) -> Result<SpectrumMap> {
    limits().check_level(n)?;
    let source = Arc::new(free_spectrum(n, g.source())?);
    let target = Arc::new(free_spectrum(n, g.target())?);
    let mut components: Vec<SimplicialMap> = (0..n)
        .map(|m| SimplicialMap::constant(source.levels()[m].clone(), target.levels()[m].clone()))
        .collect::<Result<Vec<_>>>()?;
    components.push(g.clone());
    SpectrumMap::new(source, target, components)
}

/// The family of simplicial maps a spectrum map needs at each level, built from
/// a per-level rule and validated.
pub fn spectrum_map_from_fn<F>(source: Arc<Spectrum>, target: Arc<Spectrum>, mut f: F) -> Result<SpectrumMap>
where
    F: FnMut(usize, &FormalSimplex) -> Result<FormalSimplex>,
{
    let components = (0..=source.truncation())
        .map(|m| {
            let (a, b): (Arc<FiniteSimplicialSet>, Arc<FiniteSimplicialSet>) =
                (source.levels()[m].clone(), target.levels()[m].clone());
            SimplicialMap::from_fn(a, b, |s| f(m, s))
        })
        .collect::<Result<Vec<_>>>()?;
    SpectrumMap::new(source, target, components)
}
