//! Levelwise colimits of spectra and smashing with a simplicial set.
//!
//! Every output keeps the largest truncation among its inputs; inputs are
//! retruncated to it first.

use std::sync::Arc;

use super::map::{retruncated, SpectrumMap};
use super::spectrum::{free_spectrum, suspend, Spectrum};
use crate::error::{Error, Result};
use crate::simplicial::standard::{circle_arc, cone_interval, point_arc};
use crate::simplicial::{
    coequalizer, pushout, FiniteSimplicialSet, FormalSimplex, Pushout, Quotient, SimplicialMap, SmashProduct, Wedge,
};

/// A spectrum whose levels are all a point, at truncation `n`.
pub fn trivial_spectrum(n: usize) -> Result<Spectrum> {
    free_spectrum(n, &point_arc())
}

/// `⋁_k A_k` together with the levelwise wedges, for inclusions and copairing.
#[derive(Clone, Debug)]
pub struct SpectrumWedge {
    spectrum: Arc<Spectrum>,
    summands: Vec<Arc<Spectrum>>,
    wedges: Vec<Wedge>,
}

impl SpectrumWedge {
    pub fn of(summands: &[Arc<Spectrum>]) -> Result<Self> {
        SpectrumWedge::with_truncation(summands, 0)
    }

    /// The wedge at truncation `max(at_least, truncations of the summands)`.
    pub fn with_truncation(summands: &[Arc<Spectrum>], at_least: usize) -> Result<Self> {
        let n = summands.iter().map(|s| s.truncation()).max().unwrap_or(0).max(at_least);
        let summands = summands.iter().map(|s| retruncated(s, n)).collect::<Result<Vec<_>>>()?;
        let wedges = (0..=n)
            .map(|m| Wedge::of(&summands.iter().map(|s| s.levels()[m].clone()).collect::<Vec<_>>()))
            .collect::<Result<Vec<_>>>()?;
        let levels: Vec<Arc<FiniteSimplicialSet>> = wedges.iter().map(|w| w.set().clone()).collect();
        let structure = (0..n)
            .map(|m| {
                suspend(&levels[m])?.map_out(levels[m + 1].clone(), |c| match wedges[m].locate(&c[0]) {
                    None => Ok(FormalSimplex::on_vertex(c[0].dim(), 0)),
                    Some((k, a)) => Ok(wedges[m + 1].include(k, &summands[k].sigma(m, &a, &c[1])?)),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SpectrumWedge { spectrum: Arc::new(Spectrum::from_parts(levels, structure)), summands, wedges })
    }

    pub fn spectrum(&self) -> &Arc<Spectrum> {
        &self.spectrum
    }

    /// The summands, retruncated to the wedge's truncation.
    pub fn summands(&self) -> &[Arc<Spectrum>] {
        &self.summands
    }

    pub fn level_wedge(&self, m: usize) -> &Wedge {
        &self.wedges[m]
    }

    pub fn inclusion(&self, k: usize) -> SpectrumMap {
        let components = self.wedges.iter().map(|w| w.inclusion(k)).collect();
        SpectrumMap::from_parts(self.summands[k].clone(), self.spectrum.clone(), components)
    }

    /// The map out of the wedge restricting to `maps[k]` on summand `k`.
    pub fn copair(&self, maps: &[SpectrumMap], target: Arc<Spectrum>) -> Result<SpectrumMap> {
        if maps.len() != self.summands.len() {
            return Err(Error::Mismatch(format!("{} maps for {} summands", maps.len(), self.summands.len())));
        }
        if maps.iter().any(|f| f.truncation() != self.spectrum.truncation()) {
            return Err(Error::Mismatch("copaired maps must be aligned with the wedge".into()));
        }
        let components = (0..=self.spectrum.truncation())
            .map(|m| {
                let legs: Vec<SimplicialMap> = maps.iter().map(|f| f.components()[m].clone()).collect();
                self.wedges[m].copair(&legs, target.levels()[m].clone())
            })
            .collect::<Result<Vec<_>>>()?;
        SpectrumMap::new(self.spectrum.clone(), target, components)
    }
}

/// `A ∨ B`.
pub fn wedge_spectra(a: &Arc<Spectrum>, b: &Arc<Spectrum>) -> Result<SpectrumWedge> {
    SpectrumWedge::of(&[a.clone(), b.clone()])
}

/// A levelwise quotient of a spectrum with its projection.
#[derive(Clone, Debug)]
pub struct SpectrumQuotient {
    spectrum: Arc<Spectrum>,
    projection: SpectrumMap,
    quotients: Vec<Quotient>,
}

impl SpectrumQuotient {
    pub fn spectrum(&self) -> &Arc<Spectrum> {
        &self.spectrum
    }

    pub fn projection(&self) -> &SpectrumMap {
        &self.projection
    }

    pub fn level_quotient(&self, m: usize) -> &Quotient {
        &self.quotients[m]
    }

    /// The map out of the quotient through which `h` factors.
    pub fn descend(&self, h: &SpectrumMap) -> Result<SpectrumMap> {
        if h.truncation() != self.spectrum.truncation() {
            return Err(Error::Mismatch("map to descend is not aligned with the quotient".into()));
        }
        let components = self
            .quotients
            .iter()
            .zip(h.components())
            .map(|(q, f)| q.descend(f))
            .collect::<Result<Vec<_>>>()?;
        SpectrumMap::new(self.spectrum.clone(), h.target().clone(), components)
    }
}

/// The coequalizer of `f, g : X ⇉ Y`, formed levelwise.
pub fn coequalizer_spectra(f: &SpectrumMap, g: &SpectrumMap) -> Result<SpectrumQuotient> {
    let same_ends = (Arc::ptr_eq(f.source(), g.source()) || f.source() == g.source())
        && (Arc::ptr_eq(f.target(), g.target()) || f.target() == g.target());
    if !same_ends {
        return Err(Error::Mismatch("coequalizer needs parallel spectrum maps".into()));
    }
    let y = f.target().clone();
    let quotients = f
        .components()
        .iter()
        .zip(g.components())
        .map(|(a, b)| coequalizer(a, b))
        .collect::<Result<Vec<_>>>()?;
    let levels: Vec<Arc<FiniteSimplicialSet>> = quotients.iter().map(|q| q.set().clone()).collect();
    let structure = (0..y.truncation())
        .map(|m| {
            suspend(&levels[m])?.map_out(levels[m + 1].clone(), |c| {
                let lifted = quotients[m].lift(&c[0]);
                Ok(quotients[m + 1].projection().apply(&y.sigma(m, &lifted, &c[1])?))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let spectrum = Arc::new(Spectrum::from_parts(levels, structure));
    let components = quotients.iter().map(|q| q.projection().clone()).collect();
    let projection = SpectrumMap::from_parts(y, spectrum.clone(), components);
    Ok(SpectrumQuotient { spectrum, projection, quotients })
}

/// The cofiber of `f : X -> Y`: levelwise `Y_n ∪_{X_n} (X_n ∧ I)`, where `I` is
/// `Δ[1]` pointed at vertex 1 and `X_n` sits in the cone at vertex 0.
pub fn mapping_cone(f: &SpectrumMap) -> Result<Spectrum> {
    let x = f.source();
    let y = f.target();
    let interval = Arc::new(cone_interval());
    let cones = x
        .levels()
        .iter()
        .map(|l| SmashProduct::pair(l, &interval))
        .collect::<Result<Vec<_>>>()?;
    let pushouts: Vec<Pushout> = cones
        .iter()
        .zip(f.components())
        .map(|(cone, fm)| {
            let x_m = fm.source().clone();
            let inclusion = SimplicialMap::from_fn(x_m.clone(), cone.set().clone(), |s| {
                Ok(cone.normalize(&[s.clone(), FormalSimplex::on_vertex(s.dim(), 0)]))
            })?;
            pushout(&inclusion, fm)
        })
        .collect::<Result<Vec<_>>>()?;
    let levels: Vec<Arc<FiniteSimplicialSet>> = pushouts.iter().map(|p| p.set().clone()).collect();
    let structure = (0..x.truncation())
        .map(|m| {
            let (here, next) = (&pushouts[m], &pushouts[m + 1]);
            suspend(&levels[m])?.map_out(levels[m + 1].clone(), |c| {
                let t = &c[1];
                let base = FormalSimplex::on_vertex(t.dim(), 0);
                let lifted = here.quotient().lift(&c[0]);
                match here.wedge().locate(&lifted) {
                    None => Ok(base),
                    Some((0, z)) => match cones[m].components(&z) {
                        None => Ok(base),
                        Some(xi) => {
                            let moved = cones[m + 1].normalize(&[x.sigma(m, &xi[0], t)?, xi[1].clone()]);
                            Ok(next.left().apply(&moved))
                        }
                    },
                    Some((_, w)) => Ok(next.right().apply(&y.sigma(m, &w, t)?)),
                }
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Spectrum::from_parts(levels, structure))
}

/// `A ∧ L`: levels `A_n ∧ L`, structure maps `σ_n ∧ L` after moving `S^1` past `L`.
pub fn smash_with_sset(a: &Spectrum, l: &Arc<FiniteSimplicialSet>) -> Result<Spectrum> {
    l.require_pointed("smash with a simplicial set")?;
    let products = a.levels().iter().map(|x| SmashProduct::pair(x, l)).collect::<Result<Vec<_>>>()?;
    let levels: Vec<Arc<FiniteSimplicialSet>> = products.iter().map(|p| p.set().clone()).collect();
    let structure = (0..a.truncation())
        .map(|m| {
            suspend(&levels[m])?.map_out(levels[m + 1].clone(), |c| match products[m].components(&c[0]) {
                None => Ok(FormalSimplex::on_vertex(c[0].dim(), 0)),
                Some(xl) => Ok(products[m + 1].normalize(&[a.sigma(m, &xl[0], &c[1])?, xl[1].clone()])),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Spectrum::from_parts(levels, structure))
}

/// `f ∧ g : X ∧ K -> Y ∧ L`.
pub fn smash_map_with_sset(f: &SpectrumMap, g: &SimplicialMap) -> Result<SpectrumMap> {
    let source = Arc::new(smash_with_sset(f.source(), g.source())?);
    let target = Arc::new(smash_with_sset(f.target(), g.target())?);
    let components = f
        .components()
        .iter()
        .map(|fm| SmashProduct::smash_maps(&[fm, g]))
        .collect::<Result<Vec<_>>>()?;
    SpectrumMap::new(source, target, components)
}

/// `id ∧ S^1` on a level, the map every corner computation needs.
pub(crate) fn suspend_map(f: &SimplicialMap) -> Result<SimplicialMap> {
    SmashProduct::smash_maps(&[f, &SimplicialMap::identity(circle_arc())])
}
