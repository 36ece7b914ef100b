//! Cospectra of spectra up to a degree `k` and the left adjoints they present.
//!
//! A cospectrum has objects `X_0..X_k`, all spectra at one common truncation,
//! and structure maps `τ_m : X_m ∧ S^1 -> X_{m-1}` for `m = 1..k`.

mod probe;
mod realize;

use std::sync::Arc;

pub use probe::{adjunction_bijection_probe, BijectionProbe};
pub use realize::{realize_left_adjoint, standard_frame_comparison, wedge_comparison, Realization};

use crate::error::{Error, Result};
use crate::limits::limits;
use crate::simplicial::standard::{circle_arc, sphere};
use crate::simplicial::{FormalSimplex, SimplicialMap, SmashProduct};
use crate::spectra::{
    canonical_lambda_at, free_spectrum, is_cofibration, smash_with_sset, stable_homology_map, trivial_spectrum, Spectrum,
    SpectrumMap, HOMOLOGY_LEVEL,
};

#[derive(Clone, Debug)]
pub struct TruncatedCospectrum {
    objects: Vec<Arc<Spectrum>>,
    structure: Vec<SpectrumMap>,
}

impl TruncatedCospectrum {
    pub fn new(objects: Vec<Arc<Spectrum>>, structure: Vec<SpectrumMap>) -> Result<Self> {
        let Some(first) = objects.first() else {
            return Err(Error::Construction("a cospectrum needs at least one object".into()));
        };
        let k = objects.len() - 1;
        limits().check_level(k)?;
        let t = first.truncation();
        if t < k {
            return Err(Error::Construction(format!("objects at truncation {t} cannot carry degree {k}")));
        }
        if let Some(n) = objects.iter().position(|x| x.truncation() != t) {
            return Err(Error::Construction(format!("object {n} is not at truncation {t}")));
        }
        if structure.len() != k {
            return Err(Error::Construction(format!("{} structure maps for degree {k}", structure.len())));
        }
        for (i, tau) in structure.iter().enumerate() {
            let m = i + 1;
            if **tau.source() != smash_with_sset(&objects[m], &circle_arc())? {
                return Err(Error::Construction(format!("structure map {m} does not start at X_{m} ∧ S^1")));
            }
            if **tau.target() != *objects[m - 1] {
                return Err(Error::Construction(format!("structure map {m} does not land in X_{}", m - 1)));
            }
        }
        Ok(TruncatedCospectrum { objects, structure })
    }

    pub fn degree(&self) -> usize {
        self.objects.len() - 1
    }

    /// The common truncation of the objects.
    pub fn truncation(&self) -> usize {
        self.objects[0].truncation()
    }

    pub fn objects(&self) -> &[Arc<Spectrum>] {
        &self.objects
    }

    /// `structure_maps()[m - 1]` is `τ_m`.
    pub fn structure_maps(&self) -> &[SpectrumMap] {
        &self.structure
    }
}

/// `X_n = F_n S^0` and `τ_m = λ_m ∘ (F_m S^0 ∧ S^1 ≅ F_m S^1)`, all at truncation `k`.
pub fn standard_frame(k: usize) -> Result<TruncatedCospectrum> {
    limits().check_level(k)?;
    let objects = (0..=k)
        .map(|n| Ok(Arc::new(free_spectrum(n, &sphere(0))?.retruncate(k)?)))
        .collect::<Result<Vec<_>>>()?;
    let structure = (1..=k)
        .map(|m| identification(&objects[m], m, k)?.then(&canonical_lambda_at(m, k)?))
        .collect::<Result<Vec<_>>>()?;
    TruncatedCospectrum::new(objects, structure)
}

/// `F_m S^0 ∧ S^1 -> F_m S^1`: `(x, t) -> t` at level `m` and
/// `((x, u), t) -> (t, u)` above.
fn identification(x: &Arc<Spectrum>, m: usize, k: usize) -> Result<SpectrumMap> {
    let source = Arc::new(smash_with_sset(x, &circle_arc())?);
    let target = Arc::new(free_spectrum(m, &circle_arc())?.retruncate(k)?);
    let components = (0..=k)
        .map(|j| {
            let (src, tgt) = (source.levels()[j].clone(), target.levels()[j].clone());
            if j < m {
                return SimplicialMap::constant(src, tgt);
            }
            let pair = SmashProduct::pair(&x.levels()[j], &circle_arc())?;
            SimplicialMap::from_fn(src, tgt, |z| {
                let Some(c) = pair.components(z) else {
                    return Ok(FormalSimplex::on_vertex(z.dim(), 0));
                };
                if j == m {
                    return Ok(c[1].clone());
                }
                let from = Spectrum::extension(&sphere(0), j - m)?;
                let to = Spectrum::extension(&circle_arc(), j - m)?;
                let xu = from.components(&c[0]).expect("non-basepoint component");
                Ok(to.normalize(&[c[1].clone(), xu[1].clone()]))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    SpectrumMap::new(source, target, components)
}

/// Cofibrancy of each object and homology-level equivalence of each structure map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramePredicateReport {
    pub cofibrant: Vec<bool>,
    /// `equivalences[m - 1]` is the verdict on `τ_m`
    pub equivalences: Vec<bool>,
    pub holds: bool,
    pub label: &'static str,
}

pub fn frame_predicate(x: &TruncatedCospectrum) -> Result<FramePredicateReport> {
    let t = x.truncation();
    let cofibrant = x
        .objects()
        .iter()
        .map(|obj| is_cofibration(&SpectrumMap::zero(Arc::new(trivial_spectrum(t)?), obj.clone())?))
        .collect::<Result<Vec<_>>>()?;
    let equivalences = x
        .structure_maps()
        .iter()
        .map(|tau| Ok(stable_homology_map(tau)?.iso))
        .collect::<Result<Vec<_>>>()?;
    let holds = cofibrant.iter().chain(&equivalences).all(|&b| b);
    Ok(FramePredicateReport { cofibrant, equivalences, holds, label: HOMOLOGY_LEVEL })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{Homology, HomologyGroup};
    use crate::spectra::{sphere_spectrum, stable_homology};

    #[test]
    fn standard_frame_shapes() {
        let x = standard_frame(0).unwrap();
        assert_eq!(*x.objects()[0], sphere_spectrum());
        assert!(x.structure_maps().is_empty());
        let x = standard_frame(2).unwrap();
        assert_eq!(*x.objects()[1], free_spectrum(1, &sphere(0)).unwrap().retruncate(2).unwrap());
        assert_eq!(stable_homology(&x.objects()[2]).unwrap(), Homology::from_groups([(-2, HomologyGroup::free(1))]));
    }

    #[test]
    fn standard_frames_pass() {
        for k in 0..=3 {
            let r = frame_predicate(&standard_frame(k).unwrap()).unwrap();
            assert!(r.holds, "k = {k}: {r:?}");
            assert_eq!(r.equivalences.len(), k);
            assert_eq!(r.label, "homology-level");
        }
    }

    #[test]
    fn zero_structure_map_fails_its_entry() {
        let x = standard_frame(2).unwrap();
        let mut maps = x.structure_maps().to_vec();
        maps[0] = SpectrumMap::zero(maps[0].source().clone(), maps[0].target().clone()).unwrap();
        let broken = TruncatedCospectrum::new(x.objects().to_vec(), maps).unwrap();
        let r = frame_predicate(&broken).unwrap();
        assert_eq!(r.equivalences, vec![false, true]);
        assert!(!r.holds);
    }

    #[test]
    fn degree_zero_is_vacuous_on_structure() {
        let f = Arc::new(free_spectrum(1, &circle_arc()).unwrap());
        let r = frame_predicate(&TruncatedCospectrum::new(vec![f], Vec::new()).unwrap()).unwrap();
        assert!(r.equivalences.is_empty());
        assert!(r.holds);
    }

    #[test]
    fn mismatched_structure_rejected() {
        let x = standard_frame(2).unwrap();
        let mut maps = x.structure_maps().to_vec();
        maps.swap(0, 1);
        assert!(TruncatedCospectrum::new(x.objects().to_vec(), maps).is_err());
        let short = x.objects()[..2].iter().map(|o| Arc::new(o.retruncate(2).unwrap())).collect();
        assert!(TruncatedCospectrum::new(short, Vec::new()).is_err());
    }
}
