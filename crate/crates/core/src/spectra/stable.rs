//! Stable homology: the reduced homology of the top level, shifted down by the truncation.

use crate::error::Result;
use crate::homology::{chain_map, induced_homology_map, is_homology_iso, reduced_chain_complex};
use crate::homology::{ChainComplex, ChainMap, Homology, InducedMap};

use super::map::SpectrumMap;
use super::spectrum::Spectrum;

/// Label carried by every equivalence verdict decided through homology.
pub const HOMOLOGY_LEVEL: &str = "homology-level";

/// Reduced chains of `A_N` placed in degrees `-N..`.
pub fn stable_chains(a: &Spectrum) -> Result<ChainComplex> {
    Ok(reduced_chain_complex(a.top())?.shift(-(a.truncation() as i64)))
}

pub fn stable_homology(a: &Spectrum) -> Result<Homology> {
    Ok(stable_chains(a)?.homology())
}

pub fn stable_chain_map(f: &SpectrumMap) -> Result<ChainMap> {
    let n = f.truncation();
    Ok(chain_map(&f.components()[n])?.shift(-(n as i64)))
}

#[derive(Clone, Debug)]
pub struct StableHomologyMap {
    pub induced: Vec<InducedMap>,
    pub iso: bool,
}

impl StableHomologyMap {
    pub fn label(&self) -> &'static str {
        HOMOLOGY_LEVEL
    }
}

/// The induced map in every degree and whether it is an isomorphism.
pub fn stable_homology_map(f: &SpectrumMap) -> Result<StableHomologyMap> {
    let c = stable_chain_map(f)?;
    Ok(StableHomologyMap { induced: induced_homology_map(&c), iso: is_homology_iso(&c) })
}

/// Only the isomorphism verdict; skips the presentations.
pub fn is_stable_homology_iso(f: &SpectrumMap) -> Result<bool> {
    Ok(is_homology_iso(&stable_chain_map(f)?))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::homology::{HomologyGroup, Matrix};
    use crate::simplicial::standard::{circle_arc, degree_two_map, sphere};
    use crate::spectra::colimits::{mapping_cone, smash_with_sset, trivial_spectrum};
    use crate::spectra::lambda::canonical_lambda;
    use crate::spectra::map::free_map;
    use crate::spectra::spectrum::{free_spectrum, sphere_spectrum};

    fn z_in(d: i64) -> Homology {
        Homology::from_groups([(d, HomologyGroup::free(1))])
    }

    #[test]
    fn sphere_and_free() {
        assert_eq!(stable_homology(&sphere_spectrum()).unwrap(), z_in(0));
        for n in 0..=3 {
            assert_eq!(stable_homology(&free_spectrum(n, &sphere(0)).unwrap()).unwrap(), z_in(-(n as i64)));
        }
        assert_eq!(stable_homology(&smash_with_sset(&sphere_spectrum(), &circle_arc()).unwrap()).unwrap(), z_in(1));
    }

    #[test]
    fn moore_spectrum() {
        let moore = mapping_cone(&free_map(1, &degree_two_map()).unwrap()).unwrap();
        let two = HomologyGroup { rank: 0, torsion: vec![2.into()] };
        assert_eq!(stable_homology(&moore).unwrap(), Homology::from_groups([(0, two)]));
    }

    #[test]
    fn retruncation_invariance() {
        let f = free_spectrum(1, &circle_arc()).unwrap();
        let h = stable_homology(&f).unwrap();
        assert_eq!(stable_homology(&f.retruncate(3).unwrap()).unwrap(), h);
    }

    #[test]
    fn lambda_maps_are_isos() {
        for n in 1..=3 {
            let r = stable_homology_map(&canonical_lambda(n).unwrap()).unwrap();
            assert!(r.iso, "λ_{n}");
            assert_eq!(r.label(), HOMOLOGY_LEVEL);
            let m = r.induced.iter().find(|m| m.degree == 1 - n as i64).unwrap();
            assert_eq!(m.matrix.rows(), 1);
            assert!(m.matrix.get(0, 0) == &1.into() || m.matrix.get(0, 0) == &(-1).into());
        }
    }

    #[test]
    fn identity_and_collapse() {
        let s = Arc::new(sphere_spectrum());
        let id = stable_homology_map(&SpectrumMap::identity(s.clone())).unwrap();
        assert!(id.iso);
        assert_eq!(id.induced[0].matrix, Matrix::identity(1));
        let zero = SpectrumMap::zero(s, Arc::new(trivial_spectrum(0).unwrap())).unwrap();
        assert!(!stable_homology_map(&zero).unwrap().iso);
    }

    #[test]
    fn degree_two_is_not_iso() {
        let f = free_map(1, &degree_two_map()).unwrap();
        let r = stable_homology_map(&f).unwrap();
        assert!(!r.iso);
        assert_eq!(r.induced[0].matrix, Matrix::from_rows(&[vec![2]]));
    }
}
