//! Truncated sequential spectra.
//!
//! A spectrum stores levels `A_0..A_N` and structure maps `σ_n : A_n ∧ S^1 -> A_{n+1}`
//! for `n < N`. Above `N` it is freely suspended: `A_{N+k} = A_N ∧ S^k` with
//! `σ_N` the identity of `A_N ∧ S^1` and `σ_{N+k}((a, u), t) = (a, u t)`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::limits::limits;
use crate::simplicial::standard::{circle_arc, point_arc, simplicial_sphere, sphere, sphere_coords, sphere_simplex};
use crate::simplicial::{FiniteSimplicialSet, FormalSimplex, SimplicialMap, SmashProduct};

#[derive(Clone, Debug)]
pub struct Spectrum {
    levels: Vec<Arc<FiniteSimplicialSet>>,
    structure: Vec<SimplicialMap>,
}

impl PartialEq for Spectrum {
    fn eq(&self, other: &Self) -> bool {
        self.levels.len() == other.levels.len()
            && self.levels.iter().zip(&other.levels).all(|(a, b)| Arc::ptr_eq(a, b) || **a == **b)
            && self.structure.iter().zip(&other.structure).all(|(a, b)| a.images() == b.images())
    }
}

impl Eq for Spectrum {}

/// `X ∧ S^1` as a smash product with its components.
pub fn suspend(x: &Arc<FiniteSimplicialSet>) -> Result<Arc<SmashProduct>> {
    SmashProduct::pair(x, &circle_arc())
}

impl Spectrum {
    /// Checks that every level is a valid pointed set and every structure map a
    /// valid pointed map `A_n ∧ S^1 -> A_{n+1}`.
    pub fn new(levels: Vec<Arc<FiniteSimplicialSet>>, structure: Vec<SimplicialMap>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::InvalidSpectrum("a spectrum needs level 0".into()));
        }
        if structure.len() + 1 != levels.len() {
            return Err(Error::InvalidSpectrum(format!(
                "{} levels need {} structure maps, got {}",
                levels.len(),
                levels.len() - 1,
                structure.len()
            )));
        }
        limits().check_level(levels.len() - 1)?;
        for (n, x) in levels.iter().enumerate() {
            x.require_pointed("spectrum level")?;
            let report = x.validate();
            if !report.valid {
                return Err(Error::InvalidSpectrum(format!("level {n}: {report}")));
            }
        }
        let mut rehomed = Vec::with_capacity(structure.len());
        for (n, sigma) in structure.into_iter().enumerate() {
            let source = suspend(&levels[n])?.set().clone();
            let target = levels[n + 1].clone();
            if !same(sigma.source(), &source) || !same(sigma.target(), &target) {
                return Err(Error::InvalidSpectrum(format!("structure map {n} has the wrong source or target")));
            }
            let sigma = SimplicialMap::new(source, target, sigma.images().to_vec())
                .map_err(|e| Error::InvalidSpectrum(format!("structure map {n}: {e}")))?;
            rehomed.push(sigma);
        }
        Ok(Spectrum { levels, structure: rehomed })
    }

    pub(crate) fn from_parts(levels: Vec<Arc<FiniteSimplicialSet>>, structure: Vec<SimplicialMap>) -> Self {
        Spectrum { levels, structure }
    }

    /// The spectrum with a point in every level.
    pub fn trivial() -> Self {
        Spectrum { levels: vec![point_arc()], structure: Vec::new() }
    }

    pub fn truncation(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn levels(&self) -> &[Arc<FiniteSimplicialSet>] {
        &self.levels
    }

    pub fn structure_maps(&self) -> &[SimplicialMap] {
        &self.structure
    }

    pub fn top(&self) -> &Arc<FiniteSimplicialSet> {
        &self.levels[self.truncation()]
    }

    /// The level `m`, stored or freely extended.
    pub fn level(&self, m: usize) -> Result<Arc<FiniteSimplicialSet>> {
        let n = self.truncation();
        if m <= n {
            return Ok(self.levels[m].clone());
        }
        Ok(Self::extension(self.top(), m - n)?.set().clone())
    }

    /// `X ∧ S^k` for `k >= 1`, the shape of the free extension.
    pub(crate) fn extension(x: &Arc<FiniteSimplicialSet>, k: usize) -> Result<Arc<SmashProduct>> {
        SmashProduct::pair(x, &simplicial_sphere(k)?)
    }

    /// `σ_m(s ∧ t)` for a simplex `s` of level `m` and `t` of `S^1` of equal dimension.
    pub fn sigma(&self, m: usize, s: &FormalSimplex, t: &FormalSimplex) -> Result<FormalSimplex> {
        let n = self.truncation();
        let here = self.level(m)?;
        let pair = suspend(&here)?;
        if m < n {
            return Ok(self.structure[m].apply(&pair.normalize(&[s.clone(), t.clone()])));
        }
        if m == n {
            return Ok(pair.normalize(&[s.clone(), t.clone()]));
        }
        let k = m - n;
        let dim = s.dim();
        let from = Self::extension(self.top(), k)?;
        let to = Self::extension(self.top(), k + 1)?;
        let Some(comps) = from.components(s) else {
            return Ok(FormalSimplex::on_vertex(dim, 0));
        };
        if t.target_dim() == 0 {
            return Ok(FormalSimplex::on_vertex(dim, 0));
        }
        let mut coords = sphere_coords(k, &comps[1])?.expect("non-basepoint component");
        coords.push(t.clone());
        Ok(to.normalize(&[comps[0].clone(), sphere_simplex(&coords)?]))
    }

    /// `σ_m` as a simplicial map.
    pub fn structure_map(&self, m: usize) -> Result<SimplicialMap> {
        if m < self.truncation() {
            return Ok(self.structure[m].clone());
        }
        let pair = suspend(&self.level(m)?)?;
        pair.map_out(self.level(m + 1)?, |c| self.sigma(m, &c[0], &c[1]))
    }

    /// The same spectrum with levels up to `n >= N` stored.
    pub fn retruncate(&self, n: usize) -> Result<Spectrum> {
        let here = self.truncation();
        if n < here {
            return Err(Error::Precondition(format!("cannot retruncate from {here} down to {n}")));
        }
        limits().check_level(n)?;
        let mut levels = self.levels.clone();
        let mut structure = self.structure.clone();
        for m in here..n {
            structure.push(self.structure_map(m)?);
            levels.push(self.level(m + 1)?);
        }
        Ok(Spectrum { levels, structure })
    }

    /// Problems with the stored data, re-checked from scratch.
    pub fn problems(&self) -> Vec<String> {
        match Spectrum::new(self.levels.clone(), self.structure.clone()) {
            Ok(_) => Vec::new(),
            Err(e) => vec![e.to_string()],
        }
    }
}

pub(crate) fn same(a: &Arc<FiniteSimplicialSet>, b: &Arc<FiniteSimplicialSet>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// `F_n K`: a point below level `n` and `K` at level `n`, freely extended above.
pub fn free_spectrum(n: usize, k: &Arc<FiniteSimplicialSet>) -> Result<Spectrum> {
    limits().check_level(n)?;
    k.require_pointed("free spectrum")?;
    let mut levels = vec![point_arc(); n];
    levels.push(k.clone());
    let structure = (0..n)
        .map(|m| SimplicialMap::constant(suspend(&levels[m])?.set().clone(), levels[m + 1].clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Spectrum { levels, structure })
}

/// `F_0 K`.
pub fn suspension_spectrum(k: &Arc<FiniteSimplicialSet>) -> Result<Spectrum> {
    free_spectrum(0, k)
}

/// `F_0 S^0`.
pub fn sphere_spectrum() -> Spectrum {
    free_spectrum(0, &sphere(0)).expect("level 0 is within every cap")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{reduced_homology, Homology, HomologyGroup};
    use crate::simplicial::smash::left_unit;

    #[test]
    fn sphere_levels() {
        let s = sphere_spectrum();
        let l3 = s.level(3).unwrap();
        // S^0 ∧ S^3 is S^3 through the unit isomorphism
        let unit = left_unit(&sphere(3)).unwrap();
        assert!(unit.is_iso());
        assert!(same(unit.target(), &l3));
        assert_eq!(reduced_homology(&l3).unwrap(), Homology::from_groups([(3, HomologyGroup::free(1))]));
    }

    #[test]
    fn free_levels_below_are_points() {
        let f = free_spectrum(2, &sphere(0)).unwrap();
        assert!(f.level(0).unwrap().is_point());
        assert!(f.level(1).unwrap().is_point());
        assert!(same(&f.level(2).unwrap(), &sphere(0)));
    }

    #[test]
    fn free_circle_level_two() {
        let f = free_spectrum(1, &circle_arc()).unwrap();
        let l2 = f.level(2).unwrap();
        assert!(same(&l2, &suspend(&circle_arc()).unwrap().set().clone()));
        assert_eq!(reduced_homology(&l2).unwrap().get(2), HomologyGroup::free(1));
    }

    #[test]
    fn extended_structure_maps_validate() {
        let f = free_spectrum(1, &circle_arc()).unwrap();
        for m in 0..4 {
            let sigma = f.structure_map(m).unwrap();
            assert!(sigma.is_valid(), "σ_{m}");
            if m >= 1 {
                assert!(sigma.is_iso(), "σ_{m} is an iso above the truncation");
            }
        }
    }

    #[test]
    fn retruncation_keeps_data() {
        let s = sphere_spectrum();
        let r = s.retruncate(3).unwrap();
        assert_eq!(r.truncation(), 3);
        assert!(r.problems().is_empty());
        assert!(same(&r.level(4).unwrap(), &Spectrum::extension(&s.level(3).unwrap(), 1).unwrap().set().clone()));
        assert!(s.retruncate(0).is_ok());
    }

    #[test]
    fn wrong_structure_map_rejected() {
        let s1 = circle_arc();
        let bad = SimplicialMap::identity(s1.clone());
        assert!(Spectrum::new(vec![s1.clone(), s1], vec![bad]).is_err());
    }

    #[test]
    fn level_cap() {
        assert!(matches!(free_spectrum(99, &sphere(0)), Err(Error::LevelCap { .. })));
    }
}
