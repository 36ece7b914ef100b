//! Exhaustive enumeration of spectrum maps and the free/evaluation adjunction.

use std::collections::HashMap;
use std::sync::Arc;

use super::map::{align, SpectrumMap};
use super::spectrum::{free_spectrum, suspend, Spectrum};
use crate::error::Result;
use crate::simplicial::simplex::section;
use crate::simplicial::{enumerate_maps, enumerate_pointed_maps, Budget, FormalSimplex, SimplicialMap};

/// All spectrum maps `X -> Y` between spectra of equal truncation.
///
/// Level 0 is enumerated freely; each further level is enumerated with the
/// values on the image of `σ^X` fixed by the structure squares.
pub fn enumerate_spectrum_maps(x: &Arc<Spectrum>, y: &Arc<Spectrum>, budget: &mut Budget) -> Result<Vec<SpectrumMap>> {
    let (x, y) = align(x, y)?;
    let mut out = Vec::new();
    let firsts = enumerate_maps(&x.levels()[0], &y.levels()[0], &HashMap::new(), budget)?;
    for f0 in firsts {
        extend(&x, &y, vec![f0], budget, &mut out)?;
    }
    Ok(out)
}

fn extend(
    x: &Arc<Spectrum>,
    y: &Arc<Spectrum>,
    done: Vec<SimplicialMap>,
    budget: &mut Budget,
    out: &mut Vec<SpectrumMap>,
) -> Result<()> {
    let m = done.len() - 1;
    if m == x.truncation() {
        if let Ok(f) = SpectrumMap::new(x.clone(), y.clone(), done) {
            out.push(f);
        }
        return Ok(());
    }
    let (next_x, next_y) = (&x.levels()[m + 1], &y.levels()[m + 1]);
    let pair = suspend(&x.levels()[m])?;
    let mut forced: HashMap<(usize, usize), FormalSimplex> = HashMap::new();
    for (d, id) in pair.set().cells() {
        let s = FormalSimplex::nondegenerate(d, id);
        let Some(c) = pair.components(&s) else { continue };
        let image = x.sigma(m, &c[0], &c[1])?;
        let mut value = y.sigma(m, &done[m].apply(&c[0]), &c[1])?;
        if image.is_degenerate() {
            value = next_y.apply(&section(&image.surjection()), &value);
        }
        let key = (image.target_dim(), image.target());
        if forced.insert(key, value.clone()).is_some_and(|prev| prev != value) {
            return Ok(());
        }
    }
    for f in enumerate_maps(next_x, next_y, &forced, budget)? {
        let mut next = done.clone();
        next.push(f);
        extend(x, y, next, budget, out)?;
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjunctionReport {
    pub level: usize,
    /// `|Hom(F_n K, B)|`
    pub spectrum_maps: usize,
    /// `|Hom(K, B_n)|`
    pub pointed_maps: usize,
    /// for each spectrum map, the index of its level-`n` restriction among the pointed maps
    pub restriction: Vec<usize>,
    pub bijective: bool,
}

/// Compares `Hom(F_n K, B)` with `Hom(K, B_n)` through restriction to level `n`.
pub fn adjunction_check(n: usize, k: &Arc<crate::simplicial::FiniteSimplicialSet>, b: &Arc<Spectrum>, budget: &mut Budget) -> Result<AdjunctionReport> {
    let free = Arc::new(free_spectrum(n, k)?);
    let lhs = enumerate_spectrum_maps(&free, b, budget)?;
    let b_n = b.level(n)?;
    let rhs = enumerate_pointed_maps(k, &b_n, budget)?;
    let index: HashMap<&[Vec<FormalSimplex>], usize> = rhs.iter().enumerate().map(|(i, f)| (f.images(), i)).collect();
    let mut restriction = Vec::with_capacity(lhs.len());
    let mut hit = vec![false; rhs.len()];
    let mut bijective = lhs.len() == rhs.len();
    for f in &lhs {
        match index.get(f.components()[n].images()) {
            Some(&i) => {
                bijective &= !hit[i];
                hit[i] = true;
                restriction.push(i);
            }
            None => {
                bijective = false;
                restriction.push(usize::MAX);
            }
        }
    }
    bijective &= hit.iter().all(|&h| h);
    Ok(AdjunctionReport { level: n, spectrum_maps: lhs.len(), pointed_maps: rhs.len(), restriction, bijective })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::standard::{circle_arc, point_arc, sphere};
    use crate::spectra::spectrum::sphere_spectrum;

    #[test]
    fn sphere0_into_sphere_spectrum() {
        let r = adjunction_check(0, &sphere(0), &Arc::new(sphere_spectrum()), &mut Budget::new(10_000)).unwrap();
        assert_eq!((r.spectrum_maps, r.pointed_maps), (2, 2));
        assert!(r.bijective);
    }

    #[test]
    fn point_gives_singletons() {
        let b = Arc::new(free_spectrum(1, &circle_arc()).unwrap());
        for n in 0..3 {
            let r = adjunction_check(n, &point_arc(), &b, &mut Budget::new(10_000)).unwrap();
            assert_eq!((r.spectrum_maps, r.pointed_maps), (1, 1));
        }
    }

    #[test]
    fn level_one_counts_vertices() {
        let b = Arc::new(sphere_spectrum().retruncate(1).unwrap());
        let r = adjunction_check(1, &sphere(0), &b, &mut Budget::new(10_000)).unwrap();
        assert_eq!(r.pointed_maps, b.levels()[1].count(0));
        assert!(r.bijective);
    }

    #[test]
    fn circle_at_level_two() {
        let b = Arc::new(sphere_spectrum());
        let r = adjunction_check(2, &circle_arc(), &b, &mut Budget::new(100_000)).unwrap();
        assert!(r.bijective);
        assert_eq!(r.spectrum_maps, r.pointed_maps);
    }
}
