//! Smash products of pointed simplicial sets.
//!
//! `X_1 ∧ ... ∧ X_r` is presented directly: its non-basepoint nondegenerate
//! simplices are the tuples `(a_1, .., a_r)` of simplices of a common dimension,
//! none of them on the basepoint, whose degeneracy words have empty common
//! intersection (the shuffle criterion). Everything on the fat wedge collapses to
//! the basepoint, which is always vertex 0.
//!
//! Keeping the tuples around makes associators, interchanges and the factor swap
//! plain reindexing of components.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::map::SimplicialMap;
use super::set::FiniteSimplicialSet;
use super::simplex::{common_word, degeneracy_words, FormalSimplex};
use crate::error::{Error, Result};
use crate::limits::limits;

#[derive(Debug)]
pub struct SmashProduct {
    factors: Vec<Arc<FiniteSimplicialSet>>,
    set: Arc<FiniteSimplicialSet>,
    tuples: Vec<Vec<Vec<FormalSimplex>>>,
    lookup: Vec<HashMap<Vec<FormalSimplex>, usize>>,
}

type CacheKey = Vec<usize>;
const CACHE_LIMIT: usize = 4096;

fn cache() -> &'static Mutex<HashMap<CacheKey, Arc<SmashProduct>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<SmashProduct>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl SmashProduct {
    /// The smash product of `factors`, memoized on the identity of the factor `Arc`s.
    pub fn of(factors: &[Arc<FiniteSimplicialSet>]) -> Result<Arc<SmashProduct>> {
        let key: CacheKey = factors.iter().map(|f| Arc::as_ptr(f) as usize).collect();
        if let Some(hit) = cache().lock().expect("smash cache poisoned").get(&key) {
            return Ok(hit.clone());
        }
        let built = Arc::new(SmashProduct::build(factors)?);
        let mut guard = cache().lock().expect("smash cache poisoned");
        if guard.len() >= CACHE_LIMIT {
            guard.clear();
        }
        // the cached value owns the factor Arcs, so the pointer key cannot be reused
        guard.insert(key, built.clone());
        Ok(built)
    }

    pub fn pair(x: &Arc<FiniteSimplicialSet>, y: &Arc<FiniteSimplicialSet>) -> Result<Arc<SmashProduct>> {
        SmashProduct::of(&[x.clone(), y.clone()])
    }

    fn build(factors: &[Arc<FiniteSimplicialSet>]) -> Result<SmashProduct> {
        if factors.is_empty() {
            return Err(Error::Mismatch("smash product of no factors".into()));
        }
        for f in factors {
            f.require_pointed("smash")?;
        }
        let cells: Vec<Vec<FormalSimplex>> = factors
            .iter()
            .map(|f| {
                f.cells()
                    .map(|(d, id)| FormalSimplex::nondegenerate(d, id))
                    .filter(|s| !f.is_base(s))
                    .collect()
            })
            .collect();

        let mut tuples: Vec<Vec<Vec<FormalSimplex>>> = vec![vec![Vec::new()]];
        if cells.iter().all(|c| !c.is_empty()) {
            let top: usize = cells.iter().map(|c| c.iter().map(FormalSimplex::dim).max().unwrap_or(0)).sum();
            limits().check_dim(top)?;
            tuples.resize(top + 1, Vec::new());
            let mut words: HashMap<(usize, usize), Vec<Vec<usize>>> = HashMap::new();
            let mut choice = vec![0usize; cells.len()];
            'outer: loop {
                let picked: Vec<&FormalSimplex> = choice.iter().zip(&cells).map(|(&k, c)| &c[k]).collect();
                let lo = picked.iter().map(|s| s.dim()).max().unwrap_or(0);
                let hi: usize = picked.iter().map(|s| s.dim()).sum();
                for m in lo..=hi {
                    for s in &picked {
                        let r = m - s.dim();
                        words.entry((m, r)).or_insert_with(|| degeneracy_words(m, r));
                    }
                    let mut current = Vec::with_capacity(picked.len());
                    shuffles(m, &picked, &words, &mut current, None, &mut tuples[m]);
                }
                // odometer over the cartesian product of factor cells
                let mut i = choice.len();
                loop {
                    if i == 0 {
                        break 'outer;
                    }
                    i -= 1;
                    choice[i] += 1;
                    if choice[i] < cells[i].len() {
                        break;
                    }
                    choice[i] = 0;
                }
            }
            for level in tuples.iter_mut().skip(1) {
                level.sort();
            }
            tuples[0][1..].sort();
        }

        let lookup: Vec<HashMap<Vec<FormalSimplex>, usize>> = tuples
            .iter()
            .map(|level| level.iter().enumerate().filter(|(_, t)| !t.is_empty()).map(|(i, t)| (t.clone(), i)).collect())
            .collect();

        let mut product = SmashProduct {
            factors: factors.to_vec(),
            set: Arc::new(FiniteSimplicialSet::empty()),
            tuples,
            lookup,
        };
        let faces: Vec<Vec<Vec<FormalSimplex>>> = product
            .tuples
            .iter()
            .enumerate()
            .map(|(m, level)| {
                level
                    .iter()
                    .map(|tuple| {
                        if m == 0 {
                            return Vec::new();
                        }
                        (0..=m)
                            .map(|i| {
                                let comps: Vec<FormalSimplex> =
                                    tuple.iter().zip(&product.factors).map(|(c, f)| f.face(c, i)).collect();
                                product.normalize(&comps)
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        product.set = Arc::new(FiniteSimplicialSet::from_parts(faces, Some(0)));
        Ok(product)
    }

    pub fn set(&self) -> &Arc<FiniteSimplicialSet> {
        &self.set
    }

    pub fn factors(&self) -> &[Arc<FiniteSimplicialSet>] {
        &self.factors
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    /// The smash simplex represented by a tuple of factor simplices of equal dimension.
    pub fn normalize(&self, comps: &[FormalSimplex]) -> FormalSimplex {
        debug_assert_eq!(comps.len(), self.factors.len());
        let m = comps[0].dim();
        if comps.iter().zip(&self.factors).any(|(c, f)| f.is_base(c)) {
            return FormalSimplex::on_vertex(m, 0);
        }
        let mut common = comps[0].word().to_vec();
        for c in &comps[1..] {
            common = common_word(&common, c.word());
        }
        let reduced: Vec<FormalSimplex> = comps.iter().map(|c| c.strip(&common)).collect();
        let id = self.lookup[m - common.len()]
            .get(&reduced)
            .copied()
            .unwrap_or_else(|| panic!("tuple {reduced:?} is not a simplex of the smash product"));
        FormalSimplex::new_unchecked(m, common, id)
    }

    /// Factor components of a smash simplex; `None` on the basepoint.
    pub fn components(&self, s: &FormalSimplex) -> Option<Vec<FormalSimplex>> {
        let tuple = &self.tuples[s.target_dim()][s.target()];
        if tuple.is_empty() {
            return None;
        }
        Some(tuple.iter().map(|c| c.degenerate(s.word())).collect())
    }

    /// A map out of this smash product given on component tuples; the basepoint goes
    /// to the basepoint of `target`.
    pub fn map_out<F>(&self, target: Arc<FiniteSimplicialSet>, mut f: F) -> Result<SimplicialMap>
    where
        F: FnMut(&[FormalSimplex]) -> Result<FormalSimplex>,
    {
        let base = target.require_pointed("map out of a smash product")?;
        SimplicialMap::from_fn(self.set.clone(), target, |s| match self.components(s) {
            None => Ok(FormalSimplex::on_vertex(s.dim(), base)),
            Some(comps) => f(&comps),
        })
    }

    /// `f_1 ∧ .. ∧ f_r`.
    pub fn smash_maps(maps: &[&SimplicialMap]) -> Result<SimplicialMap> {
        let sources: Vec<_> = maps.iter().map(|f| f.source().clone()).collect();
        let targets: Vec<_> = maps.iter().map(|f| f.target().clone()).collect();
        let src = SmashProduct::of(&sources)?;
        let tgt = SmashProduct::of(&targets)?;
        src.map_out(tgt.set().clone(), |comps| {
            let imgs: Vec<FormalSimplex> = comps.iter().zip(maps).map(|(c, f)| f.apply(c)).collect();
            Ok(tgt.normalize(&imgs))
        })
    }

    /// Reorders factors: component `i` of the result is component `perm[i]` of the source.
    pub fn permute(&self, perm: &[usize]) -> Result<SimplicialMap> {
        let factors: Vec<_> = perm.iter().map(|&i| self.factors[i].clone()).collect();
        let tgt = SmashProduct::of(&factors)?;
        self.map_out(tgt.set().clone(), |comps| {
            let reordered: Vec<FormalSimplex> = perm.iter().map(|&i| comps[i].clone()).collect();
            Ok(tgt.normalize(&reordered))
        })
    }
}

fn shuffles(
    m: usize,
    picked: &[&FormalSimplex],
    words: &HashMap<(usize, usize), Vec<Vec<usize>>>,
    current: &mut Vec<FormalSimplex>,
    inter: Option<Vec<usize>>,
    out: &mut Vec<Vec<FormalSimplex>>,
) {
    let i = current.len();
    if i == picked.len() {
        if inter.is_none_or(|w| w.is_empty()) {
            out.push(current.clone());
        }
        return;
    }
    let s = picked[i];
    for w in &words[&(m, m - s.dim())] {
        let next = match &inter {
            None => w.clone(),
            Some(prev) => common_word(prev, w),
        };
        current.push(s.degenerate(w));
        shuffles(m, picked, words, current, Some(next), out);
        current.pop();
    }
}

/// `X ∧ Y`.
pub fn smash(x: &Arc<FiniteSimplicialSet>, y: &Arc<FiniteSimplicialSet>) -> Result<Arc<FiniteSimplicialSet>> {
    Ok(SmashProduct::pair(x, y)?.set().clone())
}

/// The unit isomorphism `Y -> S^0 ∧ Y`.
pub fn left_unit(y: &Arc<FiniteSimplicialSet>) -> Result<SimplicialMap> {
    let s0 = super::standard::sphere(0);
    let prod = SmashProduct::pair(&s0, y)?;
    y.require_pointed("unit isomorphism")?;
    SimplicialMap::from_fn(y.clone(), prod.set().clone(), |s| {
        if y.is_base(s) {
            return Ok(FormalSimplex::on_vertex(s.dim(), 0));
        }
        Ok(prod.normalize(&[FormalSimplex::on_vertex(s.dim(), 1), s.clone()]))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::standard::{circle, sphere, standard_simplex};

    #[test]
    fn circle_smash_circle_counts() {
        let s1 = Arc::new(circle());
        let s2 = smash(&s1, &s1).unwrap();
        // basepoint, diagonal edge, two triangles
        assert_eq!(s2.dims(), vec![1, 1, 2]);
        assert!(s2.validate().valid);
    }

    #[test]
    fn smash_with_point_is_point() {
        let p = Arc::new(FiniteSimplicialSet::point());
        let s2 = sphere(2);
        assert!(smash(&p, &s2).unwrap().is_point());
    }

    #[test]
    fn unpointed_rejected() {
        let d1 = Arc::new(standard_simplex(1).unwrap());
        let s1 = Arc::new(circle());
        assert!(matches!(SmashProduct::pair(&d1, &s1), Err(Error::Unpointed(_))));
    }

    #[test]
    fn unit_is_isomorphism() {
        let s2 = sphere(2);
        let unit = left_unit(&s2).unwrap();
        assert!(unit.is_iso());
        let back = unit.inverse().unwrap();
        assert!(back.is_valid());
        assert_eq!(unit.then(&back).unwrap(), SimplicialMap::identity(s2));
    }

    #[test]
    fn sphere_counts_match_ordered_set_partitions() {
        // non-basepoint m-simplices of (S^1)^{∧n} number m! S(n, m)
        let s4 = sphere(4);
        assert_eq!(s4.dims(), vec![1, 1, 14, 36, 24]);
    }

    #[test]
    fn swap_is_involution() {
        let s1 = Arc::new(circle());
        let s2 = sphere(2);
        let xy = SmashProduct::pair(&s1, &s2).unwrap();
        let yx = SmashProduct::pair(&s2, &s1).unwrap();
        let there = xy.permute(&[1, 0]).unwrap();
        let back = yx.permute(&[1, 0]).unwrap();
        assert_eq!(there.then(&back).unwrap(), SimplicialMap::identity(xy.set().clone()));
    }
}
