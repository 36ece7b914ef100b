//! The naive smash product `A ∧_q B`, its twist and the sphere identification.

use std::sync::Arc;

use super::partition::PartitionFunction;
use crate::error::{Error, Result};
use crate::simplicial::{enumerate_pointed_maps, Budget, FormalSimplex, SimplicialMap, SmashProduct};
use crate::spectra::spectrum::suspend;
use crate::spectra::{sphere_spectrum, Spectrum, SpectrumMap};

/// `A ∧_q B` with the level products kept for the twist.
#[derive(Clone, Debug)]
pub struct NaiveSmash {
    spectrum: Arc<Spectrum>,
    products: Vec<Arc<SmashProduct>>,
}

impl NaiveSmash {
    pub fn spectrum(&self) -> &Arc<Spectrum> {
        &self.spectrum
    }

    /// `A_{q(n)} ∧ B_{p(n)}` as a product.
    pub fn product(&self, n: usize) -> &Arc<SmashProduct> {
        &self.products[n]
    }
}

/// Levels `A_{q(n)} ∧ B_{p(n)}` up to the first `M` where both factors are past
/// their truncations.
pub fn naive_smash(a: &Spectrum, b: &Spectrum, q: &PartitionFunction) -> Result<NaiveSmash> {
    naive_smash_truncated(a, b, q, 0)
}

/// As [`naive_smash`], but stored up to at least level `at_least`.
pub fn naive_smash_truncated(a: &Spectrum, b: &Spectrum, q: &PartitionFunction, at_least: usize) -> Result<NaiveSmash> {
    let top = q.reach(a.truncation(), b.truncation(), at_least).ok_or_else(|| Error::Partition {
        index: q.max_index(),
        reason: format!(
            "table never reaches q >= {} and p >= {} at or after level {at_least}",
            a.truncation(),
            b.truncation()
        ),
    })?;
    let products = (0..=top)
        .map(|n| SmashProduct::pair(&a.level(q.q(n))?, &b.level(q.p(n))?))
        .collect::<Result<Vec<_>>>()?;
    let levels = products.iter().map(|p| p.set().clone()).collect();
    let structure = (0..top)
        .map(|n| {
            let (here, next) = (&products[n], &products[n + 1]);
            suspend(here.set())?.map_out(next.set().clone(), |c| {
                let Some(ab) = here.components(&c[0]) else {
                    return Ok(FormalSimplex::on_vertex(c[0].dim(), 0));
                };
                let t = &c[1];
                if q.q(n + 1) == q.q(n) {
                    Ok(next.normalize(&[ab[0].clone(), b.sigma(q.p(n), &ab[1], t)?]))
                } else {
                    Ok(next.normalize(&[a.sigma(q.q(n), &ab[0], t)?, ab[1].clone()]))
                }
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NaiveSmash { spectrum: Arc::new(Spectrum::from_parts(levels, structure)), products })
}

/// The factor swap `A ∧_q B -> B ∧_p A` and its inverse.
#[derive(Clone, Debug)]
pub struct Twist {
    pub forward: SpectrumMap,
    pub backward: SpectrumMap,
}

impl Twist {
    /// Both composites are identities.
    pub fn two_sided(&self) -> Result<bool> {
        Ok(self.forward.then(&self.backward)?.is_identity() && self.backward.then(&self.forward)?.is_identity())
    }
}

fn swap(x: &NaiveSmash, y: &NaiveSmash) -> Result<SpectrumMap> {
    let components = (0..=x.spectrum.truncation())
        .map(|n| {
            let (src, tgt) = (x.product(n), y.product(n));
            src.map_out(tgt.set().clone(), |c| Ok(tgt.normalize(&[c[1].clone(), c[0].clone()])))
        })
        .collect::<Result<Vec<_>>>()?;
    SpectrumMap::new(x.spectrum.clone(), y.spectrum.clone(), components)
}

pub fn twist_iso(a: &Spectrum, b: &Spectrum, q: &PartitionFunction) -> Result<Twist> {
    let p = q.complement();
    let x = naive_smash(a, b, q)?;
    let y = naive_smash(b, a, &p)?;
    if x.spectrum.truncation() != y.spectrum.truncation() {
        return Err(Error::Construction("the two smash orders disagree on truncation".into()));
    }
    Ok(Twist { forward: swap(&x, &y)?, backward: swap(&y, &x)? })
}

/// `φ : S -> X` with `φ_0` an isomorphism `S^0 -> X_0` and
/// `φ_{n+1} = σ^X_n ∘ (φ_n ∧ S^1) ∘ (σ^S_n)^{-1}`.
///
/// `phi0` is found by enumeration when not supplied.
pub fn iso_to_sphere(x: &Arc<Spectrum>, phi0: Option<SimplicialMap>) -> Result<SpectrumMap> {
    let n = x.truncation();
    for (m, sigma) in x.structure_maps().iter().enumerate() {
        if !sigma.is_iso() {
            return Err(Error::Precondition(format!("structure map {m} is not an isomorphism")));
        }
    }
    let sphere = Arc::new(sphere_spectrum().retruncate(n)?);
    let phi0 = match phi0 {
        Some(f) => f,
        None => enumerate_pointed_maps(&sphere.levels()[0], &x.levels()[0], &mut Budget::from_limits())?
            .into_iter()
            .find(SimplicialMap::is_iso)
            .ok_or_else(|| Error::Precondition("level 0 is not isomorphic to S^0".into()))?,
    };
    if !phi0.is_iso() {
        return Err(Error::Precondition("the supplied level-0 map is not an isomorphism".into()));
    }
    let mut components = vec![phi0];
    for m in 0..n {
        let back = sphere.structure_map(m)?.inverse()?;
        let pair = suspend(&sphere.levels()[m])?;
        let prev = &components[m];
        let next = SimplicialMap::from_fn(sphere.levels()[m + 1].clone(), x.levels()[m + 1].clone(), |z| {
            match pair.components(&back.apply(z)) {
                None => Ok(FormalSimplex::on_vertex(z.dim(), x.levels()[m + 1].basepoint().unwrap_or(0))),
                Some(c) => x.sigma(m, &prev.apply(&c[0]), &c[1]),
            }
        })?;
        components.push(next);
    }
    let phi = SpectrumMap::new(sphere, x.clone(), components)?;
    if !phi.is_levelwise_iso() {
        return Err(Error::Construction("the inductive map is not a levelwise isomorphism".into()));
    }
    Ok(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::standard::{circle_arc, sphere};
    use crate::smash_product::partition::{make_partition, PartitionSpec};
    use crate::spectra::free_spectrum;

    fn floor_half() -> PartitionFunction {
        make_partition(&PartitionSpec::FloorHalf, 8).unwrap()
    }

    #[test]
    fn sphere_smash_sphere_levels() {
        let s = sphere_spectrum();
        let x = naive_smash_truncated(&s, &s, &floor_half(), 4).unwrap();
        assert_eq!(x.spectrum().truncation(), 4);
        assert!(x.spectrum().problems().is_empty());
        for n in 0..=4 {
            let h = crate::homology::reduced_homology(&x.spectrum().levels()[n]).unwrap();
            assert_eq!(h.get(n as i64), crate::homology::HomologyGroup::free(1));
        }
    }

    #[test]
    fn truncation_is_first_reach() {
        let a = free_spectrum(1, &sphere(0)).unwrap();
        let b = free_spectrum(2, &sphere(0)).unwrap();
        assert_eq!(naive_smash(&a, &b, &floor_half()).unwrap().spectrum().truncation(), 3);
        let short = make_partition(&PartitionSpec::FloorHalf, 2).unwrap();
        assert!(matches!(naive_smash(&a, &b, &short), Err(Error::Partition { .. })));
    }

    #[test]
    fn twist_sphere_and_free() {
        let s = sphere_spectrum();
        let f = free_spectrum(1, &sphere(0)).unwrap();
        for (a, b) in [(&s, &s), (&s, &f), (&f, &s)] {
            let t = twist_iso(a, b, &floor_half()).unwrap();
            assert!(t.forward.is_levelwise_iso());
            assert!(t.two_sided().unwrap());
        }
    }

    #[test]
    fn sphere_identification() {
        let s = sphere_spectrum();
        for spec in [PartitionSpec::FloorHalf, PartitionSpec::Interleave(1, 2), PartitionSpec::Interleave(2, 1)] {
            let q = make_partition(&spec, 8).unwrap();
            let x = naive_smash_truncated(&s, &s, &q, 3).unwrap();
            let phi = iso_to_sphere(x.spectrum(), None).unwrap();
            assert!(phi.is_levelwise_iso(), "{spec}");
        }
        let id = iso_to_sphere(&Arc::new(sphere_spectrum().retruncate(2).unwrap()), None).unwrap();
        assert!(id.is_identity());
    }

    #[test]
    fn non_invertible_structure_rejected() {
        let f = Arc::new(free_spectrum(1, &circle_arc()).unwrap());
        assert!(matches!(iso_to_sphere(&f, None), Err(Error::Precondition(_))));
    }
}
