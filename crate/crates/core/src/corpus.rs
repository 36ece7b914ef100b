//! Deterministic pseudo-random corpora of small spectra.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::simplicial::standard::{cone_interval, degree_two_map, sphere, standard_simplex};
use crate::simplicial::FiniteSimplicialSet;
use crate::spectra::{free_map, free_spectrum, mapping_cone, smash_with_sset, wedge_spectra, Spectrum};

pub const MAX_CORPUS: usize = 100;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub spectrum: Arc<Spectrum>,
}

/// `S/2`, the cofiber of `F_1` of the degree-two map of the circle.
pub fn moore_spectrum() -> Result<Spectrum> {
    mapping_cone(&free_map(1, &degree_two_map())?)
}

/// The named simplicial sets free spectra are drawn on.
pub fn base_sets() -> Result<Vec<(&'static str, Arc<FiniteSimplicialSet>)>> {
    Ok(vec![
        ("S0", sphere(0)),
        ("S1", sphere(1)),
        ("S2", sphere(2)),
        ("I+", Arc::new(standard_simplex(1)?.add_disjoint_basepoint())),
        ("I", Arc::new(cone_interval())),
    ])
}

/// Entry 0 is always `S/2`; the rest are free spectra, wedges of two free
/// spectra, smash-with-set variants and further copies of `S/2`.
pub fn generate_corpus(seed: u64, size: usize) -> Result<Vec<CorpusEntry>> {
    if size > MAX_CORPUS {
        return Err(Error::Precondition(format!("corpus size {size} exceeds {MAX_CORPUS}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bases = base_sets()?;
    let spheres = &bases[..2];
    let mut out = Vec::with_capacity(size);
    for i in 0..size {
        let (label, spectrum) = if i == 0 {
            ("moore".to_string(), moore_spectrum()?)
        } else {
            match rng.gen_range(0..10) {
                0..=4 => {
                    let n = rng.gen_range(0..=2);
                    let (k, set) = &bases[rng.gen_range(0..bases.len())];
                    (format!("free-{n}-{k}"), free_spectrum(n, set)?)
                }
                5 | 6 => {
                    let (n, m) = (rng.gen_range(0..=1), rng.gen_range(0..=1));
                    let (k, a) = &spheres[rng.gen_range(0..spheres.len())];
                    let (l, b) = &spheres[rng.gen_range(0..spheres.len())];
                    let w = wedge_spectra(&Arc::new(free_spectrum(n, a)?), &Arc::new(free_spectrum(m, b)?))?;
                    (format!("wedge-{n}-{k}-{m}-{l}"), (**w.spectrum()).clone())
                }
                7 | 8 => {
                    let n = rng.gen_range(0..=1);
                    let (k, a) = &spheres[rng.gen_range(0..spheres.len())];
                    let (l, set) = &bases[[0, 1, 3][rng.gen_range(0..3)]];
                    (format!("smash-{n}-{k}-{l}"), smash_with_sset(&free_spectrum(n, a)?, set)?)
                }
                _ => ("moore".to_string(), moore_spectrum()?),
            }
        };
        out.push(CorpusEntry { name: format!("c{i:02}-{label}"), spectrum: Arc::new(spectrum) });
    }
    Ok(out)
}

/// Whether every stored level has at most `cap` nondegenerate simplices.
pub fn is_small(a: &Spectrum, cap: usize) -> bool {
    a.levels().iter().all(|l| l.total_count() <= cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::json::spectrum_to_string;

    #[test]
    fn deterministic_and_valid() {
        let a = generate_corpus(1, 12).unwrap();
        let b = generate_corpus(1, 12).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.name, y.name);
            assert_eq!(spectrum_to_string(&x.spectrum), spectrum_to_string(&y.spectrum));
            assert!(x.spectrum.problems().is_empty(), "{}", x.name);
        }
        assert!(a[0].name.ends_with("moore"));
    }

    #[test]
    fn size_cap() {
        assert_eq!(generate_corpus(3, 3).unwrap().len(), 3);
        assert!(generate_corpus(3, 101).is_err());
        assert!(generate_corpus(3, 0).unwrap().is_empty());
    }

    #[test]
    fn seeds_differ() {
        let names = |s| generate_corpus(s, 25).unwrap().into_iter().map(|e| e.name).collect::<Vec<_>>();
        assert_ne!(names(1), names(2));
    }
}
