//! The maps `λ_n : F_n S^1 -> F_{n-1} S^0`.

use std::sync::Arc;

use super::map::{spectrum_map_from_fn, SpectrumMap};
use super::spectrum::{free_spectrum, Spectrum};
use crate::error::{Error, Result};
use crate::simplicial::smash::left_unit;
use crate::simplicial::standard::{circle_arc, sphere, sphere_coords, sphere_simplex};
use crate::simplicial::{FormalSimplex, SimplicialMap};

/// `λ_n`, a point below level `n` and `S^1 ≅ S^0 ∧ S^1` at level `n`; both
/// spectra are at truncation `n`.
pub fn canonical_lambda(n: usize) -> Result<SpectrumMap> {
    if n == 0 {
        return Err(Error::Precondition("λ_n needs n >= 1".into()));
    }
    let source = Arc::new(free_spectrum(n, &circle_arc())?);
    let target: Arc<Spectrum> = Arc::new(free_spectrum(n - 1, &sphere(0))?.retruncate(n)?);
    let mut components = (0..n)
        .map(|m| SimplicialMap::constant(source.levels()[m].clone(), target.levels()[m].clone()))
        .collect::<Result<Vec<_>>>()?;
    components.push(left_unit(&circle_arc())?);
    SpectrumMap::new(source, target, components)
}

/// `λ_n` with both spectra extended freely to truncation `k >= n` in one step,
/// so that the target is `F_{n-1} S^0` retruncated directly to `k`.
pub fn canonical_lambda_at(n: usize, k: usize) -> Result<SpectrumMap> {
    if n == 0 || k < n {
        return Err(Error::Precondition(format!("λ_n at truncation {k} needs 1 <= n <= {k}")));
    }
    let source = Arc::new(free_spectrum(n, &circle_arc())?.retruncate(k)?);
    let target = Arc::new(free_spectrum(n - 1, &sphere(0))?.retruncate(k)?);
    let unit = left_unit(&circle_arc())?;
    spectrum_map_from_fn(source, target, |j, z| {
        if j < n {
            return Ok(FormalSimplex::on_vertex(z.dim(), 0));
        }
        if j == n {
            return Ok(unit.apply(z));
        }
        let Some(tu) = Spectrum::extension(&circle_arc(), j - n)?.components(z) else {
            return Ok(FormalSimplex::on_vertex(z.dim(), 0));
        };
        let mut coords = vec![tu[0].clone()];
        coords.extend(sphere_coords(j - n, &tu[1])?.expect("non-basepoint component"));
        let one = FormalSimplex::on_vertex(z.dim(), 1);
        Ok(Spectrum::extension(&sphere(0), j - n + 1)?.normalize(&[one, sphere_simplex(&coords)?]))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_n_is_iso() {
        for n in 1..=3 {
            let l = canonical_lambda(n).unwrap();
            assert!(l.components()[n].is_iso());
            assert!(l.components()[n - 1].source().is_point());
        }
        assert!(canonical_lambda(0).is_err());
    }

    #[test]
    fn extended_lambda_agrees_up_to_n() {
        for n in 1..=3 {
            let short = canonical_lambda(n).unwrap();
            let long = canonical_lambda_at(n, 4).unwrap();
            for j in 0..=n {
                assert_eq!(short.components()[j].images(), long.components()[j].images());
            }
        }
        assert!(canonical_lambda_at(3, 2).is_err());
    }

    #[test]
    fn level_zero_hits_basepoint() {
        let l = canonical_lambda(1).unwrap();
        let f0 = &l.components()[0];
        assert_eq!(f0.target().basepoint(), Some(0));
        assert_eq!(f0.images()[0][0].target(), 0);
    }
}
