//! The cofibration condition for maps of spectra.

use super::colimits::suspend_map;
use super::map::SpectrumMap;
use crate::error::Result;
use crate::simplicial::pushout;

/// Injectivity of `f_0` and of each corner map `X_{n+1} ∪_{X_n ∧ S^1} (Y_n ∧ S^1) -> Y_{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CofibrationReport {
    pub level_zero_injective: bool,
    /// `corners[n]` for `n < N`; above the truncation the corners are isomorphisms
    pub corners: Vec<bool>,
}

impl CofibrationReport {
    pub fn holds(&self) -> bool {
        self.level_zero_injective && self.corners.iter().all(|&c| c)
    }
}

pub fn cofibration_report(f: &SpectrumMap) -> Result<CofibrationReport> {
    let (x, y) = (f.source(), f.target());
    let level_zero_injective = f.components()[0].is_injective();
    let mut corners = Vec::with_capacity(f.truncation());
    for n in 0..f.truncation() {
        let sigma_x = x.structure_map(n)?;
        let fs = suspend_map(&f.components()[n])?;
        let p = pushout(&sigma_x, &fs)?;
        let corner = p.copair(&f.components()[n + 1], &y.structure_map(n)?)?;
        corners.push(corner.is_injective());
    }
    Ok(CofibrationReport { level_zero_injective, corners })
}

pub fn is_cofibration(f: &SpectrumMap) -> Result<bool> {
    Ok(cofibration_report(f)?.holds())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::simplicial::standard::{circle_arc, sphere};
    use crate::spectra::colimits::{trivial_spectrum, wedge_spectra};
    use crate::spectra::spectrum::{free_spectrum, sphere_spectrum};

    #[test]
    fn from_trivial_into_free() {
        for n in 0..3 {
            let f = Arc::new(free_spectrum(n, &circle_arc()).unwrap());
            let t = Arc::new(trivial_spectrum(n).unwrap());
            assert!(is_cofibration(&SpectrumMap::zero(t, f).unwrap()).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn wedge_inclusion() {
        let a = Arc::new(sphere_spectrum());
        let b = Arc::new(free_spectrum(1, &sphere(0)).unwrap());
        let w = wedge_spectra(&a, &b).unwrap();
        assert!(is_cofibration(&w.inclusion(0)).unwrap());
        assert!(is_cofibration(&w.inclusion(1)).unwrap());
    }

    #[test]
    fn collapse_is_not() {
        let s = Arc::new(sphere_spectrum());
        let t = Arc::new(trivial_spectrum(0).unwrap());
        assert!(!is_cofibration(&SpectrumMap::zero(s, t).unwrap()).unwrap());
    }

    #[test]
    fn corner_failure_detected() {
        // λ_1 is injective at level 0, but its first corner glues S^1 ∨ (S^0 ∧ S^1)
        // onto S^0 ∧ S^1, identifying the two circles
        let lam = crate::spectra::lambda::canonical_lambda(1).unwrap();
        let report = cofibration_report(&lam).unwrap();
        assert!(report.level_zero_injective);
        assert_eq!(report.corners, vec![false]);
    }
}
