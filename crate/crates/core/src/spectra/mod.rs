//! Truncated sequential spectra, their maps, colimits and stable homology.

pub mod adjunction;
pub mod cofibration;
pub mod colimits;
pub mod lambda;
pub mod map;
pub mod presentation;
pub mod spectrum;
pub mod stable;

pub use adjunction::{adjunction_check, enumerate_spectrum_maps, AdjunctionReport};
pub use cofibration::{cofibration_report, is_cofibration, CofibrationReport};
pub use colimits::{
    coequalizer_spectra, mapping_cone, smash_map_with_sset, smash_with_sset, trivial_spectrum, wedge_spectra,
    SpectrumQuotient, SpectrumWedge,
};
pub use lambda::{canonical_lambda, canonical_lambda_at};
pub use map::{align, free_map, retruncated, spectrum_map_from_fn, SpectrumMap};
pub use presentation::{coequalizer_presentation, CoequalizerPresentation};
pub use spectrum::{free_spectrum, sphere_spectrum, suspension_spectrum, Spectrum};
pub use stable::{
    is_stable_homology_iso, stable_chains, stable_homology, stable_homology_map, StableHomologyMap, HOMOLOGY_LEVEL,
};
