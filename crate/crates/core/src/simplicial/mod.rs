//! Finite pointed simplicial sets, their maps, and finite colimits.

pub mod colimit;
pub mod enumerate;
pub mod map;
pub mod set;
pub mod simplex;
pub mod smash;
pub mod standard;

pub use colimit::{coequalizer, pushout, Pushout, Quotient, Wedge};
pub use enumerate::{enumerate_maps, enumerate_pointed_maps, Budget};
pub use map::SimplicialMap;
pub use set::{FiniteSimplicialSet, ValidationReport, Violation};
pub use simplex::{FormalSimplex, FormalSimplexDoc};
pub use smash::{smash, SmashProduct};
pub use standard::{simplicial_sphere, sphere, standard_simplex};
