//! Case studies: the anharmonic oscillator and its Padé table, diagram
//! counting, the Casimir force, a two-level system and the quintic root.

pub mod anharmonic;
pub mod casimir;
pub mod diagrams;
pub mod quintic;
pub mod two_level;

pub use anharmonic::{
    anharmonic_asymptotic, anharmonic_coefficients, anharmonic_coefficients_with_limit, anharmonic_pade_table,
    PadeTableRow, PerturbationSeries,
};
pub use casimir::casimir_force;
pub use diagrams::diagram_count;
pub use quintic::{quintic_root_study, QuinticReport, QuinticVariant};
pub use two_level::{two_level_spectrum, TwoLevelSpectrum, TwoLevelSystem};
