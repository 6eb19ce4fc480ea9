//! Numerical checks of the McShane–Mirzakhani identity on one-holed tori and
//! of Bridgeman's orthogeodesic identity on pairs of pants.

mod bridgeman;
mod dilog;
mod mcshane;

use serde::{Deserialize, Serialize};

pub use bridgeman::{
    bridgeman_term, orthogeodesic_spectrum, orthogeodesic_spectrum_of, verify_bridgeman,
    verify_bridgeman_of, Orthogeodesic, BRIDGEMAN_DEFAULT_DEPTH,
};
pub use dilog::{rogers_dilog, ROGERS_AT_ONE};
pub use mcshane::{
    cusped_mcshane_sum, mcshane_term_d, mirzakhani_term_r, select_mcshane_convention,
    simple_torus_spectrum, simple_torus_spectrum_of, verify_mcshane, verify_mcshane_of,
    McShaneConvention, SimpleGeodesic,
};

/// Pair of values indexed by the two candidate right-hand sides.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TargetPair {
    /// Right-hand side with the `1/2` normalization.
    pub halved: f64,
    /// Right-hand side without it.
    pub full: f64,
}

/// Partial sum of an identity's left-hand side against its right-hand side.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub surface: String,
    /// `"mcshane"` or `"bridgeman"`.
    pub identity: String,
    pub cutoff: f64,
    pub depth: Option<usize>,
    pub terms: usize,
    pub partial_sum: f64,
    /// Right-hand side under the selected convention.
    pub target: f64,
    /// `target − partial_sum`.
    pub residual: f64,
    pub convention: String,
    pub targets: TargetPair,
    pub residuals: TargetPair,
}

impl IdentityReport {
    pub fn relative_residual(&self) -> f64 {
        self.residual / self.target
    }
}
