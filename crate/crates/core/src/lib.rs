//! Hyperbolic surfaces as Fuchsian groups acting on the upper half-plane.
//!
//! The crate is organised bottom-up:
//!
//! - [`hyperbolic`]: points, Möbius maps, geodesics, horodisks and isometric
//!   circles, with the closed-form distance formulas;
//! - [`trig`]: scalar collar, cusp-loop and trirectangle formulas;
//! - [`fuchsian`]: free groups of Möbius maps, word balls, conjugacy classes,
//!   simplicity certificates and maximal cusp regions;
//! - [`surfaces`]: thrice-punctured sphere, one-holed torus, pairs of pants,
//!   and the funnel modulus;
//! - [`identities`]: McShane–Mirzakhani and Bridgeman sums;
//! - [`invariants`]: injectivity radius, systoles and the cusp penetration
//!   bound.
//!
//! Data-parallel loops go through [`Exec`]; with the `parallel` feature
//! (default) they run on the rayon pool, otherwise sequentially. Results are
//! identical either way.

// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod exec;
pub mod fuchsian;
pub mod hyperbolic;
pub mod identities;
pub mod invariants;
pub mod numeric;
pub mod surfaces;
pub mod trig;

pub use error::{Error, Result};
pub use exec::Exec;

use serde::{Deserialize, Serialize};

/// Floating-point mode for word evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Precision {
    #[default]
    Double,
    /// Matrix products carried in double-double arithmetic and rounded once.
    Extended,
}

/// Settings shared by the enumeration-heavy operations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Config {
    pub exec: Exec,
    pub precision: Precision,
    /// Half-width of the band around `|tr| = 2` classified as parabolic.
    pub parabolic_tol: f64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            exec: Exec::default(),
            precision: Precision::default(),
            parabolic_tol: hyperbolic::PARABOLIC_TOL,
        }
    }
}

impl Config {
    pub fn sequential() -> Self {
        Config {
            exec: Exec::Sequential,
            ..Config::default()
        }
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub fn with_precision(mut self, precision: Precision) -> Self {
        self.precision = precision;
        self
    }
}
