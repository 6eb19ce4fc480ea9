//! Metric invariants: injectivity radius (pointwise and its supremum),
//! systoles with self-intersection certificates, and the displacement bound
//! for geodesics entering a cusp region.

mod injrad;
mod penetration;
mod systole;

pub use injrad::{
    injrad_at, injrad_in, sup_injrad, sup_injrad_in, InjRadReport, Region, SupInjRad, REALIZING_TOL,
};
pub use penetration::{axis_penetration_bound, PenetrationBound};
pub use systole::{systoles, systoles_in, SystoleReport};
