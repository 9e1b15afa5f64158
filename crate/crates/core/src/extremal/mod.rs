//! Extremal convex shapes at fixed area and perimeter: the lens that
//! maximises the diameter, constant-width bodies and circular sectors as
//! candidates for the minimum diameter.

pub mod constant_width;
pub mod explore;
pub mod lens;

use serde::Serialize;
use thiserror::Error;

pub use constant_width::{
    interpolant_area, interpolate_constant_width, interpolate_constant_width_with,
    reuleaux_metrics, sector_metrics, solve_sectors, Sector,
};
pub use explore::{
    crossover_scan, min_diameter_explore, Candidate, CrossoverReport, CrossoverRow,
    DiameterReport, Family, QUOTED_CROSSOVER_AREA, QUOTED_CROSSOVER_DIAMETER,
};
pub use lens::{lens_metrics, max_diameter_shape, Lens};

/// Perimeter used when none is given: constant-width bodies then have
/// width 1.
pub const DEFAULT_PERIMETER: f64 = std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ShapeMetrics {
    pub area: f64,
    pub perimeter: f64,
    pub diameter: f64,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ShapeError {
    #[error("area and perimeter must be positive and finite")]
    BadInput,
    #[error("no convex region has area {area} and perimeter {perimeter}")]
    Infeasible { area: f64, perimeter: f64 },
    #[error("lens with chord {d} and half-angle {alpha} is degenerate")]
    BadLens { d: f64, alpha: f64 },
    #[error("sector with radius {r} and angle {phi} is degenerate")]
    BadSector { r: f64, phi: f64 },
    #[error("interpolation parameter {0} outside [0, 1]")]
    BadParameter(f64),
    #[error("lens area ratio failed its monotonicity check")]
    NotMonotone,
    #[error(transparent)]
    Support(#[from] crate::kernel::SupportError),
}

/// Root of `f` on `[lo, hi]` where `f(lo) ≤ 0 ≤ f(hi)` or the reverse.
pub(crate) fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let rising = f(hi) >= f(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let v = f(mid);
        if v.abs() <= 1e-15 || hi - lo <= 1e-16 * hi.abs().max(1.0) {
            return mid;
        }
        if (v < 0.0) == rising {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
