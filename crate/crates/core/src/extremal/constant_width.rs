//! Reuleaux triangles, circular sectors, and the Minkowski interpolation
//! between a Reuleaux triangle and the disc of the same width.

use std::f64::consts::PI;

use serde::Serialize;

use crate::kernel::support::{reuleaux_support, DEFAULT_GRID};
use crate::kernel::{SupportBody, Vec2};

use super::{bisect, ShapeError, ShapeMetrics};

pub fn reuleaux_metrics(w: f64) -> ShapeMetrics {
    ShapeMetrics {
        area: 0.5 * (PI - 3f64.sqrt()) * w * w,
        perimeter: PI * w,
        diameter: w,
    }
}

/// Circular sector of radius `r` and central angle `phi ∈ (0, π]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Sector {
    pub r: f64,
    pub phi: f64,
}

impl Sector {
    pub fn new(r: f64, phi: f64) -> Result<Self, ShapeError> {
        if !(r > 0.0 && r.is_finite() && phi > 0.0 && phi <= PI) {
            return Err(ShapeError::BadSector { r, phi });
        }
        Ok(Sector { r, phi })
    }

    /// Apex at the origin, arc symmetric about the +x axis.
    pub fn outline(&self, n: usize) -> Vec<Vec2> {
        let n = n.max(2);
        let mut out = vec![Vec2::new(0.0, 0.0)];
        out.extend((0..=n).map(|k| {
            Vec2::from_angle(-self.phi / 2.0 + self.phi * k as f64 / n as f64) * self.r
        }));
        out
    }
}

pub fn sector_metrics(s: &Sector) -> ShapeMetrics {
    let (r, phi) = (s.r, s.phi);
    ShapeMetrics {
        area: 0.5 * r * r * phi,
        perimeter: r * (2.0 + phi),
        diameter: r.max(2.0 * r * (phi / 2.0).sin()),
    }
}

/// `area / perimeter²` of a sector with angle `φ`; rises on `(0, 2]` and
/// falls after.
fn sector_ratio(phi: f64) -> f64 {
    phi / (2.0 * (2.0 + phi) * (2.0 + phi))
}

/// All sectors with angle in `(0, π]` that have the given perimeter and
/// area, in increasing angle.
pub fn solve_sectors(perimeter: f64, area: f64) -> Vec<Sector> {
    if !(perimeter > 0.0 && area > 0.0) {
        return Vec::new();
    }
    let target = area / (perimeter * perimeter);
    let g = |phi: f64| sector_ratio(phi) - target;
    let mut phis = Vec::new();
    if target <= sector_ratio(2.0) {
        phis.push(bisect(g, 0.0, 2.0));
        if target >= sector_ratio(PI) && target < sector_ratio(2.0) {
            phis.push(bisect(g, 2.0, PI));
        }
    }
    phis.into_iter()
        .filter_map(|phi| Sector::new(perimeter / (2.0 + phi), phi).ok())
        .collect()
}

/// `(1 − t)·R + t·D` for the Reuleaux triangle `R` and disc `D` of width 1.
pub fn interpolate_constant_width(t: f64) -> Result<SupportBody, ShapeError> {
    interpolate_constant_width_with(t, 1.0, DEFAULT_GRID)
}

pub fn interpolate_constant_width_with(
    t: f64,
    width: f64,
    grid: usize,
) -> Result<SupportBody, ShapeError> {
    if !(0.0..=1.0).contains(&t) {
        return Err(ShapeError::BadParameter(t));
    }
    let reuleaux = SupportBody::from_fn(grid, |a| reuleaux_support(width, a))?;
    let disc = SupportBody::disc(grid, width / 2.0)?;
    Ok(reuleaux.combine(&disc, t)?)
}

/// Exact area of the interpolant. The mixed area of a width-`w` body with
/// the disc of radius `w/2` equals the disc area, so
/// `A(t) = (1 − t)²·A_R + (1 − (1 − t)²)·A_D`.
pub fn interpolant_area(t: f64, width: f64) -> f64 {
    let a_r = reuleaux_metrics(width).area;
    let a_d = PI * width * width / 4.0;
    let s = (1.0 - t) * (1.0 - t);
    s * a_r + (1.0 - s) * a_d
}
