//! Symmetric lenses: the intersection of two congruent discs, described by
//! the common chord `d` and the half-angle `α` each arc subtends.

use std::f64::consts::PI;
use std::sync::OnceLock;

use serde::Serialize;

use crate::kernel::Vec2;

use super::{bisect, ShapeError, ShapeMetrics};

const MONOTONE_GRID: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Lens {
    pub d: f64,
    pub alpha: f64,
}

impl Lens {
    pub fn new(d: f64, alpha: f64) -> Result<Self, ShapeError> {
        if !(d > 0.0 && d.is_finite() && alpha > 0.0 && alpha <= PI / 2.0) {
            return Err(ShapeError::BadLens { d, alpha });
        }
        Ok(Lens { d, alpha })
    }

    pub fn radius(&self) -> f64 {
        self.d / (2.0 * self.alpha.sin())
    }

    /// Boundary with `n` points per arc, chord along the x-axis.
    pub fn outline(&self, n: usize) -> Vec<Vec2> {
        let r = self.radius();
        let c = r * self.alpha.cos();
        let n = n.max(2);
        let mut out = Vec::with_capacity(2 * n);
        for (centre, mid) in [(Vec2::new(0.0, c), -PI / 2.0), (Vec2::new(0.0, -c), PI / 2.0)] {
            for k in 0..n {
                let a = mid - self.alpha + 2.0 * self.alpha * k as f64 / n as f64;
                out.push(centre + Vec2::from_angle(a) * r);
            }
        }
        out
    }
}

pub fn lens_metrics(l: &Lens) -> ShapeMetrics {
    let r = l.radius();
    let a = l.alpha;
    ShapeMetrics {
        area: 2.0 * r * r * (a - a.sin() * a.cos()),
        perimeter: 4.0 * a * r,
        diameter: l.d,
    }
}

/// `area / perimeter²` of the lens with half-angle `α`.
fn shape_ratio(alpha: f64) -> f64 {
    let excess = if alpha < 1e-3 {
        let a3 = alpha * alpha * alpha;
        2.0 * a3 / 3.0 - 2.0 * a3 * alpha * alpha / 15.0
    } else {
        alpha - alpha.sin() * alpha.cos()
    };
    excess / (8.0 * alpha * alpha)
}

/// Confirms once that `shape_ratio` is strictly increasing on `(0, π/2]`.
fn ratio_is_monotone() -> bool {
    static CHECK: OnceLock<bool> = OnceLock::new();
    *CHECK.get_or_init(|| {
        let at = |k: usize| shape_ratio(PI / 2.0 * k as f64 / MONOTONE_GRID as f64);
        (2..=MONOTONE_GRID).all(|k| at(k) > at(k - 1))
    })
}

/// The lens with the given area and perimeter. The disc is returned when
/// `p² = 4πA` up to a relative `1e-12`.
pub fn max_diameter_shape(area: f64, perimeter: f64) -> Result<Lens, ShapeError> {
    if !(area > 0.0 && perimeter > 0.0 && area.is_finite() && perimeter.is_finite()) {
        return Err(ShapeError::BadInput);
    }
    if perimeter * perimeter < 4.0 * PI * area * (1.0 - 1e-12) {
        return Err(ShapeError::Infeasible { area, perimeter });
    }
    if !ratio_is_monotone() {
        return Err(ShapeError::NotMonotone);
    }
    let target = area / (perimeter * perimeter);
    let alpha = if target >= shape_ratio(PI / 2.0) {
        PI / 2.0
    } else {
        bisect(|a| shape_ratio(a) - target, 1e-12, PI / 2.0)
    };
    let r = perimeter / (4.0 * alpha);
    Lens::new(2.0 * r * alpha.sin(), alpha)
}
