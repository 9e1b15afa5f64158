//! Convex bodies represented by a sampled support function
//! `h(θₖ)`, `θₖ = 2πk/N`.
//!
//! Minkowski combinations become pointwise linear combinations of the
//! samples, which is what makes this representation convenient for
//! constant-width work.

use std::f64::consts::PI;

use serde::Serialize;
use thiserror::Error;

use super::point::Vec2;

pub const DEFAULT_GRID: usize = 3600;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SupportError {
    #[error("grid size must be even and at least 8 (got {0})")]
    BadGrid(usize),
    #[error("width h(θ)+h(θ+π) is not positive at sample {0}")]
    NonPositiveWidth(usize),
    #[error("samples violate discrete convexity at sample {0}")]
    NotConvex(usize),
    #[error("grid sizes differ ({0} vs {1})")]
    GridMismatch(usize, usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SupportBody {
    samples: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SupportMetrics {
    pub area: f64,
    pub perimeter: f64,
    pub mean_width: f64,
    pub diameter: f64,
}

impl SupportBody {
    /// Validates the samples: even grid, positive widths and the discrete
    /// convexity condition `h(θₖ₋₁) + h(θₖ₊₁) ≥ 2h(θₖ)cos(2π/N)`.
    pub fn new(samples: Vec<f64>) -> Result<Self, SupportError> {
        let n = samples.len();
        if n < 8 || !n.is_multiple_of(2) {
            return Err(SupportError::BadGrid(n));
        }
        let half = n / 2;
        for k in 0..n {
            if samples[k] + samples[(k + half) % n] <= 0.0 {
                return Err(SupportError::NonPositiveWidth(k));
            }
        }
        let c = (2.0 * PI / n as f64).cos();
        let scale = samples.iter().fold(0.0f64, |m, h| m.max(h.abs())).max(1.0);
        for k in 0..n {
            let lhs = samples[(k + n - 1) % n] + samples[(k + 1) % n];
            if lhs < 2.0 * samples[k] * c - 1e-12 * scale {
                return Err(SupportError::NotConvex(k));
            }
        }
        Ok(SupportBody { samples })
    }

    /// Samples a closed-form support function on an `n`-point grid.
    pub fn from_fn(n: usize, h: impl Fn(f64) -> f64) -> Result<Self, SupportError> {
        SupportBody::new((0..n).map(|k| h(grid_angle(k, n))).collect())
    }

    /// Disc of radius `r` centred at the origin.
    pub fn disc(n: usize, r: f64) -> Result<Self, SupportError> {
        SupportBody::from_fn(n, |_| r)
    }

    pub fn grid_size(&self) -> usize {
        self.samples.len()
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn angle(&self, k: usize) -> f64 {
        grid_angle(k, self.grid_size())
    }

    /// `(1 − t)·self + t·other`, the Minkowski combination.
    pub fn combine(&self, other: &SupportBody, t: f64) -> Result<SupportBody, SupportError> {
        if self.grid_size() != other.grid_size() {
            return Err(SupportError::GridMismatch(
                self.grid_size(),
                other.grid_size(),
            ));
        }
        SupportBody::new(
            self.samples
                .iter()
                .zip(&other.samples)
                .map(|(a, b)| (1.0 - t) * a + t * b)
                .collect(),
        )
    }

    /// Width in direction `θₖ`: `h(θₖ) + h(θₖ + π)`.
    pub fn width(&self, k: usize) -> f64 {
        let n = self.grid_size();
        self.samples[k] + self.samples[(k + n / 2) % n]
    }

    pub fn widths(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.grid_size()).map(|k| self.width(k))
    }

    fn derivative(&self, k: usize) -> f64 {
        let n = self.grid_size();
        let step = 2.0 * PI / n as f64;
        (self.samples[(k + 1) % n] - self.samples[(k + n - 1) % n]) / (2.0 * step)
    }

    pub fn perimeter(&self) -> f64 {
        let step = 2.0 * PI / self.grid_size() as f64;
        self.samples.iter().sum::<f64>() * step
    }

    pub fn area(&self) -> f64 {
        let step = 2.0 * PI / self.grid_size() as f64;
        let acc: f64 = (0..self.grid_size())
            .map(|k| {
                let h = self.samples[k];
                let dh = self.derivative(k);
                h * h - dh * dh
            })
            .sum();
        0.5 * acc * step
    }

    /// Area, perimeter (`∫h dθ`), mean width (`perimeter / π`) and diameter.
    ///
    /// The diameter is taken as the maximal sampled width, which is exact for
    /// the centrally symmetric and constant-width bodies used in this crate
    /// but only a lower bound in general.
    pub fn metrics(&self) -> SupportMetrics {
        let perimeter = self.perimeter();
        SupportMetrics {
            area: self.area(),
            perimeter,
            mean_width: perimeter / PI,
            diameter: self.widths().fold(f64::NEG_INFINITY, f64::max),
        }
    }

    /// Maximal minus minimal sampled width.
    pub fn width_spread(&self) -> f64 {
        let (lo, hi) = self
            .widths()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), w| {
                (lo.min(w), hi.max(w))
            });
        hi - lo
    }

    /// Boundary points `x(θ) = h·u + h′·u⊥`.
    pub fn outline(&self) -> Vec<Vec2> {
        (0..self.grid_size())
            .map(|k| {
                let u = Vec2::from_angle(self.angle(k));
                u * self.samples[k] + u.perp() * self.derivative(k)
            })
            .collect()
    }
}

fn grid_angle(k: usize, n: usize) -> f64 {
    2.0 * PI * k as f64 / n as f64
}

/// Support function of the Reuleaux triangle of width `w`, centred at its
/// centre, with one vertex on the +y axis.
///
/// Around each vertex `v` (a `π/3` cone of directions) `h = ⟨v, u⟩`; in the
/// opposite cone the boundary is the arc of radius `w` centred at `v`, so
/// `h = w + ⟨v, u⟩`.
pub fn reuleaux_support(w: f64, theta: f64) -> f64 {
    let r = w / 3f64.sqrt();
    let mut best = f64::NEG_INFINITY;
    for j in 0..3 {
        let beta = PI / 2.0 + 2.0 * PI * j as f64 / 3.0;
        let d = wrap_angle(theta - beta);
        if d.abs() <= PI / 6.0 + 1e-15 {
            best = best.max(r * d.cos());
        }
        let d_opp = wrap_angle(theta - beta - PI);
        if d_opp.abs() <= PI / 6.0 + 1e-15 {
            best = best.max(w + r * (theta - beta).cos());
        }
    }
    best
}

/// Wraps to `(-π, π]`.
pub(crate) fn wrap_angle(a: f64) -> f64 {
    let mut x = a.rem_euclid(2.0 * PI);
    if x > PI {
        x -= 2.0 * PI;
    }
    x
}
