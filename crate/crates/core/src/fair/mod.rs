//! Two-piece partitions of convex regions with prescribed area and
//! perimeter ratios: straight cuts of convex polygons, the chord family of
//! the disc, and a boundary-band family on rectangles.

pub mod band;
pub mod cut;
pub mod scan;

use thiserror::Error;

pub use band::{band_polygon, nonconvex_band_partition, solve_band, BandSample, BandSolution};
pub use cut::{solve_offset_for_area, split, LineCut, RatioTarget, SplitResult};
pub use scan::{
    cut_at, disc_chord_analysis, equal_fair_cut, find_scaled_fair_cut, perimeter_ratio_profile,
    DiscChord, FairCutOutcome, ProfilePoint, DEFAULT_SCAN_SAMPLES,
};

/// Vertex count of the polygon standing in for a disc.
pub const DISC_VERTICES: usize = 4096;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FairError {
    #[error("cut line misses the interior")]
    NoIntersection,
    #[error("ratio {0}:{1} must have positive finite parts")]
    BadRatio(f64, f64),
    #[error("area fraction {0} outside (0, 1)")]
    BadFraction(f64),
    #[error("need at least 2 samples per half-turn (got {0})")]
    TooFewSamples(usize),
    #[error("rectangle {0}x{1} must have positive finite sides")]
    BadRectangle(f64, f64),
    #[error("band thickness {0} outside (0, min(W, H)/2]")]
    BadThickness(f64),
    #[error("no band of arc share {s} holds the target area")]
    BandInfeasible { s: f64 },
    #[error("band ratio does not cross the target between {rho_low} and {rho_high}")]
    NoBracket { rho_low: f64, rho_high: f64 },
}
