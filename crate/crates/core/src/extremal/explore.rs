//! Family comparison for the minimum diameter at fixed perimeter and area.
//!
//! Every convex body of perimeter `p` has diameter at least `p/π`, with
//! equality exactly for constant-width bodies. Those exist at perimeter `p`
//! only for areas between the Reuleaux triangle and the disc; below that
//! range the circular sectors are the only family evaluated here.

use std::f64::consts::PI;

use serde::Serialize;

use super::constant_width::{interpolant_area, reuleaux_metrics, sector_metrics, solve_sectors, Sector};
use super::lens::{lens_metrics, max_diameter_shape, Lens};
use super::{bisect, ShapeError};

/// Approximate crossover area and sector diameter commonly quoted for
/// perimeter `π`.
pub const QUOTED_CROSSOVER_AREA: f64 = 0.57;
pub const QUOTED_CROSSOVER_DIAMETER: f64 = 1.045;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Disc,
    ConstantWidth,
    Sector,
    Lens,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Candidate {
    Disc { radius: f64, diameter: f64 },
    /// `(1 − t)·Reuleaux + t·disc` of the given width.
    ConstantWidth { width: f64, t: f64, diameter: f64 },
    Sector { r: f64, phi: f64, diameter: f64 },
    /// Diameter maximiser, listed for reference only.
    Lens { d: f64, alpha: f64, diameter: f64 },
}

impl Candidate {
    pub fn family(&self) -> Family {
        match self {
            Candidate::Disc { .. } => Family::Disc,
            Candidate::ConstantWidth { .. } => Family::ConstantWidth,
            Candidate::Sector { .. } => Family::Sector,
            Candidate::Lens { .. } => Family::Lens,
        }
    }

    pub fn diameter(&self) -> f64 {
        match *self {
            Candidate::Disc { diameter, .. }
            | Candidate::ConstantWidth { diameter, .. }
            | Candidate::Sector { diameter, .. }
            | Candidate::Lens { diameter, .. } => diameter,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiameterReport {
    pub perimeter: f64,
    pub area: f64,
    /// `p/π`, attained only by constant-width bodies.
    pub lower_bound: f64,
    pub candidates: Vec<Candidate>,
    /// Smallest-diameter non-reference candidate, if any family applies.
    pub best: Option<Candidate>,
}

pub fn min_diameter_explore(perimeter: f64, area: f64) -> Result<DiameterReport, ShapeError> {
    if !(perimeter > 0.0 && area > 0.0 && perimeter.is_finite() && area.is_finite()) {
        return Err(ShapeError::BadInput);
    }
    let lens = max_diameter_shape(area, perimeter)?;
    let w = perimeter / PI;
    let a_disc = PI * w * w / 4.0;
    let a_reuleaux = reuleaux_metrics(w).area;
    let mut candidates = Vec::new();
    if area >= a_disc * (1.0 - 1e-12) {
        candidates.push(Candidate::Disc {
            radius: w / 2.0,
            diameter: w,
        });
    }
    if area >= a_reuleaux && area <= a_disc {
        let t = 1.0 - ((a_disc - area) / (a_disc - a_reuleaux)).sqrt();
        candidates.push(Candidate::ConstantWidth {
            width: w,
            t,
            diameter: w,
        });
    }
    for s in solve_sectors(perimeter, area) {
        candidates.push(Candidate::Sector {
            r: s.r,
            phi: s.phi,
            diameter: sector_metrics(&s).diameter,
        });
    }
    let best = candidates
        .iter()
        .copied()
        .fold(None, |acc: Option<Candidate>, c| match acc {
            Some(b) if b.diameter() <= c.diameter() => Some(b),
            _ => Some(c),
        });
    candidates.push(lens_candidate(&lens));
    Ok(DiameterReport {
        perimeter,
        area,
        lower_bound: w,
        candidates,
        best,
    })
}

fn lens_candidate(l: &Lens) -> Candidate {
    Candidate::Lens {
        d: l.d,
        alpha: l.alpha,
        diameter: lens_metrics(l).diameter,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CrossoverRow {
    pub area: f64,
    pub sector: Option<Sector>,
    pub sector_diameter: Option<f64>,
    pub constant_width_diameter: Option<f64>,
    pub lower_bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossoverReport {
    pub perimeter: f64,
    pub reuleaux_area: f64,
    pub lower_bound: f64,
    /// Largest scanned area at which a sector reaches the lower bound.
    pub c_hat: Option<f64>,
    /// Sector minimising the diameter over the whole family.
    pub best_sector: Sector,
    pub best_sector_area: f64,
    pub best_sector_diameter: f64,
    /// Sector with angle `π/3`.
    pub sector_at_sixty: Sector,
    pub sector_at_sixty_area: f64,
    /// Quoted values scaled to this perimeter.
    pub quoted_area: f64,
    pub quoted_diameter: f64,
    pub sector_at_quoted_area: Option<Sector>,
    pub sector_at_quoted_area_diameter: Option<f64>,
    pub rows: Vec<CrossoverRow>,
}

/// Scans `rows` areas downward from the Reuleaux area to a fifth of it.
pub fn crossover_scan(perimeter: f64, rows: usize) -> Result<CrossoverReport, ShapeError> {
    if !(perimeter > 0.0 && perimeter.is_finite()) {
        return Err(ShapeError::BadInput);
    }
    let w = perimeter / PI;
    let a_reuleaux = reuleaux_metrics(w).area;
    let lowest_sector = |area: f64| {
        solve_sectors(perimeter, area)
            .into_iter()
            .map(|s| (s, sector_metrics(&s).diameter))
            .min_by(|a, b| a.1.total_cmp(&b.1))
    };
    let n = rows.max(2);
    let table: Vec<CrossoverRow> = (0..n)
        .map(|k| {
            let area = a_reuleaux * (1.0 - 0.8 * k as f64 / (n - 1) as f64);
            let best = lowest_sector(area);
            CrossoverRow {
                area,
                sector: best.map(|b| b.0),
                sector_diameter: best.map(|b| b.1),
                constant_width_diameter: (area >= a_reuleaux * (1.0 - 1e-12)).then_some(w),
                lower_bound: w,
            }
        })
        .collect();
    let c_hat = table
        .iter()
        .find(|r| r.sector_diameter.is_some_and(|d| d <= w * (1.0 + 1e-12)))
        .map(|r| r.area);
    // diameter along the family at fixed perimeter: r for φ ≤ π/3, else
    // the chord; minimised by ternary search
    let diam = |phi: f64| sector_metrics(&Sector { r: perimeter / (2.0 + phi), phi }).diameter;
    let (mut lo, mut hi) = (1e-9, PI);
    for _ in 0..300 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if diam(m1) <= diam(m2) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    let phi = 0.5 * (lo + hi);
    let best_sector = Sector::new(perimeter / (2.0 + phi), phi)?;
    let best_metrics = sector_metrics(&best_sector);
    let sixty = Sector::new(perimeter / (2.0 + PI / 3.0), PI / 3.0)?;
    let scale = w * w;
    let quoted_area = QUOTED_CROSSOVER_AREA * scale;
    let at_quoted = lowest_sector(quoted_area);
    Ok(CrossoverReport {
        perimeter,
        reuleaux_area: a_reuleaux,
        lower_bound: w,
        c_hat,
        best_sector,
        best_sector_area: best_metrics.area,
        best_sector_diameter: best_metrics.diameter,
        sector_at_sixty: sixty,
        sector_at_sixty_area: sector_metrics(&sixty).area,
        quoted_area,
        quoted_diameter: QUOTED_CROSSOVER_DIAMETER * w,
        sector_at_quoted_area: at_quoted.map(|b| b.0),
        sector_at_quoted_area_diameter: at_quoted.map(|b| b.1),
        rows: table,
    })
}

/// Area at which the interpolant of width `w` reaches `area`, if it does.
pub fn constant_width_parameter(width: f64, area: f64) -> Option<f64> {
    let lo = interpolant_area(0.0, width);
    let hi = interpolant_area(1.0, width);
    (area >= lo && area <= hi).then(|| bisect(|t| interpolant_area(t, width) - area, 0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::DEFAULT_PERIMETER;

    #[test]
    fn disc_at_full_area() {
        let r = min_diameter_explore(PI, PI / 4.0).unwrap();
        let best = r.best.unwrap();
        assert_eq!(best.family(), Family::Disc);
        assert!((best.diameter() - 1.0).abs() < 1e-12);
        assert!(min_diameter_explore(PI, 0.8).is_err());
    }

    #[test]
    fn constant_width_wins_above_reuleaux() {
        let r = min_diameter_explore(PI, 0.71).unwrap();
        let best = r.best.unwrap();
        assert_eq!(best.family(), Family::ConstantWidth);
        assert_eq!(best.diameter(), 1.0);
        let Candidate::ConstantWidth { t, .. } = best else { unreachable!() };
        assert!((t - constant_width_parameter(1.0, 0.71).unwrap()).abs() < 1e-9);
        assert!((interpolant_area(t, 1.0) - 0.71).abs() < 1e-12);
    }

    #[test]
    fn only_sectors_at_small_area() {
        let r = min_diameter_explore(PI, 0.40).unwrap();
        let best = r.best.unwrap();
        assert_eq!(best.family(), Family::Sector);
        assert!(best.diameter() > 1.0);
        let Candidate::Sector { r: rad, phi, .. } = best else { unreachable!() };
        assert!((0.5 * rad * rad * phi - 0.40).abs() < 1e-12);
        assert!((rad * (2.0 + phi) - PI).abs() < 1e-12);
    }

    #[test]
    fn gap_between_families_has_no_best() {
        let r = min_diameter_explore(PI, 0.65).unwrap();
        assert!(r.best.is_none());
        assert_eq!(r.candidates.len(), 1);
    }

    #[test]
    fn lens_is_never_smaller() {
        for a in [0.2, 0.4, 0.55, 0.7, 0.75] {
            let r = min_diameter_explore(PI, a).unwrap();
            let lens = r.candidates.last().unwrap();
            assert_eq!(lens.family(), Family::Lens);
            if let Some(b) = r.best {
                assert!(lens.diameter() >= b.diameter());
            }
        }
    }

    #[test]
    fn crossover_table() {
        let c = crossover_scan(DEFAULT_PERIMETER, 200).unwrap();
        assert!((c.reuleaux_area - 0.5 * (PI - 3f64.sqrt())).abs() < 1e-12);
        assert!(c.c_hat.is_none());
        assert!((c.best_sector.phi - PI / 3.0).abs() < 1e-6);
        assert!((c.sector_at_sixty.r - 1.0310).abs() < 1e-4);
        assert!((c.sector_at_sixty_area - 0.5565).abs() < 1e-4);
        assert!(c.rows[0].sector.is_none());
        assert_eq!(c.rows[0].constant_width_diameter, Some(1.0));
        let q = c.sector_at_quoted_area.unwrap();
        assert!((0.5 * q.r * q.r * q.phi - 0.57).abs() < 1e-12);
        for row in &c.rows {
            if let Some(d) = row.sector_diameter {
                assert!(d > row.lower_bound);
                assert!(d >= c.best_sector_diameter - 1e-12);
            }
        }
    }
}
