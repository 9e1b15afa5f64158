//! Orientation scans of area-fixed cuts.
//!
//! The scan parameter `φ` covers a full turn: the cut with normal `ν(φ)`
//! keeps the target share on its `ν(φ)·p ≤ offset` side, so `φ` and `φ + π`
//! give the same line family with the small piece on opposite sides.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use crate::kernel::ConvexPolygon;

use super::cut::{oriented_offset, split, LineCut, RatioTarget, SplitResult};
use super::FairError;

pub const DEFAULT_SCAN_SAMPLES: usize = 720;

/// One area-fixed cut. "Small" is the piece holding the target share.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProfilePoint {
    pub phi: f64,
    pub cut: LineCut,
    pub area_small: f64,
    pub area_large: f64,
    pub perim_small: f64,
    pub perim_large: f64,
    pub rho: f64,
}

/// The cut at orientation `phi` whose `ν(φ)·p ≤ offset` side holds the
/// fraction `f`.
pub fn cut_at(c: &ConvexPolygon, phi: f64, f: f64) -> Result<(ProfilePoint, SplitResult), FairError> {
    if !(f > 0.0 && f < 1.0) {
        return Err(FairError::BadFraction(f));
    }
    let phi = phi.rem_euclid(2.0 * PI);
    let o = oriented_offset(c, phi, f);
    let cut = LineCut::new(phi, o);
    let s = split(c, cut)?;
    let small_is_a = phi < PI;
    let (area_small, area_large, perim_small, perim_large) = if small_is_a {
        (s.area_a, s.area_b, s.perim_a, s.perim_b)
    } else {
        (s.area_b, s.area_a, s.perim_b, s.perim_a)
    };
    Ok((
        ProfilePoint {
            phi,
            cut,
            area_small,
            area_large,
            perim_small,
            perim_large,
            rho: perim_small / perim_large,
        },
        s,
    ))
}

/// `ρ(φ) = perim_small / perim_large` at `2·samples` orientations evenly
/// spread over a full turn, in increasing `φ`.
pub fn perimeter_ratio_profile(
    c: &ConvexPolygon,
    target: &RatioTarget,
    samples: usize,
) -> Result<Vec<ProfilePoint>, FairError> {
    if samples < 2 {
        return Err(FairError::TooFewSamples(samples));
    }
    let f = target.fraction();
    (0..2 * samples)
        .into_par_iter()
        .map(|k| cut_at(c, PI * k as f64 / samples as f64, f).map(|(p, _)| p))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum FairCutOutcome {
    Found {
        point: ProfilePoint,
        #[serde(skip)]
        split: Box<SplitResult>,
    },
    NotFound {
        rho_min: f64,
        rho_max: f64,
    },
}

/// A cut with the target area share and perimeter ratio `√(a/b)`: scans
/// `ρ(φ)`, brackets the first crossing and bisects in `φ`.
pub fn find_scaled_fair_cut(
    c: &ConvexPolygon,
    target: &RatioTarget,
    samples: usize,
    tol: f64,
) -> Result<FairCutOutcome, FairError> {
    let profile = perimeter_ratio_profile(c, target, samples)?;
    let goal = target.rho_target();
    let f = target.fraction();
    let g = |p: &ProfilePoint| p.rho - goal;
    let n = profile.len();
    for k in 0..n {
        let (p, q) = (&profile[k], &profile[(k + 1) % n]);
        if g(p).abs() < tol {
            let (point, s) = cut_at(c, p.phi, f)?;
            return Ok(FairCutOutcome::Found {
                point,
                split: Box::new(s),
            });
        }
        if g(p).signum() == g(q).signum() {
            continue;
        }
        let (mut lo, mut hi) = (p.phi, if k + 1 == n { 2.0 * PI } else { q.phi });
        let glo = g(p);
        let mut best = cut_at(c, lo, f)?;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            let cur = cut_at(c, mid, f)?;
            let gm = g(&cur.0);
            if gm.abs() < g(&best.0).abs() {
                best = cur;
            }
            if gm.abs() < tol || hi - lo < 1e-15 {
                break;
            }
            if gm.signum() == glo.signum() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        return Ok(FairCutOutcome::Found {
            point: best.0,
            split: Box::new(best.1),
        });
    }
    let (rho_min, rho_max) = profile
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), p| (a.min(p.rho), b.max(p.rho)));
    Ok(FairCutOutcome::NotFound { rho_min, rho_max })
}

/// An area-halving cut that also halves the perimeter. `g(φ) = perim_small
/// − perim_large` is continuous with `g(φ + π) = −g(φ)`, so bisection on
/// `[0, π]` finds a zero.
pub fn equal_fair_cut(c: &ConvexPolygon) -> Result<(ProfilePoint, SplitResult), FairError> {
    let g = |p: &ProfilePoint| p.perim_small - p.perim_large;
    let tol = 1e-12 * c.perimeter();
    let (mut lo, mut hi) = (0.0, PI);
    let first = cut_at(c, lo, 0.5)?;
    let g0 = g(&first.0);
    if g0.abs() <= tol {
        return Ok(first);
    }
    let mut best = first;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let cur = cut_at(c, mid, 0.5)?;
        let gm = g(&cur.0);
        if gm.abs() < g(&best.0).abs() {
            best = cur;
        }
        if gm.abs() <= tol || hi - lo < 1e-16 {
            break;
        }
        if gm.signum() == g0.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(best)
}

/// Chord cut of the unit disc at area ratio `a : b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiscChord {
    /// Half the central angle subtended by the small segment.
    pub half_angle: f64,
    pub rho: f64,
    pub rho_target: f64,
    pub achievable: bool,
}

/// Solves `θ − sin θ cos θ = π·a/(a+b)` and evaluates
/// `ρ = (2θ + 2 sin θ) / (2π − 2θ + 2 sin θ)`.
pub fn disc_chord_analysis(target: &RatioTarget) -> DiscChord {
    let rhs = PI * target.fraction();
    let (mut lo, mut hi) = (0.0f64, PI / 2.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid - mid.sin() * mid.cos() < rhs {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let t = 0.5 * (lo + hi);
    let rho = (2.0 * t + 2.0 * t.sin()) / (2.0 * PI - 2.0 * t + 2.0 * t.sin());
    let rho_target = target.rho_target();
    DiscChord {
        half_angle: t,
        rho,
        rho_target,
        achievable: (rho - rho_target).abs() < 1e-9,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::polygon::random_convex_polygon;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn one_three() -> RatioTarget {
        RatioTarget::new(1.0, 3.0).unwrap()
    }

    #[test]
    fn long_rectangle_profile_endpoints() {
        let r = ConvexPolygon::rectangle(1.0, 4.0).unwrap();
        let prof = perimeter_ratio_profile(&r, &one_three(), DEFAULT_SCAN_SAMPLES).unwrap();
        let lo = prof.iter().map(|p| p.rho).fold(f64::INFINITY, f64::min);
        let hi = prof.iter().map(|p| p.rho).fold(f64::NEG_INFINITY, f64::max);
        assert!(lo <= 0.5 + 1e-9, "{lo}");
        assert!(hi >= 17.0 / 19.0 - 1e-9, "{hi}");
        // axis-parallel cuts sit at φ = π/2 and φ = π
        let n = prof.len();
        assert!((prof[n / 4].rho - 17.0 / 19.0).abs() < 1e-12);
        assert!((prof[n / 2].rho - 0.5).abs() < 1e-12);
        for p in &prof {
            assert!((p.area_small - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn long_rectangle_fair_cut() {
        let r = ConvexPolygon::rectangle(1.0, 4.0).unwrap();
        let t = one_three();
        let FairCutOutcome::Found { point, split } =
            find_scaled_fair_cut(&r, &t, DEFAULT_SCAN_SAMPLES, 1e-12).unwrap()
        else {
            panic!("expected a cut");
        };
        assert!((point.rho - t.rho_target()).abs() < 1e-9);
        let (a, b) = (split.area_a.min(split.area_b), split.area_a.max(split.area_b));
        assert!((a / b - 1.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn square_halving_profile() {
        let sq = ConvexPolygon::rectangle(1.0, 1.0).unwrap();
        let t = RatioTarget::new(1.0, 1.0).unwrap();
        let prof = perimeter_ratio_profile(&sq, &t, 8).unwrap();
        for p in &prof {
            // every halving line of a square passes through its centre
            assert!((p.rho - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn disc_cannot_be_cut_fairly_at_one_three() {
        let disc = ConvexPolygon::regular(4096, 1.0).unwrap();
        let t = one_three();
        let chord = disc_chord_analysis(&t);
        assert!(!chord.achievable);
        assert!(chord.rho - t.rho_target() > 0.1);
        match find_scaled_fair_cut(&disc, &t, 90, 1e-9).unwrap() {
            FairCutOutcome::NotFound { rho_min, rho_max } => {
                assert!(rho_max - rho_min < 1e-3);
                assert!((rho_min - chord.rho).abs() < 1e-3);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn disc_profile_is_flat() {
        let disc = ConvexPolygon::regular(512, 1.0).unwrap();
        let prof = perimeter_ratio_profile(&disc, &one_three(), 90).unwrap();
        let lo = prof.iter().map(|p| p.rho).fold(f64::INFINITY, f64::min);
        let hi = prof.iter().map(|p| p.rho).fold(f64::NEG_INFINITY, f64::max);
        assert!(hi - lo < 1e-3);
    }

    #[test]
    fn disc_chord_matches_polygon_cut() {
        let disc = ConvexPolygon::regular(4096, 1.0).unwrap();
        let chord = disc_chord_analysis(&one_three());
        let (p, s) = cut_at(&disc, 0.3, 0.25).unwrap();
        assert!((p.rho - chord.rho).abs() < 1e-4);
        assert!((s.cut_length - 2.0 * chord.half_angle.sin()).abs() < 1e-4);
    }

    #[test]
    fn disc_chord_special_cases() {
        let half = disc_chord_analysis(&RatioTarget::new(1.0, 1.0).unwrap());
        assert!((half.half_angle - PI / 2.0).abs() < 1e-12);
        assert!((half.rho - 1.0).abs() < 1e-12);
        assert!(half.achievable);
        let thin = disc_chord_analysis(&RatioTarget::new(1.0, 100.0).unwrap());
        assert!(thin.rho > thin.rho_target);
    }

    #[test]
    fn equal_cuts() {
        let r = ConvexPolygon::rectangle(3.0, 1.0).unwrap();
        let (p, _) = equal_fair_cut(&r).unwrap();
        assert!((p.perim_small - p.perim_large).abs() < 1e-9);
        let tri = ConvexPolygon::new([
            crate::Vec2::new(0.0, 0.0),
            crate::Vec2::new(4.0, 0.0),
            crate::Vec2::new(0.0, 3.0),
        ])
        .unwrap();
        let (p, _) = equal_fair_cut(&tri).unwrap();
        assert!((p.area_small - p.area_large).abs() < 1e-9);
        assert!((p.perim_small - p.perim_large).abs() < 1e-9 * tri.perimeter());
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        for _ in 0..20 {
            let poly = random_convex_polygon(&mut rng, 20);
            let (p, s) = equal_fair_cut(&poly).unwrap();
            assert!((s.area_a - s.area_b).abs() < 1e-9 * poly.area());
            assert!((p.perim_small - p.perim_large).abs() < 1e-9 * poly.perimeter());
        }
    }

    #[test]
    fn profile_is_lipschitz() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let t = one_three();
        for _ in 0..10 {
            let poly = random_convex_polygon(&mut rng, 64);
            for k in 0..40 {
                let phi = 2.0 * PI * k as f64 / 40.0;
                let a = cut_at(&poly, phi, t.fraction()).unwrap().0.rho;
                let b = cut_at(&poly, phi + 1e-4, t.fraction()).unwrap().0.rho;
                assert!((a - b).abs() < 50.0 * 1e-4, "jump {}", (a - b).abs());
            }
        }
    }
}
