//! A continuous family of two-piece partitions of an axis-aligned rectangle
//! in which one piece is a boundary band.
//!
//! For `s ∈ (0, 1/2]` the outer curve is the boundary arc of length
//! `s·perimeter` centred on the bottom-edge midpoint. The inner curve is the
//! image of that arc under the clamp onto `[t, W−t] × [t, H−t]`. Area grows
//! monotonically with `t ∈ (0, min(W, H)/2]`, so the thickness is found by
//! bisection, and the perimeter ratio depends continuously on `s`.

use serde::Serialize;

use crate::kernel::point::{reflex_vertex_count, ring_perimeter, signed_area};
use crate::kernel::Vec2;

use super::cut::RatioTarget;
use super::FairError;

const REFLEX_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BandSample {
    pub s: f64,
    pub t: f64,
    pub arc_length: f64,
    pub area: f64,
    pub perim_small: f64,
    pub perim_large: f64,
    pub rho: f64,
    pub reflex_vertices: usize,
    /// Counterclockwise ring of the band piece.
    pub polygon: Vec<Vec2>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BandSolution {
    pub sample: BandSample,
    /// Smallest arc share at which the band can hold the target area.
    pub s_low: f64,
    pub rho_low: f64,
    /// Ratio at `s = 1/2`, where both pieces share half the boundary.
    pub rho_high: f64,
}

#[derive(Debug, Clone, Copy)]
struct Rect {
    w: f64,
    h: f64,
}

impl Rect {
    fn new(w: f64, h: f64) -> Result<Self, FairError> {
        if !(w > 0.0 && h > 0.0 && w.is_finite() && h.is_finite()) {
            return Err(FairError::BadRectangle(w, h));
        }
        Ok(Rect { w, h })
    }

    fn perimeter(&self) -> f64 {
        2.0 * (self.w + self.h)
    }

    fn t_max(&self) -> f64 {
        0.5 * self.w.min(self.h)
    }

    /// Boundary point at counterclockwise arc position `u` from the
    /// bottom-edge midpoint.
    fn boundary(&self, u: f64) -> Vec2 {
        let (w, h) = (self.w, self.h);
        let u = (u + 0.5 * w).rem_euclid(self.perimeter());
        if u <= w {
            Vec2::new(u, 0.0)
        } else if u <= w + h {
            Vec2::new(w, u - w)
        } else if u <= 2.0 * w + h {
            Vec2::new(w - (u - w - h), h)
        } else {
            Vec2::new(0.0, h - (u - 2.0 * w - h))
        }
    }

    /// Vertices of the arc `[−len/2, len/2]` in counterclockwise order.
    fn arc(&self, len: f64) -> Vec<Vec2> {
        let (w, h, per) = (self.w, self.h, self.perimeter());
        let half = 0.5 * len;
        let mut corners: Vec<f64> = [0.5 * w, 0.5 * w + h, 1.5 * w + h, 1.5 * w + 2.0 * h]
            .iter()
            .flat_map(|&c| [c - per, c])
            .filter(|&c| c > -half && c < half)
            .collect();
        corners.sort_by(f64::total_cmp);
        let mut out = Vec::with_capacity(corners.len() + 2);
        out.push(self.boundary(-half));
        out.extend(corners.into_iter().map(|u| self.boundary(u)));
        out.push(self.boundary(half));
        out
    }

    fn clamp(&self, p: Vec2, t: f64) -> Vec2 {
        Vec2::new(p.x.clamp(t, self.w - t), p.y.clamp(t, self.h - t))
    }

    fn band(&self, arc: &[Vec2], t: f64) -> Vec<Vec2> {
        let mut ring: Vec<Vec2> = arc.to_vec();
        ring.extend(arc.iter().rev().map(|&p| self.clamp(p, t)));
        ring.dedup_by(|a, b| a.dist(*b) <= 1e-14);
        while ring.len() > 1 && ring[0].dist(ring[ring.len() - 1]) <= 1e-14 {
            ring.pop();
        }
        ring
    }
}

fn arc_length(arc: &[Vec2]) -> f64 {
    arc.windows(2).map(|p| p[0].dist(p[1])).sum()
}

fn band_area(r: &Rect, arc: &[Vec2], t: f64) -> f64 {
    let ring = r.band(arc, t);
    if ring.len() < 3 {
        0.0
    } else {
        signed_area(&ring)
    }
}

/// The band ring for arc share `s` and thickness `t`.
pub fn band_polygon(w: f64, h: f64, s: f64, t: f64) -> Result<Vec<Vec2>, FairError> {
    let r = Rect::new(w, h)?;
    if !(s > 0.0 && s <= 0.5) {
        return Err(FairError::BandInfeasible { s });
    }
    if !(t > 0.0 && t <= r.t_max()) {
        return Err(FairError::BadThickness(t));
    }
    Ok(r.band(&r.arc(s * r.perimeter()), t))
}

/// The band of arc share `s` holding the target share of the area.
pub fn nonconvex_band_partition(
    w: f64,
    h: f64,
    target: &RatioTarget,
    s: f64,
) -> Result<BandSample, FairError> {
    let r = Rect::new(w, h)?;
    if !(s > 0.0 && s <= 0.5) {
        return Err(FairError::BandInfeasible { s });
    }
    let per = r.perimeter();
    let arc = r.arc(s * per);
    let goal = target.fraction() * w * h;
    let t_max = r.t_max();
    if band_area(&r, &arc, t_max) < goal * (1.0 - 1e-12) {
        return Err(FairError::BandInfeasible { s });
    }
    let (mut lo, mut hi) = (0.0, t_max);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if band_area(&r, &arc, mid) < goal {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-16 * t_max {
            break;
        }
    }
    let t = hi;
    let polygon = r.band(&arc, t);
    let arc_length = arc_length(&arc);
    let perim_small = ring_perimeter(&polygon);
    let perim_large = per - arc_length + (perim_small - arc_length);
    Ok(BandSample {
        s,
        t,
        arc_length,
        area: signed_area(&polygon),
        perim_small,
        perim_large,
        rho: perim_small / perim_large,
        reflex_vertices: reflex_vertex_count(&polygon, REFLEX_TOL),
        polygon,
    })
}

/// Bisects `s` between the shortest feasible arc and the half boundary so
/// that the band partition reaches the perimeter ratio `√(a/b)`.
pub fn solve_band(w: f64, h: f64, target: &RatioTarget, tol: f64) -> Result<BandSolution, FairError> {
    let r = Rect::new(w, h)?;
    let goal_area = target.fraction() * w * h;
    let per = r.perimeter();
    let t_max = r.t_max();
    let fits = |s: f64| band_area(&r, &r.arc(s * per), t_max) >= goal_area;
    let (mut lo, mut hi) = (0.0, 0.5);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if fits(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi - lo <= 1e-16 {
            break;
        }
    }
    let s_low = hi;
    let goal = target.rho_target();
    let low = nonconvex_band_partition(w, h, target, s_low)?;
    let high = nonconvex_band_partition(w, h, target, 0.5)?;
    let (rho_low, rho_high) = (low.rho, high.rho);
    let g = |x: &BandSample| x.rho - goal;
    if g(&high).abs() <= tol {
        return Ok(BandSolution {
            sample: high,
            s_low,
            rho_low,
            rho_high,
        });
    }
    if g(&low).abs() <= tol {
        return Ok(BandSolution {
            sample: low,
            s_low,
            rho_low,
            rho_high,
        });
    }
    if g(&low).signum() == g(&high).signum() {
        return Err(FairError::NoBracket { rho_low, rho_high });
    }
    let (mut a, mut b) = (s_low, 0.5);
    let mut best = low;
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        let cur = nonconvex_band_partition(w, h, target, mid)?;
        let gm = g(&cur);
        let done = gm.abs() <= tol || b - a <= 1e-16;
        if gm < 0.0 {
            a = mid;
        } else {
            b = mid;
        }
        if gm.abs() < g(&best).abs() {
            best = cur;
        }
        if done {
            break;
        }
    }
    Ok(BandSolution {
        sample: best,
        s_low,
        rho_low,
        rho_high,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(a: f64, b: f64) -> RatioTarget {
        RatioTarget::new(a, b).unwrap()
    }

    #[test]
    fn half_boundary_square_halves() {
        let b = nonconvex_band_partition(1.0, 1.0, &ratio(1.0, 1.0), 0.5).unwrap();
        assert!((b.rho - 1.0).abs() < 1e-12);
        assert!((b.area - 0.5).abs() < 1e-12);
        assert!((b.t - 0.5).abs() < 1e-6);
    }

    #[test]
    fn half_boundary_always_balances_perimeter() {
        for (w, h) in [(1.0, 1.0), (1.0, 4.0), (3.0, 2.0)] {
            for (a, bb) in [(1.0, 3.0), (1.0, 8.0), (2.0, 5.0)] {
                let b = nonconvex_band_partition(w, h, &ratio(a, bb), 0.5).unwrap();
                assert!((b.rho - 1.0).abs() < 1e-12);
                assert!((b.area / (w * h) - a / (a + bb)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn thin_band_area_matches_strip_formula() {
        // arc stays on the bottom edge: the band is a t-high strip
        let b = nonconvex_band_partition(4.0, 1.0, &ratio(1.0, 19.0), 0.2).unwrap();
        assert!((b.arc_length - 2.0).abs() < 1e-12);
        assert!((b.t - 0.1).abs() < 1e-12);
        assert!((b.perim_small - 4.2).abs() < 1e-12);
        assert!((b.perim_large - 10.2).abs() < 1e-12);
    }

    #[test]
    fn unit_square_one_three() {
        let t = ratio(1.0, 3.0);
        let sol = solve_band(1.0, 1.0, &t, 1e-9).unwrap();
        assert!((sol.sample.rho - (1.0f64 / 3.0).sqrt()).abs() < 1e-6);
        assert!(sol.rho_low < t.rho_target());
        assert!((sol.s_low - 0.25).abs() < 1e-12);
        assert!((sol.sample.area - 0.25).abs() < 1e-12);
        let end = nonconvex_band_partition(1.0, 1.0, &t, 0.5).unwrap();
        assert!(end.reflex_vertices > 0);
    }

    #[test]
    fn tall_rectangle_one_eight_is_nonconvex() {
        let t = ratio(1.0, 8.0);
        let sol = solve_band(1.0, 4.0, &t, 1e-9).unwrap();
        assert!((sol.sample.rho - t.rho_target()).abs() < 1e-6);
        assert!((sol.s_low - 0.16 * 10.0 / 9.0).abs() < 1e-12);
        assert!(sol.sample.reflex_vertices > 0);
    }

    #[test]
    fn ratio_is_continuous_in_s() {
        let t = ratio(1.0, 3.0);
        for (w, h) in [(1.0, 1.0), (1.0, 4.0), (2.0, 3.0)] {
            let s_low = solve_band(w, h, &t, 1e-9).unwrap().s_low;
            let n = 400;
            let mut prev: Option<f64> = None;
            for k in 0..=n {
                let s = s_low + (0.5 - s_low) * k as f64 / n as f64;
                let rho = nonconvex_band_partition(w, h, &t, s).unwrap().rho;
                if let Some(p) = prev {
                    assert!((rho - p).abs() < 0.02, "jump at s = {s}");
                }
                prev = Some(rho);
            }
        }
    }

    #[test]
    fn infeasible_arcs_are_rejected() {
        let t = ratio(1.0, 3.0);
        assert_eq!(
            nonconvex_band_partition(1.0, 1.0, &t, 0.1),
            Err(FairError::BandInfeasible { s: 0.1 })
        );
        assert!(nonconvex_band_partition(1.0, 1.0, &t, 0.6).is_err());
        assert!(band_polygon(1.0, 1.0, 0.3, 0.7).is_err());
    }

    #[test]
    fn band_rings_are_simple_counterclockwise() {
        for s in [0.1, 0.2, 0.3, 0.45, 0.5] {
            for t in [0.05, 0.2, 0.5] {
                let ring = band_polygon(1.0, 1.0, s, t).unwrap();
                assert!(signed_area(&ring) > 0.0);
            }
        }
    }
}
