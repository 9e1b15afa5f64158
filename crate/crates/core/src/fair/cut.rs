use std::f64::consts::PI;

use serde::Serialize;

use crate::kernel::point::{ring_perimeter, signed_area};
use crate::kernel::{ConvexPolygon, Vec2};

use super::FairError;

/// The line `ν·p = offset` with `ν = (sin θ, −cos θ)`, i.e. the line through
/// `offset·ν` running in direction `(cos θ, sin θ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LineCut {
    pub theta: f64,
    pub offset: f64,
}

impl LineCut {
    /// Normalises `theta` into `[0, π)`. Turning the line by `π` negates
    /// the normal, so the offset changes sign and the pieces swap labels.
    pub fn new(theta: f64, offset: f64) -> Self {
        let mut t = theta.rem_euclid(2.0 * PI);
        let mut o = offset;
        if t >= PI {
            t -= PI;
            o = -o;
        }
        LineCut {
            theta: t,
            offset: o,
        }
    }

    pub fn normal(&self) -> Vec2 {
        normal(self.theta)
    }

    pub fn direction(&self) -> Vec2 {
        Vec2::from_angle(self.theta)
    }
}

pub(crate) fn normal(phi: f64) -> Vec2 {
    Vec2::new(phi.sin(), -phi.cos())
}

/// Both pieces of a cut. `piece_a` lies on the side `ν·p ≤ offset`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SplitResult {
    pub cut: LineCut,
    pub piece_a: ConvexPolygon,
    pub piece_b: ConvexPolygon,
    pub cut_length: f64,
    pub area_a: f64,
    pub area_b: f64,
    pub perim_a: f64,
    pub perim_b: f64,
}

/// Target area ratio `a : b` with `a ≤ b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RatioTarget {
    pub a: f64,
    pub b: f64,
}

impl RatioTarget {
    pub fn new(a: f64, b: f64) -> Result<Self, FairError> {
        if !(a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite()) {
            return Err(FairError::BadRatio(a, b));
        }
        Ok(RatioTarget {
            a: a.min(b),
            b: a.max(b),
        })
    }

    /// Area share of the smaller piece.
    pub fn fraction(&self) -> f64 {
        self.a / (self.a + self.b)
    }

    /// Perimeter ratio a scaled fair partition must reach.
    pub fn rho_target(&self) -> f64 {
        (self.a / self.b).sqrt()
    }
}

/// Clips a convex ring by `ν·p ≤ c` and `ν·p ≥ c` in one pass. Also returns
/// the chord length.
pub(crate) fn clip(ring: &[Vec2], nu: Vec2, c: f64) -> (Vec<Vec2>, Vec<Vec2>, f64) {
    let n = ring.len();
    let mut lower = Vec::with_capacity(n + 2);
    let mut upper = Vec::with_capacity(n + 2);
    let mut on_line: Vec<Vec2> = Vec::with_capacity(2);
    for i in 0..n {
        let p = ring[i];
        let q = ring[(i + 1) % n];
        let dp = nu.dot(p) - c;
        let dq = nu.dot(q) - c;
        if dp <= 0.0 {
            lower.push(p);
        }
        if dp >= 0.0 {
            upper.push(p);
        }
        if dp == 0.0 {
            on_line.push(p);
        }
        if (dp < 0.0 && dq > 0.0) || (dp > 0.0 && dq < 0.0) {
            let r = p + (q - p) * (dp / (dp - dq));
            lower.push(r);
            upper.push(r);
            on_line.push(r);
        }
    }
    let dir = nu.perp();
    let (lo, hi) = on_line
        .iter()
        .map(|p| dir.dot(*p))
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| (a.min(v), b.max(v)));
    let len = if on_line.len() >= 2 { hi - lo } else { 0.0 };
    (lower, upper, len)
}

/// Area on the `ν·p ≤ c` side and the chord length.
fn area_below(ring: &[Vec2], nu: Vec2, c: f64) -> (f64, f64) {
    let (lower, _, len) = clip(ring, nu, c);
    let a = if lower.len() >= 3 {
        signed_area(&lower).abs()
    } else {
        0.0
    };
    (a, len)
}

pub fn split(c: &ConvexPolygon, cut: LineCut) -> Result<SplitResult, FairError> {
    let ring = c.vertices();
    let nu = cut.normal();
    let (lower, upper, cut_length) = clip(ring, nu, cut.offset);
    let total = c.area();
    let piece = |r: &[Vec2]| -> Result<(ConvexPolygon, f64, f64), FairError> {
        if r.len() < 3 {
            return Err(FairError::NoIntersection);
        }
        let a = signed_area(r).abs();
        if a <= 1e-14 * total {
            return Err(FairError::NoIntersection);
        }
        let poly = ConvexPolygon::new(r.iter().copied()).map_err(|_| FairError::NoIntersection)?;
        Ok((poly, a, ring_perimeter(r)))
    };
    let (piece_a, area_a, perim_a) = piece(&lower)?;
    let (piece_b, area_b, perim_b) = piece(&upper)?;
    Ok(SplitResult {
        cut,
        piece_a,
        piece_b,
        cut_length,
        area_a,
        area_b,
        perim_a,
        perim_b,
    })
}

/// Offset along `ν(φ)` such that the side `ν(φ)·p ≤ offset` holds the
/// fraction `f` of the area. Bisection safeguarded Newton steps; the area
/// derivative is the chord length.
pub(crate) fn oriented_offset(c: &ConvexPolygon, phi: f64, f: f64) -> f64 {
    let ring = c.vertices();
    let nu = normal(phi);
    let (mut lo, mut hi) = ring
        .iter()
        .map(|p| nu.dot(*p))
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| (a.min(v), b.max(v)));
    let total = c.area();
    let target = f * total;
    let scale = (hi - lo).abs().max(f64::MIN_POSITIVE);
    let mut o = lo + f * (hi - lo);
    for _ in 0..200 {
        let (a, len) = area_below(ring, nu, o);
        let g = a - target;
        if g.abs() <= 1e-15 * total {
            break;
        }
        if g < 0.0 {
            lo = o;
        } else {
            hi = o;
        }
        if hi - lo <= 1e-16 * scale {
            break;
        }
        let newton = o - g / len;
        o = if len > 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
    }
    o
}

/// Cut of direction `theta` leaving the fraction `f` of the area in
/// `piece_a`.
pub fn solve_offset_for_area(c: &ConvexPolygon, theta: f64, f: f64) -> Result<LineCut, FairError> {
    if !(f > 0.0 && f < 1.0) {
        return Err(FairError::BadFraction(f));
    }
    let t = theta.rem_euclid(PI);
    Ok(LineCut {
        theta: t,
        offset: oriented_offset(c, t, f),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::polygon::random_convex_polygon;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rect(w: f64, h: f64) -> ConvexPolygon {
        ConvexPolygon::rectangle(w, h).unwrap()
    }

    #[test]
    fn short_side_cut_of_long_rectangle() {
        // 4 wide, 1 tall; vertical line x = 1
        let s = split(&rect(4.0, 1.0), LineCut::new(PI / 2.0, 1.0)).unwrap();
        assert!((s.area_a - 1.0).abs() < 1e-12);
        assert!((s.perim_a - 4.0).abs() < 1e-12);
        assert!((s.perim_b - 8.0).abs() < 1e-12);
        assert!((s.cut_length - 1.0).abs() < 1e-12);
    }

    #[test]
    fn long_side_cut_of_long_rectangle() {
        // horizontal line y = 1/4: ν = (0, −1), so offset −1/4 and the
        // lower side is piece_b
        let s = split(&rect(4.0, 1.0), LineCut::new(0.0, -0.25)).unwrap();
        assert!((s.perim_b - 8.5).abs() < 1e-12);
        assert!((s.perim_a - 9.5).abs() < 1e-12);
    }

    #[test]
    fn central_cuts_halve_the_square() {
        let sq = rect(1.0, 1.0);
        let centre = Vec2::new(0.5, 0.5);
        for k in 0..50 {
            let theta = PI * k as f64 / 50.0;
            let cut = LineCut::new(theta, normal(theta).dot(centre));
            let s = split(&sq, cut).unwrap();
            assert!((s.area_a - 0.5).abs() < 1e-12);
            assert!((s.area_b - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn missing_line_is_reported() {
        assert_eq!(
            split(&rect(1.0, 1.0), LineCut::new(PI / 2.0, 3.0)),
            Err(FairError::NoIntersection)
        );
    }

    #[test]
    fn normalisation_flips_offset() {
        let c = LineCut::new(PI + 0.25, 2.0);
        assert!((c.theta - 0.25).abs() < 1e-15);
        assert_eq!(c.offset, -2.0);
    }

    #[test]
    fn offsets_for_area() {
        let sq = rect(1.0, 1.0);
        let c = solve_offset_for_area(&sq, 0.0, 0.5).unwrap();
        assert!((c.offset + 0.5).abs() < 1e-12);
        let c = solve_offset_for_area(&rect(1.0, 4.0), PI / 2.0, 0.25).unwrap();
        assert!((c.offset - 0.25).abs() < 1e-12);
        let c = solve_offset_for_area(&rect(4.0, 1.0), PI / 2.0, 0.25).unwrap();
        assert!((c.offset - 1.0).abs() < 1e-12);
        assert_eq!(
            solve_offset_for_area(&sq, 0.0, 1.0),
            Err(FairError::BadFraction(1.0))
        );
    }

    #[test]
    fn split_conservation_on_random_cuts() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 1000 {
            let n = rng.gen_range(3..40);
            let p = random_convex_polygon(&mut rng, n);
            let theta = rng.gen_range(0.0..PI);
            let f = rng.gen_range(0.05..0.95);
            let cut = solve_offset_for_area(&p, theta, f).unwrap();
            let Ok(s) = split(&p, cut) else { continue };
            let (a, per) = (p.area(), p.perimeter());
            assert!((s.area_a + s.area_b - a).abs() <= 1e-9 * a);
            assert!((s.perim_a + s.perim_b - per - 2.0 * s.cut_length).abs() <= 1e-9 * per);
            assert!((s.area_a / a - f).abs() < 1e-12);
            // both pieces convex: construction would have failed otherwise
            assert!(s.piece_a.len() >= 3 && s.piece_b.len() >= 3);
            checked += 1;
        }
    }

    #[test]
    fn offset_area_is_monotone_in_fraction() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let p = random_convex_polygon(&mut rng, 12);
            let theta = rng.gen_range(0.0..PI);
            let mut last = f64::NEG_INFINITY;
            for k in 1..20 {
                let c = solve_offset_for_area(&p, theta, k as f64 / 20.0).unwrap();
                assert!(c.offset > last);
                last = c.offset;
            }
        }
    }
}
