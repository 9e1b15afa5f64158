//! Float convex polygons: construction-time cleanup, metrics and
//! rotating-calipers diameter / minimum width.

use std::f64::consts::PI;

use serde::Serialize;
use thiserror::Error;

use super::point::{ring_perimeter, signed_area, Vec2};

/// Merge tolerance for duplicate points and collinear triples.
pub const CLEANUP_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PolygonError {
    #[error("polygon needs at least three distinct non-collinear vertices (got {0})")]
    TooFewVertices(usize),
    #[error("vertices are not in convex position (reflex turn at vertex {0})")]
    NotConvex(usize),
    #[error("non-finite coordinate")]
    NonFinite,
}

/// A strictly convex polygon, counterclockwise, starting at its
/// lexicographically smallest vertex.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvexPolygon {
    vertices: Vec<Vec2>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolygonMetrics {
    pub area: f64,
    pub perimeter: f64,
}

impl ConvexPolygon {
    /// Builds a polygon from vertices in cyclic order (either orientation).
    /// Duplicate points and collinear triples are merged away.
    pub fn new(points: impl IntoIterator<Item = Vec2>) -> Result<Self, PolygonError> {
        let mut pts: Vec<Vec2> = points.into_iter().collect();
        if pts.iter().any(|p| !p.x.is_finite() || !p.y.is_finite()) {
            return Err(PolygonError::NonFinite);
        }
        let scale = pts
            .iter()
            .map(|p| p.x.abs().max(p.y.abs()))
            .fold(1.0f64, f64::max);
        // duplicates, including the closing point
        pts.dedup_by(|a, b| a.dist(*b) <= CLEANUP_TOL * scale);
        while pts.len() > 1 && pts[0].dist(pts[pts.len() - 1]) <= CLEANUP_TOL * scale {
            pts.pop();
        }
        if signed_area(&pts) < 0.0 {
            pts.reverse();
        }
        // collinear triples
        loop {
            let n = pts.len();
            if n < 3 {
                return Err(PolygonError::TooFewVertices(n));
            }
            let drop = (0..n).find(|&i| {
                let a = pts[(i + n - 1) % n];
                let b = pts[i];
                let c = pts[(i + 1) % n];
                let (u, v) = (b - a, c - b);
                u.cross(v).abs() <= CLEANUP_TOL * u.norm() * v.norm() && u.dot(v) >= 0.0
            });
            match drop {
                Some(i) => {
                    pts.remove(i);
                }
                None => break,
            }
        }
        let n = pts.len();
        for i in 0..n {
            let a = pts[(i + n - 1) % n];
            let b = pts[i];
            let c = pts[(i + 1) % n];
            if (b - a).cross(c - b) <= 0.0 {
                return Err(PolygonError::NotConvex(i));
            }
        }
        // a convex ring winds exactly once
        let turning: f64 = (0..n)
            .map(|i| {
                let a = pts[(i + n - 1) % n];
                let b = pts[i];
                let c = pts[(i + 1) % n];
                let (u, v) = (b - a, c - b);
                u.cross(v).atan2(u.dot(v))
            })
            .sum();
        if (turning - 2.0 * PI).abs() > 1e-6 {
            return Err(PolygonError::NotConvex(0));
        }
        let start = (0..n)
            .min_by(|&i, &j| {
                pts[i]
                    .partial_cmp(&pts[j])
                    .expect("finite coordinates compare")
            })
            .unwrap_or(0);
        pts.rotate_left(start);
        Ok(ConvexPolygon { vertices: pts })
    }

    /// Convex hull of a point cloud (Andrew's monotone chain).
    pub fn hull(points: &[Vec2]) -> Result<Self, PolygonError> {
        let mut pts: Vec<Vec2> = points.to_vec();
        pts.sort_by(|a, b| a.partial_cmp(b).expect("finite coordinates compare"));
        pts.dedup();
        if pts.len() < 3 {
            return Err(PolygonError::TooFewVertices(pts.len()));
        }
        let mut lower: Vec<Vec2> = Vec::new();
        for &p in &pts {
            while lower.len() >= 2
                && (lower[lower.len() - 1] - lower[lower.len() - 2])
                    .cross(p - lower[lower.len() - 1])
                    <= 0.0
            {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<Vec2> = Vec::new();
        for &p in pts.iter().rev() {
            while upper.len() >= 2
                && (upper[upper.len() - 1] - upper[upper.len() - 2])
                    .cross(p - upper[upper.len() - 1])
                    <= 0.0
            {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        ConvexPolygon::new(lower)
    }

    /// Axis-aligned rectangle `[0, w] × [0, h]`.
    pub fn rectangle(w: f64, h: f64) -> Result<Self, PolygonError> {
        ConvexPolygon::new([
            Vec2::new(0.0, 0.0),
            Vec2::new(w, 0.0),
            Vec2::new(w, h),
            Vec2::new(0.0, h),
        ])
    }

    /// Regular `n`-gon centred at the origin with one vertex on the +x axis.
    pub fn regular(n: usize, circumradius: f64) -> Result<Self, PolygonError> {
        ConvexPolygon::new(
            (0..n).map(|k| Vec2::from_angle(2.0 * PI * k as f64 / n as f64) * circumradius),
        )
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    pub fn perimeter(&self) -> f64 {
        ring_perimeter(&self.vertices)
    }

    pub fn metrics(&self) -> PolygonMetrics {
        PolygonMetrics {
            area: self.area(),
            perimeter: self.perimeter(),
        }
    }

    pub fn centroid(&self) -> Vec2 {
        let n = self.len();
        let (mut cx, mut cy, mut a2) = (0.0, 0.0, 0.0);
        for i in 0..n {
            let p = self.vertices[i];
            let q = self.vertices[(i + 1) % n];
            let c = p.cross(q);
            cx += (p.x + q.x) * c;
            cy += (p.y + q.y) * c;
            a2 += c;
        }
        Vec2::new(cx / (3.0 * a2), cy / (3.0 * a2))
    }

    /// Minimum and maximum of `⟨v, dir⟩` over the vertices.
    pub fn extent(&self, dir: Vec2) -> (f64, f64) {
        self.vertices
            .iter()
            .map(|v| v.dot(dir))
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| {
                (lo.min(x), hi.max(x))
            })
    }

    /// Diameter and minimum width in one rotating-calipers pass.
    pub fn calipers(&self) -> (f64, f64) {
        let p = &self.vertices;
        let n = p.len();
        let mut diam: f64 = 0.0;
        let mut width = f64::INFINITY;
        let mut j = 1;
        for i in 0..n {
            let a = p[i];
            let b = p[(i + 1) % n];
            let e = b - a;
            let height = |k: usize| e.cross(p[k] - a);
            while height((j + 1) % n) > height(j) {
                j = (j + 1) % n;
                diam = diam.max(a.dist(p[j])).max(b.dist(p[j]));
            }
            let k = (j + 1) % n;
            diam = diam
                .max(a.dist(p[j]))
                .max(b.dist(p[j]))
                .max(a.dist(p[k]))
                .max(b.dist(p[k]));
            width = width.min(height(j) / e.norm());
        }
        (diam, width)
    }

    /// Largest distance between two parallel supporting lines.
    pub fn diameter(&self) -> f64 {
        self.calipers().0
    }

    /// Smallest distance between two parallel supporting lines.
    pub fn min_width(&self) -> f64 {
        self.calipers().1
    }

    pub fn translated(&self, d: Vec2) -> Self {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|&v| v + d).collect(),
        }
    }
}

/// Random convex polygon with up to `max_vertices` vertices: either points
/// on a random ellipse (exactly `max_vertices` corners) or the hull of a
/// uniform cloud, chosen by a coin flip.
pub fn random_convex_polygon(rng: &mut impl rand::Rng, max_vertices: usize) -> ConvexPolygon {
    let n = max_vertices.max(3);
    loop {
        let pts: Vec<Vec2> = if rng.gen_bool(0.5) {
            let (a, b) = (rng.gen_range(0.2..2.0), rng.gen_range(0.2..2.0));
            let rot = rng.gen_range(0.0..PI);
            let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..2.0 * PI)).collect();
            angles.sort_by(f64::total_cmp);
            angles
                .into_iter()
                .map(|t| {
                    let (x, y) = (a * t.cos(), b * t.sin());
                    Vec2::new(x * rot.cos() - y * rot.sin(), x * rot.sin() + y * rot.cos())
                })
                .collect()
        } else {
            (0..n)
                .map(|_| Vec2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect()
        };
        if let Ok(p) = ConvexPolygon::hull(&pts) {
            return p;
        }
    }
}
