//! Face congruence classes. A face is described by its cyclic sequence of
//! (interior angle, following edge length) pairs; the canonical form is the
//! lexicographic minimum over rotations and both traversal directions, so
//! congruent faces agree up to rigid motion and reflection.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use serde::Serialize;

use super::mesh::{Mesh, Vec3};

/// Quantum for lengths, relative to the mean edge length.
pub const LENGTH_QUANTUM: f64 = 1e-6;
/// Quantum for angles, in radians.
pub const ANGLE_QUANTUM: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FaceSignature {
    /// `(angle, edge)` pairs in quantum units.
    pub pairs: Vec<(i64, i64)>,
}

pub type FaceMultiset = BTreeMap<FaceSignature, usize>;

impl FaceSignature {
    pub fn of_polygon(pts: &[Vec3], length_quantum: f64) -> Self {
        let fwd = raw_pairs(pts, length_quantum);
        let rev_pts: Vec<Vec3> = pts.iter().rev().copied().collect();
        let rev = raw_pairs(&rev_pts, length_quantum);
        let n = fwd.len();
        let best = [fwd, rev]
            .into_iter()
            .flat_map(|seq| {
                (0..n)
                    .map(|r| {
                        let mut s = seq.clone();
                        s.rotate_left(r);
                        s
                    })
                    .collect::<Vec<_>>()
            })
            .min()
            .unwrap_or_default();
        FaceSignature { pairs: best }
    }

    pub fn sides(&self) -> usize {
        self.pairs.len()
    }

    /// Short description such as `square`, `isosceles triangle` or
    /// `6-gon`.
    pub fn kind(&self) -> String {
        let n = self.pairs.len();
        let mut edges: Vec<i64> = self.pairs.iter().map(|p| p.1).collect();
        edges.sort_unstable();
        edges.dedup();
        let right = (PI / 2.0 / ANGLE_QUANTUM).round() as i64;
        match n {
            3 => match edges.len() {
                1 => "equilateral triangle".into(),
                2 => "isosceles triangle".into(),
                _ => "scalene triangle".into(),
            },
            4 if self.pairs.iter().all(|p| p.0 == right) => {
                if edges.len() == 1 { "square" } else { "rectangle" }.into()
            }
            4 => "quadrilateral".into(),
            _ => format!("{n}-gon"),
        }
    }
}

fn raw_pairs(pts: &[Vec3], length_quantum: f64) -> Vec<(i64, i64)> {
    let n = pts.len();
    (0..n)
        .map(|i| {
            let prev = pts[(i + n - 1) % n];
            let cur = pts[i];
            let next = pts[(i + 1) % n];
            let (a, b) = (prev - cur, next - cur);
            let angle = a.cross(b).norm().atan2(a.dot(b));
            (
                (angle / ANGLE_QUANTUM).round() as i64,
                (cur.dist(next) / length_quantum).round() as i64,
            )
        })
        .collect()
}

pub fn mean_edge_length(m: &Mesh) -> f64 {
    let (sum, count) = m.faces().iter().fold((0.0, 0usize), |(s, c), f| {
        let k = f.len();
        let len: f64 = (0..k)
            .map(|i| m.vertices()[f[i]].dist(m.vertices()[f[(i + 1) % k]]))
            .sum();
        (s + len, c + k)
    });
    sum / count as f64
}

pub fn face_multiset(m: &Mesh) -> FaceMultiset {
    face_multiset_with(m, LENGTH_QUANTUM * mean_edge_length(m))
}

pub fn face_multiset_with(m: &Mesh, length_quantum: f64) -> FaceMultiset {
    let mut out = FaceMultiset::new();
    for f in 0..m.faces().len() {
        *out.entry(FaceSignature::of_polygon(&m.face_points(f), length_quantum))
            .or_insert(0) += 1;
    }
    out
}

pub fn multiset_equal(x: &FaceMultiset, y: &FaceMultiset) -> bool {
    x == y
}

/// Face counts by [`FaceSignature::kind`].
pub fn kind_counts(ms: &FaceMultiset) -> BTreeMap<String, usize> {
    let mut out = BTreeMap::new();
    for (sig, &c) in ms {
        *out.entry(sig.kind()).or_insert(0) += c;
    }
    out
}
