use std::collections::HashMap;
use std::ops::{Add, Mul, Sub};

use serde::Serialize;

use super::PolyError;

/// Relative tolerance (against the bounding-box diagonal) for planarity
/// and convexity checks.
pub const MESH_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub fn dot(self, o: Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Vec3) -> Vec3 {
        Vec3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn dist(self, o: Vec3) -> f64 {
        (self - o).norm()
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, k: f64) -> Vec3 {
        Vec3::new(self.x * k, self.y * k, self.z * k)
    }
}

/// A closed polyhedral surface. Faces are vertex-index cycles,
/// counterclockwise seen from outside.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Mesh {
    vertices: Vec<Vec3>,
    faces: Vec<Vec<usize>>,
}

impl Mesh {
    /// Checks indices, face planarity, that every directed edge occurs once
    /// with its reverse in another face, the Euler relation, and positive
    /// volume.
    pub fn new(vertices: Vec<Vec3>, faces: Vec<Vec<usize>>) -> Result<Self, PolyError> {
        let m = Mesh { vertices, faces };
        m.validate()?;
        Ok(m)
    }

    /// Like [`Mesh::new`], but first turns every face so that its normal
    /// points away from the vertex centroid. Only meaningful for convex
    /// input.
    pub fn new_oriented(vertices: Vec<Vec3>, mut faces: Vec<Vec<usize>>) -> Result<Self, PolyError> {
        let n = vertices.len().max(1) as f64;
        let centre = vertices.iter().fold(Vec3::default(), |a, &v| a + v) * (1.0 / n);
        for f in &mut faces {
            if f.iter().any(|&i| i >= vertices.len()) {
                return Err(PolyError::BadIndex);
            }
            let pts: Vec<Vec3> = f.iter().map(|&i| vertices[i]).collect();
            let c = pts.iter().fold(Vec3::default(), |a, &v| a + v) * (1.0 / pts.len() as f64);
            if newell(&pts).dot(c - centre) < 0.0 {
                f.reverse();
            }
        }
        Mesh::new(vertices, faces)
    }

    fn validate(&self) -> Result<(), PolyError> {
        let nv = self.vertices.len();
        if self.vertices.iter().any(|v| !(v.x.is_finite() && v.y.is_finite() && v.z.is_finite())) {
            return Err(PolyError::NonFinite);
        }
        let scale = self.scale();
        let mut directed: HashMap<(usize, usize), usize> = HashMap::new();
        for (fi, f) in self.faces.iter().enumerate() {
            if f.len() < 3 {
                return Err(PolyError::DegenerateFace(fi));
            }
            if f.iter().any(|&i| i >= nv) {
                return Err(PolyError::BadIndex);
            }
            let pts: Vec<Vec3> = f.iter().map(|&i| self.vertices[i]).collect();
            let n = newell(&pts);
            if n.norm() <= MESH_TOL * scale * scale {
                return Err(PolyError::DegenerateFace(fi));
            }
            let u = n * (1.0 / n.norm());
            let off = pts[0].dot(u);
            if pts.iter().any(|p| (p.dot(u) - off).abs() > MESH_TOL * scale) {
                return Err(PolyError::NonPlanar(fi));
            }
            for k in 0..f.len() {
                let e = (f[k], f[(k + 1) % f.len()]);
                if e.0 == e.1 || directed.insert(e, fi).is_some() {
                    return Err(PolyError::BadEdge(e.0, e.1));
                }
            }
        }
        for &(a, b) in directed.keys() {
            if !directed.contains_key(&(b, a)) {
                return Err(PolyError::BadEdge(a, b));
            }
        }
        let used = {
            let mut seen = vec![false; nv];
            self.faces.iter().flatten().for_each(|&i| seen[i] = true);
            seen.iter().filter(|&&s| s).count()
        };
        if used != nv {
            return Err(PolyError::UnusedVertex);
        }
        let euler = nv as i64 - (directed.len() / 2) as i64 + self.faces.len() as i64;
        if euler != 2 {
            return Err(PolyError::Euler(euler));
        }
        if self.volume() <= 0.0 {
            return Err(PolyError::Inverted);
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[Vec3] {
        &self.vertices
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn edge_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn face_points(&self, f: usize) -> Vec<Vec3> {
        self.faces[f].iter().map(|&i| self.vertices[i]).collect()
    }

    /// Bounding-box diagonal.
    pub fn scale(&self) -> f64 {
        let inf = f64::INFINITY;
        let (lo, hi) = self.vertices.iter().fold(
            (Vec3::new(inf, inf, inf), Vec3::new(-inf, -inf, -inf)),
            |(lo, hi), v| {
                (
                    Vec3::new(lo.x.min(v.x), lo.y.min(v.y), lo.z.min(v.z)),
                    Vec3::new(hi.x.max(v.x), hi.y.max(v.y), hi.z.max(v.z)),
                )
            },
        );
        hi.dist(lo)
    }

    /// Divergence-theorem volume over fan-triangulated faces.
    pub fn volume(&self) -> f64 {
        self.faces
            .iter()
            .map(|f| {
                let p0 = self.vertices[f[0]];
                (1..f.len() - 1)
                    .map(|k| p0.dot(self.vertices[f[k]].cross(self.vertices[f[k + 1]])))
                    .sum::<f64>()
            })
            .sum::<f64>()
            / 6.0
    }

    pub fn face_area(&self, f: usize) -> f64 {
        0.5 * newell(&self.face_points(f)).norm()
    }

    pub fn surface_area(&self) -> f64 {
        (0..self.faces.len()).map(|f| self.face_area(f)).sum()
    }

    /// Every vertex on the inner side of every face plane.
    pub fn is_convex(&self) -> bool {
        let tol = MESH_TOL * self.scale();
        (0..self.faces.len()).all(|f| {
            let pts = self.face_points(f);
            let n = newell(&pts);
            let u = n * (1.0 / n.norm());
            let off = pts[0].dot(u);
            self.vertices.iter().all(|v| v.dot(u) - off <= tol)
        })
    }

    /// Applies `f` to every vertex.
    pub fn mapped(&self, f: impl Fn(Vec3) -> Vec3) -> Result<Mesh, PolyError> {
        Mesh::new(self.vertices.iter().map(|&v| f(v)).collect(), self.faces.clone())
    }

    /// Renumbers vertices by `perm` (old index `i` becomes `perm[i]`).
    pub fn relabeled(&self, perm: &[usize]) -> Result<Mesh, PolyError> {
        if perm.len() != self.vertices.len() {
            return Err(PolyError::BadIndex);
        }
        let mut verts = vec![Vec3::default(); perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            verts[p] = self.vertices[i];
        }
        let faces = self
            .faces
            .iter()
            .map(|f| f.iter().map(|&i| perm[i]).collect())
            .collect();
        Mesh::new(verts, faces)
    }
}

/// Newell normal: twice the vector area of a polygon.
pub(crate) fn newell(pts: &[Vec3]) -> Vec3 {
    let n = pts.len();
    (0..n).fold(Vec3::default(), |acc, i| acc + pts[i].cross(pts[(i + 1) % n]))
}
