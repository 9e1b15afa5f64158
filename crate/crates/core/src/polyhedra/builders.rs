use std::f64::consts::{PI, SQRT_2};

use serde::{Deserialize, Serialize};

use super::mesh::{Mesh, Vec3};
use super::PolyError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PyramidMode {
    Opposite,
    Adjacent,
}

/// Axis-aligned box `[0, a] × [0, b] × [0, c]`.
pub fn build_box(a: f64, b: f64, c: f64) -> Result<Mesh, PolyError> {
    if !(a > 0.0 && b > 0.0 && c > 0.0) {
        return Err(PolyError::BadParameter("box sides must be positive"));
    }
    let vertices = (0..8)
        .map(|i| {
            Vec3::new(
                if i & 1 != 0 { a } else { 0.0 },
                if i & 2 != 0 { b } else { 0.0 },
                if i & 4 != 0 { c } else { 0.0 },
            )
        })
        .collect();
    Mesh::new(vertices, box_faces().to_vec())
}

pub fn build_cube(a: f64) -> Result<Mesh, PolyError> {
    build_box(a, a, a)
}

/// Faces of the box with corner `i` at bit pattern `(x, y, z)`, in the
/// order −z, +z, −y, +y, −x, +x.
fn box_faces() -> [Vec<usize>; 6] {
    [
        vec![0, 2, 3, 1],
        vec![4, 5, 7, 6],
        vec![0, 1, 5, 4],
        vec![2, 6, 7, 3],
        vec![0, 4, 6, 2],
        vec![1, 3, 7, 5],
    ]
}

/// Cube of side `a` with square pyramids of height `h` on two faces: top
/// and bottom, or top and `+x`. In adjacent mode the two pyramids meet
/// along a cube edge and `h < a/2` keeps that edge convex.
pub fn build_cube_with_pyramids(a: f64, h: f64, mode: PyramidMode) -> Result<Mesh, PolyError> {
    if !(a > 0.0 && h > 0.0) {
        return Err(PolyError::BadParameter("side and height must be positive"));
    }
    if mode == PyramidMode::Adjacent && h >= a / 2.0 {
        return Err(PolyError::BadParameter("adjacent pyramids need height below half the side"));
    }
    cube_with_pyramids_unchecked(a, h, mode)
}

pub(crate) fn cube_with_pyramids_unchecked(
    a: f64,
    h: f64,
    mode: PyramidMode,
) -> Result<Mesh, PolyError> {
    let cube = build_cube(a)?;
    let mut vertices = cube.vertices().to_vec();
    let faces = box_faces();
    let capped = match mode {
        PyramidMode::Opposite => [0, 1],
        PyramidMode::Adjacent => [1, 5],
    };
    let mut out = Vec::new();
    for (fi, f) in faces.iter().enumerate() {
        if !capped.contains(&fi) {
            out.push(f.clone());
            continue;
        }
        let pts: Vec<Vec3> = f.iter().map(|&i| vertices[i]).collect();
        let centre = pts.iter().fold(Vec3::default(), |s, &p| s + p) * 0.25;
        let normal = (pts[1] - pts[0]).cross(pts[2] - pts[1]);
        let apex = centre + normal * (h / normal.norm());
        let ai = vertices.len();
        vertices.push(apex);
        for k in 0..4 {
            out.push(vec![f[k], f[(k + 1) % 4], ai]);
        }
    }
    Mesh::new(vertices, out)
}

/// Square cupola / octagonal prism / square cupola with unit-length edges
/// scaled to 2. `twisted` turns the top cupola by 45°.
fn cupola_prism_cupola(twisted: bool) -> Result<Mesh, PolyError> {
    let c = 1.0 + SQRT_2;
    let r_oct = 1.0 / (PI / 8.0).sin();
    let mut vertices = Vec::with_capacity(24);
    for z in [-1.0, 1.0] {
        for k in 0..8 {
            let t = PI / 8.0 + k as f64 * PI / 4.0;
            vertices.push(Vec3::new(r_oct * t.cos(), r_oct * t.sin(), z));
        }
    }
    let square = |shift: usize, z: f64| -> Vec<Vec3> {
        (0..4)
            .map(|j| {
                let t = PI / 4.0 + (2 * j + shift) as f64 * PI / 4.0;
                Vec3::new(SQRT_2 * t.cos(), SQRT_2 * t.sin(), z)
            })
            .collect()
    };
    vertices.extend(square(0, -c));
    let top_shift = usize::from(twisted);
    vertices.extend(square(top_shift, c));
    let bottom = |k: usize| k % 8;
    let top = |k: usize| 8 + k % 8;
    let mut faces: Vec<Vec<usize>> = Vec::with_capacity(26);
    for k in 0..8 {
        faces.push(vec![bottom(k), bottom(k + 1), top(k + 1), top(k)]);
    }
    for (ring, base, shift) in [(0usize, 16usize, 0usize), (8, 20, top_shift)] {
        let o = |k: usize| ring + k % 8;
        let s = |j: usize| base + j % 4;
        faces.push((0..4).map(s).collect());
        for j in 0..4 {
            let k = 2 * j + shift;
            faces.push(vec![o(k), o(k + 1), s(j)]);
            faces.push(vec![o(k + 1), o(k + 2), s(j + 1), s(j)]);
        }
    }
    Mesh::new_oriented(vertices, faces)
}

/// Edge length 2; vertices are the permutations of `(±1, ±1, ±(1 + √2))`.
pub fn build_rhombicuboctahedron() -> Result<Mesh, PolyError> {
    cupola_prism_cupola(false)
}

pub fn build_pseudorhombicuboctahedron() -> Result<Mesh, PolyError> {
    cupola_prism_cupola(true)
}

fn circumradius(n: usize, side: f64) -> f64 {
    side / (2.0 * (PI / n as f64).sin())
}

fn ring(n: usize, r: f64, phase: f64, z: f64) -> impl Iterator<Item = Vec3> {
    (0..n).map(move |k| {
        let t = phase + 2.0 * PI * k as f64 / n as f64;
        Vec3::new(r * t.cos(), r * t.sin(), z)
    })
}

/// Height of a pyramid apex above a regular `n`-gon of side `s` with
/// lateral edge `l`.
fn apex_height(n: usize, s: f64, l: f64) -> Result<f64, PolyError> {
    let r = circumradius(n, s);
    if !(s > 0.0 && l > r) {
        return Err(PolyError::Infeasible(format!(
            "lateral edge {l} must exceed the {n}-gon circumradius {r}"
        )));
    }
    Ok((l * l - r * r).sqrt())
}

/// Regular 20-gon of side `s` with apexes above and below at lateral edge
/// `l`: 40 congruent isosceles faces.
pub fn build_icosagonal_dipyramid(s: f64, l: f64) -> Result<Mesh, PolyError> {
    let h = apex_height(20, s, l)?;
    let mut vertices: Vec<Vec3> = ring(20, circumradius(20, s), 0.0, 0.0).collect();
    vertices.push(Vec3::new(0.0, 0.0, h));
    vertices.push(Vec3::new(0.0, 0.0, -h));
    let mut faces = Vec::with_capacity(40);
    for k in 0..20 {
        faces.push(vec![k, (k + 1) % 20, 20]);
        faces.push(vec![(k + 1) % 20, k, 21]);
    }
    Mesh::new(vertices, faces)
}

/// Decagonal antiprism of side `s` and lateral edge `l`, capped on both
/// decagons by pyramids with lateral edge `l`: 40 congruent isosceles
/// faces.
pub fn build_decagonal_dipyramidal_antiprism(s: f64, l: f64) -> Result<Mesh, PolyError> {
    let cap = apex_height(10, s, l)?;
    let r = circumradius(10, s);
    let twist = PI / 10.0;
    let chord = 2.0 * r * (twist / 2.0).sin();
    let gap = (l * l - chord * chord).sqrt();
    let half = gap / 2.0;
    let mut vertices: Vec<Vec3> = ring(10, r, 0.0, -half).collect();
    vertices.extend(ring(10, r, twist, half));
    vertices.push(Vec3::new(0.0, 0.0, half + cap));
    vertices.push(Vec3::new(0.0, 0.0, -half - cap));
    let mut faces = Vec::with_capacity(40);
    for k in 0..10 {
        let (b0, b1) = (k, (k + 1) % 10);
        let (t0, t1) = (10 + k, 10 + (k + 1) % 10);
        faces.push(vec![b0, b1, t0]);
        faces.push(vec![b1, t1, t0]);
        faces.push(vec![t0, t1, 20]);
        faces.push(vec![b1, b0, 21]);
    }
    let m = Mesh::new(vertices, faces)?;
    if !m.is_convex() {
        return Err(PolyError::Infeasible(format!(
            "caps with lateral edge {l} fold inward over the antiprism"
        )));
    }
    Ok(m)
}

/// Smallest lateral edge (relative to side 1) at which both 40-face solids
/// exist and are convex, found by bisection.
pub fn forty_face_threshold() -> f64 {
    let ok = |l: f64| {
        build_icosagonal_dipyramid(1.0, l).is_ok_and(|m| m.is_convex())
            && build_decagonal_dipyramidal_antiprism(1.0, l).is_ok()
    };
    let mut lo = circumradius(10, 1.0);
    let mut hi = 2.0 * circumradius(20, 1.0);
    while !ok(hi) {
        hi *= 2.0;
    }
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if ok(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}
