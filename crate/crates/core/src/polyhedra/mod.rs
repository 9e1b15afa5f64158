//! Closed polyhedral meshes, their face-congruence multisets, and
//! constructions of distinct convex solids that share a face multiset.

pub mod builders;
pub mod compare;
pub mod faces;
pub mod mesh;
pub mod obj;

use thiserror::Error;

pub use builders::{
    build_box, build_cube, build_cube_with_pyramids, build_decagonal_dipyramidal_antiprism,
    build_icosagonal_dipyramid, build_pseudorhombicuboctahedron, build_rhombicuboctahedron,
    forty_face_threshold, PyramidMode,
};
pub use compare::{compare_report, distance_profile, possibly_congruent, CompareReport, MeshSummary};
pub use faces::{face_multiset, face_multiset_with, kind_counts, multiset_equal, FaceMultiset, FaceSignature};
pub use mesh::{Mesh, Vec3};
pub use obj::{parse_obj, write_obj};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PolyError {
    #[error("vertex index out of range")]
    BadIndex,
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("face {0} is degenerate")]
    DegenerateFace(usize),
    #[error("face {0} is not planar")]
    NonPlanar(usize),
    #[error("edge {0}->{1} is not matched by exactly one reversed edge")]
    BadEdge(usize, usize),
    #[error("a vertex belongs to no face")]
    UnusedVertex,
    #[error("Euler characteristic is {0}, expected 2")]
    Euler(i64),
    #[error("faces are oriented inward")]
    Inverted,
    #[error("{0}")]
    BadParameter(&'static str),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("comparison needs at least two meshes (got {0})")]
    TooFewMeshes(usize),
    #[error("malformed OBJ at line {0}")]
    Parse(usize),
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand::seq::SliceRandom;
    use rand_chacha::ChaCha8Rng;

    const S: f64 = 1.0;
    const L: f64 = 4.0;

    fn rigid(rng: &mut impl Rng) -> impl Fn(Vec3) -> Vec3 {
        let q: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        let n = q.iter().map(|x| x * x).sum::<f64>().sqrt();
        let [w, x, y, z] = q.map(|c| c / n);
        let t = Vec3::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        move |p: Vec3| {
            Vec3::new(
                (1.0 - 2.0 * (y * y + z * z)) * p.x + 2.0 * (x * y - z * w) * p.y + 2.0 * (x * z + y * w) * p.z,
                2.0 * (x * y + z * w) * p.x + (1.0 - 2.0 * (x * x + z * z)) * p.y + 2.0 * (y * z - x * w) * p.z,
                2.0 * (x * z - y * w) * p.x + 2.0 * (y * z + x * w) * p.y + (1.0 - 2.0 * (x * x + y * y)) * p.z,
            ) + t
        }
    }

    fn all_built() -> Vec<(String, Mesh)> {
        vec![
            ("cube".into(), build_cube(1.0).unwrap()),
            ("opposite".into(), build_cube_with_pyramids(1.0, 0.3, PyramidMode::Opposite).unwrap()),
            ("adjacent".into(), build_cube_with_pyramids(1.0, 0.3, PyramidMode::Adjacent).unwrap()),
            ("rhombi".into(), build_rhombicuboctahedron().unwrap()),
            ("pseudo".into(), build_pseudorhombicuboctahedron().unwrap()),
            ("dipyramid".into(), build_icosagonal_dipyramid(S, L).unwrap()),
            ("antiprism".into(), build_decagonal_dipyramidal_antiprism(S, L).unwrap()),
        ]
    }

    #[test]
    fn cube_volume_and_triangulations() {
        let c = build_cube(1.0).unwrap();
        assert!((c.volume() - 1.0).abs() < 1e-15);
        let v = c.vertices().to_vec();
        let mut a = Vec::new();
        let mut b = Vec::new();
        for f in c.faces() {
            a.push(vec![f[0], f[1], f[2]]);
            a.push(vec![f[0], f[2], f[3]]);
            b.push(vec![f[1], f[2], f[3]]);
            b.push(vec![f[1], f[3], f[0]]);
        }
        let (ma, mb) = (Mesh::new(v.clone(), a).unwrap(), Mesh::new(v, b).unwrap());
        assert_eq!(ma.volume(), 1.0);
        assert_eq!(mb.volume(), 1.0);
    }

    #[test]
    fn every_build_is_a_convex_closed_surface() {
        for (name, m) in all_built() {
            let (v, e, f) = (m.vertices().len(), m.edge_count(), m.faces().len());
            assert_eq!(v + f, e + 2, "{name}");
            assert!(m.is_convex(), "{name}");
        }
    }

    #[test]
    fn cube_with_pyramids() {
        let o = build_cube_with_pyramids(1.0, 0.3, PyramidMode::Opposite).unwrap();
        let a = build_cube_with_pyramids(1.0, 0.3, PyramidMode::Adjacent).unwrap();
        assert!((o.volume() - 1.2).abs() < 1e-12);
        assert!((a.volume() - 1.2).abs() < 1e-12);
        assert_eq!(o.faces().len(), 12);
        assert!(multiset_equal(&face_multiset(&o), &face_multiset(&a)));
        let kinds = kind_counts(&face_multiset(&o));
        assert_eq!(kinds["square"], 4);
        assert_eq!(kinds["isosceles triangle"], 8);
        assert!(!possibly_congruent(&o, &a));
        for mode in [PyramidMode::Opposite, PyramidMode::Adjacent] {
            assert!(build_cube_with_pyramids(1.0, 0.49, mode).unwrap().is_convex());
        }
    }

    #[test]
    fn tall_adjacent_pyramids_break_convexity() {
        assert!(build_cube_with_pyramids(1.0, 0.6, PyramidMode::Adjacent).is_err());
        let raw = builders::cube_with_pyramids_unchecked(1.0, 0.6, PyramidMode::Adjacent).unwrap();
        assert!(!raw.is_convex());
        assert!(build_cube_with_pyramids(1.0, 0.6, PyramidMode::Opposite).unwrap().is_convex());
    }

    #[test]
    fn rhombicuboctahedra() {
        let r = build_rhombicuboctahedron().unwrap();
        let p = build_pseudorhombicuboctahedron().unwrap();
        let c = 1.0 + std::f64::consts::SQRT_2;
        for v in r.vertices() {
            let mut a = [v.x.abs(), v.y.abs(), v.z.abs()];
            a.sort_by(f64::total_cmp);
            assert!((a[0] - 1.0).abs() < 1e-12 && (a[1] - 1.0).abs() < 1e-12 && (a[2] - c).abs() < 1e-12);
        }
        assert_eq!(r.faces().len(), 26);
        assert_eq!(p.faces().len(), 26);
        let (mr, mp) = (face_multiset(&r), face_multiset(&p));
        assert!(multiset_equal(&mr, &mp));
        let kinds = kind_counts(&mr);
        assert_eq!(kinds["square"], 18);
        assert_eq!(kinds["equilateral triangle"], 8);
        assert!((r.volume() - p.volume()).abs() <= 1e-9 * r.volume());
        assert!(!possibly_congruent(&r, &p));
    }

    #[test]
    fn forty_triangle_solids() {
        let d = build_icosagonal_dipyramid(S, L).unwrap();
        let a = build_decagonal_dipyramidal_antiprism(S, L).unwrap();
        let (md, ma) = (face_multiset(&d), face_multiset(&a));
        assert!(multiset_equal(&md, &ma));
        assert_eq!(md.len(), 1);
        assert_eq!(kind_counts(&md)["isosceles triangle"], 40);
        let (vd, va) = (d.volume(), a.volume());
        assert!((vd - va).abs() / vd.max(va) > 0.01);
        assert!((d.surface_area() - a.surface_area()).abs() < 1e-9 * d.surface_area());
    }

    #[test]
    fn forty_triangle_threshold() {
        let t = forty_face_threshold();
        for l in [t * (1.0 + 1e-9), t * 1.01] {
            assert!(build_icosagonal_dipyramid(1.0, l).unwrap().is_convex());
            assert!(build_decagonal_dipyramidal_antiprism(1.0, l).unwrap().is_convex());
        }
        assert!(
            build_icosagonal_dipyramid(1.0, t * 0.99).is_err()
                || build_decagonal_dipyramidal_antiprism(1.0, t * 0.99).is_err()
        );
    }

    #[test]
    fn invariants_under_rigid_motion_and_relabeling() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for (name, m) in all_built() {
            let ms = face_multiset(&m);
            for _ in 0..100 {
                let moved = m.mapped(rigid(&mut rng)).unwrap();
                let mut perm: Vec<usize> = (0..m.vertices().len()).collect();
                perm.shuffle(&mut rng);
                let moved = moved.relabeled(&perm).unwrap();
                assert!((moved.volume() - m.volume()).abs() <= 1e-9 * m.volume(), "{name}");
                assert_eq!(face_multiset(&moved), ms, "{name}");
            }
        }
    }

    #[test]
    fn face_multiset_separates_boxes() {
        let c = build_cube(1.0).unwrap();
        let b = build_box(1.0, 1.0, 2.0).unwrap();
        assert!(!multiset_equal(&face_multiset(&c), &face_multiset(&b)));
    }

    #[test]
    fn signatures_ignore_orientation_and_start() {
        let pts = [
            Vec3::new(0.0, 0.0, 0.0),
            Vec3::new(3.0, 0.0, 0.0),
            Vec3::new(3.5, 1.0, 0.0),
            Vec3::new(0.2, 2.0, 0.0),
        ];
        let base = FaceSignature::of_polygon(&pts, 1e-6);
        let mut rev = pts;
        rev.reverse();
        rev.rotate_left(2);
        assert_eq!(FaceSignature::of_polygon(&rev, 1e-6), base);
        let mirrored: Vec<Vec3> = pts.iter().map(|p| Vec3::new(-p.x, p.y, 0.0)).collect();
        assert_eq!(FaceSignature::of_polygon(&mirrored, 1e-6), base);
    }

    #[test]
    fn malformed_meshes() {
        let c = build_cube(1.0).unwrap();
        let mut faces = c.faces().to_vec();
        faces[0].reverse();
        assert!(matches!(Mesh::new(c.vertices().to_vec(), faces), Err(PolyError::BadEdge(..))));
        let mut faces = c.faces().to_vec();
        faces.iter_mut().for_each(|f| f.reverse());
        assert_eq!(Mesh::new(c.vertices().to_vec(), faces), Err(PolyError::Inverted));
        let mut v = c.vertices().to_vec();
        v[7].z += 0.1;
        assert!(matches!(Mesh::new(v, c.faces().to_vec()), Err(PolyError::NonPlanar(_))));
    }

    #[test]
    fn obj_round_trip() {
        let c = build_cube(1.0).unwrap();
        let text = write_obj(&c);
        assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 8);
        assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 6);
        for (_, m) in all_built() {
            let back = parse_obj(&write_obj(&m)).unwrap();
            assert_eq!(back.faces(), m.faces());
            assert!((back.volume() - m.volume()).abs() < 1e-9 * m.volume());
        }
        assert_eq!(parse_obj("v 0 0\n"), Err(PolyError::Parse(1)));
    }

    #[test]
    fn comparison_report() {
        let r = compare_report(&[
            ("rhombi".into(), build_rhombicuboctahedron().unwrap()),
            ("pseudo".into(), build_pseudorhombicuboctahedron().unwrap()),
        ])
        .unwrap();
        assert_eq!(r.multiset_classes, 1);
        assert_eq!(r.congruence_classes, 2);
        assert!(r.max_volume_spread < 1e-9);
        let r = compare_report(&[
            ("dipyramid".into(), build_icosagonal_dipyramid(S, L).unwrap()),
            ("antiprism".into(), build_decagonal_dipyramidal_antiprism(S, L).unwrap()),
            ("cube".into(), build_cube(1.0).unwrap()),
        ])
        .unwrap();
        assert_eq!(r.multiset_classes, 2);
        assert!(r.max_volume_spread > 0.01);
        assert!(matches!(
            compare_report(&[("cube".into(), build_cube(1.0).unwrap())]),
            Err(PolyError::TooFewMeshes(1))
        ));
    }
}
