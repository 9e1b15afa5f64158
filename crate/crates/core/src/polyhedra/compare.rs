use std::collections::BTreeMap;

use serde::Serialize;

use super::faces::{face_multiset_with, kind_counts, mean_edge_length, FaceMultiset, LENGTH_QUANTUM};
use super::mesh::Mesh;
use super::PolyError;

/// Sorted multiset of all pairwise vertex distances. Different multisets
/// prove two meshes non-congruent; equal ones prove nothing.
pub fn distance_profile(m: &Mesh) -> Vec<f64> {
    let v = m.vertices();
    let mut d: Vec<f64> = (0..v.len())
        .flat_map(|i| (i + 1..v.len()).map(move |j| v[i].dist(v[j])))
        .collect();
    d.sort_by(f64::total_cmp);
    d
}

pub fn possibly_congruent(a: &Mesh, b: &Mesh) -> bool {
    let (da, db) = (distance_profile(a), distance_profile(b));
    let tol = 1e-9 * a.scale().max(b.scale());
    da.len() == db.len() && da.iter().zip(&db).all(|(x, y)| (x - y).abs() <= tol)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeshSummary {
    pub name: String,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub convex: bool,
    pub volume: f64,
    pub surface_area: f64,
    pub face_kinds: BTreeMap<String, usize>,
    /// Meshes share a class iff their face multisets are equal.
    pub multiset_class: usize,
    /// Meshes share a class iff their distance profiles agree.
    pub congruence_class: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompareReport {
    pub meshes: Vec<MeshSummary>,
    pub multiset_classes: usize,
    pub congruence_classes: usize,
    /// Largest relative volume spread within one multiset class.
    pub max_volume_spread: f64,
}

/// Groups `items` into classes under `same`, numbering classes by first
/// appearance.
fn classes<T>(items: &[T], same: impl Fn(&T, &T) -> bool) -> Vec<usize> {
    let mut reps: Vec<usize> = Vec::new();
    (0..items.len())
        .map(|i| match reps.iter().position(|&r| same(&items[r], &items[i])) {
            Some(c) => c,
            None => {
                reps.push(i);
                reps.len() - 1
            }
        })
        .collect()
}

pub fn compare_report(meshes: &[(String, Mesh)]) -> Result<CompareReport, PolyError> {
    if meshes.len() < 2 {
        return Err(PolyError::TooFewMeshes(meshes.len()));
    }
    let quantum = LENGTH_QUANTUM
        * meshes.iter().map(|(_, m)| mean_edge_length(m)).sum::<f64>()
        / meshes.len() as f64;
    let multisets: Vec<FaceMultiset> =
        meshes.iter().map(|(_, m)| face_multiset_with(m, quantum)).collect();
    let ms_class = classes(&multisets, |a, b| a == b);
    let mesh_refs: Vec<&Mesh> = meshes.iter().map(|(_, m)| m).collect();
    let cg_class = classes(&mesh_refs, |a, b| possibly_congruent(a, b));
    let summaries: Vec<MeshSummary> = meshes
        .iter()
        .zip(&multisets)
        .enumerate()
        .map(|(i, ((name, m), ms))| MeshSummary {
            name: name.clone(),
            vertices: m.vertices().len(),
            edges: m.edge_count(),
            faces: m.faces().len(),
            convex: m.is_convex(),
            volume: m.volume(),
            surface_area: m.surface_area(),
            face_kinds: kind_counts(ms),
            multiset_class: ms_class[i],
            congruence_class: cg_class[i],
        })
        .collect();
    let mut spread: f64 = 0.0;
    for c in 0..=ms_class.iter().copied().max().unwrap_or(0) {
        let vols: Vec<f64> = summaries
            .iter()
            .filter(|s| s.multiset_class == c)
            .map(|s| s.volume)
            .collect();
        let hi = vols.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let lo = vols.iter().copied().fold(f64::INFINITY, f64::min);
        if vols.len() > 1 {
            spread = spread.max((hi - lo) / hi);
        }
    }
    Ok(CompareReport {
        multiset_classes: ms_class.iter().copied().max().map_or(0, |m| m + 1),
        congruence_classes: cg_class.iter().copied().max().map_or(0, |m| m + 1),
        meshes: summaries,
        max_volume_spread: spread,
    })
}
