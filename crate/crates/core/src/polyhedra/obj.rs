//! Wavefront OBJ subset: `v x y z` and polygonal `f i j k ...` lines with
//! 1-based indices. Other statements are ignored on input.

use std::fmt::Write;

use super::mesh::{Mesh, Vec3};
use super::PolyError;

pub fn write_obj(m: &Mesh) -> String {
    let mut out = String::new();
    for v in m.vertices() {
        let _ = writeln!(out, "v {:.12} {:.12} {:.12}", v.x, v.y, v.z);
    }
    for f in m.faces() {
        let idx: Vec<String> = f.iter().map(|i| (i + 1).to_string()).collect();
        let _ = writeln!(out, "f {}", idx.join(" "));
    }
    out
}

pub fn parse_obj(text: &str) -> Result<Mesh, PolyError> {
    let mut vertices = Vec::new();
    let mut faces = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line_no = n + 1;
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("v") => {
                let c: Vec<f64> = parts
                    .map(str::parse)
                    .collect::<Result<_, _>>()
                    .map_err(|_| PolyError::Parse(line_no))?;
                if c.len() < 3 {
                    return Err(PolyError::Parse(line_no));
                }
                vertices.push(Vec3::new(c[0], c[1], c[2]));
            }
            Some("f") => {
                let f: Vec<usize> = parts
                    .map(|p| {
                        p.split('/')
                            .next()
                            .and_then(|i| i.parse::<usize>().ok())
                            .filter(|&i| i >= 1)
                            .map(|i| i - 1)
                    })
                    .collect::<Option<_>>()
                    .ok_or(PolyError::Parse(line_no))?;
                faces.push(f);
            }
            _ => {}
        }
    }
    Mesh::new(vertices, faces)
}
