use std::path::PathBuf;

use clap::Subcommand;
use geoquest::polyhedra::{compare_report, face_multiset, kind_counts, parse_obj, write_obj, Mesh};
use serde_json::json;

use crate::report::{Output, Status};
use crate::inputs::parse_solid;
use crate::{read_input, CliError, RunConfig};

#[derive(Debug, Clone, Subcommand)]
pub enum PolyCmd {
    /// Build one named solid.
    Build {
        #[arg(long)]
        solid: String,
    },
    /// Compare face multisets and congruence of several solids.
    Compare {
        #[arg(long)]
        solid: Vec<String>,
        /// OBJ files to include alongside the named solids.
        #[arg(long)]
        mesh: Vec<PathBuf>,
    },
}

fn obj_name(name: &str) -> String {
    let stem: String = name
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '.' { c } else { '_' })
        .collect();
    format!("{stem}.obj")
}

fn describe(name: &str, m: &Mesh) -> serde_json::Value {
    json!({
        "name": name,
        "vertices": m.vertices().len(),
        "edges": m.edge_count(),
        "faces": m.faces().len(),
        "convex": m.is_convex(),
        "volume": m.volume(),
        "surface_area": m.surface_area(),
        "face_kinds": kind_counts(&face_multiset(m)),
    })
}

pub fn run(cmd: &PolyCmd, cfg: &RunConfig) -> Result<Output, CliError> {
    match cmd {
        PolyCmd::Build { solid } => {
            let (name, mesh) = parse_solid(solid)?;
            let summary = format!(
                "{name}: V={} E={} F={} volume={:.12} convex={}\n",
                mesh.vertices().len(),
                mesh.edge_count(),
                mesh.faces().len(),
                mesh.volume(),
                mesh.is_convex()
            );
            let mut out = Output::new("poly build", Status::Ok, describe(&name, &mesh), summary);
            if cfg.obj {
                out = out.with_file(obj_name(&name), write_obj(&mesh));
            }
            Ok(out)
        }
        PolyCmd::Compare { solid, mesh } => {
            let mut meshes = Vec::new();
            for s in solid {
                meshes.push(parse_solid(s)?);
            }
            for p in mesh {
                let m = parse_obj(&read_input(p)?).map_err(|e| CliError::Input {
                    path: p.display().to_string(),
                    msg: e.to_string(),
                })?;
                meshes.push((p.display().to_string(), m));
            }
            if meshes.len() < 2 {
                return Err(CliError::Usage("compare needs at least two solids".into()));
            }
            let report = compare_report(&meshes).map_err(CliError::usage)?;
            let mut summary = String::new();
            for m in &report.meshes {
                summary.push_str(&format!(
                    "{}: F={} volume={:.12} multiset class {} congruence class {}\n",
                    m.name, m.faces, m.volume, m.multiset_class, m.congruence_class
                ));
            }
            summary.push_str(&format!(
                "{} multiset classes, {} congruence classes, volume spread {:.6}\n",
                report.multiset_classes, report.congruence_classes, report.max_volume_spread
            ));
            let mut out = Output::new("poly compare", Status::Ok, &report, summary);
            if cfg.obj {
                for (name, m) in &meshes {
                    out = out.with_file(obj_name(name), write_obj(m));
                }
            }
            Ok(out)
        }
    }
}
