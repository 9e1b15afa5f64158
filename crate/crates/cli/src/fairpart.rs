use clap::Subcommand;
use geoquest::fair::{
    disc_chord_analysis, equal_fair_cut, find_scaled_fair_cut, nonconvex_band_partition,
    perimeter_ratio_profile, solve_band, FairCutOutcome, SplitResult, DEFAULT_SCAN_SAMPLES,
    DISC_VERTICES,
};
use geoquest::{ConvexPolygon, Vec2};
use serde_json::json;

use crate::report::{Output, Status};
use crate::inputs::{parse_ratio, parse_rect, parse_shape};
use crate::svg::rings_svg;
use crate::{CliError, RunConfig};

#[derive(Debug, Clone, Subcommand)]
pub enum FairCmd {
    /// Perimeter ratio of the area-splitting cut at every orientation.
    Profile {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        ratio: String,
    },
    /// A straight cut with area ratio a:b and perimeter ratio sqrt(a/b);
    /// ratio 1:1 asks for equal area and equal perimeter.
    Solve {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        ratio: String,
    },
    /// Chord cuts of the disc.
    Disc {
        #[arg(long)]
        ratio: String,
    },
    /// Band along the boundary of a rectangle.
    Band {
        #[arg(long)]
        rect: String,
        #[arg(long)]
        ratio: String,
        /// Evaluate one arc share instead of solving for it.
        #[arg(long)]
        s: Option<f64>,
    },
}

fn samples(cfg: &RunConfig) -> usize {
    cfg.samples.unwrap_or(DEFAULT_SCAN_SAMPLES)
}

fn split_svg(c: &ConvexPolygon, s: &SplitResult) -> String {
    rings_svg(&[
        ("shape", c.vertices()),
        ("piece-a", s.piece_a.vertices()),
        ("piece-b", s.piece_b.vertices()),
    ])
}

fn split_json(s: &SplitResult) -> serde_json::Value {
    json!({
        "theta": s.cut.theta,
        "offset": s.cut.offset,
        "cut_length": s.cut_length,
        "areas": [s.area_a, s.area_b],
        "perimeters": [s.perim_a, s.perim_b],
    })
}

pub fn run(cmd: &FairCmd, cfg: &RunConfig) -> Result<Output, CliError> {
    match cmd {
        FairCmd::Profile { shape, ratio } => {
            let c = parse_shape(shape)?;
            let target = parse_ratio(ratio)?;
            let prof = perimeter_ratio_profile(&c, &target, samples(cfg)).map_err(CliError::usage)?;
            let rho: Vec<f64> = prof.iter().map(|p| p.rho).collect();
            let (lo, hi) = rho
                .iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| (a.min(v), b.max(v)));
            let summary = format!(
                "{} orientations, rho in [{lo:.6}, {hi:.6}], target {:.6}\n",
                prof.len(),
                target.rho_target()
            );
            Ok(Output::new(
                "fairpart profile",
                Status::Ok,
                json!({
                    "ratio": target,
                    "rho_target": target.rho_target(),
                    "phi": prof.iter().map(|p| p.phi).collect::<Vec<_>>(),
                    "theta": prof.iter().map(|p| p.cut.theta).collect::<Vec<_>>(),
                    "offset": prof.iter().map(|p| p.cut.offset).collect::<Vec<_>>(),
                    "areas": prof.iter().map(|p| [p.area_small, p.area_large]).collect::<Vec<_>>(),
                    "perimeters": prof.iter().map(|p| [p.perim_small, p.perim_large]).collect::<Vec<_>>(),
                    "rho": rho,
                    "rho_min": lo,
                    "rho_max": hi,
                }),
                summary,
            ))
        }
        FairCmd::Solve { shape, ratio } => {
            let c = parse_shape(shape)?;
            let target = parse_ratio(ratio)?;
            let found = if target.a == target.b {
                let (p, s) = equal_fair_cut(&c).map_err(CliError::usage)?;
                Some((p.rho, s))
            } else {
                match find_scaled_fair_cut(&c, &target, samples(cfg), cfg.tol)
                    .map_err(CliError::usage)?
                {
                    FairCutOutcome::Found { point, split } => Some((point.rho, *split)),
                    FairCutOutcome::NotFound { rho_min, rho_max } => {
                        let summary = format!(
                            "no straight cut: rho spans [{rho_min:.6}, {rho_max:.6}], target {:.6}\n",
                            target.rho_target()
                        );
                        return Ok(Output::new(
                            "fairpart solve",
                            Status::Infeasible,
                            json!({
                                "ratio": target,
                                "rho_target": target.rho_target(),
                                "found": false,
                                "rho_min": rho_min,
                                "rho_max": rho_max,
                            }),
                            summary,
                        ));
                    }
                }
            };
            let (rho, s) = found.expect("handled above");
            let mut doc = split_json(&s);
            doc["ratio"] = json!(target);
            doc["rho_target"] = json!(target.rho_target());
            doc["rho"] = json!(rho);
            doc["found"] = json!(true);
            let summary = format!(
                "cut theta={:.9} offset={:.9} rho={rho:.9} (target {:.9})\n",
                s.cut.theta,
                s.cut.offset,
                target.rho_target()
            );
            let mut out = Output::new("fairpart solve", Status::Ok, doc, summary);
            if cfg.svg {
                out = out.with_file("partition.svg", split_svg(&c, &s));
            }
            Ok(out)
        }
        FairCmd::Disc { ratio } => {
            let target = parse_ratio(ratio)?;
            let chord = disc_chord_analysis(&target);
            let n = cfg.samples.unwrap_or(DEFAULT_SCAN_SAMPLES);
            let disc = ConvexPolygon::regular(DISC_VERTICES, 1.0).map_err(CliError::usage)?;
            let scan = perimeter_ratio_profile(&disc, &target, n).map_err(CliError::usage)?;
            let (lo, hi) = scan
                .iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), p| (a.min(p.rho), b.max(p.rho)));
            let status = if chord.achievable { Status::Ok } else { Status::Infeasible };
            let summary = format!(
                "chord rho={:.9}, target {:.9}: {}\n",
                chord.rho,
                chord.rho_target,
                if chord.achievable { "achievable" } else { "not achievable" }
            );
            let mut out = Output::new(
                "fairpart disc",
                status,
                json!({
                    "ratio": target,
                    "chord": chord,
                    "polygon_vertices": DISC_VERTICES,
                    "polygon_rho_min": lo,
                    "polygon_rho_max": hi,
                }),
                summary,
            );
            if cfg.svg {
                let (_, s) = geoquest::fair::cut_at(&disc, 0.0, target.fraction())
                    .map_err(CliError::usage)?;
                out = out.with_file("partition.svg", split_svg(&disc, &s));
            }
            Ok(out)
        }
        FairCmd::Band { rect, ratio, s } => {
            let (w, h) = parse_rect(rect)?;
            let target = parse_ratio(ratio)?;
            let (doc, sample, status) = match s {
                Some(s) => {
                    let b = nonconvex_band_partition(w, h, &target, *s).map_err(CliError::usage)?;
                    (json!({ "sample": &b }), b, Status::Ok)
                }
                None => match solve_band(w, h, &target, cfg.tol) {
                    Ok(sol) => (json!(&sol), sol.sample.clone(), Status::Ok),
                    Err(e @ geoquest::fair::FairError::NoBracket { .. }) => {
                        return Ok(Output::new(
                            "fairpart band",
                            Status::Infeasible,
                            json!({ "rect": [w, h], "ratio": target, "error": e.to_string() }),
                            format!("{e}\n"),
                        ));
                    }
                    Err(e) => return Err(CliError::usage(e)),
                },
            };
            let summary = format!(
                "band s={:.9} t={:.9} rho={:.9} (target {:.9}), {} reflex vertices\n",
                sample.s,
                sample.t,
                sample.rho,
                target.rho_target(),
                sample.reflex_vertices
            );
            let mut doc = doc;
            doc["rect"] = json!([w, h]);
            doc["ratio"] = json!(target);
            doc["rho_target"] = json!(target.rho_target());
            let mut out = Output::new("fairpart band", status, doc, summary);
            if cfg.svg {
                let frame = [
                    Vec2::new(0.0, 0.0),
                    Vec2::new(w, 0.0),
                    Vec2::new(w, h),
                    Vec2::new(0.0, h),
                ];
                out = out.with_file(
                    "partition.svg",
                    rings_svg(&[("shape", &frame), ("band", &sample.polygon)]),
                );
            }
            Ok(out)
        }
    }
}
