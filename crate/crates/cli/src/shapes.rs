use clap::Subcommand;
use geoquest::extremal::{
    crossover_scan, interpolant_area, interpolate_constant_width, lens_metrics, max_diameter_shape,
    min_diameter_explore, reuleaux_metrics, Candidate, Sector, ShapeError, DEFAULT_PERIMETER,
};
use geoquest::Vec2;
use serde_json::json;

use crate::report::{Output, Status};
use crate::svg::rings_svg;
use crate::{CliError, RunConfig};

const OUTLINE_POINTS: usize = 720;
const DEFAULT_CROSSOVER_ROWS: usize = 24;

#[derive(Debug, Clone, Subcommand)]
pub enum ShapesCmd {
    /// Largest diameter at the given area and perimeter.
    Maxdiam {
        #[arg(long)]
        area: f64,
        #[arg(long, default_value_t = DEFAULT_PERIMETER)]
        perimeter: f64,
    },
    /// Smallest diameter among the candidate families.
    Mindiam {
        #[arg(long)]
        area: f64,
        #[arg(long, default_value_t = DEFAULT_PERIMETER)]
        perimeter: f64,
    },
    /// Constant-width body between the Reuleaux triangle (t = 0) and the
    /// disc (t = 1), width 1.
    Interp {
        #[arg(long)]
        t: f64,
    },
    /// Sector family against the constant-width family across areas.
    Crossover {
        #[arg(long, default_value_t = DEFAULT_PERIMETER)]
        perimeter: f64,
    },
}

fn candidate_outline(c: &Candidate) -> Result<Option<Vec<Vec2>>, CliError> {
    Ok(match *c {
        Candidate::Disc { radius, .. } => Some(
            (0..OUTLINE_POINTS)
                .map(|k| Vec2::from_angle(std::f64::consts::TAU * k as f64 / OUTLINE_POINTS as f64) * radius)
                .collect(),
        ),
        Candidate::ConstantWidth { width, t, .. } => {
            let body = geoquest::extremal::interpolate_constant_width_with(t, width, OUTLINE_POINTS)
                .map_err(CliError::usage)?;
            Some(body.outline())
        }
        Candidate::Sector { r, phi, .. } => {
            Some(Sector::new(r, phi).map_err(CliError::usage)?.outline(OUTLINE_POINTS))
        }
        Candidate::Lens { .. } => None,
    })
}

pub fn run(cmd: &ShapesCmd, cfg: &RunConfig) -> Result<Output, CliError> {
    match cmd {
        ShapesCmd::Maxdiam { area, perimeter } => match max_diameter_shape(*area, *perimeter) {
            Ok(lens) => {
                let m = lens_metrics(&lens);
                let summary = format!(
                    "lens d={:.12} alpha={:.12} radius={:.12}\n",
                    lens.d,
                    lens.alpha,
                    lens.radius()
                );
                let mut out = Output::new(
                    "shapes maxdiam",
                    Status::Ok,
                    json!({ "lens": lens, "radius": lens.radius(), "metrics": m }),
                    summary,
                );
                if cfg.svg {
                    out = out.with_file("shape.svg", rings_svg(&[("lens", &lens.outline(OUTLINE_POINTS))]));
                }
                Ok(out)
            }
            Err(ShapeError::Infeasible { area, perimeter }) => Ok(Output::new(
                "shapes maxdiam",
                Status::Infeasible,
                json!({ "area": area, "perimeter": perimeter, "isoperimetric_ratio": perimeter * perimeter / area }),
                format!("no planar region has area {area} and perimeter {perimeter}\n"),
            )),
            Err(e) => Err(CliError::usage(e)),
        },
        ShapesCmd::Mindiam { area, perimeter } => {
            let report = min_diameter_explore(*perimeter, *area).map_err(CliError::usage)?;
            let (status, summary) = match &report.best {
                Some(b) => (
                    Status::Ok,
                    format!("best {:?} diameter={:.12} (bound {:.12})\n", b.family(), b.diameter(), report.lower_bound),
                ),
                None => (
                    Status::Infeasible,
                    format!("no candidate family reaches area {area} at perimeter {perimeter}\n"),
                ),
            };
            let mut out = Output::new("shapes mindiam", status, &report, summary);
            if cfg.svg {
                if let Some(ring) = report.best.as_ref().map(candidate_outline).transpose()?.flatten() {
                    out = out.with_file("shape.svg", rings_svg(&[("best", &ring)]));
                }
            }
            Ok(out)
        }
        ShapesCmd::Interp { t } => {
            let body = interpolate_constant_width(*t).map_err(CliError::usage)?;
            let m = body.metrics();
            let exact = interpolant_area(*t, 1.0);
            let summary = format!(
                "t={t}: area={:.12} (closed form {exact:.12}), perimeter={:.12}, width spread={:.3e}\n",
                m.area,
                m.perimeter,
                body.width_spread()
            );
            let mut out = Output::new(
                "shapes interp",
                Status::Ok,
                json!({
                    "t": t,
                    "width": 1,
                    "grid": body.grid_size(),
                    "metrics": m,
                    "area_closed_form": exact,
                    "width_spread": body.width_spread(),
                    "reuleaux": reuleaux_metrics(1.0),
                }),
                summary,
            );
            if cfg.svg {
                out = out.with_file("shape.svg", rings_svg(&[("interpolant", &body.outline())]));
            }
            Ok(out)
        }
        ShapesCmd::Crossover { perimeter } => {
            let rows = cfg.samples.unwrap_or(DEFAULT_CROSSOVER_ROWS);
            let report = crossover_scan(*perimeter, rows).map_err(CliError::usage)?;
            let summary = match report.c_hat {
                Some(c) => format!("crossover at area {c:.9}\n"),
                None => format!(
                    "no crossover: sector diameters stay above {:.9}; smallest {:.9} at area {:.9}\n",
                    report.lower_bound, report.best_sector_diameter, report.best_sector_area
                ),
            };
            let mut out = Output::new("shapes crossover", Status::Ok, &report, summary);
            if cfg.svg {
                let sector = report.best_sector.outline(OUTLINE_POINTS);
                let body = geoquest::extremal::interpolate_constant_width_with(0.0, perimeter / std::f64::consts::PI, OUTLINE_POINTS)
                    .map_err(CliError::usage)?
                    .outline();
                out = out.with_file("shape.svg", rings_svg(&[("reuleaux", &body), ("sector", &sector)]));
            }
            Ok(out)
        }
    }
}
