use std::fmt::Write;
use std::path::PathBuf;

use clap::{Subcommand, ValueEnum};
use geoquest::tiling::{
    divisor_count, enumerate_layouts, hcn_layout_census, hcn_up_to, search_isoperimetric,
    split_extension, tile_rectangle, verify_layout, EnumerateOptions, FloorplanVerdict,
    HcnContext, IsoOptions, IsoOutcome, Layout, SplitAxis, TileSet, Verdict,
};
use geoquest::Rational;
use serde_json::json;

use crate::report::{Output, Status};
use crate::svg::layout_svg;
use crate::{read_input, CliError, RunConfig};

#[derive(Debug, Clone, Subcommand)]
pub enum TilingCmd {
    /// Check a layout against a tile file.
    Verify {
        #[arg(long)]
        tiles: PathBuf,
        #[arg(long)]
        layout: PathBuf,
    },
    /// List every rectangle the tiles form, or tile one given rectangle.
    Enumerate {
        #[arg(long)]
        tiles: PathBuf,
        #[arg(long, requires = "height")]
        width: Option<String>,
        #[arg(long, requires = "width")]
        height: Option<String>,
        #[arg(long)]
        no_rotation: bool,
    },
    /// Search the mosaic floorplans with `rooms` rooms for tiles of one
    /// perimeter and distinct areas.
    SearchIso {
        #[arg(long)]
        rooms: usize,
    },
    /// Strip constructions on a highly composite number, or the series of
    /// such numbers up to a limit.
    Hcn {
        #[arg(long, conflicts_with = "series", requires = "i")]
        h: Option<u64>,
        #[arg(long, requires = "h")]
        i: Option<u64>,
        #[arg(long, default_value = "100")]
        length: String,
        #[arg(long)]
        series: Option<u64>,
    },
    /// Cut one tile in two and enumerate the layouts of the result.
    Split {
        #[arg(long, conflicts_with = "hcn", required_unless_present = "hcn")]
        tiles: Option<PathBuf>,
        /// Strip set `h:i` instead of a tile file.
        #[arg(long)]
        hcn: Option<String>,
        #[arg(long, default_value = "100")]
        length: String,
        #[arg(long)]
        id: usize,
        #[arg(long, value_enum)]
        axis: Axis,
        #[arg(long)]
        at: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Axis {
    Width,
    Height,
}

fn load_tiles(path: &PathBuf) -> Result<TileSet, CliError> {
    TileSet::parse(&read_input(path)?).map_err(|e| CliError::Input {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

fn rational(s: &str) -> Result<Rational, CliError> {
    s.parse().map_err(|e| CliError::Usage(format!("bad rational `{s}`: {e}")))
}

fn options(cfg: &RunConfig, rotation: bool) -> EnumerateOptions {
    let mut o = EnumerateOptions {
        allow_rotation: rotation,
        ..Default::default()
    };
    if let Some(c) = cfg.cap {
        o.cap = c;
    }
    o
}

fn layouts_output(
    command: &'static str,
    ts: &TileSet,
    cfg: &RunConfig,
    extra: serde_json::Value,
) -> Result<Output, CliError> {
    let classes = enumerate_layouts(ts, &options(cfg, true)).map_err(CliError::usage)?;
    let mut summary = format!("{} layouts\n", classes.len());
    for c in &classes {
        let _ = writeln!(summary, "  {} x {}", c.width, c.height);
    }
    let mut out = Output::new(
        command,
        if classes.is_empty() { Status::Infeasible } else { Status::Ok },
        json!({ "tiles": ts, "count": classes.len(), "layouts": classes, "input": extra }),
        summary,
    );
    if cfg.svg {
        for (k, c) in classes.iter().enumerate() {
            out = out.with_file(format!("layout_{k}.svg"), layout_svg(ts, &c.witness));
        }
    }
    Ok(out)
}

pub fn run(cmd: &TilingCmd, cfg: &RunConfig) -> Result<Output, CliError> {
    match cmd {
        TilingCmd::Verify { tiles, layout } => {
            let ts = load_tiles(tiles)?;
            let text = read_input(layout)?;
            let layout: Layout = serde_json::from_str(&text).map_err(|e| CliError::Input {
                path: layout.display().to_string(),
                msg: format!("line {}: {e}", e.line()),
            })?;
            let verdict = verify_layout(&ts, &layout);
            let status = if verdict.is_valid() { Status::Ok } else { Status::Infeasible };
            let summary = match &verdict {
                Verdict::Valid => "valid\n".to_string(),
                Verdict::Defect(d) => format!("invalid: {d:?}\n"),
            };
            let mut out = Output::new("tiling verify", status, json!({ "verdict": verdict }), summary);
            if cfg.svg {
                out = out.with_file("layout.svg", layout_svg(&ts, &layout));
            }
            Ok(out)
        }
        TilingCmd::Enumerate { tiles, width, height, no_rotation } => {
            let ts = load_tiles(tiles)?;
            match (width, height) {
                (Some(w), Some(h)) => {
                    let (w, h) = (rational(w)?, rational(h)?);
                    let found = tile_rectangle(&ts, &w, &h, &options(cfg, !no_rotation))
                        .map_err(CliError::usage)?;
                    let summary = match &found {
                        Some(_) => format!("tiles {w} x {h}\n"),
                        None => format!("no layout of {w} x {h}\n"),
                    };
                    let status = if found.is_some() { Status::Ok } else { Status::Infeasible };
                    let mut out = Output::new(
                        "tiling enumerate",
                        status,
                        json!({ "target": [w, h], "layout": found }),
                        summary,
                    );
                    if let (true, Some(l)) = (cfg.svg, &found) {
                        out = out.with_file("layout.svg", layout_svg(&ts, l));
                    }
                    Ok(out)
                }
                _ if *no_rotation => {
                    let classes = enumerate_layouts(&ts, &options(cfg, false)).map_err(CliError::usage)?;
                    let summary = format!("{} layouts without rotation\n", classes.len());
                    Ok(Output::new(
                        "tiling enumerate",
                        if classes.is_empty() { Status::Infeasible } else { Status::Ok },
                        json!({ "count": classes.len(), "layouts": classes }),
                        summary,
                    ))
                }
                _ => layouts_output("tiling enumerate", &ts, cfg, json!(null)),
            }
        }
        TilingCmd::SearchIso { rooms } => {
            let mut opts = IsoOptions { seed: cfg.seed, ..Default::default() };
            if let Some(s) = cfg.samples {
                opts.samples = s;
            }
            let report = search_isoperimetric(*rooms, &opts).map_err(CliError::usage)?;
            let mut tally = std::collections::BTreeMap::<&str, usize>::new();
            for v in &report.verdicts {
                let key = match v {
                    FloorplanVerdict::Witness(_) => "witness",
                    FloorplanVerdict::TooFewRooms => "too_few_rooms",
                    FloorplanVerdict::ForcedEqual { .. } => "forced_equal",
                    FloorplanVerdict::Empty { .. } => "empty",
                    FloorplanVerdict::NoDistinctSample => "no_distinct_sample",
                };
                *tally.entry(key).or_insert(0) += 1;
            }
            let (status, headline) = match &report.outcome {
                IsoOutcome::Witnesses { witnesses } => {
                    (Status::Ok, format!("{} witnesses", witnesses.len()))
                }
                IsoOutcome::ExhaustedNoSolution => (Status::Infeasible, "exhausted, no solution".into()),
                IsoOutcome::Inconclusive { residual } => {
                    (Status::Infeasible, format!("inconclusive on {} floorplans", residual.len()))
                }
            };
            let summary = format!("{} rooms, {} floorplans: {headline}\n", rooms, report.floorplans);
            let mut out = Output::new(
                "tiling search-iso",
                status,
                json!({
                    "rooms": report.rooms,
                    "floorplans": report.floorplans,
                    "verdict_counts": tally,
                    "outcome": report.outcome,
                }),
                summary,
            );
            if let (true, IsoOutcome::Witnesses { witnesses }) = (cfg.svg, &report.outcome) {
                for (k, w) in witnesses.iter().enumerate() {
                    out = out.with_file(format!("witness_{k}.svg"), layout_svg(&w.tiles, &w.layout));
                }
            }
            Ok(out)
        }
        TilingCmd::Hcn { h, i, length, series } => {
            if let Some(limit) = series {
                let list = hcn_up_to(*limit).map_err(CliError::usage)?;
                let counts: Vec<u64> = list.iter().map(|&v| divisor_count(v)).collect();
                let summary = format!("{} highly composite numbers up to {limit}\n", list.len());
                return Ok(Output::new(
                    "tiling hcn",
                    Status::Ok,
                    json!({ "limit": limit, "hcn": list, "divisor_counts": counts }),
                    summary,
                ));
            }
            let (Some(h), Some(i)) = (h, i) else {
                return Err(CliError::Usage("give --h and --i, or --series".into()));
            };
            let ctx = HcnContext::new(*h, *i, rational(length)?).map_err(CliError::usage)?;
            let census = hcn_layout_census(&ctx);
            let widths: Vec<u64> = census.iter().filter(|e| *e.1).map(|e| *e.0).collect();
            let summary = format!(
                "{} strips, {} layout widths: {:?}\n",
                ctx.tileset().len(),
                widths.len(),
                widths
            );
            let census: Vec<_> = census
                .into_iter()
                .map(|(f, ok)| json!({ "width": f, "feasible": ok }))
                .collect();
            Ok(Output::new(
                "tiling hcn",
                Status::Ok,
                json!({ "context": ctx, "census": census, "layout_count": widths.len(), "widths": widths }),
                summary,
            ))
        }
        TilingCmd::Split { tiles, hcn, length, id, axis, at } => {
            let ts = match (tiles, hcn) {
                (Some(p), _) => load_tiles(p)?,
                (None, Some(pair)) => {
                    let (h, i) = pair
                        .split_once(':')
                        .and_then(|(h, i)| Some((h.parse().ok()?, i.parse().ok()?)))
                        .ok_or_else(|| CliError::Usage(format!("--hcn `{pair}` must look like h:i")))?;
                    HcnContext::new(h, i, rational(length)?)
                        .map_err(CliError::usage)?
                        .tileset()
                }
                (None, None) => return Err(CliError::Usage("give --tiles or --hcn".into())),
            };
            let axis = match axis {
                Axis::Width => SplitAxis::Width,
                Axis::Height => SplitAxis::Height,
            };
            let split = split_extension(&ts, *id, axis, &rational(at)?).map_err(CliError::usage)?;
            layouts_output(
                "tiling split",
                &split,
                cfg,
                json!({ "id": id, "axis": axis, "at": rational(at)? }),
            )
        }
    }
}
