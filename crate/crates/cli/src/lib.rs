//! Command-line front end: argument parsing, input files, and deterministic
//! JSON / SVG / OBJ output.

mod fairpart;
mod poly;
mod report;
mod shapes;
pub mod inputs;
pub mod svg;
mod tiling;

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use thiserror::Error;

pub use report::{render_json, Output, Status};

#[derive(Debug, Clone, Parser)]
#[command(name = "geoquest", version, about = "Geometry exploration toolkit")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Numerical tolerance for root finding.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    /// Sample count (meaning depends on the command).
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    /// Largest tile set the enumerator accepts.
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Directory for report.json and any artifacts.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Also write an SVG drawing.
    #[arg(long, global = true)]
    pub svg: bool,
    /// Also write OBJ meshes.
    #[arg(long, global = true)]
    pub obj: bool,
    /// Print the JSON report on stdout instead of the summary.
    #[arg(long, global = true)]
    pub json: bool,
    /// Exit 0 when the answer is "infeasible".
    #[arg(long, global = true)]
    pub expect_infeasible: bool,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Rectangle dissections.
    Tiling {
        #[command(subcommand)]
        cmd: tiling::TilingCmd,
    },
    /// Two-piece partitions with prescribed area and perimeter ratios.
    Fairpart {
        #[command(subcommand)]
        cmd: fairpart::FairCmd,
    },
    /// Extremal shapes at fixed area and perimeter.
    Shapes {
        #[command(subcommand)]
        cmd: shapes::ShapesCmd,
    },
    /// Polyhedra sharing a face multiset.
    Poly {
        #[command(subcommand)]
        cmd: poly::PolyCmd,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {msg}")]
    Input { path: String, msg: String },
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub(crate) fn usage(e: impl std::fmt::Display) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub(crate) fn read_input(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

/// Result of one invocation, with everything that would be printed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (program name first), runs the command and writes any
/// requested files.
pub fn invoke<I, T>(argv: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Invocation { code, stdout: text, stderr: String::new() }
            } else {
                Invocation { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cfg) {
        Ok(inv) => inv,
        Err(e) => Invocation {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

pub fn execute(cfg: &RunConfig) -> Result<Invocation, CliError> {
    if !(cfg.tol > 0.0 && cfg.tol.is_finite()) {
        return Err(CliError::Usage(format!("--tol must be positive (got {})", cfg.tol)));
    }
    let out = match &cfg.command {
        Command::Tiling { cmd } => tiling::run(cmd, cfg)?,
        Command::Fairpart { cmd } => fairpart::run(cmd, cfg)?,
        Command::Shapes { cmd } => shapes::run(cmd, cfg)?,
        Command::Poly { cmd } => poly::run(cmd, cfg)?,
    };
    let json = render_json(&out, cfg);
    let dir = cfg
        .out
        .clone()
        .or_else(|| (!out.files.is_empty()).then(|| PathBuf::from(".")));
    if let Some(dir) = &dir {
        fs::create_dir_all(dir).map_err(|source| CliError::Write {
            path: dir.display().to_string(),
            source,
        })?;
        let mut files = out.files.clone();
        if cfg.out.is_some() {
            files.insert(0, ("report.json".to_string(), json.clone()));
        }
        for (name, body) in files {
            let path = dir.join(&name);
            fs::write(&path, body).map_err(|source| CliError::Write {
                path: path.display().to_string(),
                source,
            })?;
        }
    }
    let code = match out.status {
        Status::Ok => 0,
        Status::Infeasible if cfg.expect_infeasible => 0,
        Status::Infeasible => 1,
    };
    let stdout = if cfg.json { json } else { out.summary.clone() };
    Ok(Invocation {
        code,
        stdout,
        stderr: String::new(),
    })
}
