//! Small textual descriptors accepted on the command line.
//!
//! * shapes: `rect:WxH`, `square`, `disc`, `disc:N`, `regular:N`,
//!   `poly:x,y;x,y;...`
//! * ratios: `a:b`
//! * solids: `cube[:a]`, `box:a,b,c`, `pyramids:MODE[:a,h]`, `rhombi`,
//!   `pseudo-rhombi`, `dipyramid[:s,l]`, `antiprism[:s,l]`

use geoquest::fair::{RatioTarget, DISC_VERTICES};
use geoquest::polyhedra::{
    build_box, build_cube, build_cube_with_pyramids, build_decagonal_dipyramidal_antiprism,
    build_icosagonal_dipyramid, build_pseudorhombicuboctahedron, build_rhombicuboctahedron, Mesh,
    PyramidMode,
};
use geoquest::{ConvexPolygon, Vec2};

use crate::CliError;

pub const DEFAULT_PYRAMID: (f64, f64) = (1.0, 0.3);
pub const DEFAULT_FORTY: (f64, f64) = (1.0, 5.0);

fn num(s: &str, what: &str) -> Result<f64, CliError> {
    s.trim()
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| CliError::Usage(format!("bad number `{s}` in {what}")))
}

fn nums(s: &str, n: usize, what: &str) -> Result<Vec<f64>, CliError> {
    let v: Vec<f64> = s.split(',').map(|p| num(p, what)).collect::<Result<_, _>>()?;
    if v.len() != n {
        return Err(CliError::Usage(format!("{what} needs {n} comma-separated numbers")));
    }
    Ok(v)
}

/// `WxH` as two positive numbers.
pub fn parse_rect(s: &str) -> Result<(f64, f64), CliError> {
    let (w, h) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| CliError::Usage(format!("rectangle `{s}` must look like WxH")))?;
    Ok((num(w, "rectangle")?, num(h, "rectangle")?))
}

pub fn parse_shape(s: &str) -> Result<ConvexPolygon, CliError> {
    let (kind, arg) = s.split_once(':').unwrap_or((s, ""));
    let poly = match kind {
        "rect" => {
            let (w, h) = parse_rect(arg)?;
            ConvexPolygon::rectangle(w, h)
        }
        "square" => ConvexPolygon::rectangle(1.0, 1.0),
        "disc" => {
            let n = if arg.is_empty() {
                DISC_VERTICES
            } else {
                arg.parse().map_err(|_| CliError::Usage(format!("bad vertex count `{arg}`")))?
            };
            ConvexPolygon::regular(n, 1.0)
        }
        "regular" => {
            let n: usize = arg
                .parse()
                .map_err(|_| CliError::Usage(format!("bad vertex count `{arg}`")))?;
            ConvexPolygon::regular(n, 1.0)
        }
        "poly" => {
            let pts = arg
                .split(';')
                .map(|p| nums(p, 2, "polygon vertex").map(|v| Vec2::new(v[0], v[1])))
                .collect::<Result<Vec<_>, _>>()?;
            ConvexPolygon::new(pts)
        }
        _ => return Err(CliError::Usage(format!("unknown shape `{s}`"))),
    };
    poly.map_err(CliError::usage)
}

pub fn parse_ratio(s: &str) -> Result<RatioTarget, CliError> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| CliError::Usage(format!("ratio `{s}` must look like a:b")))?;
    RatioTarget::new(num(a, "ratio")?, num(b, "ratio")?).map_err(CliError::usage)
}

/// Builds a named solid; the returned name is the normalised descriptor.
pub fn parse_solid(s: &str) -> Result<(String, Mesh), CliError> {
    let mut parts = s.splitn(3, ':');
    let kind = parts.next().unwrap_or("");
    let a1 = parts.next();
    let a2 = parts.next();
    let pair = |arg: Option<&str>, default: (f64, f64), what: &str| -> Result<(f64, f64), CliError> {
        match arg {
            None | Some("") => Ok(default),
            Some(a) => nums(a, 2, what).map(|v| (v[0], v[1])),
        }
    };
    let built = match kind {
        "cube" => {
            let a = a1.map_or(Ok(1.0), |a| num(a, "cube"))?;
            (format!("cube:{a}"), build_cube(a))
        }
        "box" => {
            let v = nums(a1.unwrap_or(""), 3, "box")?;
            (format!("box:{},{},{}", v[0], v[1], v[2]), build_box(v[0], v[1], v[2]))
        }
        "pyramids" => {
            let mode = match a1 {
                Some("opposite") => PyramidMode::Opposite,
                Some("adjacent") => PyramidMode::Adjacent,
                _ => return Err(CliError::Usage("pyramids needs mode opposite|adjacent".into())),
            };
            let (a, h) = pair(a2, DEFAULT_PYRAMID, "pyramids")?;
            (
                format!("pyramids:{}:{a},{h}", a1.unwrap_or_default()),
                build_cube_with_pyramids(a, h, mode),
            )
        }
        "rhombi" => ("rhombi".to_string(), build_rhombicuboctahedron()),
        "pseudo-rhombi" => ("pseudo-rhombi".to_string(), build_pseudorhombicuboctahedron()),
        "dipyramid" => {
            let (sd, l) = pair(a1, DEFAULT_FORTY, "dipyramid")?;
            (format!("dipyramid:{sd},{l}"), build_icosagonal_dipyramid(sd, l))
        }
        "antiprism" => {
            let (sd, l) = pair(a1, DEFAULT_FORTY, "antiprism")?;
            (format!("antiprism:{sd},{l}"), build_decagonal_dipyramidal_antiprism(sd, l))
        }
        _ => return Err(CliError::Usage(format!("unknown solid `{s}`"))),
    };
    let (name, mesh) = built;
    Ok((name, mesh.map_err(CliError::usage)?))
}
