//! SVG drawings at 20 px per unit, y axis pointing up, elements in input
//! order.

use std::fmt::Write;

use geoquest::tiling::{Layout, TileSet};
use geoquest::Vec2;

pub const PX_PER_UNIT: f64 = 20.0;

const PALETTE: [&str; 8] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5",
];

fn px(v: f64) -> String {
    let s = format!("{:.3}", v * PX_PER_UNIT);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".to_string() } else { s.to_string() }
}

fn header(out: &mut String, w: f64, h: f64) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{1}" viewBox="0 0 {0} {1}">"#,
        px(w),
        px(h)
    );
}

/// One `rect` per placement inside a `W·20 × H·20` canvas.
pub fn layout_svg(ts: &TileSet, layout: &Layout) -> String {
    let (w, h) = (layout.target_width.to_f64(), layout.target_height.to_f64());
    let mut out = String::new();
    header(&mut out, w, h);
    for (k, p) in layout.placements.iter().enumerate() {
        let Some(t) = ts.get(p.tile_id) else { continue };
        let (tw, th) = t.extent(p.rotated);
        let (tw, th) = (tw.to_f64(), th.to_f64());
        let (x, y) = (p.x.to_f64(), p.y.to_f64());
        let _ = writeln!(
            out,
            r##"  <rect x="{}" y="{}" width="{}" height="{}" fill="{}" stroke="#000" stroke-width="1"><title>tile {} {}x{}</title></rect>"##,
            px(x),
            px(h - y - th),
            px(tw),
            px(th),
            PALETTE[k % PALETTE.len()],
            p.tile_id,
            t.width,
            t.height
        );
    }
    out.push_str("</svg>\n");
    out
}

/// One closed `path` per ring, framed by the common bounding box plus a
/// half-unit margin.
pub fn rings_svg(rings: &[(&str, &[Vec2])]) -> String {
    let inf = f64::INFINITY;
    let (mut x0, mut y0, mut x1, mut y1) = (inf, inf, -inf, -inf);
    for p in rings.iter().flat_map(|r| r.1.iter()) {
        x0 = x0.min(p.x);
        y0 = y0.min(p.y);
        x1 = x1.max(p.x);
        y1 = y1.max(p.y);
    }
    if !x0.is_finite() {
        (x0, y0, x1, y1) = (0.0, 0.0, 1.0, 1.0);
    }
    let m = 0.5;
    let (w, h) = (x1 - x0 + 2.0 * m, y1 - y0 + 2.0 * m);
    let mut out = String::new();
    header(&mut out, w, h);
    for (k, (class, ring)) in rings.iter().enumerate() {
        let mut d = String::new();
        for (i, p) in ring.iter().enumerate() {
            let _ = write!(
                d,
                "{}{} {} ",
                if i == 0 { "M" } else { "L" },
                px(p.x - x0 + m),
                px(y1 + m - p.y)
            );
        }
        d.push('Z');
        let _ = writeln!(
            out,
            r##"  <path class="{}" d="{}" fill="{}" fill-opacity="0.6" stroke="#000" stroke-width="1"/>"##,
            class,
            d,
            PALETTE[k % PALETTE.len()]
        );
    }
    out.push_str("</svg>\n");
    out
}
