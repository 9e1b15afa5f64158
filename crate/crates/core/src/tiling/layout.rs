//! Placed dissections and their exact verification.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::kernel::Rational;

use super::tiles::{Tile, TileSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Placement {
    #[serde(rename = "id")]
    pub tile_id: usize,
    pub x: Rational,
    pub y: Rational,
    pub rotated: bool,
}

/// Serialized as `{"target": [W, H], "placements": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "LayoutDoc", from = "LayoutDoc")]
pub struct Layout {
    pub target_width: Rational,
    pub target_height: Rational,
    pub placements: Vec<Placement>,
}

#[derive(Serialize, Deserialize)]
struct LayoutDoc {
    target: [Rational; 2],
    placements: Vec<Placement>,
}

impl From<Layout> for LayoutDoc {
    fn from(l: Layout) -> Self {
        LayoutDoc {
            target: [l.target_width, l.target_height],
            placements: l.placements,
        }
    }
}

impl From<LayoutDoc> for Layout {
    fn from(d: LayoutDoc) -> Self {
        let [target_width, target_height] = d.target;
        Layout {
            target_width,
            target_height,
            placements: d.placements,
        }
    }
}

/// Axis-aligned box `[x0, x1] × [y0, y1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rect {
    pub x0: Rational,
    pub y0: Rational,
    pub x1: Rational,
    pub y1: Rational,
}

/// The first thing wrong with a layout.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Defect {
    UnknownTile {
        id: usize,
    },
    DuplicateTile {
        id: usize,
    },
    UnusedTile {
        id: usize,
    },
    OutOfBounds {
        id: usize,
    },
    Overlap {
        a: usize,
        b: usize,
        x: Rational,
        y: Rational,
    },
    Gap {
        x: Rational,
        y: Rational,
    },
    AreaMismatch {
        tiles: Rational,
        target: Rational,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Valid,
    Defect(Defect),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

impl Layout {
    pub fn placed_rect(&self, tile: &Tile, p: &Placement) -> Rect {
        let (w, h) = tile.extent(p.rotated);
        Rect {
            x1: &p.x + w,
            y1: &p.y + h,
            x0: p.x.clone(),
            y0: p.y.clone(),
        }
    }

    /// Placed rectangles in placement order, paired with tile ids. Unknown
    /// ids are skipped.
    pub fn rects(&self, ts: &TileSet) -> Vec<(usize, Rect)> {
        self.placements
            .iter()
            .filter_map(|p| {
                ts.get(p.tile_id)
                    .map(|t| (p.tile_id, self.placed_rect(t, p)))
            })
            .collect()
    }
}

/// Exact check that `layout` dissects its target using every tile of `ts`
/// exactly once.
///
/// Coverage is established by a vertical-slab sweep: inside every slab
/// between consecutive tile edges the covering tiles' y-intervals must chain
/// from 0 to the target height with neither gaps nor overlaps. The total
/// area identity is checked as well.
pub fn verify_layout(ts: &TileSet, layout: &Layout) -> Verdict {
    match find_defect(ts, layout) {
        Some(d) => Verdict::Defect(d),
        None => Verdict::Valid,
    }
}

fn find_defect(ts: &TileSet, layout: &Layout) -> Option<Defect> {
    let mut seen = BTreeSet::new();
    for p in &layout.placements {
        if ts.get(p.tile_id).is_none() {
            return Some(Defect::UnknownTile { id: p.tile_id });
        }
        if !seen.insert(p.tile_id) {
            return Some(Defect::DuplicateTile { id: p.tile_id });
        }
    }
    if let Some(t) = ts.tiles().iter().find(|t| !seen.contains(&t.id)) {
        return Some(Defect::UnusedTile { id: t.id });
    }

    let (w, h) = (&layout.target_width, &layout.target_height);
    let rects = layout.rects(ts);
    let zero = Rational::zero();
    for (id, r) in &rects {
        if r.x0 < zero || r.y0 < zero || &r.x1 > w || &r.y1 > h {
            return Some(Defect::OutOfBounds { id: *id });
        }
    }

    let mut xs: Vec<&Rational> = rects.iter().flat_map(|(_, r)| [&r.x0, &r.x1]).collect();
    xs.push(&zero);
    xs.push(w);
    xs.sort();
    xs.dedup();
    for slab in xs.windows(2) {
        let (xa, xb) = (slab[0], slab[1]);
        if xa >= w {
            break;
        }
        let mut column: Vec<(usize, &Rect)> = rects
            .iter()
            .filter(|(_, r)| &r.x0 <= xa && &r.x1 >= xb)
            .map(|(id, r)| (*id, r))
            .collect();
        column.sort_by(|a, b| a.1.y0.cmp(&b.1.y0).then(a.1.y1.cmp(&b.1.y1)));
        let mut reach = Rational::zero();
        let mut last: Option<usize> = None;
        for (id, r) in column {
            if r.y0 > reach {
                return Some(Defect::Gap {
                    x: xa.clone(),
                    y: reach,
                });
            }
            if r.y0 < reach {
                return Some(Defect::Overlap {
                    a: last.expect("overlap needs a predecessor"),
                    b: id,
                    x: xa.clone(),
                    y: r.y0.clone(),
                });
            }
            reach = r.y1.clone();
            last = Some(id);
        }
        if &reach < h {
            return Some(Defect::Gap {
                x: xa.clone(),
                y: reach,
            });
        }
    }

    let tiles = ts.total_area();
    let target = w * h;
    if tiles != target {
        return Some(Defect::AreaMismatch { tiles, target });
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::q;

    fn place(id: usize, x: Rational, y: Rational) -> Placement {
        Placement {
            tile_id: id,
            x,
            y,
            rotated: false,
        }
    }

    #[test]
    fn single_tile_fills_its_box() {
        let ts = TileSet::from_dims([(1, 1)]).unwrap();
        let l = Layout {
            target_width: Rational::one(),
            target_height: Rational::one(),
            placements: vec![place(0, Rational::zero(), Rational::zero())],
        };
        assert_eq!(verify_layout(&ts, &l), Verdict::Valid);
    }

    #[test]
    fn stacked_tiles_overlap() {
        let ts = TileSet::from_dims([(1, 1), (1, 1)]).unwrap();
        let l = Layout {
            target_width: Rational::from(2),
            target_height: Rational::one(),
            placements: vec![
                place(0, Rational::zero(), Rational::zero()),
                place(1, Rational::zero(), Rational::zero()),
            ],
        };
        assert!(matches!(
            verify_layout(&ts, &l),
            Verdict::Defect(Defect::Overlap { a: 0, b: 1, .. })
        ));
    }

    #[test]
    fn reports_gaps_unused_and_out_of_bounds() {
        let ts = TileSet::from_dims([(1, 1), (1, 1)]).unwrap();
        let mut l = Layout {
            target_width: Rational::from(3),
            target_height: Rational::one(),
            placements: vec![
                place(0, Rational::zero(), Rational::zero()),
                place(1, Rational::from(2), Rational::zero()),
            ],
        };
        assert_eq!(
            verify_layout(&ts, &l),
            Verdict::Defect(Defect::Gap {
                x: Rational::one(),
                y: Rational::zero()
            })
        );
        l.placements.pop();
        assert_eq!(
            verify_layout(&ts, &l),
            Verdict::Defect(Defect::UnusedTile { id: 1 })
        );
        l.placements.push(place(1, q(5, 2), Rational::zero()));
        assert_eq!(
            verify_layout(&ts, &l),
            Verdict::Defect(Defect::OutOfBounds { id: 1 })
        );
        l.placements
            .push(place(7, Rational::zero(), Rational::zero()));
        assert_eq!(
            verify_layout(&ts, &l),
            Verdict::Defect(Defect::UnknownTile { id: 7 })
        );
    }

    #[test]
    fn rotation_is_honoured() {
        let ts = TileSet::from_dims([(2, 1), (1, 2)]).unwrap();
        let l = Layout {
            target_width: Rational::from(2),
            target_height: Rational::from(2),
            placements: vec![
                place(0, Rational::zero(), Rational::zero()),
                Placement {
                    tile_id: 1,
                    x: Rational::zero(),
                    y: Rational::one(),
                    rotated: true,
                },
            ],
        };
        assert_eq!(verify_layout(&ts, &l), Verdict::Valid);
    }
}
