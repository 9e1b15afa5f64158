//! Exhaustive search for the rectangles a tile set can form.
//!
//! All dimensions are scaled by the least common denominator so the search
//! runs on machine integers; results are mapped back to exact rationals.
//! The filler always extends the lowest, then leftmost, uncovered point of a
//! skyline, so every tiling is generated exactly once. Failed skyline states
//! are memoised.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use thiserror::Error;

use crate::kernel::rational::{common_denominator, Rational};

use super::layout::{Layout, Placement};
use super::tiles::TileSet;

pub const DEFAULT_TILE_CAP: usize = 24;
const MEMO_LIMIT: usize = 4_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("tile set has {found} tiles, above the cap of {cap}")]
    TooManyTiles { found: usize, cap: usize },
    #[error("scaled tile dimensions overflow machine integers")]
    Overflow,
    #[error("search exceeded its budget of {0} nodes")]
    BudgetExceeded(u64),
}

#[derive(Debug, Clone)]
pub struct EnumerateOptions {
    pub allow_rotation: bool,
    pub cap: usize,
    /// Node budget per candidate rectangle; `None` searches exhaustively.
    pub node_budget: Option<u64>,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            allow_rotation: true,
            cap: DEFAULT_TILE_CAP,
            node_budget: None,
        }
    }
}

/// One achievable rectangle: its unordered dimensions (`width ≥ height`)
/// and a witness tiling.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct LayoutClass {
    pub width: Rational,
    pub height: Rational,
    pub witness: Layout,
}

/// All distinct rectangles (as unordered dimension pairs) that `ts` tiles
/// exactly, sorted by width.
pub fn enumerate_layouts(
    ts: &TileSet,
    opts: &EnumerateOptions,
) -> Result<Vec<LayoutClass>, EnumerateError> {
    if ts.len() > opts.cap {
        return Err(EnumerateError::TooManyTiles {
            found: ts.len(),
            cap: opts.cap,
        });
    }
    let problem = Scaled::new(ts, opts.allow_rotation)?;
    let candidates = problem.candidates();
    let found: Vec<Result<Option<LayoutClass>, EnumerateError>> = candidates
        .par_iter()
        .map(|&(w, h)| {
            let mut orientations = vec![(w, h)];
            if !opts.allow_rotation && w != h {
                orientations.push((h, w));
            }
            for (tw, th) in orientations {
                if let Some(placements) = problem.tile_box(tw, th, opts.node_budget)? {
                    return Ok(Some(LayoutClass {
                        width: problem.unscale(w),
                        height: problem.unscale(h),
                        witness: Layout {
                            target_width: problem.unscale(tw),
                            target_height: problem.unscale(th),
                            placements,
                        },
                    }));
                }
            }
            Ok(None)
        })
        .collect();
    let mut out = Vec::new();
    for r in found {
        if let Some(c) = r? {
            out.push(c);
        }
    }
    Ok(out)
}

/// Number of distinct rectangles `ts` can form (rotation allowed).
pub fn layout_count(ts: &TileSet) -> Result<usize, EnumerateError> {
    layout_count_with(ts, &EnumerateOptions::default())
}

pub fn layout_count_with(ts: &TileSet, opts: &EnumerateOptions) -> Result<usize, EnumerateError> {
    Ok(enumerate_layouts(ts, opts)?.len())
}

/// Whether `ts` tiles a `width × height` box (rotation allowed), with a
/// witness.
pub fn tile_rectangle(
    ts: &TileSet,
    width: &Rational,
    height: &Rational,
    opts: &EnumerateOptions,
) -> Result<Option<Layout>, EnumerateError> {
    let problem = Scaled::new(ts, opts.allow_rotation)?;
    let (Some(w), Some(h)) = (problem.scale(width), problem.scale(height)) else {
        return Ok(None);
    };
    if w <= 0 || h <= 0 || w.checked_mul(h) != Some(problem.area) {
        return Ok(None);
    }
    Ok(problem
        .tile_box(w, h, opts.node_budget)?
        .map(|placements| Layout {
            target_width: width.clone(),
            target_height: height.clone(),
            placements,
        }))
}

/// Tiles grouped by shape. With rotation allowed, `a × b` and `b × a` are the
/// same kind.
#[derive(Debug, Clone)]
struct Kind {
    /// Orientations tried, as (width, height) in scaled units.
    orientations: Vec<(i64, i64)>,
    /// (id, natural width, natural height) of each tile of this kind.
    members: Vec<(usize, i64, i64)>,
}

#[derive(Debug)]
struct Scaled {
    unit: BigInt,
    kinds: Vec<Kind>,
    area: i64,
    allow_rotation: bool,
}

impl Scaled {
    fn new(ts: &TileSet, allow_rotation: bool) -> Result<Self, EnumerateError> {
        let unit = common_denominator(ts.tiles().iter().flat_map(|t| [&t.width, &t.height]));
        let to_int = |r: &Rational| -> Result<i64, EnumerateError> {
            (r.numer() * (&unit / r.denom()))
                .to_i64()
                .filter(|v| *v < (1 << 31))
                .ok_or(EnumerateError::Overflow)
        };
        let mut groups: BTreeMap<(i64, i64), Vec<(usize, i64, i64)>> = BTreeMap::new();
        let mut area: i64 = 0;
        for t in ts.tiles() {
            let (w, h) = (to_int(&t.width)?, to_int(&t.height)?);
            area = w
                .checked_mul(h)
                .and_then(|a| area.checked_add(a))
                .ok_or(EnumerateError::Overflow)?;
            let key = if allow_rotation {
                (w.min(h), w.max(h))
            } else {
                (w, h)
            };
            groups.entry(key).or_default().push((t.id, w, h));
        }
        // larger tiles first: fails faster
        let mut kinds: Vec<Kind> = groups
            .into_iter()
            .map(|((a, b), members)| {
                let orientations = match (allow_rotation, a == b) {
                    (false, _) => vec![(a, b)],
                    (true, true) => vec![(a, a)],
                    (true, false) => vec![(b, a), (a, b)],
                };
                Kind {
                    orientations,
                    members,
                }
            })
            .collect();
        kinds.sort_by_key(|k| {
            let (w, h) = k.orientations[0];
            std::cmp::Reverse((w * h, w.max(h)))
        });
        Ok(Scaled {
            unit,
            kinds,
            area,
            allow_rotation,
        })
    }

    fn unscale(&self, v: i64) -> Rational {
        Rational::new(BigInt::from(v), self.unit.clone()).expect("unit is positive")
    }

    fn scale(&self, r: &Rational) -> Option<i64> {
        let s = r * Rational::from(self.unit.clone());
        s.to_i64()
    }

    /// Subset sums of tile sides, each tile contributing one of its sides
    /// (either, when rotation is allowed) or nothing.
    fn side_sums(&self) -> BTreeSet<i64> {
        let mut sums: BTreeSet<i64> = BTreeSet::from([0]);
        for k in &self.kinds {
            for _ in &k.members {
                let mut next = sums.clone();
                for &s in &sums {
                    for &(w, h) in &k.orientations {
                        next.insert(s + w);
                        if !self.allow_rotation {
                            next.insert(s + h);
                        }
                    }
                }
                next.retain(|&v| v <= self.area);
                sums = next;
            }
        }
        sums
    }

    /// Candidate boxes `(w, h)` with `w ≥ h`, `w·h = area`, both sides
    /// achievable as side sums, and every tile fitting in some orientation.
    fn candidates(&self) -> Vec<(i64, i64)> {
        let sums = self.side_sums();
        let mut out = Vec::new();
        for &h in sums.iter().filter(|&&h| h > 0) {
            if self.area % h != 0 {
                continue;
            }
            let w = self.area / h;
            if w < h || !sums.contains(&w) {
                continue;
            }
            let fits = self.kinds.iter().all(|k| {
                let (a, b) = k.orientations[0];
                let (lo, hi) = (a.min(b), a.max(b));
                if self.allow_rotation {
                    lo <= h && hi <= w
                } else {
                    (a <= w && b <= h) || (a <= h && b <= w)
                }
            });
            if fits {
                out.push((w, h));
            }
        }
        out.sort_unstable();
        out
    }

    fn tile_box(
        &self,
        w: i64,
        h: i64,
        budget: Option<u64>,
    ) -> Result<Option<Vec<Placement>>, EnumerateError> {
        // a short skyline has far fewer states; transposing is free when
        // every kind may turn
        if self.allow_rotation && w > h {
            return Ok(self.tile_box_raw(h, w, budget)?.map(|ps| {
                ps.into_iter()
                    .map(|p| Placement {
                        x: p.y,
                        y: p.x,
                        rotated: !p.rotated ^ self.is_square(p.tile_id),
                        tile_id: p.tile_id,
                    })
                    .collect()
            }));
        }
        self.tile_box_raw(w, h, budget)
    }

    fn is_square(&self, id: usize) -> bool {
        self.kinds
            .iter()
            .flat_map(|k| &k.members)
            .any(|&(mid, nw, nh)| mid == id && nw == nh)
    }

    fn tile_box_raw(
        &self,
        w: i64,
        h: i64,
        budget: Option<u64>,
    ) -> Result<Option<Vec<Placement>>, EnumerateError> {
        let mut search = Search {
            kinds: &self.kinds,
            width: w,
            height: h,
            counts: self.kinds.iter().map(|k| k.members.len()).collect(),
            skyline: vec![Segment { x: 0, len: w, y: 0 }],
            placed: Vec::new(),
            failed: HashSet::new(),
            nodes: 0,
            budget,
        };
        if search.run()? {
            let mut cursor = vec![0usize; self.kinds.len()];
            let placements = search
                .placed
                .iter()
                .map(|&(kind, ow, x, y)| {
                    let (id, nw, nh) = self.kinds[kind].members[cursor[kind]];
                    cursor[kind] += 1;
                    let (pw, ph) = self.kinds[kind].orientations[ow];
                    Placement {
                        tile_id: id,
                        x: self.unscale(x),
                        y: self.unscale(y),
                        rotated: (nw, nh) != (pw, ph),
                    }
                })
                .collect();
            Ok(Some(placements))
        } else {
            Ok(None)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Segment {
    x: i64,
    len: i64,
    y: i64,
}

struct Search<'a> {
    kinds: &'a [Kind],
    width: i64,
    height: i64,
    counts: Vec<usize>,
    skyline: Vec<Segment>,
    /// (kind, orientation index, x, y)
    placed: Vec<(usize, usize, i64, i64)>,
    failed: HashSet<Vec<i64>>,
    nodes: u64,
    budget: Option<u64>,
}

impl Search<'_> {
    fn key(&self) -> Vec<i64> {
        let mut k: Vec<i64> = self.counts.iter().map(|&c| c as i64).collect();
        for s in &self.skyline {
            k.push(s.len);
            k.push(s.y);
        }
        k
    }

    fn run(&mut self) -> Result<bool, EnumerateError> {
        // lowest, then leftmost
        let Some((si, seg)) = self
            .skyline
            .iter()
            .copied()
            .enumerate()
            .min_by_key(|(_, s)| (s.y, s.x))
        else {
            return Ok(true);
        };
        if seg.y == self.height {
            return Ok(true);
        }
        self.nodes += 1;
        if let Some(b) = self.budget {
            if self.nodes > b {
                return Err(EnumerateError::BudgetExceeded(b));
            }
        }
        let key = self.key();
        if self.failed.contains(&key) {
            return Ok(false);
        }
        if !self.fillable(seg) {
            if self.failed.len() < MEMO_LIMIT {
                self.failed.insert(key);
            }
            return Ok(false);
        }
        for kind in 0..self.kinds.len() {
            if self.counts[kind] == 0 {
                continue;
            }
            for (oi, &(pw, ph)) in self.kinds[kind].orientations.iter().enumerate() {
                if pw > seg.len || seg.y + ph > self.height {
                    continue;
                }
                let saved = self.skyline.clone();
                self.place(si, seg, pw, ph);
                self.counts[kind] -= 1;
                self.placed.push((kind, oi, seg.x, seg.y));
                if self.run()? {
                    return Ok(true);
                }
                self.placed.pop();
                self.counts[kind] += 1;
                self.skyline = saved;
            }
        }
        if self.failed.len() < MEMO_LIMIT {
            self.failed.insert(key);
        }
        Ok(false)
    }

    /// Necessary conditions at the lowest segment: both neighbours are
    /// higher, so the tiles resting on it have widths summing to its length,
    /// and the column above it is a stack of heights reaching the top.
    fn fillable(&self, seg: Segment) -> bool {
        let room = self.height - seg.y;
        let width = self.width;
        self.reachable(seg.len, |pw, ph| (ph <= room).then_some(pw))
            && self.reachable(room, |pw, ph| (pw <= width).then_some(ph))
    }

    /// Whether `target` is a sum over a sub-multiset of the remaining tiles,
    /// each contributing the side `pick` selects from one of its
    /// orientations.
    fn reachable(&self, target: i64, pick: impl Fn(i64, i64) -> Option<i64>) -> bool {
        let t = target as usize;
        let mut bits = vec![0u64; t / 64 + 1];
        bits[0] = 1;
        let hit = |bits: &[u64]| bits[t / 64] >> (t % 64) & 1 == 1;
        for (kind, k) in self.kinds.iter().enumerate() {
            let mut sides: Vec<usize> = k
                .orientations
                .iter()
                .filter_map(|&(pw, ph)| pick(pw, ph))
                .filter(|&d| d <= target)
                .map(|d| d as usize)
                .collect();
            sides.sort_unstable();
            sides.dedup();
            if sides.is_empty() {
                continue;
            }
            for _ in 0..self.counts[kind] {
                let prev = bits.clone();
                for &d in &sides {
                    shift_or(&mut bits, &prev, d);
                }
                if hit(&bits) {
                    return true;
                }
            }
        }
        hit(&bits)
    }

    fn place(&mut self, si: usize, seg: Segment, pw: i64, ph: i64) {
        let top = Segment {
            x: seg.x,
            len: pw,
            y: seg.y + ph,
        };
        let mut replacement = vec![top];
        if pw < seg.len {
            replacement.push(Segment {
                x: seg.x + pw,
                len: seg.len - pw,
                y: seg.y,
            });
        }
        self.skyline.splice(si..=si, replacement);
        // merge equal-height neighbours
        let mut merged: Vec<Segment> = Vec::with_capacity(self.skyline.len());
        for s in self.skyline.drain(..) {
            match merged.last_mut() {
                Some(last) if last.y == s.y => last.len += s.len,
                _ => merged.push(s),
            }
        }
        self.skyline = merged;
        debug_assert_eq!(self.skyline.iter().map(|s| s.len).sum::<i64>(), self.width);
    }
}

/// `dst |= src << by`, truncated to `dst`'s length.
fn shift_or(dst: &mut [u64], src: &[u64], by: usize) {
    let (words, bits) = (by / 64, by % 64);
    for i in (words..dst.len()).rev() {
        let j = i - words;
        let mut v = src[j] << bits;
        if bits > 0 && j > 0 {
            v |= src[j - 1] >> (64 - bits);
        }
        dst[i] |= v;
    }
}
