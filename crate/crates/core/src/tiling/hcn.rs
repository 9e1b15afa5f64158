//! Highly composite numbers and the equal-length strip constructions built
//! on them.
//!
//! A tile set of `d` strips of each width `1..=i`, all of one length `L`,
//! has total width `h = d·i(i+1)/2`. When `h` is highly composite it has many
//! divisors `F`, and for every `F ≥ i` the widths can be grouped into rows of
//! width exactly `F`, giving an `F × (h/F)·L` rectangle.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::kernel::Rational;

use super::layout::{Layout, Placement};
use super::tiles::{SplitAxis, Tile, TileError, TileSet};

pub const HCN_LIMIT: u64 = 1_000_000_000;

const PRIMES: [u64; 15] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HcnError {
    #[error("{0} is not a highly composite number")]
    NotHighlyComposite(u64),
    #[error("triangular number {m} = T({i}) does not divide {h}")]
    NotDivisible { h: u64, m: u64, i: u64 },
    #[error("i and h must be positive")]
    Zero,
    #[error("strip length must be positive")]
    BadLength,
    #[error("limit {0} exceeds {HCN_LIMIT}")]
    LimitTooLarge(u64),
    #[error("row width {f} does not divide {h}")]
    NotADivisor { f: u64, h: u64 },
    #[error("tiles do not all share one length")]
    MixedLengths,
}

/// Number of positive divisors, by trial division.
pub fn divisor_count(v: u64) -> u64 {
    assert!(v >= 1, "divisor_count needs v ≥ 1");
    let mut n = v;
    let mut count = 1;
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        count *= e + 1;
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        count *= 2;
    }
    count
}

/// All divisors in increasing order.
pub fn divisors(v: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= v {
        if v.is_multiple_of(d) {
            small.push(d);
            if d * d != v {
                large.push(v / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Highly composite numbers up to `limit`, in increasing order.
///
/// Runs the record scan "more divisors than every smaller integer" over the
/// integers whose prime exponents are non-increasing along 2, 3, 5, … . That
/// restriction loses nothing: moving a number's exponents onto the smallest
/// primes in decreasing order keeps its divisor count and never increases
/// it, so each record is first set by such a number.
pub fn hcn_up_to(limit: u64) -> Result<Vec<u64>, HcnError> {
    if limit > HCN_LIMIT {
        return Err(HcnError::LimitTooLarge(limit));
    }
    let mut cands: Vec<(u64, u64)> = Vec::new();
    smooth_candidates(limit, 0, u32::MAX, 1, 1, &mut cands);
    cands.sort_unstable();
    let mut out = Vec::new();
    let mut record = 0;
    for (v, d) in cands {
        if d > record {
            record = d;
            out.push(v);
        }
    }
    Ok(out)
}

fn smooth_candidates(
    limit: u64,
    pi: usize,
    max_exp: u32,
    value: u64,
    divs: u64,
    out: &mut Vec<(u64, u64)>,
) {
    out.push((value, divs));
    if pi == PRIMES.len() {
        return;
    }
    let p = PRIMES[pi];
    let mut v = value;
    for e in 1..=max_exp {
        match v.checked_mul(p) {
            Some(next) if next <= limit => v = next,
            _ => break,
        }
        smooth_candidates(limit, pi + 1, e, v, divs * (e as u64 + 1), out);
    }
}

/// Whether `v` has more divisors than every smaller positive integer.
pub fn is_hcn(v: u64) -> bool {
    (1..=HCN_LIMIT).contains(&v) && hcn_up_to(v).map(|l| l.last() == Some(&v)).unwrap_or(false)
}

/// `i(i+1)/2`.
pub fn triangular(i: u64) -> u64 {
    i * (i + 1) / 2
}

/// Parameters of a strip construction: `h = d·T(i)` with `h` highly
/// composite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HcnContext {
    pub h: u64,
    pub m: u64,
    pub i: u64,
    pub d: u64,
    pub length: Rational,
}

impl HcnContext {
    pub fn new(h: u64, i: u64, length: Rational) -> Result<Self, HcnError> {
        if h == 0 || i == 0 {
            return Err(HcnError::Zero);
        }
        if !length.is_positive() {
            return Err(HcnError::BadLength);
        }
        if !is_hcn(h) {
            return Err(HcnError::NotHighlyComposite(h));
        }
        let m = triangular(i);
        if !h.is_multiple_of(m) {
            return Err(HcnError::NotDivisible { h, m, i });
        }
        Ok(HcnContext {
            h,
            m,
            i,
            d: h / m,
            length,
        })
    }

    /// `d` strips of each width `1..=i`, all of height `length`. Ids run
    /// width-major: the first `d` tiles have width 1.
    pub fn tileset(&self) -> TileSet {
        let mut tiles = Vec::new();
        for w in 1..=self.i {
            for _ in 0..self.d {
                let id = tiles.len();
                tiles.push(
                    Tile::new(id, Rational::from(w), self.length.clone())
                        .expect("positive strip dimensions"),
                );
            }
        }
        TileSet::new(tiles).expect("nonempty strip set")
    }
}

pub fn build_hcn_tileset(ctx: &HcnContext) -> TileSet {
    ctx.tileset()
}

/// Groups the strips of `ts` (one common length, integer widths) into rows
/// of width `f` and stacks them. `Ok(None)` when no exact grouping exists.
pub fn rows_layout(ts: &TileSet, f: u64) -> Result<Option<Layout>, HcnError> {
    let length = ts.tiles()[0].height.clone();
    if ts.tiles().iter().any(|t| t.height != length) {
        return Err(HcnError::MixedLengths);
    }
    let mut by_width: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for t in ts.tiles() {
        let w = t
            .width
            .to_i64()
            .filter(|w| *w > 0)
            .ok_or(HcnError::MixedLengths)? as u64;
        by_width.entry(w).or_default().push(t.id);
    }
    let total: u64 = by_width.iter().map(|(w, ids)| w * ids.len() as u64).sum();
    if !total.is_multiple_of(f) {
        return Err(HcnError::NotADivisor { f, h: total });
    }
    let widths: Vec<u64> = by_width.keys().rev().copied().collect();
    let mut counts: Vec<u64> = widths.iter().map(|w| by_width[w].len() as u64).collect();
    let rows_needed = (total / f) as usize;
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let mut failed = HashSet::new();
    if !fill_rows(
        &widths,
        &mut counts,
        f,
        f,
        0,
        &mut current,
        &mut rows,
        rows_needed,
        &mut failed,
    ) {
        return Ok(None);
    }
    let mut cursor: BTreeMap<u64, usize> = BTreeMap::new();
    let mut placements = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        let y = &length * Rational::from(r as i64);
        let mut x = 0u64;
        for &k in row {
            let w = widths[k];
            let c = cursor.entry(w).or_insert(0);
            let id = by_width[&w][*c];
            *c += 1;
            placements.push(Placement {
                tile_id: id,
                x: Rational::from(x),
                y: y.clone(),
                rotated: false,
            });
            x += w;
        }
    }
    Ok(Some(Layout {
        target_width: Rational::from(f),
        target_height: &length * Rational::from(rows_needed as i64),
        placements,
    }))
}

/// Bin completion: fill the current row with widths in non-increasing order
/// (index `from` onwards), then open the next row.
#[allow(clippy::too_many_arguments)]
fn fill_rows(
    widths: &[u64],
    counts: &mut [u64],
    f: u64,
    remaining: u64,
    from: usize,
    current: &mut Vec<usize>,
    rows: &mut Vec<Vec<usize>>,
    rows_needed: usize,
    failed: &mut HashSet<(Vec<u64>, u64, usize)>,
) -> bool {
    if remaining == 0 {
        rows.push(std::mem::take(current));
        if rows.len() == rows_needed {
            return true;
        }
        if fill_rows(widths, counts, f, f, 0, current, rows, rows_needed, failed) {
            return true;
        }
        *current = rows.pop().expect("row just pushed");
        return false;
    }
    let key = (counts.to_vec(), remaining, from);
    if failed.contains(&key) {
        return false;
    }
    for k in from..widths.len() {
        if counts[k] == 0 || widths[k] > remaining {
            continue;
        }
        counts[k] -= 1;
        current.push(k);
        if fill_rows(
            widths,
            counts,
            f,
            remaining - widths[k],
            k,
            current,
            rows,
            rows_needed,
            failed,
        ) {
            return true;
        }
        current.pop();
        counts[k] += 1;
    }
    failed.insert(key);
    false
}

/// A layout of width `f` built from the strips of `ctx`.
pub fn construct_width_layout(ctx: &HcnContext, f: u64) -> Result<Option<Layout>, HcnError> {
    if f == 0 || !ctx.h.is_multiple_of(f) {
        return Err(HcnError::NotADivisor { f, h: ctx.h });
    }
    rows_layout(&ctx.tileset(), f)
}

/// Feasibility of the row construction for every divisor of `h`.
pub fn hcn_layout_census(ctx: &HcnContext) -> BTreeMap<u64, bool> {
    divisors(ctx.h)
        .into_iter()
        .map(|f| {
            let ok = matches!(construct_width_layout(ctx, f), Ok(Some(_)));
            (f, ok)
        })
        .collect()
}

/// `ts` with tile `id` cut in two at `position` along `axis`.
pub fn split_extension(
    ts: &TileSet,
    id: usize,
    axis: SplitAxis,
    position: &Rational,
) -> Result<TileSet, TileError> {
    ts.split(id, axis, position)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::enumerate::{enumerate_layouts, layout_count, EnumerateOptions};
    use crate::tiling::layout::verify_layout;

    /// Direct record scan over every integer, with divisor counts from a
    /// sieve.
    fn scan_oracle(limit: usize) -> Vec<u64> {
        let mut d = vec![0u32; limit + 1];
        for a in 1..=limit {
            let mut m = a;
            while m <= limit {
                d[m] += 1;
                m += a;
            }
        }
        let mut best = 0;
        let mut out = Vec::new();
        for (v, &c) in d.iter().enumerate().skip(1) {
            if c > best {
                best = c;
                out.push(v as u64);
            }
        }
        out
    }

    #[test]
    fn divisor_counts() {
        assert_eq!(divisor_count(60), 12);
        assert_eq!(divisor_count(1), 1);
        assert_eq!(divisor_count(97), 2);
        assert_eq!(divisor_count(1441440), 288);
        assert_eq!(divisors(60), vec![1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60]);
        for v in 1..2000u64 {
            assert_eq!(divisor_count(v), divisors(v).len() as u64);
        }
    }

    #[test]
    fn hcn_prefix() {
        assert_eq!(
            hcn_up_to(130).unwrap(),
            vec![1, 2, 4, 6, 12, 24, 36, 48, 60, 120]
        );
    }

    #[test]
    fn record_scan_agrees_with_brute_force() {
        assert_eq!(hcn_up_to(200_000).unwrap(), scan_oracle(200_000));
    }

    #[test]
    fn is_hcn_examples() {
        assert!(is_hcn(1));
        assert!(is_hcn(60));
        assert!(is_hcn(5040));
        assert!(!is_hcn(30));
        assert!(!is_hcn(0));
        assert!(matches!(
            hcn_up_to(2_000_000_000),
            Err(HcnError::LimitTooLarge(_))
        ));
    }

    #[test]
    fn triangular_numbers() {
        assert_eq!(triangular(1), 1);
        assert_eq!(triangular(5), 15);
        assert_eq!(triangular(15), 120);
        let printed: [u64; 23] = [
            1, 2, 6, 10, 15, 21, 28, 36, 45, 55, 66, 78, 91, 105, 120, 136, 153, 171, 190, 231,
            253, 276, 300,
        ];
        let formula: Vec<u64> = (1..=24).map(triangular).filter(|&t| t != 3 && t != 210).collect();
        assert_eq!(printed[0], formula[0]);
        assert_eq!(printed[2..], formula[1..]);
        // the printed list has 2 in place of T(2) and skips T(20)
        assert_eq!(triangular(2), 3);
        assert_eq!(triangular(20), 210);
    }

    #[test]
    fn context_validation() {
        let l = Rational::from(100);
        assert!(HcnContext::new(60, 5, l.clone()).is_ok());
        assert_eq!(
            HcnContext::new(30, 1, l.clone()),
            Err(HcnError::NotHighlyComposite(30))
        );
        assert_eq!(
            HcnContext::new(12, 4, l.clone()),
            Err(HcnError::NotDivisible { h: 12, m: 10, i: 4 })
        );
        assert_eq!(
            HcnContext::new(60, 5, Rational::zero()),
            Err(HcnError::BadLength)
        );
    }

    #[test]
    fn tilesets() {
        let ctx = HcnContext::new(60, 5, Rational::from(100)).unwrap();
        let ts = build_hcn_tileset(&ctx);
        assert_eq!(ts.len(), 20);
        for w in 1..=5 {
            assert_eq!(ts.tiles().iter().filter(|t| t.width == w).count(), 4);
        }
        let ctx = HcnContext::new(120, 3, Rational::from(100)).unwrap();
        assert_eq!(ctx.d, 20);
        assert_eq!(build_hcn_tileset(&ctx).len(), 60);
        let ctx = HcnContext::new(1, 1, Rational::from(100)).unwrap();
        let ts = build_hcn_tileset(&ctx);
        assert_eq!(ts.len(), 1);
        assert_eq!(ts.tiles()[0].width, 1);
    }

    #[test]
    fn width_layouts_verify() {
        let ctx = HcnContext::new(60, 5, Rational::from(100)).unwrap();
        let l = construct_width_layout(&ctx, 12).unwrap().unwrap();
        assert_eq!(l.target_width, 12);
        assert_eq!(l.target_height, 500);
        assert!(verify_layout(&ctx.tileset(), &l).is_valid());
        let whole = construct_width_layout(&ctx, 60).unwrap().unwrap();
        assert!(whole.placements.iter().all(|p| p.y.is_zero()));
        assert_eq!(construct_width_layout(&ctx, 4).unwrap(), None);
        assert!(construct_width_layout(&ctx, 7).is_err());

        let ctx = HcnContext::new(120, 3, Rational::from(100)).unwrap();
        let l = construct_width_layout(&ctx, 4).unwrap().unwrap();
        assert!(verify_layout(&ctx.tileset(), &l).is_valid());
    }

    #[test]
    fn censuses() {
        let feasible = |h, i| {
            let ctx = HcnContext::new(h, i, Rational::from(100)).unwrap();
            hcn_layout_census(&ctx)
                .into_iter()
                .filter(|(_, ok)| *ok)
                .map(|(f, _)| f)
                .collect::<Vec<_>>()
        };
        assert_eq!(feasible(60, 5), vec![5, 6, 10, 12, 15, 20, 30, 60]);
        assert_eq!(feasible(120, 3).len(), 14);
        assert_eq!(feasible(60, 1).len(), 12);
    }

    #[test]
    fn split_adds_width_59() {
        let ctx = HcnContext::new(60, 5, Rational::from(118)).unwrap();
        let ts =
            split_extension(&ctx.tileset(), 0, SplitAxis::Height, &Rational::from(59)).unwrap();
        assert_eq!(ts.len(), 21);
        assert_eq!(ts.total_area(), ctx.tileset().total_area());
        let found = enumerate_layouts(&ts, &EnumerateOptions::default()).unwrap();
        let dims: Vec<(i64, i64)> = found
            .iter()
            .map(|c| (c.width.to_i64().unwrap(), c.height.to_i64().unwrap()))
            .collect();
        assert_eq!(
            dims,
            vec![
                (118, 60),
                (120, 59),
                (236, 30),
                (354, 20),
                (472, 15),
                (590, 12),
                (708, 10),
                (1180, 6),
                (1416, 5)
            ]
        );
        for c in &found {
            assert!(verify_layout(&ts, &c.witness).is_valid());
        }
    }

    #[test]
    fn sixty_unit_strips() {
        let ts = HcnContext::new(60, 1, Rational::from(100))
            .unwrap()
            .tileset();
        let opts = EnumerateOptions {
            cap: 60,
            ..Default::default()
        };
        let found = enumerate_layouts(&ts, &opts).unwrap();
        assert_eq!(found.len(), 12);
        assert!(found
            .iter()
            .all(|c| verify_layout(&ts, &c.witness).is_valid()));
    }

    #[test]
    fn splitting_never_loses_layouts() {
        for dims in [vec![(1, 1); 4], vec![(4, 1), (4, 1), (2, 1), (2, 1)]] {
            let ts = TileSet::from_dims(dims).unwrap();
            let before = layout_count(&ts).unwrap();
            for t in ts.tiles() {
                let half = &t.width / Rational::from(2);
                let after = split_extension(&ts, t.id, SplitAxis::Width, &half).unwrap();
                assert!(layout_count(&after).unwrap() >= before);
            }
        }
    }
}
