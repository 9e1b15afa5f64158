//! Mosaic floorplans: dissections of a rectangle into rooms, up to the
//! combinatorial structure of their maximal segments.
//!
//! Vertical segment ids `0` and `1` are the left and right walls; horizontal
//! ids `0` and `1` are the bottom and top walls. Every floorplan with `n + 1`
//! rooms arises exactly once from one with `n` rooms by adding a room in the
//! top-left corner, either across the top of the first `j` rooms of the top
//! wall ([`Step::Across`]) or down the side of the first `j` rooms of the
//! left wall ([`Step::Down`]). The sequence of such steps is a complete
//! invariant and doubles as the canonical form.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::kernel::Rational;

use super::layout::{verify_layout, Layout};
use super::tiles::TileSet;

pub const LEFT_WALL: usize = 0;
pub const RIGHT_WALL: usize = 1;
pub const BOTTOM_WALL: usize = 0;
pub const TOP_WALL: usize = 1;

pub const MAX_FLOORPLAN_ROOMS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FloorplanError {
    #[error("floorplans are enumerated for at most {MAX_FLOORPLAN_ROOMS} rooms (got {0})")]
    TooManyRooms(usize),
    #[error("a floorplan needs at least one room")]
    NoRooms,
    #[error("step {0:?} does not apply to this floorplan")]
    BadStep(Step),
    #[error("layout is not a valid dissection")]
    InvalidLayout,
    #[error("four rooms meet at ({x}, {y})")]
    CrossJunction { x: Rational, y: Rational },
    #[error("room structure is not a mosaic floorplan")]
    Malformed,
}

/// Bounding maximal segments of one room.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Room {
    pub left: usize,
    pub right: usize,
    pub bottom: usize,
    pub top: usize,
}

/// One top-left insertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Step {
    /// The new room covers the first `j` rooms along the top wall.
    Across(usize),
    /// The new room runs down beside the first `j` rooms along the left wall.
    Down(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Floorplan {
    rooms: Vec<Room>,
    verticals: usize,
    horizontals: usize,
}

impl Floorplan {
    pub fn single() -> Self {
        Floorplan {
            rooms: vec![Room {
                left: LEFT_WALL,
                right: RIGHT_WALL,
                bottom: BOTTOM_WALL,
                top: TOP_WALL,
            }],
            verticals: 2,
            horizontals: 2,
        }
    }

    /// Replays insertion steps starting from a single room.
    pub fn from_steps(steps: &[Step]) -> Result<Self, FloorplanError> {
        let mut fp = Floorplan::single();
        for &s in steps {
            fp.insert(s)?;
        }
        Ok(fp)
    }

    pub fn rooms(&self) -> &[Room] {
        &self.rooms
    }

    pub fn len(&self) -> usize {
        self.rooms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rooms.is_empty()
    }

    /// Vertical segment count, walls included.
    pub fn verticals(&self) -> usize {
        self.verticals
    }

    /// Horizontal segment count, walls included.
    pub fn horizontals(&self) -> usize {
        self.horizontals
    }

    fn corner_room(&self) -> Option<usize> {
        self.rooms
            .iter()
            .position(|r| r.left == LEFT_WALL && r.top == TOP_WALL)
    }

    /// Rooms touching the top wall, left to right.
    pub fn top_rooms(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = self.corner_room();
        while let Some(i) = cur {
            out.push(i);
            let edge = self.rooms[i].right;
            cur = self
                .rooms
                .iter()
                .position(|r| r.top == TOP_WALL && r.left == edge);
        }
        out
    }

    /// Rooms touching the left wall, top to bottom.
    pub fn left_rooms(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = self.corner_room();
        while let Some(i) = cur {
            out.push(i);
            let edge = self.rooms[i].bottom;
            cur = self
                .rooms
                .iter()
                .position(|r| r.left == LEFT_WALL && r.top == edge);
        }
        out
    }

    pub fn insert(&mut self, step: Step) -> Result<(), FloorplanError> {
        match step {
            Step::Across(j) => {
                let top = self.top_rooms();
                if j == 0 || j > top.len() {
                    return Err(FloorplanError::BadStep(step));
                }
                let s = self.horizontals;
                self.horizontals += 1;
                for &i in &top[..j] {
                    self.rooms[i].top = s;
                }
                let right = self.rooms[top[j - 1]].right;
                self.rooms.push(Room {
                    left: LEFT_WALL,
                    right,
                    bottom: s,
                    top: TOP_WALL,
                });
            }
            Step::Down(j) => {
                let left = self.left_rooms();
                if j == 0 || j > left.len() {
                    return Err(FloorplanError::BadStep(step));
                }
                let v = self.verticals;
                self.verticals += 1;
                for &i in &left[..j] {
                    self.rooms[i].left = v;
                }
                let bottom = self.rooms[left[j - 1]].bottom;
                self.rooms.push(Room {
                    left: LEFT_WALL,
                    right: v,
                    bottom,
                    top: TOP_WALL,
                });
            }
        }
        Ok(())
    }

    /// The insertion steps that rebuild this floorplan, found by peeling off
    /// the top-left room until one is left.
    pub fn steps(&self) -> Result<Vec<Step>, FloorplanError> {
        if self.rooms.is_empty() {
            return Err(FloorplanError::NoRooms);
        }
        let mut rooms = self.rooms.clone();
        let mut out = Vec::new();
        while rooms.len() > 1 {
            let corner: Vec<usize> = (0..rooms.len())
                .filter(|&i| rooms[i].left == LEFT_WALL && rooms[i].top == TOP_WALL)
                .collect();
            let [c] = corner[..] else {
                return Err(FloorplanError::Malformed);
            };
            let t = rooms[c];
            let sole_above = t.bottom != BOTTOM_WALL
                && rooms
                    .iter()
                    .enumerate()
                    .all(|(i, r)| (r.bottom == t.bottom) == (i == c));
            rooms.swap_remove(c);
            if sole_above {
                let mut j = 0;
                for r in rooms.iter_mut().filter(|r| r.top == t.bottom) {
                    r.top = TOP_WALL;
                    j += 1;
                }
                if j == 0 {
                    return Err(FloorplanError::Malformed);
                }
                out.push(Step::Across(j));
            } else {
                let mut j = 0;
                for r in rooms.iter_mut().filter(|r| r.left == t.right) {
                    r.left = LEFT_WALL;
                    j += 1;
                }
                if j == 0 || t.right == RIGHT_WALL {
                    return Err(FloorplanError::Malformed);
                }
                out.push(Step::Down(j));
            }
        }
        let last = rooms[0];
        if (last.left, last.right, last.bottom, last.top)
            != (LEFT_WALL, RIGHT_WALL, BOTTOM_WALL, TOP_WALL)
        {
            return Err(FloorplanError::Malformed);
        }
        out.reverse();
        Ok(out)
    }

    /// The same floorplan with rooms and segments numbered canonically.
    pub fn canonical(&self) -> Result<Floorplan, FloorplanError> {
        Floorplan::from_steps(&self.steps()?)
    }

    /// Structure of a valid, cross-free layout. Room `i` is placement `i`.
    pub fn from_layout(ts: &TileSet, layout: &Layout) -> Result<Floorplan, FloorplanError> {
        if !verify_layout(ts, layout).is_valid() {
            return Err(FloorplanError::InvalidLayout);
        }
        let rects: Vec<[Rational; 4]> = layout
            .rects(ts)
            .into_iter()
            .map(|(_, r)| [r.x0, r.x1, r.y0, r.y1])
            .collect();
        let (w, h) = (&layout.target_width, &layout.target_height);

        let mut corners: BTreeMap<(&Rational, &Rational), usize> = BTreeMap::new();
        for r in &rects {
            for x in [&r[0], &r[1]] {
                for y in [&r[2], &r[3]] {
                    *corners.entry((x, y)).or_default() += 1;
                }
            }
        }
        if let Some(((x, y), _)) = corners.iter().find(|(_, &c)| c == 4) {
            return Err(FloorplanError::CrossJunction {
                x: (*x).clone(),
                y: (*y).clone(),
            });
        }

        // sides as (coordinate, lo, hi, room, is_high_side)
        let vertical: Vec<_> = rects
            .iter()
            .enumerate()
            .flat_map(|(i, r)| {
                [
                    (&r[0], &r[2], &r[3], i, false),
                    (&r[1], &r[2], &r[3], i, true),
                ]
            })
            .collect();
        let horizontal: Vec<_> = rects
            .iter()
            .enumerate()
            .flat_map(|(i, r)| {
                [
                    (&r[2], &r[0], &r[1], i, false),
                    (&r[3], &r[0], &r[1], i, true),
                ]
            })
            .collect();
        let vid = segment_ids(&vertical, w);
        let hid = segment_ids(&horizontal, h);
        let mut rooms = vec![
            Room {
                left: 0,
                right: 0,
                bottom: 0,
                top: 0,
            };
            rects.len()
        ];
        for (k, &(_, _, _, i, high)) in vertical.iter().enumerate() {
            if high {
                rooms[i].right = vid.0[k];
            } else {
                rooms[i].left = vid.0[k];
            }
        }
        for (k, &(_, _, _, i, high)) in horizontal.iter().enumerate() {
            if high {
                rooms[i].top = hid.0[k];
            } else {
                rooms[i].bottom = hid.0[k];
            }
        }
        let fp = Floorplan {
            rooms,
            verticals: vid.1,
            horizontals: hid.1,
        };
        fp.steps()?;
        Ok(fp)
    }
}

/// Groups collinear sides that touch into maximal segments. Sides on the
/// zero line get id 0, sides on the `far` line id 1, the rest ids from 2 in
/// order of first appearance. Returns ids per side and the segment count.
fn segment_ids(
    sides: &[(&Rational, &Rational, &Rational, usize, bool)],
    far: &Rational,
) -> (Vec<usize>, usize) {
    let n = sides.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for a in 0..n {
        for b in a + 1..n {
            let (ca, la, ha, _, _) = sides[a];
            let (cb, lb, hb, _, _) = sides[b];
            if ca == cb && la <= hb && lb <= ha {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
    }
    let mut label: BTreeMap<usize, usize> = BTreeMap::new();
    let mut next = 2;
    let mut ids = Vec::with_capacity(n);
    for k in 0..n {
        let c = sides[k].0;
        let id = if c.is_zero() {
            0
        } else if c == far {
            1
        } else {
            let root = find(&mut parent, k);
            *label.entry(root).or_insert_with(|| {
                next += 1;
                next - 1
            })
        };
        ids.push(id);
    }
    (ids, next)
}

/// Whether `perm` (values `0..n`) avoids the vincular patterns 2-41-3 and
/// 3-14-2, i.e. is a Baxter permutation.
pub fn is_baxter(perm: &[usize]) -> bool {
    let n = perm.len();
    for j in 0..n.saturating_sub(1) {
        let (hi, lo) = (perm[j], perm[j + 1]);
        let (big, small, descent) = if hi > lo {
            (hi, lo, true)
        } else {
            (lo, hi, false)
        };
        for i in 0..j {
            if perm[i] <= small || perm[i] >= big {
                continue;
            }
            for &pk in &perm[j + 2..] {
                let hit = if descent {
                    // 2-41-3
                    perm[i] < pk && pk < big
                } else {
                    // 3-14-2
                    small < pk && pk < perm[i]
                };
                if hit {
                    return false;
                }
            }
        }
    }
    true
}

/// Insertion steps of the floorplan paired with a Baxter permutation:
/// repeatedly remove the maximum, which sits just before a left-to-right
/// maximum or just after a right-to-left maximum of what remains.
pub fn baxter_steps(perm: &[usize]) -> Option<Vec<Step>> {
    let mut p: Vec<usize> = perm.to_vec();
    let mut steps = Vec::new();
    while p.len() > 1 {
        let top = p.len() - 1;
        let pos = p.iter().position(|&v| v == top)?;
        p.remove(pos);
        let lr: Vec<usize> = left_to_right_maxima(&p);
        let rl: Vec<usize> = right_to_left_maxima(&p);
        if let Some(idx) = lr.iter().position(|&q| q == pos) {
            steps.push(Step::Across(lr.len() - idx));
        } else {
            let idx = rl.iter().position(|&q| pos > 0 && q == pos - 1)?;
            steps.push(Step::Down(idx + 1));
        }
    }
    steps.reverse();
    Some(steps)
}

fn left_to_right_maxima(p: &[usize]) -> Vec<usize> {
    let mut best = None;
    let mut out = Vec::new();
    for (i, &v) in p.iter().enumerate() {
        if best.is_none_or(|b| v > b) {
            best = Some(v);
            out.push(i);
        }
    }
    out
}

fn right_to_left_maxima(p: &[usize]) -> Vec<usize> {
    let mut best = None;
    let mut out = Vec::new();
    for (i, &v) in p.iter().enumerate().rev() {
        if best.is_none_or(|b| v > b) {
            best = Some(v);
            out.push(i);
        }
    }
    out.reverse();
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Every mosaic floorplan with `n` rooms, in lexicographic order of the
/// corresponding Baxter permutations.
pub fn enumerate_floorplans(n: usize) -> Result<Vec<Floorplan>, FloorplanError> {
    if n == 0 {
        return Err(FloorplanError::NoRooms);
    }
    if n > MAX_FLOORPLAN_ROOMS {
        return Err(FloorplanError::TooManyRooms(n));
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for perm in permutations(n) {
        if !is_baxter(&perm) {
            continue;
        }
        let steps = baxter_steps(&perm).ok_or(FloorplanError::Malformed)?;
        if seen.insert(steps.clone()) {
            out.push(Floorplan::from_steps(&steps)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::layout::Placement;

    #[test]
    fn baxter_counts() {
        let counts: Vec<usize> = (1..=8)
            .map(|n| permutations(n).iter().filter(|p| is_baxter(p)).count())
            .collect();
        assert_eq!(counts, vec![1, 2, 6, 22, 92, 422, 2074, 10754]);
    }

    #[test]
    fn floorplan_counts() {
        let counts: Vec<usize> = (1..=7)
            .map(|n| enumerate_floorplans(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 6, 22, 92, 422, 2074]);
        assert_eq!(
            enumerate_floorplans(9),
            Err(FloorplanError::TooManyRooms(9))
        );
    }

    #[test]
    fn steps_round_trip() {
        for n in 1..=6 {
            for fp in enumerate_floorplans(n).unwrap() {
                let steps = fp.steps().unwrap();
                assert_eq!(Floorplan::from_steps(&steps).unwrap(), fp);
                assert_eq!(fp.len(), n);
                assert_eq!(fp.verticals() + fp.horizontals(), n + 3);
            }
        }
    }

    #[test]
    fn two_rooms() {
        let fps = enumerate_floorplans(2).unwrap();
        let mut shapes: Vec<(usize, usize)> = fps
            .iter()
            .map(|f| (f.verticals(), f.horizontals()))
            .collect();
        shapes.sort();
        assert_eq!(shapes, vec![(2, 3), (3, 2)]);
    }

    #[test]
    fn bad_steps_rejected() {
        let mut fp = Floorplan::single();
        assert_eq!(
            fp.insert(Step::Across(2)),
            Err(FloorplanError::BadStep(Step::Across(2)))
        );
        assert_eq!(
            fp.insert(Step::Down(0)),
            Err(FloorplanError::BadStep(Step::Down(0)))
        );
    }

    fn grid_layout(rects: &[(i64, i64, i64, i64)], w: i64, h: i64) -> (TileSet, Layout) {
        let ts =
            TileSet::from_dims(rects.iter().map(|&(x0, y0, x1, y1)| (x1 - x0, y1 - y0))).unwrap();
        let layout = Layout {
            target_width: Rational::from(w),
            target_height: Rational::from(h),
            placements: rects
                .iter()
                .enumerate()
                .map(|(i, &(x0, y0, _, _))| Placement {
                    tile_id: i,
                    x: Rational::from(x0),
                    y: Rational::from(y0),
                    rotated: false,
                })
                .collect(),
        };
        (ts, layout)
    }

    #[test]
    fn from_layout_reads_structure() {
        // pinwheel
        let (ts, l) = grid_layout(
            &[
                (0, 0, 2, 1),
                (2, 0, 3, 2),
                (1, 2, 3, 3),
                (0, 1, 1, 3),
                (1, 1, 2, 2),
            ],
            3,
            3,
        );
        let fp = Floorplan::from_layout(&ts, &l).unwrap();
        assert_eq!(fp.len(), 5);
        assert_eq!(fp.verticals(), 4);
        assert_eq!(fp.horizontals(), 4);
        let all = enumerate_floorplans(5).unwrap();
        assert!(all.contains(&fp.canonical().unwrap()));

        let (ts, l) = grid_layout(
            &[(0, 0, 1, 1), (1, 0, 2, 1), (0, 1, 1, 2), (1, 1, 2, 2)],
            2,
            2,
        );
        assert!(matches!(
            Floorplan::from_layout(&ts, &l),
            Err(FloorplanError::CrossJunction { .. })
        ));
    }

    // ---- brute-force oracle ----------------------------------------------

    /// All dissections of the `n × n` grid into exactly `n` integer
    /// rectangles `(x0, y0, x1, y1)`, found cell by cell.
    fn grid_dissections(n: i64) -> Vec<Vec<(i64, i64, i64, i64)>> {
        fn go(
            n: i64,
            owner: &mut Vec<Vec<bool>>,
            rects: &mut Vec<(i64, i64, i64, i64)>,
            out: &mut Vec<Vec<(i64, i64, i64, i64)>>,
        ) {
            let free = (0..n * n)
                .map(|k| (k % n, k / n))
                .find(|&(x, y)| !owner[y as usize][x as usize]);
            let Some((x, y)) = free else {
                if rects.len() == n as usize {
                    out.push(rects.clone());
                }
                return;
            };
            if rects.len() == n as usize {
                return;
            }
            for x1 in x + 1..=n {
                if owner[y as usize][(x1 - 1) as usize] {
                    break;
                }
                for y1 in y + 1..=n {
                    if (x..x1).any(|c| owner[(y1 - 1) as usize][c as usize]) {
                        break;
                    }
                    for yy in y..y1 {
                        for xx in x..x1 {
                            owner[yy as usize][xx as usize] = true;
                        }
                    }
                    rects.push((x, y, x1, y1));
                    go(n, owner, rects, out);
                    rects.pop();
                    for yy in y..y1 {
                        for xx in x..x1 {
                            owner[yy as usize][xx as usize] = false;
                        }
                    }
                }
            }
        }
        let mut out = Vec::new();
        go(
            n,
            &mut vec![vec![false; n as usize]; n as usize],
            &mut Vec::new(),
            &mut out,
        );
        out
    }

    type Structure = Vec<(usize, usize, usize, usize)>;

    /// Rooms as (left, right, bottom, top) segment ids, with maximal
    /// segments grown unit by unit along grid lines. `None` on a cross.
    fn grid_structure(rects: &[(i64, i64, i64, i64)], n: i64) -> Option<Structure> {
        let mut corner_count: BTreeMap<(i64, i64), usize> = BTreeMap::new();
        for &(x0, y0, x1, y1) in rects {
            for p in [(x0, y0), (x0, y1), (x1, y0), (x1, y1)] {
                *corner_count.entry(p).or_default() += 1;
            }
        }
        if corner_count.values().any(|&c| c == 4) {
            return None;
        }
        // unit edges on vertical lines: (x, y) for the edge from (x,y) to (x,y+1)
        let mut vedges = BTreeSet::new();
        let mut hedges = BTreeSet::new();
        for &(x0, y0, x1, y1) in rects {
            for y in y0..y1 {
                vedges.insert((x0, y));
                vedges.insert((x1, y));
            }
            for x in x0..x1 {
                hedges.insert((y0, x));
                hedges.insert((y1, x));
            }
        }
        let label = |edges: &BTreeSet<(i64, i64)>| {
            let mut id: BTreeMap<(i64, i64), usize> = BTreeMap::new();
            let mut next = 2;
            for &(c, t) in edges {
                if id.contains_key(&(c, t)) {
                    continue;
                }
                let v = if c == 0 {
                    0
                } else if c == n {
                    1
                } else {
                    next += 1;
                    next - 1
                };
                let mut k = t;
                while edges.contains(&(c, k)) {
                    id.insert((c, k), v);
                    k += 1;
                }
            }
            id
        };
        let vid = label(&vedges);
        let hid = label(&hedges);
        Some(
            rects
                .iter()
                .map(|&(x0, y0, x1, y1)| {
                    (
                        vid[&(x0, y0)],
                        vid[&(x1, y0)],
                        hid[&(y0, x0)],
                        hid[&(y1, x0)],
                    )
                })
                .collect(),
        )
    }

    /// Lexicographically least relabelling over all room orders, with
    /// internal segments renumbered by first appearance.
    fn oracle_canonical(s: &Structure) -> Structure {
        let mut best: Option<Structure> = None;
        for perm in permutations(s.len()) {
            let mut vmap: BTreeMap<usize, usize> = BTreeMap::from([(0, 0), (1, 1)]);
            let mut hmap: BTreeMap<usize, usize> = BTreeMap::from([(0, 0), (1, 1)]);
            let relabel = |m: &mut BTreeMap<usize, usize>, v: usize| {
                let k = m.len();
                *m.entry(v).or_insert(k)
            };
            let cand: Structure = perm
                .iter()
                .map(|&i| {
                    let (l, r, b, t) = s[i];
                    (
                        relabel(&mut vmap, l),
                        relabel(&mut vmap, r),
                        relabel(&mut hmap, b),
                        relabel(&mut hmap, t),
                    )
                })
                .collect();
            if best.as_ref().is_none_or(|b| &cand < b) {
                best = Some(cand);
            }
        }
        best.expect("at least one room")
    }

    fn oracle_classes(n: i64) -> BTreeSet<Structure> {
        grid_dissections(n)
            .iter()
            .filter_map(|d| grid_structure(d, n))
            .map(|s| oracle_canonical(&s))
            .collect()
    }

    fn generated_classes(n: usize) -> BTreeSet<Structure> {
        enumerate_floorplans(n)
            .unwrap()
            .iter()
            .map(|fp| {
                let s: Structure = fp
                    .rooms()
                    .iter()
                    .map(|r| (r.left, r.right, r.bottom, r.top))
                    .collect();
                oracle_canonical(&s)
            })
            .collect()
    }

    #[test]
    fn matches_brute_force_oracle() {
        for n in 1..=5 {
            let oracle = oracle_classes(n as i64);
            let generated = generated_classes(n);
            assert_eq!(oracle.len(), [1, 2, 6, 22, 92][n - 1], "oracle at n = {n}");
            assert_eq!(generated, oracle, "n = {n}");
        }
    }

    #[test]
    fn oracle_structures_are_read_back_identically() {
        for d in grid_dissections(4) {
            let Some(s) = grid_structure(&d, 4) else {
                continue;
            };
            let (ts, l) = grid_layout(&d, 4, 4);
            let fp = Floorplan::from_layout(&ts, &l).unwrap();
            let mine: Structure = fp
                .rooms()
                .iter()
                .map(|r| (r.left, r.right, r.bottom, r.top))
                .collect();
            assert_eq!(oracle_canonical(&mine), oracle_canonical(&s));
            let canon = fp.canonical().unwrap();
            let back: Structure = canon
                .rooms()
                .iter()
                .map(|r| (r.left, r.right, r.bottom, r.top))
                .collect();
            assert_eq!(oracle_canonical(&back), oracle_canonical(&s));
        }
    }
}
