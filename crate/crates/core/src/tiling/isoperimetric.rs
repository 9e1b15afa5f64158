//! Isoperimetric tile sets: dissections of a rectangle into rectangles that
//! share one perimeter but have pairwise different areas.
//!
//! For a fixed floorplan the segment coordinates, room sizes and the common
//! semiperimeter `s` satisfy a linear system. Room areas are quadratic on its
//! solution space, so two rooms either have equal area everywhere on it (the
//! difference polynomial vanishes identically) or only on a null set. A
//! nonempty open positivity region with no identically equal pair therefore
//! almost surely yields a witness at a random interior point.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::kernel::linear::{
    exact_interior, positivity_constraints, random_rational_point, solve_named, strictly_inside,
    Affine, LinearError, ParamSolution, EXACT_SEARCH_DIM, MAX_SEARCH_DIM,
};
use crate::kernel::Rational;

use super::floorplan::{
    enumerate_floorplans, Floorplan, FloorplanError, Step, BOTTOM_WALL, LEFT_WALL, RIGHT_WALL,
    TOP_WALL,
};
use super::layout::{verify_layout, Layout, Placement};
use super::tiles::TileSet;

pub const DEFAULT_SAMPLES: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error(transparent)]
    Floorplan(#[from] FloorplanError),
    #[error(transparent)]
    Linear(#[from] LinearError),
    #[error("witness for floorplan {0} failed layout verification")]
    BadWitness(usize),
}

#[derive(Debug, Clone)]
pub struct IsoOptions {
    pub samples: usize,
    pub seed: u64,
}

impl Default for IsoOptions {
    fn default() -> Self {
        IsoOptions {
            samples: DEFAULT_SAMPLES,
            seed: 0,
        }
    }
}

/// Variable layout of the isoperimetric system of a floorplan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsoVars {
    pub verticals: usize,
    pub horizontals: usize,
    pub rooms: usize,
}

impl IsoVars {
    pub fn of(fp: &Floorplan) -> Self {
        IsoVars {
            verticals: fp.verticals(),
            horizontals: fp.horizontals(),
            rooms: fp.len(),
        }
    }
    pub fn x(&self, v: usize) -> usize {
        v
    }
    pub fn y(&self, h: usize) -> usize {
        self.verticals + h
    }
    pub fn w(&self, i: usize) -> usize {
        self.verticals + self.horizontals + i
    }
    pub fn h(&self, i: usize) -> usize {
        self.verticals + self.horizontals + self.rooms + i
    }
    pub fn s(&self) -> usize {
        self.verticals + self.horizontals + 2 * self.rooms
    }
    pub fn count(&self) -> usize {
        self.s() + 1
    }
    pub fn names(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(self.count());
        out.extend((0..self.verticals).map(|v| format!("x{v}")));
        out.extend((0..self.horizontals).map(|h| format!("y{h}")));
        out.extend((0..self.rooms).map(|i| format!("w{i}")));
        out.extend((0..self.rooms).map(|i| format!("h{i}")));
        out.push("s".into());
        out
    }
}

/// Rows and right-hand side of the system: walls at 0, room sizes as
/// coordinate differences, `wᵢ + hᵢ = s`, `s = 1`.
pub fn isoperimetric_system(fp: &Floorplan) -> (IsoVars, Vec<Vec<Rational>>, Vec<Rational>) {
    let vars = IsoVars::of(fp);
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    let mut eq = |terms: &[(usize, i64)], b: i64| {
        let mut row = vec![Rational::zero(); vars.count()];
        for &(k, c) in terms {
            row[k] += &Rational::from(c);
        }
        rows.push(row);
        rhs.push(Rational::from(b));
    };
    eq(&[(vars.x(LEFT_WALL), 1)], 0);
    eq(&[(vars.y(BOTTOM_WALL), 1)], 0);
    for (i, r) in fp.rooms().iter().enumerate() {
        eq(
            &[(vars.w(i), 1), (vars.x(r.right), -1), (vars.x(r.left), 1)],
            0,
        );
        eq(
            &[(vars.h(i), 1), (vars.y(r.top), -1), (vars.y(r.bottom), 1)],
            0,
        );
        eq(&[(vars.w(i), 1), (vars.h(i), 1), (vars.s(), -1)], 0);
    }
    eq(&[(vars.s(), 1)], 1);
    (vars, rows, rhs)
}

pub fn solve_isoperimetric(fp: &Floorplan) -> Result<ParamSolution, LinearError> {
    let (vars, rows, rhs) = isoperimetric_system(fp);
    solve_named(&rows, &rhs, vars.names())
}

/// `constant + Σ linear_k t_k + Σ_{k≤l} quad[k][l] t_k t_l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quadratic {
    pub constant: Rational,
    pub linear: Vec<Rational>,
    pub quad: Vec<Vec<Rational>>,
}

impl Quadratic {
    pub fn product(a: &Affine, b: &Affine) -> Self {
        let d = a.coeffs.len();
        let mut quad = vec![vec![Rational::zero(); d]; d];
        for k in 0..d {
            for l in k..d {
                quad[k][l] = if k == l {
                    &a.coeffs[k] * &b.coeffs[k]
                } else {
                    &a.coeffs[k] * &b.coeffs[l] + &a.coeffs[l] * &b.coeffs[k]
                };
            }
        }
        Quadratic {
            constant: &a.constant * &b.constant,
            linear: (0..d)
                .map(|k| &a.constant * &b.coeffs[k] + &b.constant * &a.coeffs[k])
                .collect(),
            quad,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero()
            && self.linear.iter().all(Rational::is_zero)
            && self.quad.iter().flatten().all(Rational::is_zero)
    }

    pub fn sub(&self, o: &Quadratic) -> Quadratic {
        Quadratic {
            constant: &self.constant - &o.constant,
            linear: self
                .linear
                .iter()
                .zip(&o.linear)
                .map(|(a, b)| a - b)
                .collect(),
            quad: self
                .quad
                .iter()
                .zip(&o.quad)
                .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a - b).collect())
                .collect(),
        }
    }
}

/// Room areas as quadratics in the free parameters.
pub fn area_polynomials(vars: &IsoVars, sol: &ParamSolution) -> Vec<Quadratic> {
    (0..vars.rooms)
        .map(|i| Quadratic::product(&sol.variable(vars.w(i)), &sol.variable(vars.h(i))))
        .collect()
}

/// Pairs of rooms whose areas agree on the whole solution space.
pub fn forced_equal_pairs(vars: &IsoVars, sol: &ParamSolution) -> Vec<(usize, usize)> {
    let areas = area_polynomials(vars, sol);
    let mut out = Vec::new();
    for a in 0..areas.len() {
        for b in a + 1..areas.len() {
            if areas[a].sub(&areas[b]).is_zero() {
                out.push((a, b));
            }
        }
    }
    out
}

/// Tiles of pairwise different areas and one semiperimeter, with their
/// dissection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoWitness {
    pub floorplan: usize,
    pub steps: Vec<Step>,
    pub tiles: TileSet,
    pub layout: Layout,
    pub areas: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum FloorplanVerdict {
    Witness(Box<IsoWitness>),
    /// Fewer than two rooms: distinct areas are impossible by definition.
    TooFewRooms,
    /// Rooms `a` and `b` have equal area at every realisation.
    ForcedEqual {
        a: usize,
        b: usize,
    },
    /// No realisation with positive room sizes; `certified` when proved.
    Empty {
        certified: bool,
    },
    /// Realisations exist but every sample repeated an area.
    NoDistinctSample,
}

impl FloorplanVerdict {
    pub fn rules_out(&self) -> bool {
        matches!(
            self,
            FloorplanVerdict::TooFewRooms
                | FloorplanVerdict::ForcedEqual { .. }
                | FloorplanVerdict::Empty { certified: true }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum IsoOutcome {
    Witnesses {
        witnesses: Vec<IsoWitness>,
    },
    ExhaustedNoSolution,
    /// Floorplans (by index) neither ruled out nor solved.
    Inconclusive {
        residual: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub rooms: usize,
    pub floorplans: usize,
    pub verdicts: Vec<FloorplanVerdict>,
    pub outcome: IsoOutcome,
}

/// Examines one floorplan.
pub fn examine_floorplan(
    index: usize,
    fp: &Floorplan,
    opts: &IsoOptions,
) -> Result<FloorplanVerdict, IsoError> {
    if fp.len() < 2 {
        return Ok(FloorplanVerdict::TooFewRooms);
    }
    let (vars, rows, rhs) = isoperimetric_system(fp);
    let sol = match solve_named(&rows, &rhs, vars.names()) {
        Ok(s) => s,
        Err(LinearError::Infeasible) => return Ok(FloorplanVerdict::Empty { certified: true }),
        Err(e) => return Err(e.into()),
    };
    if let Some(&(a, b)) = forced_equal_pairs(&vars, &sol).first() {
        return Ok(FloorplanVerdict::ForcedEqual { a, b });
    }
    let d = sol.dim();
    if d > MAX_SEARCH_DIM {
        return Err(LinearError::DimensionTooLarge(d).into());
    }
    let positive: Vec<usize> = (0..vars.rooms)
        .flat_map(|i| [vars.w(i), vars.h(i)])
        .collect();
    let Some(cons) = positivity_constraints(&sol, &positive) else {
        return Ok(FloorplanVerdict::Empty { certified: true });
    };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ (index as u64).wrapping_mul(0x9E37_79B9));
    let mut samples: Box<dyn FnMut(&mut ChaCha8Rng) -> Option<Vec<Rational>>> =
        if d <= EXACT_SEARCH_DIM {
            let (centroid, verts, bounded) = exact_interior(&cons, d);
            let Some(centroid) = centroid else {
                return Ok(FloorplanVerdict::Empty { certified: bounded });
            };
            let mut first = Some(centroid);
            Box::new(move |rng| {
                first.take().or_else(|| {
                    let weights: Vec<i64> = verts.iter().map(|_| rng.gen_range(1..=64)).collect();
                    let total = Rational::from(weights.iter().sum::<i64>());
                    Some(
                        (0..d)
                            .map(|k| {
                                verts
                                    .iter()
                                    .zip(&weights)
                                    .map(|(v, &wt)| &v[k] * Rational::from(wt))
                                    .sum::<Rational>()
                                    / &total
                            })
                            .collect(),
                    )
                })
            })
        } else {
            let cons = cons.clone();
            let mut attempt = 0usize;
            Box::new(move |rng| {
                attempt += 1;
                let t = random_rational_point(rng, d, [1, 4, 16][attempt % 3]);
                strictly_inside(&cons, &t).then_some(t)
            })
        };
    let mut any_interior = false;
    for _ in 0..opts.samples {
        let Some(t) = samples(&mut rng) else { continue };
        any_interior = true;
        let x = sol.point(&t);
        let areas: Vec<Rational> = (0..vars.rooms)
            .map(|i| &x[vars.w(i)] * &x[vars.h(i)])
            .collect();
        let mut sorted = areas.clone();
        sorted.sort();
        if sorted.windows(2).any(|p| p[0] == p[1]) {
            continue;
        }
        let tiles = TileSet::from_dims(
            (0..vars.rooms).map(|i| (x[vars.w(i)].clone(), x[vars.h(i)].clone())),
        )
        .map_err(|_| IsoError::BadWitness(index))?;
        let layout = Layout {
            target_width: x[vars.x(RIGHT_WALL)].clone(),
            target_height: x[vars.y(TOP_WALL)].clone(),
            placements: fp
                .rooms()
                .iter()
                .enumerate()
                .map(|(i, r)| Placement {
                    tile_id: i,
                    x: x[vars.x(r.left)].clone(),
                    y: x[vars.y(r.bottom)].clone(),
                    rotated: false,
                })
                .collect(),
        };
        if !verify_layout(&tiles, &layout).is_valid() {
            return Err(IsoError::BadWitness(index));
        }
        return Ok(FloorplanVerdict::Witness(Box::new(IsoWitness {
            floorplan: index,
            steps: fp.steps()?,
            tiles,
            layout,
            areas,
        })));
    }
    Ok(if any_interior {
        FloorplanVerdict::NoDistinctSample
    } else {
        FloorplanVerdict::Empty { certified: false }
    })
}

/// Runs [`examine_floorplan`] over every floorplan with `n` rooms.
pub fn search_isoperimetric(n: usize, opts: &IsoOptions) -> Result<IsoReport, IsoError> {
    let fps = enumerate_floorplans(n)?;
    let verdicts = fps
        .par_iter()
        .enumerate()
        .map(|(i, fp)| examine_floorplan(i, fp, opts))
        .collect::<Result<Vec<_>, _>>()?;
    let witnesses: Vec<IsoWitness> = verdicts
        .iter()
        .filter_map(|v| match v {
            FloorplanVerdict::Witness(w) => Some((**w).clone()),
            _ => None,
        })
        .collect();
    let residual: Vec<usize> = verdicts
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.rules_out() && !matches!(v, FloorplanVerdict::Witness(_)))
        .map(|(i, _)| i)
        .collect();
    let outcome = if !witnesses.is_empty() {
        IsoOutcome::Witnesses { witnesses }
    } else if residual.is_empty() {
        IsoOutcome::ExhaustedNoSolution
    } else {
        IsoOutcome::Inconclusive { residual }
    };
    Ok(IsoReport {
        rooms: n,
        floorplans: fps.len(),
        verdicts,
        outcome,
    })
}
