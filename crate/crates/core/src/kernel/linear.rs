//! Exact linear algebra over [`Rational`]: affine solution spaces of linear
//! systems and strictly positive points inside them.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinearError {
    #[error("system is infeasible (rank of augmented matrix exceeds rank of matrix)")]
    Infeasible,
    #[error("row {row} has {found} coefficients, expected {expected}")]
    RaggedRow {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("right-hand side has {found} entries for {expected} rows")]
    RhsLength { found: usize, expected: usize },
    #[error("solution space of dimension {0} exceeds the supported maximum of {MAX_SEARCH_DIM}")]
    DimensionTooLarge(usize),
}

/// Largest solution-space dimension [`positive_point`] accepts.
pub const MAX_SEARCH_DIM: usize = 8;
/// Above this dimension the positive-point search falls back to sampling.
pub const EXACT_SEARCH_DIM: usize = 3;
/// Sampling attempts in the fallback search.
pub const SAMPLING_ATTEMPTS: usize = 100_000;

/// Affine solution space `particular + Σ tᵢ·basisᵢ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamSolution {
    pub particular: Vec<Rational>,
    pub basis: Vec<Vec<Rational>>,
    pub names: Vec<String>,
}

/// An affine function `constant + Σ coeffs[k]·t_k` of the free parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Affine {
    pub constant: Rational,
    pub coeffs: Vec<Rational>,
}

impl Affine {
    pub fn eval(&self, t: &[Rational]) -> Rational {
        let mut v = self.constant.clone();
        for (c, x) in self.coeffs.iter().zip(t) {
            if !c.is_zero() {
                v += c * x;
            }
        }
        v
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn sub(&self, other: &Affine) -> Affine {
        Affine {
            constant: &self.constant - &other.constant,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl ParamSolution {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vars(&self) -> usize {
        self.particular.len()
    }

    pub fn variable(&self, i: usize) -> Affine {
        Affine {
            constant: self.particular[i].clone(),
            coeffs: self.basis.iter().map(|b| b[i].clone()).collect(),
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn point(&self, t: &[Rational]) -> Vec<Rational> {
        assert_eq!(t.len(), self.dim(), "parameter count mismatch");
        let mut x = self.particular.clone();
        for (tk, b) in t.iter().zip(&self.basis) {
            if tk.is_zero() {
                continue;
            }
            for (xi, bi) in x.iter_mut().zip(b) {
                if !bi.is_zero() {
                    *xi += tk * bi;
                }
            }
        }
        x
    }

    /// Parameters `t` with `point(t) == x`, if `x` lies in the space.
    pub fn locate(&self, x: &[Rational]) -> Option<Vec<Rational>> {
        if x.len() != self.num_vars() {
            return None;
        }
        let n = self.num_vars();
        let d = self.dim();
        // basis · t = x − particular, solved exactly
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..d).map(|k| self.basis[k][i].clone()).collect())
            .collect();
        let rhs: Vec<Rational> = (0..n).map(|i| &x[i] - &self.particular[i]).collect();
        let sol = solve_linear_exact(&rows, &rhs).ok()?;
        // The basis is independent, so the solution is unique.
        debug_assert_eq!(sol.dim(), 0);
        Some(sol.particular)
    }
}

/// Exact residual check: does `x` satisfy `rows · x = rhs`?
pub fn satisfies(rows: &[Vec<Rational>], rhs: &[Rational], x: &[Rational]) -> bool {
    rows.iter().zip(rhs).all(|(row, b)| {
        let lhs: Rational = row
            .iter()
            .zip(x)
            .filter(|(a, _)| !a.is_zero())
            .map(|(a, xi)| a * xi)
            .sum();
        &lhs == b
    })
}

/// Gaussian elimination to reduced row echelon form over the rationals.
pub fn solve_linear_exact(
    rows: &[Vec<Rational>],
    rhs: &[Rational],
) -> Result<ParamSolution, LinearError> {
    let ncols = rows.first().map_or(0, Vec::len);
    let names = (0..ncols).map(|i| format!("x{i}")).collect();
    solve_named(rows, rhs, names)
}

pub fn solve_named(
    rows: &[Vec<Rational>],
    rhs: &[Rational],
    names: Vec<String>,
) -> Result<ParamSolution, LinearError> {
    let ncols = names.len();
    if rhs.len() != rows.len() {
        return Err(LinearError::RhsLength {
            found: rhs.len(),
            expected: rows.len(),
        });
    }
    let mut m: Vec<Vec<Rational>> = Vec::with_capacity(rows.len());
    for (r, (row, b)) in rows.iter().zip(rhs).enumerate() {
        if row.len() != ncols {
            return Err(LinearError::RaggedRow {
                row: r,
                found: row.len(),
                expected: ncols,
            });
        }
        let mut aug = row.clone();
        aug.push(b.clone());
        m.push(aug);
    }

    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip().expect("pivot is nonzero");
        for v in m[r].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &(&f * pv);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[ncols].is_zero()) {
        return Err(LinearError::Infeasible);
    }

    let mut particular = vec![Rational::zero(); ncols];
    for (row, &c) in pivots.iter().enumerate() {
        particular[c] = m[row][ncols].clone();
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = -&m[row][f];
            }
            v
        })
        .collect();
    Ok(ParamSolution {
        particular,
        basis,
        names,
    })
}

/// Outcome of [`positive_point`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PositiveSearch {
    Found {
        params: Vec<Rational>,
        point: Vec<Rational>,
    },
    /// No point found. `certified` is true only for the exact low-dimensional
    /// search on a bounded region, where this proves the open region empty.
    NotFound { certified: bool },
}

impl PositiveSearch {
    pub fn point(&self) -> Option<&[Rational]> {
        match self {
            PositiveSearch::Found { point, .. } => Some(point),
            PositiveSearch::NotFound { .. } => None,
        }
    }
}

/// Half-space `a·t + b ≥ 0` in parameter space.
#[derive(Debug, Clone)]
pub(crate) struct HalfSpace {
    pub a: Vec<Rational>,
    pub b: Rational,
}

impl HalfSpace {
    fn value(&self, t: &[Rational]) -> Rational {
        Affine {
            constant: self.b.clone(),
            coeffs: self.a.clone(),
        }
        .eval(t)
    }
}

/// The strict-positivity region `{t : x_i(t) > 0 for i in vars}` of a
/// solution space, as a list of half-spaces. Returns `None` when some
/// variable is a non-positive constant, i.e. the region is trivially empty.
pub(crate) fn positivity_constraints(
    sol: &ParamSolution,
    vars: &[usize],
) -> Option<Vec<HalfSpace>> {
    let mut out = Vec::new();
    for &i in vars {
        let f = sol.variable(i);
        if f.is_constant() {
            if !f.constant.is_positive() {
                return None;
            }
            continue;
        }
        out.push(HalfSpace {
            a: f.coeffs,
            b: f.constant,
        });
    }
    Some(out)
}

/// All vertices of the closed polytope `{t : a·t + b ≥ 0}` in dimension `d`,
/// by exhaustive `d`-subset intersection. Deduplicated, sorted.
pub(crate) fn polytope_vertices(cons: &[HalfSpace], d: usize) -> Vec<Vec<Rational>> {
    let mut verts: Vec<Vec<Rational>> = Vec::new();
    if d == 0 {
        if cons.iter().all(|h| !h.b.is_negative()) {
            verts.push(Vec::new());
        }
        return verts;
    }
    let m = cons.len();
    if m < d {
        return verts;
    }
    let mut idx: Vec<usize> = (0..d).collect();
    loop {
        let rows: Vec<Vec<Rational>> = idx.iter().map(|&i| cons[i].a.clone()).collect();
        let rhs: Vec<Rational> = idx.iter().map(|&i| -&cons[i].b).collect();
        if let Ok(sol) = solve_linear_exact(&rows, &rhs) {
            if sol.dim() == 0 {
                let t = sol.particular;
                if cons.iter().all(|h| !h.value(&t).is_negative()) && !verts.contains(&t) {
                    verts.push(t);
                }
            }
        }
        // next combination
        let mut k = d;
        loop {
            if k == 0 {
                verts.sort();
                return verts;
            }
            k -= 1;
            if idx[k] < m - d + k {
                idx[k] += 1;
                for j in k + 1..d {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Whether `{t : a·t + b ≥ 0}` is bounded: its recession cone `{a·t ≥ 0}`
/// clipped to the unit box must collapse to the origin.
pub(crate) fn is_bounded(cons: &[HalfSpace], d: usize) -> bool {
    let mut cone: Vec<HalfSpace> = cons
        .iter()
        .map(|h| HalfSpace {
            a: h.a.clone(),
            b: Rational::zero(),
        })
        .collect();
    for k in 0..d {
        for sign in [1i64, -1] {
            let mut a = vec![Rational::zero(); d];
            a[k] = Rational::from(-sign);
            cone.push(HalfSpace {
                a,
                b: Rational::one(),
            });
        }
    }
    polytope_vertices(&cone, d)
        .iter()
        .all(|v| v.iter().all(Rational::is_zero))
}

pub(crate) fn strictly_inside(cons: &[HalfSpace], t: &[Rational]) -> bool {
    cons.iter().all(|h| h.value(t).is_positive())
}

/// Exact low-dimensional search. Returns the vertex set alongside the result
/// so callers can sample further interior points as convex combinations.
pub(crate) fn exact_interior(
    cons: &[HalfSpace],
    d: usize,
) -> (Option<Vec<Rational>>, Vec<Vec<Rational>>, bool) {
    let bounded = is_bounded(cons, d);
    let verts = polytope_vertices(cons, d);
    if verts.is_empty() {
        return (None, verts, bounded);
    }
    let n = Rational::from(verts.len() as i64);
    let centroid: Vec<Rational> = (0..d)
        .map(|k| verts.iter().map(|v| &v[k]).sum::<Rational>() / &n)
        .collect();
    if strictly_inside(cons, &centroid) {
        (Some(centroid), verts, bounded)
    } else {
        (None, verts, bounded)
    }
}

/// Random rational point with small denominators in `[-radius, radius]^d`.
pub(crate) fn random_rational_point(rng: &mut impl Rng, d: usize, radius: i64) -> Vec<Rational> {
    (0..d)
        .map(|_| {
            let den: i64 = rng.gen_range(1..=64);
            let num: i64 = rng.gen_range(-radius * den..=radius * den);
            Rational::new(num, den).expect("positive denominator")
        })
        .collect()
}

/// A point of the solution space whose listed coordinates are all strictly
/// positive.
///
/// Dimension ≤ 3 uses exact vertex enumeration; a miss on a bounded region
/// is a certificate of emptiness. Higher dimensions (up to 8) sample random
/// rational points and report an uncertified miss.
pub fn positive_point(
    sol: &ParamSolution,
    strict_positive_vars: &[usize],
) -> Result<PositiveSearch, LinearError> {
    positive_point_seeded(sol, strict_positive_vars, 0)
}

pub fn positive_point_seeded(
    sol: &ParamSolution,
    strict_positive_vars: &[usize],
    seed: u64,
) -> Result<PositiveSearch, LinearError> {
    let d = sol.dim();
    if d > MAX_SEARCH_DIM {
        return Err(LinearError::DimensionTooLarge(d));
    }
    let Some(cons) = positivity_constraints(sol, strict_positive_vars) else {
        return Ok(PositiveSearch::NotFound { certified: true });
    };
    if d <= EXACT_SEARCH_DIM {
        let (found, _, bounded) = exact_interior(&cons, d);
        return Ok(match found {
            Some(params) => PositiveSearch::Found {
                point: sol.point(&params),
                params,
            },
            None => PositiveSearch::NotFound { certified: bounded },
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..SAMPLING_ATTEMPTS {
        let radius = [1, 4, 16][attempt % 3];
        let t = random_rational_point(&mut rng, d, radius);
        if strictly_inside(&cons, &t) {
            return Ok(PositiveSearch::Found {
                point: sol.point(&t),
                params: t,
            });
        }
    }
    Ok(PositiveSearch::NotFound { certified: false })
}
