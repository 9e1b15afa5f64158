use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::kernel::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TileError {
    #[error("tile {id} has non-positive dimension {width} x {height}")]
    NonPositive {
        id: usize,
        width: Rational,
        height: Rational,
    },
    #[error("tile set is empty")]
    Empty,
    #[error("duplicate tile id {0}")]
    DuplicateId(usize),
    #[error("no tile with id {0}")]
    UnknownId(usize),
    #[error("split position {position} is not strictly inside (0, {extent})")]
    BadSplit {
        position: Rational,
        extent: Rational,
    },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Tile {
    pub id: usize,
    pub width: Rational,
    pub height: Rational,
}

impl Tile {
    pub fn new(id: usize, width: Rational, height: Rational) -> Result<Self, TileError> {
        if !width.is_positive() || !height.is_positive() {
            return Err(TileError::NonPositive { id, width, height });
        }
        Ok(Tile { id, width, height })
    }

    pub fn area(&self) -> Rational {
        &self.width * &self.height
    }

    pub fn semiperimeter(&self) -> Rational {
        &self.width + &self.height
    }

    pub fn perimeter(&self) -> Rational {
        self.semiperimeter() * Rational::from(2)
    }

    /// Placed extent, honouring a quarter turn.
    pub fn extent(&self, rotated: bool) -> (&Rational, &Rational) {
        if rotated {
            (&self.height, &self.width)
        } else {
            (&self.width, &self.height)
        }
    }
}

/// Which side of a tile a split cuts across.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SplitAxis {
    /// Cut parallel to the height: the width is divided.
    Width,
    /// Cut parallel to the width: the height is divided.
    Height,
}

impl FromStr for SplitAxis {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "width" | "w" | "x" => Ok(SplitAxis::Width),
            "height" | "h" | "y" => Ok(SplitAxis::Height),
            other => Err(format!(
                "unknown split axis `{other}` (use width or height)"
            )),
        }
    }
}

/// A nonempty multiset of tiles with unique ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TileSet {
    tiles: Vec<Tile>,
}

impl TileSet {
    pub fn new(tiles: Vec<Tile>) -> Result<Self, TileError> {
        if tiles.is_empty() {
            return Err(TileError::Empty);
        }
        let mut ids: Vec<usize> = tiles.iter().map(|t| t.id).collect();
        ids.sort_unstable();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(TileError::DuplicateId(w[0]));
        }
        Ok(TileSet { tiles })
    }

    /// Tiles from `(width, height)` pairs, numbered from zero.
    pub fn from_dims<I, A, B>(dims: I) -> Result<Self, TileError>
    where
        I: IntoIterator<Item = (A, B)>,
        A: Into<Rational>,
        B: Into<Rational>,
    {
        let tiles = dims
            .into_iter()
            .enumerate()
            .map(|(id, (w, h))| Tile::new(id, w.into(), h.into()))
            .collect::<Result<Vec<_>, _>>()?;
        TileSet::new(tiles)
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn get(&self, id: usize) -> Option<&Tile> {
        self.tiles.iter().find(|t| t.id == id)
    }

    pub fn total_area(&self) -> Rational {
        self.tiles.iter().map(Tile::area).sum()
    }

    /// Replaces tile `id` by its two pieces when cut at `position` along
    /// `axis`. The first piece keeps the id, the second gets a fresh one.
    pub fn split(
        &self,
        id: usize,
        axis: SplitAxis,
        position: &Rational,
    ) -> Result<Self, TileError> {
        let tile = self.get(id).ok_or(TileError::UnknownId(id))?;
        let extent = match axis {
            SplitAxis::Width => &tile.width,
            SplitAxis::Height => &tile.height,
        };
        if !position.is_positive() || position >= extent {
            return Err(TileError::BadSplit {
                position: position.clone(),
                extent: extent.clone(),
            });
        }
        let rest = extent - position;
        let (a, b) = match axis {
            SplitAxis::Width => (
                (position.clone(), tile.height.clone()),
                (rest, tile.height.clone()),
            ),
            SplitAxis::Height => (
                (tile.width.clone(), position.clone()),
                (tile.width.clone(), rest),
            ),
        };
        let fresh = self.tiles.iter().map(|t| t.id).max().unwrap_or(0) + 1;
        let mut tiles = Vec::with_capacity(self.len() + 1);
        for t in &self.tiles {
            if t.id == id {
                tiles.push(Tile::new(id, a.0.clone(), a.1.clone())?);
                tiles.push(Tile::new(fresh, b.0.clone(), b.1.clone())?);
            } else {
                tiles.push(t.clone());
            }
        }
        TileSet::new(tiles)
    }

    /// Parses the tile file format: one `WIDTH HEIGHT [COUNT]` entry per
    /// line, dimensions as decimals or `p/q`, `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, TileError> {
        let mut tiles = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let fields: Vec<&str> = body.split_whitespace().collect();
            if !(2..=3).contains(&fields.len()) {
                return Err(TileError::Parse {
                    line,
                    msg: format!(
                        "expected `WIDTH HEIGHT [COUNT]`, got {} fields",
                        fields.len()
                    ),
                });
            }
            let dim = |s: &str| {
                s.parse::<Rational>().map_err(|e| TileError::Parse {
                    line,
                    msg: e.to_string(),
                })
            };
            let (w, h) = (dim(fields[0])?, dim(fields[1])?);
            let count = match fields.get(2) {
                Some(c) => c.parse::<usize>().map_err(|_| TileError::Parse {
                    line,
                    msg: format!("bad count `{c}`"),
                })?,
                None => 1,
            };
            for _ in 0..count {
                let id = tiles.len();
                tiles.push(
                    Tile::new(id, w.clone(), h.clone()).map_err(|e| TileError::Parse {
                        line,
                        msg: e.to_string(),
                    })?,
                );
            }
        }
        TileSet::new(tiles).map_err(|e| match e {
            TileError::Empty => TileError::Parse {
                line: text.lines().count(),
                msg: "no tiles".into(),
            },
            other => other,
        })
    }
}

impl fmt::Display for TileSet {
    /// Writes the tile file format, one line per tile.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.tiles {
            writeln!(f, "{} {}", t.width, t.height)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::q;

    #[test]
    fn parses_counts_comments_and_rationals() {
        let ts = TileSet::parse("# header\n10.000000 9.500000\n1/2 3 2 # two\n\n").unwrap();
        assert_eq!(ts.len(), 3);
        assert_eq!(ts.tiles()[0].height, q(19, 2));
        assert_eq!(ts.tiles()[2].width, q(1, 2));
        assert_eq!(ts.tiles()[2].id, 2);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = TileSet::parse("1 1\n2 x\n").unwrap_err();
        assert!(matches!(e, TileError::Parse { line: 2, .. }), "{e}");
        let e = TileSet::parse("1 1\n\n1 2 3 4\n").unwrap_err();
        assert!(matches!(e, TileError::Parse { line: 3, .. }), "{e}");
        let e = TileSet::parse("1 0\n").unwrap_err();
        assert!(matches!(e, TileError::Parse { line: 1, .. }), "{e}");
        assert!(matches!(
            TileSet::parse("# nothing\n"),
            Err(TileError::Parse { .. })
        ));
    }

    #[test]
    fn split_square_in_half() {
        let ts = TileSet::from_dims([(2, 2)]).unwrap();
        let s = ts.split(0, SplitAxis::Width, &Rational::from(1)).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.tiles().iter().all(|t| t.width == 1 && t.height == 2));
        assert_eq!(s.total_area(), ts.total_area());
    }

    #[test]
    fn split_rejects_out_of_range_positions() {
        let ts = TileSet::from_dims([(1, 118)]).unwrap();
        for p in [0, 118, 200, -1] {
            assert!(matches!(
                ts.split(0, SplitAxis::Height, &Rational::from(p)),
                Err(TileError::BadSplit { .. })
            ));
        }
        assert_eq!(
            ts.split(5, SplitAxis::Height, &Rational::from(1)),
            Err(TileError::UnknownId(5))
        );
    }

    #[test]
    fn duplicate_ids_rejected() {
        let t = Tile::new(0, Rational::one(), Rational::one()).unwrap();
        assert_eq!(
            TileSet::new(vec![t.clone(), t]),
            Err(TileError::DuplicateId(0))
        );
    }
}
