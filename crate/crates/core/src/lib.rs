//! Geometry exploration toolkit: exact rectangle dissections and layout
//! counting, straight-cut partitions of convex regions, extremal shapes at
//! fixed area and perimeter, and face-set invariants of polyhedra.

pub mod extremal;
pub mod fair;
pub mod kernel;
pub mod polyhedra;
pub mod tiling;

pub use kernel::{ConvexPolygon, Rational, SupportBody, Vec2};
