//! Shared numeric and geometric primitives: exact rationals and linear
//! solving, plus a float kernel for convex polygons and support functions.

pub mod linear;
pub mod point;
pub mod polygon;
pub mod rational;
pub mod support;

pub use linear::{
    positive_point, solve_linear_exact, Affine, LinearError, ParamSolution, PositiveSearch,
};
pub use point::Vec2;
pub use polygon::{ConvexPolygon, PolygonError, PolygonMetrics};
pub use rational::{q, Rational, RationalError};
pub use support::{reuleaux_support, SupportBody, SupportError, SupportMetrics};
