//! Exact size-3 set cover for planar rectangles, rectilinear discrete 3-center,
//! brute-force reference solvers, and generators for hardness constructions.

pub mod bench;
#[cfg(feature = "cli")]
pub mod cli;
pub mod cover3;
pub mod error;
pub mod gen;
pub mod geom;
pub mod grid;
pub mod io;
pub mod kcenter;
pub mod oracles;
pub mod pair_oracle;
pub mod planar;
pub mod range_index;
pub mod reductions;
pub mod wavelet;

pub use error::{Error, Result};
pub use geom::{ExtRect, ExtScalar, Interval, PointD, Rational};
