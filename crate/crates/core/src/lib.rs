//! Closed-form solvers for a handful of classic recreational puzzles
//! (work-rate proportions, the heavy-coin balance scale, pigeonhole draws,
//! container transfers and the station walk), each paired with an
//! independent brute-force or simulation oracle.
//!
//! Puzzles are usually described in the small `speck` language and fed
//! through [`speck::parse_puzzles`], then solved with [`report::solve`].

pub mod classics;
pub mod error;
pub mod model;
pub mod pigeonhole;
pub mod rate;
pub mod rational;
pub mod report;
pub mod speck;
pub mod sweep;
pub mod weighing;

pub use error::{Error, Result};
pub use model::{PuzzleKind, PuzzleSpec, Quantity, Unit};
pub use rational::Rational;
