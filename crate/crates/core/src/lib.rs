//! Exact h-vector calculus for codimension-3 arithmetically Gorenstein
//! zero-schemes in P^3.
//!
//! * [`hvector`]: the h-vector type, C2/G3 admissibility, standard constructions.
//! * [`liaison`]: G-liaison, elementary biliaison, `mH - K` divisors, CI descent.
//! * [`dimension`]: `dim PGor(h)`, `dim ACM(h)`, genus bounds, point budgets.
//! * [`theorems`]: descent verdicts for general points and glicci chains.
//! * [`catalog`]: enumeration of AG h-vectors and the degree-30 table.

pub mod catalog;
pub mod dimension;
pub mod error;
pub mod hvector;
pub mod liaison;
pub mod theorems;

pub use error::{Error, Result};
pub use hvector::HVector;
