//! Exact Alexander polynomial computations for disk knots and singular
//! sphere knots.

pub mod cli;
pub mod constructions;
pub mod datum;
pub mod error;
pub mod io;
pub mod laurent;
pub mod module_algebra;
pub mod middim;
pub mod report;
pub mod sequence;

pub use error::{Error, Result};
