//! Laurent polynomials over Q and their primitive integer representatives.

mod dense;
mod factor;
mod literal;
mod poly;
mod primitive;
mod rational_fn;

pub use factor::{factor_rational, is_reciprocal_square, ReciprocalSquare, DEFAULT_FACTOR_BOUND};
pub use literal::{parse_poly, Cursor};
pub use poly::{rat, LaurentPoly};
pub use primitive::{gcd, lcm, normalize_primitive, normalize_symmetric, primitive, similar, PrimitivePoly, Ring, Unit};
pub use rational_fn::RationalFunction;
