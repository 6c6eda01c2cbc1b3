//! Exact Gröbner-basis machinery for the Weyl algebra `A_n(ℚ)` and for the
//! commutative ring `ℚ[X, Y]`, together with weight filtrations, the
//! characteristic ideals `Gr^ω L` of cyclic modules `W/L`, a slope fan for
//! `n = 1`, and the half-line colouring experiment.
//!
//! Everything is computed over ℚ with arbitrary-precision integers; no
//! floating point is used in any algebraic or geometric decision.

pub mod algebra;
pub mod charvar;
pub mod cli;
pub mod error;
pub mod experiment;
pub mod fan;
pub mod groebner;
pub mod json;
pub mod order;
pub mod parse;
pub mod poly;
pub mod weyl;

pub use algebra::{Algebra, RingKind, TermMap};
pub use error::{Error, Result};
pub use order::{Degree, ExpPair, OrderSpec, Weight};
pub use poly::Poly;
pub use weyl::{PolyX, WeylElement};

/// Exact scalars: reduced fractions of big integers with positive denominator.
pub type Rational = num_rational::BigRational;
