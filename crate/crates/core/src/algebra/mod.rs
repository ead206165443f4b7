//! Exact scalar arithmetic: arbitrary-precision rationals and sparse
//! multivariate polynomials over the rationals.
//!
//! Every weight, minor and identity in this crate is computed in this
//! module's types; there is no floating point anywhere. Polynomials are
//! stored sparsely with a graded-lexicographic term order, so equality of
//! symbolic expressions is structural equality of canonical forms.

mod fraction;
mod parse;
mod poly;

pub use fraction::Fraction;
pub use parse::{parse_poly, parse_rat};
pub use poly::{render_rat, Monomial, Poly, Var};

use num::BigRational;
use rand::Rng;

/// An exact rational number (arbitrary precision, canonical form).
pub type Rat = BigRational;

/// Rational from an integer pair; panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    use num::BigInt;
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Seeded positive rationals with numerator and denominator in `[1, 100]`,
/// used for all randomized-but-reproducible checks.
pub fn random_positive_rat<R: Rng>(rng: &mut R) -> Rat {
    let num = rng.gen_range(1..=100i64);
    let den = rng.gen_range(1..=100i64);
    rat(num, den)
}
