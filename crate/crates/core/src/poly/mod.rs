//! Polynomials over `Q`, graded pieces and exact elimination.

pub mod field;
pub mod linalg;
pub mod monomial;
pub mod piece;
pub mod polynomial;

/// Exact rationals; always reduced with positive denominator.
pub type Rational = num_rational::BigRational;

pub use field::{Cyclo5, Scalar};
pub use linalg::{exact_rank, nullspace, rank_cyclo, Echelon};
pub use monomial::{monomial_basis, Monomial, MonomialBasis};
pub use piece::{graded_dim, multiply_span, GradedPiece};
pub use polynomial::{euler_check, Poly};

/// Parses a rational literal such as `-3/4` or `5`.
pub fn parse_rational(s: &str) -> crate::error::Result<Rational> {
    let s = s.trim();
    let bad = || crate::error::Error::Parse(format!("bad rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: num_bigint::BigInt = n.parse().map_err(|_| bad())?;
    let d: num_bigint::BigInt = d.parse().map_err(|_| bad())?;
    if num_traits::Zero::is_zero(&d) {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}
