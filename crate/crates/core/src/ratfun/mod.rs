//! Exact polynomial and rational-function arithmetic over ℚ.

mod func;
mod partial;
mod poly;

use num_bigint::BigInt;
use thiserror::Error;

pub use func::RationalFunction;
pub use partial::{partial_fractions, rational_roots, PartialFractionForm, PartialFractionTerm};
pub use poly::{is_squarefree, poly_gcd, Polynomial};

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RatFunError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by the zero function")]
    DivisionByZeroFunction,
    #[error("rational function is not proper (numerator degree exceeds denominator degree)")]
    NotProper,
    #[error("denominator factor {0} has no rational roots")]
    NonSplittingDenominator(Polynomial),
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("invalid rational literal `{0}`")]
    BadRational(String),
}

/// Builds `num/den` in canonical form.
pub fn rf_normalize(num: Polynomial, den: Polynomial) -> Result<RationalFunction, RatFunError> {
    RationalFunction::new(num, den)
}

/// Parses `p`, `-p` or `p/q` with integer `p`, `q` and `q ≠ 0`.
pub fn parse_rational(s: &str) -> Result<Rational, RatFunError> {
    let bad = || RatFunError::BadRational(s.to_string());
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Serde adapter writing a [`Rational`] as a `"p/q"` string.
pub mod rational_string {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use super::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let raw = String::deserialize(d)?;
        parse_rational(&raw).map_err(D::Error::custom)
    }
}
