use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator. `Display` yields the canonical `p/q` (or `p` for integers).
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(pub alloc::string::String);

/// Parses `"p/q"` or an integer string. Zero denominators are rejected.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let t = s.trim();
    let err = || ParseRationalError(t.into());
    match t.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| err())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
            if d == BigInt::from(0) {
                return Err(err());
            }
            Ok(BigRational::new(n, d))
        }
        None => BigInt::from_str(t).map(BigRational::from_integer).map_err(|_| err()),
    }
}

/// Shorthand for `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(n.into(), d.into())
}
