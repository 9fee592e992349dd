//! Exact rational scalars.
//!
//! `BigRational` keeps every value in lowest terms with a positive
//! denominator, so the invariants of the scalar type come for free.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `numer/denom`; panics on a zero denominator.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    assert!(denom != 0, "zero denominator");
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `p/q` or a bare integer, with optional sign.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("invalid rational `{text}`"));
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{text}`")));
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = text.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
    }
}

/// Bit size of numerator plus denominator; the pivot heuristic prefers
/// small entries.
pub(crate) fn bit_size(q: &Rational) -> u64 {
    q.numer().bits() + q.denom().bits()
}

pub(crate) fn is_unit(q: &Rational) -> bool {
    q.abs().is_one()
}
