//! When does a linear class `a·l + b·x` divide σ̃_r?

use num_traits::{Signed, Zero};

use crate::algebra::Rational;
use crate::error::{Error, Result};

use super::sigma::{evaluate_at_unit_l, sigma, SigmaVariant};

fn check(a: &Rational, b: &Rational, r: i64) -> Result<()> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::Domain("a·l + b·x must be nonzero".into()));
    }
    if r < 0 {
        return Err(Error::Domain(format!("σ index must be nonnegative, got {r}")));
    }
    Ok(())
}

/// Decides divisibility by substitution. For b ≠ 0 the linear factor
/// vanishes on x = −(a/b)·l, and σ̃_r is homogeneous, so σ̃_r(l, −(a/b)l) is
/// a multiple of l^r whose coefficient must vanish. For b = 0 the factor is
/// l and σ̃_r(0, x) must vanish.
pub fn divides_linear_bruteforce(a: &Rational, b: &Rational, r: i64) -> Result<bool> {
    check(a, b, r)?;
    let s = sigma(r, SigmaVariant::Real)?;
    if b.is_zero() {
        return Ok(s.terms().all(|(m, _)| m.exponents()[0] > 0));
    }
    Ok(evaluate_at_unit_l(&s, &(-(a / b))).is_zero())
}

/// The closed criterion: `b = 0` with `r` odd, or `|a| = |b|` with
/// `r ≡ 2 (mod 3)`.
pub fn divides_linear_criterion(a: &Rational, b: &Rational, r: i64) -> Result<bool> {
    check(a, b, r)?;
    Ok((b.is_zero() && r % 2 == 1) || (a.abs() == b.abs() && r % 3 == 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    #[test]
    fn examples() {
        assert!(divides_linear_bruteforce(&int(1), &int(0), 3).unwrap());
        assert!(divides_linear_bruteforce(&int(1), &int(1), 2).unwrap());
        assert!(!divides_linear_criterion(&int(1), &int(0), 4).unwrap());
        assert!(divides_linear_criterion(&int(-2), &int(2), 5).unwrap());
        assert!(!divides_linear_criterion(&int(1), &int(1), 3).unwrap());
        for r in 0..=20 {
            assert!(!divides_linear_bruteforce(&int(1), &int(2), r).unwrap());
        }
    }

    #[test]
    fn zero_divisor_rejected() {
        assert!(matches!(
            divides_linear_bruteforce(&int(0), &int(0), 3),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            divides_linear_criterion(&int(0), &int(0), 3),
            Err(Error::Domain(_))
        ));
        assert!(divides_linear_criterion(&int(1), &int(1), -1).is_err());
    }
}
