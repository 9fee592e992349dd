//! The σ-classes of the Grassmannians.
//!
//! Complex variant, in `l` (degree 2) and `x` (degree 4):
//! σ₀ = 1, σ₁ = −l, σ_r = −l·σ_{r−1} − x·σ_{r−2}.
//! Real variant, in `l` and `x` both of degree 4: the same recursion with
//! `x²` in place of `x`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::algebra::poly::Generators;
use crate::algebra::{Generator, GradedPolynomial, Monomial, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SigmaVariant {
    Complex,
    Real,
}

/// The two-generator list `[l, x]` the σ-classes of a variant live in.
pub fn sigma_generators(variant: SigmaVariant) -> Generators {
    static COMPLEX: OnceLock<Generators> = OnceLock::new();
    static REAL: OnceLock<Generators> = OnceLock::new();
    match variant {
        SigmaVariant::Complex => COMPLEX
            .get_or_init(|| vec![Generator::new("l", 2), Generator::new("x", 4)].into())
            .clone(),
        SigmaVariant::Real => REAL
            .get_or_init(|| vec![Generator::new("l", 4), Generator::new("x", 4)].into())
            .clone(),
    }
}

fn check_index(r: i64) -> Result<usize> {
    usize::try_from(r).map_err(|_| Error::Domain(format!("σ index must be nonnegative, got {r}")))
}

/// σ_0, …, σ_upto by the recursion, expressed through the given `l` and `x`.
pub(crate) fn sigma_sequence(
    l: &GradedPolynomial,
    x: &GradedPolynomial,
    upto: usize,
    variant: SigmaVariant,
) -> Vec<GradedPolynomial> {
    let gens = l.generators();
    let step = match variant {
        SigmaVariant::Complex => x.clone(),
        SigmaVariant::Real => x.pow(2),
    };
    let mut out = vec![GradedPolynomial::one(gens), l.neg()];
    while out.len() <= upto {
        let n = out.len();
        let next = l
            .mul(&out[n - 1])
            .and_then(|a| step.mul(&out[n - 2]).and_then(|b| a.add(&b)))
            .expect("same generators")
            .neg();
        out.push(next);
    }
    out.truncate(upto + 1);
    out
}

/// σ_r (complex) or σ̃_r (real), computed by the recursion.
pub fn sigma(r: i64, variant: SigmaVariant) -> Result<GradedPolynomial> {
    let r = check_index(r)?;
    let gens = sigma_generators(variant);
    let l = GradedPolynomial::var(&gens, 0);
    let x = GradedPolynomial::var(&gens, 1);
    Ok(sigma_sequence(&l, &x, r, variant).pop().expect("nonempty"))
}

/// The binomial closed form
/// Σ_k (−1)^(r+k) C(r−k, k) l^(r−2k) x^k, with x^(2k) for the real variant.
pub fn sigma_closed(r: i64, variant: SigmaVariant) -> Result<GradedPolynomial> {
    let r = check_index(r)?;
    let gens = sigma_generators(variant);
    let x_power = match variant {
        SigmaVariant::Complex => 1,
        SigmaVariant::Real => 2,
    };
    let terms = (0..=r / 2).map(|k| {
        let sign = if (r + k) % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        let c = sign * binomial(BigInt::from(r - k), BigInt::from(k));
        let m = Monomial::new(vec![(r - 2 * k) as u32, (x_power * k) as u32]);
        (m, Rational::from_integer(c))
    });
    Ok(GradedPolynomial::from_terms(&gens, terms))
}

/// Checks the generating function: (1 + l·t + x^e·t²) · Σ_{r ≤ order} σ_r t^r
/// equals 1 up to O(t^(order+1)), where e = 2 for the real variant and 1 for
/// the complex one. The series coefficients come from the closed form, so
/// this is independent of the recursion.
pub fn sigma_series_check(order: u32, variant: SigmaVariant) -> Result<bool> {
    if order == 0 {
        return Err(Error::Domain("series order must be at least 1".into()));
    }
    let gens = sigma_generators(variant);
    let l = GradedPolynomial::var(&gens, 0);
    let x = GradedPolynomial::var(&gens, 1);
    let quad = match variant {
        SigmaVariant::Complex => x,
        SigmaVariant::Real => x.pow(2),
    };
    let series: Vec<GradedPolynomial> = (0..=order as i64)
        .map(|r| sigma_closed(r, variant))
        .collect::<Result<_>>()?;
    let zero = GradedPolynomial::zero(&gens);
    for j in 0..=order as usize {
        let mut coeff = series[j].clone();
        if j >= 1 {
            coeff = coeff.add(&l.mul(&series[j - 1])?)?;
        }
        if j >= 2 {
            coeff = coeff.add(&quad.mul(&series[j - 2])?)?;
        }
        let expected = if j == 0 {
            GradedPolynomial::one(&gens)
        } else {
            zero.clone()
        };
        if coeff != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rational value of `σ` at `l = 1`, `x = value`, used by divisibility tests.
pub(crate) fn evaluate_at_unit_l(p: &GradedPolynomial, value: &Rational) -> Rational {
    p.terms().fold(Rational::zero(), |acc, (m, c)| {
        let e = m.exponents()[1];
        acc + c * num_traits::pow(value.clone(), e as usize)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(variant: SigmaVariant, text: &str) -> GradedPolynomial {
        GradedPolynomial::parse(&sigma_generators(variant), text).unwrap()
    }

    #[test]
    fn first_values() {
        use SigmaVariant::*;
        assert_eq!(sigma(0, Real).unwrap(), parse(Real, "1"));
        assert_eq!(sigma(1, Complex).unwrap(), parse(Complex, "-l"));
        assert_eq!(sigma(2, Complex).unwrap(), parse(Complex, "l^2 - x"));
        assert_eq!(sigma(3, Complex).unwrap(), parse(Complex, "-l^3 + 2*l*x"));
        assert_eq!(sigma(4, Complex).unwrap(), parse(Complex, "l^4 - 3*l^2*x + x^2"));
        assert_eq!(sigma(2, Real).unwrap(), parse(Real, "l^2 - x^2"));
    }

    #[test]
    fn closed_form_values() {
        use SigmaVariant::*;
        assert_eq!(sigma_closed(3, Complex).unwrap(), parse(Complex, "-l^3 + 2*l*x"));
        assert_eq!(sigma_closed(4, Complex).unwrap(), parse(Complex, "l^4 - 3*l^2*x + x^2"));
        assert_eq!(sigma_closed(2, Real).unwrap(), parse(Real, "l^2 - x^2"));
    }

    #[test]
    fn degrees() {
        assert_eq!(sigma(5, SigmaVariant::Complex).unwrap().degree(), Some(10));
        assert_eq!(sigma(5, SigmaVariant::Real).unwrap().degree(), Some(20));
    }

    #[test]
    fn negative_index_is_domain_error() {
        assert!(matches!(sigma(-1, SigmaVariant::Complex), Err(Error::Domain(_))));
        assert!(matches!(sigma_closed(-2, SigmaVariant::Real), Err(Error::Domain(_))));
    }

    #[test]
    fn series_identity() {
        for order in [1, 5, 12] {
            assert!(sigma_series_check(order, SigmaVariant::Real).unwrap());
            assert!(sigma_series_check(order, SigmaVariant::Complex).unwrap());
        }
        assert!(sigma_series_check(0, SigmaVariant::Real).is_err());
    }
}
