//! Quaternionic Kähler classes and Euler classes of the bundles over each
//! Wolf space.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::algebra::rational::{parse_rational, ratio};
use crate::algebra::{GradedPolynomial, Rational};
use crate::error::{Error, Result};

use super::presentations::presentation;
use super::space::SpaceId;

/// The degree-4 class [Ω] of the base.
pub fn quaternionic_class(space: SpaceId) -> Result<GradedPolynomial> {
    let ring = presentation(space)?;
    let text = match space {
        SpaceId::ComplexGrassmannian(_) => "l^2 - 4*x",
        SpaceId::RealGrassmannianEven(_) | SpaceId::RealGrassmannianR8 | SpaceId::RealGrassmannianOdd(_) => "l + 2*x",
        _ => ring.generators()[0].name(),
    };
    ring.parse(text)
}

/// Coefficients of an Euler class in the degree-4 basis of the base:
/// `a·l² + b·x` (complex), `a·l + b·x` (real), `a·l + b·x + c·z` (R8),
/// `a·x` on the degree-4 generator of an exceptional space. Absent
/// coefficients read as zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EulerClassSpec {
    pub a: Rational,
    pub b: Option<Rational>,
    pub c: Option<Rational>,
}

impl EulerClassSpec {
    pub fn new(a: Rational, b: Option<Rational>, c: Option<Rational>) -> Self {
        EulerClassSpec { a, b, c }
    }

    pub fn ab(a: Rational, b: Rational) -> Self {
        Self::new(a, Some(b), None)
    }

    pub fn abc(a: Rational, b: Rational, c: Rational) -> Self {
        Self::new(a, Some(b), Some(c))
    }

    pub fn scalar(a: Rational) -> Self {
        Self::new(a, None, None)
    }

    pub fn b(&self) -> Rational {
        self.b.clone().unwrap_or_else(Rational::zero)
    }

    pub fn c(&self) -> Rational {
        self.c.clone().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b().is_zero() && self.c().is_zero()
    }

    pub fn scaled(&self, s: &Rational) -> Self {
        EulerClassSpec {
            a: &self.a * s,
            b: self.b.as_ref().map(|v| v * s),
            c: self.c.as_ref().map(|v| v * s),
        }
    }

    /// Coefficients with signs dropped.
    pub fn abs(&self) -> Self {
        EulerClassSpec {
            a: self.a.abs(),
            b: self.b.as_ref().map(Signed::abs),
            c: self.c.as_ref().map(Signed::abs),
        }
    }

    /// The Euler class as a polynomial in the base presentation of `space`.
    pub fn polynomial(&self, space: SpaceId) -> Result<GradedPolynomial> {
        let ring = presentation(space)?;
        let gens = ring.generators();
        let reject = |name: &str| Err(Error::Domain(format!("coefficient `{name}` is not used for {space}")));
        let term = |coeff: Rational, text: &str| -> Result<GradedPolynomial> { Ok(ring.parse(text)?.scale(&coeff)) };
        match space {
            SpaceId::ComplexGrassmannian(_) | SpaceId::RealGrassmannianEven(_) | SpaceId::RealGrassmannianOdd(_) => {
                if self.c.is_some() {
                    return reject("c");
                }
                let lead = if matches!(space, SpaceId::ComplexGrassmannian(_)) {
                    "l^2"
                } else {
                    "l"
                };
                term(self.a.clone(), lead)?.add(&term(self.b(), "x")?)
            }
            SpaceId::RealGrassmannianR8 => term(self.a.clone(), "l")?
                .add(&term(self.b(), "x")?)?
                .add(&term(self.c(), "z")?),
            _ => {
                if self.b.is_some() {
                    return reject("b");
                }
                if self.c.is_some() {
                    return reject("c");
                }
                Ok(GradedPolynomial::var(gens, 0).scale(&self.a))
            }
        }
    }
}

impl fmt::Display for EulerClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={}", self.a)?;
        if let Some(b) = &self.b {
            write!(f, ",b={b}")?;
        }
        if let Some(c) = &self.c {
            write!(f, ",c={c}")?;
        }
        Ok(())
    }
}

impl FromStr for EulerClassSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut slots: [Option<Rational>; 3] = Default::default();
        for part in text.split(',') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected `key=value` in `{text}`")))?;
            let index = match key.trim() {
                "a" => 0,
                "b" => 1,
                "c" => 2,
                other => return Err(Error::Parse(format!("unknown coefficient `{other}`"))),
            };
            if slots[index].is_some() {
                return Err(Error::Parse(format!("coefficient `{}` given twice", key.trim())));
            }
            slots[index] = Some(parse_rational(value)?);
        }
        let [a, b, c] = slots;
        let a = a.ok_or_else(|| Error::Parse(format!("missing coefficient `a` in `{text}`")))?;
        Ok(EulerClassSpec { a, b, c })
    }
}

/// The Euler class −¼[Ω] of the homogeneous 3-Sasakian bundle.
pub fn homogeneous_euler(space: SpaceId) -> Result<EulerClassSpec> {
    space.validated()?.require_wolf()?;
    let quarter = ratio(-1, 4);
    Ok(match space {
        SpaceId::ComplexGrassmannian(_) => EulerClassSpec::ab(quarter, ratio(1, 1)),
        SpaceId::RealGrassmannianEven(_) | SpaceId::RealGrassmannianOdd(_) => EulerClassSpec::ab(quarter, ratio(-1, 2)),
        SpaceId::RealGrassmannianR8 => EulerClassSpec::abc(quarter, ratio(-1, 2), Rational::zero()),
        _ => EulerClassSpec::scalar(quarter),
    })
}

/// An Euler class as given on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EulerChoice {
    Homogeneous,
    Explicit(EulerClassSpec),
}

impl EulerChoice {
    pub fn resolve(&self, space: SpaceId) -> Result<EulerClassSpec> {
        match self {
            EulerChoice::Homogeneous => homogeneous_euler(space),
            EulerChoice::Explicit(spec) => Ok(spec.clone()),
        }
    }
}

impl FromStr for EulerChoice {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        match text.trim() {
            "homogeneous" => Ok(EulerChoice::Homogeneous),
            other => other.parse().map(EulerChoice::Explicit),
        }
    }
}

impl fmt::Display for EulerChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EulerChoice::Homogeneous => f.write_str("homogeneous"),
            EulerChoice::Explicit(spec) => spec.fmt(f),
        }
    }
}
