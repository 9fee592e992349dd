//! Formality of sphere bundles over Wolf spaces.
//!
//! Formal verdicts carry the tag of the result that decides them.
//! Non-formal verdicts carry a triple Massey product computed in the model,
//! which must be defined and non-trivial.

use std::fmt;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::algebra::rational::{int, ratio};
use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::massey::{triple_massey, MasseyOutcome, MasseyResult};
use crate::model::BundleModel;
use crate::rings::{presentation, EulerClassSpec, SpaceId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Justification {
    Thm4_3,
    Thm4_4,
    Thm5_4,
    Thm5_5,
    Thm5_6,
    Sec6,
    ProductModel,
    SphereRP,
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Justification::Thm4_3 => "Thm4.3",
            Justification::Thm4_4 => "Thm4.4",
            Justification::Thm5_4 => "Thm5.4",
            Justification::Thm5_5 => "Thm5.5",
            Justification::Thm5_6 => "Thm5.6",
            Justification::Sec6 => "Sec6",
            Justification::ProductModel => "ProductModel",
            Justification::SphereRP => "SphereRP",
        })
    }
}

/// The table lookup behind a verdict, before any Massey computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub formal: bool,
    pub justification: Justification,
    /// The three classes of the witnessing Massey product, as polynomials in
    /// the base generators. Present iff the verdict is non-formal.
    pub witness: Option<[String; 3]>,
}

impl Decision {
    fn formal(justification: Justification) -> Self {
        Decision {
            formal: true,
            justification,
            witness: None,
        }
    }

    fn non_formal(justification: Justification, witness: [String; 3]) -> Self {
        Decision {
            formal: false,
            justification,
            witness: Some(witness),
        }
    }
}

/// A Massey product that certifies non-formality.
#[derive(Debug, Clone)]
pub struct Witness {
    pub classes: [String; 3],
    pub result: MasseyResult,
}

#[derive(Debug, Clone)]
pub struct Verdict {
    pub space: SpaceId,
    pub euler: EulerClassSpec,
    pub formal: bool,
    pub justification: Justification,
    pub witness: Option<Witness>,
}

fn sign(q: &Rational) -> i64 {
    if q.is_negative() {
        -1
    } else {
        1
    }
}

/// ξ₁ = l − x + z and ξ₂ = −l − x + z, transported along the automorphism
/// l ↦ ±l, x ↦ ±x, z ↦ ±z that carries |a|·l + |b|·x + |c|·z to the given
/// Euler class.
pub fn xi_classes(spec: &EulerClassSpec) -> [String; 2] {
    let (sa, sb, sc) = (sign(&spec.a), sign(&spec.b()), sign(&spec.c()));
    let ring = presentation(SpaceId::RealGrassmannianR8).expect("built-in presentation");
    let xi = |l: i64| {
        let terms = [(l, "l"), (-sb, "x"), (sc, "z")]
            .map(|(coeff, name)| ring.generator(name).expect("generator").scale(&int(coeff)));
        let [p, q, r] = terms;
        p.add(&q).and_then(|s| s.add(&r)).expect("same generators").to_string()
    };
    [xi(sa), xi(-sa)]
}

/// Looks up the verdict for `space` and `spec` without computing anything.
pub fn decide(space: SpaceId, spec: &EulerClassSpec) -> Result<Decision> {
    let space = space.validated()?;
    if !space.is_wolf() {
        return Ok(Decision::formal(Justification::SphereRP));
    }
    spec.polynomial(space)?;
    if spec.is_zero() {
        return Ok(Decision::formal(Justification::ProductModel));
    }
    let (a, b, c) = (spec.a.abs(), spec.b().abs(), spec.c().abs());
    Ok(match space {
        SpaceId::ComplexGrassmannian(n) => {
            if !b.is_zero() {
                Decision::formal(Justification::Thm4_3)
            } else if n % 2 == 1 {
                Decision::formal(Justification::Thm4_4)
            } else {
                let power = if n == 2 {
                    "x".to_string()
                } else {
                    format!("x^{}", n / 2)
                };
                Decision::non_formal(Justification::Thm4_4, ["l".into(), "l".into(), power])
            }
        }
        SpaceId::RealGrassmannianEven(m) => {
            let odd_case = m % 2 == 1 && b.is_zero() && !a.is_zero();
            let mod3_case = m % 3 == 2 && a == b && !a.is_zero();
            if odd_case || mod3_case {
                Decision::non_formal(Justification::Thm5_4, ["x".into(), "z".into(), "z".into()])
            } else {
                Decision::formal(Justification::Thm5_4)
            }
        }
        SpaceId::RealGrassmannianR8 => {
            let [xi1, xi2] = xi_classes(spec);
            if a == b && !a.is_zero() && c != a {
                Decision::non_formal(Justification::Thm5_5, [xi2.clone(), xi2, xi1])
            } else if a == c && !a.is_zero() && b != a {
                Decision::non_formal(Justification::Thm5_5, [xi1.clone(), xi1, xi2])
            } else {
                Decision::formal(Justification::Thm5_5)
            }
        }
        SpaceId::RealGrassmannianOdd(_) => Decision::formal(Justification::Thm5_6),
        _ => Decision::formal(Justification::Sec6),
    })
}

/// Computes ⟨c₁, c₂, c₃⟩ from scratch in the model of `space` with Euler
/// class `spec`.
pub fn witness_massey(space: SpaceId, spec: &EulerClassSpec, classes: &[String; 3]) -> Result<MasseyOutcome> {
    let model = BundleModel::build(space, spec)?;
    let [c1, c2, c3] = classes;
    triple_massey(
        &model,
        &model.parse_class(c1)?,
        &model.parse_class(c2)?,
        &model.parse_class(c3)?,
    )
}

pub fn classify(space: SpaceId, spec: &EulerClassSpec) -> Result<Verdict> {
    let decision = decide(space, spec)?;
    let witness = match &decision.witness {
        None => None,
        Some(classes) => {
            let outcome = witness_massey(space, spec, classes)?;
            let result = match outcome {
                MasseyOutcome::Defined(r) if !r.trivial() => *r,
                _ => {
                    return Err(Error::CrossCheck(format!(
                        "witness ⟨{}⟩ for {space} with {spec} is undefined or trivial",
                        classes.join(", ")
                    )))
                }
            };
            Some(Witness {
                classes: classes.clone(),
                result,
            })
        }
    };
    Ok(Verdict {
        space,
        euler: spec.clone(),
        formal: decision.formal,
        justification: decision.justification,
        witness,
    })
}

/// The pair α₁ = ½(a−b)(a+c), α₂ = ½(a+b)(a−c). Fails if the identity
/// α₁ξ₁² + α₂ξ₂² = 2(al − cx − bz)(al + bx + cz) does not hold in the
/// cohomology of the base.
pub fn alpha_coefficients(a: &Rational, b: &Rational, c: &Rational) -> Result<(Rational, Rational)> {
    let half = ratio(1, 2);
    let alpha1 = &half * (a - b) * (a + c);
    let alpha2 = &half * (a + b) * (a - c);
    let ring = presentation(SpaceId::RealGrassmannianR8)?;
    let xi1 = ring.parse("l - x + z")?;
    let xi2 = ring.parse("-l - x + z")?;
    let lhs = xi1.pow(2).scale(&alpha1).add(&xi2.pow(2).scale(&alpha2))?;
    let var = |name: &str| ring.generator(name);
    let left = var("l")?.scale(a).sub(&var("x")?.scale(c))?.sub(&var("z")?.scale(b))?;
    let euler = var("l")?.scale(a).add(&var("x")?.scale(b))?.add(&var("z")?.scale(c))?;
    let rhs = left.mul(&euler)?.scale(&int(2));
    let diff = lhs.sub(&rhs)?;
    if ring.normal_form_in(&diff, 8)?.iter().any(|v| !v.is_zero()) {
        return Err(Error::CrossCheck(format!(
            "square-class identity fails at a={a}, b={b}, c={c}"
        )));
    }
    Ok((alpha1, alpha2))
}

/// The Massey product probed at a point, when the verdict is formal.
pub fn would_be_witness(space: SpaceId, spec: &EulerClassSpec) -> Option<Vec<[String; 3]>> {
    match space {
        SpaceId::ComplexGrassmannian(n) if n >= 2 => {
            let k = n / 2;
            let power = if k == 1 { "x".to_string() } else { format!("x^{k}") };
            Some(vec![["l".into(), "l".into(), power]])
        }
        SpaceId::RealGrassmannianEven(_) => Some(vec![["x".into(), "z".into(), "z".into()]]),
        SpaceId::RealGrassmannianR8 => {
            let [xi1, xi2] = xi_classes(spec);
            Some(vec![[xi1.clone(), xi1.clone(), xi2.clone()], [xi2.clone(), xi2, xi1]])
        }
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessStatus {
    NotApplicable,
    Undefined,
    Trivial,
    NonTrivial,
}

impl WitnessStatus {
    /// `Some(trivial)` when a Massey product was defined.
    pub fn trivial(&self) -> Option<bool> {
        match self {
            WitnessStatus::Trivial => Some(true),
            WitnessStatus::NonTrivial => Some(false),
            _ => None,
        }
    }
}

fn status(outcome: &MasseyOutcome) -> WitnessStatus {
    match outcome.defined() {
        None => WitnessStatus::Undefined,
        Some(r) if r.trivial() => WitnessStatus::Trivial,
        Some(_) => WitnessStatus::NonTrivial,
    }
}

#[derive(Debug, Clone)]
pub struct CrossCheckPoint {
    pub euler: EulerClassSpec,
    pub formal: bool,
    pub justification: Justification,
    pub witness: WitnessStatus,
    pub passed: bool,
    pub message: Option<String>,
}

#[derive(Debug, Clone)]
pub struct CrossCheckReport {
    pub space: SpaceId,
    pub points: Vec<CrossCheckPoint>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.points.iter().all(|p| p.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CrossCheckPoint> {
        self.points.iter().filter(|p| !p.passed)
    }
}

fn check_point(space: SpaceId, spec: &EulerClassSpec) -> CrossCheckPoint {
    let failed = |message: String| CrossCheckPoint {
        euler: spec.clone(),
        formal: false,
        justification: Justification::ProductModel,
        witness: WitnessStatus::NotApplicable,
        passed: false,
        message: Some(message),
    };
    let decision = match decide(space, spec) {
        Ok(d) => d,
        Err(e) => return failed(e.to_string()),
    };
    let probes = match &decision.witness {
        Some(w) => vec![w.clone()],
        None => would_be_witness(space, spec).unwrap_or_default(),
    };
    let mut witness = WitnessStatus::NotApplicable;
    let mut message = None;
    for classes in &probes {
        let s = match witness_massey(space, spec, classes) {
            Ok(outcome) => status(&outcome),
            Err(e) => return failed(e.to_string()),
        };
        let ok = if decision.formal {
            s != WitnessStatus::NonTrivial
        } else {
            s == WitnessStatus::NonTrivial
        };
        if !ok && message.is_none() {
            message = Some(format!(
                "{} verdict but ⟨{}⟩ is {s:?}",
                if decision.formal { "formal" } else { "non-formal" },
                classes.join(", ")
            ));
        }
        if witness == WitnessStatus::NotApplicable || s == WitnessStatus::NonTrivial || !ok {
            witness = s;
        }
    }
    CrossCheckPoint {
        euler: spec.clone(),
        formal: decision.formal,
        justification: decision.justification,
        witness,
        passed: message.is_none(),
        message,
    }
}

/// Checks the verdict table against the Massey engine at every grid point.
/// Non-formal points need a non-trivial witness; formal points need every
/// probed Massey product to be trivial or undefined.
pub fn cross_check(space: SpaceId, grid: &[EulerClassSpec]) -> Result<CrossCheckReport> {
    let space = space.validated()?;
    if would_be_witness(space, &EulerClassSpec::scalar(Rational::one())).is_none() && !space.is_wolf() {
        return Err(Error::UnsupportedSpace(format!("{space} has no Massey witnesses")));
    }
    let points = grid.par_iter().map(|spec| check_point(space, spec)).collect();
    Ok(CrossCheckReport { space, points })
}

/// All Euler classes of `space` with integer coefficients in `lo..=hi`.
pub fn euler_grid(space: SpaceId, lo: i64, hi: i64) -> Result<Vec<EulerClassSpec>> {
    space.require_wolf()?;
    let values: Vec<Rational> = (lo..=hi).map(int).collect();
    let mut out = Vec::new();
    for a in &values {
        match space {
            SpaceId::RealGrassmannianR8 => {
                for b in &values {
                    for c in &values {
                        out.push(EulerClassSpec::abc(a.clone(), b.clone(), c.clone()));
                    }
                }
            }
            s if s.is_exceptional() => out.push(EulerClassSpec::scalar(a.clone())),
            _ => {
                for b in &values {
                    out.push(EulerClassSpec::ab(a.clone(), b.clone()));
                }
            }
        }
    }
    Ok(out)
}
