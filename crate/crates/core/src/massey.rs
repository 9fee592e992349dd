//! Triple Massey products in a bundle model.
//!
//! For cocycles `a₁, a₂, a₃` of degrees `p₁, p₂, p₃` with `a₁a₂ = d a₁₂` and
//! `a₂a₃ = d a₂₃`, the product is represented by
//! `a₁·a₂₃ + (−1)^(p₁+1) a₁₂·a₃` and is well defined modulo
//! `[a₁]·H^(p₂+p₃−1) + [a₃]·H^(p₁+p₂−1)`.

use num_traits::{One, Zero};

use crate::algebra::{Echelon, GradedPolynomial, Rational};
use crate::error::{Error, Result};
use crate::model::{BundleModel, ModelClass};

/// A primitive `w` with `dw = target`, or `None` when `target` is not exact.
///
/// Exact cochains have no `u` part, and `d(q·u) = q·e`, so this solves
/// `q·e = p` in the base with free variables set to zero.
pub fn solve_primitive(model: &BundleModel, target: &ModelClass) -> Result<Option<ModelClass>> {
    if !model.is_cocycle(target) {
        return Err(Error::Precondition(format!(
            "`{}` is not a cocycle",
            model.class_to_polynomial(target)
        )));
    }
    let k = target.degree();
    if target.fiber_part().iter().any(|v| !v.is_zero()) {
        return Ok(None);
    }
    if k == 0 {
        return Ok(None);
    }
    if target.is_zero() {
        return Ok(Some(model.zero(k - 1)));
    }
    let Some(src) = k.checked_sub(4) else {
        return Ok(None);
    };
    let Some(q) = model.euler_matrix(src).solve(target.base_part()) else {
        return Ok(None);
    };
    let fiber = model.base().element(src, &q);
    let gens = model.generators();
    let u = GradedPolynomial::var(gens, gens.len() - 1);
    let w = lift(model, &fiber).mul(&u)?;
    Ok(Some(model.class_from_polynomial_in(&w, k - 1)?))
}

fn lift(model: &BundleModel, p: &GradedPolynomial) -> GradedPolynomial {
    GradedPolynomial::from_terms(
        model.generators(),
        p.terms().map(|(m, c)| {
            let mut e = m.exponents().to_vec();
            e.push(0);
            (crate::algebra::Monomial::new(e), c.clone())
        }),
    )
}

/// A defined triple Massey product.
#[derive(Debug, Clone)]
pub struct MasseyResult {
    inputs: [ModelClass; 3],
    primitives: [ModelClass; 2],
    representative: ModelClass,
    coordinates: Vec<Rational>,
    indeterminacy: Echelon,
    trivial: bool,
}

impl MasseyResult {
    pub fn inputs(&self) -> &[ModelClass; 3] {
        &self.inputs
    }

    /// The primitives `a₁₂` and `a₂₃`.
    pub fn primitives(&self) -> &[ModelClass; 2] {
        &self.primitives
    }

    /// The cocycle `a₁·a₂₃ + (−1)^(p₁+1) a₁₂·a₃`.
    pub fn representative(&self) -> &ModelClass {
        &self.representative
    }

    pub fn degree(&self) -> u32 {
        self.representative.degree()
    }

    /// Cohomology coordinates of the representative.
    pub fn coordinates(&self) -> &[Rational] {
        &self.coordinates
    }

    /// Row-reduced basis of the indeterminacy, in cohomology coordinates.
    pub fn indeterminacy_basis(&self) -> &[Vec<Rational>] {
        self.indeterminacy.rows()
    }

    pub fn indeterminacy_dim(&self) -> usize {
        self.indeterminacy.rank()
    }

    pub fn trivial(&self) -> bool {
        self.trivial
    }
}

/// True iff the representative lies in the indeterminacy.
pub fn is_trivial(result: &MasseyResult) -> bool {
    result.indeterminacy.contains(&result.coordinates)
}

#[derive(Debug, Clone)]
pub enum MasseyOutcome {
    Defined(Box<MasseyResult>),
    /// One of the products `a₁a₂`, `a₂a₃` is not exact.
    Undefined {
        left_exact: bool,
        right_exact: bool,
    },
}

impl MasseyOutcome {
    pub fn defined(&self) -> Option<&MasseyResult> {
        match self {
            MasseyOutcome::Defined(r) => Some(r),
            MasseyOutcome::Undefined { .. } => None,
        }
    }
}

fn check_inputs(model: &BundleModel, a: &[&ModelClass; 3]) -> Result<()> {
    for c in a {
        if c.degree() == 0 {
            return Err(Error::Precondition("Massey inputs must have positive degree".into()));
        }
        if !model.is_cocycle(c) {
            return Err(Error::Precondition(format!(
                "`{}` is not a cocycle",
                model.class_to_polynomial(c)
            )));
        }
    }
    Ok(())
}

pub fn triple_massey(model: &BundleModel, a1: &ModelClass, a2: &ModelClass, a3: &ModelClass) -> Result<MasseyOutcome> {
    check_inputs(model, &[a1, a2, a3])?;
    let a12 = solve_primitive(model, &model.cochain_product(a1, a2)?)?;
    let a23 = solve_primitive(model, &model.cochain_product(a2, a3)?)?;
    match (a12, a23) {
        (Some(a12), Some(a23)) => {
            massey_with_primitives(model, [a1, a2, a3], &a12, &a23).map(|r| MasseyOutcome::Defined(Box::new(r)))
        }
        (a12, a23) => Ok(MasseyOutcome::Undefined {
            left_exact: a12.is_some(),
            right_exact: a23.is_some(),
        }),
    }
}

/// The Massey product computed with caller-supplied primitives, which must
/// satisfy `d a₁₂ = a₁a₂` and `d a₂₃ = a₂a₃`.
pub fn massey_with_primitives(
    model: &BundleModel,
    a: [&ModelClass; 3],
    a12: &ModelClass,
    a23: &ModelClass,
) -> Result<MasseyResult> {
    check_inputs(model, &a)?;
    let [a1, a2, a3] = a;
    for (w, (x, y)) in [(a12, (a1, a2)), (a23, (a2, a3))] {
        if model.differential(w) != model.cochain_product(x, y)? {
            return Err(Error::Precondition(format!(
                "`{}` is not a primitive of the product",
                model.class_to_polynomial(w)
            )));
        }
    }
    let (p1, p2, p3) = (a1.degree(), a2.degree(), a3.degree());
    let sign = if p1 % 2 == 0 { -Rational::one() } else { Rational::one() };
    let left = model.cochain_product(a1, a23)?;
    let right = model.cochain_product(a12, a3)?.scale(&sign);
    let representative = left.add(&right)?;
    if !model.is_cocycle(&representative) {
        return Err(Error::Structural("Massey representative is not closed".into()));
    }
    let coordinates = model.coordinates(&representative)?;

    let mut spans = Vec::new();
    for h in model.cohomology_basis(p2 + p3 - 1) {
        spans.push(model.coordinates(&model.class_product(a1, &h)?)?);
    }
    for h in model.cohomology_basis(p1 + p2 - 1) {
        spans.push(model.coordinates(&model.class_product(&h, a3)?)?);
    }
    let indeterminacy = Echelon::new(coordinates.len(), spans);
    let trivial = indeterminacy.contains(&coordinates);
    Ok(MasseyResult {
        inputs: [a1.clone(), a2.clone(), a3.clone()],
        primitives: [a12.clone(), a23.clone()],
        representative,
        coordinates,
        indeterminacy,
        trivial,
    })
}
