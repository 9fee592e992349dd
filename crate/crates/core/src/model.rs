//! Rational models of sphere bundles over a Wolf space.
//!
//! The model is `A ⊗ Λ(u)` with `A` the base cohomology ring (zero
//! differential), `|u| = 3` and `du = e`. Every cochain of degree `k` is
//! `p + q·u` with `p ∈ A^k`, `q ∈ A^(k−3)`, and `d(p + q·u) = q·e`. Hence
//!
//! `H^k = coker(·e: A^(k−4) → A^k) ⊕ ker(·e: A^(k−3) → A^(k+1))·u`.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};

use crate::algebra::poly::Generators;
use crate::algebra::{
    Echelon, Generator, GradedPolynomial, Homogeneity, Matrix, Monomial, Parity, Rational, RingPresentation,
};
use crate::error::{Error, Result};
use crate::rings::{presentation, EulerClassSpec, SpaceId};

/// Degree of the fiber generator.
pub const FIBER_DEGREE: u32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassKind {
    Cocycle,
    Cochain,
}

/// A cochain `p + q·u` of the model, stored as coordinates of `p` in the
/// base basis of degree `k` and of `q` in degree `k − 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelClass {
    degree: u32,
    base_part: Vec<Rational>,
    fiber_part: Vec<Rational>,
    kind: ClassKind,
}

impl ModelClass {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn base_part(&self) -> &[Rational] {
        &self.base_part
    }

    pub fn fiber_part(&self) -> &[Rational] {
        &self.fiber_part
    }

    pub fn kind(&self) -> ClassKind {
        self.kind
    }

    pub fn is_zero(&self) -> bool {
        self.base_part.iter().chain(&self.fiber_part).all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> ModelClass {
        let mul = |v: &[Rational]| v.iter().map(|x| x * s).collect();
        ModelClass {
            degree: self.degree,
            base_part: mul(&self.base_part),
            fiber_part: mul(&self.fiber_part),
            kind: self.kind,
        }
    }

    pub fn add(&self, other: &ModelClass) -> Result<ModelClass> {
        if self.degree != other.degree {
            return Err(Error::Precondition(format!(
                "cannot add classes of degrees {} and {}",
                self.degree, other.degree
            )));
        }
        let sum = |a: &[Rational], b: &[Rational]| a.iter().zip(b).map(|(x, y)| x + y).collect();
        let kind = if self.kind == ClassKind::Cocycle && other.kind == ClassKind::Cocycle {
            ClassKind::Cocycle
        } else {
            ClassKind::Cochain
        };
        Ok(ModelClass {
            degree: self.degree,
            base_part: sum(&self.base_part, &other.base_part),
            fiber_part: sum(&self.fiber_part, &other.fiber_part),
            kind,
        })
    }
}

/// Cohomology of the model in one degree.
#[derive(Debug, Clone)]
pub struct ModelDegree {
    degree: u32,
    image: Echelon,
    coker: Vec<usize>,
    kernel: Vec<Vec<Rational>>,
    kernel_free: Vec<usize>,
}

impl ModelDegree {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.coker.len() + self.kernel.len()
    }

    pub fn coker_dim(&self) -> usize {
        self.coker.len()
    }

    pub fn kernel_dim(&self) -> usize {
        self.kernel.len()
    }

    /// The image of `·e` in base degree `k`, row-reduced.
    pub fn image(&self) -> &Echelon {
        &self.image
    }

    /// Kernel basis of `·e` on base degree `k − 3`.
    pub fn kernel(&self) -> &[Vec<Rational>] {
        &self.kernel
    }
}

pub struct BundleModel {
    space: Option<SpaceId>,
    base: Arc<RingPresentation>,
    euler: GradedPolynomial,
    gens: Generators,
    degrees: Vec<OnceLock<Arc<ModelDegree>>>,
}

impl std::fmt::Debug for BundleModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BundleModel")
            .field("base", &self.base.name())
            .field("euler", &self.euler.to_string())
            .finish()
    }
}

impl BundleModel {
    /// The model over `base` with `du = euler`. The base must be evenly
    /// graded and `euler` zero or homogeneous of degree 4.
    pub fn new(base: Arc<RingPresentation>, euler: GradedPolynomial) -> Result<Self> {
        if let Some(g) = base.generators().iter().find(|g| g.parity() == Parity::Odd) {
            return Err(Error::Precondition(format!("base generator `{g}` has odd degree")));
        }
        if euler.generators() != base.generators() {
            return Err(Error::Structural(format!("`{euler}` is not over the base generators")));
        }
        match euler.homogeneity() {
            Homogeneity::Zero | Homogeneity::Homogeneous(4) => {}
            _ => {
                return Err(Error::Precondition(format!(
                    "Euler class `{euler}` is not homogeneous of degree 4"
                )))
            }
        }
        if base.generators().iter().any(|g| g.name() == "u") {
            return Err(Error::Structural("the base already has a generator named `u`".into()));
        }
        let mut gens: Vec<Generator> = base.generators().to_vec();
        gens.push(Generator::new("u", FIBER_DEGREE));
        let top = base.formal_dimension() + FIBER_DEGREE;
        Ok(BundleModel {
            space: None,
            base,
            euler,
            gens: gens.into(),
            degrees: (0..=top).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn build(space: SpaceId, spec: &EulerClassSpec) -> Result<Self> {
        let euler = spec.polynomial(space)?;
        let mut model = Self::new(presentation(space)?, euler)?;
        model.space = Some(space);
        Ok(model)
    }

    pub fn space(&self) -> Option<SpaceId> {
        self.space
    }

    pub fn base(&self) -> &Arc<RingPresentation> {
        &self.base
    }

    pub fn euler(&self) -> &GradedPolynomial {
        &self.euler
    }

    /// Base generators followed by `u`.
    pub fn generators(&self) -> &Generators {
        &self.gens
    }

    pub fn formal_dimension(&self) -> u32 {
        self.base.formal_dimension() + FIBER_DEGREE
    }

    fn base_dim(&self, k: Option<u32>) -> usize {
        k.map_or(0, |k| self.base.dim(k))
    }

    /// Multiplication by the Euler class from base degree `k`.
    pub fn euler_matrix(&self, k: u32) -> Matrix {
        self.base
            .multiplication_matrix_of_degree(&self.euler, 4, k)
            .expect("Euler class is over the base generators")
    }

    pub fn cohomology(&self, k: u32) -> Arc<ModelDegree> {
        match self.degrees.get(k as usize) {
            Some(cell) => cell.get_or_init(|| Arc::new(self.compute_degree(k))).clone(),
            None => Arc::new(ModelDegree {
                degree: k,
                image: Echelon::empty(0),
                coker: Vec::new(),
                kernel: Vec::new(),
                kernel_free: Vec::new(),
            }),
        }
    }

    fn compute_degree(&self, k: u32) -> ModelDegree {
        let image = match k.checked_sub(4) {
            Some(src) => Echelon::new(self.base.dim(k), self.euler_matrix(src).columns()),
            None => Echelon::empty(self.base.dim(k)),
        };
        let coker = image.free_columns();
        let (kernel, kernel_free) = match k.checked_sub(FIBER_DEGREE) {
            Some(src) => {
                let m = self.euler_matrix(src);
                let free = Echelon::new(m.ncols(), m.rows().to_vec()).free_columns();
                (m.kernel(), free)
            }
            None => (Vec::new(), Vec::new()),
        };
        ModelDegree {
            degree: k,
            image,
            coker,
            kernel,
            kernel_free,
        }
    }

    pub fn betti(&self) -> Vec<usize> {
        (0..=self.formal_dimension())
            .map(|k| self.cohomology(k).dim())
            .collect()
    }

    /// The zero cochain of degree `k`.
    pub fn zero(&self, k: u32) -> ModelClass {
        ModelClass {
            degree: k,
            base_part: vec![Rational::zero(); self.base.dim(k)],
            fiber_part: vec![Rational::zero(); self.base_dim(k.checked_sub(FIBER_DEGREE))],
            kind: ClassKind::Cocycle,
        }
    }

    fn make(&self, degree: u32, base_part: Vec<Rational>, fiber_part: Vec<Rational>) -> ModelClass {
        let mut c = ModelClass {
            degree,
            base_part,
            fiber_part,
            kind: ClassKind::Cochain,
        };
        if self.is_cocycle(&c) {
            c.kind = ClassKind::Cocycle;
        }
        c
    }

    /// Parses a polynomial over the base generators and `u`.
    pub fn parse(&self, text: &str) -> Result<GradedPolynomial> {
        GradedPolynomial::parse(&self.gens, text)
    }

    /// Parses a homogeneous nonzero polynomial into a cochain.
    pub fn parse_class(&self, text: &str) -> Result<ModelClass> {
        let p = self.parse(text)?;
        self.class_from_polynomial(&p)
    }

    pub fn class_from_polynomial(&self, p: &GradedPolynomial) -> Result<ModelClass> {
        match p.homogeneity() {
            Homogeneity::Homogeneous(k) => self.class_from_polynomial_in(p, k),
            Homogeneity::Zero => Err(Error::Precondition("the zero polynomial has no degree".into())),
            Homogeneity::Mixed => Err(Error::Precondition(format!("`{p}` is not homogeneous"))),
        }
    }

    /// The cochain of `p`, which must be zero or homogeneous of degree `k`.
    pub fn class_from_polynomial_in(&self, p: &GradedPolynomial, k: u32) -> Result<ModelClass> {
        let (base, fiber) = self.split(p)?;
        let base_part = self.base.normal_form_in(&base, k)?;
        let fiber_part = match k.checked_sub(FIBER_DEGREE) {
            Some(j) => self.base.normal_form_in(&fiber, j)?,
            None if fiber.is_zero() => Vec::new(),
            None => return Err(Error::Precondition(format!("`{p}` is not homogeneous of degree {k}"))),
        };
        Ok(self.make(k, base_part, fiber_part))
    }

    /// Splits a model polynomial `p + q·u` into `(p, q)` over the base.
    fn split(&self, p: &GradedPolynomial) -> Result<(GradedPolynomial, GradedPolynomial)> {
        if p.generators() != &self.gens {
            return Err(Error::Structural(format!("`{p}` is not over the model generators")));
        }
        let n = self.base.generators().len();
        let mut base = Vec::new();
        let mut fiber = Vec::new();
        for (m, c) in p.terms() {
            let e = m.exponents();
            let target = if e[n] == 0 { &mut base } else { &mut fiber };
            target.push((Monomial::new(e[..n].to_vec()), c.clone()));
        }
        let gens = self.base.generators();
        Ok((
            GradedPolynomial::from_terms(gens, base),
            GradedPolynomial::from_terms(gens, fiber),
        ))
    }

    /// Embeds a base polynomial, multiplied by `u` if `with_u`.
    fn lift(&self, p: &GradedPolynomial, with_u: bool) -> GradedPolynomial {
        GradedPolynomial::from_terms(
            &self.gens,
            p.terms().map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                e.push(u32::from(with_u));
                (Monomial::new(e), c.clone())
            }),
        )
    }

    fn base_element(&self, k: u32, coords: &[Rational]) -> GradedPolynomial {
        self.base.element(k, coords)
    }

    fn fiber_element(&self, c: &ModelClass) -> GradedPolynomial {
        match c.degree.checked_sub(FIBER_DEGREE) {
            Some(j) => self.base.element(j, &c.fiber_part),
            None => GradedPolynomial::zero(self.base.generators()),
        }
    }

    /// The cochain as a polynomial over the model generators.
    pub fn class_to_polynomial(&self, c: &ModelClass) -> GradedPolynomial {
        let p = self.lift(&self.base_element(c.degree, &c.base_part), false);
        let q = self.lift(&self.fiber_element(c), true);
        p.add(&q).expect("same generators")
    }

    pub fn differential(&self, c: &ModelClass) -> ModelClass {
        let base_part = match c.degree.checked_sub(FIBER_DEGREE) {
            Some(j) => self.euler_matrix(j).apply(&c.fiber_part),
            None => Vec::new(),
        };
        let k = c.degree + 1;
        ModelClass {
            degree: k,
            base_part: if base_part.is_empty() {
                vec![Rational::zero(); self.base.dim(k)]
            } else {
                base_part
            },
            fiber_part: vec![Rational::zero(); self.base_dim(k.checked_sub(FIBER_DEGREE))],
            kind: ClassKind::Cocycle,
        }
    }

    pub fn is_cocycle(&self, c: &ModelClass) -> bool {
        self.differential(c).is_zero()
    }

    /// Product of cochains: `(p₁ + q₁u)(p₂ + q₂u) = p₁p₂ + (p₁q₂ + q₁p₂)·u`.
    /// No signs arise because the base is evenly graded.
    pub fn cochain_product(&self, c1: &ModelClass, c2: &ModelClass) -> Result<ModelClass> {
        let k = c1.degree + c2.degree;
        let p1 = self.base_element(c1.degree, &c1.base_part);
        let p2 = self.base_element(c2.degree, &c2.base_part);
        let q1 = self.fiber_element(c1);
        let q2 = self.fiber_element(c2);
        let base = p1.mul(&p2)?;
        let fiber = p1.mul(&q2)?.add(&q1.mul(&p2)?)?;
        let base_part = self.base.normal_form_in(&base, k)?;
        let fiber_part = match k.checked_sub(FIBER_DEGREE) {
            Some(j) => self.base.normal_form_in(&fiber, j)?,
            None => Vec::new(),
        };
        Ok(self.make(k, base_part, fiber_part))
    }

    fn require_cocycle(&self, c: &ModelClass) -> Result<()> {
        if self.is_cocycle(c) {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "`{}` is not a cocycle",
                self.class_to_polynomial(c)
            )))
        }
    }

    /// Coordinates of a cocycle in the cohomology basis of its degree:
    /// cokernel coordinates first, then kernel coordinates.
    pub fn coordinates(&self, c: &ModelClass) -> Result<Vec<Rational>> {
        self.require_cocycle(c)?;
        let h = self.cohomology(c.degree);
        let mut base = c.base_part.clone();
        h.image.reduce(&mut base);
        let mut out: Vec<Rational> = h.coker.iter().map(|&i| base[i].clone()).collect();
        out.extend(h.kernel_free.iter().map(|&i| c.fiber_part[i].clone()));
        Ok(out)
    }

    /// The normalized cocycle with the given cohomology coordinates.
    pub fn class_from_coordinates(&self, k: u32, coords: &[Rational]) -> ModelClass {
        let h = self.cohomology(k);
        assert_eq!(coords.len(), h.dim(), "coordinate length mismatch");
        let mut c = self.zero(k);
        let (coker, kernel) = coords.split_at(h.coker.len());
        for (&i, v) in h.coker.iter().zip(coker) {
            c.base_part[i] = v.clone();
        }
        for (vec, s) in h.kernel.iter().zip(kernel) {
            if s.is_zero() {
                continue;
            }
            for (f, x) in c.fiber_part.iter_mut().zip(vec) {
                *f += s * x;
            }
        }
        c
    }

    /// Basis of `H^k` as normalized cocycles.
    pub fn cohomology_basis(&self, k: u32) -> Vec<ModelClass> {
        let dim = self.cohomology(k).dim();
        (0..dim)
            .map(|i| {
                let coords: Vec<Rational> = (0..dim)
                    .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                    .collect();
                self.class_from_coordinates(k, &coords)
            })
            .collect()
    }

    /// Cup product in cohomology, returned as a normalized cocycle.
    pub fn class_product(&self, c1: &ModelClass, c2: &ModelClass) -> Result<ModelClass> {
        self.require_cocycle(c1)?;
        self.require_cocycle(c2)?;
        let prod = self.cochain_product(c1, c2)?;
        let coords = self.coordinates(&prod)?;
        Ok(self.class_from_coordinates(prod.degree, &coords))
    }

    pub fn is_exact(&self, c: &ModelClass) -> Result<bool> {
        Ok(self.coordinates(c)?.iter().all(Zero::is_zero))
    }

    /// Representatives of a cohomology basis in every nonzero degree.
    pub fn generators_by_degree(&self) -> BTreeMap<u32, Vec<String>> {
        (0..=self.formal_dimension())
            .filter(|&k| self.cohomology(k).dim() > 0)
            .map(|k| {
                let reps = self
                    .cohomology_basis(k)
                    .iter()
                    .map(|c| self.class_to_polynomial(c).to_string())
                    .collect();
                (k, reps)
            })
            .collect()
    }
}
