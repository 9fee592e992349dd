//! Quotients of graded polynomial rings by homogeneous relations.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};

use super::generator::Generator;
use super::linalg::{Echelon, Matrix};
use super::poly::{Generators, GradedPolynomial, Homogeneity, Monomial};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Generators, homogeneous relations and the top degree of the quotient.
///
/// Per-degree bases are computed on first use and cached; the cache is
/// write-once per degree so concurrent readers always observe the same value.
#[derive(Debug)]
pub struct RingPresentation {
    name: String,
    gens: Generators,
    relations: Vec<GradedPolynomial>,
    formal_dimension: u32,
    bases: Vec<OnceLock<Arc<DegreeBasis>>>,
}

impl RingPresentation {
    pub fn new(
        name: impl Into<String>,
        gens: Generators,
        relations: Vec<GradedPolynomial>,
        formal_dimension: u32,
    ) -> Result<Self> {
        for r in &relations {
            if r.generators() != &gens {
                return Err(Error::Structural(format!(
                    "relation `{r}` is over a different generator list"
                )));
            }
            if r.homogeneity() == Homogeneity::Mixed {
                return Err(Error::Precondition(format!("relation `{r}` is not homogeneous")));
            }
        }
        let relations = relations.into_iter().filter(|r| !r.is_zero()).collect();
        Ok(RingPresentation {
            name: name.into(),
            gens,
            relations,
            formal_dimension,
            bases: (0..=formal_dimension).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &Generators {
        &self.gens
    }

    pub fn relations(&self) -> &[GradedPolynomial] {
        &self.relations
    }

    pub fn formal_dimension(&self) -> u32 {
        self.formal_dimension
    }

    pub fn generator(&self, name: &str) -> Result<GradedPolynomial> {
        GradedPolynomial::generator(&self.gens, name)
    }

    pub fn parse(&self, text: &str) -> Result<GradedPolynomial> {
        GradedPolynomial::parse(&self.gens, text)
    }

    /// Basis of the quotient in degree `k`. Degrees above the formal
    /// dimension yield the empty basis.
    pub fn degree_basis(&self, k: u32) -> Arc<DegreeBasis> {
        match self.bases.get(k as usize) {
            Some(cell) => cell
                .get_or_init(|| Arc::new(DegreeBasis::compute(&self.gens, &self.relations, k)))
                .clone(),
            None => Arc::new(DegreeBasis::empty(k)),
        }
    }

    pub fn dim(&self, k: u32) -> usize {
        self.degree_basis(k).dim()
    }

    /// Coordinates of a nonzero homogeneous polynomial in the basis of its
    /// degree. The zero vector means `p` lies in the relation ideal.
    pub fn normal_form(&self, p: &GradedPolynomial) -> Result<Vec<Rational>> {
        match p.homogeneity() {
            Homogeneity::Homogeneous(k) => self.normal_form_in(p, k),
            Homogeneity::Zero => Err(Error::Precondition(
                "the zero polynomial has no degree; use normal_form_in".into(),
            )),
            Homogeneity::Mixed => Err(Error::Precondition(format!("`{p}` is not homogeneous"))),
        }
    }

    /// Coordinates of `p`, which must be zero or homogeneous of degree `k`.
    pub fn normal_form_in(&self, p: &GradedPolynomial, k: u32) -> Result<Vec<Rational>> {
        if p.generators() != &self.gens {
            return Err(Error::Structural(format!(
                "`{p}` is not over the generators of {}",
                self.name
            )));
        }
        match p.homogeneity() {
            Homogeneity::Zero => Ok(vec![Rational::zero(); self.dim(k)]),
            Homogeneity::Homogeneous(d) if d == k => Ok(self.degree_basis(k).reduce(p)),
            _ => Err(Error::Precondition(format!("`{p}` is not homogeneous of degree {k}"))),
        }
    }

    /// The polynomial with the given coordinates in degree `k`.
    pub fn element(&self, k: u32, coords: &[Rational]) -> GradedPolynomial {
        self.degree_basis(k).element(&self.gens, coords)
    }

    /// Matrix of multiplication by `c` from degree `k` to degree `k + deg c`.
    pub fn multiplication_matrix(&self, c: &GradedPolynomial, k: u32) -> Result<Matrix> {
        let d = match c.homogeneity() {
            Homogeneity::Homogeneous(d) => d,
            Homogeneity::Zero => {
                return Err(Error::Precondition(
                    "multiplier is zero; its degree is ambiguous".into(),
                ))
            }
            Homogeneity::Mixed => return Err(Error::Precondition(format!("`{c}` is not homogeneous"))),
        };
        self.multiplication_matrix_of_degree(c, d, k)
    }

    /// As [`Self::multiplication_matrix`], with the multiplier's degree given
    /// explicitly so that a zero multiplier is allowed.
    pub fn multiplication_matrix_of_degree(&self, c: &GradedPolynomial, d: u32, k: u32) -> Result<Matrix> {
        let src = self.degree_basis(k);
        let dst_dim = self.dim(k + d);
        let mut columns = Vec::with_capacity(src.dim());
        for b in src.basis_polynomials(&self.gens) {
            let prod = c.mul(&b)?;
            columns.push(self.normal_form_in(&prod, k + d)?);
        }
        Ok(Matrix::from_columns(dst_dim, &columns))
    }

    pub fn betti(&self) -> Vec<usize> {
        (0..=self.formal_dimension).map(|k| self.dim(k)).collect()
    }

    pub fn total_dimension(&self) -> usize {
        self.betti().iter().sum()
    }
}

/// The quotient in one degree: all monomials of that degree (graded-lex,
/// largest first), the reduced relation span, and the surviving monomials.
#[derive(Debug, Clone)]
pub struct DegreeBasis {
    degree: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    relations: Echelon,
    basis: Vec<usize>,
}

impl DegreeBasis {
    fn empty(degree: u32) -> Self {
        DegreeBasis {
            degree,
            monomials: Vec::new(),
            index: HashMap::new(),
            relations: Echelon::empty(0),
            basis: Vec::new(),
        }
    }

    fn compute(gens: &Generators, relations: &[GradedPolynomial], k: u32) -> Self {
        let monomials = monomials_of_degree(gens, k);
        let index: HashMap<Monomial, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = Vec::new();
        for r in relations {
            let Some(d) = r.degree() else { continue };
            if d > k {
                continue;
            }
            for m in monomials_of_degree(gens, k - d) {
                let mult = GradedPolynomial::from_terms(gens, [(m, Rational::one())]);
                let prod = mult.mul(r).expect("same generators");
                let mut row = vec![Rational::zero(); monomials.len()];
                for (mono, c) in prod.terms() {
                    row[index[mono]] = c.clone();
                }
                rows.push(row);
            }
        }
        let relations = Echelon::new(monomials.len(), rows);
        let basis = relations.free_columns();
        DegreeBasis {
            degree: k,
            monomials,
            index,
            relations,
            basis,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Every monomial of this degree, largest first.
    pub fn all_monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn basis_monomials(&self) -> Vec<&Monomial> {
        self.basis.iter().map(|&i| &self.monomials[i]).collect()
    }

    pub fn basis_polynomials(&self, gens: &Generators) -> Vec<GradedPolynomial> {
        self.basis_monomials()
            .into_iter()
            .map(|m| GradedPolynomial::from_terms(gens, [(m.clone(), Rational::one())]))
            .collect()
    }

    /// Coordinates of a polynomial whose terms all have this degree.
    pub fn reduce(&self, p: &GradedPolynomial) -> Vec<Rational> {
        if self.basis.is_empty() {
            return Vec::new();
        }
        let mut v = vec![Rational::zero(); self.monomials.len()];
        for (m, c) in p.terms() {
            let i = *self
                .index
                .get(m)
                .unwrap_or_else(|| panic!("monomial {m:?} is not of degree {}", self.degree));
            v[i] = c.clone();
        }
        self.relations.reduce(&mut v);
        self.basis.iter().map(|&i| v[i].clone()).collect()
    }

    pub fn element(&self, gens: &Generators, coords: &[Rational]) -> GradedPolynomial {
        assert_eq!(coords.len(), self.dim(), "coordinate length mismatch");
        GradedPolynomial::from_terms(
            gens,
            self.basis
                .iter()
                .zip(coords)
                .map(|(&i, c)| (self.monomials[i].clone(), c.clone())),
        )
    }
}

/// All monomials of degree `k`, in descending graded-lex order. Odd
/// generators appear with exponent at most one.
pub fn monomials_of_degree(gens: &[Generator], k: u32) -> Vec<Monomial> {
    fn go(gens: &[Generator], i: usize, left: u32, acc: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == gens.len() {
            if left == 0 {
                out.push(Monomial::new(acc.clone()));
            }
            return;
        }
        let d = gens[i].degree();
        let max = if gens[i].is_odd() { 1.min(left / d) } else { left / d };
        for e in (0..=max).rev() {
            acc.push(e);
            go(gens, i + 1, left - e * d, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(gens, 0, k, &mut Vec::with_capacity(gens.len()), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    /// H^*(Gr_2(C^4)) = Q[l, x]/(-l^3 + 2lx, l^4 - 3l^2x + x^2).
    fn gr24() -> RingPresentation {
        let gens: Generators = vec![Generator::new("l", 2), Generator::new("x", 4)].into();
        let rels = ["-l^3 + 2*l*x", "l^4 - 3*l^2*x + x^2"]
            .iter()
            .map(|t| GradedPolynomial::parse(&gens, t).unwrap())
            .collect();
        RingPresentation::new("gr24", gens, rels, 8).unwrap()
    }

    #[test]
    fn monomials_are_graded_lex_descending() {
        let gens = vec![Generator::new("l", 2), Generator::new("x", 4)];
        let ms = monomials_of_degree(&gens, 8);
        let exps: Vec<_> = ms.iter().map(|m| m.exponents().to_vec()).collect();
        assert_eq!(exps, vec![vec![4, 0], vec![2, 1], vec![0, 2]]);
    }

    #[test]
    fn odd_generators_capped_at_one() {
        let gens = vec![Generator::new("l", 2), Generator::new("u", 3)];
        let ms = monomials_of_degree(&gens, 6);
        assert_eq!(ms.len(), 1);
        assert!(monomials_of_degree(&gens, 9).iter().all(|m| m.exponents()[1] <= 1));
    }

    #[test]
    fn degree_four_has_two_classes() {
        let r = gr24();
        let b = r.degree_basis(4);
        let names: Vec<String> = b
            .basis_polynomials(r.generators())
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(names, vec!["l^2", "x"]);
    }

    #[test]
    fn cube_of_l_reduces_to_twice_lx() {
        let r = gr24();
        assert_eq!(r.dim(6), 1);
        assert_eq!(
            r.degree_basis(6).basis_polynomials(r.generators())[0].to_string(),
            "l*x"
        );
        assert_eq!(r.normal_form(&r.parse("l^3").unwrap()).unwrap(), vec![int(2)]);
        assert_eq!(r.normal_form(&r.parse("-l^3 + 2*l*x").unwrap()).unwrap(), vec![int(0)]);
    }

    #[test]
    fn above_the_cap_is_empty() {
        let r = gr24();
        assert_eq!(r.dim(10), 0);
        assert_eq!(r.dim(12), 0);
        assert!(r.normal_form(&r.parse("x^3").unwrap()).unwrap().is_empty());
    }

    #[test]
    fn multiplication_by_l_squared() {
        let r = gr24();
        let l2 = r.parse("l^2").unwrap();
        let m0 = r.multiplication_matrix(&l2, 0).unwrap();
        assert_eq!((m0.nrows(), m0.ncols()), (2, 1));
        assert_eq!(m0.column(0), vec![int(1), int(0)]);
        // l^4 and l^2 x are dependent in the top degree (oracle: rank 1)
        assert_eq!(r.multiplication_matrix(&l2, 4).unwrap().rank(), 1);
    }

    #[test]
    fn non_homogeneous_input_is_rejected() {
        let r = gr24();
        assert!(matches!(
            r.normal_form(&r.parse("l + x").unwrap()),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            r.multiplication_matrix(&r.parse("l + x").unwrap(), 0),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn total_dimension_is_six() {
        assert_eq!(gr24().total_dimension(), 6);
    }
}
