//! Sparse graded-commutative polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::generator::Generator;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Shared, ordered generator list. Polynomials over different lists never mix.
pub type Generators = Arc<[Generator]>;

/// Exponent vector over a fixed generator list.
///
/// The derived ordering is lexicographic with the first generator most
/// significant; restricted to one degree this is the graded-lex order used
/// everywhere for pivots and bases.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(len: usize) -> Self {
        Monomial(vec![0; len])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self, gens: &[Generator]) -> u32 {
        self.0.iter().zip(gens).map(|(&e, g)| e * g.degree()).sum()
    }

    /// Graded-commutative product. Returns `None` when an odd generator would
    /// appear squared, otherwise the product and whether the Koszul sign is
    /// negative.
    pub fn mul(&self, other: &Monomial, gens: &[Generator]) -> Option<(Monomial, bool)> {
        let mut negative = false;
        let mut odd_in_self_after = 0usize;
        // Walk right to left: moving an odd factor of `other` at position j
        // past the odd factors of `self` at positions > j.
        for j in (0..gens.len()).rev() {
            if gens[j].is_odd() {
                if other.0[j] > 0 && odd_in_self_after % 2 == 1 {
                    negative = !negative;
                }
                if self.0[j] > 0 {
                    odd_in_self_after += 1;
                }
            }
        }
        let mut exps = Vec::with_capacity(self.0.len());
        for (j, g) in gens.iter().enumerate() {
            let e = self.0[j] + other.0[j];
            if g.is_odd() && e > 1 {
                return None;
            }
            exps.push(e);
        }
        Some((Monomial(exps), negative))
    }

    fn render(&self, gens: &[Generator]) -> String {
        let mut parts = Vec::new();
        for (&e, g) in self.0.iter().zip(gens) {
            match e {
                0 => {}
                1 => parts.push(g.name().to_string()),
                _ => parts.push(format!("{}^{}", g.name(), e)),
            }
        }
        parts.join("*")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Homogeneous(u32),
    Mixed,
}

#[derive(Clone, Debug)]
pub struct GradedPolynomial {
    gens: Generators,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for GradedPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.same_generators(other) && self.terms == other.terms
    }
}

impl Eq for GradedPolynomial {}

impl GradedPolynomial {
    pub fn zero(gens: &Generators) -> Self {
        GradedPolynomial {
            gens: gens.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(gens: &Generators, c: Rational) -> Self {
        Self::from_terms(gens, [(Monomial::one(gens.len()), c)])
    }

    pub fn one(gens: &Generators) -> Self {
        Self::constant(gens, Rational::one())
    }

    pub fn var(gens: &Generators, index: usize) -> Self {
        let mut exps = vec![0; gens.len()];
        exps[index] = 1;
        Self::from_terms(gens, [(Monomial(exps), Rational::one())])
    }

    pub fn generator(gens: &Generators, name: &str) -> Result<Self> {
        let index = gens
            .iter()
            .position(|g| g.name() == name)
            .ok_or_else(|| Error::Parse(format!("unknown generator `{name}`")))?;
        Ok(Self::var(gens, index))
    }

    /// Collects terms, merging duplicates and dropping zero coefficients and
    /// monomials with a squared odd generator.
    pub fn from_terms(gens: &Generators, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.0.len(), gens.len(), "exponent vector length mismatch");
            if m.0.iter().zip(gens.iter()).any(|(&e, g)| g.is_odd() && e > 1) {
                continue;
            }
            *map.entry(m).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        GradedPolynomial {
            gens: gens.clone(),
            terms: map,
        }
    }

    pub fn generators(&self) -> &Generators {
        &self.gens
    }

    pub fn same_generators(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.gens, &other.gens) || self.gens == other.gens
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut degrees = self.terms.keys().map(|m| m.degree(&self.gens));
        match degrees.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if degrees.all(|e| e == d) {
                    Homogeneity::Homogeneous(d)
                } else {
                    Homogeneity::Mixed
                }
            }
        }
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn degree(&self) -> Option<u32> {
        match self.homogeneity() {
            Homogeneity::Homogeneous(d) => Some(d),
            _ => None,
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.same_generators(other) {
            Ok(())
        } else {
            Err(Error::Structural(format!(
                "generator lists differ: [{}] vs [{}]",
                names(&self.gens),
                names(&other.gens)
            )))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            let entry = out.terms.entry(m.clone()).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                out.terms.remove(m);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        GradedPolynomial {
            gens: self.gens.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(&self.gens);
        }
        GradedPolynomial {
            gens: self.gens.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    /// Graded-commutative product with the Koszul sign rule.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((m, negative)) = m1.mul(m2, &self.gens) {
                    let c = c1 * c2;
                    let entry = acc.entry(m).or_insert_with(Rational::zero);
                    if negative {
                        *entry -= c;
                    } else {
                        *entry += c;
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(GradedPolynomial {
            gens: self.gens.clone(),
            terms: acc,
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(&self.gens);
        for _ in 0..e {
            out = out.mul(self).expect("same generators");
        }
        out
    }

    /// Parses the polynomial text grammar: signed terms, each a `*`-product
    /// of rationals (`p/q` or integers) and generators with optional
    /// positive `^` exponents. Whitespace is ignored.
    pub fn parse(gens: &Generators, text: &str) -> Result<Self> {
        let tokens = tokenize(text)?;
        Parser {
            gens,
            tokens: &tokens,
            pos: 0,
        }
        .polynomial()
    }
}

fn names(gens: &[Generator]) -> String {
    gens.iter().map(|g| g.name()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for GradedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| (b.degree(&self.gens), *b).cmp(&(a.degree(&self.gens), *a)));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.render(&self.gens))?;
            } else {
                write!(f, "{abs}*{}", m.render(&self.gens))?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            '+' => out.push(Token::Plus),
            '-' => out.push(Token::Minus),
            '*' => out.push(Token::Star),
            '/' => out.push(Token::Slash),
            '^' => out.push(Token::Caret),
            '0'..='9' => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..=i].iter().collect();
                out.push(Token::Num(s.parse().expect("digits")));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i + 1 < chars.len() && (chars[i + 1].is_ascii_alphanumeric() || chars[i + 1] == '_') {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..=i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
        i += 1;
    }
    if out.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    Ok(out)
}

struct Parser<'a> {
    gens: &'a Generators,
    tokens: &'a [Token],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos);
        self.pos += 1;
        t
    }

    fn polynomial(&mut self) -> Result<GradedPolynomial> {
        let mut acc = GradedPolynomial::zero(self.gens);
        let mut first = true;
        while self.peek().is_some() {
            let negative = match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    false
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                Some(t) => return Err(Error::Parse(format!("expected `+` or `-`, found {t:?}"))),
                None => unreachable!(),
            };
            let term = self.term()?;
            acc = acc.add(&if negative { term.neg() } else { term })?;
            first = false;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<GradedPolynomial> {
        let mut acc = self.factor()?;
        while let Some(Token::Star) = self.peek() {
            self.pos += 1;
            acc = acc.mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<u32> {
        match self.next() {
            Some(Token::Num(n)) => u32::try_from(n.clone())
                .ok()
                .filter(|&e| e > 0)
                .ok_or_else(|| Error::Parse(format!("exponent `{n}` must be a positive integer"))),
            t => Err(Error::Parse(format!("expected exponent, found {t:?}"))),
        }
    }

    fn factor(&mut self) -> Result<GradedPolynomial> {
        match self.next().cloned() {
            Some(Token::Num(n)) => {
                let mut q = Rational::from_integer(n);
                if let Some(Token::Slash) = self.peek() {
                    self.pos += 1;
                    match self.next() {
                        Some(Token::Num(d)) if !d.is_zero() => q /= Rational::from_integer(d.clone()),
                        t => return Err(Error::Parse(format!("expected nonzero denominator, found {t:?}"))),
                    }
                }
                Ok(GradedPolynomial::constant(self.gens, q))
            }
            Some(Token::Ident(name)) => {
                let g = GradedPolynomial::generator(self.gens, &name)?;
                if let Some(Token::Caret) = self.peek() {
                    self.pos += 1;
                    let e = self.exponent()?;
                    Ok(g.pow(e))
                } else {
                    Ok(g)
                }
            }
            t => Err(Error::Parse(format!("expected a number or generator, found {t:?}"))),
        }
    }
}
