//! Exact graded-commutative polynomial arithmetic over the rationals and
//! per-degree linear algebra for homogeneous quotient rings.
//!
//! Quotients are never handled through Gröbner bases. For a degree `k` the
//! engine enumerates every monomial of that degree, spans all degree-`k`
//! multiples of the relations, and row-reduces exactly. The non-pivot
//! monomials form the basis of the quotient in degree `k`.

pub mod generator;
pub mod linalg;
pub mod poly;
pub mod presentation;
pub mod rational;

pub use generator::{Generator, Parity};
pub use linalg::{Echelon, Matrix};
pub use poly::{GradedPolynomial, Homogeneity, Monomial};
pub use presentation::{DegreeBasis, RingPresentation};
pub use rational::Rational;
