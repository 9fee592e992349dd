//! Cohomology rings of the Wolf spaces and the classes living in them.
//!
//! Every ring is presented by evenly graded generators and homogeneous
//! relations. The σ-classes of the Grassmannians come from a three-term
//! recursion ([`sigma`]) with an independent binomial closed form
//! ([`sigma_closed`]).

pub mod classes;
pub mod divisibility;
pub mod presentations;
pub mod sigma;
pub mod space;

pub use classes::{homogeneous_euler, quaternionic_class, EulerChoice, EulerClassSpec};
pub use divisibility::{divides_linear_bruteforce, divides_linear_criterion};
pub use presentations::presentation;
pub use sigma::{sigma, sigma_closed, sigma_series_check, SigmaVariant};
pub use space::SpaceId;
